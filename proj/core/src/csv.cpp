#include "diamondplot/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "diamondplot/error.hpp"
#include "format.hpp"

namespace diamondplot {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

bool is_blank(const CsvRecord& r) {
  return r.fields.size() == 1 && r.fields.front().empty();
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_finite(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::size_t find_column(const CsvRecord& header, std::string_view name) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    if (header.fields[i] != name) continue;
    if (found) {
      parse_error(header.line,
                  "column name '" + std::string(name) + "' appears twice");
    }
    found = i;
  }
  if (!found) {
    std::string available;
    for (const auto& f : header.fields) {
      available += available.empty() ? "" : ", ";
      available += f;
    }
    throw Error(ErrorCode::ColumnNotFound, "column '" + std::string(name) +
                                               "' not found (available: " +
                                               available + ")");
  }
  return *found;
}

std::string quote_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<CsvRecord> read_csv_records(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord current{1, {}};
  std::string field;
  std::size_t line = 1;
  bool in_quotes = false;
  bool after_quote = false;  // just closed a quoted field
  bool field_started = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    after_quote = false;
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    if (!is_blank(current)) records.push_back(std::move(current));
    current = CsvRecord{line, {}};
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < bytes.size() && bytes[i + 1] == '\n') break;
        parse_error(line, "bare carriage return");
      case '\n':
        ++line;
        end_record();
        break;
      case '"':
        if (field_started || after_quote) {
          parse_error(line, "unexpected quote inside a field");
        }
        in_quotes = true;
        field_started = true;
        break;
      default:
        if (after_quote) parse_error(line, "text after closing quote");
        field += c;
        field_started = true;
        break;
    }
  }
  if (in_quotes) parse_error(current.line, "unterminated quoted field");
  if (field_started || after_quote || !current.fields.empty()) end_record();
  return records;
}

CsvResult parse_csv(std::string_view bytes, std::string_view col1,
                    std::string_view col2, const CsvOptions& options) {
  const std::vector<CsvRecord> records = read_csv_records(bytes);
  if (records.empty()) {
    throw Error(ErrorCode::EmptyData, "CSV input has no header row");
  }
  const CsvRecord& header = records.front();
  const std::size_t i1 = find_column(header, col1);
  const std::size_t i2 = find_column(header, col2);

  CsvResult result;
  result.data.label1 = std::string(col1);
  result.data.label2 = std::string(col2);
  result.data.source = options.source;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      parse_error(rec.line, "expected " + std::to_string(header.fields.size()) +
                                " fields, found " +
                                std::to_string(rec.fields.size()));
    }
    const auto v1 = parse_finite(rec.fields[i1]);
    const auto v2 = parse_finite(rec.fields[i2]);
    if (v1 && v2) {
      result.data.values.push_back({*v1, *v2});
      continue;
    }
    const std::size_t bad = v1 ? i2 : i1;
    std::string reason = "row " + std::to_string(r) + " (line " +
                         std::to_string(rec.line) + "): value '" +
                         rec.fields[bad] + "' in column '" +
                         header.fields[bad] + "' is not a finite number";
    if (options.policy == RowPolicy::Strict) {
      throw Error(ErrorCode::ParseError, reason);
    }
    result.rejected.push_back({r, rec.line, std::move(reason)});
  }
  if (result.data.values.empty()) {
    throw Error(ErrorCode::EmptyData,
                "no valid rows for columns '" + std::string(col1) + "' and '" +
                    std::string(col2) + "'");
  }
  return result;
}

CsvResult load_csv(const std::filesystem::path& path, std::string_view col1,
                   std::string_view col2, RowPolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  }
  return parse_csv(buffer.str(), col1, col2, {policy, path.string()});
}

std::string write_csv(const DataSet& data) {
  std::string out = quote_field(data.label1) + "," + quote_field(data.label2) + "\n";
  for (const Point2& p : data.values) {
    out += detail::format_shortest(p.a1);
    out += ',';
    out += detail::format_shortest(p.a2);
    out += '\n';
  }
  return out;
}

}  // namespace diamondplot
