#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "diamondplot/dataset.hpp"

namespace diamondplot {

/// What to do with a row whose selected fields are not finite numbers.
enum class RowPolicy {
  Strict,   // fail with ParseError naming the row
  Lenient,  // skip the row and report it
};

struct CsvOptions {
  RowPolicy policy = RowPolicy::Strict;
  std::string source = "<memory>";
};

struct RejectedRow {
  std::size_t row = 0;   // 1-based data row, header excluded
  std::size_t line = 0;  // 1-based physical line where the record starts
  std::string reason;
};

struct CsvResult {
  DataSet data;
  std::vector<RejectedRow> rejected;
};

struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// RFC 4180 subset: comma separated, optional double-quoted fields with ""
/// escapes, LF or CRLF line ends, a UTF-8 BOM is skipped. Blank lines are
/// ignored. Throws ParseError(line) on malformed quoting.
std::vector<CsvRecord> read_csv_records(std::string_view bytes);

/// Selects two columns by header name.
///
/// Throws ColumnNotFound for a missing name, ParseError for malformed input,
/// ragged rows or (strict mode) a non-numeric value, EmptyData when no valid
/// row remains.
CsvResult parse_csv(std::string_view bytes, std::string_view col1,
                    std::string_view col2, const CsvOptions& options = {});

/// Reads a file and parses it; the path becomes the dataset's source tag.
/// Throws IoError naming the file when it cannot be read.
CsvResult load_csv(const std::filesystem::path& path, std::string_view col1,
                   std::string_view col2, RowPolicy policy = RowPolicy::Strict);

/// Header of the two labels followed by one row per point. Numbers use the
/// shortest representation that parses back to the same double.
std::string write_csv(const DataSet& data);

}  // namespace diamondplot
