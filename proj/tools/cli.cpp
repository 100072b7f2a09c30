#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "diamondplot/bundle.hpp"
#include "diamondplot/csv.hpp"
#include "diamondplot/datasets.hpp"
#include "diamondplot/error.hpp"
#include "diamondplot/random.hpp"
#include "diamondplot/scene.hpp"
#include "diamondplot/stats.hpp"
#include "diamondplot/svg.hpp"

namespace diamondplot::cli {

namespace {

constexpr double kDefaultWidth = 640.0;
constexpr double kScatterHeightRatio = 396.0 / 640.0;
constexpr std::size_t kDefaultSamples = 300;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CsvSource {
  std::string input;
  std::string col1;
  std::string col2;
  bool lenient = false;
};

struct LayoutFlags {
  std::string mode = "diamond";
  std::optional<double> width;
  std::optional<double> height;
  int ticks = 5;
  bool no_grid = false;
  std::string title1;
  std::string title2;
};

struct DemoSource {
  std::string dataset;
  std::optional<unsigned long long> seed;
  std::size_t n = kDefaultSamples;
};

void add_csv_flags(CLI::App* cmd, CsvSource& src, bool required) {
  auto* in = cmd->add_option("--input", src.input, "CSV file with a header row");
  auto* c1 = cmd->add_option("--col1", src.col1, "column name of variable 1");
  auto* c2 = cmd->add_option("--col2", src.col2, "column name of variable 2");
  if (required) {
    in->required();
    c1->required();
    c2->required();
  }
  cmd->add_flag("--lenient", src.lenient,
                "skip rows with non-numeric values instead of failing");
}

void add_layout_flags(CLI::App* cmd, LayoutFlags& f, bool with_mode) {
  if (with_mode) {
    cmd->add_option("--mode", f.mode, "diamond, scatter or scatter-swapped")
        ->check(CLI::IsMember({"diamond", "scatter", "scatter-swapped"}));
    cmd->add_option("--width", f.width, "output width")->check(CLI::PositiveNumber);
    cmd->add_option("--height", f.height, "output height")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--ticks", f.ticks, "target tick count per axis")
      ->check(CLI::Range(2, 100));
  cmd->add_flag("--no-grid", f.no_grid, "omit gridlines");
  cmd->add_option("--title1", f.title1, "title for variable 1");
  cmd->add_option("--title2", f.title2, "title for variable 2");
}

void add_demo_flags(CLI::App* cmd, DemoSource& d, bool required) {
  auto* ds = cmd->add_option("--dataset", d.dataset, "anscombe1..4 or fig5a..fig5e");
  if (required) ds->required();
  cmd->add_option("--seed", d.seed, "seed for fig5 panels");
  cmd->add_option("--n", d.n, "sample count for fig5 panels")->check(CLI::PositiveNumber);
}

unsigned long long resolve_seed(const std::optional<unsigned long long>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  unsigned long long value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(kSeedEnvVar) + " must be an unsigned integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

struct Loaded {
  DataSet data;
  AxisScale scale = AxisScale::Independent;
};

Loaded load_csv_source(const CsvSource& src, std::ostream& err) {
  CsvResult r = load_csv(src.input, src.col1, src.col2,
                         src.lenient ? RowPolicy::Lenient : RowPolicy::Strict);
  for (const RejectedRow& row : r.rejected) {
    err << "diamondplot: warning: skipped " << row.reason << '\n';
  }
  return {std::move(r.data), AxisScale::Independent};
}

// Normal panels share one scale across both variables so that the
// difference in spread stays visible after normalization.
Loaded load_demo_source(const DemoSource& d) {
  for (std::string_view name : builtin_names()) {
    if (name == d.dataset) return {builtin(name), AxisScale::Independent};
  }
  std::string valid;
  for (std::string_view name : builtin_names()) valid += std::string(name) + ", ";
  for (const NormalPanel& p : normal_panels()) valid += std::string(p.name) + ", ";
  if (std::none_of(normal_panels().begin(), normal_panels().end(),
                   [&](const NormalPanel& p) { return p.name == d.dataset; })) {
    valid.resize(valid.size() - 2);
    throw Error(ErrorCode::UnknownDataset,
                "unknown dataset '" + d.dataset + "' (valid: " + valid + ")");
  }
  const NormalPanel& panel = normal_panel(d.dataset);
  DataSet data = sample_bivariate_normal(panel_spec(panel, d.n, resolve_seed(d.seed)));
  data.source = "generated:" + std::string(panel.name);
  return {std::move(data), AxisScale::Shared};
}

PlotConfig make_config(const LayoutFlags& f, AxisScale scale) {
  const Orientation o = parse_orientation(f.mode);
  PlotConfig cfg = PlotConfig::defaults(o);
  if (f.width || f.height) {
    const double w = f.width.value_or(kDefaultWidth);
    const double h = f.height.value_or(
        o == Orientation::Diamond ? w : std::round(w * kScatterHeightRatio));
    cfg.viewport = {w, h};
  }
  cfg.tick_target = f.ticks;
  cfg.grid = !f.no_grid;
  cfg.title1 = f.title1;
  cfg.title2 = f.title2;
  cfg.axis_scale = scale;
  return cfg;
}

void emit(const std::string& bytes, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  file << bytes;
  file.close();
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

std::string render_plot(const Loaded& src, const LayoutFlags& flags) {
  const Scene scene = build_scene(src.data, make_config(flags, src.scale));
  return render(scene).bytes;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diamond plots and conventional scatter plots of bivariate data",
               "diamondplot"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "diamondplot 0.1.0");

  CsvSource plot_src;
  LayoutFlags plot_layout;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "render a CSV file as SVG");
  add_csv_flags(plot, plot_src, true);
  add_layout_flags(plot, plot_layout, true);
  plot->add_option("--out", plot_out, "output SVG path (default: stdout)");

  DemoSource demo_src;
  LayoutFlags demo_layout;
  std::string demo_out;
  auto* demo = app.add_subcommand("demo", "render a builtin dataset as SVG");
  add_demo_flags(demo, demo_src, true);
  add_layout_flags(demo, demo_layout, true);
  demo->add_option("--out", demo_out, "output SVG path (default: stdout)");

  CsvSource stats_src;
  double stats_delta = 1.0;
  auto* stats = app.add_subcommand("stats", "print summary statistics as JSON");
  add_csv_flags(stats, stats_src, true);
  stats->add_option("--delta", stats_delta, "Deming error-variance ratio")
      ->check(CLI::PositiveNumber);

  CsvSource bundle_src;
  DemoSource bundle_demo;
  LayoutFlags bundle_layout;
  std::string bundle_out;
  auto* bundle = app.add_subcommand("bundle", "write a scene bundle for the viewer");
  add_csv_flags(bundle, bundle_src, false);
  add_demo_flags(bundle, bundle_demo, false);
  add_layout_flags(bundle, bundle_layout, false);
  bundle->add_option("--out", bundle_out, "output JSON path (default: stdout)");

  std::vector<const char*> argv;
  argv.push_back("diamondplot");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "diamondplot: error: " << e.what() << '\n'
        << "Run with --help for more information.\n";
    return kExitUsage;
  }

  try {
    if (plot->parsed()) {
      emit(render_plot(load_csv_source(plot_src, err), plot_layout), plot_out, out);
    } else if (demo->parsed()) {
      emit(render_plot(load_demo_source(demo_src), demo_layout), demo_out, out);
    } else if (stats->parsed()) {
      const Loaded src = load_csv_source(stats_src, err);
      out << stats_json(summary(src.data, stats_delta)) << '\n';
    } else if (bundle->parsed()) {
      const bool from_csv = !bundle_src.input.empty();
      const bool from_demo = !bundle_demo.dataset.empty();
      if (from_csv == from_demo) {
        throw UsageError("bundle needs either --input/--col1/--col2 or --dataset");
      }
      if (from_csv && (bundle_src.col1.empty() || bundle_src.col2.empty())) {
        throw UsageError("bundle --input requires --col1 and --col2");
      }
      const Loaded src =
          from_csv ? load_csv_source(bundle_src, err) : load_demo_source(bundle_demo);
      emit(serialize(make_bundle(src.data, make_config(bundle_layout, src.scale))),
           bundle_out, out);
    }
  } catch (const UsageError& e) {
    err << "diamondplot: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "diamondplot: error: " << e.what() << '\n';
    return is_data_error(e.code()) ? kExitData : kExitUsage;
  }
  return kExitOk;
}

}  // namespace diamondplot::cli
