#include "qgraph/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qgraph/characteristic.hpp"
#include "qgraph/cospec.hpp"
#include "qgraph/enumerate.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/output.hpp"
#include "qgraph/printed_tables.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int edges = 0;
  int min_edges = 1;
  int max_edges = 0;
  std::string class_filter;
  std::string mode = "set";
  double length = 1.0;
  int count = 10;
  double lambda_max = 0.0;
  std::string format;
  std::string out_path;
  std::string cache_dir;
  std::vector<std::string> graph6;
  std::string input_path;
  int workers = 0;
  bool expect_none = false;
  unsigned seed = 0;  // accepted for interface stability; nothing is random
};

ClassKey parse_class(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const int g = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const int d = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {g, d};
  } catch (const std::exception&) {
    throw UsageError("--class expects g,delta (got \"" + text + "\")");
  }
}

Format resolve_format(const std::string& requested, Format fallback) {
  if (requested.empty()) return fallback;
  try {
    return parse_format(requested);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_edges(int g, const char* flag) {
  if (g < 1 || g > kDefaultMaxEdges) {
    throw UsageError(std::string(flag) + " must lie in [1, " + std::to_string(kDefaultMaxEdges) +
                     "]");
  }
}

std::vector<Graph> read_graphs(const RunConfig& cfg) {
  std::vector<Graph> graphs;
  for (const auto& text : cfg.graph6) {
    try {
      graphs.push_back(parse_graph6(text));
    } catch (const std::exception& e) {
      throw UsageError("--graph6 \"" + text + "\": " + e.what());
    }
  }
  if (!cfg.input_path.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.input_path != "-") {
      file.open(cfg.input_path);
      if (!file) throw UsageError("cannot open " + cfg.input_path);
      in = &file;
    }
    std::string line;
    for (int number = 1; std::getline(*in, line); ++number) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const std::exception& e) {
        throw UsageError(cfg.input_path + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }
  if (graphs.empty()) throw UsageError("no graph given (use --graph6 or --input)");
  return graphs;
}

// FNV-1a; stable across platforms, unlike std::hash.
std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

template <typename Compute>
std::string cached(const RunConfig& cfg, const std::string& key, Compute compute) {
  if (cfg.cache_dir.empty()) return compute();
  namespace fs = std::filesystem;
  const fs::path path = fs::path(cfg.cache_dir) / (digest(key) + ".out");
  if (std::ifstream in{path}) {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::string result = compute();
  fs::create_directories(cfg.cache_dir);
  std::ofstream(path) << result;
  return result;
}

int emit(const RunConfig& cfg, const std::string& data, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << data;
    return kExitOk;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << data;
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  std::optional<ClassKey> filter;
  if (!cfg.class_filter.empty()) filter = parse_class(cfg.class_filter);
  int g = cfg.edges;
  if (g == 0 && filter) g = filter->edges;
  check_edges(g, "--edges");
  if (filter && filter->edges != g) throw UsageError("--class g must equal --edges");
  const Format format = resolve_format(cfg.format, Format::Graph6);
  auto graphs = enumerate_connected(g, {kDefaultMaxEdges, cfg.workers});
  if (filter) {
    std::erase_if(graphs, [&](const Graph& x) { return class_key(x) != *filter; });
  }
  return emit(cfg, render_graphs(graphs, format), out);
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out) {
  const Format format = resolve_format(cfg.format, Format::Text);
  const auto graphs = read_graphs(cfg);
  return emit(cfg, render_charpoly(graphs, format), out);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Format format = resolve_format(cfg.format, Format::Text);
  if (!(cfg.length > 0)) throw UsageError("--length must be positive");
  if (cfg.count < 1) throw UsageError("--count must be at least 1");
  const auto graphs = read_graphs(cfg);
  if (graphs.size() != 1) throw UsageError("spectrum takes exactly one graph");
  const SpectrumReport report = cfg.lambda_max > 0
                                    ? eigenvalues_below(graphs[0], cfg.length, cfg.lambda_max)
                                    : eigenvalues(graphs[0], cfg.length, cfg.count);
  return emit(cfg, render_spectrum(to_graph6(graphs[0]), report, format), out);
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.length > 0)) throw UsageError("--length must be positive");
  const double lambda_max = cfg.lambda_max > 0 ? cfg.lambda_max : 200.0;
  const auto graphs = read_graphs(cfg);
  std::string text;
  for (const auto& g : graphs) {
    const SpectrumReport report = eigenvalues_below(g, cfg.length, lambda_max);
    ZeroSearchOptions zopt;
    zopt.lambda_max = lambda_max;
    const auto zeros = characteristic_zeros(g, cfg.length, zopt);
    text += "graph6 " + to_graph6(g) + "\n";
    std::size_t j = 0;
    for (const auto& e : report.eigenvalues) {
      if (e.lambda <= 0 || e.lambda >= lambda_max) continue;
      text += "phi0 " + format_decimal(e.lambda) + " x" + std::to_string(e.multiplicity);
      if (j < zeros.size()) {
        text += " det " + format_decimal(zeros[j].lambda) + " nullity " +
                std::to_string(zeros[j].kernel_dimension);
        ++j;
      }
      text += "\n";
    }
    for (; j < zeros.size(); ++j) text += "det-only " + format_decimal(zeros[j].lambda) + "\n";
  }
  return emit(cfg, text, out);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  int hi = cfg.max_edges;
  int lo = cfg.min_edges;
  if (cfg.edges != 0) lo = hi = cfg.edges;
  if (hi == 0) throw UsageError("scan needs --max-edges or --edges");
  check_edges(lo, "--min-edges");
  check_edges(hi, "--max-edges");
  if (lo > hi) throw UsageError("--min-edges exceeds --max-edges");
  CompareMode mode;
  try {
    mode = parse_mode(cfg.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Format format = resolve_format(cfg.format, Format::Json);
  std::size_t pairs = 0;
  const std::string key = "scan|" + std::to_string(lo) + "|" + std::to_string(hi) + "|" +
                          cfg.mode + "|" + to_string(format);
  // First line of the payload is the pair count, so cache hits keep the exit code.
  std::string data = cached(cfg, key, [&] {
    const CospectralReport report = scan(lo, hi, {mode, kDefaultMaxEdges, cfg.workers});
    return std::to_string(report.pairs.size()) + "\n" + render_scan(report, format);
  });
  const auto newline = data.find('\n');
  pairs = std::stoul(data.substr(0, newline));
  data.erase(0, newline + 1);
  emit(cfg, data, out);
  err << "scan " << lo << ".." << hi << " mode=" << cfg.mode << ": " << pairs
      << " cospectral pair(s)\n";
  if (cfg.expect_none && pairs > 0) return kExitPairsFound;
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Format format = resolve_format(cfg.format, Format::Json);
  const std::string key =
      "verify-paper|" + std::string(kPrintedTablesVersion) + "|" + to_string(format);
  const std::string data = cached(cfg, key, [&] {
    return render_table_check(verify_printed_tables({kDefaultMaxEdges, cfg.workers}), format);
  });
  return emit(cfg, data, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet quantum graph spectra: enumeration, characteristic polynomials, "
               "cospectrality scans"};
  app.name("qgraph");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json|csv|graph6|dot|text");
    sub->add_option("--out", cfg.out_path, "write data to this file instead of stdout");
    sub->add_option("--workers", cfg.workers, "worker threads (default: $QGRAPH_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "ignored; results are deterministic");
  };
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--graph6", cfg.graph6, "graph in graph6 (repeatable)");
    sub->add_option("--input", cfg.input_path, "file of graph6 lines ('-' for stdin)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list connected graphs with g edges");
  enumerate->add_option("--edges", cfg.edges, "number of edges g");
  enumerate->add_option("--class", cfg.class_filter, "keep only class g,delta");
  add_common(enumerate);

  auto* charpoly = app.add_subcommand("charpoly", "print psi(z) for each input graph");
  add_graph_input(charpoly);
  add_common(charpoly);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues from psi and the sine factor");
  add_graph_input(spectrum);
  spectrum->add_option("--length", cfg.length, "edge length l");
  spectrum->add_option("--count", cfg.count, "number of eigenvalues N (with multiplicity)");
  spectrum->add_option("--lambda-max", cfg.lambda_max, "all eigenvalues below this bound instead");
  add_common(spectrum);

  auto* crosscheck =
      app.add_subcommand("crosscheck", "compare eigenvalues with zeros of the characteristic matrix");
  add_graph_input(crosscheck);
  crosscheck->add_option("--length", cfg.length, "edge length l");
  crosscheck->add_option("--lambda-max", cfg.lambda_max, "upper bound (default 200)");
  add_common(crosscheck);

  auto* scan_cmd = app.add_subcommand("scan", "search for cospectral pairs");
  scan_cmd->add_option("--min-edges", cfg.min_edges, "smallest g (default 1)");
  scan_cmd->add_option("--max-edges", cfg.max_edges, "largest g");
  scan_cmd->add_option("--edges", cfg.edges, "scan a single g");
  scan_cmd->add_option("--mode", cfg.mode, "set|multiset");
  scan_cmd->add_flag("--expect-none", cfg.expect_none, "exit 3 if any pair is found");
  scan_cmd->add_option("--cache-dir", cfg.cache_dir, "reuse results stored here");
  add_common(scan_cmd);

  auto* verify = app.add_subcommand("verify-paper", "diff the printed psi tables against computed psi");
  verify->add_option("--cache-dir", cfg.cache_dir, "reuse results stored here");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*charpoly) return cmd_charpoly(cfg, out);
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*crosscheck) return cmd_crosscheck(cfg, out);
    if (*scan_cmd) return cmd_scan(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const InternalInconsistency& e) {
    err << "qgraph: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qgraph: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace qgraph
