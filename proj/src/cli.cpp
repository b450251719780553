#include "ohg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ohg/examples.hpp"
#include "ohg/harness.hpp"
#include "ohg/serialize.hpp"
#include "ohg/spectral.hpp"
#include "ohg/verdict.hpp"

namespace ohg {

std::vector<double> parse_lambda_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad lambda value '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad lambda value '" + item + "'");
    if (!(value >= 0.0)) throw std::invalid_argument("lambda values must be nonnegative");
    grid.push_back(value);
  }
  if (grid.empty()) throw std::invalid_argument("empty lambda grid");
  return grid;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string format = "text";
  std::string lambda_grid = "0.5,1,1.5";
  int trials = 100;
  std::uint64_t seed = 0;
  int max_n = 8;
  int max_m = 8;
  bool graph_only = false;
  Tolerances tol;
  std::string failures_dir = "verify-failures";
  // random
  int n = 6;
  int m = 4;
  int size_min = 1;
  int size_max = 0;
  // examples
  bool list = false;
  bool run = false;
};

OrientedHypergraph load(const std::string& path) {
  if (path.empty()) throw UsageError("no input file given");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ohg(buf.str());
  } catch (const ModelError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::filesystem::path examples_dir() {
  if (const char* env = std::getenv("OHG_EXAMPLES_DIR"); env != nullptr && *env != '\0') return env;
  return "examples";
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  const auto s = spectrum(load(c.input), c.tol.eps_eq);
  if (c.format == "json") {
    out << to_json(s).dump(2) << '\n';
  } else {
    out << render_text(s);
  }
  return kExitOk;
}

int cmd_report(const Config& c, std::ostream& out) {
  const auto g = load(c.input);
  const auto report = verify_report(g, parse_lambda_grid(c.lambda_grid), c.tol);
  if (c.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return report.all_hold() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Config& c, std::ostream& out) {
  HarnessOptions opts;
  opts.trials = c.trials;
  opts.seed = c.seed;
  opts.max_n = c.max_n;
  opts.max_m = c.max_m;
  opts.graph_only = c.graph_only;
  opts.lambda_grid = parse_lambda_grid(c.lambda_grid);
  opts.tol = c.tol;
  try {
    opts.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto summary = run_harness(opts);
  const auto written = write_failures(summary, c.failures_dir);

  if (c.format == "json") {
    Json j;
    j["trials"] = summary.trials;
    j["seed"] = c.seed;
    Json checks = Json::array();
    for (const auto& t : summary.tallies) {
      checks.push_back({{"check", t.check},
                        {"holds", t.holds},
                        {"not_applicable", t.not_applicable},
                        {"skipped", t.skipped},
                        {"fails", t.fails}});
    }
    j["checks"] = checks;
    j["graph_instances"] = summary.graph_instances;
    j["graph_partition_equality"] = summary.graph_partition_equality;
    j["lower_confidence"] = summary.lower_confidence;
    j["feasible_probes"] = summary.feasible_probes;
    Json files = Json::array();
    for (const auto& p : written) files.push_back(p.string());
    j["failures"] = files;
    out << j.dump(2) << '\n';
  } else {
    char buf[160];
    out << "trials: " << summary.trials << "  seed: " << c.seed << '\n';
    std::snprintf(buf, sizeof buf, "%-18s %8s %8s %8s %8s\n", "check", "holds", "n/a", "skipped", "fails");
    out << buf;
    for (const auto& t : summary.tallies) {
      std::snprintf(buf, sizeof buf, "%-18s %8d %8d %8d %8d\n", t.check.c_str(), t.holds, t.not_applicable,
                    t.skipped, t.fails);
      out << buf;
    }
    out << "graph partition equality: " << summary.graph_partition_equality << '/' << summary.graph_instances
        << '\n';
    out << "feasible SDP probes: " << summary.feasible_probes
        << "  lower-confidence chi_v: " << summary.lower_confidence << '\n';
    out << "failures: " << summary.failures.size() << '\n';
    for (const auto& p : written) out << "  wrote " << p.string() << '\n';
  }
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_random(const Config& c, std::ostream& out) {
  const int size_max = c.size_max == 0 ? c.n : c.size_max;
  try {
    if (c.graph_only) {
      out << serialize_ohg(random_graph(c.n, c.m, c.seed));
    } else {
      out << serialize_ohg(random_hypergraph(RandomSpec{c.n, c.m, c.size_min, size_max, c.seed}));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_examples(const Config& c, std::ostream& out) {
  const auto dir = examples_dir();
  const auto& all = builtin_examples();
  if (!c.run) {
    for (const auto& e : all) out << e.name << "  " << (dir / e.file).string() << "  " << e.description << '\n';
    return kExitOk;
  }
  std::filesystem::create_directories(dir);
  const auto grid = parse_lambda_grid(c.lambda_grid);
  bool all_ok = true;
  Json doc = Json::array();
  for (const auto& e : all) {
    const auto path = dir / e.file;
    {
      std::ofstream f(path);
      if (!f) throw UsageError("cannot write '" + path.string() + "'");
      f << e.text;
    }
    auto with_one = grid;
    if (std::find(with_one.begin(), with_one.end(), 1.0) == with_one.end()) with_one.push_back(1.0);
    const auto report = verify_report(load(path.string()), with_one, c.tol);
    const auto goldens = compare_goldens(e, report);
    const bool matched = std::all_of(goldens.begin(), goldens.end(), [](const auto& g) { return g.match; });
    all_ok = all_ok && matched && report.all_hold();

    if (c.format == "json") {
      Json gj = Json::array();
      for (const auto& g : goldens) {
        gj.push_back({{"quantity", g.quantity},
                      {"expected", round15(g.expected)},
                      {"actual", std::isnan(g.actual) ? Json(nullptr) : Json(round15(g.actual))},
                      {"tolerance", g.tolerance},
                      {"match", g.match}});
      }
      doc.push_back({{"name", e.name},
                     {"file", path.string()},
                     {"goldens", gj},
                     {"goldens_matched", matched},
                     {"report", to_json(report)}});
    } else {
      out << "== " << e.name << " (" << path.string() << "): " << e.description << '\n';
      out << render_text(report);
      for (const auto& g : goldens) {
        out << "  golden " << g.quantity << ": expected " << g.expected << ", got " << g.actual
            << (g.match ? "  ok" : "  MISMATCH") << '\n';
      }
      out << (matched ? "  all goldens matched\n" : "  GOLDEN MISMATCH\n");
    }
  }
  if (c.format == "json") out << Json{{"examples", doc}, {"all_matched", all_ok}}.dump(2) << '\n';
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Oriented hypergraph spectra, invariants and spectral bound checks", "ohg"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--eps-eq", c.tol.eps_eq, "Eigenvalue equality tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--eps-sdp", c.tol.eps_sdp, "Gram feasibility tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--eps-k", c.tol.eps_k, "Vector chromatic bisection width")->check(CLI::PositiveNumber);
    sub->add_option("--sdp-iter-cap", c.tol.sdp_iter_cap, "Projection iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--partition-cap", c.tol.partition_cap, "Largest n for partition numbers")
        ->check(CLI::Range(1, kPartitionHardCap));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("path,--input", c.input, "OHG file");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the normalized Laplacian spectrum");
  add_input(spectrum_cmd);
  add_format(spectrum_cmd);
  spectrum_cmd->add_option("--eps-eq", c.tol.eps_eq, "Eigenvalue equality tolerance")->check(CLI::PositiveNumber);

  auto* report_cmd = app.add_subcommand("report", "Evaluate every bound on one hypergraph");
  add_input(report_cmd);
  add_format(report_cmd);
  add_tolerances(report_cmd);
  report_cmd->add_option("--lambda-grid", c.lambda_grid, "Comma-separated lambda values");

  auto* verify_cmd = app.add_subcommand("verify", "Check every bound on seeded random instances");
  add_format(verify_cmd);
  add_tolerances(verify_cmd);
  verify_cmd->add_option("--lambda-grid", c.lambda_grid, "Comma-separated lambda values");
  verify_cmd->add_option("--trials", c.trials, "Number of instances")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", c.seed, "Base seed");
  verify_cmd->add_option("--max-n", c.max_n, "Largest vertex count");
  verify_cmd->add_option("--max-m", c.max_m, "Largest hyperedge count");
  verify_cmd->add_flag("--graph-only", c.graph_only, "Generate graph encodings only");
  verify_cmd->add_option("--failures-dir", c.failures_dir, "Directory for failing instances");

  auto* random_cmd = app.add_subcommand("random", "Print a seeded random hypergraph in OHG format");
  random_cmd->add_option("--n", c.n, "Vertex count");
  random_cmd->add_option("--m", c.m, "Hyperedge count");
  random_cmd->add_option("--size-min", c.size_min, "Smallest hyperedge size");
  random_cmd->add_option("--size-max", c.size_max, "Largest hyperedge size (default n)");
  random_cmd->add_option("--seed", c.seed, "Seed");
  random_cmd->add_flag("--graph-only", c.graph_only, "Generate a graph encoding");

  auto* examples_cmd = app.add_subcommand("examples", "List or run the built-in instances");
  examples_cmd->add_flag("--list", c.list, "List names and file paths");
  examples_cmd->add_flag("--run", c.run, "Write the files and compare every golden value");
  add_format(examples_cmd);
  add_tolerances(examples_cmd);
  examples_cmd->add_option("--lambda-grid", c.lambda_grid, "Comma-separated lambda values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ohg: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    c.tol.validate();
    if (spectrum_cmd->parsed()) return cmd_spectrum(c, out);
    if (report_cmd->parsed()) return cmd_report(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (random_cmd->parsed()) return cmd_random(c, out);
    return cmd_examples(c, out);
  } catch (const UsageError& e) {
    err << "ohg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "ohg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "ohg: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ohg
