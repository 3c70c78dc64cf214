#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extremis/classify.hpp"
#include "extremis/constructions.hpp"
#include "extremis/counting.hpp"
#include "extremis/graph6.hpp"
#include "extremis/report.hpp"
#include "extremis/transform.hpp"
#include "extremis/verify.hpp"

namespace extremis::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kMalformedInput = 3,
  kInvalidArgument = 4,
  kInternal = 5,
};

/// Environment variable holding the default worker count for `verify`.
inline constexpr const char* kJobsEnv = "EXTREMIS_JOBS";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int jobs_from_env() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return default_jobs();
}

inline std::string vertex_list(VertexSet s, char sep) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out.push_back(sep);
    out += std::to_string(v);
  }
  return out;
}

struct Options {
  // construct
  std::string kind;
  std::optional<int> n;
  std::optional<int> alpha;
  std::vector<int> sizes;
  // count
  bool per_vertex = false;
  bool enumerate = false;
  // transform
  std::string transform_mode;
  std::optional<int> anchor;
  bool emit_steps = false;
  // verify
  std::string check;
  std::string input;
  std::optional<int> jobs;
  std::string format;
  bool timing = false;
  bool skip_malformed = false;
  // table
  int max_n = 0;
};

inline int run_construct(const Options& o, std::ostream& out) {
  if (o.kind == "clique-star") {
    if (o.sizes.empty()) throw UsageError("--kind clique-star requires --sizes");
    if (o.n || o.alpha) throw UsageError("--kind clique-star takes its order from --sizes; drop --n/--alpha");
    out << encode_graph6(build_clique_star({o.sizes})) << '\n';
    return kOk;
  }
  if (!o.sizes.empty()) throw UsageError("--sizes is only valid with --kind clique-star");
  if (!o.n || !o.alpha) throw UsageError("--kind " + o.kind + " requires --n and --alpha");
  if (o.kind == "G") {
    out << encode_graph6(build_G(*o.n, *o.alpha)) << '\n';
  } else if (o.kind == "F") {
    out << encode_graph6(build_F(*o.n, *o.alpha)) << '\n';
  } else {
    for (const Graph& g : enumerate_family(*o.n, *o.alpha)) out << encode_graph6(g) << '\n';
  }
  return kOk;
}

inline int run_count(const Options& o, std::istream& in, std::ostream& out) {
  Graph6Reader reader(in);
  while (auto g = reader.next()) {
    const auto r = count_mis(*g, o.per_vertex);
    out << g->order() << ' ' << r.alpha << ' ' << to_string(r.num_mis);
    if (r.per_vertex)
      for (Count c : *r.per_vertex) out << ' ' << to_string(c);
    out << '\n';
    if (o.enumerate)
      for (VertexSet s : enumerate_mis(*g)) out << "  " << vertex_list(s, ' ') << '\n';
    out.flush();
  }
  return kOk;
}

inline int run_classify(const Options& o, std::istream& in, std::ostream& out) {
  Graph6Reader reader(in);
  while (auto g = reader.next()) {
    const int n = o.n.value_or(g->order());
    const int alpha = o.alpha ? *o.alpha : independence_number(*g);
    const auto d = classify_extremal(*g, n, alpha);
    const std::string x0 = d.special_cutvertices.empty() ? "-" : vertex_list(d.special_cutvertices, ',');
    out << encode_graph6(*g) << ' ' << n << ' ' << alpha << ' ' << to_string(d.kind) << " x0=" << x0
        << " in_family=" << (d.in_family ? "true" : "false") << '\n';
    out.flush();
  }
  return kOk;
}

inline int run_transform(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph6Reader reader(in);
  std::size_t index = 0;
  while (auto g = reader.next()) {
    ++index;
    const auto before = count_mis(*g);
    if (o.transform_mode == "twin-saturate") {
      const auto run = moon_moser_saturate(*g, o.anchor);
      err << "# graph " << index << " anchor " << run.anchor << " N=" << vertex_list(run.closed_nbhd, ',') << '\n';
      err << "step\tx\ty\talpha\tnum_mis\n";
      err << 0 << '\t' << run.anchor << "\t-\t" << before.alpha << '\t' << to_string(before.num_mis) << '\n';
      for (std::size_t i = 0; i < run.steps.size(); ++i) {
        const auto& s = run.steps[i];
        const auto r = count_mis(s.after);
        err << i + 1 << '\t' << s.x << '\t' << s.y << '\t' << r.alpha << '\t' << to_string(r.num_mis) << '\n';
        if (o.emit_steps && i + 1 < run.steps.size()) out << encode_graph6(s.after) << '\n';
      }
      out << encode_graph6(run.result) << '\n';
    } else {
      const Vertex x = o.anchor ? *o.anchor : best_anchor(*g);
      if (x < 0 || x >= g->order()) throw std::invalid_argument("anchor out of range");
      const Graph reduced = reduce_edges(*g, g->closed_neighborhood(x));
      const auto after = count_mis(reduced);
      err << "# graph " << index << " anchor " << x << " N=" << vertex_list(g->closed_neighborhood(x), ',') << '\n';
      err << "stage\tedges\talpha\tnum_mis\n";
      err << "input\t" << g->edge_count() << '\t' << before.alpha << '\t' << to_string(before.num_mis) << '\n';
      err << "reduced\t" << reduced.edge_count() << '\t' << after.alpha << '\t' << to_string(after.num_mis) << '\n';
      out << encode_graph6(reduced) << '\n';
    }
    out.flush();
  }
  return kOk;
}

inline std::vector<Graph> read_catalog(const std::string& path, bool skip_malformed, std::istream& stdin_stream,
                                       std::ostream& err) {
  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    in = &file;
  }
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  std::size_t skipped = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(decode_graph6(line));
    } catch (const std::exception& e) {
      if (!skip_malformed) throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
      ++skipped;
    }
  }
  if (skipped > 0) err << "skipped " << skipped << " malformed line(s)\n";
  return graphs;
}

inline int run_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!o.n) throw UsageError("verify requires --n");
  const int n = *o.n;
  const int jobs = o.jobs.value_or(jobs_from_env());
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<Graph> catalog;
  GraphSource source = GraphSource::generator();
  if (!o.input.empty()) {
    catalog = read_catalog(o.input, o.skip_malformed, in, err);
    source = GraphSource::from(catalog);
  } else if (n > kMaxGeneratedOrder) {
    throw UsageError("orders above " + std::to_string(kMaxGeneratedOrder) + " need --input with a graph6 catalog");
  }

  if (o.check == "lemma3") {
    if (o.alpha) throw UsageError("lemma3 covers every alpha; drop --alpha");
    if (o.format == "csv") throw UsageError("lemma3 reports are JSON only");
    const auto result = check_lemma3(n, source, jobs);
    out << to_json(result).dump(2) << '\n';
    for (const auto& v : result.violations) err << "violation: " << v.graph6 << " (" << v.reason << ")\n";
    return result.pass() ? kOk : kCheckFailed;
  }

  const Theorem theorem = o.check == "theorem1" ? Theorem::Disconnected : Theorem::Connected;
  const auto reports = verify_theorem(theorem, n, o.alpha, source, jobs);
  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (!r.pass) {
      err << theorem_name(theorem) << " fails at (n,alpha)=(" << r.n << ',' << r.alpha << ")";
      if (r.graphs_examined == 0) err << ": empty stratum";
      for (const auto& f : r.extremal_forms) err << ' ' << f.graph6();
      err << '\n';
    }
  }
  if (o.format == "csv")
    out << to_csv(report_rows(reports));
  else
    out << to_json(theorem, n, reports, o.timing).dump(2) << '\n';
  return pass ? kOk : kCheckFailed;
}

}  // namespace detail

/// Runs one command line. Output goes to `out`, diagnostics and logs to `err`.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal graphs for the number of maximum independent sets"};
  app.require_subcommand(1);
  detail::Options o;

  auto* construct = app.add_subcommand("construct", "Print an extremal construction as graph6");
  construct->add_option("--kind", o.kind, "G, F, family or clique-star")
      ->required()
      ->check(CLI::IsMember({"G", "F", "family", "clique-star"}));
  construct->add_option("--n", o.n, "Order");
  construct->add_option("--alpha", o.alpha, "Independence number");
  construct->add_option("--sizes", o.sizes, "Clique orders for clique-star")->delimiter(',');

  auto* count = app.add_subcommand("count", "Count maximum independent sets of graph6 input");
  count->add_flag("--per-vertex", o.per_vertex, "Append the count through each vertex");
  count->add_flag("--enumerate", o.enumerate, "List every maximum independent set");

  auto* classify = app.add_subcommand("classify", "Classify graph6 input against the extremal families");
  classify->add_option("--n", o.n, "Expected order");
  classify->add_option("--alpha", o.alpha, "Expected independence number");

  auto* transform = app.add_subcommand("transform", "Apply the twin saturation or edge reduction");
  transform->add_option("mode", o.transform_mode, "twin-saturate or reduce-edges")
      ->required()
      ->check(CLI::IsMember({"twin-saturate", "reduce-edges"}));
  transform->add_option("--anchor", o.anchor, "Anchor vertex (default: the best anchor)");
  transform->add_flag("--steps", o.emit_steps, "Also print every intermediate graph");

  auto* verify = app.add_subcommand("verify", "Exhaustively check the bounds on all graphs of one order");
  verify->add_option("check", o.check, "theorem1, theorem2 or lemma3")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma3"}));
  verify->add_option("--n", o.n, "Order")->required();
  verify->add_option("--alpha", o.alpha, "Restrict to one independence number");
  verify->add_option("--input", o.input, "graph6 catalog file ('-' for stdin) instead of the generator");
  verify->add_option("--jobs", o.jobs, std::string("Worker threads (default: $") + kJobsEnv + " or all cores)");
  verify->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timing", o.timing, "Include elapsed_ms in JSON reports");
  verify->add_flag("--skip-malformed", o.skip_malformed, "Skip malformed catalog lines instead of aborting");

  auto* table = app.add_subcommand("table", "Tabulate g(n,alpha) and f(n,alpha)");
  table->add_option("--max-n", o.max_n, "Largest order")->required();
  table->add_option("--format", o.format, "csv or json")->required()->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return detail::run_construct(o, out);
    if (*count) return detail::run_count(o, in, out);
    if (*classify) return detail::run_classify(o, in, out);
    if (*transform) return detail::run_transform(o, in, out, err);
    if (*verify) return detail::run_verify(o, in, out, err);
    if (*table) {
      out << emit_table(o.max_n, o.format);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Graph6Error& e) {
    err << "error: malformed graph6: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace extremis::cli
