#include "sgkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgkit/bipartite.hpp"
#include "sgkit/graph_io.hpp"
#include "sgkit/multipartite.hpp"
#include "sgkit/oracle.hpp"
#include "sgkit/reduction.hpp"
#include "sgkit/report.hpp"

namespace sgkit {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

// Explicit certificates list C(k,2) paths; beyond this many vertices we refuse.
constexpr Count kCertificateVertexLimit = 2000;

struct CommonFlags {
  bool json = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "Emit a JSON report");
  cmd->add_flag("--timing", f.timing, "Report wall-clock time");
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i] + 1);
  }
  return s;
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "set: " << join_vertices(c.set) << '\n';
  for (const auto& [pair, path] : c.chosen) out << "path: " << join_vertices(path.vertices) << '\n';
}

void check_certificate(const Graph& g, const Certificate& c) {
  const auto check = verify_certificate(g, c);
  if (!check.valid()) throw std::logic_error("generated certificate rejected: " + check.describe());
}

void finish(const SolveReport& report, const CommonFlags& flags, Clock::time_point start,
            std::ostream& out, const std::string& human) {
  if (flags.json) {
    SolveReport r = report;
    if (flags.timing) r.meta["wall_seconds"] = seconds_since(start);
    out << emit_json(r);
    return;
  }
  out << human;
  if (flags.timing) out << "time: " << std::fixed << std::setprecision(6) << seconds_since(start) << " s\n";
}

// --- bipartite ---------------------------------------------------------------

struct BipartiteArgs {
  CommonFlags flags;
  Count n = 0;
  Count m = 0;
  bool certificate = false;
  bool classify = false;
};

int cmd_bipartite(const BipartiteArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto sol = sg_bipartite(a.n, a.m);
  SolveReport report;
  report.method = a.classify ? Method::classification : Method::scan;
  report.input = {{"command", "bipartite"}, {"n", a.n}, {"m", a.m}};
  report.k = sol.k;
  report.selection = std::vector<long long>{sol.s1, sol.s2};

  std::ostringstream human;
  human << "sg(K_{" << a.n << ',' << a.m << "}) = " << sol.k << '\n';
  human << "selection: s1 = " << sol.s1 << " of " << a.n << ", s2 = " << sol.s2 << " of " << a.m << '\n';

  bool agrees = true;
  if (a.classify) {
    for (Count k = 1; k <= sol.k + 1; ++k) {
      if (classify_sg_eq_k(a.n, a.m, k) != (k == sol.k)) agrees = false;
    }
    report.meta["classification_agrees"] = agrees;
    human << "classification: " << (agrees ? "agrees" : "DISAGREES") << '\n';
  }
  if (a.certificate) {
    if (a.n + a.m > kCertificateVertexLimit) {
      throw ResourceLimitError("explicit certificates are limited to " +
                               std::to_string(kCertificateVertexLimit) + " vertices");
    }
    const Partition partition({static_cast<int>(a.n), static_cast<int>(a.m)});
    const auto cert = bipartite_certificate(sol);
    check_certificate(build_complete_multipartite(partition), cert);
    report.certificate = cert;
    human << "certificate: verified (vertices 1.." << partition.largest()
          << " form the larger side)\n";
    print_certificate(human, cert);
  }
  finish(report, a.flags, start, out, human.str());
  if (!agrees) {
    err << "error: classification does not single out the computed value\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- multipartite --------------------------------------------------------------

struct MultipartiteArgs {
  CommonFlags flags;
  std::vector<std::string> parts;
  bool bounds = false;
  bool certificate = false;
};

int cmd_multipartite(const MultipartiteArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::string text;
  for (const auto& p : a.parts) text += p + ' ';
  const Partition partition = Partition::parse(text);

  SolveReport report;
  report.method = Method::multipartite;
  report.input = {{"command", "multipartite"}, {"parts", partition.parts()}};
  report.meta["partition"] = partition.to_string();
  std::ostringstream human;
  human << "partition: " << partition.to_string() << '\n';

  std::optional<ReportBounds> bounds;
  if (a.bounds) {
    bounds = ReportBounds{lp_lower_bound(partition).value, whole_parts_upper_bound(partition).value};
    report.bounds = bounds;
  }

  MultipartiteResult result;
  try {
    result = sg_multipartite(partition);
  } catch (const ResourceLimitError& e) {
    if (!bounds) throw;
    // Bounds are still worth reporting when the exact search is out of reach.
    report.method = Method::bounds;
    report.k = std::nullopt;
    human << "bounds: " << bounds->lp_lower << " <= sg <= " << bounds->whole_parts_upper << '\n';
    finish(report, a.flags, start, out, human.str());
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }

  report.k = result.k;
  report.selection = std::vector<long long>(result.selection.counts.begin(), result.selection.counts.end());
  report.meta["configurations"] = result.configurations;
  human << "sg = " << result.k << '\n';
  human << "selection:";
  for (std::size_t i = 0; i < partition.parts().size(); ++i) {
    human << ' ' << result.selection.counts[i] << '/' << partition.parts()[i];
  }
  human << '\n';
  if (bounds) {
    human << "bounds: " << bounds->lp_lower << " <= " << result.k << " <= " << bounds->whole_parts_upper
          << '\n';
    if (bounds->lp_lower > result.k || result.k > bounds->whole_parts_upper) {
      throw std::logic_error("exact value outside its bounds");
    }
  }
  if (a.certificate) {
    if (partition.vertex_count() > kCertificateVertexLimit) {
      throw ResourceLimitError("explicit certificates are limited to " +
                               std::to_string(kCertificateVertexLimit) + " vertices");
    }
    const auto cert = selection_certificate(partition, result.selection);
    check_certificate(build_complete_multipartite(partition), cert);
    report.certificate = cert;
    human << "certificate: verified\n";
    print_certificate(human, cert);
  }
  finish(report, a.flags, start, out, human.str());
  return kExitOk;
}

// --- exact ---------------------------------------------------------------------

struct ExactArgs {
  CommonFlags flags;
  std::string file;
  bool certificate = false;
};

int cmd_exact(const ExactArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto parsed = read_graph_file(a.file);
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  const Graph& g = parsed.graph;
  const auto limits = OracleLimits::from_environment();
  if (g.vertex_count() > limits.max_vertices) {
    throw ResourceLimitError("graph has " + std::to_string(g.vertex_count()) +
                             " vertices; the exact search is limited to " +
                             std::to_string(limits.max_vertices));
  }
  const auto result = strong_geodetic_number_exact(g, limits);
  check_certificate(g, result.certificate);

  SolveReport report;
  report.method = Method::oracle;
  report.input = {{"command", "exact"},
                  {"file", a.file},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()}};
  report.k = result.value;
  report.certificate = result.certificate;
  report.meta["sets_checked"] = result.sets_checked;

  std::ostringstream human;
  human << "sg = " << result.value << '\n';
  if (a.certificate) {
    human << "certificate: verified\n";
    print_certificate(human, result.certificate);
  } else {
    human << "set: " << join_vertices(result.certificate.set) << '\n';
  }
  finish(report, a.flags, start, out, human.str());
  return kExitOk;
}

// --- table / levelset / conjecture ----------------------------------------------

struct TableArgs {
  Count max = 15;
  bool csv = false;
  bool json = false;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.max < 1 || a.max > 1000) throw std::invalid_argument("table size must be in 1..1000");
  // rows[m-1][n-1] = sg(K_{n,m}); n runs across, m down.
  std::vector<std::vector<Count>> rows(static_cast<std::size_t>(a.max));
  for (Count m = 1; m <= a.max; ++m) {
    for (Count n = 1; n <= a.max; ++n) rows[m - 1].push_back(sg_bipartite(n, m).k);
  }
  if (a.json) {
    out << json{{"max", a.max}, {"rows", rows}}.dump() << '\n';
    return kExitOk;
  }
  if (a.csv) {
    out << "m/n";
    for (Count n = 1; n <= a.max; ++n) out << ',' << n;
    out << '\n';
    for (Count m = 1; m <= a.max; ++m) {
      out << m;
      for (Count v : rows[m - 1]) out << ',' << v;
      out << '\n';
    }
    return kExitOk;
  }
  Count widest = a.max;
  for (const auto& row : rows) widest = std::max(widest, *std::max_element(row.begin(), row.end()));
  const int width = std::max<int>(3, static_cast<int>(std::to_string(widest).size())) + 1;
  out << std::setw(width) << "m\\n" << " |";
  for (Count n = 1; n <= a.max; ++n) out << std::setw(width) << n;
  out << '\n' << std::string(static_cast<std::size_t>(width + 2 + width * a.max), '-') << '\n';
  for (Count m = 1; m <= a.max; ++m) {
    out << std::setw(width) << m << " |";
    for (Count v : rows[m - 1]) out << std::setw(width) << v;
    out << '\n';
  }
  return kExitOk;
}

struct LevelSetArgs {
  Count k = 12;
  bool grid = false;
  bool json = false;
};

int cmd_levelset(const LevelSetArgs& a, std::ostream& out) {
  if (a.k < 2 || a.k > 200) throw std::invalid_argument("level must be in 2..200");
  const auto pairs = level_set(a.k);
  if (a.json) {
    out << json{{"k", a.k}, {"count", pairs.size()}, {"pairs", pairs}}.dump() << '\n';
    return kExitOk;
  }
  if (!a.grid) {
    for (const auto& [n, m] : pairs) out << n << ' ' << m << '\n';
    return kExitOk;
  }
  // Same orientation as the table: n across, m down; '#' marks a member.
  Count max_n = 0;
  Count max_m = 0;
  for (const auto& [n, m] : pairs) {
    max_n = std::max(max_n, n);
    max_m = std::max(max_m, m);
  }
  std::vector<std::string> canvas(static_cast<std::size_t>(max_m), std::string(static_cast<std::size_t>(max_n), '.'));
  for (const auto& [n, m] : pairs) canvas[m - 1][n - 1] = '#';
  const int width = static_cast<int>(std::to_string(max_m).size());
  for (Count m = 1; m <= max_m; ++m) out << std::setw(width) << m << ' ' << canvas[m - 1] << '\n';
  return kExitOk;
}

struct ConjectureArgs {
  Count n = 10;
  unsigned threads = 1;
  bool json = false;
};

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  if (a.threads < 1) throw std::invalid_argument("--threads must be at least 1");
  const auto scan = conjecture_scan(a.n, a.threads);
  if (a.json) {
    out << json{{"n", scan.n},
                {"max_e", scan.max_e},
                {"argmax_m", scan.argmax_m},
                {"rootless_m", scan.rootless_m},
                {"samples", scan.samples}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "n = " << scan.n << "  max e = " << std::fixed << std::setprecision(3) << scan.max_e
      << "  argmax m = " << scan.argmax_m << "  (" << scan.samples << " values of m, "
      << scan.rootless_m << " without a real root)\n";
  return kExitOk;
}

// --- reduce ------------------------------------------------------------------------

struct ReduceArgs {
  std::string file;
  int k = 0;
  std::string output;
  bool verify = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const auto parsed = read_graph_file(a.file);
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  const Graph& g = parsed.graph;
  const auto coloring = two_coloring(g);
  const auto inst = reduce(g, coloring, a.k);
  auto comments = inst.role_comments();

  bool holds = true;
  if (a.verify) {
    const int n = g.vertex_count();
    const auto report = verify_equivalence(g, coloring, n, OracleLimits::from_environment());
    holds = report.holds();
    comments.push_back("verify: domination number " + std::to_string(report.domination_number) +
                       ", target strong geodetic number " + std::to_string(report.target_sg));
    comments.push_back("verify: at k = " + std::to_string(a.k) + ": dominating set " +
                       (report.domination_number <= a.k ? "exists" : "does not exist") +
                       ", strong geodetic set of size " + std::to_string(inst.target_budget) + ' ' +
                       (report.target_sg <= inst.target_budget ? "exists" : "does not exist"));
    std::string verdict = "verify: equivalence for k = 0.." + std::to_string(n) + ' ';
    if (holds) {
      verdict += "holds";
    } else {
      verdict += "FAILS at k =";
      for (int k : report.disagreeing_budgets) verdict += ' ' + std::to_string(k);
    }
    comments.push_back(verdict);
  }

  const std::string text = serialize_graph(inst.target, comments);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + a.output + "'");
    file << text;
    if (!file.flush()) throw std::runtime_error("write to '" + a.output + "' failed");
  }
  if (!holds) {
    err << "error: reduction equivalence failed for this source graph\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong geodetic number solver for complete bipartite and multipartite graphs", "sgkit"};
  app.require_subcommand(1);

  BipartiteArgs bip;
  auto* bipartite = app.add_subcommand("bipartite", "Exact sg(K_{n,m})");
  bipartite->add_option("n", bip.n, "First side")->required()->check(CLI::Range(Count{1}, Count{1'000'000'000}));
  bipartite->add_option("m", bip.m, "Second side")->required()->check(CLI::Range(Count{1}, Count{1'000'000'000}));
  bipartite->add_flag("--certificate", bip.certificate, "Print an explicit verified certificate");
  bipartite->add_flag("--classify", bip.classify, "Cross-check with the closed-form classification");
  add_common(bipartite, bip.flags);

  MultipartiteArgs mul;
  auto* multipartite = app.add_subcommand("multipartite", "Exact sg of a complete multipartite graph");
  multipartite->add_option("parts", mul.parts, "Part sizes: '3 3 2' or '1^2,3^4'")->required();
  multipartite->add_flag("--bounds", mul.bounds, "Also print the LP lower and whole-parts upper bounds");
  multipartite->add_flag("--certificate", mul.certificate, "Print an explicit verified certificate");
  add_common(multipartite, mul.flags);

  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Exhaustive sg of a small graph from an edge-list file");
  exact->add_option("file", ex.file, "Graph file ('p edge n e' format)")->required();
  exact->add_flag("--certificate", ex.certificate, "Print every chosen geodesic");
  add_common(exact, ex.flags);

  TableArgs tab;
  auto* table = app.add_subcommand("table", "Grid of sg(K_{n,m}) for 1 <= n, m <= max");
  table->add_option("max", tab.max, "Grid size")->required();
  table->add_flag("--csv", tab.csv, "Comma-separated output");
  table->add_flag("--json", tab.json, "JSON output");

  LevelSetArgs lev;
  auto* levelset = app.add_subcommand("levelset", "All (n, m) with sg(K_{n,m}) = k");
  levelset->add_option("k", lev.k, "Level")->required();
  levelset->add_flag("--grid", lev.grid, "ASCII grid instead of a pair list");
  levelset->add_flag("--json", lev.json, "JSON output");

  ConjectureArgs con;
  auto* conjecture = app.add_subcommand("conjecture", "max e(m, n) over n <= m <= C(n,2)");
  conjecture->add_option("n", con.n, "Smaller side")->required();
  conjecture->add_option("--threads", con.threads, "Worker threads");
  conjecture->add_flag("--json", con.json, "JSON output");

  ReduceArgs red;
  auto* reduce_cmd = app.add_subcommand("reduce", "Map a bipartite dominating set instance to a strong geodetic one");
  reduce_cmd->add_option("file", red.file, "Bipartite source graph file")->required();
  reduce_cmd->add_option("k", red.k, "Dominating set budget")->required()->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--output,-o", red.output, "Write the target graph here instead of stdout");
  reduce_cmd->add_flag("--verify", red.verify, "Check the equivalence exhaustively (small graphs)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bipartite) return cmd_bipartite(bip, out, err);
    if (*multipartite) return cmd_multipartite(mul, out, err);
    if (*exact) return cmd_exact(ex, out, err);
    if (*table) return cmd_table(tab, out);
    if (*levelset) return cmd_levelset(lev, out);
    if (*conjecture) return cmd_conjecture(con, out);
    if (*reduce_cmd) return cmd_reduce(red, out, err);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const GraphParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sgkit
