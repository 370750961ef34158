// inducib: command-line front end.
//
// Exit codes: 0 success, 1 a verification FAILed, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "inducib/landscape.hpp"
#include "inducib/oracle.hpp"
#include "inducib/parallel.hpp"
#include "inducib/report.hpp"
#include "inducib/simplex.hpp"
#include "inducib/suites.hpp"

using namespace inducib;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  unsigned precision = 64;
  std::string out;
  std::string format = "json";
};

int emit(RunReport& rep, const Globals& g, std::chrono::steady_clock::time_point start) {
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!g.out.empty()) {
    std::ofstream os(g.out);
    if (!os) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    os << (g.format == "csv" ? to_csv(rep) : to_json(rep));
  }
  return rep.pass() ? 0 : kExitFail;
}

void print_checks(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    for (const auto& [k, v] : c.params) std::cout << ' ' << k << '=' << v;
    if (!c.pass) std::cout << "\n     violated: " << c.statement << "\n     witness: " << c.witness;
    std::cout << "\n";
  }
}

std::string command_line(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced-copy counts and inducibility of complete multipartite patterns"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--precision", g.precision, "Float precision in decimal digits")
      ->check(CLI::Range(50u, 10000u))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write the run report to this file");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string pattern;
  std::string partition;
  int k = 0;
  int n = 0;
  std::optional<int> max_parts;
  std::optional<int> kcap;
  int trials = 200;
  std::string tol = "1e-12";
  std::string suite;

  auto* c_ind = app.add_subcommand("inducibility", "i(F), m, kappa_F and the m bounds");
  c_ind->add_option("F", pattern, "Pattern a1,a2,...")->required();

  auto* c_cf = app.add_subcommand("cliquefree", "i_{k+1}(F) among K_{k+1}-free hosts");
  c_cf->add_option("F", pattern)->required();
  c_cf->add_option("k", k)->required()->check(CLI::PositiveNumber);

  auto* c_count = app.add_subcommand("count", "Exact I(F, K_{n_1..n_k})");
  c_count->add_option("F", pattern)->required();
  c_count->add_option("partition", partition, "Host part sizes n1,n2,...")->required();

  auto* c_search = app.add_subcommand("search", "Best complete multipartite host on n vertices");
  c_search->add_option("F", pattern)->required();
  c_search->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c_search->add_option("--max-parts", max_parts)->check(CLI::PositiveNumber);

  auto* c_ex = app.add_subcommand("exhaustive", "Best graph on n <= 8 vertices");
  c_ex->add_option("F", pattern)->required();
  c_ex->add_option("--n", n)->required()->check(CLI::Range(1, kMaxExhaustiveVertices));

  auto* c_opt = app.add_subcommand("optimize", "Seeded symmetrization ascent certification");
  c_opt->add_option("F", pattern)->required();
  c_opt->add_option("--kcap", kcap)->check(CLI::PositiveNumber);
  c_opt->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
  c_opt->add_option("--tol", tol, "Improvement tolerance of one move")->capture_default_str();

  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  c_verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

  auto* c_report = app.add_subcommand("report", "Run every suite and write the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (c_report->parsed() && g.out.empty()) {
    std::cerr << "error: report needs --out <path>\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  set_float_precision(g.precision);
  RunReport rep;
  rep.command = command_line(argc, argv);
  rep.seed = g.seed;
  rep.precision = g.precision;
  const int threads = default_thread_count();

  try {
    if (c_ind->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      const ExactRat value = inducibility(f);
      const auto land = build_landscape(f.r(), f.ell());
      std::cout << "i = " << to_string(value) << ", m = " << land.m << "\n";
      std::cout << "i ~ " << to_decimal(value, 20) << "\n";
      std::cout << "kappa = " << to_string(kappa(f)) << "\n";
      std::cout << "m bounds: " << to_decimal(land.bounds.lower, 6) << " <= m <= " << to_decimal(land.bounds.upper, 6)
                << "\n";
      CheckRecord c;
      c.name = "inducibility";
      c.statement = "i(F) = kappa_F f(m)";
      c.params = {{"F", f.literal()}};
      c.values = {exact_value("i", value), exact_value("m", ExactInt(land.m)), exact_value("kappa", kappa(f)),
                  exact_value("m_lower", land.bounds.lower), float_value("m_upper", land.bounds.upper, 20)};
      rep.checks.push_back(std::move(c));
    } else if (c_cf->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      const ExactRat value = inducibility_clique_free(f, k);
      std::cout << "i_" << (k + 1) << " = " << to_string(value) << "\n";
      CheckRecord c;
      c.name = "clique-free-inducibility";
      c.statement = "i_{k+1}(F) = kappa_F f(min(k, m))";
      c.params = {{"F", f.literal()}, {"k", std::to_string(k)}};
      c.values = {exact_value("i_k+1", value)};
      rep.checks.push_back(std::move(c));
    } else if (c_count->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      const auto host = MultipartitePartition::parse(partition);
      const ExactInt value = induced_count(f, host);
      std::cout << "I = " << to_string(value) << "\n";
      CheckRecord c;
      c.name = "count";
      c.statement = "I(F, G) for a complete multipartite host";
      c.params = {{"F", f.literal()}, {"partition", host.literal()}};
      c.values = {exact_value("I", value)};
      rep.checks.push_back(std::move(c));
    } else if (c_search->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      SearchOptions opts;
      opts.max_parts = max_parts;
      opts.threads = threads;
      const auto res = best_partition(f, n, opts);
      std::cout << "max " << to_string(res.max) << " at";
      for (const auto& p : res.argmax) std::cout << " (" << p.literal() << ")";
      std::cout << "\n";
      rep.checks.push_back(record(f, n, max_parts, res));
    } else if (c_ex->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      const auto res = best_graph_exhaustive(f, n);
      std::cout << "max " << to_string(res.max) << " (" << res.graphs_counted << " labelled graphs counted)\n";
      rep.checks.push_back(record(res, n));
    } else if (c_opt->parsed()) {
      const auto f = PatternSpec::parse(pattern);
      CertifyOptions opts;
      opts.k_cap = kcap;
      opts.trials = trials;
      opts.seed = g.seed;
      opts.step_tol = BigFloat(tol);
      opts.threads = threads;
      const auto res = certify_opt(f, opts);
      std::cout << (res.pass ? "PASS" : "FAIL") << " " << f.label() << ": target k = " << res.target_k
                << ", value " << to_string(res.target_value) << ", " << res.failures << "/" << res.trials.size()
                << " failures, " << res.plateau_count << " plateau terminations, " << res.plateau_escapes
                << " plateau escapes\n";
      rep.checks.push_back(record(res));
      if (!res.pass) std::cout << "     witness: " << rep.checks.back().witness << "\n";
    } else if (c_verify->parsed() || c_report->parsed()) {
      SuiteOptions so;
      so.seed = g.seed;
      so.threads = threads;
      rep.checks = run_suite(c_verify->parsed() ? suite : "all", so);
      print_checks(rep.checks);
      std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
    }
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return emit(rep, g, start);
}
