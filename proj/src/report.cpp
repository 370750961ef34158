#include "inducib/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#ifndef INDUCIB_VERSION
#define INDUCIB_VERSION "0.0.0"
#endif

namespace inducib {

namespace {

using Json = nlohmann::ordered_json;

std::string join_parts(const std::vector<MultipartitePartition>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ' ';
    out += "(" + p.literal() + ")";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

std::string tool_version() { return INDUCIB_VERSION; }

ValueField exact_value(std::string name, const ExactRat& q) {
  return {std::move(name), to_string(q), to_decimal(q, 20)};
}

ValueField exact_value(std::string name, const ExactInt& z) {
  return {std::move(name), to_string(z), to_string(z)};
}

ValueField float_value(std::string name, const BigFloat& x, int digits) {
  return {std::move(name), "", to_decimal(x, digits)};
}

ValueField text_value(std::string name, std::string text) { return {std::move(name), "", std::move(text)}; }

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::string to_json(const RunReport& report, bool include_wall_time) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = report.tool_version;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["precision"] = report.precision;
  j["status"] = status(report.pass());
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["statement"] = c.statement;
    jc["status"] = status(c.pass);
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    jc["params"] = std::move(params);
    Json values = Json::array();
    for (const auto& v : c.values) {
      Json jv;
      jv["name"] = v.name;
      if (!v.exact.empty()) jv["exact"] = v.exact;
      jv["decimal"] = v.decimal;
      values.push_back(std::move(jv));
    }
    jc["values"] = std::move(values);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  if (include_wall_time) j["wall_time_s"] = report.wall_time_s;
  return j.dump(2) + "\n";
}

std::string to_csv(const RunReport& report) {
  std::ostringstream os;
  os << "check,status,params,value,exact,decimal,witness\n";
  for (const auto& c : report.checks) {
    std::string params;
    for (const auto& [k, v] : c.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + v;
    }
    auto row = [&](const std::string& value, const std::string& exact, const std::string& decimal) {
      os << csv_field(c.name) << ',' << status(c.pass) << ',' << csv_field(params) << ',' << csv_field(value) << ','
         << csv_field(exact) << ',' << csv_field(decimal) << ',' << csv_field(c.witness) << '\n';
    };
    if (c.values.empty()) row("", "", "");
    for (const auto& v : c.values) row(v.name, v.exact, v.decimal);
  }
  return os.str();
}

CheckRecord record(const RatioSweepReport& rep) {
  CheckRecord c;
  c.name = "ratio-chain";
  c.statement =
      "omega_t/mu_t <= omega_a/mu_a < phi_st/psi_st for x != y on the grid and all b >= t >= s >= a > C(b-a,2); "
      "auxiliary bounds 2^(a-2) mu_a >= (2^a-2) xy (x+y)^(a-2) (equality iff a in {2,3}) and "
      "2((x+y)/2)^(s+t-2) > x^(s-1)y^(t-1) + x^(t-1)y^(s-1)";
  c.params = {{"grid", std::to_string(rep.grid.num_lo) + ".." + std::to_string(rep.grid.num_hi) + " / " +
                           std::to_string(rep.grid.denom)},
              {"b_max", std::to_string(rep.grid.b_max)}};
  std::string eq;
  for (const auto& [a, t] : rep.equality_at) eq += (eq.empty() ? "" : " ") + std::string("(") + std::to_string(a) +
                                                   "," + std::to_string(t) + ")";
  std::string aux;
  for (int a : rep.aux_a_equal) aux += (aux.empty() ? "" : " ") + std::to_string(a);
  c.values = {exact_value("grid_points", ExactInt(rep.points)),
              exact_value("tuples", ExactInt(rep.tuples)),
              exact_value("checks", ExactInt(rep.checks)),
              exact_value("violations", ExactInt(rep.violations)),
              exact_value("first_inequality_equalities", ExactInt(rep.equality_hits)),
              text_value("equality_at_(a,t)", eq),
              exact_value("aux_a_violations", ExactInt(rep.aux_a_violations)),
              text_value("aux_a_equal_for", aux),
              exact_value("aux_st_violations", ExactInt(rep.aux_st_violations)),
              text_value("g_unique_max_at_half", rep.g_half_unique_max ? "true" : "false")};
  c.pass = rep.pass;
  if (!rep.pass) {
    if (!rep.witnesses.empty())
      c.witness = rep.witnesses.front().to_string();
    else if (!rep.aux_a_equality_exact)
      c.witness = "auxiliary bound equality set is {" + aux + "}, expected {2,3}";
    else
      c.witness = "auxiliary inequality or g(1/2) maximum failed";
  }
  return c;
}

CheckRecord record(const ProfileCheck& pc, bool small_band) {
  CheckRecord c;
  c.name = small_band ? "apex-profile-h" : "apex-profile-H";
  c.statement = small_band ? "h(q) = (q)_{r-1}(2r - ell + 2(m-q)(ell-r)) has its unique maximum at q = m-1"
                           : "H(q) = (m-q)(q)_{r-1} has its unique maximum at q = m-1";
  c.params = {{"r", std::to_string(pc.r)}, {"ell", std::to_string(pc.ell)}, {"m", std::to_string(pc.m)}};
  std::string vals;
  for (const auto& v : pc.values) vals += (vals.empty() ? "" : " ") + to_string(v);
  c.values = {text_value("values_q0_to_m", vals), exact_value("argmax", ExactInt(pc.argmax))};
  c.pass = pc.pass;
  if (!pc.pass)
    c.witness = "argmax q=" + std::to_string(pc.argmax) + (pc.unique ? "" : " (tied)") + ", expected " +
                std::to_string(pc.m - 1);
  return c;
}

CheckRecord record(const PatternSpec& f, const EdgeBudget& eb, bool strict) {
  CheckRecord c;
  c.name = strict ? "edge-budget-strict" : "edge-budget-necessary";
  c.statement = strict ? "C(ell,2) > m * sum C(a_k,2)" : "C(ell,2) >= m * sum C(a_k,2)";
  c.params = {{"F", f.literal()}, {"m", std::to_string(eb.m)}};
  c.values = {exact_value("lhs", eb.lhs), exact_value("rhs", eb.rhs)};
  c.pass = strict ? eb.lhs > eb.rhs : eb.lhs >= eb.rhs;
  if (!c.pass) c.witness = to_string(eb.lhs) + (strict ? " <= " : " < ") + to_string(eb.rhs);
  return c;
}

CheckRecord record(const StabilityReport& rep) {
  CheckRecord c;
  c.name = "stability-premises";
  c.statement =
      "on T_m(n): every pair flip loses copies, and attaching an apex to all but one part beats every other "
      "attachment";
  c.params = {{"F", rep.f.literal()}, {"n", std::to_string(rep.n)}, {"m", std::to_string(rep.m)},
              {"host", rep.host.literal()}};
  c.values.push_back(exact_value("base", rep.base));
  for (const auto& pd : rep.pair_deltas) {
    const std::string kind = pd.pair.kind == PairKind::SamePartAdded ? "same" : "cross";
    c.values.push_back(exact_value("pair_delta_" + kind + "_" + std::to_string(pd.size_i) + "_" +
                                       std::to_string(pd.size_j),
                                   pd.delta));
  }
  for (const auto& ac : rep.apex_counts) {
    std::string parts;
    for (int p : ac.parts) parts += (parts.empty() ? "" : "-") + std::to_string(p);
    c.values.push_back(exact_value("apex_q" + std::to_string(ac.q) + "_{" + parts + "}", ac.count));
  }
  c.values.push_back(exact_value("eps_pairs", rep.eps_pairs));
  c.values.push_back(exact_value("eps_apex", rep.eps_apex));
  c.pass = rep.pass;
  if (!rep.pairs_positive)
    c.witness = "a pair flip does not lose copies";
  else if (!rep.apex_unique)
    c.witness = "apex attachment to m-1 parts is not the unique best";
  return c;
}

CheckRecord record(const GrowthReport& rep) {
  CheckRecord c;
  c.name = "stability-growth";
  c.statement = "pair deltas scale like n^(ell-2) between the two host sizes";
  c.params = {{"F", rep.lower.f.literal()}, {"n_lower", std::to_string(rep.lower.n)},
              {"n_upper", std::to_string(rep.upper.n)}};
  std::ostringstream ratios;
  for (double r : rep.ratios) ratios << (ratios.tellp() > 0 ? " " : "") << r;
  c.values = {text_value("ratios", ratios.str()), text_value("expected", std::to_string(rep.expected)),
              text_value("worst_relative_error", std::to_string(rep.worst_relative))};
  c.pass = rep.pass;
  if (!rep.pass) c.witness = "worst relative error " + std::to_string(rep.worst_relative);
  return c;
}

CheckRecord record(const ShiftSweep& sw) {
  CheckRecord c;
  c.name = "shift-positivity";
  c.statement = "moving one vertex from the largest to the smallest part increases I(F, G)";
  c.params = {{"F", sw.f.literal()}, {"n", std::to_string(sw.n)}, {"cases", std::to_string(sw.cases.size())}};
  ExactInt lo = -1;
  for (const auto& [p, d] : sw.cases) {
    if (lo < 0 || d < lo) lo = d;
    if (d <= 0 && c.witness.empty()) c.witness = "(" + p.literal() + ") difference " + to_string(d);
  }
  c.values = {exact_value("min_difference", lo)};
  c.pass = sw.pass;
  return c;
}

CheckRecord record(const PatternSpec& f, const MultipartitePartition& p, const AdjustmentCheck& adj) {
  CheckRecord c;
  c.name = "adjustment";
  c.statement = "I(F, G) < max(I(F, G shifted), I(F, G merged)) for K_r(t) and a_1 >= a_k + 2";
  c.params = {{"F", f.literal()}, {"partition", p.literal()}};
  c.values = {exact_value("current", adj.current), exact_value("shifted", adj.shifted),
              exact_value("merged", adj.merged)};
  c.pass = adj.pass;
  if (!adj.pass) c.witness = "(" + p.literal() + ") is not improved";
  return c;
}

CheckRecord record(const MeanValueReport& rep) {
  CheckRecord c;
  c.name = "mean-value";
  c.statement = "binomial differences at x = N, y = N + 1 + gap approach their leading coefficients";
  c.params = {{"s", std::to_string(rep.s)}, {"t", std::to_string(rep.t)}, {"gap", to_string(rep.gap)}};
  c.values = {exact_value("single_limit", rep.single_limit), exact_value("pair_limit", rep.pair_limit)};
  for (const auto& row : rep.rows) {
    c.values.push_back(exact_value("single_ratio_N" + std::to_string(row.n), row.single_ratio));
    c.values.push_back(exact_value("pair_ratio_N" + std::to_string(row.n), row.pair_ratio));
  }
  c.values.push_back(text_value("single_error", std::to_string(rep.single_error)));
  c.values.push_back(text_value("pair_error", std::to_string(rep.pair_error)));
  c.pass = rep.pass;
  if (!rep.pass)
    c.witness = "relative errors " + std::to_string(rep.single_error) + ", " + std::to_string(rep.pair_error);
  return c;
}

CheckRecord record(const QuinticReport& rep) {
  CheckRecord c;
  c.name = "quintic-k12-7-7";
  c.statement =
      "largest root alpha of 130x^5+25x^4-90x^3+80x^2-40x+7 is 0.396884; S_{12,7,7} at (alpha, (1-alpha)/2, "
      "(1-alpha)/2) beats the balanced 3-point; K_{4,8,8} is not almost balanced; K_{12,7,7} meets the edge budget "
      "strictly";
  c.params = {{"precision_digits", std::to_string(rep.precision_digits)}, {"bisection_width", "1e-12"}};
  c.values = {float_value("alpha", rep.alpha, 15),
              float_value("residual", rep.residual, 5),
              float_value("S_alpha", rep.s_alpha, 20),
              float_value("S_balanced", rep.s_balanced, 20),
              float_value("ratio", rep.ratio, 20),
              text_value("K_4_8_8_almost_balanced", rep.k488_almost_balanced ? "true" : "false"),
              exact_value("K_12_7_7_lhs", rep.k1277_budget.lhs),
              exact_value("K_12_7_7_rhs", rep.k1277_budget.rhs)};
  c.pass = rep.pass;
  if (!rep.pass) c.witness = "alpha=" + to_decimal(rep.alpha, 12) + " ratio=" + to_decimal(rep.ratio, 12);
  return c;
}

CheckRecord record(const CertifyReport& rep) {
  CheckRecord c;
  c.name = "optimizer-certification";
  c.statement = "every seeded ascent ends at the balanced target point with value kappa_F f(target)";
  c.params = {{"F", rep.f.literal()},
              {"k_cap", rep.k_cap ? std::to_string(*rep.k_cap) : "inf"},
              {"trials", std::to_string(rep.trials.size())}};
  BigFloat worst_d = 0;
  BigFloat worst_v = 0;
  for (const auto& t : rep.trials) {
    worst_d = std::max(worst_d, t.distance);
    worst_v = std::max(worst_v, t.value_error);
    if (!t.pass && c.witness.empty())
      c.witness = "trial " + std::to_string(t.index) + " ended at " + t.final_point;
  }
  c.values = {exact_value("m", ExactInt(rep.m)),
              exact_value("target_k", ExactInt(rep.target_k)),
              exact_value("target_value", rep.target_value),
              float_value("worst_distance", worst_d, 5),
              float_value("worst_value_error", worst_v, 5),
              exact_value("failures", ExactInt(rep.failures)),
              exact_value("plateau_terminations", ExactInt(rep.plateau_count)),
              exact_value("plateau_escapes", ExactInt(rep.plateau_escapes))};
  c.pass = rep.pass;
  return c;
}

CheckRecord record(const PatternSpec& f, int n, std::optional<int> max_parts, const PartitionSearch& res) {
  CheckRecord c;
  c.name = "partition-search";
  c.statement = "maximum of I(F, K_{n_1..n_k}) over partitions of n";
  c.params = {{"F", f.literal()}, {"n", std::to_string(n)},
              {"max_parts", max_parts ? std::to_string(*max_parts) : "inf"}};
  // node counts depend on thread scheduling, so they stay out of the report
  c.values = {exact_value("max", res.max), text_value("argmax", join_parts(res.argmax))};
  return c;
}

CheckRecord record(const GraphSearch& res, int n) {
  CheckRecord c;
  c.name = "graph-search";
  c.statement = "maximum of I(F, G) over all graphs on n vertices";
  c.params = {{"F", res.f.literal()}, {"n", std::to_string(n)}};
  std::string edges;
  for (int u = 0; u < res.witness.n(); ++u)
    for (int v = u + 1; v < res.witness.n(); ++v)
      if (res.witness.has_edge(u, v)) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  c.values = {exact_value("max", res.max), text_value("witness_edges", edges),
              exact_value("graphs_counted", ExactInt(res.graphs_counted))};
  return c;
}

}  // namespace inducib
