#include "dpqs/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpqs/exact_analysis.hpp"
#include "dpqs/experiments.hpp"
#include "dpqs/rde_limit.hpp"
#include "dpqs/sort_core.hpp"
#include "dpqs/urn_model.hpp"

namespace dpqs {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int depth = 25;
  double prune_eps = 1e-4;
  std::size_t resolution = 2000;
  std::string output;
  std::string format = "text";
  unsigned workers = 1;
  std::string variant = "both";
  std::string input;
  std::uint64_t max_step = 60;
  std::uint64_t max_n = 200;
};

Json rational_json(const Rational& r) { return Json{{"exact", r.to_string()}, {"decimal", r.to_decimal(20)}}; }

std::string decimal_string(const Decimal& d) {
  std::ostringstream os;
  os << std::setprecision(40) << d;
  return os.str();
}

// Output sink: a file when --output is given, otherwise the command stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw std::ios_base::failure("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit_json(const Options& o, std::ostream& out, const Json& j) {
  Sink sink(o.output, out);
  sink.stream() << j.dump(2) << '\n';
  sink.finish();
}

// ---- sort ------------------------------------------------------------------

struct ParsedKey {
  double value;
  std::string text;
  friend bool operator==(const ParsedKey& a, const ParsedKey& b) { return a.value == b.value; }
  friend auto operator<=>(const ParsedKey& a, const ParsedKey& b) { return a.value <=> b.value; }
};

std::vector<ParsedKey> read_keys(std::istream& in) {
  std::vector<ParsedKey> keys;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw UsageError("sort: not a number: '" + token + "'");
    }
    if (used != token.size() || std::isnan(v)) throw UsageError("sort: not a number: '" + token + "'");
    keys.push_back({v, token});
  }
  return keys;
}

int cmd_sort(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<ParsedKey> keys;
  if (o.input.empty() || o.input == "-") {
    keys = read_keys(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("sort: cannot read '" + o.input + "'");
    keys = read_keys(file);
  }
  const Variant variant = o.variant == "classic" ? Variant::classic : Variant::count;
  const CostProfile profile =
      variant == Variant::count ? sort_count(std::span<ParsedKey>(keys)) : sort_classic(std::span<ParsedKey>(keys));
  bool ties = false;
  for (std::size_t i = 1; i < keys.size(); ++i) ties = ties || keys[i - 1] == keys[i];

  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    Json sorted = Json::array();
    for (const ParsedKey& k : keys) sorted.push_back(k.value);
    Json j{{"command", "sort"}, {"variant", to_string(variant)}, {"n", keys.size()}, {"sorted", sorted},
           {"ties", ties}};
    if (ties) {
      j["cost"] = nullptr;
    } else {
      j["cost"] = Json{{"comparisons", profile.comparisons},
                       {"plain_swaps", profile.plain_swaps},
                       {"rotate3_ops", profile.rotate3_ops},
                       {"half_swaps", profile.half_swaps()}};
    }
    os << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? " " : "") << keys[i].text;
    os << '\n';
    if (ties) {
      os << "ties present: cost profile not reported\n";
    } else {
      os << profile << '\n';
    }
  }
  sink.finish();
  return kExitOk;
}

// ---- exact -----------------------------------------------------------------

int cmd_exact(const Options& o, std::ostream& out) {
  const std::uint64_t n = o.n;
  const AnalysisConstants& k = analysis_constants();
  Json j{{"command", "exact"}, {"n", n}};
  j["mean_comparisons"] = rational_json(mean_comparisons(n));
  j["mean_swaps"] = rational_json(mean_swaps(n));
  j["mean_half_swaps"] = rational_json(Rational(2) * mean_swaps(n));
  if (n >= 2) {
    j["mean_partition_swaps"] = rational_json(mean_partition_swaps(n));
    j["mean_splus"] = rational_json(mean_splus(n));
  }
  if (n >= 4) {
    const double nn = static_cast<double>(n);
    j["asymptotic_comparisons"] = mean_comparisons_asymptotic(nn);
    j["asymptotic_swaps"] = mean_swaps_asymptotic(nn);
  }
  j["constants"] = Json{{"gamma", decimal_string(k.gamma)},       {"A_c", decimal_string(k.a_c)},
                        {"A_s", decimal_string(k.a_s)},           {"sigma2_c", decimal_string(k.sigma2_c)},
                        {"sigma2_s", decimal_string(k.sigma2_s)}, {"sigma2_cs", decimal_string(k.sigma2_cs)},
                        {"corr_limit", decimal_string(k.corr_limit)}};
  if (o.format == "json") {
    emit_json(o, out, j);
    return kExitOk;
  }
  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  os << "n = " << n << '\n';
  auto line = [&](const char* label, const Json& r) {
    os << label << " = " << r["exact"].get<std::string>() << "  (" << r["decimal"].get<std::string>() << ")\n";
  };
  line("E[C_n]", j["mean_comparisons"]);
  line("E[S_n]", j["mean_swaps"]);
  if (n >= 2) {
    line("E[T_S(n)]", j["mean_partition_swaps"]);
    line("E[S+_n]", j["mean_splus"]);
  }
  if (n >= 4) {
    os << std::setprecision(17) << "asymptotic E[C_n] ~ " << j["asymptotic_comparisons"].get<double>() << '\n'
       << "asymptotic E[S_n] ~ " << j["asymptotic_swaps"].get<double>() << '\n';
  }
  for (const auto& [name, value] : j["constants"].items()) os << name << " = " << value.get<std::string>() << '\n';
  sink.finish();
  return kExitOk;
}

// ---- exhaustive / partition -----------------------------------------------

int cmd_exhaustive(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxExhaustiveN) throw UsageError("exhaustive: requires 2 <= n <= 10");
  const ExhaustiveReport r = run_exhaustive(o.n);
  if (o.format == "csv") {
    Sink sink(o.output, out);
    sink.stream() << "n,permutations,mean_comparisons,formula_comparisons,mean_swaps,formula_swaps,pass\n"
                  << r.n << ',' << r.permutations << ',' << r.mean_comparisons << ',' << r.formula_comparisons << ','
                  << r.mean_half_swaps / Rational(2) << ',' << r.formula_swaps << ',' << (r.passed() ? 1 : 0) << '\n';
    sink.finish();
  } else {
    Json j{{"command", "exhaustive"},
           {"config", {{"n", o.n}}},
           {"results",
            {{"permutations", r.permutations},
             {"mean_comparisons", rational_json(r.mean_comparisons)},
             {"formula_comparisons", rational_json(r.formula_comparisons)},
             {"mean_swaps", rational_json(r.mean_half_swaps / Rational(2))},
             {"formula_swaps", rational_json(r.formula_swaps)}}},
           {"checks",
            {{"comparisons_equal", r.comparisons_match},
             {"swaps_equal", r.swaps_match},
             {"all_sorted", r.sorted_all}}},
           {"pass", r.passed()}};
    emit_json(o, out, j);
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_partition(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxExhaustiveN) throw UsageError("partition: requires 2 <= n <= 10");
  const PartitionReport r = run_exhaustive_partition(o.n);
  Json j{{"command", "partition"},
         {"config", {{"n", o.n}}},
         {"results",
          {{"permutations", r.permutations},
           {"mean_i1", rational_json(r.mean_i1)},
           {"mean_i2", rational_json(r.mean_i2)},
           {"mean_i3", rational_json(r.mean_i3)},
           {"mean_splus", rational_json(r.mean_splus)},
           {"mean_mplus", rational_json(r.mean_mplus)},
           {"mean_lplus", rational_json(r.mean_lplus)},
           {"mean_tc", rational_json(r.mean_tc)},
           {"mean_ts", rational_json(r.mean_ts)},
           {"formula_ts", rational_json(r.formula_ts)},
           {"formula_splus", rational_json(r.formula_splus)}}},
         {"checks",
          {{"ts_equal", r.ts_match},
           {"splus_equal", r.splus_match},
           {"splus_equals_lplus_minus_mplus", r.splus_equals_lplus_minus_mplus},
           {"costs_reconciled", r.all_reconciled}}},
         {"pass", r.passed()}};
  emit_json(o, out, j);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

// ---- mc / scatter ----------------------------------------------------------

std::vector<Variant> variants_of(const std::string& v) {
  if (v == "both") return {Variant::count, Variant::classic};
  return {parse_variant(v)};
}

Json report_json(const MonteCarloReport& r) {
  const MomentEstimate& m = r.moments;
  Json j{{"variant", to_string(r.variant)},
         {"n", r.n},
         {"samples", r.samples},
         {"mean_c", m.mean_x},
         {"mean_s", m.mean_y},
         {"se_mean_c", m.se_mean_x},
         {"se_mean_s", m.se_mean_y},
         {"var_c_over_n2", r.var_c_over_n2},
         {"se_var_c_over_n2", r.se_var_c_over_n2},
         {"var_s_over_n2", r.var_s_over_n2},
         {"se_var_s_over_n2", r.se_var_s_over_n2},
         {"cov_over_n2", r.cov_over_n2},
         {"se_cov_over_n2", r.se_cov_over_n2},
         {"corr", m.corr_defined ? Json(m.corr) : Json(nullptr)},
         {"se_corr", m.corr_defined ? Json(m.se_corr) : Json(nullptr)}};
  if (r.exact_mean_c) {
    j["exact_mean_c"] = *r.exact_mean_c;
    j["exact_mean_s"] = *r.exact_mean_s;
    j["mean_c_deviation_z"] = r.mean_c_z ? Json(*r.mean_c_z) : Json(nullptr);
    j["mean_s_deviation_z"] = r.mean_s_z ? Json(*r.mean_s_z) : Json(nullptr);
  }
  return j;
}

int cmd_mc(const Options& o, std::ostream& out) {
  if (o.n < 100) throw UsageError("mc: requires n >= 100");
  if (o.samples < 100) throw UsageError("mc: requires samples >= 100");
  const AnalysisConstants& k = analysis_constants();
  Json runs = Json::array();
  std::vector<MonteCarloReport> reports;
  for (Variant v : variants_of(o.variant)) {
    const auto records = simulate(v, o.n, o.samples, o.seed, o.workers);
    reports.push_back(summarize(v, o.n, records));
    runs.push_back(report_json(reports.back()));
  }
  if (o.format == "csv") {
    Sink sink(o.output, out);
    std::ostream& os = sink.stream();
    os << std::setprecision(17)
       << "variant,n,samples,mean_c,mean_s,var_c_over_n2,var_s_over_n2,cov_over_n2,corr,se_corr\n";
    for (const MonteCarloReport& r : reports) {
      os << to_string(r.variant) << ',' << r.n << ',' << r.samples << ',' << r.moments.mean_x << ','
         << r.moments.mean_y << ',' << r.var_c_over_n2 << ',' << r.var_s_over_n2 << ',' << r.cov_over_n2 << ','
         << r.moments.corr << ',' << r.moments.se_corr << '\n';
    }
    sink.finish();
    return kExitOk;
  }
  Json j{{"command", "mc"},
         {"config", {{"n", o.n}, {"samples", o.samples}, {"seed", o.seed}, {"variant", o.variant}}},
         {"reference",
          {{"sigma2_c", k.sigma2_c.convert_to<double>()},
           {"sigma2_s", k.sigma2_s.convert_to<double>()},
           {"sigma2_cs", k.sigma2_cs.convert_to<double>()},
           {"corr_count", k.corr_limit.convert_to<double>()},
           {"corr_classic", -0.864}}},
         {"results", runs}};
  emit_json(o, out, j);
  return kExitOk;
}

int cmd_scatter(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("scatter: requires n >= 1");
  if (o.samples < 1) throw UsageError("scatter: requires samples >= 1");
  std::vector<RunRecord> all;
  for (Variant v : {Variant::count, Variant::classic}) {
    auto records = simulate(v, o.n, o.samples, o.seed, o.workers);
    all.insert(all.end(), records.begin(), records.end());
  }
  Sink sink(o.output, out);
  write_scatter_csv(sink.stream(), all);
  sink.finish();
  return kExitOk;
}

// ---- urn -------------------------------------------------------------------

int cmd_urn(const Options& o, std::ostream& out) {
  if (o.max_n < 4) throw UsageError("urn: requires max-n >= 4");
  const std::uint64_t steps = std::max(o.max_step + 1, o.max_n - 3);
  const UrnTable table(steps);
  auto ru = [](std::uint64_t v) { return Rational(static_cast<long long>(v)); };

  bool uniform = true, mass = true, eq8 = true, eq9 = true, eq10 = true, half = true, splus = true, lm = true;
  Json failures = Json::array();
  for (std::uint64_t i = 0; i <= o.max_step; ++i) {
    uniform = uniform && table.uniform_at(i);
    mass = mass && table.mass_conserved_at(i);
    const StepProbabilities& p = table.at(i);
    const bool even = i % 2 == 0;
    const Rational want8 = even ? ru(i) / (Rational(2) * ru(i + 1)) : ru(i + 1) / (Rational(2) * ru(i + 2));
    if (p.l_gt_s != want8) {
      eq8 = false;
      failures.push_back({{"identity", "P(L>S)"}, {"i", i}});
    }
    if (i == 0) continue;
    const Rational want9 = even ? ru(i) / (Rational(4) * ru(i + 1)) : ru(i + 1) / (Rational(4) * ru(i + 2));
    const Rational want10 = even ? ru(i) * ru(i + 4) / (Rational(12) * ru(i + 1) * ru(i + 3)) : Rational(1, 12);
    if (p.large_and_l_gt_s != want9) {
      eq9 = false;
      failures.push_back({{"identity", "P(L up, L>S)"}, {"i", i}});
    }
    if (p.small_and_l_gt_s != want10) {
      eq10 = false;
      failures.push_back({{"identity", "P(S up, L>S)"}, {"i", i}});
    }
    if (p.large_and_l_gt_s / p.l_gt_s != Rational(1, 2)) {
      half = false;
      failures.push_back({{"identity", "P(L up | L>S) = 1/2"}, {"i", i}});
    }
  }
  for (std::uint64_t n = 2; n <= o.max_n; ++n) {
    const Rational e = table.expected_splus(n);
    if (e != mean_splus(n)) {
      splus = false;
      failures.push_back({{"identity", "E[S+] closed form"}, {"n", n}});
    }
    if (table.expected_lplus(n) - table.expected_mplus(n) != e) {
      lm = false;
      failures.push_back({{"identity", "E[S+] = E[L+ - M+]"}, {"n", n}});
    }
  }
  const bool pass = uniform && mass && eq8 && eq9 && eq10 && half && splus && lm;
  Json j{{"command", "urn"},
         {"config", {{"max_step", o.max_step}, {"max_n", o.max_n}}},
         {"checks",
          {{"uniform_compositions", uniform},
           {"mass_conserved", mass},
           {"prob_L_gt_S", eq8},
           {"prob_large_up_and_L_gt_S", eq9},
           {"prob_small_up_and_L_gt_S", eq10},
           {"conditional_one_half", half},
           {"expected_splus_closed_form", splus},
           {"splus_equals_lplus_minus_mplus", lm}}},
         {"failures", failures},
         {"pass", pass}};
  emit_json(o, out, j);
  return pass ? kExitOk : kExitCheckFailed;
}

// ---- rde / tollmoments -----------------------------------------------------

int cmd_rde(const Options& o, std::ostream& out) {
  if (o.depth < 1) throw UsageError("rde: requires depth >= 1");
  if (!(o.prune_eps >= 0 && o.prune_eps < 1)) throw UsageError("rde: requires 0 <= prune-eps < 1");
  if (o.samples < kMinMomentSamples) throw UsageError("rde: requires samples >= 1000");
  const auto samples = sample_limit_batch(o.seed, o.samples, o.depth, o.prune_eps, o.workers);
  if (o.format == "csv") {
    Sink sink(o.output, out);
    std::ostream& os = sink.stream();
    os << std::setprecision(17) << "sample_index,x_c,x_s\n";
    for (std::size_t i = 0; i < samples.size(); ++i) os << i << ',' << samples[i].x_c << ',' << samples[i].x_s << '\n';
    sink.finish();
    return kExitOk;
  }
  const MomentEstimate m = estimate_moments(samples);
  const AnalysisConstants& k = analysis_constants();
  Json j{{"command", "rde"},
         {"config", {{"samples", o.samples}, {"seed", o.seed}, {"depth", o.depth}, {"prune_eps", o.prune_eps}}},
         {"results",
          {{"mean_c", m.mean_x},
           {"se_mean_c", m.se_mean_x},
           {"mean_s", m.mean_y},
           {"se_mean_s", m.se_mean_y},
           {"var_c", m.var_x},
           {"se_var_c", m.se_var_x},
           {"var_s", m.var_y},
           {"se_var_s", m.se_var_y},
           {"cov", m.cov},
           {"se_cov", m.se_cov},
           {"corr", m.corr_defined ? Json(m.corr) : Json(nullptr)},
           {"se_corr", m.corr_defined ? Json(m.se_corr) : Json(nullptr)}}},
         {"reference",
          {{"sigma2_c", k.sigma2_c.convert_to<double>()},
           {"sigma2_s", k.sigma2_s.convert_to<double>()},
           {"sigma2_cs", k.sigma2_cs.convert_to<double>()},
           {"corr", k.corr_limit.convert_to<double>()}}}};
  emit_json(o, out, j);
  return kExitOk;
}

int cmd_tollmoments(const Options& o, std::ostream& out) {
  if (o.resolution < 1000) throw UsageError("tollmoments: requires resolution >= 1000");
  const TollMoments t = toll_second_moments(o.resolution);
  const AnalysisConstants& k = analysis_constants();
  const double sc = k.sigma2_c.convert_to<double>(), ss = k.sigma2_s.convert_to<double>(),
               scs = k.sigma2_cs.convert_to<double>();
  const bool centered = std::abs(t.e_b1) < 1e-6 && std::abs(t.e_b2) < 1e-6;
  const bool var_c = std::abs(2 * t.e_b1b1 - sc) < 1e-3;
  const bool var_s = std::abs(2 * t.e_b2b2 - ss) < 1e-3;
  const bool cov = std::abs(2 * t.e_b1b2 - scs) < 1e-3;
  const bool pass = centered && var_c && var_s && cov;
  Json j{{"command", "tollmoments"},
         {"config", {{"resolution", o.resolution}}},
         {"results",
          {{"e_b1", t.e_b1},
           {"e_b2", t.e_b2},
           {"e_b1b1", t.e_b1b1},
           {"e_b1b2", t.e_b1b2},
           {"e_b2b2", t.e_b2b2},
           {"sigma2_c_estimate", 2 * t.e_b1b1},
           {"sigma2_s_estimate", 2 * t.e_b2b2},
           {"sigma2_cs_estimate", 2 * t.e_b1b2}}},
         {"reference", {{"sigma2_c", sc}, {"sigma2_s", ss}, {"sigma2_cs", scs}}},
         {"checks", {{"centered", centered}, {"sigma2_c", var_c}, {"sigma2_s", var_s}, {"sigma2_cs", cov}}},
         {"pass", pass}};
  emit_json(o, out, j);
  return pass ? kExitOk : kExitCheckFailed;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("DPQS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("DPQS_SEED is not an unsigned integer: '") + env + "'");
  }
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.seed = default_seed();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Dual-pivot quicksort \"Count\": cost instrumentation and analysis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (default 0, or $DPQS_SEED)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", o.output, "Write output to this file");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* sort = app.add_subcommand("sort", "Sort numbers from a file (or stdin) and report costs");
  sort->add_option("input", o.input, "Input file ('-' or omitted for stdin)");
  sort->add_option("--variant", o.variant, "count or classic")->check(CLI::IsMember({"count", "classic"}));
  add_common(sort);

  auto* exact = app.add_subcommand("exact", "Exact mean values for size n");
  exact->add_option("--n", o.n, "Input size")->required();
  add_common(exact);

  auto* exhaustive = app.add_subcommand("exhaustive", "Average costs over all n! permutations");
  exhaustive->add_option("--n", o.n, "Input size (2..10)")->required();
  add_common(exhaustive);

  auto* partition = app.add_subcommand("partition", "First-partition averages over all n! permutations");
  partition->add_option("--n", o.n, "Input size (2..10)")->required();
  add_common(partition);

  auto* mc = app.add_subcommand("mc", "Monte Carlo moments of comparisons and swaps");
  mc->add_option("--n", o.n, "Input size")->required();
  mc->add_option("--samples", o.samples, "Number of random permutations")->required();
  mc->add_option("--variant", o.variant, "count, classic or both")
      ->check(CLI::IsMember({"count", "classic", "both"}));
  add_common(mc);

  auto* scatter = app.add_subcommand("scatter", "CSV of normalized costs for both variants");
  scatter->add_option("--n", o.n, "Input size (default 10000)");
  scatter->add_option("--samples", o.samples, "Samples per variant (default 1000)");
  add_common(scatter);

  auto* urn = app.add_subcommand("urn", "Exact urn identity report");
  urn->add_option("--max-step", o.max_step, "Largest urn step checked (default 60)");
  urn->add_option("--max-n", o.max_n, "Largest n for E[S+] checks (default 200)");
  add_common(urn);

  auto* rde = app.add_subcommand("rde", "Sample the limit law");
  rde->add_option("--samples", o.samples, "Number of samples (default 10000)");
  rde->add_option("--depth", o.depth, "Recursion depth (default 25)");
  rde->add_option("--prune-eps", o.prune_eps, "Prune nodes with scale below this (default 1e-4)");
  add_common(rde);

  auto* toll = app.add_subcommand("tollmoments", "Quadrature of toll moments");
  toll->add_option("--resolution", o.resolution, "Points per axis (default 2000)");
  add_common(toll);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sort) {
      if (o.variant == "both") o.variant = "count";
      return cmd_sort(o, in, out);
    }
    if (*exact) return cmd_exact(o, out);
    if (*exhaustive) return cmd_exhaustive(o, out);
    if (*partition) return cmd_partition(o, out);
    if (*mc) return cmd_mc(o, out);
    if (*scatter) {
      if (o.n == 0) o.n = 10000;
      if (o.samples == 0) o.samples = 1000;
      return cmd_scatter(o, out);
    }
    if (*urn) return cmd_urn(o, out);
    if (*rde) {
      if (o.samples == 0) o.samples = 10000;
      return cmd_rde(o, out);
    }
    if (*toll) return cmd_tollmoments(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dpqs
