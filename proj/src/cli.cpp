#include "mzstar/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzstar/bench.hpp"
#include "mzstar/bernoulli.hpp"
#include "mzstar/crosscheck.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/index.hpp"
#include "mzstar/mzsv_eval.hpp"
#include "mzstar/oracle.hpp"
#include "mzstar/router.hpp"
#include "mzstar/series.hpp"

namespace mzstar {

namespace {

using nlohmann::json;

// Thrown to leave a subcommand with a specific exit code after its output
// has been written.
struct ExitWith {
  int code;
};

json schema_object() { return json{{"schema", 1}}; }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

long checked_precision(long bits) {
  if (bits < 64) throw NumericPrecondition("precision must be at least 64 bits, got " + std::to_string(bits));
  return bits;
}

struct ExactOutput {
  std::string index;
  std::string family;
  PiValue value;
  std::string formula;
  long precision_bits;
  bool star;
};

std::string decimal_of(const PiValue& v, long bits) {
  return pi_value_num(v.coeff, v.pi_power, bits).to_decimal(decimal_digits_for(bits));
}

void print_exact(std::ostream& out, const ExactOutput& e, bool as_json, const std::string& display) {
  const std::string decimal = decimal_of(e.value, e.precision_bits);
  if (as_json) {
    json j = schema_object();
    j["index"] = e.index;
    j["family"] = e.family;
    j["star"] = e.star;
    j["pi_power"] = e.value.pi_power;
    j["numerator"] = e.value.coeff.numerator().get_str();
    j["denominator"] = e.value.coeff.denominator().get_str();
    j["decimal"] = decimal;
    j["precision_bits"] = e.precision_bits;
    j["formula"] = e.formula;
    emit_json(out, j);
    return;
  }
  out << display << " = " << e.value.coeff.to_string();
  if (e.value.pi_power > 0) out << " * pi^" << e.value.pi_power;
  out << '\n' << "  ~ " << decimal << '\n';
  out << "  family " << e.family << ", formula " << e.formula << '\n';
}

// ---- subcommands -----------------------------------------------------------

struct EvalArgs {
  std::string index;
  bool nostar = false;
  std::string formula = "auto";
  long prec = 0;
};

void cmd_eval(const EvalArgs& a, bool as_json, std::ostream& out) {
  const Index ix = parse_index(a.index);
  const Evaluation ev = evaluate(ix, !a.nostar, parse_formula(a.formula));
  const std::string rendered = render_index(ix);
  ExactOutput e{rendered, family_tag(ev.cls.family), ev.value, formula_name(ev.formula), checked_precision(a.prec),
                !a.nostar};
  print_exact(out, e, as_json, std::string(a.nostar ? "zeta(" : "zeta*(") + rendered + ")");
}

struct SumArgs {
  std::string kind;
  int d = 0;
  int n = 0;
  bool nostar = false;
  long prec = 0;
};

void cmd_sum(const SumArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
  if (a.kind != "Z" && a.kind != "Z0" && a.kind != "Z1") {
    throw DomainError("sum: kind must be Z, Z0 or Z1, got '" + a.kind + "'");
  }
  if (a.d < 0 || a.n < 0) throw DomainError("sum: d and n must be non-negative");
  const std::string args = "(" + std::to_string(a.d) + "," + std::to_string(a.n) + ")";

  PiValue v;
  std::string formula;
  std::string label;
  if (a.nostar) {
    if (a.kind != "Z") throw DomainError("sum --nostar: only Z has a closed form");
    v = bowman_bradley_Z(a.d, a.n);
    formula = "in5";
    label = "Z" + args;
  } else if (a.d == 0) {
    if (a.kind != "Z") throw DomainError("sum " + a.kind + ": d must be >= 1");
    err << "note: Z*(0,n) is zeta*({2}^n); evaluated with in0\n";
    v = zeta_star_2_pow(a.n);
    formula = "in0";
    label = "Z*" + args;
  } else {
    if (a.kind == "Z") {
      v = zstar(a.d, a.n);
    } else if (a.kind == "Z0") {
      v = zstar0(a.d, a.n);
    } else {
      v = zstar1(a.d, a.n);
    }
    formula = "t11";
    label = (a.kind == "Z" ? std::string("Z*") : "Z*" + a.kind.substr(1)) + args;
  }
  ExactOutput e{label, "sum:" + a.kind, v, formula, checked_precision(a.prec), !a.nostar};
  print_exact(out, e, as_json, label);
}

struct CrosscheckArgs {
  std::string suite;
  CrosscheckBounds bounds;
};

void cmd_crosscheck(const CrosscheckArgs& a, bool as_json, std::ostream& out) {
  const CrosscheckReport r = run_crosscheck(a.suite, a.bounds);
  const auto failed = static_cast<std::size_t>(
      std::count_if(r.cases.begin(), r.cases.end(), [](const CrosscheckCase& c) { return !c.equal; }));
  if (as_json) {
    json j = schema_object();
    j["suite"] = r.suite;
    j["bounds"] = {{"max_d", r.bounds.max_d}, {"max_n", r.bounds.max_n}, {"max_m", r.bounds.max_m}};
    j["all_equal"] = r.all_equal();
    j["cases"] = json::array();
    for (const auto& c : r.cases) {
      json row{{"label", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}};
      if (!c.error.empty()) row["error"] = c.error;
      j["cases"].push_back(std::move(row));
    }
    emit_json(out, j);
  } else {
    for (const auto& c : r.cases) {
      out << (c.equal ? "equal     " : "MISMATCH  ") << c.label;
      if (!c.error.empty()) {
        out << "  error: " << c.error;
      } else {
        out << "  " << c.lhs;
        if (!c.equal) out << " vs " << c.rhs;
      }
      out << '\n';
    }
    out << r.suite << ": " << (r.cases.size() - failed) << "/" << r.cases.size() << " equal\n";
  }
  if (failed > 0) throw ExitWith{kExitMismatch};
}

struct BenchArgs {
  std::string formula;
  std::vector<int> ds;
  int reps = 5;
};

void cmd_bench(const BenchArgs& a, bool as_json, std::ostream& out) {
  std::vector<BenchRow> rows;
  for (int d : a.ds) rows.push_back(run_bench(a.formula, d, a.reps));
  if (as_json) {
    json j = schema_object();
    j["rows"] = json::array();
    for (const auto& r : rows) {
      j["rows"].push_back(
          {{"formula", r.formula}, {"d", r.d}, {"mean", r.mean}, {"stddev", r.stddev}, {"reps", r.reps}});
    }
    emit_json(out, j);
    return;
  }
  out << std::left << std::setw(8) << "formula" << std::setw(8) << "d" << std::setw(14) << "mean[s]"
      << std::setw(14) << "stddev[s]" << "reps\n";
  for (const auto& r : rows) {
    out << std::setw(8) << r.formula << std::setw(8) << r.d << std::setw(14) << r.mean << std::setw(14)
        << r.stddev << r.reps << '\n';
  }
}

struct OracleArgs {
  std::string index;
  bool nostar = false;
  long K = 10000;
  long prec = 0;
  std::optional<double> max_tail;
};

void cmd_oracle(const OracleArgs& a, bool as_json, std::ostream& out) {
  const Index ix = parse_index(a.index);
  NumericConfig cfg{checked_precision(a.prec), a.K, a.max_tail};
  const NumericResult r = mzsv_num(ix, !a.nostar, cfg);
  const int digits = decimal_digits_for(cfg.precision_bits);
  const std::string rendered = render_index(ix);
  if (as_json) {
    json j = schema_object();
    j["index"] = rendered;
    j["star"] = !a.nostar;
    j["K"] = cfg.truncation_K;
    j["precision_bits"] = cfg.precision_bits;
    j["value"] = r.value.to_decimal(digits);
    j["tail_estimate"] = r.tail_estimate.to_string(3);
    j["tail_kind"] = "heuristic";
    emit_json(out, j);
    return;
  }
  out << (a.nostar ? "zeta(" : "zeta*(") << rendered << ") ~ " << r.value.to_decimal(digits) << '\n';
  out << "  tail estimate " << r.tail_estimate.to_string(3) << " (heuristic, K = " << cfg.truncation_K << ")\n";
}

void cmd_bernoulli(int max, bool as_json, std::ostream& out) {
  if (max < 0) throw DomainError("bernoulli: --max must be non-negative");
  const auto table = bernoulli_table(static_cast<std::size_t>(max));
  if (as_json) {
    json j = schema_object();
    j["rows"] = json::array();
    for (int k = 0; k <= max; ++k) j["rows"].push_back({{"k", k}, {"value", (*table)[k].to_string()}});
    emit_json(out, j);
    return;
  }
  for (int k = 0; k <= max; ++k) out << k << '\t' << (*table)[k].to_string() << '\n';
}

void cmd_series(const std::string& name, int terms, bool as_json, std::ostream& out) {
  if (terms < 0) throw DomainError("series: --terms must be non-negative");
  GradedSeries s;
  if (name == "tanhcot") {
    s = series_tanh_cot(terms);
  } else if (name == "zstar2") {
    s = series_zeta_star_2(terms);
  } else if (name == "zstar4") {
    s = series_zeta_star_4(terms);
  } else {
    throw DomainError("series: name must be tanhcot, zstar2 or zstar4, got '" + name + "'");
  }
  if (as_json) {
    json j = schema_object();
    j["series"] = name;
    j["terms"] = terms;
    j["coefficients"] = json::array();
    for (int n = 0; n <= s.truncation(); ++n) j["coefficients"].push_back({{"n", n}, {"q", s[n].to_string()}});
    emit_json(out, j);
    return;
  }
  out << "# z^n coefficient = q_n * pi^n\n";
  for (int n = 0; n <= s.truncation(); ++n) out << n << '\t' << s[n].to_string() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiple zeta star values on 3-2-1 indices", "mzstar"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  const long default_prec = default_precision_bits();

  EvalArgs eval;
  eval.prec = default_prec;
  auto* eval_cmd = app.add_subcommand("eval", "Exact value through a closed form");
  eval_cmd->add_option("index", eval.index, "Index, e.g. \"{3,1}^2\" or \"{{2}^2,3,{2}^2,1}^1\"")->required();
  eval_cmd->add_flag("--nostar", eval.nostar, "Non-star value");
  eval_cmd->add_option("--formula", eval.formula, "auto|trivial|in0|in2|t4|muneta|t7|bell");
  eval_cmd->add_option("--prec", eval.prec, "Bits for the decimal rendering");

  SumArgs sum;
  sum.prec = default_prec;
  auto* sum_cmd = app.add_subcommand("sum", "Sum formulas Z*(d,n), Z*_0, Z*_1");
  sum_cmd->add_option("kind", sum.kind, "Z|Z0|Z1")->required();
  sum_cmd->add_option("--d", sum.d)->required();
  sum_cmd->add_option("--n", sum.n)->required();
  sum_cmd->add_flag("--nostar", sum.nostar, "Non-star Z(d,n)");
  sum_cmd->add_option("--prec", sum.prec);

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Compare independent formulas exactly");
  cc_cmd->add_option("suite", cc.suite, "t4-muneta|t11-yamamoto|t7-bell|eq08|in4|t3-series")->required();
  cc_cmd->add_option("--max-d", cc.bounds.max_d);
  cc_cmd->add_option("--max-n", cc.bounds.max_n);
  cc_cmd->add_option("--max-m", cc.bounds.max_m);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time zeta*({3,1}^d) evaluations");
  bench_cmd->add_option("formula", bench.formula, "t4|muneta")->required();
  bench_cmd->add_option("--d", bench.ds, "One or more values of d")->required();
  bench_cmd->add_option("--reps", bench.reps);

  OracleArgs oracle;
  oracle.prec = default_prec;
  auto* oracle_cmd = app.add_subcommand("oracle", "Truncated nested sum in high precision");
  oracle_cmd->add_option("index", oracle.index)->required();
  oracle_cmd->add_flag("--nostar", oracle.nostar);
  oracle_cmd->add_option("--K", oracle.K, "Outer cutoff");
  oracle_cmd->add_option("--prec", oracle.prec);
  oracle_cmd->add_option("--max-tail", oracle.max_tail, "Fail if the tail estimate is larger");

  int bern_max = 20;
  auto* bern_cmd = app.add_subcommand("bernoulli", "Table of B_k");
  bern_cmd->add_option("--max", bern_max);

  std::string series_name;
  int series_terms = 20;
  auto* series_cmd = app.add_subcommand("series", "Coefficients of a generating function");
  series_cmd->add_option("name", series_name, "tanhcot|zstar2|zstar4")->required();
  series_cmd->add_option("--terms", series_terms, "Truncation order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) cmd_eval(eval, as_json, out);
    if (*sum_cmd) cmd_sum(sum, as_json, out, err);
    if (*cc_cmd) cmd_crosscheck(cc, as_json, out);
    if (*bench_cmd) cmd_bench(bench, as_json, out);
    if (*oracle_cmd) cmd_oracle(oracle, as_json, out);
    if (*bern_cmd) cmd_bernoulli(bern_max, as_json, out);
    if (*series_cmd) cmd_series(series_name, series_terms, as_json, out);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const RationalityViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const NumericPrecondition& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace mzstar
