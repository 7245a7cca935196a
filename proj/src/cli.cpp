#include "iwasawa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "iwasawa/error.hpp"
#include "iwasawa/group_oracle.hpp"
#include "iwasawa/hypotheses.hpp"
#include "iwasawa/lmfdb_client.hpp"
#include "iwasawa/rank_data.hpp"
#include "iwasawa/structure.hpp"
#include "iwasawa/sweep.hpp"
#include "iwasawa/verify.hpp"

namespace iwasawa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  bool offline = false;
  std::string cache_dir;
  std::optional<unsigned> max_level;
  bool allow_repeated_primes = false;
  std::string sign;
  std::uint64_t max_order = 100;
  std::string label;
};

// ---- rendering ------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& x : arr) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render_text(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && all_scalars(value)) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
      out << "]\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        if (!item.is_object()) {
          out << pad << "  - " << scalar_text(item) << "\n";
          continue;
        }
        bool first = true;
        for (const auto& [k, x] : item.items()) {
          out << pad << (first ? "  - " : "    ") << k << ": ";
          if (x.is_array() && all_scalars(x)) {
            out << "[";
            for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar_text(x[i]);
            out << "]";
          } else {
            out << (x.is_structured() ? x.dump() : scalar_text(x));
          }
          out << "\n";
          first = false;
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "structured") {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
  }
}

// ---- conversions ----------------------------------------------------------

Json ideal_json(const CharIdeal& c) {
  std::string display;
  if (c.mu() > 0) display = std::to_string(c.prime()) + (c.mu() > 1 ? "^" + std::to_string(c.mu()) : "");
  for (auto [n, e] : c.cyclo()) {
    if (!display.empty()) display += " * ";
    display += n == 0 ? "x" : "Phi(" + std::to_string(n) + ")";
    if (e > 1) display += "^" + std::to_string(e);
  }
  for (const auto& [g, e] : c.extra()) {
    if (!display.empty()) display += " * ";
    display += "(" + g.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : "");
  }
  const Invariants inv = c.invariants();
  Json j;
  j["ideal"] = "<" + (display.empty() ? std::string("1") : display) + ">";
  j["canonical"] = c.to_text();
  j["lambda"] = inv.lambda;
  j["mu"] = inv.mu;
  return j;
}

Json group_json(const FiniteAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.factors()) factors.push_back({f.p, f.n});
  Json j;
  j["description"] = g.to_string();
  j["factors"] = factors;
  j["order"] = g.order();
  return j;
}

Json tuple_json(const IndexTuple& t) { return t.entries; }

Json e_alpha_json(const EAlphaTable& ea) {
  Json j = Json::object();
  for (const auto& [alpha, row] : ea.values) j[alpha.key()] = row;
  return j;
}

Json summary_json(const GrowthSummary& gs) {
  Json j;
  j["e"] = gs.e;
  j["theta"] = gs.theta;
  j["s"] = gs.s;
  return j;
}

Json decomposition_json(const FiniteAbelianGroup& g, const EquivariantDecomposition& d, unsigned max_level) {
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json x;
    x["alpha"] = tuple_json(s.alpha);
    x["level"] = s.level;
    x["multiplicity"] = s.multiplicity;
    x["dim_w"] = irrep_dim(g, s.alpha);
    summands.push_back(x);
  }
  std::vector<std::uint64_t> contracted;
  for (unsigned k = 0; k <= max_level; ++k) contracted.push_back(d.contracted(g, k));
  Json j;
  j["summands"] = summands;
  j["contracted"] = contracted;
  return j;
}

// ---- instance plumbing ----------------------------------------------------

std::string read_input(const Options& opt) {
  if (opt.input.empty()) throw UsageError("--input is required for this subcommand");
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw UsageError("cannot read input file " + opt.input);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemInstance load(const Options& opt) {
  ParseOptions po;
  po.repeated_primes = opt.allow_repeated_primes ? RepeatedPrimes::Allow : RepeatedPrimes::Reject;
  po.max_level = opt.max_level;
  return parse_input(read_input(opt), po);
}

ClientConfig client_config(const Options& opt) {
  ClientConfig cfg = ClientConfig::from_environment();
  cfg.offline = opt.offline;
  cfg.cache_dir = opt.cache_dir;
  return cfg;
}

struct ResolvedCurve {
  std::string label;
  long ap = 0;
  Reduction reduction = Reduction::Ordinary;
  std::string source;
};

std::optional<ResolvedCurve> resolve_curve(const ProblemInstance& inst, const Options& opt) {
  if (!inst.curve) return std::nullopt;
  const CurveInput& c = *inst.curve;
  auto it = c.ap.find(inst.p);
  if (it != c.ap.end()) return ResolvedCurve{c.label, it->second, reduction_type(it->second, inst.p), "input"};
  const FetchResult fetched = fetch_curve(client_config(opt), c.label);
  const Classification cls = classify_curve(fetched, inst.p);
  return ResolvedCurve{c.label, cls.ap, cls.reduction, std::string(to_string(cls.provenance))};
}

Json curve_json(const ResolvedCurve& c) {
  Json j;
  j["label"] = c.label;
  j["a_p"] = c.ap;
  j["reduction"] = to_string(c.reduction);
  j["source"] = c.source;
  return j;
}

Json header(const std::string& command, const ProblemInstance& inst) {
  Json j;
  j["command"] = command;
  j["p"] = inst.p;
  j["group"] = group_json(inst.field.group);
  j["conductor"] = inst.field.conductor;
  return j;
}

Json assumptions(const ProblemInstance& inst, bool pm) {
  Json j;
  j["fine_sha_finite"] = inst.assume_fine_sha_finite;
  if (pm) j["pm_sha_finite"] = inst.assume_pm_sha_finite;
  j["verified"] = false;
  j["note"] = pm ? "results are conditional on finiteness of the fine and plus/minus Sha at every layer"
                 : "results are conditional on finiteness of the fine Sha at every layer";
  return j;
}

Json hypothesis_json(const ProblemInstance& inst, bool& all_pass) {
  Json verdicts = Json::array();
  all_pass = true;
  for (const auto& v : field_hypotheses(inst.field, inst.p).verdicts) {
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}});
    all_pass = all_pass && v.pass;
  }
  const StarVerdict star = star_check(inst.field.group, inst.p);
  std::ostringstream w;
  w << "m = " << star.m << ", m' = " << star.witness.m_prime << ", ord_m'(p) = " << star.witness.order
    << ", phi(m') = " << star.witness.totient;
  verdicts.push_back({{"name", "star"}, {"pass", star.pass}, {"witness", w.str()}});
  all_pass = all_pass && star.pass;
  const bool distinct = inst.field.group.distinct_support();
  verdicts.push_back({{"name", "distinct-primes"},
                      {"pass", distinct},
                      {"witness", distinct ? "pairwise distinct" : "repeated primes allowed by flag"}});
  all_pass = all_pass && distinct;
  return verdicts;
}

void require_hypotheses(const ProblemInstance& inst) {
  bool ok = true;
  const Json verdicts = hypothesis_json(inst, ok);
  if (ok) return;
  std::string failed;
  for (const auto& v : verdicts) {
    if (!v["pass"].get<bool>()) failed += (failed.empty() ? "" : ", ") + v["name"].get<std::string>();
  }
  throw Error(ErrorCode::Precondition, "hypotheses fail: " + failed + " (run `check` for witnesses)");
}

struct Solved {
  EAlphaTable ea;
  GrowthSummary gs;
};

Solved solve(const ProblemInstance& inst) {
  if (!inst.ranks) throw Error(ErrorCode::Precondition, "this subcommand needs a ranks table in the input");
  Solved s;
  s.ea = solve_e_alpha(inst.field.group, inst.p, *inst.ranks);
  s.gs = growth_summary(inst.field.group, s.ea);
  return s;
}

Reduction require_curve_reduction(const ProblemInstance& inst, const Options& opt, Json& report) {
  const auto curve = resolve_curve(inst, opt);
  if (!curve) {
    throw Error(ErrorCode::Precondition, "pm requires supersingular reduction (a_p = 0), but no curve is given");
  }
  report["curve"] = curve_json(*curve);
  return curve->reduction;
}

// ---- subcommands ----------------------------------------------------------

int cmd_reps(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  const FiniteAbelianGroup& g = inst.field.group;
  Json report = header("reps", inst);
  Json tuples = Json::array();
  for (const auto& d : irreps(g)) {
    tuples.push_back({{"alpha", tuple_json(d.tuple)}, {"dim", d.dimension}, {"index", quotient_order(g, d.tuple)}});
  }
  report["exponent"] = g.exponent();
  report["irreps"] = tuples;
  report["dimension_sum"] = regular_dimension_sum(g);
  emit(report, opt, out);
  return kSuccess;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  Json report = header("check", inst);
  bool ok = true;
  report["hypotheses"] = hypothesis_json(inst, ok);
  if (auto curve = resolve_curve(inst, opt)) report["curve"] = curve_json(*curve);
  report["assumptions"] = assumptions(inst, true);
  report["all_pass"] = ok;
  emit(report, opt, out);
  return ok ? kSuccess : kValidationFailure;
}

int cmd_fine(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  require_hypotheses(inst);
  const Solved s = solve(inst);
  const FineStructure fine = fine_mw_structure(inst.p, s.gs);
  Json report = header("fine", inst);
  report["assumptions"] = assumptions(inst, false);
  report["max_level"] = s.ea.max_level;
  report["e_alpha"] = e_alpha_json(s.ea);
  report["growth"] = summary_json(s.gs);
  report["exponents"] = fine.exponents;
  report["characteristic_ideal"] = ideal_json(fine.ideal);
  emit(report, opt, out);
  return kSuccess;
}

int cmd_pm(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  Json report = header("pm", inst);
  const Reduction red = require_curve_reduction(inst, opt, report);
  require_hypotheses(inst);
  const Solved s = solve(inst);
  const PMStructure pm = pm_mw_structure(inst.p, s.gs, red);
  report["assumptions"] = assumptions(inst, true);
  report["growth"] = summary_json(s.gs);
  report["r_plus"] = pm.r_plus;
  report["r_minus"] = pm.r_minus;
  report["char_plus"] = ideal_json(pm.char_plus);
  report["char_minus"] = ideal_json(pm.char_minus);
  report["gcd"] = ideal_json(pm.gcd);
  emit(report, opt, out);
  return kSuccess;
}

int cmd_equivariant(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  Json report = header("equivariant", inst);
  std::optional<Sign> sign;
  if (opt.sign == "plus" || opt.sign == "+") sign = Sign::Plus;
  if (opt.sign == "minus" || opt.sign == "-") sign = Sign::Minus;
  if (sign) {
    const Reduction red = require_curve_reduction(inst, opt, report);
    if (red != Reduction::Supersingular) {
      throw Error(ErrorCode::Precondition, "pm requires supersingular reduction (a_p = 0), got " +
                                               std::string(to_string(red)));
    }
  }
  require_hypotheses(inst);
  const Solved s = solve(inst);
  report["sign"] = sign ? std::string(to_string(*sign)) : std::string("fine");
  report["assumptions"] = assumptions(inst, sign.has_value());
  report["e_alpha"] = e_alpha_json(s.ea);
  const auto d = sign ? equivariant_pm(inst.field.group, s.ea, *sign) : equivariant_fine(inst.field.group, s.ea);
  report["decomposition"] = decomposition_json(inst.field.group, d, s.ea.max_level);
  emit(report, opt, out);
  return kSuccess;
}

int cmd_greenberg(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  require_hypotheses(inst);
  const Solved s = solve(inst);
  const CharIdeal rhs = greenberg_rhs(inst.p, s.gs.e);
  const FineStructure fine = fine_mw_structure(inst.p, s.gs);
  Json report = header("greenberg", inst);
  report["assumptions"] = assumptions(inst, false);
  report["growth"] = summary_json(s.gs);
  report["greenberg_target"] = ideal_json(rhs);
  report["fine_ideal"] = ideal_json(fine.ideal);
  report["agrees"] = rhs == fine.ideal;
  emit(report, opt, out);
  return kSuccess;
}

int cmd_kp(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  Json report = header("kp", inst);
  std::optional<Reduction> red;
  if (auto curve = resolve_curve(inst, opt)) {
    report["curve"] = curve_json(*curve);
    red = curve->reduction;
  }
  require_hypotheses(inst);
  const Solved s = solve(inst);
  const CharIdeal rhs = kp_rhs(inst.p, s.gs.e);
  report["assumptions"] = assumptions(inst, true);
  report["growth"] = summary_json(s.gs);
  report["kp_target"] = ideal_json(rhs);
  if (red == Reduction::Supersingular) {
    const PMStructure pm = pm_mw_structure(inst.p, s.gs, *red);
    report["pm_gcd"] = ideal_json(pm.gcd);
    report["agrees"] = rhs == pm.gcd;
  }
  emit(report, opt, out);
  return kSuccess;
}

int cmd_selmer(const Options& opt, std::ostream& out) {
  const ProblemInstance inst = load(opt);
  if (!inst.selmer_shape) throw Error(ErrorCode::Precondition, "selmer-validate needs selmer_shape in the input");
  std::optional<Solved> s;
  if (inst.ranks) s = solve(inst);
  const ValidationReport rep =
      validate_selmer_shape(*inst.selmer_shape, s ? std::optional<GrowthSummary>(s->gs) : std::nullopt);
  Json report = header("selmer-validate", inst);
  report["reduction"] = to_string(inst.selmer_shape->reduction);
  Json verdicts = Json::array();
  for (const auto& v : rep.verdicts) {
    verdicts.push_back({{"constraint", v.constraint}, {"pass", v.pass}, {"detail", v.detail}, {"theorem", v.theorem}});
  }
  report["verdicts"] = verdicts;
  Json sha = Json::array();
  for (auto [a, f] : rep.sha_cyclo) sha.push_back({a, f});
  Json generic = Json::array();
  for (const auto& g : rep.sha_generic) {
    generic.push_back({{"label", g.label}, {"degree", g.degree}, {"exponent", g.exponent}});
  }
  report["sha_cyclotomic"] = sha;
  report["sha_generic"] = generic;
  report["cyclic"] = rep.cyclic;
  report["unchecked_levels"] = rep.unchecked_levels;
  if (inst.selmer_t) {
    if (!s) throw Error(ErrorCode::Precondition, "selmer_t needs a ranks table to compute e_n");
    report["selmer_gcd"] = ideal_json(selmer_gcd(inst.p, s->gs.e, *inst.selmer_t));
  }
  report["accepted"] = rep.accepted;
  emit(report, opt, out);
  return rep.accepted ? kSuccess : kValidationFailure;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  OracleSuiteOptions so;
  so.max_order = opt.max_order;
  Json checks = Json::array();
  bool ok = true;
  for (const auto& c : run_oracle_suite(so)) {
    checks.push_back({{"name", c.name}, {"pass", c.pass()}, {"cases", c.cases}, {"failures", c.failures},
                      {"first_failure", c.first_failure}});
    ok = ok && c.pass();
  }
  Json report;
  report["command"] = "verify-oracles";
  report["max_order"] = opt.max_order;
  report["checks"] = checks;
  report["all_pass"] = ok;
  emit(report, opt, out);
  return ok ? kSuccess : kValidationFailure;
}

int cmd_fetch(const Options& opt, std::ostream& out) {
  const FetchResult r = fetch_curve(client_config(opt), opt.label);
  Json ap = Json::object();
  for (auto [ell, a] : r.curve.ap) ap[std::to_string(ell)] = a;
  Json report;
  report["command"] = "fetch";
  report["label"] = r.curve.label;
  report["conductor"] = r.curve.conductor ? Json(*r.curve.conductor) : Json();
  report["rank"] = r.curve.rank ? Json(*r.curve.rank) : Json();
  report["ap"] = ap;
  report["provenance"] = to_string(r.provenance);
  emit(report, opt, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure of fine and plus/minus Mordell-Weil groups over Z_p-extensions", "iwasawa"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_option("--input", opt.input, "instance JSON file");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--offline", opt.offline, "never touch the network");
  app.add_option("--cache-dir", opt.cache_dir, "LMFDB record cache directory");
  app.add_option("--max-level", opt.max_level, "truncate rank rows above this level");
  app.add_flag("--allow-repeated-primes", opt.allow_repeated_primes, "accept groups with repeated primes");

  app.add_subcommand("reps", "enumerate the rational irreps W_alpha and their dimensions");
  app.add_subcommand("check", "hypotheses report");
  app.add_subcommand("fine", "characteristic ideal of the dual fine Mordell-Weil group");
  app.add_subcommand("pm", "plus/minus Mordell-Weil structure (supersingular p)");
  auto* eq = app.add_subcommand("equivariant", "Lambda[G] decompositions");
  eq->add_option("--sign", opt.sign, "plus or minus; omitted for the fine decomposition")
      ->check(CLI::IsMember({"plus", "minus", "+", "-"}));
  app.add_subcommand("greenberg", "compare with Greenberg's target ideal");
  app.add_subcommand("kp", "compare with the Kurihara-Pollack target ideal");
  app.add_subcommand("selmer-validate", "check a proposed Selmer shape");
  auto* vo = app.add_subcommand("verify-oracles", "run the reference computations against the fast paths");
  vo->add_option("--max-order", opt.max_order, "largest group order in the fixed-space sweep")
      ->check(CLI::Range(std::uint64_t{1}, GroupAlgebraModel::kMaxOrder));
  auto* fe = app.add_subcommand("fetch", "fetch a curve record (cache, fixtures, then LMFDB)");
  fe->add_option("label", opt.label, "Cremona or LMFDB curve label")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "reps") return cmd_reps(opt, out);
    if (name == "check") return cmd_check(opt, out);
    if (name == "fine") return cmd_fine(opt, out);
    if (name == "pm") return cmd_pm(opt, out);
    if (name == "equivariant") return cmd_equivariant(opt, out);
    if (name == "greenberg") return cmd_greenberg(opt, out);
    if (name == "kp") return cmd_kp(opt, out);
    if (name == "selmer-validate") return cmd_selmer(opt, out);
    if (name == "verify-oracles") return cmd_verify(opt, out);
    if (name == "fetch") return cmd_fetch(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  err << "usage error: unknown subcommand " << name << "\n";
  return kUsageError;
}

}  // namespace iwasawa::cli
