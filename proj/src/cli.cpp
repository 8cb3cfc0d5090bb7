#include "lincomb/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lincomb/analytic.hpp"
#include "lincomb/arith.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/exponents.hpp"
#include "lincomb/factor.hpp"
#include "lincomb/families.hpp"
#include "lincomb/poly.hpp"
#include "lincomb/witness.hpp"

namespace lincomb::cli {

using json = nlohmann::ordered_json;

unsigned default_precision() {
  if (const char* env = std::getenv("LINCOMB_PRECISION")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 32 && v <= 1u << 16) return static_cast<unsigned>(v);
  }
  return 128;
}

namespace {

struct Flags {
  std::string format;
  std::string output;
  std::uint64_t seed = 0;
  unsigned precision = 128;

  std::string kind = "S", P, Q, counterexample;
  int n = 0;
  double H = 0, delta = 0.5, epsilon = 0.1;
  unsigned threads = 0;
  bool proximity = false, no_hypotheses = false;

  std::string xi, X = "1000", variant = "any";

  bool table = false;
  std::string formula;
  std::vector<std::string> fargs;
};

json config_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["seed"] = c.seed;
  j["output"] = c.output;
  j["format"] = c.format;
  j["precision"] = c.precision;
  json f = json::object();
  for (const auto& [k, v] : c.flags) f[k] = v;
  j["flags"] = f;
  return j;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json poly_json(const IntPolynomial& p) { return json::parse(to_json_text(p)); }

json disk_json(const RootDisk& d) {
  return {{"re", to_decimal(d.re, 30)}, {"im", to_decimal(d.im, 30)}, {"radius", to_decimal(d.radius, 6)}};
}

json interval_json(const QInterval& i) { return {{"lo", to_decimal(i.lo, 20)}, {"hi", to_decimal(i.hi, 20)}}; }

// Writes either a JSON document {schema_version, config, result} or a CSV
// body preceded by commented schema and config lines.
class Emitter {
 public:
  Emitter(const RunConfig& c, std::ostream& out) : c_(c), out_(out) {}

  void json_result(const json& result) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = config_json(c_);
    doc["result"] = result;
    write(doc.dump(2) + "\n");
  }

  void csv(const std::string& body) {
    std::string text = "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
    text += "# config=" + config_json(c_).dump() + "\n";
    text += body;
    write(text);
  }

 private:
  void write(const std::string& text) {
    if (c_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(c_.output, std::ios::binary);
    if (!f) throw PreconditionError("cannot open output file " + c_.output);
    f << text;
  }

  const RunConfig& c_;
  std::ostream& out_;
};

IntPolynomial need_poly(const std::string& text, const char* name) {
  if (text.empty()) throw PreconditionError(std::string("missing --") + name);
  return from_json_text(text);
}

int cmd_census(const Flags& f, RunConfig& c, std::ostream& out) {
  FamilySpec spec;
  std::optional<CounterexampleFamily> cx;
  if (!f.counterexample.empty()) {
    if (!(f.H > 1)) throw PreconditionError("census: --H must exceed 1");
    cx = counterexample_family(parse_counterexample(f.counterexample), f.H, f.delta, f.n > 0 ? f.n : 2);
    spec = cx->spec;
  } else if (!f.P.empty() || !f.Q.empty()) {
    spec.kind = parse_kind(f.kind);
    spec.P = need_poly(f.P, "P");
    spec.Q = need_poly(f.Q, "Q");
    spec.n = f.n > 0 ? f.n : spec.P.degree();
    spec.delta = f.delta;
    spec.H = f.H > 0 ? f.H : std::max({2.0, height(spec.P).get_d(), height(spec.Q).get_d()});
    spec.hypotheses = !f.no_hypotheses;
    spec.label = "user";
  } else {
    if (f.n < 1 || !(f.H >= 2)) throw PreconditionError("census: random instances need --n and --H");
    spec = random_spec(parse_kind(f.kind), f.n, static_cast<long>(f.H), f.delta, f.seed);
    spec.hypotheses = !f.no_hypotheses;
  }
  spec.epsilon = f.epsilon;
  spec.seed = f.seed;
  CensusOptions opt;
  opt.threads = f.threads;
  opt.proximity = f.proximity;
  opt.precision = c.precision;
  const CensusReport rep = census(spec, opt);
  Emitter em(c, out);
  if (c.format == "csv") {
    em.csv(census_csv(rep));
  } else {
    json r = json::parse(census_json(rep));
    if (cx) {
      json pred = json::array();
      for (const auto& i : cx->predicted()) {
        if (spec.kind == FamilyKind::M)
          pred.push_back({i.l1, i.l2});
        else
          pred.push_back(i.l1);
      }
      r["predicted_reducible"] = pred;
    }
    em.json_result(r);
  }
  return kOk;
}

int cmd_szegedy(const Flags& f, RunConfig& c, std::ostream& out) {
  const IntPolynomial P = need_poly(f.P, "P");
  const SzegedyResult s = szegedy_shift(P);
  json r;
  r["P"] = poly_json(P);
  r["b"] = s.b.get_str();
  r["budget"] = s.budget;
  r["ratio"] = std::fabs(s.b.get_d()) / s.budget;
  r["scanned"] = s.scanned;
  r["gyory_log_bound"] = num(gyory_log_bound(3, omega(P.leading())));
  r["certificate"] = json::parse(to_json_text(s.certificate));
  Emitter em(c, out);
  if (c.format == "csv")
    em.csv("b,budget,ratio,scanned\n" + s.b.get_str() + "," + fmt_double(s.budget) + "," +
           fmt_double(std::fabs(s.b.get_d()) / s.budget) + "," + std::to_string(s.scanned) + "\n");
  else
    em.json_result(r);
  return kOk;
}

int cmd_factor(const Flags& f, RunConfig& c, std::ostream& out) {
  const IntPolynomial P = need_poly(f.P, "P");
  const Factorization fac = factor(P);
  Emitter em(c, out);
  if (c.format == "csv") {
    std::string body = "poly,mult\n";
    for (const auto& fp : fac.factors) body += "\"" + fp.poly.to_string() + "\"," + std::to_string(fp.mult) + "\n";
    em.csv(body);
  } else {
    em.json_result(json::parse(to_json_text(fac)));
  }
  return kOk;
}

int cmd_roots(const Flags& f, RunConfig& c, std::ostream& out) {
  const IntPolynomial P = need_poly(f.P, "P");
  const RootSet rs = roots(P, c.precision);
  Emitter em(c, out);
  if (c.format == "csv") {
    std::string body = "re,im,radius\n";
    for (const auto& d : rs.roots) body += to_decimal(d.re, 30) + "," + to_decimal(d.im, 30) + "," + to_decimal(d.radius, 6) + "\n";
    em.csv(body);
  } else {
    em.json_result(json::parse(to_json_text(rs)));
  }
  return rs.degraded ? kIndeterminate : kOk;
}

int cmd_gap(const Flags& f, RunConfig& c, std::ostream& out) {
  const IntPolynomial P = need_poly(f.P, "P"), Q = need_poly(f.Q, "Q");
  const RootGap g = min_root_gap(P, Q, c.precision);
  const double H = f.H > 0 ? f.H : std::max({2.0, height(P).get_d(), height(Q).get_d()});
  const int n = f.n > 0 ? f.n : std::max(P.degree(), Q.degree());
  json r;
  r["gap"] = interval_json(g.gap);
  r["alpha"] = disk_json(g.alpha);
  r["beta"] = disk_json(g.beta);
  r["H"] = H;
  r["n"] = n;
  r["epsilon"] = f.epsilon;
  bool any_decided = false, any = false;
  if (n >= 2) {
    const ProximityThresholds th = proximity_thresholds(n);
    r["theta"] = th.theta;
    const Verdict vt = gap_at_most(g.gap, H, th.theta + f.epsilon);
    r["theta_condition"] = to_string(vt);
    any_decided = vt != Verdict::indeterminate;
    // kappa only constrains n >= 4
    if (n >= 4) {
      r["kappa"] = th.kappa;
      const Verdict vk = gap_at_most(g.gap, H, th.kappa + f.epsilon);
      r["kappa_condition"] = to_string(vk);
      any_decided = any_decided || vk != Verdict::indeterminate;
    } else {
      r["kappa"] = nullptr;
      r["kappa_condition"] = nullptr;
    }
    any = true;
  }
  Emitter em(c, out);
  if (c.format == "csv")
    em.csv("gap_lo,gap_hi\n" + to_decimal(g.gap.lo, 20) + "," + to_decimal(g.gap.hi, 20) + "\n");
  else
    em.json_result(r);
  return any && !any_decided ? kIndeterminate : kOk;
}

int cmd_exponent(const Flags& f, RunConfig& c, std::ostream& out) {
  if (f.xi.empty()) throw PreconditionError("missing --xi");
  if (f.n < 1) throw PreconditionError("missing --n");
  const RationalWitness xi = parse_witness(f.xi);
  mpz_class X;
  if (X.set_str(f.X, 10) != 0) throw PreconditionError("bad --X");
  const ExponentEstimate e = f.variant == "lambda" ? estimate_lambda(xi, f.n, X)
                                                   : estimate_w(xi, f.n, X, parse_variant(f.variant));
  json r;
  r["kind"] = e.kind;
  r["variant"] = f.variant;
  r["n"] = e.n;
  r["X"] = e.X.get_str();
  r["value"] = num(e.value);
  r["attained"] = interval_json(e.attained);
  if (e.witness_poly)
    r["witness"] = poly_json(*e.witness_poly);
  else
    r["witness"] = e.witness_x.get_str();
  r["box"] = e.box;
  r["examined"] = e.examined;
  r["indeterminate"] = e.indeterminate;
  r["xi"] = xi.description;
  Emitter em(c, out);
  if (c.format == "csv")
    em.csv("kind,n,X,value,examined,indeterminate\n" + e.kind + "," + std::to_string(e.n) + "," + e.X.get_str() + "," +
           fmt_double(e.value) + "," + std::to_string(e.examined) + "," + (e.indeterminate ? "1" : "0") + "\n");
  else
    em.json_result(r);
  return e.indeterminate ? kIndeterminate : kOk;
}

double arg_d(const std::vector<std::string>& a, std::size_t i) {
  if (i >= a.size()) throw PreconditionError("formula needs more --args");
  try {
    return std::stod(a[i]);
  } catch (const std::exception&) {
    throw PreconditionError("bad numeric argument " + a[i]);
  }
}

int arg_i(const std::vector<std::string>& a, std::size_t i) {
  const double v = arg_d(a, i);
  if (v != std::floor(v)) throw PreconditionError("integer argument expected: " + a[i]);
  return static_cast<int>(v);
}

mpz_class arg_z(const std::vector<std::string>& a, std::size_t i) {
  if (i >= a.size()) throw PreconditionError("formula needs more --args");
  mpz_class z;
  if (z.set_str(a[i], 10) != 0) throw PreconditionError("integer argument expected: " + a[i]);
  return z;
}

int cmd_bounds(const Flags& f, RunConfig& c, std::ostream& out) {
  Emitter em(c, out);
  if (f.table) {
    const auto rows = comparison_table();
    if (c.format == "csv") {
      std::string body = "n,bound,stored_bound,bt_pr_roy,tsishchanka\n";
      for (const auto& r : rows)
        body += std::to_string(r.n) + "," + fmt_double(r.bound) + "," + fmt_double(r.stored_bound) + "," +
                fmt_double(r.bt_pr_roy) + "," + fmt_double(r.tsishchanka) + "\n";
      em.csv(body);
    } else {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"bound", r.bound},
                       {"stored_bound", r.stored_bound},
                       {"bt_pr_roy", r.bt_pr_roy},
                       {"tsishchanka", r.tsishchanka}});
      em.json_result({{"table", arr}});
    }
    return kOk;
  }
  if (f.formula.empty()) throw PreconditionError("bounds: give --table or --formula");
  const auto& a = f.fargs;
  json r;
  r["formula"] = f.formula;
  r["args"] = a;
  const std::string& name = f.formula;
  if (name == "wirsing") {
    r["value"] = wirsing_exact_bound(arg_i(a, 0));
  } else if (name == "theorem12") {
    r["value"] = theorem12_bound(arg_d(a, 0), arg_i(a, 1));
  } else if (name == "ds") {
    r["value"] = ds_bound(arg_d(a, 0));
  } else if (name == "german") {
    r["value"] = german_transfer(arg_d(a, 0), arg_i(a, 1));
  } else if (name == "jm") {
    r["value"] = jm_bound(arg_d(a, 0));
  } else if (name == "pr") {
    r["value"] = pr_asymptotic_bound(arg_i(a, 0));
  } else if (name == "equilibrium") {
    const Equilibrium e = equilibrium(arg_i(a, 0));
    r["value"] = e.value;
    r["w_hat"] = e.w_hat;
  } else if (name == "gamma") {
    const GammaBounds g = gamma_bounds({arg_z(a, 0), arg_z(a, 1), arg_d(a, 2)});
    r["value"] = g.gamma;
    r["gamma_prime"] = num(g.gamma_prime);
  } else if (name == "gyory") {
    r["value"] = num(gyory_log_bound(arg_i(a, 0), static_cast<unsigned>(arg_i(a, 1))));
  } else {
    throw PreconditionError("unknown formula " + name +
                            " (wirsing, theorem12, ds, german, jm, pr, equilibrium, gamma, gyory)");
  }
  if (c.format == "csv")
    em.csv("formula,value\n" + name + "," + (r["value"].is_null() ? std::string("inf") : fmt_double(r["value"].get<double>())) + "\n");
  else
    em.json_result(r);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility of integral linear combinations and approximation exponents", "lincomb"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  Flags f;
  f.precision = default_precision();

  auto common = [&f](CLI::App* s) {
    s->add_option("--out", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("-o,--output", f.output, "output file (default: standard output)");
    s->add_option("--seed", f.seed, "random seed");
    s->add_option("--precision", f.precision, "working precision in bits")->check(CLI::Range(32u, 65536u));
  };

  auto* census = app.add_subcommand("census", "reducibility census of a combination family");
  common(census);
  census->add_option("--kind", f.kind, "S, R or M")->check(CLI::IsMember({"S", "R", "M"}));
  census->add_option("--P", f.P, "P as a JSON array of coefficients");
  census->add_option("--Q", f.Q, "Q as a JSON array of coefficients");
  census->add_option("--n", f.n, "target degree");
  census->add_option("--H", f.H, "height budget");
  census->add_option("--delta", f.delta, "index range exponent");
  census->add_option("--epsilon", f.epsilon, "slack for the root proximity flag");
  census->add_option("--counterexample", f.counterexample, "S_quadratic, R_shift or M_powers");
  census->add_option("--threads", f.threads, "worker threads (0: all cores)");
  census->add_flag("--proximity", f.proximity, "attach the root proximity verdict");
  census->add_flag("--no-hypotheses", f.no_hypotheses, "skip the deg P = n, P(0) = 0, deg Q < n checks");

  auto* szegedy = app.add_subcommand("szegedy", "smallest irreducible shift of a cubic");
  common(szegedy);
  szegedy->add_option("--P", f.P, "cubic as a JSON array")->required();

  auto* fac = app.add_subcommand("factor", "factorization over the integers");
  common(fac);
  fac->add_option("--P", f.P, "polynomial as a JSON array")->required();

  auto* rts = app.add_subcommand("roots", "certified complex roots");
  common(rts);
  rts->add_option("--P", f.P, "polynomial as a JSON array")->required();

  auto* gap = app.add_subcommand("gap", "minimal root distance and proximity verdicts");
  common(gap);
  gap->add_option("--P", f.P, "first polynomial")->required();
  gap->add_option("--Q", f.Q, "second polynomial")->required();
  gap->add_option("--H", f.H, "height parameter (default: max height)");
  gap->add_option("--n", f.n, "degree parameter (default: max degree)");
  gap->add_option("--epsilon", f.epsilon, "exponent slack");

  auto* expo = app.add_subcommand("exponent", "brute-force exponent estimate");
  common(expo);
  expo->add_option("--xi", f.xi, "p/q, decimal, x+-r, liouville:b,k or cf:[a0,...]")->required();
  expo->add_option("--n", f.n, "degree")->required();
  expo->add_option("--X", f.X, "height cap");
  expo->add_option("--variant", f.variant, "any, exact_irreducible, monic, monic_unit or lambda")
      ->check(CLI::IsMember({"any", "exact_irreducible", "monic", "monic_unit", "lambda"}));

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds");
  common(bounds);
  bounds->add_flag("--table", f.table, "comparison table for n = 3..7");
  bounds->add_option("--formula", f.formula, "formula name");
  bounds->add_option("--args", f.fargs, "formula arguments")->delimiter(',');

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig c;
  c.subcommand = sub->get_name();
  c.seed = f.seed;
  c.output = f.output;
  c.precision = f.precision;
  c.format = !f.format.empty() ? f.format : (c.subcommand == "census" ? "csv" : "json");
  for (const CLI::Option* o : sub->get_options()) {
    const std::string name = o->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h,--help" || o->get_lnames().empty()) continue;
    const std::string key = o->get_lnames().front();
    if (key == "help" || key == "out" || key == "output" || key == "seed" || key == "precision") continue;
    std::string v;
    if (o->count() > 0) {
      const auto& res = o->results();
      for (std::size_t i = 0; i < res.size(); ++i) v += (i ? "," : "") + res[i];
      if (o->get_expected_max() == 0) v = "true";
    } else {
      v = o->get_expected_max() == 0 ? "false" : o->get_default_str();
      if (v == "{}") v.clear();
    }
    c.flags[key] = v;
  }

  try {
    if (c.subcommand == "census") return cmd_census(f, c, out);
    if (c.subcommand == "szegedy") return cmd_szegedy(f, c, out);
    if (c.subcommand == "factor") return cmd_factor(f, c, out);
    if (c.subcommand == "roots") return cmd_roots(f, c, out);
    if (c.subcommand == "gap") return cmd_gap(f, c, out);
    if (c.subcommand == "exponent") return cmd_exponent(f, c, out);
    if (c.subcommand == "bounds") return cmd_bounds(f, c, out);
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kPrecondition;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  }
  err << "unknown subcommand\n";
  return kUsage;
}

}  // namespace lincomb::cli
