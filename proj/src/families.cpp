#include "lincomb/families.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lincomb/analytic.hpp"

namespace lincomb {

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::S:
      return "S";
    case FamilyKind::R:
      return "R";
    case FamilyKind::M:
      return "M";
  }
  return "S";
}

FamilyKind parse_kind(const std::string& name) {
  if (name == "S") return FamilyKind::S;
  if (name == "R") return FamilyKind::R;
  if (name == "M") return FamilyKind::M;
  throw PreconditionError("unknown family kind: " + name);
}

std::string to_string(const FamilyIndex& i, FamilyKind k) {
  if (k == FamilyKind::M) return "(" + std::to_string(i.l1) + "," + std::to_string(i.l2) + ")";
  return std::to_string(i.l1);
}

std::uint64_t index_bound(double H, double delta) {
  const double x = std::pow(H, delta);
  if (!(x < 1e15)) throw LimitError("index range H^delta too large");
  auto k = static_cast<std::uint64_t>(std::floor(x));
  // pow may land just below an exact integer power
  if (static_cast<double>(k + 1) <= x * (1 + 1e-12)) ++k;
  return k;
}

namespace {

bool is_small_prime(std::uint64_t x) { return is_prime(mpz_class(static_cast<unsigned long>(x))); }

IntPolynomial shifted_P(const FamilySpec& s) {
  return IntPolynomial::monomial(1, static_cast<std::size_t>(s.n - s.P.degree())) * s.P;
}

IntPolynomial member_unchecked(const FamilySpec& s, const FamilyIndex& i) {
  const mpz_class l1(static_cast<unsigned long>(i.l1)), l2(static_cast<unsigned long>(i.l2));
  switch (s.kind) {
    case FamilyKind::S:
      return l1 * shifted_P(s) + s.Q;
    case FamilyKind::R:
      return shifted_P(s) + l1 * s.Q;
    case FamilyKind::M:
      return l1 * s.P + l2 * s.Q;
  }
  return {};
}

void check_index(const FamilySpec& s, const FamilyIndex& i) {
  const std::uint64_t bound = index_bound(s.H, s.delta);
  if (s.kind == FamilyKind::M) {
    if (i.l1 < 1 || i.l1 >= i.l2 || i.l2 > bound || std::gcd(i.l1, i.l2) != 1)
      throw PreconditionError("index " + to_string(i, s.kind) + " outside the coprime pair range");
  } else {
    if (i.l1 < 1 || i.l1 > bound || !is_small_prime(i.l1) || i.l2 != 0)
      throw PreconditionError("index " + to_string(i, s.kind) + " is not a prime up to H^delta");
  }
}

}  // namespace

void validate(const FamilySpec& s) {
  if (s.P.is_zero() || s.Q.is_zero()) throw PreconditionError("P and Q must be nonzero");
  if (s.n < 1 || s.n < s.P.degree()) throw PreconditionError("n must be >= max(1, deg P)");
  if (!(s.delta > 0 && s.delta <= 1)) throw PreconditionError("delta must lie in (0, 1]");
  if (!(s.H > 1)) throw PreconditionError("H must exceed 1");
  const double hp = height(s.P).get_d(), hq = height(s.Q).get_d();
  if (s.H < std::max(hp, hq)) throw PreconditionError("H must be at least max(H(P), H(Q))");
  if (!coprime(s.P, s.Q)) throw PreconditionError("P and Q share a nonconstant factor");
  if (s.hypotheses && s.kind != FamilyKind::M) {
    if (s.P.degree() != s.n) throw PreconditionError("hypotheses: deg P must equal n");
    if (s.P[0] != 0) throw PreconditionError("hypotheses: P(0) must vanish");
    if (s.Q.degree() >= s.n) throw PreconditionError("hypotheses: deg Q must be below n");
  }
}

std::vector<FamilyIndex> indices(const FamilySpec& s) {
  const std::uint64_t bound = index_bound(s.H, s.delta);
  std::vector<FamilyIndex> out;
  if (s.kind == FamilyKind::M) {
    if (bound > 20'000) throw LimitError("M census over more than 2*10^8 pairs");
    for (std::uint64_t a = 1; a <= bound; ++a)
      for (std::uint64_t b = a + 1; b <= bound; ++b)
        if (std::gcd(a, b) == 1) out.push_back({a, b});
    return out;
  }
  for (std::uint64_t p : primes_up_to(bound)) out.push_back({p, 0});
  return out;
}

IntPolynomial build_member(const FamilySpec& spec, const FamilyIndex& index) {
  check_index(spec, index);
  if (!coprime(spec.P, spec.Q)) throw PreconditionError("P and Q share a nonconstant factor");
  if (spec.n < spec.P.degree()) throw PreconditionError("n must be >= deg P");
  return member_unchecked(spec, index);
}

CensusReport census(const FamilySpec& spec, const CensusOptions& opt) {
  validate(spec);
  CensusReport rep;
  rep.spec = spec;
  const auto idx = indices(spec);
  rep.total_indices = idx.size();
  rep.rows.resize(idx.size());
  std::vector<std::optional<Factorization>> facs(idx.size());
  std::vector<std::exception_ptr> errs(idx.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < idx.size();) {
      try {
        CensusRow& row = rep.rows[i];
        row.index = idx[i];
        const IntPolynomial m = member_unchecked(spec, idx[i]);
        row.degree = m.degree();
        if (row.degree < 1) continue;
        if (is_irreducible(m)) {
          row.factor_degrees = {row.degree};
        } else {
          row.reducible = true;
          facs[i] = factor(m);
          row.factor_degrees = facs[i]->factor_degrees();
        }
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, idx.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errs)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < idx.size(); ++i) {
    const CensusRow& row = rep.rows[i];
    if (row.degree < spec.n) ++rep.degree_drops;
    if (row.reducible) rep.reducible.emplace_back(row.index, *facs[i]);
    if (!row.reducible && row.degree >= 1 && !rep.smallest_irreducible_index) rep.smallest_irreducible_index = row.index;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.gamma = rep.gamma_prime = nan;
  if (spec.Q[0] != 0) {
    const GammaBounds g = gamma_bounds({spec.P.leading(), spec.Q[0], spec.H});
    rep.gamma = g.gamma;
    rep.gamma_prime = g.gamma_prime;
  }
  const double denom = spec.kind == FamilyKind::M ? rep.gamma : rep.gamma_prime;
  rep.ratio = static_cast<double>(rep.reducible.size()) / denom;

  if (opt.proximity) {
    const IntPolynomial PP = shifted_P(spec);
    const bool sr = spec.kind != FamilyKind::M;
    if (PP.degree() >= 1 && spec.Q.degree() >= 1 && (sr ? spec.n >= 4 : spec.n >= 2)) {
      const ProximityThresholds th = proximity_thresholds(spec.n);
      const double e = (sr ? th.kappa : th.theta) + spec.epsilon;
      rep.proximity = gap_at_most(min_root_gap(PP, spec.Q, opt.precision).gap, spec.H, e);
    }
  }
  return rep;
}

std::vector<IntPolynomial> linear_factor_divisibility_filter(const FamilySpec& spec, const FamilyIndex& index) {
  if (spec.kind != FamilyKind::S) throw PreconditionError("divisibility filter applies to kind S");
  if (spec.P[0] != 0) throw PreconditionError("divisibility filter requires P(0) = 0");
  const IntPolynomial m = build_member(spec, index);
  const mpz_class d0 = m[0];
  if (d0 == 0) throw PreconditionError("divisibility filter requires Q(0) != 0");
  if (m.degree() < 1) return {};
  std::vector<IntPolynomial> out;
  for (const auto& q : divisors(m.leading())) {
    for (const auto& p : divisors(d0)) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int s : {1, -1}) out.push_back(IntPolynomial(std::vector<mpz_class>{-s * p, q}));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SzegedyResult szegedy_shift(const IntPolynomial& P) {
  if (P.degree() != 3) throw PreconditionError("szegedy_shift: P must be cubic");
  SzegedyResult r;
  const double lh = std::log(std::max(height(P).get_d(), 3.0));
  r.budget = tau(P.leading()).get_d() * lh * lh;
  constexpr std::uint64_t cap = 1'000'000;
  for (std::uint64_t k = 0; k < cap; ++k) {
    // 0, 1, -1, 2, -2, ...
    const long mag = static_cast<long>((k + 1) / 2);
    const mpz_class b = (k % 2 == 1) ? mpz_class(mag) : mpz_class(-mag);
    const IntPolynomial shifted = P + IntPolynomial::constant(b);
    r.scanned = k + 1;
    if (is_irreducible(shifted)) {
      r.b = b;
      r.certificate = factor(shifted);
      return r;
    }
  }
  throw LimitError("szegedy_shift: no irreducible shift within 10^6 candidates");
}

const char* to_string(Counterexample c) {
  switch (c) {
    case Counterexample::S_quadratic:
      return "S_quadratic";
    case Counterexample::R_shift:
      return "R_shift";
    case Counterexample::M_powers:
      return "M_powers";
  }
  return "S_quadratic";
}

Counterexample parse_counterexample(const std::string& name) {
  for (auto c : {Counterexample::S_quadratic, Counterexample::R_shift, Counterexample::M_powers})
    if (name == to_string(c)) return c;
  throw PreconditionError("unknown counterexample family: " + name);
}

CounterexampleFamily counterexample_family(Counterexample which, double H, double delta, int n) {
  if (!(H > 1) || !(delta > 0 && delta <= 1)) throw PreconditionError("counterexample_family: need H > 1, delta in (0,1]");
  CounterexampleFamily out;
  FamilySpec& s = out.spec;
  s.hypotheses = false;
  s.delta = delta;
  s.label = to_string(which);
  const std::uint64_t bound = index_bound(H, delta);
  auto square_plus_one = [bound] {
    std::vector<FamilyIndex> v;
    for (std::uint64_t N = 1; N * N + 1 <= bound; ++N)
      if (is_small_prime(N * N + 1)) v.push_back({N * N + 1, 0});
    return v;
  };
  switch (which) {
    case Counterexample::S_quadratic:
      s.kind = FamilyKind::S;
      s.P = {0, 0, 1};
      s.Q = {-1, 0, -1};
      s.n = 2;
      out.predicted = square_plus_one;
      break;
    case Counterexample::R_shift:
      s.kind = FamilyKind::R;
      s.P = {1, 0, 1};
      s.Q = {-1};
      s.n = 2;
      out.predicted = square_plus_one;
      break;
    case Counterexample::M_powers: {
      if (n < 1) throw PreconditionError("M_powers needs n >= 1");
      s.kind = FamilyKind::M;
      s.P = IntPolynomial::monomial(1, static_cast<std::size_t>(n));
      s.Q = {-1};
      s.n = n;
      out.predicted = [bound, n] {
        std::vector<FamilyIndex> v;
        auto pw = [n](std::uint64_t x) {
          std::uint64_t r = 1;
          for (int i = 0; i < n; ++i) {
            if (r > UINT64_MAX / x) return UINT64_MAX;
            r *= x;
          }
          return r;
        };
        for (std::uint64_t a = 1; pw(a) <= bound; ++a)
          for (std::uint64_t b = a + 1; pw(b) <= bound; ++b)
            if (std::gcd(a, b) == 1) v.push_back({pw(a), pw(b)});
        std::sort(v.begin(), v.end(), [](const FamilyIndex& x, const FamilyIndex& y) {
          return x.l1 != y.l1 ? x.l1 < y.l1 : x.l2 < y.l2;
        });
        return v;
      };
      break;
    }
  }
  s.H = std::max(H, std::max(height(s.P).get_d(), height(s.Q).get_d()));
  return out;
}

bool pairwise_coprime_check(const FamilySpec& spec, const std::vector<FamilyIndex>& idx) {
  if (spec.kind == FamilyKind::M) {
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const mpz_class a = mpz_class(static_cast<unsigned long>(idx[i].l1)) * static_cast<unsigned long>(idx[j].l2);
        const mpz_class b = mpz_class(static_cast<unsigned long>(idx[i].l2)) * static_cast<unsigned long>(idx[j].l1);
        if (a == b) throw PreconditionError("pairwise_coprime_check: index pairs are linearly dependent");
      }
  }
  std::vector<IntPolynomial> members;
  for (const auto& i : idx) members.push_back(member_unchecked(spec, i));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!coprime(members[i], members[j])) return false;
  return true;
}

namespace {

mpz_class draw(std::mt19937_64& rng, long H) {
  std::uniform_int_distribution<long> d(-H, H);
  return d(rng);
}

mpz_class draw_nonzero(std::mt19937_64& rng, long H) {
  while (true) {
    mpz_class v = draw(rng, H);
    if (v != 0) return v;
  }
}

}  // namespace

IntPolynomial random_polynomial(int n, long H, std::uint64_t seed) {
  if (n < 0 || H < 1) throw PreconditionError("random_polynomial: need n >= 0, H >= 1");
  std::mt19937_64 rng(seed);
  std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = draw(rng, H);
  c[static_cast<std::size_t>(n)] = draw_nonzero(rng, H);
  return IntPolynomial(std::move(c));
}

FamilySpec random_spec(FamilyKind kind, int n, long H, double delta, std::uint64_t seed) {
  if (n < 1 || H < 1) throw PreconditionError("random_spec: need n >= 1, H >= 1");
  std::mt19937_64 rng(seed);
  FamilySpec s;
  s.kind = kind;
  s.n = n;
  s.delta = delta;
  s.H = static_cast<double>(std::max(H, 2L));
  s.seed = seed;
  s.label = "random";
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<mpz_class> p(static_cast<std::size_t>(n + 1)), q(static_cast<std::size_t>(n));
    p[0] = 0;
    for (int i = 1; i < n; ++i) p[static_cast<std::size_t>(i)] = draw(rng, H);
    p[static_cast<std::size_t>(n)] = draw_nonzero(rng, H);
    q[0] = draw_nonzero(rng, H);
    for (int i = 1; i < n; ++i) q[static_cast<std::size_t>(i)] = draw(rng, H);
    s.P = IntPolynomial(std::move(p));
    s.Q = IntPolynomial(std::move(q));
    if (coprime(s.P, s.Q)) return s;
  }
  throw LimitError("random_spec: rejection sampling did not find a coprime pair");
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  const bool m = r.spec.kind == FamilyKind::M;
  os << (m ? "l1,l2" : "l") << ",degree,reducible,factor_degrees\n";
  for (const auto& row : r.rows) {
    os << row.index.l1;
    if (m) os << ',' << row.index.l2;
    os << ',' << row.degree << ',' << (row.reducible ? 1 : 0) << ',';
    for (std::size_t i = 0; i < row.factor_degrees.size(); ++i) os << (i ? " " : "") << row.factor_degrees[i];
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::ordered_json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

nlohmann::ordered_json index_json(const FamilyIndex& i, FamilyKind k) {
  if (k == FamilyKind::M) return nlohmann::ordered_json::array({i.l1, i.l2});
  return i.l1;
}

}  // namespace

std::string census_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  const FamilySpec& s = r.spec;
  j["kind"] = to_string(s.kind);
  j["label"] = s.label;
  j["P"] = nlohmann::ordered_json::parse(to_json_text(s.P));
  j["Q"] = nlohmann::ordered_json::parse(to_json_text(s.Q));
  j["n"] = s.n;
  j["delta"] = s.delta;
  j["H"] = s.H;
  j["hypotheses"] = s.hypotheses;
  j["epsilon"] = s.epsilon;
  j["seed"] = s.seed;
  j["total_indices"] = r.total_indices;
  j["reducible_count"] = r.reducible.size();
  j["gamma"] = number_or_null(r.gamma);
  j["gamma_prime"] = number_or_null(r.gamma_prime);
  j["ratio"] = number_or_null(r.ratio);
  j["smallest_irreducible_index"] =
      r.smallest_irreducible_index ? index_json(*r.smallest_irreducible_index, s.kind) : nlohmann::ordered_json(nullptr);
  j["degree_drops"] = r.degree_drops;
  j["proximity"] = r.proximity ? nlohmann::ordered_json(to_string(*r.proximity)) : nlohmann::ordered_json(nullptr);
  j["reducible"] = nlohmann::ordered_json::array();
  for (const auto& [i, f] : r.reducible)
    j["reducible"].push_back({{"index", index_json(i, s.kind)}, {"factorization", nlohmann::ordered_json::parse(to_json_text(f))}});
  return j.dump();
}

}  // namespace lincomb
