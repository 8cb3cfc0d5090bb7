#include "lincomb/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lincomb/errors.hpp"
#include "lincomb/factor.hpp"

namespace lincomb {

double wirsing_exact_bound(int n) {
  if (n < 1 || n > 7) throw PreconditionError("wirsing_exact_bound: n must lie in 1..7");
  const double d = n;
  return (d + std::sqrt(d * d + 16 * d - 8)) / 4;
}

double theorem12_bound(double w_hat, int n) {
  if (n < 1 || w_hat < n) throw PreconditionError("theorem12_bound: requires w_hat >= n >= 1");
  return 1.5 * w_hat - n + 0.5;
}

double ds_bound(double lambda_hat) {
  if (!(lambda_hat > 0) || lambda_hat > 1) throw PreconditionError("ds_bound: lambda_hat must lie in (0, 1]");
  return 1 / lambda_hat;
}

double german_transfer(double w_hat, int n) {
  if (n < 1 || w_hat < n) throw PreconditionError("german_transfer: requires w_hat >= n >= 1");
  return (w_hat - n + 1) / w_hat;
}

double jm_bound(double w_hat2) {
  if (w_hat2 < 2) throw PreconditionError("jm_bound: requires w_hat2 >= 2");
  return w_hat2 * (w_hat2 - 1);
}

double pr_asymptotic_bound(int n) {
  if (n < 4) throw PreconditionError("pr_asymptotic_bound: requires n >= 4");
  return n / 2.0 + (1 - std::log(2.0)) / 2 * std::sqrt(static_cast<double>(n)) + 1.0 / 3;
}

Equilibrium equilibrium(int n) {
  if (n < 1 || n > 7) throw PreconditionError("equilibrium: n must lie in 1..7");
  // f decreases from (n-1)/2 >= 0 at w = n to below zero at 2n + 2.
  auto f = [n](double w) { return ds_bound(german_transfer(w, n)) - theorem12_bound(w, n); };
  double lo = n, hi = 2.0 * n + 2;
  if (f(lo) <= 0) return {lo, ds_bound(german_transfer(lo, n))};
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  const double w = lo + (hi - lo) / 2;
  return {w, ds_bound(german_transfer(w, n))};
}

std::vector<ComparisonRow> comparison_table() {
  constexpr std::array<double, 5> thm{2.5, 3.1213, 3.7122, 4.2839, 4.8423};
  constexpr std::array<double, 5> bt{2.3557, 2.9667, 3.5615, 4.0916, 4.6457};
  constexpr std::array<double, 5> ts{2.7304, 3.4508, 4.1389, 4.7630, 5.3561};
  std::vector<ComparisonRow> rows;
  for (int n = 3; n <= 7; ++n) {
    const auto i = static_cast<std::size_t>(n - 3);
    rows.push_back({n, wirsing_exact_bound(n), thm[i], bt[i], ts[i]});
  }
  return rows;
}

RationalWitness liouville_witness(unsigned long base, unsigned terms) {
  if (base < 2) throw PreconditionError("liouville_witness: base must be >= 2");
  if (terms < 1 || terms > 7) throw PreconditionError("liouville_witness: terms must lie in 1..7");
  mpq_class sum = 0;
  unsigned long fact = 1;
  for (unsigned j = 1; j <= terms; ++j) {
    fact *= j;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), base, fact);
    sum += mpq_class(1, den);
  }
  fact *= terms + 1;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), base, fact);
  mpq_class radius(2, den);
  radius.canonicalize();
  return RationalWitness(sum, radius, "liouville:" + std::to_string(base) + "," + std::to_string(terms));
}

const char* to_string(WVariant v) {
  switch (v) {
    case WVariant::any:
      return "any";
    case WVariant::exact_irreducible:
      return "exact_irreducible";
    case WVariant::monic:
      return "monic";
    case WVariant::monic_unit:
      return "monic_unit";
  }
  return "any";
}

WVariant parse_variant(const std::string& name) {
  for (WVariant v : {WVariant::any, WVariant::exact_irreducible, WVariant::monic, WVariant::monic_unit})
    if (name == to_string(v)) return v;
  throw PreconditionError("unknown variant: " + name);
}

namespace {

constexpr double kHalfCap = 8e6;
constexpr std::size_t kCandidateCap = 2'000'000;

// One half of the coefficient box: coefficient indices [first, last], each
// ranging over an explicit list of values, enumerated in mixed radix.
struct Half {
  int first = 0, last = -1;
  std::vector<std::vector<long>> ranges;
  std::uint64_t size = 1;

  void coeffs(std::uint64_t idx, std::vector<long>& out) const {
    for (std::size_t j = 0; j < ranges.size(); ++j) {
      const auto& r = ranges[j];
      out[static_cast<std::size_t>(first) + j] = r[idx % r.size()];
      idx /= r.size();
    }
  }
};

struct Entry {
  double v;
  std::uint64_t idx;
  bool operator<(const Entry& o) const { return v < o.v || (v == o.v && idx < o.idx); }
};

std::vector<long> full_range(long X) {
  std::vector<long> r;
  r.reserve(static_cast<std::size_t>(2 * X + 1));
  for (long c = -X; c <= X; ++c) r.push_back(c);
  return r;
}

std::vector<std::vector<long>> coefficient_ranges(int n, long X, WVariant v) {
  std::vector<std::vector<long>> r(static_cast<std::size_t>(n + 1), full_range(X));
  auto& top = r[static_cast<std::size_t>(n)];
  switch (v) {
    case WVariant::any:
      break;
    case WVariant::exact_irreducible:
      top.clear();
      for (long c = 1; c <= X; ++c) top.push_back(c);  // sign of P is irrelevant
      break;
    case WVariant::monic:
      top = {1};
      break;
    case WVariant::monic_unit:
      top = {1};
      if (n >= 1) r[0] = {-1, 1};
      break;
  }
  return r;
}

bool in_class(const IntPolynomial& p, int n, WVariant v) {
  if (p.is_zero()) return false;
  if (v == WVariant::any) return true;
  return p.degree() == n && is_irreducible(p);
}

double half_value(const Half& h, std::uint64_t idx, const std::vector<double>& pw, std::vector<long>& scratch) {
  h.coeffs(idx, scratch);
  double s = 0;
  for (int i = h.last; i >= h.first; --i) s += static_cast<double>(scratch[static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(i)];
  return s;
}

IntPolynomial positive(IntPolynomial p) { return (!p.is_zero() && p.leading() < 0) ? -p : p; }

}  // namespace

ExponentEstimate estimate_w(const RationalWitness& xi, int n, const mpz_class& X, WVariant variant) {
  if (n < 1) throw PreconditionError("estimate_w: n must be >= 1");
  if (X < 2) throw PreconditionError("estimate_w: X must be >= 2");
  if (!X.fits_slong_p() || X > 100'000'000) throw LimitError("estimate_w: X too large");
  const long Xl = X.get_si();
  const auto ranges = coefficient_ranges(n, Xl, variant);

  // Balance the split point between the two halves.
  int best_k = 1;
  double best_cost = std::numeric_limits<double>::infinity(), box = 1;
  for (const auto& r : ranges) box *= static_cast<double>(r.size());
  for (int k = 1; k <= n; ++k) {
    double lo = 1;
    for (int i = 0; i < k; ++i) lo *= static_cast<double>(ranges[static_cast<std::size_t>(i)].size());
    const double cost = std::max(lo, box / lo);
    if (cost < best_cost) {
      best_cost = cost;
      best_k = k;
    }
  }
  if (best_cost > kHalfCap)
    throw LimitError("estimate_w: half box of " + std::to_string(best_cost) + " points exceeds 8e6");

  Half low, high;
  low.first = 0;
  low.last = best_k - 1;
  high.first = best_k;
  high.last = n;
  for (int i = 0; i <= n; ++i) {
    Half& h = i < best_k ? low : high;
    h.ranges.push_back(ranges[static_cast<std::size_t>(i)]);
    h.size *= ranges[static_cast<std::size_t>(i)].size();
  }

  const double a = xi.approximant.get_d();
  std::vector<double> pw(static_cast<std::size_t>(n + 1), 1.0);
  double weight = 1;
  for (int i = 1; i <= n; ++i) {
    pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * a;
    weight += std::pow(std::max(1.0, std::fabs(a)), i);
  }
  const double margin = 8.0 * (n + 2) * std::ldexp(1.0, -53) * static_cast<double>(Xl) * weight;
  const double zero_tol = 2 * margin;

  std::vector<long> scratch(static_cast<std::size_t>(n + 1), 0);
  std::vector<Entry> lows(low.size);
  for (std::uint64_t i = 0; i < low.size; ++i) lows[i] = {half_value(low, i, pw, scratch), i};
  std::sort(lows.begin(), lows.end());

  // Smallest screened value clearly away from zero.
  double m1 = std::numeric_limits<double>::infinity();
  for (std::uint64_t j = 0; j < high.size; ++j) {
    const double h = half_value(high, j, pw, scratch);
    auto above = std::upper_bound(lows.begin(), lows.end(), Entry{-h + zero_tol, UINT64_MAX});
    if (above != lows.end()) m1 = std::min(m1, std::fabs(h + above->v));
    auto below = std::lower_bound(lows.begin(), lows.end(), Entry{-h - zero_tol, 0});
    if (below != lows.begin()) m1 = std::min(m1, std::fabs(h + std::prev(below)->v));
  }

  ExponentEstimate est;
  est.kind = variant == WVariant::any ? "w" : variant == WVariant::exact_irreducible ? "w_exact"
                                            : variant == WVariant::monic           ? "w_int"
                                                                                    : "w_unit";
  est.n = n;
  est.X = X;
  est.box = box;

  double max_value = 0;
  for (int i = 0; i <= n; ++i) max_value += static_cast<double>(Xl) * std::fabs(pw[static_cast<std::size_t>(i)]);
  double t = std::isfinite(m1) ? m1 + 2 * margin : zero_tol;
  std::optional<IntPolynomial> best;
  QInterval best_iv;
  mpq_class ambiguous_hi;
  bool have_ambiguous = false;

  while (true) {
    best.reset();
    have_ambiguous = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t j = 0; j < high.size; ++j) {
      const double h = half_value(high, j, pw, scratch);
      auto it = std::lower_bound(lows.begin(), lows.end(), Entry{-h - t, 0});
      for (; it != lows.end() && it->v <= -h + t; ++it) {
        pairs.emplace_back(it->idx, j);
        if (pairs.size() > kCandidateCap) throw LimitError("estimate_w: too many candidates near zero; witness too degenerate");
      }
    }
    est.examined += pairs.size();
    for (const auto& [li, hj] : pairs) {
      low.coeffs(li, scratch);
      high.coeffs(hj, scratch);
      std::vector<mpz_class> c(scratch.begin(), scratch.end());
      IntPolynomial p(std::move(c));
      if (p.is_zero()) continue;
      const QInterval iv = evaluate_at_witness(p, xi);
      if (iv.hi == 0) continue;  // vanishes at a rational xi
      if (!in_class(p, n, variant)) continue;
      if (iv.lo == 0) {
        if (!have_ambiguous || iv.hi < ambiguous_hi) ambiguous_hi = iv.hi;
        have_ambiguous = true;
        continue;
      }
      p = positive(std::move(p));
      if (!best || iv.hi < best_iv.hi || (iv.hi == best_iv.hi && canonical_less(p, *best))) {
        best = p;
        best_iv = iv;
      }
    }
    if (best) {
      const double need = best_iv.hi.get_d() + margin;
      if (need <= t) break;
      t = need;  // one more sweep catches anything between t and the best
      continue;
    }
    if (t > max_value + margin) break;
    t *= 2;
  }

  if (!best) {
    if (have_ambiguous) throw IndeterminateError("estimate_w: every candidate interval contains zero");
    throw PreconditionError("estimate_w: the polynomial class is empty in this box");
  }
  est.witness_poly = best;
  est.attained = best_iv;
  est.indeterminate = have_ambiguous && ambiguous_hi < best_iv.hi;
  est.value = -log_abs(best_iv.hi) / log_abs(X);
  return est;
}

ExponentEstimate estimate_lambda(const RationalWitness& xi, int n, const mpz_class& X) {
  if (n < 1) throw PreconditionError("estimate_lambda: n must be >= 1");
  if (X < 2 || X > 10'000'000) throw PreconditionError("estimate_lambda: X must lie in [2, 10^7]");
  const long Xl = X.get_si();
  const mpq_class& a = xi.approximant;

  std::vector<long double> pw(static_cast<std::size_t>(n + 1), 1.0L);
  const long double ad = static_cast<long double>(a.get_d()) +
                         static_cast<long double>(mpq_class(a - mpq_class(a.get_d())).get_d());
  for (int i = 1; i <= n; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * ad;
  const long double big = std::pow(std::max(1.0L, std::fabs(ad)), static_cast<long double>(n));
  const double margin = static_cast<double>(16.0L * (n + 2) * std::ldexp(1.0L, -63) * Xl * big) + 1e-300;

  auto approx = [&](long x) {
    long double worst = 0;
    for (int i = 1; i <= n; ++i) {
      const long double y = static_cast<long double>(x) * pw[static_cast<std::size_t>(i)];
      worst = std::max(worst, std::fabs(y - std::nearbyint(y)));
    }
    return static_cast<double>(worst);
  };
  double m = std::numeric_limits<double>::infinity();
  for (long x = 1; x <= Xl; ++x) m = std::min(m, approx(x));

  // Taylor error of T^i at a with radius r.
  std::vector<mpq_class> err(static_cast<std::size_t>(n + 1), 0);
  if (xi.radius != 0) {
    const mpq_class absa = abs(a);
    for (int i = 1; i <= n; ++i) {
      mpq_class e = 0, rk = 1;
      mpz_class binom = 1;
      for (int k = 1; k <= i; ++k) {
        rk *= xi.radius;
        binom = binom * (i - k + 1) / k;
        mpq_class ak = 1;
        for (int j = 0; j < i - k; ++j) ak *= absa;
        e += binom * ak * rk;
      }
      err[static_cast<std::size_t>(i)] = e;
    }
  }
  std::vector<mpq_class> apow(static_cast<std::size_t>(n + 1), 1);
  for (int i = 1; i <= n; ++i) apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i - 1)] * a;

  ExponentEstimate est;
  est.kind = "lambda";
  est.n = n;
  est.X = X;
  est.box = static_cast<double>(Xl);
  bool have = false;
  const mpq_class half(1, 2);
  for (long x = 1; x <= Xl; ++x) {
    if (approx(x) > m + 2 * margin) continue;
    ++est.examined;
    QInterval worst{0, 0};
    for (int i = 1; i <= n; ++i) {
      const mpq_class y = x * apow[static_cast<std::size_t>(i)];
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
      mpq_class frac = y - fl;
      const mpq_class d = std::min(frac, mpq_class(1 - frac));
      const mpq_class e = x * err[static_cast<std::size_t>(i)];
      const mpq_class lo = std::max(mpq_class(0), mpq_class(d - e));
      const mpq_class hi = std::min(half, mpq_class(d + e));
      worst.lo = std::max(worst.lo, lo);
      worst.hi = std::max(worst.hi, hi);
    }
    if (!have || worst.hi < est.attained.hi) {
      est.attained = worst;
      est.witness_x = x;
      have = true;
    }
  }
  est.value = est.attained.hi == 0 ? std::numeric_limits<double>::infinity()
                                   : -log_abs(est.attained.hi) / log_abs(X);
  est.indeterminate = false;
  return est;
}

}  // namespace lincomb
