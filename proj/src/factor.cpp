#include "lincomb/factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "lincomb/arith.hpp"
#include "lincomb/errors.hpp"
#include "zp_poly.hpp"

namespace lincomb {

using detail::Word;
using detail::Zp;
using detail::ZpPoly;

namespace {

IntPolynomial positive_lead(IntPolynomial p) { return p.leading() < 0 ? -p : p; }

// ---- reductions between Z[T] and F_p[T] -----------------------------------

ZpPoly reduce_mod(const IntPolynomial& f, Word p) {
  ZpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  detail::trim(r);
  return r;
}

// ---- polynomials modulo a big modulus M (coefficients in [0, M)) ---------

using ModPoly = std::vector<mpz_class>;

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class mod_of(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

ModPoly mod_reduce(const ModPoly& a, const mpz_class& m) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_of(a[i], m);
  mod_trim(r);
  return r;
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class x = 0;
    if (i < a.size()) x += a[i];
    if (i < b.size()) x += b[i];
    r[i] = mod_of(x, m);
  }
  mod_trim(r);
  return r;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class x = 0;
    if (i < a.size()) x += a[i];
    if (i < b.size()) x -= b[i];
    r[i] = mod_of(x, m);
  }
  mod_trim(r);
  return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return mod_reduce(r, m);
}

// b monic.
std::pair<ModPoly, ModPoly> mod_divrem_monic(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) return {{}, a};
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    mpz_class c = mod_of(r[k], m);
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    r[k] = 0;
  }
  return {mod_reduce(q, m), mod_reduce(r, m)};
}

ModPoly from_zp(const ZpPoly& a) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ModPoly from_int(const IntPolynomial& f, const mpz_class& m) { return mod_reduce(f.coeffs(), m); }

ModPoly scale_mod(const ModPoly& a, const mpz_class& c, const mpz_class& m) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return mod_reduce(r, m);
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
// Produces the same relations modulo m^2.
void hensel_step(const ModPoly& f, ModPoly& g, ModPoly& h, ModPoly& s, ModPoly& t, const mpz_class& m) {
  const mpz_class m2 = m * m;
  const ModPoly e = mod_sub(mod_reduce(f, m2), mod_mul(g, h, m2), m2);
  auto [q, r] = mod_divrem_monic(mod_mul(s, e, m2), h, m2);
  ModPoly g_new = mod_add(mod_add(g, mod_mul(t, e, m2), m2), mod_mul(q, g, m2), m2);
  ModPoly h_new = mod_add(h, r, m2);
  const ModPoly b = mod_sub(mod_add(mod_mul(s, g_new, m2), mod_mul(t, h_new, m2), m2), ModPoly{1}, m2);
  auto [c, d] = mod_divrem_monic(mod_mul(s, b, m2), h_new, m2);
  s = mod_sub(s, d, m2);
  t = mod_sub(mod_sub(t, mod_mul(t, b, m2), m2), mod_mul(c, g_new, m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
}

// f = lc(f) * prod u_i mod p (u_i monic); returns monic lifts mod p^(2^steps).
std::vector<ModPoly> multi_lift(const ModPoly& f, const std::vector<ZpPoly>& u, Word p, int steps) {
  mpz_class M = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) M *= M;
  if (u.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    return {scale_mod(f, inv, M)};
  }
  const Zp F(p);
  const std::size_t k = u.size() / 2;
  const Word lc_p = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  ZpPoly g0 = detail::zp_scale(F, detail::ZpPoly{1}, lc_p);
  for (std::size_t i = 0; i < k; ++i) g0 = detail::zp_mul(F, g0, u[i]);
  ZpPoly h0{1};
  for (std::size_t i = k; i < u.size(); ++i) h0 = detail::zp_mul(F, h0, u[i]);
  const auto xg = detail::zp_xgcd(F, g0, h0);
  ModPoly g = from_zp(g0), h = from_zp(h0), s = from_zp(xg.s), t = from_zp(xg.t);
  mpz_class m = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  std::vector<ZpPoly> left(u.begin(), u.begin() + static_cast<long>(k));
  std::vector<ZpPoly> right(u.begin() + static_cast<long>(k), u.end());
  std::vector<ModPoly> out = multi_lift(g, left, p, steps);
  std::vector<ModPoly> rest = multi_lift(h, right, p, steps);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

IntPolynomial symmetric(const ModPoly& a, const mpz_class& M) {
  const mpz_class half = M / 2;
  std::vector<mpz_class> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] > half ? a[i] - M : a[i];
  return IntPolynomial(std::move(v));
}

// ---- degree-set certificate ------------------------------------------------

struct PrimeSurvey {
  bool irreducible = false;
  Word best_prime = 0;
  std::vector<bool> allowed;  // allowed[d]: a factor of degree d is consistent with all primes
};

std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> s(static_cast<std::size_t>(n + 1), false);
  s[0] = true;
  for (int d : degrees)
    for (int x = n; x >= d; --x)
      if (s[static_cast<std::size_t>(x - d)]) s[static_cast<std::size_t>(x)] = true;
  return s;
}

PrimeSurvey survey_primes(const IntPolynomial& f, int max_good = 6) {
  const int n = f.degree();
  PrimeSurvey out;
  out.allowed.assign(static_cast<std::size_t>(n + 1), true);
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  int good = 0;
  const auto& primes = small_primes();
  for (std::size_t idx = 1; idx < primes.size() && good < max_good; ++idx) {
    const Word p = primes[idx];
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const Zp F(p);
    const ZpPoly fp = detail::zp_monic(F, reduce_mod(f, p));
    if (detail::deg(detail::zp_gcd(F, fp, detail::zp_derivative(F, fp))) > 0) continue;
    ++good;
    std::vector<int> degs;
    std::size_t count = 0;
    for (const auto& [d, g] : detail::distinct_degree(F, fp)) {
      const int k = detail::deg(g) / d;
      for (int i = 0; i < k; ++i) degs.push_back(d);
      count += static_cast<std::size_t>(k);
    }
    if (count < best_count) {
      best_count = count;
      out.best_prime = p;
    }
    const auto sums = subset_sums(degs, n);
    bool proper = false;
    for (int d = 0; d <= n; ++d) {
      out.allowed[static_cast<std::size_t>(d)] = out.allowed[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
      if (d > 0 && d < n && out.allowed[static_cast<std::size_t>(d)]) proper = true;
    }
    if (!proper) {
      out.irreducible = true;
      return out;
    }
  }
  if (out.best_prime == 0) throw LimitError("no usable prime for modular factorization");
  return out;
}

// ---- factoring primitive squarefree polynomials ----------------------------

std::vector<IntPolynomial> factor_quadratic(const IntPolynomial& f) {
  const mpz_class disc = f[1] * f[1] - 4 * f[2] * f[0];
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return {f};
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  IntPolynomial g1 = positive_lead(primitive_part(IntPolynomial(std::vector<mpz_class>{f[1] - s, 2 * f[2]})));
  auto g2 = divide_exact(f, g1);
  if (!g2) throw std::logic_error("quadratic split failed");
  return {g1, positive_lead(*g2)};
}

std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f_in, const PrimeSurvey& survey) {
  IntPolynomial f = f_in;
  const Word p = survey.best_prime;
  const Zp F(p);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<ZpPoly> u = detail::factor_squarefree(F, reduce_mod(f, p), rng);
  if (u.size() == 1) return {f};

  // modulus > 2 |lc| 2^n ||f||_2
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = 2 * abs(f.leading()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  int steps = 0;
  mpz_class M = static_cast<unsigned long>(p);
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<ModPoly> lifted = multi_lift(from_int(f, M), u, p, steps);

  std::vector<IntPolynomial> out;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      int dsum = 0;
      for (std::size_t i : idx) dsum += static_cast<int>(lifted[i].size()) - 1;
      if (dsum < static_cast<int>(survey.allowed.size()) ? survey.allowed[static_cast<std::size_t>(dsum)] : true) {
        ModPoly g = ModPoly{mod_of(f.leading(), M)};
        for (std::size_t i : idx) g = mod_mul(g, lifted[i], M);
        IntPolynomial cand = positive_lead(primitive_part(symmetric(g, M)));
        if (cand.degree() >= 1) {
          if (auto q = divide_exact(f, cand)) {
            out.push_back(cand);
            f = *q;
            for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
            found = true;
            break;
          }
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() >= 1) out.push_back(positive_lead(f));
  return out;
}

std::vector<IntPolynomial> factor_squarefree_primitive(const IntPolynomial& f) {
  if (f.degree() <= 1) return {f};
  if (f.degree() == 2) return factor_quadratic(f);
  const PrimeSurvey survey = survey_primes(f);
  if (survey.irreducible) return {f};
  return zassenhaus(f, survey);
}

}  // namespace

// ---- public API --------------------------------------------------------------

IntPolynomial Factorization::expand() const {
  IntPolynomial r = IntPolynomial::constant(sign * content);
  for (const auto& fp : factors)
    for (unsigned i = 0; i < fp.mult; ++i) r *= fp.poly;
  return r;
}

std::vector<int> Factorization::factor_degrees() const {
  std::vector<int> d;
  for (const auto& fp : factors)
    for (unsigned i = 0; i < fp.mult; ++i) d.push_back(fp.poly.degree());
  std::sort(d.begin(), d.end());
  return d;
}

unsigned Factorization::factor_count() const {
  unsigned c = 0;
  for (const auto& fp : factors) c += fp.mult;
  return c;
}

std::vector<FactorPower> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<FactorPower> out;
  if (p.degree() < 1) return out;
  const IntPolynomial f = positive_lead(primitive_part(p));
  const IntPolynomial fd = derivative(f);
  IntPolynomial a0 = gcd(f, fd);
  if (a0.degree() == 0) return {{f, 1}};
  IntPolynomial b = *divide_exact(f, a0);
  IntPolynomial c = *divide_exact(fd, a0);
  IntPolynomial d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() >= 1) {
    IntPolynomial a = d.is_zero() ? positive_lead(primitive_part(b)) : gcd(b, d);
    if (a.degree() >= 1) out.push_back({positive_lead(a), i});
    b = *divide_exact(b, a);
    c = d.is_zero() ? IntPolynomial{} : *divide_exact(d, a);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

Factorization factor(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("factor: zero polynomial");
  Factorization out;
  out.sign = p.leading() < 0 ? -1 : 1;
  out.content = content(p);
  IntPolynomial f = positive_lead(primitive_part(p));
  if (f.degree() >= 1) {
    std::size_t k = 0;
    while (f[k] == 0) ++k;
    if (k > 0) {
      out.factors.push_back({IntPolynomial{0, 1}, static_cast<unsigned>(k)});
      f = IntPolynomial(std::vector<mpz_class>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
    }
    for (const auto& [part, mult] : squarefree_decomposition(f))
      for (auto& g : factor_squarefree_primitive(part)) out.factors.push_back({positive_lead(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("is_irreducible: polynomial must have degree >= 1");
  const IntPolynomial f = positive_lead(primitive_part(p));
  if (f.degree() == 1) return true;
  if (f[0] == 0) return false;
  if (gcd(f, derivative(f)).degree() > 0) return false;
  if (f.degree() == 2) return factor_quadratic(f).size() == 1;
  const PrimeSurvey survey = survey_primes(f);
  if (survey.irreducible) return true;
  return zassenhaus(f, survey).size() == 1;
}

std::vector<IntPolynomial> linear_factors(const IntPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("linear_factors: polynomial must have degree >= 1");
  std::vector<IntPolynomial> out;
  IntPolynomial f = primitive_part(p);
  std::size_t k = 0;
  while (f[k] == 0) ++k;
  if (k > 0) {
    out.push_back(IntPolynomial{0, 1});
    f = IntPolynomial(std::vector<mpz_class>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }
  if (f.degree() >= 1) {
    try {
      const auto num_divs = divisors(f[0]);
      const auto den_divs = divisors(f.leading());
      const int n = f.degree();
      for (const auto& q : den_divs) {
        for (const auto& r0 : num_divs) {
          if (gcd(q, r0) != 1) continue;
          for (int sgn : {1, -1}) {
            const mpz_class r = sgn * r0;
            // sum c_i r^i q^(n-i)
            mpz_class acc = 0, rp = 1;
            std::vector<mpz_class> qpow(static_cast<std::size_t>(n + 1));
            qpow[0] = 1;
            for (int i = 1; i <= n; ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
            for (int i = 0; i <= n; ++i) {
              acc += f[static_cast<std::size_t>(i)] * rp * qpow[static_cast<std::size_t>(n - i)];
              rp *= r;
            }
            if (acc == 0) out.push_back(IntPolynomial(std::vector<mpz_class>{-r, q}));
          }
        }
      }
    } catch (const LimitError&) {
      for (const auto& fp : factor(f).factors)
        if (fp.poly.degree() == 1) out.push_back(fp.poly);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SmallValueFactor small_value_factor(const IntPolynomial& p, const RationalWitness& xi, double /*eta*/) {
  const Factorization fz = factor(p);
  if (fz.factors.empty()) throw PreconditionError("small_value_factor: polynomial has no factor of degree >= 1");
  const double inf = std::numeric_limits<double>::infinity();
  SmallValueFactor best{fz.factors.front().poly, -inf};
  bool first = true;
  for (const auto& fp : fz.factors) {
    const QInterval v = evaluate_at_witness(fp.poly, xi);
    const mpz_class h = height(fp.poly);
    double e;
    if (v.hi == 0)
      e = inf;
    else
      e = -log_abs(v.hi) / log_abs(h < 2 ? mpz_class(2) : h);
    if (first || e > best.exponent + 1e-9) {
      best = {fp.poly, e};
      first = false;
    }
  }
  return best;
}

std::string to_json_text(const Factorization& f) {
  nlohmann::ordered_json j;
  j["sign"] = f.sign;
  j["content"] = f.content.get_str();
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& fp : f.factors) {
    nlohmann::ordered_json e;
    e["poly"] = nlohmann::ordered_json::parse(to_json_text(fp.poly));
    e["mult"] = fp.mult;
    j["factors"].push_back(e);
  }
  return j.dump();
}

}  // namespace lincomb
