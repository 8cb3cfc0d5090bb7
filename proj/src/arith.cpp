#include "lincomb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lincomb/errors.hpp"

namespace lincomb {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with this base set.
bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  if (x < 2) return out;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= x / i)
      for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return miller_rabin_u64(n.get_ui());
  // BPSW in GMP >= 6.2; no counterexample is known.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  if (n == 0) throw PreconditionError("factor_integer: zero has no factorization");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class m = abs(n);
  for (std::uint64_t p : small_primes()) {
    if (m == 1) break;
    if (m < static_cast<unsigned long>(p) * static_cast<unsigned long>(p)) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
    }
  }
  if (m != 1) {
    if (!is_prime(m))
      throw LimitError("factor_integer: cofactor " + m.get_str() + " has no prime factor below 10^6");
    out.emplace_back(m, 1);
  }
  return out;
}

mpz_class tau(const mpz_class& n) {
  if (n == 0) throw PreconditionError("tau(0) is undefined");
  mpz_class t = 1;
  for (const auto& [p, e] : factor_integer(n)) t *= (e + 1);
  return t;
}

unsigned omega(const mpz_class& n) {
  if (n == 0) throw PreconditionError("omega(0) is undefined");
  return static_cast<unsigned>(factor_integer(n).size());
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class primorial(unsigned k) {
  if (k == 0) throw PreconditionError("primorial requires k >= 1");
  mpz_class r = 1;
  unsigned found = 0;
  mpz_class p = 1;
  while (found < k) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    r *= p;
    ++found;
  }
  return r;
}

GammaBounds gamma_bounds(const BoundInputs& b) {
  if (!(b.H > 1.0)) throw PreconditionError("gamma_bounds: H must exceed 1");
  if (b.cn == 0 || b.d0 == 0) throw PreconditionError("gamma_bounds: cn and d0 must be nonzero");
  const double t = tau(b.cn).get_d() * tau(b.d0).get_d();
  const double lh = std::log(b.H);
  GammaBounds g{t * lh, std::numeric_limits<double>::quiet_NaN()};
  if (lh > 1.0) g.gamma_prime = t * lh / std::log(lh);
  return g;
}

double gamma_prime(const BoundInputs& b) {
  if (!(b.H > std::exp(1.0))) throw PreconditionError("Gamma' requires H > e");
  return gamma_bounds(b).gamma_prime;
}

double gyory_log_bound(int n, unsigned w) {
  if (n < 2) throw PreconditionError("gyory_log_bound requires n >= 2");
  const double base = std::ldexp(1.0, 17) * n;
  const double expo = static_cast<double>(n) * n * n;
  return (w + 1.0) * std::log(w + 2.0) * std::pow(base, expo);
}

double omega_asymptotic_ratio(const mpz_class& n) {
  if (abs(n) < 16) throw PreconditionError("omega_asymptotic_ratio requires |N| >= 16");
  const mpz_class m = abs(n);
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, m.get_mpz_t());
  const double logn = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  return omega(n) * std::log(logn) / logn;
}

}  // namespace lincomb
