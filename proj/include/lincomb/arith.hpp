#pragma once

// Divisor counts, prime counts, primes and the reducibility budgets the
// irreducibility criteria are phrased in. All logarithms are natural.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace lincomb {

/// Prime factorization of |N| as (prime, exponent) pairs, ascending.
///
/// Trial division by the primes up to 10^6, then the remaining cofactor must
/// be 1 or prime. A composite cofactor without small factors (only possible
/// for |N| > 10^12) raises LimitError. N = 0 raises PreconditionError.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Number of positive divisors of |N|.
mpz_class tau(const mpz_class& n);
/// Number of distinct prime divisors of |N|.
unsigned omega(const mpz_class& n);

/// Positive divisors of |N|, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Cached primes below 10^6 (shared, immutable).
const std::vector<std::uint64_t>& small_primes();

bool is_prime(const mpz_class& n);

/// Product of the first k primes.
mpz_class primorial(unsigned k);

struct BoundInputs {
  mpz_class cn;  ///< leading coefficient of P, nonzero
  mpz_class d0;  ///< constant coefficient of Q, nonzero
  double H;      ///< height parameter, > 1
};

struct GammaBounds {
  double gamma;        ///< tau(cn) tau(d0) log H
  double gamma_prime;  ///< gamma / log log H; NaN when H <= e
};

/// Throws PreconditionError when H <= 1, cn or d0 vanish.
GammaBounds gamma_bounds(const BoundInputs& b);
/// Gamma' alone; throws PreconditionError when H <= e.
double gamma_prime(const BoundInputs& b);

/// Natural log of the Gyory-Evertse shift bound,
/// (w + 1) log(w + 2) (2^17 n)^(n^3). May be +inf for large n.
double gyory_log_bound(int n, unsigned w);

/// omega(N) log log N / log N, for |N| >= 16.
double omega_asymptotic_ratio(const mpz_class& n);

}  // namespace lincomb
