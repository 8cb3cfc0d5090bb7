#pragma once

// Independent reference implementations used only by the tests. They avoid
// the library's algorithms: plain int64 / mpz arithmetic, exhaustive search.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // low-to-high, trimmed

void trim(Poly& p);
int degree(const Poly& p);
/// Exact quotient a / b in Z[T], or false.
bool divides(const Poly& b, const Poly& a, Poly& quotient);

/// Complete factorization of a primitive polynomial with positive leading
/// coefficient and degree <= 4 into irreducible primitive factors with
/// positive leading coefficient (with repetition, sorted). Divisors are found
/// by exhaustive search within coefficient bounds.
std::vector<Poly> factor_primitive(Poly f);

/// Content (positive) and sign-normalized primitive part.
long long content(const Poly& f);

/// Determinant of the Sylvester matrix (fraction-free Gaussian elimination).
mpz_class resultant(const std::vector<mpz_class>& p, const std::vector<mpz_class>& q);

/// Divisor counts tau(1..N) via a sieve.
std::vector<std::uint32_t> tau_sieve(std::uint32_t N);

/// Continued fraction of a rational p/q (q > 0).
std::vector<mpz_class> continued_fraction(mpz_class p, mpz_class q);

}  // namespace oracle
