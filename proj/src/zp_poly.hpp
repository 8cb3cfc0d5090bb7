#pragma once

// Polynomials over F_p for word-sized odd primes p < 2^31. Internal to the
// integer factorizer.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lincomb::detail {

using Word = std::uint64_t;

class Zp {
 public:
  explicit Zp(Word p) : p_(p) {}
  Word p() const { return p_; }
  Word add(Word a, Word b) const { return (a + b) % p_; }
  Word sub(Word a, Word b) const { return (a + p_ - b) % p_; }
  Word mul(Word a, Word b) const { return a * b % p_; }
  Word pow(Word a, Word e) const;
  Word inv(Word a) const { return pow(a, p_ - 2); }
  Word reduce(long long v) const;

 private:
  Word p_;
};

/// Coefficients low-to-high, no trailing zeros.
using ZpPoly = std::vector<Word>;

void trim(ZpPoly& f);
int deg(const ZpPoly& f);
ZpPoly zp_add(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_sub(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_mul(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_scale(const Zp& F, const ZpPoly& a, Word c);
/// Quotient and remainder; b nonzero.
std::pair<ZpPoly, ZpPoly> zp_divrem(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_rem(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_monic(const Zp& F, const ZpPoly& a);
/// Monic gcd (zero only if both inputs are zero).
ZpPoly zp_gcd(const Zp& F, ZpPoly a, ZpPoly b);
/// s*a + t*b = gcd(a,b) monic. Returns {gcd, s, t}.
struct ZpXgcd {
  ZpPoly g, s, t;
};
ZpXgcd zp_xgcd(const Zp& F, const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_derivative(const Zp& F, const ZpPoly& a);
/// base^e mod m
ZpPoly zp_powmod(const Zp& F, ZpPoly base, Word e, const ZpPoly& m);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, ZpPoly>> distinct_degree(const Zp& F, ZpPoly f);

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles (Cantor-Zassenhaus, seeded deterministically).
std::vector<ZpPoly> factor_squarefree(const Zp& F, const ZpPoly& f, std::mt19937_64& rng);

}  // namespace lincomb::detail
