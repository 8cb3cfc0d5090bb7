#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lincomb/numeric.hpp"
#include "lincomb/poly.hpp"

namespace lincomb {

/// A real number known through an exact rational approximant and a certified
/// radius: |xi - approximant| <= radius.
struct RationalWitness {
  mpq_class approximant;
  mpq_class radius;  ///< 0 <= radius < 1
  std::string description;

  /// Exactly the rational x.
  static RationalWitness exact(const mpq_class& x);
  /// Validates radius in [0, 1).
  RationalWitness(mpq_class approx, mpq_class rad, std::string desc);
  RationalWitness() = default;

  QInterval enclosure() const { return {approximant - radius, approximant + radius}; }
};

/// Real number with continued fraction prefix [a0; a1, ..., ak] (a_i >= 1 for
/// i >= 1). The approximant is the last convergent p_k/q_k and the radius
/// 1/(q_k (q_k + q_{k-1})) covers every real number with that prefix.
RationalWitness continued_fraction_witness(const std::vector<mpz_class>& partial_quotients);

/// Convergents p_i/q_i of a finite continued fraction.
std::vector<mpq_class> convergents(const std::vector<mpz_class>& partial_quotients);

/// Certified enclosure of p(xi) (signed).
QInterval evaluate_signed(const IntPolynomial& p, const RationalWitness& xi);

/// Certified enclosure of |p(xi)|: |p(a)| widened by sum_{k>=1} |p^(k)(a)/k!| r^k,
/// where a is the approximant and r the radius. Exact when r = 0.
QInterval evaluate_at_witness(const IntPolynomial& p, const RationalWitness& xi);

/// Parse "p/q", a decimal, "liouville:b,k", "cf:[a0,a1,...]" or
/// "<rational>+-<radius>".
RationalWitness parse_witness(const std::string& text);

}  // namespace lincomb
