#pragma once

// Factorization and irreducibility over the integers. Constant factors are
// bookkeeping (sign and content) and never make a polynomial reducible.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lincomb/poly.hpp"
#include "lincomb/witness.hpp"

namespace lincomb {

struct FactorPower {
  IntPolynomial poly;  ///< primitive, irreducible, degree >= 1, positive leading coefficient
  unsigned mult;
};

/// sign * content * prod factor^mult.
struct Factorization {
  int sign = 1;
  mpz_class content = 1;
  std::vector<FactorPower> factors;  ///< sorted canonically

  IntPolynomial expand() const;
  /// Degrees of the irreducible factors, repeated by multiplicity, ascending.
  std::vector<int> factor_degrees() const;
  /// Number of irreducible factors counted with multiplicity.
  unsigned factor_count() const;
};

/// Complete factorization. Throws PreconditionError for the zero polynomial.
Factorization factor(const IntPolynomial& p);

/// True iff the primitive part of p does not split into two factors of
/// degree >= 1. Throws PreconditionError for constant polynomials.
bool is_irreducible(const IntPolynomial& p);

/// All distinct primitive linear factors qT - r (q > 0) of p, canonical order.
/// Candidates r/q come from divisors of the lowest nonzero and the leading
/// coefficient. Throws PreconditionError for constants.
std::vector<IntPolynomial> linear_factors(const IntPolynomial& p);

/// Squarefree decomposition of a primitive polynomial with positive leading
/// coefficient: pairs (f_i, i) with p = prod f_i^i, each f_i squarefree.
std::vector<FactorPower> squarefree_decomposition(const IntPolynomial& p);

struct SmallValueFactor {
  IntPolynomial factor;
  /// -log|R(xi)| / log max(H(R), 2), taken at the certified upper end of
  /// |R(xi)|; +inf when that upper end is 0.
  double exponent;
};

/// Irreducible factor R of p maximizing -log|R(xi)| / log H(R). Ties within
/// 1e-9 go to the first factor in canonical order.
SmallValueFactor small_value_factor(const IntPolynomial& p, const RationalWitness& xi, double eta);

std::string to_json_text(const Factorization& f);

}  // namespace lincomb
