#pragma once

// Closed-form exponent bounds and brute-force desk-scale estimators of
// approximation exponents at a witness xi.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lincomb/numeric.hpp"
#include "lincomb/poly.hpp"
#include "lincomb/witness.hpp"

namespace lincomb {

// --- formulas ---------------------------------------------------------------

/// (n + sqrt(n^2 + 16n - 8)) / 4, for 1 <= n <= 7.
double wirsing_exact_bound(int n);
/// (3/2) w_hat - n + 1/2, for w_hat >= n.
double theorem12_bound(double w_hat, int n);
/// 1 / lambda_hat, for 0 < lambda_hat <= 1.
double ds_bound(double lambda_hat);
/// (w_hat - n + 1) / w_hat, for w_hat >= n >= 1.
double german_transfer(double w_hat, int n);
/// w_hat2 (w_hat2 - 1), for w_hat2 >= 2.
double jm_bound(double w_hat2);
/// n/2 + (1 - log 2)/2 sqrt(n) + 1/3, for n >= 4.
double pr_asymptotic_bound(int n);

/// Point where ds_bound(german_transfer(w, n)) = theorem12_bound(w, n).
struct Equilibrium {
  double w_hat;  ///< the balancing uniform exponent
  double value;  ///< common value of both branches there
};
/// Bisection on [n, 2n + 2] to full double precision; 1 <= n <= 7.
Equilibrium equilibrium(int n);

struct ComparisonRow {
  int n;
  double bound;      ///< recomputed
  double stored_bound;
  double bt_pr_roy;  ///< stored constant
  double tsishchanka;  ///< stored constant
};
/// Rows n = 3..7.
std::vector<ComparisonRow> comparison_table();

// --- witnesses --------------------------------------------------------------

/// sum_{j=1..k} base^(-j!) with radius 2 base^(-(k+1)!); base >= 2, 1 <= k <= 7.
RationalWitness liouville_witness(unsigned long base, unsigned terms);

// --- estimators -------------------------------------------------------------

enum class WVariant { any, exact_irreducible, monic, monic_unit };
const char* to_string(WVariant v);
/// Throws PreconditionError for unknown names.
WVariant parse_variant(const std::string& name);

struct ExponentEstimate {
  std::string kind;  ///< "w", "w_exact", "w_int", "w_unit" or "lambda"
  int n = 0;
  mpz_class X;
  /// -log(attained) / log X where attained is the certified upper end below.
  double value = 0;
  QInterval attained;  ///< |P(xi)| or max_i ||x xi^i|| at the witness
  std::optional<IntPolynomial> witness_poly;
  mpz_class witness_x;  ///< lambda only
  /// Candidates enumerated (after pruning) and the nominal box size.
  std::uint64_t examined = 0;
  double box = 0;
  /// Some candidate that might beat the reported one could not be told apart
  /// from zero at the witness precision.
  bool indeterminate = false;
};

/// Minimum of |P(xi)| over nonzero P of degree <= n (any) or of degree exactly
/// n and irreducible (exact_irreducible), additionally monic (monic), or
/// monic with constant coefficient +-1 (monic_unit); height <= X.
///
/// Meet in the middle over two halves of the coefficient vector; each half
/// may hold at most 8 * 10^6 points, else LimitError. Double-precision
/// screening, exact certification of every candidate near the minimum.
ExponentEstimate estimate_w(const RationalWitness& xi, int n, const mpz_class& X, WVariant variant);

/// Maximum over 1 <= x <= X of -log(max_i ||x xi^i||) / log X, i = 1..n.
/// 2 <= X <= 10^7.
ExponentEstimate estimate_lambda(const RationalWitness& xi, int n, const mpz_class& X);

}  // namespace lincomb
