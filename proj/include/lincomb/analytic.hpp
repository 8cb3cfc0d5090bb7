#pragma once

// Certified complex roots and the root/value inequalities checked at a
// witness. Every comparison that intervals cannot settle is reported as
// Verdict::indeterminate.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lincomb/errors.hpp"
#include "lincomb/numeric.hpp"
#include "lincomb/poly.hpp"
#include "lincomb/witness.hpp"

namespace lincomb {

/// Closed disk with exact rational center; contains at least one root.
struct RootDisk {
  mpq_class re, im;
  mpq_class radius;
};

struct RootSet {
  /// One disk per root counted with multiplicity; rational roots have radius 0.
  std::vector<RootDisk> roots;
  /// Disks of distinct roots are pairwise disjoint (repeated roots share a disk).
  bool separated = true;
  /// Some radius is above 2^(-precision/2) after the iteration cap.
  bool degraded = false;
  unsigned iterations = 0;
  unsigned precision = 0;
};

/// All complex roots of p. Rational roots come out exact; the remaining
/// irreducible factors go through Aberth iteration in GMP floats, then each
/// center is certified by the disk bound deg(f) |f(z)| / |f'(z)| evaluated
/// exactly. Throws PreconditionError for constants.
RootSet roots(const IntPolynomial& p, unsigned precision = 128);

/// |z - w|^2 for disk centers.
mpq_class center_distance_sq(const RootDisk& a, const RootDisk& b);
/// Certified enclosure of |alpha - beta| for any alpha in a, beta in b.
QInterval distance(const RootDisk& a, const RootDisk& b, unsigned bits = 128);

struct RootGap {
  QInterval gap;  ///< encloses min |alpha - beta| over roots alpha of p, beta of q
  RootDisk alpha, beta;
};

/// Minimal distance between a root of p and a root of q. [0, 0] when p and q
/// share a factor. Symmetric and invariant under scaling of either input.
RootGap min_root_gap(const IntPolynomial& p, const IntPolynomial& q, unsigned precision = 128);

struct ProximityThresholds {
  int n;
  double kappa;  ///< 2n - 6
  double theta;  ///< 1 for n = 2, 2n - 4 for n >= 3
};
ProximityThresholds proximity_thresholds(int n);

/// gap <= H^(-exponent): yes / no / indeterminate.
Verdict gap_at_most(const QInterval& gap, double H, double exponent);

/// |p(xi)| <= n(n+1) max{1, (|xi|+1)^n} H(p) |xi - alpha|.
/// Throws PreconditionError when |xi - alpha| > 1 is certain.
Verdict verify_pop(const IntPolynomial& p, const RootDisk& alpha, const RationalWitness& xi);

/// Real witness for (alpha + beta)/2; imaginary parts are carried in the
/// radius. Throws PreconditionError when that radius reaches 1.
RationalWitness midpoint_witness(const RootDisk& alpha, const RootDisk& beta);

struct FloorCheck {
  Verdict holds;
  QInterval max_value;  ///< encloses max(|u1(xi)|, |u2(xi)|)
  mpq_class threshold;  ///< c H^(-d1-d2+1)
};
/// max |u_i(xi)| >= c H^(-d1-d2+1) with H the larger height.
/// Throws PreconditionError unless u1, u2 are coprime of degree >= 1 and c > 0.
FloorCheck liouville_floor(const IntPolynomial& u1, const IntPolynomial& u2, const RationalWitness& xi,
                           double c);

struct CoprimeCensus {
  std::size_t count = 0;
  std::vector<IntPolynomial> family;  ///< selected pairwise coprime members
  std::size_t qualifying = 0;         ///< polynomials passing the value filter
  std::size_t indeterminate = 0;      ///< value filter undecided
  std::uint64_t examined = 0;
};

/// Polynomials Q of degree 1..d, height <= H, positive leading coefficient,
/// with |Q(xi)| <= H(Q)^(-mu), then a greedy pairwise coprime subfamily by
/// increasing height (ties canonical). The constant coefficient is pruned to
/// the three integers nearest the value forced by the others; refuses
/// (LimitError) above 10^8 candidates. Requires mu > 2d - 1.
CoprimeCensus small_coprime_census(const RationalWitness& xi, int d, double mu, const mpz_class& H);

struct WbsReport {
  RootDisk root;
  int owner = 1;           ///< 1 or 2
  QInterval distance;      ///< encloses |xi - alpha|
  double achieved = 0;     ///< -log|xi - alpha| / log H(owner) - 1
  double target = 0;       ///< (3/2) eta - n + 1/2
};
/// Root of p1 or p2 nearest to xi. Requires coprime inputs of degree <= n
/// with both |p_i(xi)| <= max(H(p1), H(p2))^(-eta) certified.
WbsReport wbs_root_report(const IntPolynomial& p1, const IntPolynomial& p2, const RationalWitness& xi,
                          double eta, int n, unsigned precision = 128);

std::string to_json_text(const RootSet& r);

}  // namespace lincomb
