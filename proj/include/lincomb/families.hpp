#pragma once

// Combination families S_l = l T^(n-u) P + Q, R_l = T^(n-u) P + l Q and
// M = l1 P + l2 Q, their reducibility censuses, the cubic shift search and
// the known reducible families.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lincomb/arith.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/factor.hpp"
#include "lincomb/poly.hpp"

namespace lincomb {

enum class FamilyKind { S, R, M };
const char* to_string(FamilyKind k);
FamilyKind parse_kind(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::S;
  IntPolynomial P, Q;
  int n = 0;            ///< target degree, >= deg P
  double delta = 0.5;   ///< in (0, 1]
  double H = 0;         ///< height budget, >= max(H(P), H(Q)), > 1
  /// Require deg P = n, P(0) = 0, deg Q < n (kinds S and R).
  bool hypotheses = true;
  /// Exponent slack for the root proximity flag.
  double epsilon = 0.1;
  std::uint64_t seed = 0;  ///< recorded only
  std::string label;       ///< e.g. the counterexample name
};

/// (l, 0) for S and R, (l1, l2) for M.
struct FamilyIndex {
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};
std::string to_string(const FamilyIndex& i, FamilyKind k);

/// floor(H^delta), robust against rounding at perfect powers.
std::uint64_t index_bound(double H, double delta);

/// Throws PreconditionError when the description is malformed or P, Q share a factor.
void validate(const FamilySpec& spec);

/// Primes up to H^delta (S, R) or coprime pairs 1 <= l1 < l2 <= H^delta (M).
std::vector<FamilyIndex> indices(const FamilySpec& spec);

/// The member polynomial. Throws PreconditionError when the index is out of
/// range or P, Q share a factor.
IntPolynomial build_member(const FamilySpec& spec, const FamilyIndex& index);

struct CensusRow {
  FamilyIndex index;
  int degree = 0;
  bool reducible = false;
  std::vector<int> factor_degrees;
};

struct CensusReport {
  FamilySpec spec;
  std::size_t total_indices = 0;
  std::vector<CensusRow> rows;  ///< every index, in index order
  std::vector<std::pair<FamilyIndex, Factorization>> reducible;
  double gamma = 0;
  double gamma_prime = 0;  ///< NaN when H <= e
  /// reducible / gamma_prime for S, R; reducible / gamma for M.
  double ratio = 0;
  std::optional<FamilyIndex> smallest_irreducible_index;
  std::size_t degree_drops = 0;  ///< members of degree below n
  /// Root proximity of T^(n-u) P and Q against kappa_n (S, R with n >= 4) or
  /// theta_n (M); nullopt when not applicable.
  std::optional<Verdict> proximity;
  std::size_t reducible_count() const { return reducible.size(); }
};

struct CensusOptions {
  unsigned threads = 0;  ///< 0: hardware concurrency
  bool proximity = false;
  unsigned precision = 256;
};

/// Deterministic regardless of the thread count.
CensusReport census(const FamilySpec& spec, const CensusOptions& opt = {});

/// Linear candidates qT - p of an S member with p | Q(0) and q | lc(member),
/// gcd(p, q) = 1, q > 0, sorted canonically. Requires kind S and P(0) = 0.
std::vector<IntPolynomial> linear_factor_divisibility_filter(const FamilySpec& spec, const FamilyIndex& index);

struct SzegedyResult {
  mpz_class b;
  Factorization certificate;  ///< factorization of P + b
  double budget = 0;          ///< tau(c3) (log max(H(P), 3))^2
  std::uint64_t scanned = 0;  ///< shifts tested
};

/// Smallest |b| (positive first on ties) with P + b irreducible; P cubic.
/// LimitError after 10^6 shifts.
SzegedyResult szegedy_shift(const IntPolynomial& P);

enum class Counterexample { S_quadratic, R_shift, M_powers };
const char* to_string(Counterexample c);
Counterexample parse_counterexample(const std::string& name);

struct CounterexampleFamily {
  FamilySpec spec;
  /// Indices within the family's range whose members are reducible by
  /// construction, ascending.
  std::function<std::vector<FamilyIndex>()> predicted;
};

/// S_quadratic: P = T^2, Q = -T^2 - 1, l = N^2 + 1 prime.
/// R_shift: P = T^2 + 1, Q = -1, l = N^2 + 1 prime.
/// M_powers: P = T^n, Q = -1, (l1, l2) = (a^n, b^n) coprime.
CounterexampleFamily counterexample_family(Counterexample which, double H, double delta, int n = 2);

/// All pairwise GCDs of the listed members are constant. For kind M the index
/// pairs must be pairwise linearly independent (PreconditionError otherwise).
bool pairwise_coprime_check(const FamilySpec& spec, const std::vector<FamilyIndex>& idx);

/// Random pair with coefficients uniform in [-H, H]: deg P = n, P(0) = 0,
/// deg Q < n, Q(0) != 0, gcd(P, Q) = 1. Deterministic in the seed.
FamilySpec random_spec(FamilyKind kind, int n, long H, double delta, std::uint64_t seed);

/// Uniform random integer polynomial of exact degree n and height <= H.
IntPolynomial random_polynomial(int n, long H, std::uint64_t seed);

std::string census_csv(const CensusReport& r);
std::string census_json(const CensusReport& r);

}  // namespace lincomb
