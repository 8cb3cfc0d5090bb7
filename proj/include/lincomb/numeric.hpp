#pragma once

// Exact-rational helpers shared by the certified layers.

#include <gmpxx.h>

#include <string>

#include "lincomb/errors.hpp"

namespace lincomb {

/// Closed interval [lo, hi] with exact rational endpoints.
struct QInterval {
  mpq_class lo;
  mpq_class hi;

  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  mpq_class width() const { return hi - lo; }
};

/// Natural log of |x| to double precision; x must be nonzero.
double log_abs(const mpq_class& x);
double log_abs(const mpz_class& x);

/// Rational bounds on sqrt(x), x >= 0, good to about `bits` bits.
mpq_class sqrt_lower(const mpq_class& x, unsigned bits = 128);
mpq_class sqrt_upper(const mpq_class& x, unsigned bits = 128);

/// Decide log|v| <= threshold for v in [lo, hi] with lo >= 0.
/// yes when log(hi) <= threshold, no when log(lo) > threshold.
Verdict log_at_most(const QInterval& magnitude, double threshold);

/// Parse "p/q", "p", or a decimal like "0.125" exactly.
mpq_class parse_rational(const std::string& text);

/// Short decimal rendering for reports.
std::string to_decimal(const mpq_class& x, int digits = 20);

}  // namespace lincomb
