#pragma once

// Dense univariate polynomials over the integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lincomb {

/// Dense integer polynomial, coefficient i multiplies T^i.
///
/// The coefficient vector is kept canonical: no trailing zeros, so the zero
/// polynomial is the empty vector and degree() == size() - 1 otherwise.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// c * T^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of T^i, zero beyond the degree.
  const mpz_class& operator[](std::size_t i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
  friend IntPolynomial operator*(const mpz_class& c, IntPolynomial a) { return a *= c; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human readable form, e.g. "4*T^2 - 1".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

/// Canonical ordering: by degree, then coefficients from the top down.
bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

/// Maximum absolute value of the coefficients; 0 for the zero polynomial.
mpz_class height(const IntPolynomial& p);

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scalar_multiply(const mpz_class& c, const IntPolynomial& p);

/// GCD of the coefficients (positive). Throws PreconditionError on zero.
mpz_class content(const IntPolynomial& p);
/// p / content(p); the sign of the leading coefficient is kept.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive GCD with positive leading coefficient. [1] when coprime.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);
bool coprime(const IntPolynomial& p, const IntPolynomial& q);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = quot * b + rem.
struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over the integers, or nullopt when b does not divide a
/// in Z[T].
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& p);

/// p(T + s)
IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& s);

mpq_class evaluate_rational(const IntPolynomial& p, const mpq_class& x);
mpz_class evaluate(const IntPolynomial& p, const mpz_class& x);

/// Integer Moebius map T -> (aT + b) / (cT + d).
struct MobiusMap {
  mpz_class a, b, c, d;

  MobiusMap(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  mpz_class determinant() const { return a * d - b * c; }
  /// (dT - b) / (-cT + a); composes with *this to det * identity.
  MobiusMap adjugate() const;
};

/// (cT + d)^n * p((aT + b) / (cT + d)), expanded. Requires n >= deg p.
IntPolynomial mobius_conjugate(const IntPolynomial& p, const MobiusMap& m, int n);

// --- canonical text format ------------------------------------------------

/// JSON array of decimal strings, low-to-high, e.g. ["-1","0","4"].
std::string to_json_text(const IntPolynomial& p);
/// Accepts decimal strings or JSON integers. Throws PreconditionError.
IntPolynomial from_json_text(const std::string& text);

}  // namespace lincomb
