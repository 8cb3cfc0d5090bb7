#include "lincomb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "lincomb/errors.hpp"

namespace lincomb {

namespace {

const mpz_class& zero_coeff() {
  static const mpz_class z{0};
  return z;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_coeff();
}

const mpz_class& IntPolynomial::leading() const {
  return coeffs_.empty() ? zero_coeff() : coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

mpz_class height(const IntPolynomial& p) {
  mpz_class h = 0;
  for (const auto& c : p.coeffs())
    if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
  return h;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q) { return p - q; }
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
IntPolynomial scalar_multiply(const mpz_class& c, const IntPolynomial& p) { return c * p; }

mpz_class content(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("content of the zero polynomial");
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (g == 1) return p;
  std::vector<mpz_class> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-division by zero");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  const int db = b.degree();
  const int steps = a.degree() - db + 1;
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(steps));
  const mpz_class& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    // r <- lb * r - r_k T^(k-db) b ; q <- lb * q + r_k T^(k-db)
    mpz_class rk = r[ks];
    for (auto& x : q) x *= lb;
    q[static_cast<std::size_t>(k - db)] += rk;
    for (std::size_t i = 0; i < ks; ++i) r[i] *= lb;
    r[ks] = 0;
    if (rk != 0)
      for (int j = 0; j < db; ++j) r[static_cast<std::size_t>(k - db + j)] -= rk * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db + 1));
  const mpz_class& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    if (r[ks] == 0) continue;
    if (!mpz_divisible_p(r[ks].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[ks].get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  IntPolynomial a = primitive_part(p);
  IntPolynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPolynomial{1};
    IntPolynomial r = pseudo_divide(a, b).remainder;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.degree() <= 0) return IntPolynomial{1};
  return a.leading() < 0 ? -a : a;
}

bool coprime(const IntPolynomial& p, const IntPolynomial& q) { return gcd(p, q).degree() == 0; }

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& s) {
  std::vector<mpz_class> v = p.coeffs();
  const std::size_t n = v.size();
  // Repeated synthetic division by (T - s).
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) v[j - 1] += s * v[j];
  return IntPolynomial(std::move(v));
}

mpq_class evaluate_rational(const IntPolynomial& p, const mpq_class& x) {
  // Horner on numerator with a common denominator: sum c_i num^i den^(n-i).
  if (p.is_zero()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.leading();
  mpz_class den_pow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= num;
    den_pow *= den;
    acc += p[static_cast<std::size_t>(i)] * den_pow;
  }
  mpq_class r(acc, den_pow);
  r.canonicalize();
  return r;
}

mpz_class evaluate(const IntPolynomial& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += p[static_cast<std::size_t>(i)];
  }
  return acc;
}

MobiusMap::MobiusMap(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant() == 0) throw PreconditionError("Moebius map with zero determinant");
}

MobiusMap MobiusMap::adjugate() const { return MobiusMap(d, -b, -c, a); }

IntPolynomial mobius_conjugate(const IntPolynomial& p, const MobiusMap& m, int n) {
  if (n < p.degree()) throw PreconditionError("mobius_conjugate: degree bound below deg(p)");
  if (n < 0) n = 0;
  const IntPolynomial num{IntPolynomial(std::vector<mpz_class>{m.b, m.a})};
  const IntPolynomial den{IntPolynomial(std::vector<mpz_class>{m.d, m.c})};
  // powers of numerator and denominator
  std::vector<IntPolynomial> num_pow{IntPolynomial{1}}, den_pow{IntPolynomial{1}};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  IntPolynomial r;
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    r += c * (num_pow[static_cast<std::size_t>(i)] * den_pow[static_cast<std::size_t>(n - i)]);
  }
  return r;
}

std::string to_json_text(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr.dump();
}

IntPolynomial from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("polynomial is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw PreconditionError("polynomial must be a JSON array of decimal strings");
  std::vector<mpz_class> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    std::string s;
    if (e.is_string())
      s = e.get<std::string>();
    else if (e.is_number_integer())
      s = e.dump();
    else
      throw PreconditionError("polynomial coefficient must be a decimal string");
    mpz_class c;
    if (s.empty() || c.set_str(s, 10) != 0) throw PreconditionError("bad integer coefficient: " + s);
    v.push_back(c);
  }
  return IntPolynomial(std::move(v));
}

}  // namespace lincomb
