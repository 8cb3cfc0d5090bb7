#include "lincomb/witness.hpp"

#include <algorithm>

#include "json.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/exponents.hpp"

namespace lincomb {

RationalWitness::RationalWitness(mpq_class approx, mpq_class rad, std::string desc)
    : approximant(std::move(approx)), radius(std::move(rad)), description(std::move(desc)) {
  if (radius < 0 || radius >= 1) throw PreconditionError("witness radius must lie in [0, 1)");
}

RationalWitness RationalWitness::exact(const mpq_class& x) { return RationalWitness(x, 0, "rational " + x.get_str()); }

std::vector<mpq_class> convergents(const std::vector<mpz_class>& a) {
  std::vector<mpq_class> out;
  mpz_class p_prev2 = 0, q_prev2 = 1, p_prev = 1, q_prev = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0 && a[i] < 1) throw PreconditionError("continued fraction partial quotients must be >= 1");
    mpz_class p = a[i] * p_prev + p_prev2;
    mpz_class q = a[i] * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    out.emplace_back(p, q);
  }
  return out;
}

RationalWitness continued_fraction_witness(const std::vector<mpz_class>& a) {
  if (a.empty()) throw PreconditionError("empty continued fraction");
  const auto conv = convergents(a);
  const mpz_class qk = conv.back().get_den();
  const mpz_class qk1 = conv.size() > 1 ? conv[conv.size() - 2].get_den() : mpz_class(0);
  mpq_class radius(1, qk * (qk + qk1));
  radius.canonicalize();
  std::string desc = "cf:[";
  for (std::size_t i = 0; i < a.size(); ++i) desc += (i ? "," : "") + a[i].get_str();
  desc += "]";
  if (a.size() == 1) return RationalWitness(mpq_class(a[0]) + mpq_class(1, 2), mpq_class(1, 2), desc);  // [a0, a0+1]
  return RationalWitness(conv.back(), radius, desc);
}

QInterval evaluate_signed(const IntPolynomial& p, const RationalWitness& xi) {
  const mpq_class v = evaluate_rational(p, xi.approximant);
  if (xi.radius == 0 || p.degree() < 1) return {v, v};
  // Taylor coefficients of p(a + t) in t: q_k = sum_{i>=k} C(i,k) c_i a^(i-k).
  const int n = p.degree();
  std::vector<mpq_class> q(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) q[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
  // Synthetic division by (T - a), repeated.
  for (int i = 0; i < n; ++i)
    for (int j = n; j > i; --j) q[static_cast<std::size_t>(j - 1)] += xi.approximant * q[static_cast<std::size_t>(j)];
  mpq_class err = 0, rk = 1;
  for (int k = 1; k <= n; ++k) {
    rk *= xi.radius;
    err += abs(q[static_cast<std::size_t>(k)]) * rk;
  }
  return {v - err, v + err};
}

QInterval evaluate_at_witness(const IntPolynomial& p, const RationalWitness& xi) {
  const QInterval s = evaluate_signed(p, xi);
  if (s.lo >= 0) return s;
  if (s.hi <= 0) return {-s.hi, -s.lo};
  return {0, std::max(mpq_class(-s.lo), s.hi)};
}

RationalWitness parse_witness(const std::string& text) {
  if (text.rfind("liouville:", 0) == 0) {
    const std::string args = text.substr(10);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw PreconditionError("liouville witness needs base,terms");
    try {
      return liouville_witness(std::stoul(args.substr(0, comma)), static_cast<unsigned>(std::stoul(args.substr(comma + 1))));
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const PreconditionError*>(&e)) throw;
      throw PreconditionError("bad liouville witness: " + text);
    }
  }
  if (text.rfind("cf:", 0) == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(3));
    } catch (const nlohmann::json::parse_error&) {
      throw PreconditionError("bad continued fraction: " + text);
    }
    if (!j.is_array()) throw PreconditionError("continued fraction must be a JSON array");
    std::vector<mpz_class> a;
    for (const auto& e : j) {
      mpz_class v;
      const std::string s = e.is_string() ? e.get<std::string>() : e.dump();
      if (v.set_str(s, 10) != 0) throw PreconditionError("bad partial quotient: " + s);
      a.push_back(v);
    }
    return continued_fraction_witness(a);
  }
  const auto pm = text.find("+-");
  if (pm != std::string::npos) {
    return RationalWitness(parse_rational(text.substr(0, pm)), parse_rational(text.substr(pm + 2)), text);
  }
  return RationalWitness::exact(parse_rational(text));
}

}  // namespace lincomb
