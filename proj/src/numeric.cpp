#include "lincomb/numeric.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>

namespace lincomb {

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

mpq_class sqrt_rounded(const mpq_class& x, unsigned bits, mpfr_rnd_t rnd) {
  if (x < 0) throw PreconditionError("sqrt of a negative rational");
  if (x == 0) return 0;
  Mpfr t(bits);
  mpfr_set_q(t.get(), x.get_mpq_t(), rnd);
  mpfr_sqrt(t.get(), t.get(), rnd);
  mpq_class r;
  mpfr_get_q(r.get_mpq_t(), t.get());
  return r;
}

}  // namespace

double log_abs(const mpq_class& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  Mpfr t(96);
  mpfr_set_q(t.get(), x.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(t.get(), t.get(), MPFR_RNDN);
  mpfr_log(t.get(), t.get(), MPFR_RNDN);
  return mpfr_get_d(t.get(), MPFR_RNDN);
}

double log_abs(const mpz_class& x) { return log_abs(mpq_class(x)); }

mpq_class sqrt_lower(const mpq_class& x, unsigned bits) { return sqrt_rounded(x, bits, MPFR_RNDD); }
mpq_class sqrt_upper(const mpq_class& x, unsigned bits) { return sqrt_rounded(x, bits, MPFR_RNDU); }

Verdict log_at_most(const QInterval& magnitude, double threshold) {
  // Relative slack far below any quantity reported, far above double rounding.
  constexpr double slack = 1e-12;
  const double tol = slack * std::max(1.0, std::fabs(threshold));
  const double log_hi = log_abs(magnitude.hi);
  if (log_hi <= threshold - tol) return Verdict::yes;
  const double log_lo = log_abs(magnitude.lo);
  if (log_lo > threshold + tol) return Verdict::no;
  return Verdict::indeterminate;
}

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw PreconditionError("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw PreconditionError("bad decimal: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw PreconditionError("bad rational: " + text);
  if (r.get_den() == 0) throw PreconditionError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_decimal(const mpq_class& x, int digits) {
  Mpfr t(static_cast<unsigned>(digits * 4 + 16));
  mpfr_set_q(t.get(), x.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, t.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace lincomb
