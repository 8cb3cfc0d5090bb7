#include "lincomb/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"
#include "lincomb/factor.hpp"

namespace lincomb {

namespace {

struct Cf {
  mpf_class re, im;
};

Cf cmul(const Cf& a, const Cf& b, unsigned prec) {
  Cf r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Cf cdiv(const Cf& a, const Cf& b, unsigned prec) {
  mpf_class den(b.re * b.re + b.im * b.im, prec);
  Cf r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = (a.re * b.re + a.im * b.im) / den;
  r.im = (a.im * b.re - a.re * b.im) / den;
  return r;
}

mpf_class cabs2(const Cf& a, unsigned prec) { return mpf_class(a.re * a.re + a.im * a.im, prec); }

// f(z) and f'(z) by Horner.
void horner(const std::vector<mpf_class>& c, const Cf& z, Cf& f, Cf& df, unsigned prec) {
  f = {mpf_class(0, prec), mpf_class(0, prec)};
  df = {mpf_class(0, prec), mpf_class(0, prec)};
  for (std::size_t i = c.size(); i-- > 0;) {
    df = cmul(df, z, prec);
    df.re += f.re;
    df.im += f.im;
    f = cmul(f, z, prec);
    f.re += c[i];
  }
}

struct CQ {
  mpq_class re, im;
};

// Exact evaluation over Q(i).
void horner_exact(const IntPolynomial& p, const CQ& z, CQ& f, CQ& df) {
  f = {0, 0};
  df = {0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    CQ ndf{df.re * z.re - df.im * z.im + f.re, df.re * z.im + df.im * z.re + f.im};
    CQ nf{f.re * z.re - f.im * z.im + p[i], f.re * z.im + f.im * z.re};
    df = std::move(ndf);
    f = std::move(nf);
  }
}

// Aberth iteration for a squarefree polynomial of degree >= 2.
std::vector<Cf> aberth(const IntPolynomial& f, unsigned prec, unsigned& iterations, bool& converged) {
  const int d = f.degree();
  std::vector<mpf_class> c;
  for (const auto& x : f.coeffs()) c.emplace_back(x, prec);
  // Cauchy bound 1 + max |a_i / a_d|.
  mpf_class bound(0, prec);
  for (int i = 0; i < d; ++i) {
    mpf_class r(abs(c[static_cast<std::size_t>(i)]) / abs(c[static_cast<std::size_t>(d)]), prec);
    if (r > bound) bound = r;
  }
  bound += 1;
  const double rad = std::min(bound.get_d(), 1e300);
  std::vector<Cf> z;
  for (int k = 0; k < d; ++k) {
    const double ang = 2 * std::numbers::pi * k / d + 0.4;
    z.push_back({mpf_class(rad * std::cos(ang), prec), mpf_class(rad * std::sin(ang), prec)});
  }
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 16 ? prec - 8 : prec);
  const mpf_class tol2(tol * tol, prec);
  const unsigned cap = 200 + 4 * prec;
  converged = false;
  Cf fz, dfz;
  for (iterations = 0; iterations < cap && !converged; ++iterations) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      horner(c, zk, fz, dfz, prec);
      if (cabs2(fz, prec) == 0) continue;
      if (cabs2(dfz, prec) == 0) {
        zk.re += tol;
        converged = false;
        continue;
      }
      const Cf N = cdiv(fz, dfz, prec);
      Cf S{mpf_class(0, prec), mpf_class(0, prec)};
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Cf diff{mpf_class(zk.re - z[static_cast<std::size_t>(j)].re, prec),
                mpf_class(zk.im - z[static_cast<std::size_t>(j)].im, prec)};
        if (cabs2(diff, prec) == 0) diff.re = tol;
        const Cf inv = cdiv(Cf{mpf_class(1, prec), mpf_class(0, prec)}, diff, prec);
        S.re += inv.re;
        S.im += inv.im;
      }
      const Cf NS = cmul(N, S, prec);
      Cf den{mpf_class(1 - NS.re, prec), mpf_class(-NS.im, prec)};
      Cf w = cabs2(den, prec) == 0 ? N : cdiv(N, den, prec);
      zk.re -= w.re;
      zk.im -= w.im;
      mpf_class scale(1 + cabs2(zk, prec), prec);
      if (cabs2(w, prec) > tol2 * scale) converged = false;
    }
  }
  return z;
}

mpq_class to_q(const mpf_class& f) {
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

mpq_class disk_radius(const IntPolynomial& f, const CQ& z, bool& ok) {
  CQ fz, dfz;
  horner_exact(f, z, fz, dfz);
  const mpq_class num = fz.re * fz.re + fz.im * fz.im;
  const mpq_class den = dfz.re * dfz.re + dfz.im * dfz.im;
  ok = den != 0;
  if (num == 0) return 0;
  if (!ok) return 0;
  return f.degree() * sqrt_upper(num / den, 64);
}

IntPolynomial normalized(const IntPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  return q.leading() < 0 ? -q : q;
}

}  // namespace

RootSet roots(const IntPolynomial& p, unsigned precision) {
  if (p.degree() < 1) throw PreconditionError("roots: polynomial must have degree >= 1");
  if (precision < 32) precision = 32;
  RootSet out;
  out.precision = precision;
  const Factorization fac = factor(normalized(p));
  // Disk groups: every distinct root once, with its multiplicity.
  struct Group {
    RootDisk disk;
    unsigned mult;
  };
  std::vector<Group> groups;
  bool certified = true;
  for (const auto& fp : fac.factors) {
    const IntPolynomial& f = fp.poly;
    if (f.degree() == 1) {
      mpq_class r(-f[0], f[1]);
      r.canonicalize();
      groups.push_back({{r, 0, 0}, fp.mult});
      continue;
    }
    unsigned iters = 0;
    bool conv = false;
    const unsigned work = precision + 32;
    const auto z = aberth(f, work, iters, conv);
    out.iterations = std::max(out.iterations, iters);
    if (!conv) certified = false;
    for (const auto& zi : z) {
      CQ c{to_q(zi.re), to_q(zi.im)};
      bool ok = true;
      mpq_class r = disk_radius(f, c, ok);
      if (!ok) {
        // f'(z) = 0: fall back to the Cauchy disk around the origin.
        mpq_class b = 0;
        for (int i = 0; i < f.degree(); ++i) b = std::max(b, mpq_class(abs(f[static_cast<std::size_t>(i)]), abs(f.leading())));
        c = {0, 0};
        r = b + 1;
        certified = false;
      }
      groups.push_back({{c.re, c.im, r}, fp.mult});
    }
  }
  // Separation of distinct roots.
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const mpq_class D = center_distance_sq(groups[i].disk, groups[j].disk);
      const mpq_class s = groups[i].disk.radius + groups[j].disk.radius;
      if (D <= s * s) out.separated = false;
    }
  }
  // A disk meeting the real axis whose mirror image meets no other disk
  // holds a real root: its conjugate has nowhere else to go.
  if (out.separated) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      RootDisk& d = groups[i].disk;
      if (d.im == 0 || abs(d.im) > d.radius) continue;
      const RootDisk mirror{d.re, -d.im, d.radius};
      bool alone = true;
      for (std::size_t j = 0; j < groups.size() && alone; ++j) {
        if (j == i) continue;
        const mpq_class s = mirror.radius + groups[j].disk.radius;
        if (center_distance_sq(mirror, groups[j].disk) <= s * s) alone = false;
      }
      if (alone) d.im = 0;
    }
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    if (a.disk.re != b.disk.re) return a.disk.re < b.disk.re;
    return a.disk.im < b.disk.im;
  });
  mpq_class target = 1;
  mpz_class pow2 = 1;
  pow2 <<= precision / 2;
  target /= pow2;
  for (const auto& g : groups) {
    if (g.disk.radius > target) out.degraded = true;
    for (unsigned m = 0; m < g.mult; ++m) out.roots.push_back(g.disk);
  }
  if (!certified) out.degraded = true;
  return out;
}

mpq_class center_distance_sq(const RootDisk& a, const RootDisk& b) {
  const mpq_class dr = a.re - b.re, di = a.im - b.im;
  return dr * dr + di * di;
}

QInterval distance(const RootDisk& a, const RootDisk& b, unsigned bits) {
  const mpq_class s = a.radius + b.radius;
  if (a.im == b.im) {
    const mpq_class d = abs(a.re - b.re);
    return {d > s ? mpq_class(d - s) : mpq_class(0), d + s};
  }
  const mpq_class D = center_distance_sq(a, b);
  mpq_class lo = sqrt_lower(D, bits) - s;
  if (lo < 0) lo = 0;
  return {lo, sqrt_upper(D, bits) + s};
}

RootGap min_root_gap(const IntPolynomial& p, const IntPolynomial& q, unsigned precision) {
  if (p.degree() < 1 || q.degree() < 1) throw PreconditionError("min_root_gap: both degrees must be >= 1");
  const IntPolynomial g = gcd(p, q);
  if (g.degree() >= 1) {
    const RootDisk z = roots(g, precision).roots.front();
    return {{0, 0}, z, z};
  }
  const RootSet rp = roots(p, precision), rq = roots(q, precision);
  RootGap best;
  bool first = true;
  for (const auto& a : rp.roots) {
    for (const auto& b : rq.roots) {
      const QInterval d = distance(a, b);
      if (first) {
        best = {d, a, b};
        first = false;
        continue;
      }
      if (d.lo < best.gap.lo) best.gap.lo = d.lo;
      if (d.hi < best.gap.hi) {
        best.gap.hi = d.hi;
        best.alpha = a;
        best.beta = b;
      }
    }
  }
  return best;
}

ProximityThresholds proximity_thresholds(int n) {
  if (n < 2) throw PreconditionError("proximity thresholds need n >= 2");
  return {n, 2.0 * n - 6, n == 2 ? 1.0 : 2.0 * n - 4};
}

Verdict gap_at_most(const QInterval& gap, double H, double exponent) {
  if (!(H > 1)) throw PreconditionError("gap_at_most: H must exceed 1");
  return log_at_most(gap, -exponent * std::log(H));
}

Verdict verify_pop(const IntPolynomial& p, const RootDisk& alpha, const RationalWitness& xi) {
  const int n = p.degree();
  if (n < 1) throw PreconditionError("verify_pop: degree must be >= 1");
  const RootDisk x{xi.approximant, 0, xi.radius};
  const QInterval dist = distance(x, alpha);
  if (dist.lo > 1) throw PreconditionError("verify_pop: |xi - alpha| exceeds 1");
  mpq_class xlo = abs(xi.approximant) - xi.radius;
  if (xlo < 0) xlo = 0;
  const mpq_class xhi = abs(xi.approximant) + xi.radius;
  auto K = [&](const mpq_class& t) {
    mpq_class m = 1, b = t + 1;
    for (int i = 0; i < n; ++i) m *= b;
    if (m < 1) m = 1;
    return mpq_class(n * (n + 1) * m * height(p));
  };
  const QInterval val = evaluate_at_witness(p, xi);
  if (val.hi <= K(xlo) * dist.lo) return Verdict::yes;
  if (val.lo > K(xhi) * dist.hi) return Verdict::no;
  return Verdict::indeterminate;
}

RationalWitness midpoint_witness(const RootDisk& alpha, const RootDisk& beta) {
  const mpq_class approx = (alpha.re + beta.re) / 2;
  const mpq_class radius = (alpha.radius + beta.radius) / 2 + abs(alpha.im + beta.im) / 2;
  if (radius >= 1) throw PreconditionError("midpoint_witness: radius would reach 1");
  return RationalWitness(approx, radius, "midpoint");
}

FloorCheck liouville_floor(const IntPolynomial& u1, const IntPolynomial& u2, const RationalWitness& xi, double c) {
  if (u1.degree() < 1 || u2.degree() < 1) throw PreconditionError("liouville_floor: degrees must be >= 1");
  if (!(c > 0)) throw PreconditionError("liouville_floor: c must be positive");
  if (!coprime(u1, u2)) throw PreconditionError("liouville_floor: polynomials share a factor");
  const mpz_class H = std::max(height(u1), height(u2));
  mpz_class Hp;
  mpz_pow_ui(Hp.get_mpz_t(), H.get_mpz_t(), static_cast<unsigned long>(u1.degree() + u2.degree() - 1));
  FloorCheck out;
  out.threshold = mpq_class(c) / Hp;
  const QInterval a = evaluate_at_witness(u1, xi), b = evaluate_at_witness(u2, xi);
  out.max_value = {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
  if (out.max_value.lo >= out.threshold)
    out.holds = Verdict::yes;
  else if (out.max_value.hi < out.threshold)
    out.holds = Verdict::no;
  else
    out.holds = Verdict::indeterminate;
  return out;
}

CoprimeCensus small_coprime_census(const RationalWitness& xi, int d, double mu, const mpz_class& H) {
  if (d < 1) throw PreconditionError("small_coprime_census: d must be >= 1");
  if (!(mu > 2 * d - 1)) throw PreconditionError("small_coprime_census: requires mu > 2d - 1");
  if (H < 1) throw PreconditionError("small_coprime_census: H must be >= 1");
  const double Hd = H.get_d();
  double box = 0;
  for (int k = 1; k <= d; ++k) box += Hd * std::pow(2 * Hd + 1, k - 1) * 3;
  if (box > 1e8) throw LimitError("small_coprime_census: search box exceeds 10^8 candidates");
  const long Hl = H.get_si();

  CoprimeCensus out;
  std::vector<IntPolynomial> hits;
  for (int k = 1; k <= d; ++k) {
    // c_k in [1, H], c_1..c_{k-1} in [-H, H]; odometer over those.
    std::vector<long> c(static_cast<std::size_t>(k + 1), -Hl);
    c[static_cast<std::size_t>(k)] = 1;
    c[0] = 0;
    while (true) {
      std::vector<mpz_class> coeffs(c.begin(), c.end());
      coeffs[0] = 0;
      const IntPolynomial upper{std::vector<mpz_class>(coeffs)};
      const QInterval R = evaluate_signed(upper, xi);
      // |c0 + R| <= 1 is necessary.
      mpz_class lo, hi;
      const mpq_class a = -R.hi - 1, b = -R.lo + 1;
      mpz_cdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      mpz_fdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
      if (lo < -H) lo = -H;
      if (hi > H) hi = H;
      for (mpz_class c0 = lo; c0 <= hi; ++c0) {
        ++out.examined;
        coeffs[0] = c0;
        IntPolynomial q{std::vector<mpz_class>(coeffs)};
        const mpz_class hq = height(q);
        const Verdict v = log_at_most(evaluate_at_witness(q, xi), -mu * log_abs(hq));
        if (v == Verdict::yes)
          hits.push_back(std::move(q));
        else if (v == Verdict::indeterminate)
          ++out.indeterminate;
      }
      // advance odometer over indices 1..k (index k from 1..H)
      int i = 1;
      for (; i <= k; ++i) {
        auto& ci = c[static_cast<std::size_t>(i)];
        if (ci < Hl) {
          ++ci;
          break;
        }
        ci = i == k ? 1 : -Hl;
      }
      if (i > k) break;
    }
  }
  out.qualifying = hits.size();
  std::sort(hits.begin(), hits.end(), [](const IntPolynomial& x, const IntPolynomial& y) {
    const mpz_class hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return canonical_less(x, y);
  });
  for (auto& q : hits) {
    bool ok = true;
    for (const auto& s : out.family) {
      if (!coprime(q, s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.family.push_back(q);
  }
  out.count = out.family.size();
  return out;
}

WbsReport wbs_root_report(const IntPolynomial& p1, const IntPolynomial& p2, const RationalWitness& xi, double eta,
                          int n, unsigned precision) {
  if (p1.degree() < 1 || p2.degree() < 1 || p1.degree() > n || p2.degree() > n)
    throw PreconditionError("wbs_root_report: degrees must lie in 1..n");
  if (!coprime(p1, p2)) throw PreconditionError("wbs_root_report: polynomials share a factor");
  const mpz_class Hm = std::max(height(p1), height(p2));
  const double thr = -eta * log_abs(Hm);
  for (const IntPolynomial* p : {&p1, &p2}) {
    const Verdict v = log_at_most(evaluate_at_witness(*p, xi), thr);
    if (v == Verdict::no) throw PreconditionError("wbs_root_report: |P(xi)| <= H^-eta fails");
    if (v == Verdict::indeterminate) throw IndeterminateError("wbs_root_report: |P(xi)| <= H^-eta undecided");
  }
  const RootDisk x{xi.approximant, 0, xi.radius};
  WbsReport out;
  bool first = true;
  int owner = 1;
  for (const IntPolynomial* p : {&p1, &p2}) {
    for (const auto& r : roots(*p, precision).roots) {
      const QInterval d = distance(x, r);
      if (first || d.hi < out.distance.hi) {
        out.root = r;
        out.distance = d;
        out.owner = owner;
        first = false;
      }
    }
    ++owner;
  }
  const mpz_class Ho = height(out.owner == 1 ? p1 : p2);
  if (out.distance.hi == 0)
    out.achieved = std::numeric_limits<double>::infinity();
  else if (Ho == 1)
    out.achieved = std::numeric_limits<double>::quiet_NaN();
  else
    out.achieved = -log_abs(out.distance.hi) / log_abs(Ho) - 1;
  out.target = 1.5 * eta - n + 0.5;
  return out;
}

std::string to_json_text(const RootSet& r) {
  nlohmann::ordered_json j;
  j["precision"] = r.precision;
  j["separated"] = r.separated;
  j["degraded"] = r.degraded;
  j["iterations"] = r.iterations;
  j["roots"] = nlohmann::ordered_json::array();
  for (const auto& d : r.roots) {
    j["roots"].push_back({{"re", to_decimal(d.re, 30)},
                          {"im", to_decimal(d.im, 30)},
                          {"radius", to_decimal(d.radius, 6)},
                          {"re_exact", d.re.get_str()},
                          {"im_exact", d.im.get_str()},
                          {"radius_exact", d.radius.get_str()}});
  }
  return j.dump();
}

}  // namespace lincomb
