// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lincomb/analytic.hpp"
#include "lincomb/arith.hpp"
#include "lincomb/cli.hpp"
#include "lincomb/exponents.hpp"
#include "lincomb/factor.hpp"
#include "lincomb/families.hpp"
#include "oracles.hpp"

using namespace lincomb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, n) on all cores.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers(); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

IntPolynomial from_ll(const oracle::Poly& p) {
  std::vector<mpz_class> c;
  for (long long x : p) c.emplace_back(static_cast<long>(x));
  return IntPolynomial(c);
}

double closed_form(int n) { return (n + std::sqrt(static_cast<double>(n) * n + 16.0 * n - 8.0)) / 4.0; }

// ---------------------------------------------------------------------------

Outcome a1() {
  Outcome o;
  const double stored[] = {2.5, 3.1213, 3.7122, 4.2839, 4.8423};
  std::ostringstream out, err;
  const int code = cli::run({"bounds", "--table", "--out", "csv"}, out, err);
  if (code != 0) {
    o.pass = false;
    o.detail = "bounds --table exited " + std::to_string(code);
    return o;
  }
  const auto t = comparison_table();
  double worst = 0;
  for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::abs(t[i].bound - stored[i]));
  o.pass = t.size() == 5 && worst <= 5e-5;
  std::ostringstream d;
  d << "max deviation " << worst;
  o.detail = d.str();
  return o;
}

Outcome a2() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 7; ++n) worst = std::max(worst, std::abs(equilibrium(n).value - closed_form(n)));
  o.pass = worst <= 1e-9;
  std::ostringstream d;
  d << "max |equilibrium - closed form| " << worst;
  o.detail = d.str();
  return o;
}

Outcome a3() {
  // all coefficient vectors of length 5 over [-5, 5]
  const std::size_t total = 161051;
  std::atomic<std::size_t> checked{0}, mismatches{0};
  std::mutex m;
  std::string first_bad;
  parallel_for(total, [&](std::size_t code) {
    oracle::Poly op(5);
    std::size_t c = code;
    for (auto& x : op) {
      x = static_cast<long long>(c % 11) - 5;
      c /= 11;
    }
    oracle::trim(op);
    if (oracle::degree(op) < 1) return;
    const long long ct = oracle::content(op);
    oracle::Poly prim = op;
    for (auto& x : prim) x /= ct;
    if (prim.back() < 0)
      for (auto& x : prim) x = -x;
    std::vector<IntPolynomial> expect;
    for (const auto& g : oracle::factor_primitive(prim)) expect.push_back(from_ll(g));
    const IntPolynomial p = from_ll(op);
    const Factorization f = factor(p);
    std::vector<IntPolynomial> got;
    for (const auto& fp : f.factors)
      for (unsigned i = 0; i < fp.mult; ++i) got.push_back(fp.poly);
    const bool ok = got == expect && f.expand() == p && f.content == static_cast<long>(ct) && is_irreducible(p) == (expect.size() == 1);
    ++checked;
    if (!ok) {
      ++mismatches;
      std::lock_guard<std::mutex> lock(m);
      if (first_bad.empty()) first_bad = p.to_string();
    }
  });
  Outcome o;
  o.pass = mismatches == 0 && checked > 100000;
  o.detail = std::to_string(checked.load()) + " polynomials, " + std::to_string(mismatches.load()) + " mismatches";
  if (!first_bad.empty()) o.detail += " (first: " + first_bad + ")";
  return o;
}

Outcome a4() {
  const double Hs[] = {1e2, 1e3, 1e4, 1e5};
  const std::size_t instances = 200;
  Outcome o;
  std::vector<double> medians;
  double worst = 0;
  std::size_t violations = 0;
  for (double H : Hs) {
    std::vector<double> ratio(instances);
    std::vector<char> bad(instances, 0);
    parallel_for(instances, [&](std::size_t i) {
      const FamilyKind kind = i % 2 ? FamilyKind::R : FamilyKind::S;
      const int n = 2 + static_cast<int>((i / 2) % 2);
      const FamilySpec s = random_spec(kind, n, static_cast<long>(H), 0.5, 1000 + i);
      const CensusReport r = census(s, {1, false, 256});
      ratio[i] = static_cast<double>(r.reducible_count()) / r.gamma_prime;
      if (static_cast<double>(r.reducible_count()) > 20 * r.gamma_prime) bad[i] = 1;
    });
    for (std::size_t i = 0; i < instances; ++i) {
      violations += bad[i];
      worst = std::max(worst, ratio[i]);
    }
    std::sort(ratio.begin(), ratio.end());
    medians.push_back((ratio[instances / 2 - 1] + ratio[instances / 2]) / 2);
  }
  bool monotone = true;
  for (std::size_t k = 1; k < medians.size(); ++k) monotone = monotone && medians[k] <= medians[k - 1];
  o.pass = violations == 0 && monotone;
  std::ostringstream d;
  d << "max reducible/Gamma' " << worst << ", medians";
  for (double m : medians) d << " " << m;
  o.detail = d.str();
  return o;
}

Outcome a5() {
  const double Hs[] = {1e3, 1e4, 1e5, 1e6};
  Outcome o;
  std::ostringstream d;
  d << "counts";
  std::size_t prev = 0;
  bool first = true;
  for (double H : Hs) {
    const auto ce = counterexample_family(Counterexample::S_quadratic, H, 0.5);
    const std::size_t c = census(ce.spec).reducible_count();
    const double floor = 0.2 * std::pow(H, 0.25) / std::log(H);
    if (static_cast<double>(c) < floor) o.pass = false;
    if (!first && c <= prev) o.pass = false;
    d << " " << c << " (floor " << floor << ")";
    prev = c;
    first = false;
  }
  o.detail = d.str();
  return o;
}

Outcome a6() {
  Outcome o;
  std::ostringstream d;
  for (int n : {4, 5}) {
    const long q = 1000;
    // Q has the root beta = 1 - 1/q; P = T g with g(beta) = q^(1-n) and g'(beta) about q.
    const IntPolynomial Q{-(q - 1), q};
    IntPolynomial g{1};
    for (int k = 0; k < n - 1; ++k) g = g * IntPolynomial{1, -1};
    g = g + IntPolynomial{-(q - 1), q};
    const IntPolynomial P = IntPolynomial{0, 1} * g;
    const double H = std::max(height(P), height(Q)).get_d();
    const ProximityThresholds th = proximity_thresholds(n);

    // |P(beta)| from the resultant: Res(P, qT - (q-1)) = (-1)^n q^n P(beta) up to sign.
    const mpz_class res = oracle::resultant(P.coeffs(), Q.coeffs());
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    mpq_class pb(abs(res), qn);
    pb.canonicalize();
    const mpq_class beta(q - 1, q);
    mpq_class expect = beta;
    for (int k = 0; k < n - 1; ++k) expect /= q;
    const bool res_ok = pb == expect;

    const RootGap gap = min_root_gap(P, Q, 256);
    const Verdict close = gap_at_most(gap.gap, H, th.kappa + 0.1);

    FamilySpec s;
    s.kind = FamilyKind::S;
    s.P = P;
    s.Q = Q;
    s.n = n;
    s.H = H;
    s.delta = 0.5;
    const CensusReport r = census(s, {0, true, 256});
    const bool count_ok = static_cast<double>(r.reducible_count()) <= 20 * r.gamma;

    const RationalWitness xi = midpoint_witness(gap.alpha, gap.beta);
    const double bound = 10 * std::pow(H, -(2.0 * n - 7));
    const double vp = evaluate_at_witness(P, xi).hi.get_d(), vq = evaluate_at_witness(Q, xi).hi.get_d();
    const bool mid_ok = vp <= bound && vq <= bound;

    if (!(res_ok && close == Verdict::yes && r.proximity == Verdict::yes && count_ok && mid_ok)) o.pass = false;
    d << "n=" << n << ": gap<=" << gap.gap.hi.get_d() << " vs H^-(kappa+0.1)=" << std::pow(H, -(th.kappa + 0.1))
      << ", resultant " << (res_ok ? "ok" : "MISMATCH") << ", reducible " << r.reducible_count() << " <= 20*Gamma="
      << 20 * r.gamma << ", |P(xi)|=" << vp << " |Q(xi)|=" << vq << " vs " << bound << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome a7() {
  const std::size_t N = 1000;
  std::vector<double> ratio(N, 0);
  std::vector<char> ok(N, 0);
  parallel_for(N, [&](std::size_t i) {
    IntPolynomial P;
    std::mt19937_64 rng(7000 + i);
    std::uniform_int_distribution<long> c(-1'000'000, 1'000'000), small(-1000, 1000);
    if (i < 500) {
      P = random_polynomial(3, 1'000'000, 7000 + i);
    } else if (i % 3 == 0) {
      // reducible start: linear times quadratic
      long a = small(rng);
      if (a == 0) a = 1;
      P = IntPolynomial{small(rng), a} * IntPolynomial{small(rng) / 2, small(rng) / 2, static_cast<long>(1 + i % 7)};
    } else if (i % 3 == 1) {
      // primorial leading coefficient, many divisors
      const mpz_class c3 = primorial(1 + static_cast<unsigned>(i % 7));
      P = IntPolynomial(std::vector<mpz_class>{c(rng) % (c3 * 2 + 1), c(rng), c(rng), c3});
    } else {
      // c3 (T^3 - T) + k: roots 0, 1, -1 for k = 0
      const long c3 = 1 + static_cast<long>(i % 1000);
      P = IntPolynomial{0, -c3, 0, c3};
    }
    const SzegedyResult r = szegedy_shift(P);
    ratio[i] = mpz_class(abs(r.b)).get_d() / r.budget;
    const double lhs = gyory_log_bound(3, omega(P.leading()));
    const double rhs = std::log(mpz_class(abs(r.b)).get_d() + 1);
    ok[i] = is_irreducible(P + IntPolynomial::monomial(r.b, 0)) && height(P) <= 1'000'000 && lhs > 1e3 * rhs;
  });
  Outcome o;
  const double worst = *std::max_element(ratio.begin(), ratio.end());
  const std::size_t bad = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  o.pass = worst <= 5 && bad == 0;
  std::ostringstream d;
  d << "max |b|/(tau(c3)(log H)^2) " << worst << ", Gyory comparison failures " << bad;
  o.detail = d.str();
  return o;
}

Outcome a8() {
  const std::size_t pairs = 100000;
  std::atomic<std::size_t> violations{0}, undecided{0}, evaluations{0};
  parallel_for(pairs, [&](std::size_t i) {
    std::mt19937_64 rng(80000 + i);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_int_distribution<long> den(2, 10000);
    IntPolynomial u1, u2;
    std::uint64_t s = 0;
    do {
      u1 = random_polynomial(deg(rng), 10000, rng() ^ s);
      u2 = random_polynomial(deg(rng), 10000, rng() ^ (s + 1));
      s += 2;
    } while (!coprime(u1, u2));
    for (int k = 0; k < 10; ++k) {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(1, q - 1);
      mpq_class x(num(rng), q);
      x.canonicalize();
      const FloorCheck f = liouville_floor(u1, u2, RationalWitness::exact(x), 1e-6);
      ++evaluations;
      if (f.holds == Verdict::no) ++violations;
      if (f.holds == Verdict::indeterminate) ++undecided;
    }
  });
  Outcome o;
  o.pass = violations == 0 && undecided == 0;
  o.detail = std::to_string(evaluations.load()) + " checks, " + std::to_string(violations.load()) + " violations, " +
             std::to_string(undecided.load()) + " undecided";
  return o;
}

Outcome a9() {
  const RationalWitness phi = continued_fraction_witness(std::vector<mpz_class>(60, 1));
  Outcome o;
  std::ostringstream d;
  d << "counts";
  for (long H : {100L, 1000L, 10000L}) {
    const CoprimeCensus c = small_coprime_census(phi, 1, 2, H);
    const double cap = 3 * std::log(static_cast<double>(H));
    if (static_cast<double>(c.count) > cap || c.indeterminate != 0) o.pass = false;
    d << " " << c.count << " (cap " << cap << ")";
  }
  o.detail = d.str();
  return o;
}

Outcome a10() {
  Outcome o;
  std::ostringstream d;
  double worst_w = 1e300, worst_l = 1e300;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> a(1, 5);
    std::vector<mpz_class> pq{0};
    for (int k = 0; k < 40; ++k) pq.emplace_back(a(rng));
    const RationalWitness xi = continued_fraction_witness(pq);
    for (int n = 1; n <= 3; ++n) {
      const ExponentEstimate w = estimate_w(xi, n, 1000, WVariant::any);
      const ExponentEstimate l = estimate_lambda(xi, n, 10000);
      worst_w = std::min(worst_w, w.value - n);
      worst_l = std::min(worst_l, l.value - 1.0 / n);
      if (w.indeterminate || w.value < n - 0.2 || l.value < 1.0 / n - 0.05) o.pass = false;
    }
  }
  d << "min (w - n) " << worst_w << ", min (lambda - 1/n) " << worst_l;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    Outcome (*run)();
    double budget_s;
  };
  const Criterion all[] = {{"A1", a1, 1},   {"A2", a2, 1},   {"A3", a3, 300}, {"A4", a4, 900}, {"A5", a5, 600},
                           {"A6", a6, 600}, {"A7", a7, 300}, {"A8", a8, 300}, {"A9", a9, 120}, {"A10", a10, 600}};
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(t0);
    if (t > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    std::printf("%s %s (%.2fs) %s\n", c.id, o.pass ? "PASS" : "FAIL", t, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
