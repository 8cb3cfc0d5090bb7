#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "lincomb/arith.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/factor.hpp"
#include "lincomb/families.hpp"
#include "oracles.hpp"

using namespace lincomb;

namespace {

FamilySpec spec(FamilyKind k, IntPolynomial P, IntPolynomial Q, int n, double H, bool hyp = true) {
  FamilySpec s;
  s.kind = k;
  s.P = std::move(P);
  s.Q = std::move(Q);
  s.n = n;
  s.H = H;
  s.hypotheses = hyp;
  return s;
}

bool prime_ll(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("build_member examples") {
  const FamilySpec s = spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{-1, 0, -1}, 2, 100, false);
  CHECK(build_member(s, {5, 0}) == IntPolynomial{-1, 0, 4});
  const FamilySpec m = spec(FamilyKind::M, IntPolynomial{0, 0, 1}, IntPolynomial{-1}, 2, 100, false);
  CHECK(build_member(m, {4, 9}) == IntPolynomial{-9, 0, 4});
  CHECK_THROWS_AS(build_member(m, {4, 8}), PreconditionError);   // not coprime
  CHECK_THROWS_AS(build_member(m, {9, 4}), PreconditionError);   // l1 < l2
  CHECK_THROWS_AS(build_member(m, {4, 11}), PreconditionError);  // above H^delta = 10
  const FamilySpec r = spec(FamilyKind::R, IntPolynomial{0, 1, 1}, IntPolynomial{1}, 2, 100);
  CHECK_THROWS_AS(build_member(r, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(build_member(r, {4, 0}), PreconditionError);  // not prime
  CHECK(build_member(r, {7, 0}) == IntPolynomial{7, 1, 1});
  // u = deg P < n pads by T^(n-u)
  const FamilySpec pad = spec(FamilyKind::S, IntPolynomial{0, 1}, IntPolynomial{1}, 3, 100, false);
  CHECK(build_member(pad, {3, 0}) == IntPolynomial{1, 0, 0, 3});
  const FamilySpec bad = spec(FamilyKind::S, IntPolynomial{0, 1}, IntPolynomial{0, 2}, 1, 100, false);
  CHECK_THROWS_AS(build_member(bad, {2, 0}), PreconditionError);
}

TEST_CASE("member height stays within l H(P) + H(Q) <= 2 H^(1 + delta)") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FamilySpec s = random_spec(FamilyKind::S, 2 + static_cast<int>(seed % 2), 1000, 0.5, seed);
    const mpz_class hp = height(s.P), hq = height(s.Q);
    for (const auto& i : indices(s)) {
      const mpz_class h = height(build_member(s, i));
      CHECK(h <= hp * static_cast<unsigned long>(i.l1) + hq);
      CHECK(h.get_d() <= 2 * std::pow(s.H, 1 + s.delta));
    }
  }
}

TEST_CASE("index ranges") {
  CHECK(index_bound(100, 0.5) == 10);
  CHECK(index_bound(1e6, 0.5) == 1000);
  CHECK(index_bound(1000, 1.0 / 3) == 10);
  const FamilySpec s = spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{1}, 2, 100);
  const auto idx = indices(s);
  REQUIRE(idx.size() == 4);
  CHECK(idx[3].l1 == 7);
  const FamilySpec m = spec(FamilyKind::M, IntPolynomial{0, 0, 1}, IntPolynomial{1}, 2, 100);
  const auto mi = indices(m);
  // coprime pairs 1 <= a < b <= 10
  std::size_t expect = 0;
  for (int a = 1; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b)
      if (std::gcd(a, b) == 1) ++expect;
  CHECK(mi.size() == expect);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(spec(FamilyKind::S, IntPolynomial{0, 1, 1}, IntPolynomial{0, 1}, 2, 100)), PreconditionError);
  CHECK_THROWS_AS(validate(spec(FamilyKind::S, IntPolynomial{1, 0, 1}, IntPolynomial{1}, 2, 100)), PreconditionError);
  CHECK_THROWS_AS(validate(spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{1, 0, 1}, 2, 100)), PreconditionError);
  CHECK_THROWS_AS(validate(spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{1}, 2, 0.5)), PreconditionError);
  CHECK_NOTHROW(validate(spec(FamilyKind::S, IntPolynomial{1, 0, 1}, IntPolynomial{1}, 2, 100, false)));
  FamilySpec d = spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{1}, 2, 100);
  d.delta = 0;
  CHECK_THROWS_AS(validate(d), PreconditionError);
  // coprimality violation fails before any enumeration
  FamilySpec big = spec(FamilyKind::S, IntPolynomial{0, -1, 1}, IntPolynomial{-1, 1}, 2, 1e30, false);
  CHECK_THROWS_AS(census(big), PreconditionError);
}

TEST_CASE("census examples") {
  const FamilySpec s = spec(FamilyKind::S, IntPolynomial{0, 0, 0, 1}, IntPolynomial{1}, 3, 10000);
  const CensusReport r = census(s);
  CHECK(r.total_indices == 25);
  CHECK(r.rows.size() == r.total_indices);
  CHECK(r.reducible_count() == 0);
  CHECK(r.gamma == doctest::Approx(std::log(10000.0)));
  CHECK(r.gamma_prime == doctest::Approx(std::log(10000.0) / std::log(std::log(10000.0))));
  CHECK(r.ratio == 0);
  REQUIRE(r.smallest_irreducible_index);
  CHECK(r.smallest_irreducible_index->l1 == 2);

  const auto ce = counterexample_family(Counterexample::S_quadratic, 1e4, 0.5);
  const CensusReport c = census(ce.spec);
  std::set<std::uint64_t> red;
  for (const auto& [i, f] : c.reducible) {
    red.insert(i.l1);
    CHECK(f.factor_count() >= 2);
    CHECK(f.expand() == build_member(ce.spec, i));
  }
  for (const auto& i : ce.predicted()) CHECK(red.count(i.l1) == 1);
  std::size_t nred = 0;
  for (const auto& row : c.rows) nred += row.reducible;
  CHECK(nred == c.reducible_count());
  CHECK(c.reducible_count() >= 0.2 * std::pow(1e4, 0.25) / std::log(1e4));
}

TEST_CASE("census is independent of the thread count") {
  const FamilySpec s = random_spec(FamilyKind::R, 3, 100000, 0.5, 77);
  const std::string one = census_csv(census(s, {1, true, 256}));
  const std::string many = census_csv(census(s, {8, true, 256}));
  CHECK(one == many);
  CHECK(census_json(census(s, {3, false, 256})) == census_json(census(s, {5, false, 256})));
  CHECK(one.rfind("l,degree,reducible,factor_degrees\n", 0) == 0);
}

TEST_CASE("degree drops at most once per S/R family") {
  // S: l T^(n-u) P + Q loses degree only if l lc(P) + [T^n]Q = 0, impossible with deg Q < n;
  // without the hypotheses one index can cancel the top coefficient.
  const FamilySpec s = spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{1, 0, -3}, 2, 100, false);
  const CensusReport r = census(s);
  CHECK(r.degree_drops == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FamilySpec k = random_spec(seed % 2 ? FamilyKind::S : FamilyKind::R, 2, 500, 0.5, seed);
    CHECK(census(k).degree_drops <= 1);
  }
}

TEST_CASE("linear factor divisibility filter") {
  const FamilySpec s = spec(FamilyKind::S, IntPolynomial{0, 0, 1}, IntPolynomial{-1, 0, -1}, 2, 100, false);
  const auto c = linear_factor_divisibility_filter(s, {5, 0});
  for (const auto& f : c) CHECK(abs(f[0]) == 1);
  for (const auto& f : linear_factors(build_member(s, {5, 0})))
    CHECK(std::find(c.begin(), c.end(), f) != c.end());
  // Q(0) prime bounds the candidate count by 4 tau(lc)
  const FamilySpec p = spec(FamilyKind::S, IntPolynomial{0, 3, 2}, IntPolynomial{7, 1}, 2, 100);
  for (const auto& i : indices(p)) {
    const IntPolynomial m = build_member(p, i);
    CHECK(linear_factor_divisibility_filter(p, i).size() <= 4 * tau(m.leading()).get_ui());
  }
  const FamilySpec r = spec(FamilyKind::R, IntPolynomial{0, 0, 1}, IntPolynomial{1}, 2, 100);
  CHECK_THROWS_AS(linear_factor_divisibility_filter(r, {2, 0}), PreconditionError);

  // never misses a true linear factor
  int members = 0, with_linear = 0;
  for (std::uint64_t seed = 0; members < 10000; ++seed) {
    const FamilySpec k = random_spec(FamilyKind::S, 2 + static_cast<int>(seed % 3), 30, 1.0, seed);
    for (const auto& i : indices(k)) {
      const IntPolynomial m = build_member(k, i);
      const auto cand = linear_factor_divisibility_filter(k, i);
      const auto lf = linear_factors(m);
      with_linear += !lf.empty();
      for (const auto& f : lf) REQUIRE(std::find(cand.begin(), cand.end(), f) != cand.end());
      if (++members == 10000) break;
    }
  }
  CHECK(with_linear > 0);
}

TEST_CASE("szegedy shift") {
  const SzegedyResult a = szegedy_shift(IntPolynomial{0, 0, 0, 1});
  CHECK(a.b == 2);
  CHECK(a.certificate.expand() == IntPolynomial{2, 0, 0, 1});
  CHECK(a.scanned == 4);  // 0, 1, -1, 2
  CHECK(szegedy_shift(IntPolynomial{0, -1, 0, 1}).b == 1);
  CHECK(szegedy_shift(IntPolynomial{2, 0, 0, 1}).b == 0);
  CHECK(szegedy_shift(IntPolynomial{0, 0, 0, 1}).budget == doctest::Approx(std::pow(std::log(3.0), 2)));
  CHECK_THROWS_AS(szegedy_shift(IntPolynomial{0, 0, 1}), PreconditionError);
  // T^3 - T - 1 is irreducible as well; the positive shift wins the tie
  CHECK(szegedy_shift(IntPolynomial{0, -1, 0, 1}).scanned == 2);
  // every reported shift is the first irreducible one in scan order
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int it = 0; it < 200; ++it) {
    IntPolynomial P{d(rng), d(rng), d(rng), 1 + (d(rng) + 20) % 5};
    const SzegedyResult r = szegedy_shift(P);
    CHECK(is_irreducible(P + IntPolynomial::monomial(r.b, 0)));
    for (long b = 0; b < mpz_class(abs(r.b)).get_si(); ++b) {
      CHECK_FALSE(is_irreducible(P + IntPolynomial{b}));
      CHECK_FALSE(is_irreducible(P + IntPolynomial{-b}));
    }
    if (r.b < 0) CHECK_FALSE(is_irreducible(P + IntPolynomial::monomial(-r.b, 0)));
  }
}

TEST_CASE("counterexample families") {
  const auto s = counterexample_family(Counterexample::S_quadratic, 1e4, 1.0);
  CHECK_FALSE(s.spec.hypotheses);
  const auto ps = s.predicted();
  CHECK(std::find(ps.begin(), ps.end(), FamilyIndex{17, 0}) != ps.end());
  CHECK(build_member(s.spec, {17, 0}) == IntPolynomial{-1, 0, 16});
  CHECK_FALSE(is_irreducible(build_member(s.spec, {17, 0})));
  for (const auto& i : ps) {
    CHECK(prime_ll(static_cast<long long>(i.l1)));
    CHECK_FALSE(is_irreducible(build_member(s.spec, i)));
  }

  const auto m = counterexample_family(Counterexample::M_powers, 100, 1.0, 2);
  CHECK(build_member(m.spec, {4, 9}) == IntPolynomial{-9, 0, 4});
  const auto pm = m.predicted();
  CHECK(std::find(pm.begin(), pm.end(), FamilyIndex{4, 9}) != pm.end());
  for (const auto& i : pm) CHECK_FALSE(is_irreducible(build_member(m.spec, i)));

  const auto r = counterexample_family(Counterexample::R_shift, 1e4, 1.0);
  for (const auto& i : r.predicted()) {
    const long long N = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(i.l1 - 1))));
    CHECK(build_member(r.spec, i) == IntPolynomial{-N * N, 0, 1});
  }
  CHECK(parse_counterexample("R_shift") == Counterexample::R_shift);
  CHECK_THROWS_AS(parse_counterexample("x"), PreconditionError);
}

TEST_CASE("pairwise coprimality") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FamilySpec s = random_spec(FamilyKind::S, 3, 200, 0.5, seed);
    CHECK(pairwise_coprime_check(s, indices(s)));
    for (const auto& i : indices(s)) CHECK(coprime(build_member(s, i), s.P));
  }
  const FamilySpec m = spec(FamilyKind::M, IntPolynomial{0, 0, 1}, IntPolynomial{-1}, 2, 100, false);
  CHECK_THROWS_AS(pairwise_coprime_check(m, {{2, 4}, {3, 6}}), PreconditionError);
  CHECK(pairwise_coprime_check(m, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("random spec respects the hypotheses and the seed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FamilySpec s = random_spec(FamilyKind::S, 3, 50, 0.5, seed);
    CHECK(s.P.degree() == 3);
    CHECK(s.P[0] == 0);
    CHECK(s.Q.degree() < 3);
    CHECK(s.Q[0] != 0);
    CHECK(coprime(s.P, s.Q));
    CHECK(height(s.P) <= 50);
    CHECK_NOTHROW(validate(s));
    CHECK(random_spec(FamilyKind::S, 3, 50, 0.5, seed).P == s.P);
  }
  CHECK(random_polynomial(4, 10, 1) == random_polynomial(4, 10, 1));
  CHECK(random_polynomial(4, 10, 1).degree() == 4);
}
