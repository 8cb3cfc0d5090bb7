#include "zp_poly.hpp"

#include <algorithm>
#include <cassert>

namespace lincomb::detail {

Word Zp::pow(Word a, Word e) const {
  Word r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Word Zp::reduce(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return static_cast<Word>(m);
}

void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZpPoly zp_add(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ZpPoly zp_sub(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ZpPoly zp_mul(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

ZpPoly zp_scale(const Zp& F, const ZpPoly& a, Word c) {
  ZpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<ZpPoly, ZpPoly> zp_divrem(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
  assert(!b.empty());
  if (a.size() < b.size()) return {{}, a};
  ZpPoly r = a;
  ZpPoly q(a.size() - b.size() + 1, 0);
  const Word inv_lb = F.inv(b.back());
  for (int k = deg(a); k >= deg(b); --k) {
    const Word c = F.mul(r[static_cast<std::size_t>(k)], inv_lb);
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(k - deg(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

ZpPoly zp_rem(const Zp& F, const ZpPoly& a, const ZpPoly& b) { return zp_divrem(F, a, b).second; }

ZpPoly zp_monic(const Zp& F, const ZpPoly& a) {
  if (a.empty()) return a;
  return zp_scale(F, a, F.inv(a.back()));
}

ZpPoly zp_gcd(const Zp& F, ZpPoly a, ZpPoly b) {
  while (!b.empty()) {
    ZpPoly r = zp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(F, a);
}

ZpXgcd zp_xgcd(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
  ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = zp_divrem(F, r0, r1);
    ZpPoly s2 = zp_sub(F, s0, zp_mul(F, q, s1));
    ZpPoly t2 = zp_sub(F, t0, zp_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Word inv = F.inv(r0.back());
  return {zp_scale(F, r0, inv), zp_scale(F, s0, inv), zp_scale(F, t0, inv)};
}

ZpPoly zp_derivative(const Zp& F, const ZpPoly& a) {
  if (a.size() < 2) return {};
  ZpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p());
  trim(r);
  return r;
}

ZpPoly zp_powmod(const Zp& F, ZpPoly base, Word e, const ZpPoly& m) {
  ZpPoly r{1};
  base = zp_rem(F, base, m);
  while (e) {
    if (e & 1) r = zp_rem(F, zp_mul(F, r, base), m);
    base = zp_rem(F, zp_mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<int, ZpPoly>> distinct_degree(const Zp& F, ZpPoly f) {
  std::vector<std::pair<int, ZpPoly>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = zp_powmod(F, h, F.p(), f);
    ZpPoly g = zp_gcd(F, zp_sub(F, h, x), f);
    if (deg(g) > 0) {
      out.emplace_back(i, g);
      f = zp_divrem(F, f, g).first;
      h = zp_rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(deg(f), zp_monic(F, f));
  return out;
}

namespace {

// Split g (monic, product of irreducibles of degree d) into its factors.
void equal_degree(const Zp& F, const ZpPoly& g, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  const Word p = F.p();
  // (p^d - 1) / 2 as repeated powering: a^((p^d-1)/2) = prod_{j<d} a^(p^j * (p-1)/2)
  while (true) {
    ZpPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    ZpPoly gg = zp_gcd(F, a, g);
    if (deg(gg) > 0 && deg(gg) < deg(g)) {
      equal_degree(F, gg, d, rng, out);
      equal_degree(F, zp_divrem(F, g, gg).first, d, rng, out);
      return;
    }
    // b = a^((p^d - 1)/2) mod g via b = prod_{j<d} (a^(p^j))^((p-1)/2) ... computed as
    // c = a^((p-1)/2) * (a^p)^((p-1)/2) * ... which equals a^(((p-1)/2)(1+p+...+p^(d-1))).
    ZpPoly acc{1};
    ZpPoly apow = zp_rem(F, a, g);
    for (int j = 0; j < d; ++j) {
      acc = zp_rem(F, zp_mul(F, acc, zp_powmod(F, apow, (p - 1) / 2, g)), g);
      if (j + 1 < d) apow = zp_powmod(F, apow, p, g);
    }
    ZpPoly b = zp_sub(F, acc, ZpPoly{1});
    gg = zp_gcd(F, b, g);
    if (deg(gg) > 0 && deg(gg) < deg(g)) {
      equal_degree(F, gg, d, rng, out);
      equal_degree(F, zp_divrem(F, g, gg).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ZpPoly> factor_squarefree(const Zp& F, const ZpPoly& f, std::mt19937_64& rng) {
  std::vector<ZpPoly> out;
  for (const auto& [d, g] : distinct_degree(F, zp_monic(F, f))) equal_degree(F, g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace lincomb::detail
