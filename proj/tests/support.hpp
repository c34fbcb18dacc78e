#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "weilcert/field.hpp"
#include "weilcert/pgl.hpp"
#include "weilcert/poly.hpp"

namespace testsupport {

using namespace weilcert;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat(long span = 9) {
    long den = integer(1, span);
    return Rat(integer(-span, span), den);
  }
  Rat nonzero_rat(long span = 9) {
    Rat r = rat(span);
    while (r.is_zero()) r = rat(span);
    return r;
  }
  Quad quad(long d, long span = 9) { return Quad(rat(span), rat(span), d); }
  TowerElt tower(const FieldRef& f, long span = 9) {
    std::vector<Quad> cs;
    for (int i = 0; i < f->degree(); ++i) cs.push_back(quad(f->d(), span));
    return TowerElt(f, cs);
  }
  /// Product of distinct monic linear factors over Q, times a nonzero constant.
  Poly square_free_poly(const FieldRef& f, int degree, std::vector<Rat>* roots_out = nullptr) {
    std::vector<Rat> roots;
    while (static_cast<int>(roots.size()) < degree) {
      Rat r = rat(12);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Poly p = Poly::constant(TowerElt(f, nonzero_rat()));
    for (const Rat& r : roots) p *= Poly::linear_factor(TowerElt(f, r));
    if (roots_out) *roots_out = roots;
    return p;
  }
  template <typename T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), rng_); }

 private:
  std::mt19937_64 rng_;
};

/// det of the 2x2 matrix with columns x, p (homogeneous coordinates).
inline TowerElt bracket(const P1Point& x, const P1Point& p) { return x.u() * p.v() - x.v() * p.u(); }

/// Cross-ratio chart sending p1 -> 0, p2 -> 1, p3 -> infinity.
inline Moebius chart(const P1Point& p1, const P1Point& p2, const P1Point& p3) {
  TowerElt c1 = bracket(p2, p3);
  TowerElt c2 = bracket(p2, p1);
  return Moebius(c1 * p1.v(), -(c1 * p1.u()), c2 * p3.v(), -(c2 * p3.u()));
}

/// Every ordered triple of the set against every ordered triple, maps built
/// from cross-ratio charts, kept when they preserve the set.
inline std::vector<Moebius> stabilizer_oracle(const std::vector<P1Point>& set) {
  std::vector<std::array<std::size_t, 3>> triples;
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) triples.push_back({i, j, k});
  std::vector<Moebius> charts, inverses;
  for (const auto& t : triples) {
    charts.push_back(chart(set[t[0]], set[t[1]], set[t[2]]));
    inverses.push_back(charts.back().inverse());
  }
  std::vector<Moebius> out;
  for (const Moebius& from : charts) {
    for (const Moebius& back : inverses) {
      Moebius m = back.compose(from);
      bool keeps = true;
      for (const P1Point& p : set)
        if (std::find(set.begin(), set.end(), moebius_apply(m, p)) == set.end()) {
          keeps = false;
          break;
        }
      if (keeps && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_group(const std::vector<Moebius>& g) {
  if (g.empty()) return false;
  auto has = [&](const Moebius& m) { return std::find(g.begin(), g.end(), m) != g.end(); };
  if (!has(Moebius::identity(g.front().field()))) return false;
  for (const Moebius& a : g) {
    if (!has(a.inverse())) return false;
    for (const Moebius& b : g)
      if (!has(a.compose(b))) return false;
  }
  return true;
}

inline bool brute_is_square(const mpz_class& v) {
  if (v < 0) return false;
  mpz_class r = sqrt(v);
  return r * r == v;
}

}  // namespace testsupport
