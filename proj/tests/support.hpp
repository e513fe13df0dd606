#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bmt/gf2.hpp"
#include "bmt/matroid.hpp"

namespace bmt::test {

inline Matroid random_matroid(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  std::bernoulli_distribution in(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
  PointSet E(n);
  for (Point p = 1; p < (Point{1} << n); ++p)
    if (in(rng)) E.set(p);
  return Matroid(n, std::move(E));
}

inline void for_all_subsets(int n, const std::function<void(const Matroid&)>& f) {
  const Point top = Point{1} << n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (top - 1)); ++mask) {
    PointSet E(n);
    for (Point p = 1; p < top; ++p)
      if ((mask >> (p - 1)) & 1u) E.set(p);
    f(Matroid(n, std::move(E)));
  }
}

// Every invertible map on F_2^n, by brute force over all image tuples.
inline std::vector<LinearMap> all_invertible(int n) {
  std::vector<LinearMap> out;
  const Point top = Point{1} << n;
  std::vector<Point> imgs(static_cast<std::size_t>(n), 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      LinearMap m{n, n, imgs};
      if (m.invertible()) out.push_back(m);
      return;
    }
    for (Point p = 1; p < top; ++p) {
      imgs[static_cast<std::size_t>(i)] = p;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// XOR-span of pts, including 0.
inline std::vector<Point> span(const std::vector<Point>& pts) {
  std::vector<Point> s{0};
  for (Point p : pts)
    if (std::find(s.begin(), s.end(), p) == s.end()) {
      const std::size_t k = s.size();
      for (std::size_t i = 0; i < k; ++i) s.push_back(s[i] ^ p);
    }
  return s;
}

inline bool independent(const std::vector<Point>& pts) {
  return span(pts).size() == (std::size_t{1} << pts.size());
}

// All k-subsets of v.
inline void for_subsets(const std::vector<Point>& v, std::size_t k,
                        const std::function<void(const std::vector<Point>&)>& f) {
  std::vector<Point> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = from; i < v.size(); ++i) {
      cur.push_back(v[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Oracle: exists an independent s-subset whose span meets E in exactly it.
inline bool has_induced_I(const Matroid& M, std::size_t s) {
  bool found = false;
  for_subsets(M.elements(), s, [&](const std::vector<Point>& c) {
    if (found || !independent(c)) return;
    std::size_t hits = 0;
    for (Point p : span(c)) hits += M.contains(p);
    found = hits == s;
  });
  return found;
}

inline bool has_triangle(const Matroid& M) {
  for (Point a : M.elements())
    for (Point b : M.elements())
      if (a < b && M.contains(a ^ b)) return true;
  return false;
}

inline bool ai4_free(const Matroid& M) {
  bool ok = true;
  for_subsets(M.elements(), 4, [&](const std::vector<Point>& c) {
    if (!ok || !independent(c)) return;
    const Point all = c[0] ^ c[1] ^ c[2] ^ c[3];
    bool any = false;
    for (Point x : c) any |= M.contains(all ^ x);
    ok = any;
  });
  return ok;
}

// Oracle: n minus the largest dimension of a subspace avoiding E, by
// enumerating spans of every independent subset of the complement.
inline int critical_number_oracle(const Matroid& M) {
  const std::vector<Point> comp = complement(M).elements();
  int best = 0;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(M.dim); ++k) {
    bool any = false;
    for_subsets(comp, k, [&](const std::vector<Point>& c) {
      if (any || !independent(c)) return;
      for (Point p : span(c))
        if (p && M.contains(p)) return;
      any = true;
    });
    if (!any) break;
    best = static_cast<int>(k);
  }
  return M.dim - best;
}

}  // namespace bmt::test
