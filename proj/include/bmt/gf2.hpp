#pragma once

#include <cstdint>
#include <vector>

#include "bmt/point_set.hpp"

namespace bmt {

/// A flat of PG(n-1,2): a subspace of F_2^n minus zero. The basis is kept in
/// reduced echelon form (distinct leading bits, each leading bit cleared in
/// every other basis vector) sorted ascending, so the flat spanned by all of
/// F_2^n carries the unit basis 1, 2, 4, ...
struct Flat {
  int ambient = 0;
  int dim = 0;
  std::vector<Point> basis;
  PointSet members;

  bool contains(Point p) const { return p != 0 && members.test(p); }
  friend bool operator==(const Flat& a, const Flat& b) {
    return a.ambient == b.ambient && a.members == b.members;
  }
};

/// Linear map F_2^{n_from} -> F_2^{n_to} given by the images of e_1..e_{n_from}.
struct LinearMap {
  int n_from = 0;
  int n_to = 0;
  std::vector<Point> images;

  static LinearMap identity(int n);

  Point operator()(Point x) const {
    Point y = 0;
    while (x) {
      y ^= images[static_cast<std::size_t>(__builtin_ctz(x))];
      x &= x - 1;
    }
    return y;
  }

  /// Images linearly independent (the map is injective).
  bool injective() const;
  bool invertible() const { return n_from == n_to && injective(); }
  LinearMap inverse() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// (g . h)(x) = g(h(x)).
LinearMap compose(const LinearMap& g, const LinearMap& h);

/// Block map sending low coordinates through `low` and e_{n+1} to `top`.
LinearMap extend(const LinearMap& low, Point top);

/// Adds one source coordinate sent to `top`; the target is unchanged.
LinearMap adjoin(const LinearMap& m, Point top);

/// Appends `extra` identity coordinates on top of m.
LinearMap pad(const LinearMap& m, int extra);

/// An injective map completed to an invertible one on n_to coordinates; the
/// extra images are the least unit vectors outside the span.
LinearMap complete_to_invertible(const LinearMap& m);

/// Incremental reduced-echelon basis over F_2 (leading bit = highest bit).
class EchelonBasis {
 public:
  /// Reduces x against the basis; 0 means x lies in the span.
  Point reduce(Point x) const;
  /// Inserts x if independent; returns whether the rank grew.
  bool insert(Point x);
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Fully reduced basis sorted ascending.
  std::vector<Point> reduced() const;

 private:
  std::vector<Point> rows_;  // sorted by descending leading bit
};

inline int parity(Point x) { return __builtin_parity(x); }

/// Least element of the affine subspace `base + span(null)` of F_2^n.
Point least_in_coset(Point base, const std::vector<Point>& null_basis);

/// XOR-span of `pts` minus zero, inside PG(n-1,2).
Flat closure(const std::vector<Point>& pts, int n);
Flat closure(const PointSet& pts);

/// Flat spanned by an explicit list of independent generators.
Flat flat_from_basis(const std::vector<Point>& gens, int n);

/// Kernel {x != 0 : <w,x> = 0} of a nonzero functional w.
Flat kernel_flat(int n, Point w);
/// Kernel as a raw point set (bit 0 set: the zero vector is in every kernel).
PointSet kernel_set(int n, Point w);

/// True iff no nonempty subset XORs to zero.
bool is_independent(const std::vector<Point>& pts);

/// Least nonzero functional vanishing on every point of `pts`. Throws if the
/// points span F_2^n.
Point least_annihilator(const std::vector<Point>& pts, int n);

/// All 2^n - 1 hyperplanes as kernels of w = 1, 2, ..., 2^n - 1 (ascending w).
std::vector<Flat> hyperplanes(int n);

/// Uniformly random invertible map on F_2^n, deterministic in `seed`.
LinearMap random_invertible_map(int n, std::uint64_t seed);

}  // namespace bmt
