#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bmt/gf2.hpp"
#include "bmt/point_set.hpp"

namespace bmt {

/// A simple binary matroid with its ambient geometry: E as a subset of the
/// points of PG(dim-1,2).
struct Matroid {
  int dim = 1;
  PointSet points;

  Matroid() : points(1) {}
  Matroid(int n, PointSet e);
  Matroid(int n, const std::vector<Point>& e);
  Matroid(int n, std::initializer_list<Point> e) : Matroid(n, std::vector<Point>(e)) {}
  static Matroid empty(int n) { return Matroid(n, PointSet(n)); }

  std::size_t size() const { return points.count(); }
  bool contains(Point p) const { return p != 0 && p < points.universe() && points.test(p); }
  std::vector<Point> elements() const { return points.to_vector(); }
  bool full_rank() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;
};

/// E' = {m(x) : x in E}. The map must be injective with m.n_from == M.dim.
Matroid apply_map(const LinearMap& m, const Matroid& M);

Matroid complement(const Matroid& M);

struct Restriction {
  Matroid matroid;
  /// Embedding of the restricted coordinates into the parent geometry; it
  /// sends e_1..e_d to the basis of the flat.
  LinearMap embedding;
};

/// M|F re-coordinatized so that F.basis becomes e_1..e_{F.dim}.
Restriction induced_restriction(const Matroid& M, const Flat& F);

struct ClosureRestriction {
  Matroid matroid;
  LinearMap embedding;
  bool rank_deficient = false;
};

/// (E, cl(E)). Full-rank input comes back unchanged with the identity map;
/// E = {} gives the 1-dimensional empty matroid.
ClosureRestriction restrict_to_closure(const Matroid& M);

/// {a ^ b : a in A, b in B, a != b}.
PointSet sumset(const PointSet& a, const PointSet& b);

struct StabilizerResult {
  Flat U;
  /// Least elements of the translates (t + [U]) \ {0} whose union is E.
  std::vector<Point> translates;
};

/// Flat U with G \ U = E + E^c, and E a union of translates of U.
/// Throws TheoremViolation if the computed flat fails that description.
StabilizerResult stabilizer_flat(const Matroid& M);

/// BMAT text format.
Matroid parse_bmat(std::string_view text);
std::string serialize_bmat(const Matroid& M);
/// The same matroid with the characteristic bitset written as hex.
std::string serialize_bmat_bits(const Matroid& M);

Matroid read_bmat_file(const std::string& path);
void write_bmat_file(const std::string& path, const Matroid& M);

}  // namespace bmt
