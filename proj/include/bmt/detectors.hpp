#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmt/gf2.hpp"
#include "bmt/matroid.hpp"

namespace bmt {

enum class WitnessKind { Triangle, InducedIs, AI4Violation, OddCircuit };

/// A concrete forbidden substructure.
///  - Triangle: {a, b, a^b}, all in E.
///  - InducedIs(s): s independent points of E whose span meets E in exactly them.
///  - AI4Violation: independent 4-subset of E, every triple sum outside E.
///  - OddCircuit(k): k-1 independent points of E followed by their sum; the
///    span meets E in exactly these k points.
struct Witness {
  WitnessKind kind = WitnessKind::Triangle;
  int size = 0;  // s for InducedIs, k for OddCircuit, 3 / 4 otherwise
  std::vector<Point> points;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(WitnessKind k);
std::string describe(const Witness& w);

/// Re-checks the witness against M from scratch.
bool verify_witness(const Matroid& M, const Witness& w);

/// Lexicographically least triangle (a < b < a^b).
std::optional<Witness> find_triangle(const Matroid& M);

/// Lexicographically least induced I_s (s >= 1).
std::optional<Witness> find_induced_Is(const Matroid& M, int s);

/// Empty optional iff M is AI4-free; otherwise the least violating 4-set.
std::optional<Witness> is_AI4_free(const Matroid& M);

/// Smallest odd k <= kmax with an induced C_k.
std::optional<Witness> find_induced_odd_circuit(const Matroid& M, int kmax);

/// Least functional w with <w,e> = 1 for every e in E. For E = {} this is w = 1.
std::optional<Point> is_affine(const Matroid& M);

/// n minus the largest dimension of a flat avoiding E.
int critical_number(const Matroid& M);

struct DoublingElement {
  Point w = 0;
  /// Hyperplane not containing w with E = [w] + (E cap H); its functional is
  /// the least phi with phi(w) = 1.
  Flat H;
  Point functional = 0;
};

/// Least w outside E with w + E = E.
std::optional<DoublingElement> find_doubling_element(const Matroid& M);

struct AffineGeometryShape {
  Flat F;  // cl(E)
  Flat H;  // hyperplane of F with E = F \ H
};

std::optional<AffineGeometryShape> recognize_affine_geometry(const Matroid& M);

struct SagShape {
  int m = 0;  // M is isomorphic to SAG(m-1,2), ambient dimension m+1
  /// apply_map(map, sag(m)) == M.
  LinearMap map;
};

/// Recognizes a full-rank series-extended affine geometry.
std::optional<SagShape> recognize_sag(const Matroid& M);

/// Triangle first, then induced I_4.
std::optional<Witness> is_i4tf_member(const Matroid& M);

/// The translates s + E for every s in [G], indexed by s.
std::vector<PointSet> translate_table(const PointSet& E);

}  // namespace bmt
