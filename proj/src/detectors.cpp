#include "bmt/detectors.hpp"

#include <algorithm>
#include <functional>

#include "bmt/constructions.hpp"

namespace bmt {

namespace {

// Span of the chosen points, zero included, in insertion-doubling order.
std::vector<Point> extend_span(const std::vector<Point>& span, Point x) {
  std::vector<Point> out = span;
  out.reserve(span.size() * 2);
  for (Point s : span) out.push_back(s ^ x);
  return out;
}

// Least w with <w, p> = 1 for all p in pts, if any.
std::optional<Point> solve_all_ones(const std::vector<Point>& pts, int n) {
  // Gauss-Jordan on rows (p | 1); the rhs lives in bit n.
  const Point rhs = Point{1} << n;
  std::vector<Point> rows;
  std::vector<int> pivots;
  for (Point p : pts) {
    Point r = p | rhs;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((r >> pivots[i]) & 1u) r ^= rows[i];
    if ((r & (rhs - 1)) == 0) {
      if (r & rhs) return std::nullopt;  // 0 = 1
      continue;
    }
    const int piv = __builtin_ctz(r);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> piv) & 1u) rows[i] ^= r;
    rows.push_back(r);
    pivots.push_back(piv);
  }
  Point particular = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] & rhs) particular |= Point{1} << pivots[i];
  std::vector<Point> null_basis;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Point v = Point{1} << f;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> f) & 1u) v |= Point{1} << pivots[i];
    null_basis.push_back(v);
  }
  const Point w = least_in_coset(particular, null_basis);
  if (w == 0) {
    // Only reachable with no equations; the least nonzero functional.
    return pts.empty() ? std::optional<Point>(1) : std::nullopt;
  }
  return w;
}

// Is there a flat of codimension <= c disjoint from pts?
bool avoidable_with(const std::vector<Point>& pts, int n, int c) {
  if (pts.empty()) return true;
  if (c == 0) return false;
  if (c == 1) return solve_all_ones(pts, n).has_value();
  const Point e0 = pts.front();
  const Point top = Point{1} << n;
  std::vector<Point> rest;
  for (Point w = 1; w < top; ++w) {
    if (!parity(w & e0)) continue;
    rest.clear();
    for (Point p : pts)
      if (!parity(w & p)) rest.push_back(p);
    if (avoidable_with(rest, n, c - 1)) return true;
  }
  return false;
}

// Depth-first growth of flats inside C, one greedy basis per flat.
class FlatGrower {
 public:
  FlatGrower(const PointSet& C, int upper) : C_(C), upper_(upper) {}

  int run() {
    EchelonBasis basis;
    std::vector<Point> members{0};
    grow(0, basis, members, C_, 0);
    return best_;
  }

 private:
  void grow(int d, const EchelonBasis& basis, const std::vector<Point>& members, const PointSet& cand, Point last) {
    best_ = std::max(best_, d);
    if (best_ >= upper_) return;
    const std::size_t room = cand.count() / members.size();
    int kmax = 0;
    while ((std::size_t{1} << (kmax + 1)) - 1 <= room) ++kmax;
    if (d + kmax <= best_) return;
    for (Point y = cand.next(last + 1); y != 0; y = cand.next(y + 1)) {
      if (basis.reduce(y) != y) continue;  // y is not the least of its coset
      PointSet next = cand;
      for (Point f : members) next &= C_.translate(y ^ f);
      std::vector<Point> grown = extend_span(members, y);
      EchelonBasis b2 = basis;
      b2.insert(y);
      grow(d + 1, b2, grown, next, y);
      if (best_ >= upper_) return;
    }
  }

  const PointSet& C_;
  int upper_;
  int best_ = 0;
};

}  // namespace

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Triangle: return "triangle";
    case WitnessKind::InducedIs: return "induced_I";
    case WitnessKind::AI4Violation: return "ai4_violation";
    case WitnessKind::OddCircuit: return "odd_circuit";
  }
  return "?";
}

std::string describe(const Witness& w) {
  std::string out;
  switch (w.kind) {
    case WitnessKind::Triangle: out = "triangle"; break;
    case WitnessKind::InducedIs: out = "induced I" + std::to_string(w.size); break;
    case WitnessKind::AI4Violation: out = "AI4 violation"; break;
    case WitnessKind::OddCircuit: out = "induced C" + std::to_string(w.size); break;
  }
  out += ":";
  for (Point p : w.points) out += " " + std::to_string(p);
  return out;
}

std::vector<PointSet> translate_table(const PointSet& E) {
  std::vector<PointSet> t;
  t.reserve(E.universe());
  for (Point s = 0; s < E.universe(); ++s) t.push_back(E.translate(s));
  return t;
}

bool verify_witness(const Matroid& M, const Witness& w) {
  for (Point p : w.points)
    if (!M.contains(p)) return false;
  auto span_meets_exactly = [&](const std::vector<Point>& gens, std::size_t expected) {
    Flat f = closure(gens, M.dim);
    PointSet meet = f.members & M.points;
    if (meet.count() != expected) return false;
    for (Point p : w.points)
      if (!meet.test(p)) return false;
    return true;
  };
  switch (w.kind) {
    case WitnessKind::Triangle:
      return w.points.size() == 3 && (w.points[0] ^ w.points[1] ^ w.points[2]) == 0 &&
             w.points[0] != w.points[1];
    case WitnessKind::InducedIs:
      return static_cast<int>(w.points.size()) == w.size && is_independent(w.points) &&
             span_meets_exactly(w.points, w.points.size());
    case WitnessKind::AI4Violation: {
      if (w.points.size() != 4 || !is_independent(w.points)) return false;
      const Point all = w.points[0] ^ w.points[1] ^ w.points[2] ^ w.points[3];
      for (Point p : w.points)
        if (M.contains(all ^ p)) return false;
      return true;
    }
    case WitnessKind::OddCircuit: {
      const std::size_t k = w.points.size();
      if (static_cast<int>(k) != w.size || k < 3 || k % 2 == 0) return false;
      std::vector<Point> gens(w.points.begin(), w.points.end() - 1);
      Point sum = 0;
      for (Point p : gens) sum ^= p;
      return is_independent(gens) && sum == w.points.back() && span_meets_exactly(gens, k);
    }
  }
  return false;
}

std::optional<Witness> find_triangle(const Matroid& M) {
  const PointSet& E = M.points;
  for (Point a = E.first(); a != 0; a = E.next(a + 1)) {
    PointSet cand = E & E.translate(a);
    cand.clear_upto(a);
    for (Point b = cand.first(); b != 0; b = cand.next(b + 1))
      if ((a ^ b) > b) return Witness{WitnessKind::Triangle, 3, {a, b, a ^ b}};
  }
  return std::nullopt;
}

std::optional<Witness> find_induced_Is(const Matroid& M, int s) {
  if (s < 1 || s > M.dim) return std::nullopt;
  const PointSet& E = M.points;
  std::vector<Point> chosen;
  std::function<bool(const std::vector<Point>&, const PointSet&)> dfs =
      [&](const std::vector<Point>& span, const PointSet& cand) -> bool {
    if (static_cast<int>(chosen.size()) == s) return true;
    const Point last = chosen.empty() ? 0 : chosen.back();
    for (Point x = cand.next(last + 1); x != 0; x = cand.next(x + 1)) {
      std::vector<Point> grown = extend_span(span, x);
      chosen.push_back(x);
      if (static_cast<int>(chosen.size()) == s) return true;
      PointSet next = cand;
      for (std::size_t i = span.size(); i < grown.size(); ++i) next.subtract(E.translate(grown[i]));
      if (dfs(grown, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (dfs({0}, E)) return Witness{WitnessKind::InducedIs, s, chosen};
  return std::nullopt;
}

std::optional<Witness> is_AI4_free(const Matroid& M) {
  const PointSet& E = M.points;
  for (Point a = E.first(); a != 0; a = E.next(a + 1)) {
    for (Point b = E.next(a + 1); b != 0; b = E.next(b + 1)) {
      const PointSet tab = E.translate(a ^ b);
      PointSet cand_c = E;
      cand_c.subtract(tab);
      cand_c.clear_upto(b);
      cand_c.reset(a ^ b);
      for (Point c = cand_c.first(); c != 0; c = cand_c.next(c + 1)) {
        PointSet cand_d = cand_c;
        cand_d.clear_upto(c);
        cand_d.subtract(E.translate(a ^ c));
        cand_d.subtract(E.translate(b ^ c));
        for (Point v : {a ^ b, a ^ c, b ^ c, a ^ b ^ c}) cand_d.reset(v);
        const Point d = cand_d.first();
        if (d != 0) return Witness{WitnessKind::AI4Violation, 4, {a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_induced_odd_circuit(const Matroid& M, int kmax) {
  const PointSet& E = M.points;
  for (int k = 3; k <= kmax && k - 1 <= M.dim; k += 2) {
    const int free_points = k - 1;
    std::vector<Point> chosen;
    Point found_sum = 0;
    std::function<bool(const std::vector<Point>&, const PointSet&, Point)> dfs =
        [&](const std::vector<Point>& span, const PointSet& cand, Point sum) -> bool {
      const Point last = chosen.empty() ? 0 : chosen.back();
      if (static_cast<int>(chosen.size()) == free_points - 1) {
        // Final generator: the total sum must land in E, no other new point.
        PointSet fin = E & E.translate(sum);
        for (Point v : span)
          if (v != 0 && v != sum) fin.subtract(E.translate(v));
        for (Point v : span) fin.reset(v);
        const Point x = fin.next(last + 1);
        if (x == 0) return false;
        chosen.push_back(x);
        found_sum = sum ^ x;
        return true;
      }
      for (Point x = cand.next(last + 1); x != 0; x = cand.next(x + 1)) {
        std::vector<Point> grown = extend_span(span, x);
        PointSet next = cand;
        for (std::size_t i = span.size(); i < grown.size(); ++i) next.subtract(E.translate(grown[i]));
        chosen.push_back(x);
        if (dfs(grown, next, sum ^ x)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (dfs({0}, E, 0)) {
      chosen.push_back(found_sum);
      return Witness{WitnessKind::OddCircuit, k, chosen};
    }
  }
  return std::nullopt;
}

std::optional<Point> is_affine(const Matroid& M) { return solve_all_ones(M.elements(), M.dim); }

int critical_number(const Matroid& M) {
  if (M.points.none()) return 0;
  const std::vector<Point> pts = M.elements();
  const int n = M.dim;
  if (solve_all_ones(pts, n)) return 1;
  // Dual search: cover E by c functionals, while it stays cheap.
  int c = 2;
  double cost = static_cast<double>(std::size_t{1} << (n - 1));
  for (; c <= n && cost <= 4e6; ++c, cost *= static_cast<double>(std::size_t{1} << (n - 1)))
    if (avoidable_with(pts, n, c)) return c;
  // Primal search for the largest flat in the complement; omega <= n - c.
  const int omega = FlatGrower(M.points.complement(), n - c).run();
  return n - omega;
}

std::optional<DoublingElement> find_doubling_element(const Matroid& M) {
  const PointSet& E = M.points;
  const PointSet Ec = E.complement();
  for (Point w = Ec.first(); w != 0; w = Ec.next(w + 1)) {
    if (E.translate(w) == E) {
      const Point phi = w & (~w + 1);
      return DoublingElement{w, kernel_flat(M.dim, phi), phi};
    }
  }
  return std::nullopt;
}

std::optional<AffineGeometryShape> recognize_affine_geometry(const Matroid& M) {
  if (M.points.none()) return std::nullopt;
  Flat F = closure(M.points);
  if (M.size() != (std::size_t{1} << (F.dim - 1))) return std::nullopt;
  PointSet rest = F.members;
  rest.subtract(M.points);
  Flat H = closure(rest);
  if (H.dim != F.dim - 1 || !(H.members == rest)) return std::nullopt;
  return AffineGeometryShape{std::move(F), std::move(H)};
}

std::optional<SagShape> recognize_sag(const Matroid& M) {
  const int n = M.dim;
  const int m = n - 1;
  if (m < 3) return std::nullopt;
  const std::size_t want = (std::size_t{1} << (m - 1)) + 1;
  if (M.size() != want || !M.full_rank()) return std::nullopt;
  const std::vector<Point> pts = M.elements();
  const Matroid canonical = sag(m);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point a = pts[i], b = pts[j], y = a ^ b;
      if (M.contains(y)) continue;
      // y + (E \ {a,b}) must be a flat of dimension m-1.
      EchelonBasis basis;
      bool ok = true;
      PointSet flat_pts(n);
      for (Point r : pts) {
        if (r == a || r == b) continue;
        flat_pts.set(y ^ r);
        basis.insert(y ^ r);
        if (basis.rank() > m - 1) {
          ok = false;
          break;
        }
      }
      if (!ok || basis.rank() != m - 1) continue;
      Flat Fp = flat_from_basis(basis.reduced(), n);
      if (!(Fp.members == flat_pts)) continue;
      if (basis.reduce(a) == 0) continue;
      EchelonBasis with_y = basis;
      with_y.insert(y);
      if (with_y.reduce(a) == 0) continue;
      LinearMap map{n, n, Fp.basis};
      map.images.push_back(y);
      map.images.push_back(a);
      if (apply_map(map, canonical) == M) return SagShape{m, std::move(map)};
    }
  }
  return std::nullopt;
}

std::optional<Witness> is_i4tf_member(const Matroid& M) {
  if (auto t = find_triangle(M)) return t;
  return find_induced_Is(M, 4);
}

}  // namespace bmt
