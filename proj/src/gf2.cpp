#include "bmt/gf2.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bmt {

namespace {

int lead(Point x) { return 31 - __builtin_clz(x); }

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
}

}  // namespace

LinearMap LinearMap::identity(int n) {
  LinearMap m{n, n, {}};
  for (int i = 0; i < n; ++i) m.images.push_back(Point{1} << i);
  return m;
}

bool LinearMap::injective() const {
  if (static_cast<int>(images.size()) != n_from) return false;
  EchelonBasis b;
  for (Point p : images)
    if (p == 0 || !b.insert(p)) return false;
  return true;
}

LinearMap LinearMap::inverse() const {
  if (!invertible()) throw std::invalid_argument("LinearMap::inverse: map is not invertible");
  const int n = n_from;
  // Gauss-Jordan on rows [image | unit].
  std::vector<std::pair<Point, Point>> rows;
  for (int i = 0; i < n; ++i) rows.emplace_back(images[static_cast<std::size_t>(i)], Point{1} << i);
  for (int bit = 0; bit < n; ++bit) {
    std::size_t piv = static_cast<std::size_t>(bit);
    while (piv < rows.size() && !((rows[piv].first >> bit) & 1u)) ++piv;
    std::swap(rows[static_cast<std::size_t>(bit)], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(bit) && ((rows[r].first >> bit) & 1u)) {
        rows[r].first ^= rows[static_cast<std::size_t>(bit)].first;
        rows[r].second ^= rows[static_cast<std::size_t>(bit)].second;
      }
    }
  }
  // Now rows[i].first = e_i and rows[i].second is the preimage of e_i.
  LinearMap inv{n, n, {}};
  for (int i = 0; i < n; ++i) inv.images.push_back(rows[static_cast<std::size_t>(i)].second);
  return inv;
}

LinearMap compose(const LinearMap& g, const LinearMap& h) {
  if (h.n_to != g.n_from) throw std::invalid_argument("compose: dimension mismatch");
  LinearMap out{h.n_from, g.n_to, {}};
  for (Point p : h.images) out.images.push_back(g(p));
  return out;
}

LinearMap extend(const LinearMap& low, Point top) {
  LinearMap out{low.n_from + 1, low.n_to + 1, low.images};
  out.images.push_back(top);
  return out;
}

LinearMap adjoin(const LinearMap& m, Point top) {
  LinearMap out{m.n_from + 1, m.n_to, m.images};
  out.images.push_back(top);
  return out;
}

LinearMap pad(const LinearMap& m, int extra) {
  LinearMap out = m;
  for (int i = 0; i < extra; ++i) out = extend(out, Point{1} << out.n_to);
  return out;
}

LinearMap complete_to_invertible(const LinearMap& m) {
  if (!m.injective()) throw std::invalid_argument("complete_to_invertible: map is not injective");
  EchelonBasis b;
  for (Point p : m.images) b.insert(p);
  LinearMap out{m.n_to, m.n_to, m.images};
  for (int i = 0; i < m.n_to && b.rank() < m.n_to; ++i) {
    const Point e = Point{1} << i;
    if (b.insert(e)) out.images.push_back(e);
  }
  return out;
}

Point EchelonBasis::reduce(Point x) const {
  for (Point r : rows_)
    if ((x >> lead(r)) & 1u) x ^= r;
  return x;
}

bool EchelonBasis::insert(Point x) {
  x = reduce(x);
  if (x == 0) return false;
  auto it = std::find_if(rows_.begin(), rows_.end(), [&](Point r) { return lead(r) < lead(x); });
  rows_.insert(it, x);
  return true;
}

std::vector<Point> EchelonBasis::reduced() const {
  std::vector<Point> rows = rows_;
  // Back-substitute so each leading bit appears in exactly one row.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && ((rows[j] >> lead(rows[i])) & 1u)) rows[j] ^= rows[i];
  std::sort(rows.begin(), rows.end());
  return rows;
}

Point least_in_coset(Point base, const std::vector<Point>& null_basis) {
  EchelonBasis b;
  for (Point p : null_basis) b.insert(p);
  // Clearing every leading bit of the echelon rows from the top down yields
  // the minimum of the coset.
  return b.reduce(base);
}

Flat flat_from_basis(const std::vector<Point>& gens, int n) {
  check_dim(n);
  EchelonBasis b;
  for (Point p : gens) {
    if (p == 0 || p >= (Point{1} << n)) throw std::out_of_range("closure: point out of range");
    b.insert(p);
  }
  Flat f;
  f.ambient = n;
  f.basis = b.reduced();
  f.dim = static_cast<int>(f.basis.size());
  f.members = PointSet(n);
  std::vector<Point> span{0};
  span.reserve(std::size_t{1} << f.dim);
  for (Point g : f.basis) {
    const std::size_t sz = span.size();
    for (std::size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ g);
  }
  for (Point p : span)
    if (p) f.members.set(p);
  return f;
}

Flat closure(const std::vector<Point>& pts, int n) { return flat_from_basis(pts, n); }

Flat closure(const PointSet& pts) {
  EchelonBasis b;
  std::vector<Point> gens;
  pts.for_each([&](Point p) {
    if (b.insert(p)) gens.push_back(p);
  });
  return flat_from_basis(gens, pts.dim());
}

PointSet kernel_set(int n, Point w) {
  PointSet s(n);
  const Point top = Point{1} << n;
  for (Point x = 0; x < top; ++x)
    if (!parity(w & x)) s.set(x);
  return s;
}

Flat kernel_flat(int n, Point w) {
  check_dim(n);
  if (w == 0 || w >= (Point{1} << n)) throw std::invalid_argument("kernel_flat: bad functional");
  // Basis: e_i for i != pivot, adjusted by e_pivot when w has bit i.
  const int pivot = __builtin_ctz(w);
  std::vector<Point> gens;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    Point v = Point{1} << i;
    if ((w >> i) & 1u) v |= Point{1} << pivot;
    gens.push_back(v);
  }
  return flat_from_basis(gens, n);
}

bool is_independent(const std::vector<Point>& pts) {
  EchelonBasis b;
  for (Point p : pts)
    if (p == 0 || !b.insert(p)) return false;
  return true;
}

Point least_annihilator(const std::vector<Point>& pts, int n) {
  check_dim(n);
  // Null space of the matrix with rows pts, from its reduced row echelon form.
  std::vector<Point> rows;
  std::vector<int> pivots;
  for (Point p : pts) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((p >> pivots[i]) & 1u) p ^= rows[i];
    if (!p) continue;
    const int piv = __builtin_ctz(p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> piv) & 1u) rows[i] ^= p;
    rows.push_back(p);
    pivots.push_back(piv);
  }
  EchelonBasis null;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Point v = Point{1} << f;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> f) & 1u) v |= Point{1} << pivots[i];
    null.insert(v);
  }
  if (null.rank() == 0) throw std::invalid_argument("least_annihilator: points span the space");
  return null.reduced().front();
}

std::vector<Flat> hyperplanes(int n) {
  check_dim(n);
  if (n < 1) throw std::invalid_argument("hyperplanes: n must be >= 1");
  std::vector<Flat> out;
  const Point top = Point{1} << n;
  out.reserve(top - 1);
  for (Point w = 1; w < top; ++w) out.push_back(kernel_flat(n, w));
  return out;
}

LinearMap random_invertible_map(int n, std::uint64_t seed) {
  check_dim(n);
  if (n < 1) throw std::invalid_argument("random_invertible_map: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Point> dist(1, (Point{1} << n) - 1);
  LinearMap m{n, n, {}};
  EchelonBasis b;
  // Sequential rejection: each image uniform outside the span so far, which
  // is uniform over GL(n,2).
  while (static_cast<int>(m.images.size()) < n) {
    Point p = dist(rng);
    if (b.insert(p)) m.images.push_back(p);
  }
  return m;
}

}  // namespace bmt
