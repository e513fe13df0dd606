#include "bmt/constructions.hpp"

#include <stdexcept>

#include "bmt/detectors.hpp"
#include "bmt/errors.hpp"

namespace bmt {

namespace {

void check_grow(const Matroid& M) {
  if (M.dim + 1 > kMaxDim) throw PreconditionError("construction would exceed the maximum dimension");
}

// E in the low coordinates of an (n+1)-dimensional geometry.
PointSet lift(const PointSet& E) {
  PointSet out(E.dim() + 1);
  E.for_each([&](Point p) { out.set(p); });
  return out;
}

Point affine_functional(const Matroid& M, const char* who) {
  auto w = is_affine(M);
  if (!w) throw PreconditionError(std::string(who) + ": matroid is not affine");
  return *w;
}

}  // namespace

Matroid pg(int n) { return Matroid(n, full_set(n)); }

Matroid ag(int n) {
  Matroid M = Matroid::empty(n);
  const Point top = Point{1} << n;
  for (Point p = top >> 1; p < top; ++p) M.points.set(p);
  return M;
}

Matroid i_n(int n) {
  Matroid M = Matroid::empty(n);
  for (int i = 0; i < n; ++i) M.points.set(Point{1} << i);
  return M;
}

Matroid c_n(int k) {
  if (k < 3 || k % 2 == 0) throw PreconditionError("c_n: k must be odd and at least 3");
  Matroid M = i_n(k - 1);
  M.points.set((Point{1} << (k - 1)) - 1);
  return M;
}

Matroid sag(int n) {
  if (n < 3 || n + 1 > kMaxDim) throw PreconditionError("sag: n out of range");
  Matroid M = Matroid::empty(n + 1);
  const Point y = Point{1} << (n - 1);
  const Point x = Point{1} << n;
  for (Point p = y + 1; p < x; ++p) M.points.set(p);
  M.points.set(x);
  M.points.set(x ^ y);
  return M;
}

Matroid doubled(const Matroid& M) {
  check_grow(M);
  PointSet E = lift(M.points);
  const Point w = Point{1} << M.dim;
  E |= E.translate(w);
  return Matroid(M.dim + 1, std::move(E));
}

Matroid expand0(const Matroid& M) {
  affine_functional(M, "expand0");
  check_grow(M);
  return Matroid(M.dim + 1, lift(M.points));
}

Matroid expand1(const Matroid& M) {
  const Point w = affine_functional(M, "expand1");
  check_grow(M);
  const Point x = Point{1} << M.dim;
  PointSet E = lift(M.points);
  for (Point h = 0; h < x; ++h)
    if (!parity(w & h)) E.set(x ^ h);
  return Matroid(M.dim + 1, std::move(E));
}

Matroid alpha0(const Matroid& M) {
  check_grow(M);
  return Matroid(M.dim + 1, lift(M.points));
}

Matroid alpha1(const Matroid& M) {
  check_grow(M);
  const Point top = Point{1} << M.dim;
  PointSet E = lift(M.points);
  for (Point p = top; p < 2 * top; ++p) E.set(p);
  return Matroid(M.dim + 1, std::move(E));
}

Matroid beta0(const Matroid& M) {
  check_grow(M);
  const Point w = Point{1} << M.dim;
  PointSet E = lift(M.points).translate(w);
  E.set(w);
  return Matroid(M.dim + 1, std::move(E));
}

Matroid beta1(const Matroid& M) {
  check_grow(M);
  const Point w = Point{1} << M.dim;
  PointSet E = lift(M.points).translate(w);
  E.set(w);
  for (Point p = 1; p < w; ++p) E.set(p);
  return Matroid(M.dim + 1, std::move(E));
}

LinearMap expansion_switch(int n, Point w_from, Point w_to) {
  LinearMap psi = LinearMap::identity(n + 1);
  if (w_from == w_to) return psi;
  // Shear v -> v + d(v) c with d = w_from + w_to and c on which both
  // functionals are 1; d(c) = 0 makes it an involution.
  const Point d = w_from ^ w_to;
  Point c = 1;
  while (!(parity(w_from & c) && parity(w_to & c))) ++c;
  for (int i = 0; i < n; ++i)
    if ((d >> i) & 1u) psi.images[static_cast<std::size_t>(i)] ^= c;
  return psi;
}

}  // namespace bmt
