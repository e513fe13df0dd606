#include "bmt/matroid.hpp"

#include <stdexcept>

#include "bmt/errors.hpp"

namespace bmt {

Matroid::Matroid(int n, PointSet e) : dim(n), points(std::move(e)) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("Matroid: dimension out of range");
  if (points.dim() != n) throw std::invalid_argument("Matroid: point set dimension mismatch");
  if (points.test(0)) throw std::invalid_argument("Matroid: zero is not a point");
}

Matroid::Matroid(int n, const std::vector<Point>& e) : Matroid(n, make_set(n, e)) {}

bool Matroid::full_rank() const { return closure(points).dim == dim; }

Matroid apply_map(const LinearMap& m, const Matroid& M) {
  if (m.n_from != M.dim) throw std::invalid_argument("apply_map: dimension mismatch");
  if (!m.injective()) throw std::invalid_argument("apply_map: map is not injective");
  PointSet out(m.n_to);
  M.points.for_each([&](Point p) { out.set(m(p)); });
  return Matroid(m.n_to, std::move(out));
}

Matroid complement(const Matroid& M) { return Matroid(M.dim, M.points.complement()); }

Restriction induced_restriction(const Matroid& M, const Flat& F) {
  if (F.ambient != M.dim) throw std::invalid_argument("induced_restriction: flat lives in another geometry");
  if (F.dim < 1) throw std::invalid_argument("induced_restriction: flat has dimension 0");
  Restriction r{Matroid::empty(F.dim), LinearMap{F.dim, M.dim, F.basis}};
  if (!r.embedding.injective()) throw std::invalid_argument("induced_restriction: not a flat");
  const Point top = Point{1} << F.dim;
  for (Point q = 1; q < top; ++q)
    if (M.points.test(r.embedding(q))) r.matroid.points.set(q);
  return r;
}

ClosureRestriction restrict_to_closure(const Matroid& M) {
  if (M.points.none()) {
    return {Matroid::empty(1), LinearMap{1, M.dim, {Point{1}}}, M.dim > 1};
  }
  Flat F = closure(M.points);
  if (F.dim == M.dim) return {M, LinearMap::identity(M.dim), false};
  Restriction r = induced_restriction(M, F);
  return {std::move(r.matroid), std::move(r.embedding), true};
}

PointSet sumset(const PointSet& a, const PointSet& b) {
  PointSet out(a.dim());
  a.for_each([&](Point x) { out |= b.translate(x); });
  out.reset(0);
  return out;
}

StabilizerResult stabilizer_flat(const Matroid& M) {
  const PointSet& E = M.points;
  const PointSet Ec = E.complement();
  // |G| is odd, so exactly one of E, E^c has even size; the stabilizer of
  // the odd side is trivial.
  const PointSet& A = (E.count() % 2 == 0) ? E : Ec;
  std::vector<Point> gens;
  const Point top = Point{1} << M.dim;
  for (Point s = 1; s < top; ++s)
    if (A.translate(s) == A) gens.push_back(s);
  StabilizerResult res;
  res.U = closure(gens, M.dim);
  if (static_cast<std::size_t>(res.U.members.count()) != gens.size())
    throw TheoremViolation("stabilizer_flat: stabilizer is not a subspace");

  const PointSet u_comp = res.U.members.complement();
  if (!(sumset(E, Ec) == u_comp))
    throw TheoremViolation("stabilizer_flat: U^c differs from E + E^c");

  // Peel translates (t + [U]) \ {0} off E, least element first.
  PointSet zero_u = res.U.members;
  zero_u.set(0);
  PointSet rest = E;
  for (Point t = rest.first(); t != 0; t = rest.first()) {
    PointSet tr = zero_u.translate(t);
    if (tr.test(0)) tr = res.U.members;  // t in U: the translate is U itself
    if (!tr.subset_of(rest)) throw TheoremViolation("stabilizer_flat: E is not a union of translates of U");
    rest.subtract(tr);
    res.translates.push_back(t);
  }
  return res;
}

}  // namespace bmt
