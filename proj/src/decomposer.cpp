#include "bmt/decomposer.hpp"

#include <algorithm>

#include "bmt/constructions.hpp"
#include "bmt/errors.hpp"

namespace bmt {

namespace {

Point least_outside(const Flat& F) {
  Point p = 1;
  while (F.members.test(p)) ++p;
  return p;
}

std::vector<Point> map_points(const LinearMap& m, const std::vector<Point>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (Point p : pts) out.push_back(m(p));
  return out;
}

AffineStep checked(AffineStep st, const Matroid& M) {
  if (apply_map(st.map, apply_step(st.step, st.smaller)) != M)
    throw TheoremViolation("decompose_affine_step: reversal does not rebuild the input");
  return st;
}

// M is the 0-expansion of M|Hpp.
AffineStep expand0_onto(const Matroid& M, const Flat& Hpp) {
  Restriction r = induced_restriction(M, Hpp);
  return checked({Step::Expand0, std::move(r.matroid), adjoin(r.embedding, least_outside(Hpp))}, M);
}

// M is the 1-expansion of M|Hpp by x, along the hyperplane K of Hpp.
AffineStep expand1_onto(const Matroid& M, const Flat& Hpp, Point x, const Flat& K) {
  Restriction r = induced_restriction(M, Hpp);
  const int d = r.matroid.dim;
  const LinearMap coords = complete_to_invertible(r.embedding).inverse();
  std::vector<Point> k_local = map_points(coords, K.basis);
  const Point w_k = least_annihilator(k_local, d);
  const auto w_own = is_affine(r.matroid);
  if (!w_own) throw TheoremViolation("decompose_affine_step: restriction is not affine");
  LinearMap map = compose(adjoin(r.embedding, x), expansion_switch(d, *w_own, w_k));
  return checked({Step::Expand1, std::move(r.matroid), std::move(map)}, M);
}

}  // namespace

std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::E_subset_H: return "E_subset_H";
    case SpecialCase::Complement_subset_H: return "Complement_subset_H";
    case SpecialCase::E_disjoint_H: return "E_disjoint_H";
    case SpecialCase::H_subset_E: return "H_subset_E";
  }
  return "?";
}

std::string to_string(DecompositionResult::Outcome o) {
  switch (o) {
    case DecompositionResult::Outcome::AffineChain: return "AffineChain";
    case DecompositionResult::Outcome::DoubledSag: return "DoubledSag";
    case DecompositionResult::Outcome::NotMember: return "NotMember";
  }
  return "?";
}

SpecialHyperplane find_special_hyperplane(const Matroid& M) {
  const int n = M.dim;
  const PointSet& E = M.points;
  const Point top = Point{1} << n;
  for (Point w = 1; w < top; ++w) {
    PointSet K = kernel_set(n, w);
    K.reset(0);
    std::optional<SpecialCase> c;
    if (E.subset_of(K))
      c = SpecialCase::E_subset_H;
    else if (!E.intersects(K))
      c = SpecialCase::E_disjoint_H;
    else if (K.complement().subset_of(E))
      c = SpecialCase::Complement_subset_H;
    else if (K.subset_of(E))
      c = SpecialCase::H_subset_E;
    if (c) return {kernel_flat(n, w), w, *c};
  }
  throw TheoremViolation("find_special_hyperplane: no hyperplane meets any of the four cases");
}

AffineStep decompose_affine_step(const Matroid& M) {
  const int n = M.dim;
  if (n < 2) throw PreconditionError("decompose_affine_step: dimension must be at least 2");
  const auto w = is_affine(M);
  if (!w) throw PreconditionError("decompose_affine_step: matroid is not affine");
  const Flat H = kernel_flat(n, *w);
  if (M.points.none()) return expand0_onto(M, H);

  const Point z = M.points.first();
  PointSet F = M.points.translate(z);
  F.reset(0);
  const Restriction m0 = induced_restriction(Matroid(n, F), H);
  const LinearMap& emb = m0.embedding;
  const SpecialHyperplane sh = find_special_hyperplane(m0.matroid);

  auto ambient_basis = [&](const Flat& local) { return map_points(emb, local.basis); };
  auto case1 = [&](const Flat& hp0) {
    std::vector<Point> gens = ambient_basis(hp0);
    gens.push_back(z);
    return expand0_onto(M, closure(gens, n));
  };
  auto case2 = [&](const Flat& hp0) {
    const Point x = z ^ emb(least_outside(hp0));
    std::vector<Point> gens = ambient_basis(hp0);
    const Flat K = closure(gens, n);
    gens.push_back(z);
    return expand1_onto(M, closure(gens, n), x, K);
  };
  auto case4 = [&](const Flat& hp0, Point w0) {
    std::vector<Point> gens = ambient_basis(hp0);
    const Flat K = closure(gens, n);
    gens.push_back(z ^ emb(w0));
    return expand1_onto(M, closure(gens, n), z, K);
  };

  const PointSet& F0 = m0.matroid.points;
  switch (sh.which) {
    case SpecialCase::E_subset_H:
      return case1(sh.H);
    case SpecialCase::Complement_subset_H:
      return case2(sh.H);
    case SpecialCase::E_disjoint_H: {
      if (!m0.matroid.full_rank()) {
        const Point phi = least_annihilator(m0.matroid.elements(), n - 1);
        return case1(kernel_flat(n - 1, phi));
      }
      const auto shape = recognize_affine_geometry(m0.matroid);
      if (!shape || shape->F.dim != n - 1)
        throw TheoremViolation("decompose_affine_step: full-rank I3-free triangle-free part is not an affine geometry");
      return case2(shape->H);
    }
    case SpecialCase::H_subset_E: {
      PointSet rest = F0;
      rest.subtract(sh.H.members);
      const Point w0 = rest.first();
      if (w0 == 0) return case1(sh.H);
      return case4(sh.H, w0);
    }
  }
  throw TheoremViolation("decompose_affine_step: unreachable case");
}

StrippedDoublings strip_doublings(const Matroid& M) {
  StrippedDoublings out{0, M, LinearMap::identity(M.dim)};
  while (out.core.dim > 1) {
    const auto d = find_doubling_element(out.core);
    if (!d) break;
    Restriction r = induced_restriction(out.core, d->H);
    out.map = compose(out.map, pad(adjoin(r.embedding, d->w), out.k));
    out.core = std::move(r.matroid);
    ++out.k;
  }
  Matroid rebuilt = out.core;
  for (int i = 0; i < out.k; ++i) rebuilt = doubled(rebuilt);
  if (apply_map(out.map, rebuilt) != M) throw TheoremViolation("strip_doublings: stripped form does not rebuild the input");
  return out;
}

DecompositionResult decompose_i4tf(const Matroid& M) {
  DecompositionResult res;
  if (auto wit = is_i4tf_member(M)) {
    res.witness = std::move(wit);
    return res;
  }
  const ClosureRestriction cl = restrict_to_closure(M);
  res.rank_deficiency = M.dim - cl.matroid.dim;

  if (is_affine(M)) {
    std::vector<Layer> layers;
    Matroid cur = M;
    while (cur.dim > 1) {
      AffineStep st = decompose_affine_step(cur);
      layers.push_back({st.step, std::move(st.map)});
      cur = std::move(st.smaller);
    }
    std::reverse(layers.begin(), layers.end());
    res.outcome = DecompositionResult::Outcome::AffineChain;
    res.certificate = assemble(CertificateBase::one_dim(cur.points.test(1)), LinearMap::identity(1), layers, M);
    return res;
  }

  const StrippedDoublings s = strip_doublings(cl.matroid);
  const auto shape = recognize_sag(s.core);
  if (!shape) throw TheoremViolation("decompose_i4tf: non-affine member whose doubling core is not a SAG");
  const int extra = res.rank_deficiency;
  Certificate cert;
  cert.base = CertificateBase::sag_base(shape->m);
  cert.steps.assign(static_cast<std::size_t>(s.k), Step::Double);
  cert.steps.insert(cert.steps.end(), static_cast<std::size_t>(extra), Step::Alpha0);
  const LinearMap on_closure = compose(s.map, pad(shape->map, s.k));
  cert.map = compose(complete_to_invertible(cl.embedding), pad(on_closure, extra));
  if (realize(cert) != M) throw TheoremViolation("decompose_i4tf: certificate does not replay to the input");
  res.outcome = DecompositionResult::Outcome::DoubledSag;
  res.k = s.k;
  res.sag_n = shape->m;
  res.certificate = std::move(cert);
  return res;
}

std::variant<Certificate, Witness> decompose_ai4(const Matroid& M) {
  if (auto v = is_AI4_free(M)) return *v;
  std::vector<Layer> layers;
  Matroid cur = M;
  while (cur.dim > 1) {
    const int n = cur.dim;
    const SpecialHyperplane sh = find_special_hyperplane(cur);
    const PointSet& E = cur.points;
    PointSet inner(n);
    Step step = Step::Alpha0;
    Point top = least_outside(sh.H);
    switch (sh.which) {
      case SpecialCase::E_subset_H:
        inner = E;
        break;
      case SpecialCase::Complement_subset_H:
        inner = E & sh.H.members;
        step = Step::Alpha1;
        break;
      case SpecialCase::E_disjoint_H:
        top = E.first();
        inner = E.translate(top);
        inner.reset(0);
        step = Step::Beta0;
        break;
      case SpecialCase::H_subset_E: {
        PointSet rest = E;
        rest.subtract(sh.H.members);
        top = rest.first();
        if (top == 0) throw TheoremViolation("decompose_ai4: E equals a hyperplane but was not tagged E_subset_H");
        inner = rest.translate(top);
        inner.reset(0);
        step = Step::Beta1;
        break;
      }
    }
    Restriction r = induced_restriction(Matroid(n, std::move(inner)), sh.H);
    layers.push_back({step, adjoin(r.embedding, top)});
    cur = std::move(r.matroid);
  }
  std::reverse(layers.begin(), layers.end());
  return assemble(CertificateBase::one_dim(cur.points.test(1)), LinearMap::identity(1), layers, M);
}

}  // namespace bmt
