#include "bmt/certificate.hpp"

#include <array>
#include <json.hpp>

#include "bmt/constructions.hpp"
#include "bmt/detectors.hpp"
#include "bmt/errors.hpp"

namespace bmt {

namespace {

constexpr std::array<std::pair<Step, std::string_view>, 7> kStepNames{{
    {Step::Expand0, "expand0"},
    {Step::Expand1, "expand1"},
    {Step::Double, "double"},
    {Step::Alpha0, "alpha0"},
    {Step::Alpha1, "alpha1"},
    {Step::Beta0, "beta0"},
    {Step::Beta1, "beta1"},
}};

// <w2, T(v)> = <w, v> for all v.
Point transport_functional(Point w, const LinearMap& T) {
  const LinearMap inv = T.inverse();
  Point out = 0;
  for (int j = 0; j < T.n_to; ++j)
    if (parity(w & inv.images[static_cast<std::size_t>(j)])) out |= Point{1} << j;
  return out;
}

}  // namespace

std::string to_string(Step s) {
  for (const auto& [step, name] : kStepNames)
    if (step == s) return std::string(name);
  return "?";
}

Step step_from_string(std::string_view s) {
  for (const auto& [step, name] : kStepNames)
    if (name == s) return step;
  throw FormatError("unknown step '" + std::string(s) + "'");
}

Matroid apply_step(Step s, const Matroid& M) {
  switch (s) {
    case Step::Expand0: return expand0(M);
    case Step::Expand1: return expand1(M);
    case Step::Double: return doubled(M);
    case Step::Alpha0: return alpha0(M);
    case Step::Alpha1: return alpha1(M);
    case Step::Beta0: return beta0(M);
    case Step::Beta1: return beta1(M);
  }
  throw PreconditionError("apply_step: bad step");
}

Matroid base_matroid(const CertificateBase& b) {
  if (b.kind == CertificateBase::Kind::Sag) return sag(b.m);
  Matroid M = Matroid::empty(1);
  if (b.has_point) M.points.set(1);
  return M;
}

Matroid replay(const Certificate& c) {
  Matroid M = base_matroid(c.base);
  for (Step s : c.steps) M = apply_step(s, M);
  return M;
}

Matroid realize(const Certificate& c) {
  Matroid M = replay(c);
  if (!c.map.invertible() || c.map.n_from != M.dim)
    throw PreconditionError("certificate map is not an invertible map on the replayed dimension");
  return apply_map(c.map, M);
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  if (c.base.kind == CertificateBase::Kind::OneDim) {
    j["base"] = {{"kind", "onedim"}, {"points", c.base.has_point ? std::vector<Point>{1} : std::vector<Point>{}}};
  } else {
    j["base"] = {{"kind", "sag"}, {"n", c.base.m}};
  }
  j["steps"] = nlohmann::json::array();
  for (Step s : c.steps) j["steps"].push_back(to_string(s));
  j["map"] = c.map.images;
  return j.dump();
}

Certificate certificate_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Certificate c;
    const auto& base = j.at("base");
    const std::string kind = base.at("kind").get<std::string>();
    if (kind == "onedim") {
      const auto pts = base.at("points").get<std::vector<Point>>();
      if (pts.size() > 1 || (pts.size() == 1 && pts[0] != 1)) throw FormatError("onedim base points must be [] or [1]");
      c.base = CertificateBase::one_dim(!pts.empty());
    } else if (kind == "sag") {
      const int m = base.at("n").get<int>();
      if (m < 3 || m + 1 > kMaxDim) throw FormatError("sag base parameter out of range");
      c.base = CertificateBase::sag_base(m);
    } else {
      throw FormatError("unknown base kind '" + kind + "'");
    }
    for (const auto& s : j.at("steps")) c.steps.push_back(step_from_string(s.get<std::string>()));
    const int dim = (c.base.kind == CertificateBase::Kind::Sag ? c.base.m + 1 : 1) + static_cast<int>(c.steps.size());
    if (dim > kMaxDim) throw FormatError("certificate exceeds the maximum dimension");
    c.map = LinearMap{dim, dim, j.at("map").get<std::vector<Point>>()};
    if (static_cast<int>(c.map.images.size()) != dim) throw FormatError("map has the wrong number of images");
    for (Point p : c.map.images)
      if (p >= (Point{1} << dim)) throw FormatError("map image out of range");
    if (!c.map.invertible()) throw FormatError("map is not invertible");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("certificate JSON: ") + e.what());
  }
}

Certificate assemble(const CertificateBase& base, const LinearMap& base_map, const std::vector<Layer>& layers,
                     const Matroid& target) {
  Certificate cert{base, {}, base_map};
  Matroid R = base_matroid(base);
  for (const Layer& layer : layers) {
    const int n = R.dim;
    Matroid next = apply_step(layer.step, R);
    LinearMap lifted = extend(cert.map, Point{1} << n);
    if (layer.step == Step::Expand1) {
      const Matroid N = apply_map(cert.map, R);
      const Point w_r = *is_affine(R);
      const Point w_carried = transport_functional(w_r, cert.map);
      const Point w_own = *is_affine(N);
      lifted = compose(expansion_switch(n, w_carried, w_own), lifted);
    }
    R = std::move(next);
    cert.steps.push_back(layer.step);
    cert.map = compose(layer.map, lifted);
  }
  if (apply_map(cert.map, R) != target) throw TheoremViolation("assembled certificate does not replay to its target");
  return cert;
}

}  // namespace bmt
