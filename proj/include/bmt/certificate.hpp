#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bmt/gf2.hpp"
#include "bmt/matroid.hpp"

namespace bmt {

enum class Step { Expand0, Expand1, Double, Alpha0, Alpha1, Beta0, Beta1 };

std::string to_string(Step s);
Step step_from_string(std::string_view s);

/// Applies one construction. Expand0/Expand1 throw PreconditionError on a
/// non-affine input.
Matroid apply_step(Step s, const Matroid& M);

struct CertificateBase {
  enum class Kind { OneDim, Sag };
  Kind kind = Kind::OneDim;
  bool has_point = false;  // OneDim: E = {1} or {}
  int m = 0;               // Sag: SAG(m-1,2)

  static CertificateBase one_dim(bool has_point) { return {Kind::OneDim, has_point, 0}; }
  static CertificateBase sag_base(int m) { return {Kind::Sag, false, m}; }

  friend bool operator==(const CertificateBase&, const CertificateBase&) = default;
};

Matroid base_matroid(const CertificateBase& b);

struct Certificate {
  CertificateBase base;
  std::vector<Step> steps;
  /// From replayed coordinates to the certified matroid's coordinates.
  LinearMap map;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Folds the steps over the base, in replay coordinates.
Matroid replay(const Certificate& c);
/// apply_map(c.map, replay(c)).
Matroid realize(const Certificate& c);

std::string certificate_to_json(const Certificate& c);
/// Throws FormatError on malformed JSON or fields.
Certificate certificate_from_json(std::string_view text);

/// One layer of a decomposition: current = apply_map(map, apply_step(step, smaller)).
struct Layer {
  Step step;
  LinearMap map;
};

/// Composes layers (listed bottom-up) into a single certificate for `target`.
/// base_map carries base_matroid(base) onto the bottom matroid. For Expand1
/// layers the hyperplane that replay picks may differ from the one carried
/// along; expansion_switch bridges the two. The result is checked against
/// `target` bit-exactly; a mismatch throws TheoremViolation.
Certificate assemble(const CertificateBase& base, const LinearMap& base_map, const std::vector<Layer>& layers,
                     const Matroid& target);

}  // namespace bmt
