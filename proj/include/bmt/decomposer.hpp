#pragma once

#include <optional>
#include <variant>

#include "bmt/certificate.hpp"
#include "bmt/detectors.hpp"

namespace bmt {

enum class SpecialCase { E_subset_H, E_disjoint_H, Complement_subset_H, H_subset_E };

std::string to_string(SpecialCase c);

struct SpecialHyperplane {
  Flat H;
  Point functional = 0;
  SpecialCase which = SpecialCase::E_subset_H;
};

/// First hyperplane (ascending functional) meeting one of the four cases,
/// tagged with the first case that holds for it (in enum order). The AI4-free precondition is
/// not checked; exhaustion throws TheoremViolation.
SpecialHyperplane find_special_hyperplane(const Matroid& M);

/// One reversal of an expansion: M == apply_map(map, apply_step(step, smaller)).
struct AffineStep {
  Step step = Step::Expand0;
  Matroid smaller;
  LinearMap map;
};

/// Requires M affine with dim >= 2. Rank-deficient input and E = {} are
/// accepted (they reverse as 0-expansions).
AffineStep decompose_affine_step(const Matroid& M);

struct StrippedDoublings {
  int k = 0;
  Matroid core;
  /// M == apply_map(map, D^k(core)).
  LinearMap map;
};

StrippedDoublings strip_doublings(const Matroid& M);

struct DecompositionResult {
  enum class Outcome { AffineChain, DoubledSag, NotMember };
  Outcome outcome = Outcome::NotMember;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  /// DoubledSag: the closure is D^k(SAG(sag_n - 1, 2)).
  int k = 0;
  int sag_n = 0;
  /// Dimensions added on top of cl(E) by trailing 0-expansion steps.
  int rank_deficiency = 0;
};

std::string to_string(DecompositionResult::Outcome o);

/// Membership test with certificate or witness. Any input is accepted; the
/// certificate's replay (through its map) equals M bit-exactly.
DecompositionResult decompose_i4tf(const Matroid& M);

/// An alpha/beta certificate for an AI4-free matroid, or the violating 4-set.
std::variant<Certificate, Witness> decompose_ai4(const Matroid& M);

}  // namespace bmt
