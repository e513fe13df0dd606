#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt {

enum class CensusClass { I4tfNonaffine, I4tfAffine, Ai4 };

std::string to_string(CensusClass c);
/// Accepts i4tf_nonaffine, i4tf_affine, ai4.
CensusClass census_class_from_string(std::string_view s);

struct CensusOptions {
  int max_dim = 8;
  int threads = 1;
};

struct CensusReport {
  int dim = 0;
  CensusClass cls = CensusClass::I4tfNonaffine;
  /// Matroids replayed at the target dimension before deduplication.
  std::size_t total_labeled = 0;
  std::size_t iso_classes = 0;
  /// How many representatives are full-rank.
  std::size_t full_rank_classes = 0;
  /// Canonical forms, sorted by point list.
  std::vector<Matroid> representatives;
  std::chrono::duration<double> elapsed{};
};

/// Generates the class from its constructions up to `dim` and deduplicates
/// by canonical form. The affine and AI4 classes are deduplicated level by
/// level before expanding further.
CensusReport enumerate_generated(int dim, CensusClass cls, const CensusOptions& opts = {});

std::string report_to_json(const CensusReport& r);
std::string report_to_text(const CensusReport& r);
/// rep_000.bmat, rep_001.bmat, ... in `dir` (created if missing).
void write_representatives(const CensusReport& r, const std::string& dir);

/// Straight enumeration of pairs and 4-subsets, sharing no code with the
/// backtracking detectors.
bool brute_force_i4tf(const Matroid& M);

struct Discrepancy {
  Matroid matroid;
  bool brute_member = false;
  bool decomposed = false;
  std::string note;
};

struct CrosscheckReport {
  int dim = 0;
  std::size_t subsets = 0;
  std::size_t members = 0;
  std::size_t affine_members = 0;
  std::size_t nonaffine_members = 0;
  std::vector<Discrepancy> discrepancies;
  /// Isomorphism classes among full-rank members.
  std::size_t affine_full_rank_classes = 0;
  std::size_t nonaffine_full_rank_classes = 0;
  std::chrono::duration<double> elapsed{};
};

/// Every subset E of PG(dim-1,2), dim <= 4: brute-force membership against
/// decompose_i4tf on (E, cl(E)), with every certificate replayed.
CrosscheckReport exhaustive_crosscheck(int dim);
std::string crosscheck_to_json(const CrosscheckReport& r);

/// Random class members: a uniformly drawn step sequence (uniform base and
/// a uniform choice among the steps allowed at each position; for the
/// non-affine class a uniform SAG parameter) followed by a uniformly random
/// change of coordinates.
std::vector<Matroid> random_members(int dim, std::size_t count, std::uint64_t seed, CensusClass cls);

/// An alpha/beta build from a 1-dimensional matroid in which beta0 occurs at
/// most once and only alpha steps follow it.
bool has_ai4_normal_form(const Matroid& M);
/// A build from a 1-dimensional matroid using alpha0 and alpha1 only.
bool has_alpha_only_form(const Matroid& M);

}  // namespace bmt
