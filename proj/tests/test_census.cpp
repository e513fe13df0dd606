#include <doctest.h>

#include <set>

#include "bmt/canonical.hpp"
#include "bmt/census.hpp"
#include "bmt/constructions.hpp"
#include "bmt/detectors.hpp"
#include "support.hpp"

using namespace bmt;

TEST_CASE("non-affine census at small dimension") {
  const std::size_t expected[] = {0, 0, 0, 0, 1, 2, 3, 4};
  for (int dim = 1; dim <= 7; ++dim) {
    const CensusReport r = enumerate_generated(dim, CensusClass::I4tfNonaffine);
    CHECK(r.iso_classes == expected[dim]);
    CHECK(r.representatives.size() == r.iso_classes);
  }
  const CensusReport five = enumerate_generated(5, CensusClass::I4tfNonaffine);
  std::set<std::vector<Point>> want{canonical_form(sag(4)).matroid.elements(),
                                    canonical_form(doubled(sag(3))).matroid.elements()};
  std::set<std::vector<Point>> got;
  for (const Matroid& m : five.representatives) got.insert(m.elements());
  CHECK(got == want);
}

TEST_CASE("generated classes match brute-force isomorphism classes for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<Point>> affine, ai4;
    test::for_all_subsets(n, [&](const Matroid& M) {
      const std::vector<Point> c = canonical_form(M).matroid.elements();
      if (!test::has_triangle(M) && !test::has_induced_I(M, 4) && is_affine(M)) affine.insert(c);
      if (test::ai4_free(M)) ai4.insert(c);
    });
    const auto as_set = [](const CensusReport& r) {
      std::set<std::vector<Point>> s;
      for (const Matroid& m : r.representatives) s.insert(m.elements());
      return s;
    };
    CHECK(as_set(enumerate_generated(n, CensusClass::I4tfAffine)) == affine);
    CHECK(as_set(enumerate_generated(n, CensusClass::Ai4)) == ai4);
  }
}

TEST_CASE("census threads do not change results") {
  const CensusReport a = enumerate_generated(5, CensusClass::Ai4, {8, 1});
  const CensusReport b = enumerate_generated(5, CensusClass::Ai4, {8, 3});
  CHECK(a.representatives == b.representatives);
}

TEST_CASE("census dimension bounds") {
  CHECK_THROWS(enumerate_generated(0, CensusClass::I4tfAffine));
  CHECK_THROWS(enumerate_generated(9, CensusClass::I4tfAffine));
}

TEST_CASE("exhaustive crosscheck") {
  const CrosscheckReport two = exhaustive_crosscheck(2);
  CHECK(two.subsets == 8);
  CHECK(two.members == 7);
  CHECK(two.discrepancies.empty());
  CHECK(exhaustive_crosscheck(3).discrepancies.empty());
  const CrosscheckReport four = exhaustive_crosscheck(4);
  CHECK(four.discrepancies.empty());
  CHECK(four.nonaffine_full_rank_classes == 1);
  CHECK_THROWS(exhaustive_crosscheck(5));
}

TEST_CASE("random members") {
  for (const Matroid& M : random_members(7, 100, 1, CensusClass::I4tfAffine)) {
    CHECK_FALSE(is_i4tf_member(M));
    CHECK(is_affine(M));
  }
  for (const Matroid& M : random_members(7, 100, 2, CensusClass::I4tfNonaffine)) CHECK(critical_number(M) == 2);
  for (const Matroid& M : random_members(5, 100, 3, CensusClass::Ai4)) CHECK_FALSE(is_AI4_free(M));
  CHECK(random_members(6, 10, 4, CensusClass::Ai4) == random_members(6, 10, 4, CensusClass::Ai4));
  CHECK_THROWS(random_members(3, 1, 0, CensusClass::I4tfNonaffine));
}

TEST_CASE("normal forms") {
  for (const Matroid& M : random_members(5, 30, 5, CensusClass::Ai4)) CHECK(has_ai4_normal_form(M));
  CHECK(has_alpha_only_form(beta0(Matroid(3, {1, 2, 3}))));
  CHECK_FALSE(has_ai4_normal_form(i_n(4)));
  CHECK_FALSE(has_alpha_only_form(i_n(3)));
}

TEST_CASE("report formats") {
  const CensusReport r = enumerate_generated(4, CensusClass::I4tfNonaffine);
  CHECK(report_to_json(r).find("\"iso_classes\":1") != std::string::npos);
  CHECK(report_to_text(r).find("iso_classes") != std::string::npos);
}
