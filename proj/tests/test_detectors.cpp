#include <doctest.h>

#include <random>

#include "bmt/constructions.hpp"
#include "bmt/detectors.hpp"
#include "support.hpp"

using namespace bmt;

TEST_CASE("triangles") {
  const auto w = find_triangle(Matroid(2, {1, 2, 3}));
  REQUIRE(w);
  CHECK(w->points == std::vector<Point>{1, 2, 3});
  CHECK_FALSE(find_triangle(Matroid(4, {1, 2, 4, 8, 15})));
  CHECK_FALSE(find_triangle(Matroid(3, {5})));
  CHECK_FALSE(find_triangle(Matroid::empty(3)));
}

TEST_CASE("induced independent sets") {
  const auto w = find_induced_Is(Matroid(4, {1, 2, 4, 8}), 4);
  REQUIRE(w);
  CHECK(w->points == std::vector<Point>{1, 2, 4, 8});
  CHECK_FALSE(find_induced_Is(Matroid(4, {1, 2, 4, 8, 15}), 4));
  CHECK_FALSE(find_induced_Is(Matroid(3, {4, 5, 6, 7}), 3));
}

TEST_CASE("AI4 freeness") {
  const auto w = is_AI4_free(Matroid(4, {1, 2, 4, 8}));
  REQUIRE(w);
  CHECK(w->points == std::vector<Point>{1, 2, 4, 8});
  CHECK_FALSE(is_AI4_free(Matroid(4, {8, 9, 10, 11, 12, 13, 14, 15})));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const Matroid M = test::random_matroid(rng, 1, 5);
    CHECK(is_AI4_free(M).has_value() == is_AI4_free(complement(M)).has_value());
  }
}

TEST_CASE("odd circuits") {
  const auto t = find_induced_odd_circuit(Matroid(2, {1, 2, 3}), 3);
  REQUIRE(t);
  CHECK(t->size == 3);
  const auto c = find_induced_odd_circuit(Matroid(4, {1, 2, 4, 8, 15}), 5);
  REQUIRE(c);
  CHECK(c->size == 5);
  CHECK_FALSE(find_induced_odd_circuit(Matroid(3, {4, 5, 6, 7}), 3));
}

TEST_CASE("affine functional") {
  CHECK(is_affine(Matroid(3, {4, 5, 6, 7})) == Point{4});
  CHECK_FALSE(is_affine(Matroid(4, {1, 2, 4, 8, 15})));
  CHECK(is_affine(Matroid(1, {1})) == Point{1});
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const Matroid M = test::random_matroid(rng, 1, 6);
    const auto w = is_affine(M);
    bool oracle = false;
    for (Point v = 1; v < (Point{1} << M.dim) && !oracle; ++v) {
      bool all = true;
      for (Point p : M.elements()) all &= parity(p & v) == 1;
      oracle = all;
    }
    CHECK(w.has_value() == oracle);
    if (w)
      for (Point p : M.elements()) CHECK(parity(p & *w) == 1);
  }
}

TEST_CASE("critical number") {
  CHECK(critical_number(Matroid(3, {1, 2, 3, 4, 5, 6, 7})) == 3);
  CHECK(critical_number(Matroid(4, {1, 2, 4, 8, 15})) == 2);
  CHECK(critical_number(sag(4)) == 2);
  CHECK(critical_number(Matroid::empty(4)) == 0);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const Matroid M = test::random_matroid(rng, 1, 5);
    CHECK(critical_number(M) == test::critical_number_oracle(M));
  }
}

TEST_CASE("critical number on dense high-dimensional sets") {
  CHECK(critical_number(pg(9)) == 9);
  CHECK(critical_number(ag(9)) == 1);
  Matroid M = pg(8);
  M.points.reset(1);
  CHECK(critical_number(M) == 7);
}

TEST_CASE("detectors agree with brute force for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    test::for_all_subsets(n, [&](const Matroid& M) {
      const auto tri = find_triangle(M);
      REQUIRE(tri.has_value() == test::has_triangle(M));
      if (tri) CHECK(verify_witness(M, *tri));
      const auto i3 = find_induced_Is(M, 3);
      CHECK(i3.has_value() == test::has_induced_I(M, 3));
      if (i3) CHECK(verify_witness(M, *i3));
      const auto i4 = find_induced_Is(M, 4);
      CHECK(i4.has_value() == test::has_induced_I(M, 4));
      if (i4) CHECK(verify_witness(M, *i4));
      const auto ai4 = is_AI4_free(M);
      CHECK(!ai4.has_value() == test::ai4_free(M));
      if (ai4) CHECK(verify_witness(M, *ai4));
    });
}

TEST_CASE("witness verification rejects bad witnesses") {
  const Matroid M(4, {1, 2, 4, 8, 15});
  CHECK_FALSE(verify_witness(M, Witness{WitnessKind::Triangle, 3, {1, 2, 3}}));
  CHECK_FALSE(verify_witness(M, Witness{WitnessKind::InducedIs, 4, {1, 2, 4, 8}}));
  CHECK(verify_witness(Matroid(4, {1, 2, 4, 8}), Witness{WitnessKind::InducedIs, 4, {1, 2, 4, 8}}));
}

TEST_CASE("doubling element") {
  const auto d = find_doubling_element(Matroid(2, {1, 2}));
  REQUIRE(d);
  CHECK(d->w == 3);
  CHECK_FALSE(find_doubling_element(Matroid(4, {1, 2, 4, 8, 15})));
  const auto dd = find_doubling_element(doubled(c_n(5)));
  REQUIRE(dd);
  CHECK(dd->w == 16);
}

TEST_CASE("affine geometry recognition") {
  const auto a = recognize_affine_geometry(Matroid(3, {4, 5, 6, 7}));
  REQUIRE(a);
  CHECK(a->F.dim == 3);
  CHECK(a->H.members.to_vector() == std::vector<Point>{1, 2, 3});
  CHECK_FALSE(recognize_affine_geometry(Matroid(3, {1, 2, 3})));
  const auto b = recognize_affine_geometry(Matroid(2, {2, 3}));
  REQUIRE(b);
  CHECK(b->F.dim == 2);
  CHECK(b->H.members.to_vector() == std::vector<Point>{1});
}

TEST_CASE("SAG recognition") {
  const auto c5 = recognize_sag(Matroid(4, {1, 2, 4, 8, 15}));
  REQUIRE(c5);
  CHECK(c5->m == 3);
  CHECK(apply_map(c5->map, sag(3)) == Matroid(4, {1, 2, 4, 8, 15}));
  const auto s4 = recognize_sag(sag(4));
  REQUIRE(s4);
  CHECK(s4->m == 4);
  CHECK_FALSE(recognize_sag(Matroid(4, {8, 9, 10, 11, 12, 13, 14, 15})));
  std::mt19937_64 rng(43);
  for (int m = 3; m <= 7; ++m) {
    const Matroid S = apply_map(random_invertible_map(m + 1, rng()), sag(m));
    const auto r = recognize_sag(S);
    REQUIRE(r);
    CHECK(r->m == m);
    CHECK(apply_map(r->map, sag(m)) == S);
  }
}

TEST_CASE("membership") {
  CHECK_FALSE(is_i4tf_member(Matroid(4, {1, 2, 4, 8, 15})));
  const auto t = is_i4tf_member(Matroid(2, {1, 2, 3}));
  REQUIRE(t);
  CHECK(t->kind == WitnessKind::Triangle);
  const auto i = is_i4tf_member(Matroid(4, {1, 2, 4, 8}));
  REQUIRE(i);
  CHECK(i->kind == WitnessKind::InducedIs);
}
