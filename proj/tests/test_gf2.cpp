#include <doctest.h>

#include <random>

#include "bmt/errors.hpp"
#include "bmt/gf2.hpp"
#include "support.hpp"

using namespace bmt;

TEST_CASE("closure of small point sets") {
  const Flat a = closure({1}, 3);
  CHECK(a.dim == 1);
  CHECK(a.members.to_vector() == std::vector<Point>{1});
  const Flat b = closure({1, 2}, 3);
  CHECK(b.dim == 2);
  CHECK(b.members.to_vector() == std::vector<Point>{1, 2, 3});
  const Flat c = closure({1, 2, 4}, 3);
  CHECK(c.dim == 3);
  CHECK(c.members.count() == 7);
  CHECK_THROWS(closure({8}, 3));
}

TEST_CASE("closure agrees with explicit span") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    std::vector<Point> pts;
    const int k = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < k; ++i) pts.push_back(std::uniform_int_distribution<Point>(1, (Point{1} << n) - 1)(rng));
    const Flat F = closure(pts, n);
    std::vector<Point> s = test::span(pts);
    s.erase(std::remove(s.begin(), s.end(), Point{0}), s.end());
    std::sort(s.begin(), s.end());
    CHECK(F.members.to_vector() == s);
    CHECK(F.members.count() == (std::size_t{1} << F.dim) - 1);
    CHECK(static_cast<int>(F.basis.size()) == F.dim);
  }
}

TEST_CASE("independence") {
  CHECK(is_independent({1, 2, 4}));
  CHECK_FALSE(is_independent({1, 2, 3}));
  CHECK(is_independent({}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(std::uniform_int_distribution<Point>(1, 31)(rng));
    CHECK(is_independent(pts) == test::independent(pts));
  }
}

TEST_CASE("hyperplanes") {
  const auto h1 = hyperplanes(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].dim == 0);
  CHECK(h1[0].members.none());
  const auto h2 = hyperplanes(2);
  REQUIRE(h2.size() == 3);
  for (const Flat& h : h2) CHECK(h.members.count() == 1);
  const auto h3 = hyperplanes(3);
  CHECK(h3.size() == 7);
  for (const Flat& h : h3) CHECK(h.members.count() == 3);
  for (int n = 1; n <= 6; ++n) {
    Point w = 1;
    for (const Flat& h : hyperplanes(n)) {
      h.members.for_each([&](Point p) { CHECK(parity(p & w) == 0); });
      CHECK(h.members.count() == (std::size_t{1} << (n - 1)) - 1);
      ++w;
    }
  }
}

TEST_CASE("linear maps") {
  const LinearMap swap{2, 2, {2, 1}};
  CHECK(swap(1) == 2);
  CHECK(swap(3) == 3);
  CHECK(swap.invertible());
  CHECK(compose(swap, swap) == LinearMap::identity(2));
  const LinearMap m{3, 3, {3, 5, 4}};
  REQUIRE(m.invertible());
  CHECK(compose(m, m.inverse()) == LinearMap::identity(3));
  CHECK_FALSE((LinearMap{2, 2, {3, 3}}).invertible());
  CHECK_THROWS((LinearMap{2, 2, {3, 3}}).inverse());

  const LinearMap e = extend(swap, 4);
  CHECK(e.n_from == 3);
  CHECK(e.n_to == 3);
  CHECK(e(4) == 4);
  const LinearMap a = adjoin(LinearMap{1, 3, {1}}, 6);
  CHECK(a.n_from == 2);
  CHECK(a.n_to == 3);
  CHECK(a(3) == 7);
  const LinearMap p = pad(swap, 2);
  CHECK(p.n_from == 4);
  CHECK(p(12) == 12);
  const LinearMap c = complete_to_invertible(LinearMap{1, 3, {6}});
  CHECK(c.invertible());
  CHECK(c(1) == 6);
}

TEST_CASE("random invertible maps") {
  CHECK(random_invertible_map(1, 99).images == std::vector<Point>{1});
  CHECK(random_invertible_map(3, 7) == random_invertible_map(3, 7));
  for (std::uint64_t s = 0; s < 1000; ++s) CHECK(is_independent(random_invertible_map(4, s).images));
}

TEST_CASE("least annihilator") {
  CHECK(least_annihilator({1, 2}, 3) == 4);
  CHECK(least_annihilator({3}, 2) == 3);
  CHECK(least_annihilator({}, 2) == 1);
  CHECK_THROWS(least_annihilator({1, 2}, 2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<Point> pts;
    for (int i = 0; i < n - 1; ++i) pts.push_back(std::uniform_int_distribution<Point>(1, (Point{1} << n) - 1)(rng));
    const Point w = least_annihilator(pts, n);
    for (Point p : pts) CHECK(parity(p & w) == 0);
    for (Point v = 1; v < w; ++v) {
      bool kills = true;
      for (Point p : pts) kills &= parity(p & v) == 0;
      CHECK_FALSE(kills);
    }
  }
}

TEST_CASE("point set operations") {
  PointSet a = make_set(3, {1, 2, 5});
  CHECK(a.count() == 3);
  PointSet t = a.translate(1);
  CHECK(t.test(0));
  t.reset(0);
  CHECK(t.to_vector() == std::vector<Point>{3, 4});
  CHECK(a.complement().to_vector() == std::vector<Point>{3, 4, 6, 7});
  CHECK(a.subset_of(full_set(3)));
  CHECK(a.intersects(make_set(3, {5})));
  CHECK_FALSE(a.intersects(make_set(3, {6})));
  CHECK(a.first() == 1);
  CHECK(a.next(3) == 5);
  CHECK(a.next(6) == 0);
  PointSet big(10);
  big.set(1000);
  big.set(70);
  CHECK(big.to_vector() == std::vector<Point>{70, 1000});
}
