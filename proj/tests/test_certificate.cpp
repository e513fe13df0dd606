#include <doctest.h>

#include "bmt/certificate.hpp"
#include "bmt/constructions.hpp"
#include "bmt/errors.hpp"

using namespace bmt;

TEST_CASE("step names round trip") {
  for (Step s : {Step::Expand0, Step::Expand1, Step::Double, Step::Alpha0, Step::Alpha1, Step::Beta0, Step::Beta1})
    CHECK(step_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(step_from_string("Triple"), FormatError);
}

TEST_CASE("replay") {
  const Certificate a{CertificateBase::one_dim(true), {Step::Expand0}, LinearMap::identity(2)};
  CHECK(replay(a) == Matroid(2, {1}));
  const Certificate b{CertificateBase::sag_base(3), {Step::Double}, LinearMap::identity(5)};
  CHECK(replay(b) == doubled(sag(3)));
  const Certificate c{CertificateBase::one_dim(true), {Step::Alpha1}, LinearMap{2, 2, {2, 1}}};
  CHECK(realize(c) == Matroid(2, {1, 2, 3}));
}

TEST_CASE("illegal replay") {
  const Certificate bad{CertificateBase::sag_base(3), {Step::Expand0}, LinearMap::identity(5)};
  CHECK_THROWS_AS(replay(bad), PreconditionError);
}

TEST_CASE("certificate json round trip") {
  const Certificate c{CertificateBase::sag_base(4), {Step::Double, Step::Alpha0}, LinearMap::identity(7)};
  CHECK(certificate_from_json(certificate_to_json(c)) == c);
  const Certificate d{CertificateBase::one_dim(false), {}, LinearMap::identity(1)};
  CHECK(certificate_from_json(certificate_to_json(d)) == d);
}

TEST_CASE("certificate json errors") {
  CHECK_THROWS_AS(certificate_from_json("{"), FormatError);
  CHECK_THROWS_AS(certificate_from_json("{}"), FormatError);
  CHECK_THROWS_AS(certificate_from_json(R"({"base":{"kind":"onedim","points":[1]},"steps":["Nope"],"map":[1]})"),
                  FormatError);
  CHECK_THROWS_AS(certificate_from_json(R"({"base":{"kind":"sag","n":3},"steps":[],"map":[1,2]})"), FormatError);
  CHECK_THROWS_AS(certificate_from_json(R"({"base":{"kind":"onedim","points":[1]},"steps":[],"map":[0]})"),
                  FormatError);
}

TEST_CASE("assemble checks its target") {
  // Target alpha1({1}) pushed through a swap.
  const Matroid target = apply_map(LinearMap{2, 2, {2, 1}}, alpha1(Matroid(1, {1})));
  const Certificate c =
      assemble(CertificateBase::one_dim(true), LinearMap::identity(1), {{Step::Alpha1, LinearMap{2, 2, {2, 1}}}}, target);
  CHECK(realize(c) == target);
  CHECK_THROWS_AS(assemble(CertificateBase::one_dim(true), LinearMap::identity(1),
                           {{Step::Alpha0, LinearMap::identity(2)}}, target),
                  TheoremViolation);
}
