#include <doctest.h>

#include "oracles.hpp"

#include "bellcone/cone.hpp"
#include "bellcone/cone_io.hpp"
#include "bellcone/fixtures.hpp"
#include "bellcone/lifting.hpp"
#include "bellcone/scenario.hpp"
#include "bellcone/tensor_io.hpp"

using namespace bellcone;

TEST_CASE("every extreme no-signaling box lowers to a facet of the Bell cone") {
  const auto rays = extreme_rays(ns_cone(2));
  const auto b_facets = facets(bell_cone(2));
  for (const auto& r : rays.generators()) {
    const auto f = lower(CorrelationTensor(2, r));
    CHECK(is_bell_inequality(f));
    CHECK(is_extreme_ray(dual_vrep_to_hrep(bell_cone(2)), f.entries()));
  }
  for (const auto& f : b_facets.functionals()) CHECK(in_ns(raise(FunctionalTensor(2, f))));
}

TEST_CASE("min/max duality: (C1 (x)min C2)* = C1* (x)max C2*") {
  const auto sq = square_cone();
  const auto min_product = min_tensor_product(std::vector<ConeVRep>{sq.vrep, sq.vrep});
  const auto dual_sq = dual_vrep_to_hrep(sq.vrep);
  const auto max_of_duals = max_tensor_product(std::vector<ConeHRep>{dual_sq, dual_sq});
  CHECK(dual_vrep_to_hrep(min_product) == max_of_duals);
  // With three factors the extreme rays of the max product are the no-signaling boxes.
  const auto max3 = max_tensor_product(std::vector<ConeHRep>{sq.hrep, sq.hrep, sq.hrep});
  const auto ns3 = ns_cone(3);
  const auto max3_dual = dual_hrep_to_vrep(max3);
  for (const auto& f : ns3.functionals()) CHECK(membership(max3_dual, f).member);
}

TEST_CASE("random boxes: probabilities sum to the normalization per setting") {
  testing::Rng rng(31);
  const auto rays = extreme_rays(ns_cone(2)).generators();
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = testing::random_combination(rng, 2, rays, false);
    Rational total;
    for (const auto& p : probabilities(x)) {
      CHECK(p.probability.sign() >= 0);
      total += p.probability;
    }
    CHECK(total == x.normalization() * Rational(4));
  }
}

TEST_CASE("randomized lifts round-trip through recognition") {
  testing::Rng rng(37);
  const auto rays = extreme_rays(ns_cone(2)).generators();
  const auto pool = testing::involutions(SymmetryGroup::full(2));
  for (int trial = 0; trial < 30; ++trial) {
    const auto in = testing::random_box_lift_input(rng, rays, pool);
    const auto z = extend_box(in.x, in.y, in.iota);
    CHECK(check_extension(z));
    const auto r = recognize_extension(z, in.iota);
    REQUIRE(r.recognized);
    CHECK(extend_box(*r.x, *r.y, in.iota) == z);

    const auto in2 = testing::random_box2_lift_input(rng, rays, pool);
    const auto z2 = extend_box2(in2.w, in2.iota, in2.kappa);
    CHECK(in_ns(z2));
    const auto r2 = recognize_extension(z2, in2.iota, in2.kappa);
    REQUIRE(r2.recognized);
    CHECK(*r2.w == in2.w);
  }
}

TEST_CASE("serialized values re-parse to equal values") {
  const auto rays = extreme_rays(ns_cone(2));
  CHECK(std::get<ConeVRep>(parse_cone_string(format_cone(rays))) == rays);
  for (const auto& f : {mermin_klyshko(3), sliwa17_functional(), lower(gyni_box())}) {
    CHECK(std::get<FunctionalTensor>(parse_tensor_string(format_tensor(f))) == f);
  }
  CHECK(std::get<CorrelationTensor>(parse_tensor_string(format_tensor(isotropic_box(Rational(7, 3))))) ==
        isotropic_box(Rational(7, 3)));
}

TEST_CASE("isotropic self-duality arithmetic") {
  CHECK(tsirelson_selfdual_value(Rational(2)) == Rational(1, 2));
  CHECK(tsirelson_selfdual_value(Rational(0)) == Rational(1));
  CHECK(tsirelson_selfdual_value(Rational(3)) == Rational(-1, 8));
  CHECK(isotropic_box(Rational(4)) == pr_box());
  CHECK(isotropic_box(Rational(0)) == CorrelationTensor(2, [] {
          Vector v(9);
          v[4] = 1;
          return v;
        }()));
}
