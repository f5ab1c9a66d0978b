#include <doctest.h>

#include "torfock/fock.hpp"

using namespace torfock;

namespace {
RandomVectorConfig cfg(std::uint64_t seed, int n = 2, int N = 1,
                       long radius = 1) {
  RandomVectorConfig c;
  c.n = n;
  c.N = N;
  c.scheme = OrderScheme::all_ones(std::size_t(N + 1));
  c.box_radius = radius;
  c.seed = seed;
  return c;
}
}  // namespace

TEST_CASE("var keys") {
  CHECK_THROWS_AS(VarKey::x(2, 2, MultiIndex{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(VarKey::y(0, MultiIndex{1, 0}), std::invalid_argument);
  CHECK(VarKey::x(1, 2, MultiIndex{0, 0}) < VarKey::x(1, 3, MultiIndex{0, 0}));
}

TEST_CASE("basic algebra and canonical form") {
  VarKey a = VarKey::x(1, 2, MultiIndex{1, 0});
  VarKey b = VarKey::y(1, MultiIndex{1, 0});
  FockVector va = FockVector::variable(a);
  FockVector vb = FockVector::variable(b);

  CHECK(va + vb == vb + va);
  CHECK((va - va).is_zero());
  CHECK(va * Rat(0) == FockVector::zero());
  // equal vectors built in different operation orders compare equal
  CHECK(va.mul_var(b) == vb.mul_var(a));
  CHECK((va + vb).mul_var(a) == va.mul_var(a) + vb.mul_var(a));
  // distributivity over scalars
  CHECK((va + vb) * rat(2, 3) == va * rat(2, 3) + vb * rat(2, 3));
}

TEST_CASE("derivation") {
  VarKey a = VarKey::x(1, 2, MultiIndex{1, 0});
  FockVector sq = FockVector::variable(a).mul_var(a);
  CHECK(sq.derive(a) == FockVector::variable(a) * Rat(2));
  CHECK(FockVector::constant(Rat(5)).derive(a).is_zero());
  // product rule on a mixed monomial
  VarKey b = VarKey::y(2, MultiIndex{0, 1});
  FockVector m = FockVector::variable(a).mul_var(b);
  CHECK(m.derive(a) == FockVector::variable(b));
  CHECK(m.derive(b) == FockVector::variable(a));
}

TEST_CASE("degree") {
  CHECK(*degree(FockVector::constant(Rat(1)), 2) == MultiIndex{0, 0});
  FockVector x = FockVector::variable(VarKey::x(1, 2, MultiIndex{1, 0}));
  CHECK(*degree(x, 2) == MultiIndex{-1, 0});
  FockVector y = FockVector::variable(VarKey::y(1, MultiIndex{1, 0}));
  CHECK(*degree(y, 2) == MultiIndex{1, 0});
  CHECK_FALSE(degree(x + y, 2).has_value());
  CHECK(*degree(x.mul_var(VarKey::y(1, MultiIndex{1, 0})), 2) ==
        MultiIndex{0, 0});
}

TEST_CASE("mode support queries") {
  FockVector v = FockVector::variable(VarKey::x(1, 2, MultiIndex{1, 0}))
                     .mul_var(VarKey::x(1, 2, MultiIndex{0, 1}))
                     .mul_var(VarKey::y(1, MultiIndex{1, 1}));
  auto xm = v.x_modes(1, 2);
  REQUIRE(xm.size() == 2);
  CHECK(xm[0] == MultiIndex{0, 1});
  CHECK(xm[1] == MultiIndex{1, 0});
  CHECK(v.x_modes(1, 3).empty());
  REQUIRE(v.y_modes(1).size() == 1);
  CHECK(v.y_modes(1)[0] == MultiIndex{1, 1});
}

TEST_CASE("random vectors are deterministic and in-box") {
  for (std::uint64_t seed : {0ull, 7ull, 123ull}) {
    FockVector v1 = random_vector(cfg(seed));
    FockVector v2 = random_vector(cfg(seed));
    CHECK(v1 == v2);
    CHECK_FALSE(v1.is_zero());
    OrderScheme s = OrderScheme::all_ones(2);
    for (const auto& [m, c] : v1.terms())
      for (const auto& [k, e] : m) {
        for (long x : k.mode.c) CHECK(std::abs(x) <= 1);
        if (k.kind == VarKey::Y) CHECK(theta(k.mode, s) == 1);
      }
  }
  CHECK(random_vector(cfg(1)) != random_vector(cfg(2)));
}

TEST_CASE("random homogeneous vectors have a degree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FockVector v = random_homogeneous_vector(cfg(seed, 3, 2));
    CHECK_FALSE(v.is_zero());
    CHECK(degree(v, 3).has_value());
  }
}
