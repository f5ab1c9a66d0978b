#include <doctest.h>

#include "torfock/lattice.hpp"

using namespace torfock;

TEST_CASE("multi-index arithmetic") {
  MultiIndex a{1, -2}, b{3, 4};
  CHECK((a + b) == MultiIndex{4, 2});
  CHECK((a - b) == MultiIndex{-2, -6});
  CHECK(-a == MultiIndex{-1, 2});
  CHECK(MultiIndex::unit(3, 1) == MultiIndex{0, 1, 0});
  CHECK(MultiIndex{0, 0}.is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK_THROWS_AS((void)(a + MultiIndex{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("order_sign basic values") {
  OrderScheme s = OrderScheme::all_ones(2);
  CHECK(order_sign(MultiIndex{0, 0}, s) == 0);
  CHECK(order_sign(MultiIndex{2, -1}, s) == 1);   // weighted sum 1 > 0
  CHECK(order_sign(MultiIndex{1, -1}, s) == 1);   // sum 0, lex tiebreak
  CHECK(order_sign(MultiIndex{-1, 1}, s) == -1);
  CHECK_THROWS_AS(order_sign(MultiIndex{1}, s), std::invalid_argument);
}

TEST_CASE("theta basic values") {
  OrderScheme s = OrderScheme::all_ones(2);
  CHECK(theta(MultiIndex{0, 0}, s) == 0);
  CHECK(theta(MultiIndex{1, 0}, s) == 1);
  CHECK(theta(MultiIndex{-1, 0}, s) == 0);
}

TEST_CASE("theta decomposition properties over a box") {
  for (std::size_t dim : {2u, 3u}) {
    for (const OrderScheme& s :
         {OrderScheme::all_ones(dim), OrderScheme::graded(dim)}) {
      auto box = mode_box(dim, 2);
      for (const auto& m : box) {
        if (m.is_zero()) {
          CHECK(theta(m, s) == 0);
          continue;
        }
        // exactly one of m, -m is positive
        CHECK(theta(m, s) + theta(-m, s) == 1);
        CHECK(order_sign(-m, s) == -order_sign(m, s));
      }
      // closure of the positive set under addition
      for (const auto& m : box)
        for (const auto& n : box)
          if (theta(m, s) == 1 && theta(n, s) == 1)
            CHECK(theta(m + n, s) == 1);
    }
  }
}

TEST_CASE("mode_box enumeration") {
  auto box = mode_box(2, 1);
  CHECK(box.size() == 9);
  CHECK(box.front() == MultiIndex{-1, -1});
  CHECK(box.back() == MultiIndex{1, 1});
  for (std::size_t t = 1; t < box.size(); ++t) CHECK(box[t - 1] < box[t]);
  CHECK(mode_box(3, 2).size() == 125);
  CHECK(mode_box(1, 0).size() == 1);
}
