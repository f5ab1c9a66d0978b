#include <doctest.h>

#include "torfock/cartan.hpp"

using namespace torfock;

TEST_CASE("cartan entries") {
  CartanMatrix A2(2);
  CHECK(A2.entry(1, 1) == 2);
  CHECK(A2.entry(0, 2) == -1);  // 0 and 2 cyclically adjacent mod 3
  CHECK(A2.entry(0, 1) == -1);
  CartanMatrix A4(4);
  CHECK(A4.entry(1, 3) == 0);
  CHECK(A4.entry(0, 4) == -1);
}

TEST_CASE("cartan bounds") {
  CHECK_THROWS_AS(CartanMatrix(1), std::invalid_argument);
  CartanMatrix A(2);
  CHECK_THROWS_AS(A.entry(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(A.entry(0, 3), std::out_of_range);
}

TEST_CASE("row sums, symmetry, delta identity") {
  for (int n = 2; n <= 6; ++n) {
    CartanMatrix A(n);
    for (int i = 0; i <= n; ++i) {
      int row = 0;
      for (int j = 0; j <= n; ++j) {
        row += A.entry(i, j);
        CHECK(A.entry(i, j) == A.entry(j, i));
      }
      CHECK(row == 0);
    }
    // -A_{ij} = d_{j,i-1} - 2 d_{ij} + d_{j,i+1} on interior indices away
    // from the cyclic wrap
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (std::abs(i - j) > n - 1) continue;
        int rhs = (j == i - 1 ? 1 : 0) - 2 * (j == i ? 1 : 0) +
                  (j == i + 1 ? 1 : 0);
        CHECK(-A.entry(i, j) == rhs);
      }
  }
}
