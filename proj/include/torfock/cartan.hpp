#ifndef TORFOCK_CARTAN_HPP
#define TORFOCK_CARTAN_HPP

#include <stdexcept>
#include <string>

namespace torfock {

// Affine Cartan matrix of type A_n^(1), indices 0..n on a cycle of length
// n+1: diagonal 2, entries -1 for cyclically adjacent indices, 0 otherwise.
class CartanMatrix {
 public:
  explicit CartanMatrix(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("CartanMatrix: requires n >= 2");
  }

  int n() const { return n_; }

  int entry(int i, int j) const {
    check(i);
    check(j);
    if (i == j) return 2;
    int d = (i - j) % (n_ + 1);
    if (d < 0) d += n_ + 1;
    return (d == 1 || d == n_) ? -1 : 0;
  }

 private:
  void check(int i) const {
    if (i < 0 || i > n_)
      throw std::out_of_range("CartanMatrix: index " + std::to_string(i) +
                              " out of range 0.." + std::to_string(n_));
  }
  int n_;
};

}  // namespace torfock

#endif
