#ifndef TORFOCK_LATTICE_HPP
#define TORFOCK_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torfock/rational.hpp"

namespace torfock {

// An element of Z^{dim}.  Used both as a field mode and as a variable label.
struct MultiIndex {
  std::vector<long> c;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim, long fill = 0) : c(dim, fill) {}
  MultiIndex(std::initializer_list<long> init) : c(init) {}

  std::size_t dim() const { return c.size(); }
  long operator[](std::size_t i) const { return c[i]; }
  long& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (long v : c)
      if (v != 0) return false;
    return true;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    check_dims(a, b);
    MultiIndex r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    check_dims(a, b);
    MultiIndex r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  MultiIndex operator-() const {
    MultiIndex r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = -c[i];
    return r;
  }
  MultiIndex& operator+=(const MultiIndex& b) { return *this = *this + b; }

  auto operator<=>(const MultiIndex&) const = default;

  static MultiIndex unit(std::size_t dim, std::size_t p) {
    MultiIndex e(dim);
    e.c[p] = 1;
    return e;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
  }

  static void check_dims(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("MultiIndex dimension mismatch: " +
                                  std::to_string(a.dim()) + " vs " +
                                  std::to_string(b.dim()));
  }
};

// Weighted total group order on Z^{dim}: compare sum(w_i m_i) to zero, break
// ties lexicographically on the coordinates.  Both pieces are group
// homomorphism / lex comparisons, so the positive set is closed under
// addition and sign(-m) = -sign(m).
struct OrderScheme {
  std::vector<Rat> weights;

  static OrderScheme all_ones(std::size_t dim) {
    OrderScheme s;
    s.weights.assign(dim, Rat(1));
    return s;
  }
  // weights 1, 2, ..., dim
  static OrderScheme graded(std::size_t dim) {
    OrderScheme s;
    for (std::size_t i = 0; i < dim; ++i) s.weights.push_back(Rat(long(i + 1)));
    return s;
  }
  std::size_t dim() const { return weights.size(); }
};

inline int order_sign(const MultiIndex& m, const OrderScheme& scheme) {
  if (m.dim() != scheme.dim())
    throw std::invalid_argument("order_sign: index/scheme dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < m.dim(); ++i) s += scheme.weights[i] * m[i];
  int c = sgn(s);
  if (c != 0) return c;
  for (long v : m.c)
    if (v != 0) return v > 0 ? 1 : -1;
  return 0;
}

inline int theta(const MultiIndex& m, const OrderScheme& scheme) {
  return order_sign(m, scheme) > 0 ? 1 : 0;
}

// All m in [-radius, radius]^dim, in lexicographic order.
inline std::vector<MultiIndex> mode_box(std::size_t dim, long radius) {
  std::vector<MultiIndex> out;
  MultiIndex m(dim, -radius);
  while (true) {
    out.push_back(m);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (m[i] < radius) {
        ++m[i];
        for (std::size_t j = i + 1; j < dim; ++j) m[j] = -radius;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace torfock

#endif
