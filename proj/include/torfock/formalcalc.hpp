#ifndef TORFOCK_FORMALCALC_HPP
#define TORFOCK_FORMALCALC_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torfock/lattice.hpp"
#include "torfock/rational.hpp"

namespace torfock {

// Laurent polynomial in two multivariables z = (z_0..z_{k}) and
// w = (w_0..w_{k}); term key is (z-exponent, w-exponent).
struct LaurentPoly {
  std::map<std::pair<MultiIndex, MultiIndex>, Rat> terms;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(std::size_t dim, const Rat& c);
  static LaurentPoly monomial(const MultiIndex& zexp, const MultiIndex& wexp,
                              const Rat& c);
  static LaurentPoly zmon(const MultiIndex& zexp, const Rat& c = Rat(1));
  static LaurentPoly wmon(const MultiIndex& wexp, const Rat& c = Rat(1));

  bool is_zero() const { return terms.empty(); }
  std::size_t dim() const;
  bool z_free() const;

  LaurentPoly& add_term(const MultiIndex& zexp, const MultiIndex& wexp,
                        const Rat& c);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rat& c, const LaurentPoly& a);
  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;
};

// Coefficient of z_i^{-1}; the z_i exponent is consumed, everything else kept.
LaurentPoly residue(const LaurentPoly& f, std::size_t i);

// Finite sum  sum_j c_j(w) d^(j) delta(z/w)  with divided-power derivative
// orders j.  `active[i]` records whether the delta factor in variable i is
// still present (residue consumes it).  Canonical form has z-free c_j.
struct DeltaExpr {
  std::size_t nvars = 0;
  std::vector<bool> active;  // size nvars
  std::map<MultiIndex, LaurentPoly> parts;

  static DeltaExpr delta(std::size_t nvars);                    // delta(z/w)
  static DeltaExpr d_delta(const MultiIndex& order);            // d^(j) delta
  static DeltaExpr zero(std::size_t nvars);

  DeltaExpr& add_part(const MultiIndex& order, const LaurentPoly& coeff);
  bool is_zero() const { return parts.empty(); }
  bool is_canonical() const;

  friend DeltaExpr operator+(const DeltaExpr& a, const DeltaExpr& b);
  friend DeltaExpr operator*(const Rat& c, const DeltaExpr& a);
  bool operator==(const DeltaExpr&) const = default;

  std::string str() const;
};

// f(z,w) * d, reduced to canonical form: every z_i^a against d^(j_i) delta
// expands as  sum_{j'<=j_i} C(a, j_i-j') w_i^{a-j_i+j'} d^(j') delta, which
// eliminates all z-dependence in one pass.
DeltaExpr multiply_into_delta(const LaurentPoly& f, const DeltaExpr& d);

// Formal residue in z_i of a canonical DeltaExpr.  Parts with j_i > 0 vanish;
// a part with j_i = 0 contributes its coefficient times w_i, with the delta
// factor in variable i consumed.
DeltaExpr residue(const DeltaExpr& d, std::size_t i);

// Sets all w exponents to zero: specializes delta(z/w) to the one-variable
// family delta(z) = delta(z/1).
DeltaExpr eval_w_one(const DeltaExpr& d);

// sum_j c_j(w) lambda^(j), stored with the 1/j! folded into the coefficient
// of lambda^j.
struct LambdaPoly {
  std::map<MultiIndex, LaurentPoly> terms;

  bool operator==(const LambdaPoly&) const = default;
  std::string str() const;
};

// Reads the canonical form off: d^(j) delta |-> lambda^(j).
LambdaPoly fourier_lambda(const DeltaExpr& d);

// C(a, k) for arbitrary integer a and k >= 0, exact.
Rat binom(long a, long k);

}  // namespace torfock

#endif
