#ifndef TORFOCK_OPERATORS_HPP
#define TORFOCK_OPERATORS_HPP

#include <string>
#include <vector>

#include "torfock/fock.hpp"
#include "torfock/kappa.hpp"
#include "torfock/lattice.hpp"
#include "torfock/rational.hpp"

namespace torfock {

// Shared evaluation context: the cocycle, the highest-weight parameters
// lambda_0..lambda_n and the positivity scheme.
struct OpContext {
  int n = 2;
  int N = 1;
  OrderScheme scheme;
  KappaSpec kappa;
  std::vector<Rat> lambda;  // size n+1

  std::size_t dim() const { return std::size_t(N + 1); }
};

// Fixed-mode primitive operators.
//   XMul(i,j,m)  : multiplication by -x_{ij}(m)   (a_{ij,m})
//   XDer(i,j,m)  : d/dx_{ij}(-m)                  (a*_{ij,m})
//   YMul(i,k)    : multiplication by y_i(k)
//   YDer(i,k)    : d/dy_i(k), requires k > 0
//   Scalar(c)    : multiplication by c
struct PrimitiveOp {
  enum Kind { XMul, XDer, YMul, YDer, Scalar };
  Kind kind = Scalar;
  int i = 0, j = 0;
  MultiIndex mode;
  Rat scalar = Rat(1);

  static PrimitiveOp x_mul(int i, int j, MultiIndex m);
  static PrimitiveOp x_der(int i, int j, MultiIndex m);
  static PrimitiveOp y_mul(int i, MultiIndex k);
  static PrimitiveOp y_der(int i, MultiIndex k);
  static PrimitiveOp scalar_op(Rat c);

  std::string str() const;
};

FockVector apply_primitive(const PrimitiveOp& op, const FockVector& v,
                           const OpContext& ctx);

// One generating-function factor with its mode left open.  A and the
// y-multiplication part of PhiB have unbounded mode support (flexible);
// Astar and KappaDAstar act finitely against any vector.
struct SeriesFactor {
  enum Kind { A, Astar, PhiB, KappaDAstar };
  Kind kind = A;
  int i = 0, j = 0;  // j unused for PhiB (index is i)

  static SeriesFactor a(int i, int j) { return {A, i, j}; }
  static SeriesFactor a_star(int i, int j) { return {Astar, i, j}; }
  static SeriesFactor phi_b(int r) { return {PhiB, r, 0}; }
  static SeriesFactor kappa_d_a_star(int i, int j) {
    return {KappaDAstar, i, j};
  }

  bool flexible() const { return kind == A || kind == PhiB; }
  std::string str() const;
};

// coeff * F_1(z) ... F_k(z) at total mode `mode` (leftmost factor acts
// last).  At most one flexible factor; an A factor must be leftmost, a PhiB
// factor may sit anywhere because it commutes with all x-type factors.
struct ProductTerm {
  Rat coeff = Rat(1);
  std::vector<SeriesFactor> factors;
  MultiIndex mode;

  // Throws on a term violating the single-flexible-factor rule.
  void validate() const;
  std::string str() const;
};

struct SummableOperator {
  std::vector<ProductTerm> terms;

  SummableOperator& add(Rat coeff, std::vector<SeriesFactor> factors,
                        MultiIndex mode);
  SummableOperator operator-() const;
  friend SummableOperator operator+(const SummableOperator& a,
                                    const SummableOperator& b);
  // Stable textual dump of the term list.
  std::string str() const;
};

// Convenience single-factor mode operators.
SummableOperator op_a(int i, int j, MultiIndex m);
SummableOperator op_a_star(int i, int j, MultiIndex m);
SummableOperator op_kappa_d_a_star(int i, int j, MultiIndex m);
SummableOperator op_phi_b(int r, MultiIndex m, const OpContext& ctx);

// Mode-m coefficient of kappa(w).D a*_{ij}(w) as an explicit finite list:
// sum over s in m + supp(kappa) of (-sum_p s_p kappa_{s-m,p}) a*_{ij,s}.
std::vector<std::pair<Rat, PrimitiveOp>> kappaD_astar_modes(
    const KappaSpec& spec, int i, int j, const MultiIndex& m);

// Full Phi(b_r)(m) at a fixed mode (r = 0 resolves via
// b_0 = -sum_i b_i); out-of-range y indices contribute zero.
FockVector apply_phi_b_fixed(const OpContext& ctx, int r, const MultiIndex& m,
                             const FockVector& v);

// Support-driven exact application; no truncation anywhere.
FockVector apply_summable(const SummableOperator& op, const FockVector& v,
                          const OpContext& ctx);

// A(B(v)) - B(A(v)).
FockVector commutator_apply(const SummableOperator& A,
                            const SummableOperator& B, const FockVector& v,
                            const OpContext& ctx);

}  // namespace torfock

#endif
