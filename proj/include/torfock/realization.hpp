#ifndef TORFOCK_REALIZATION_HPP
#define TORFOCK_REALIZATION_HPP

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "torfock/cartan.hpp"
#include "torfock/kappa.hpp"
#include "torfock/operators.hpp"

namespace torfock {

struct RealizationParams {
  int n = 2;
  int N = 1;
  OrderScheme scheme;
  KappaSpec kappa;
  std::vector<Rat> lambda;  // lambda_0 .. lambda_n
  // Mutation-guard switch: flips the sign of the kappa.D a* term of rho(E_r).
  bool flip_kappa_d = false;

  OpContext context() const;
  void check() const;  // n >= 2, sizes consistent, kappa mode dims
};

// Interior chain 1 = q_1 < q_2 < ... < q_i < n+1 (terminal q_{i+1} = n+1
// implicit).
struct Chain {
  std::vector<int> q;  // q[0] == 1
  int last() const { return q.back(); }
  int penultimate() const { return q[q.size() - 2]; }  // needs size >= 2
  std::size_t len() const { return q.size(); }
};

struct ChainConstraint {
  enum Kind { None, LastEquals, LastAtMost, PenultimateAtMostLastEquals };
  Kind kind = None;
  int t = 0;   // last-entry bound / value
  int t2 = 0;  // penultimate bound (PenultimateAtMostLastEquals)

  static ChainConstraint none() { return {}; }
  static ChainConstraint last_equals(int t) { return {LastEquals, t, 0}; }
  static ChainConstraint last_at_most(int t) { return {LastAtMost, t, 0}; }
  static ChainConstraint penult_at_most_last_equals(int pen, int last) {
    return {PenultimateAtMostLastEquals, last, pen};
  }
};

// Exhaustive duplicate-free enumeration: all subsets of {2..n} prepended
// with 1, filtered by the constraint.
std::vector<Chain> chain_enumerate(int n, const ChainConstraint& constraint);

// Generator modes of the free-field action, memoized per (kind, r, m).
class Realization {
 public:
  explicit Realization(RealizationParams params);

  const RealizationParams& params() const { return params_; }
  const OpContext& context() const { return ctx_; }

  const SummableOperator& E(int r, const MultiIndex& m) const;
  const SummableOperator& F(int r, const MultiIndex& m) const;
  const SummableOperator& H(int r, const MultiIndex& m) const;
  const SummableOperator& phi_b(int r, const MultiIndex& m) const;

 private:
  SummableOperator build(char kind, int r, const MultiIndex& m) const;
  SummableOperator build_E(int r, const MultiIndex& m) const;
  SummableOperator build_F(int r, const MultiIndex& m) const;
  SummableOperator build_H(int r, const MultiIndex& m) const;

  const SummableOperator& get(char kind, int r, const MultiIndex& m) const;

  RealizationParams params_;
  OpContext ctx_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<char, int, MultiIndex>, SummableOperator> memo_;
};

}  // namespace torfock

#endif
