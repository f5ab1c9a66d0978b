#include "torfock/realization.hpp"

#include <stdexcept>

namespace torfock {

OpContext RealizationParams::context() const {
  check();
  return OpContext{n, N, scheme, kappa, lambda};
}

void RealizationParams::check() const {
  if (n < 2) throw std::invalid_argument("RealizationParams: n must be >= 2");
  if (N < 0) throw std::invalid_argument("RealizationParams: N must be >= 0");
  if (int(scheme.dim()) != N + 1)
    throw std::invalid_argument("RealizationParams: scheme dimension != N+1");
  if (kappa.N != N)
    throw std::invalid_argument("RealizationParams: kappa N mismatch");
  if (int(lambda.size()) != n + 1)
    throw std::invalid_argument("RealizationParams: need n+1 lambda values");
}

std::vector<Chain> chain_enumerate(int n, const ChainConstraint& constraint) {
  if (n < 1) throw std::invalid_argument("chain_enumerate: n must be >= 1");
  std::vector<Chain> out;
  int interior = n - 1;  // candidate entries 2..n
  for (unsigned long mask = 0; mask < (1ul << interior); ++mask) {
    Chain ch;
    ch.q.push_back(1);
    for (int t = 0; t < interior; ++t)
      if (mask & (1ul << t)) ch.q.push_back(t + 2);
    bool keep = true;
    switch (constraint.kind) {
      case ChainConstraint::None:
        break;
      case ChainConstraint::LastEquals:
        keep = ch.last() == constraint.t;
        break;
      case ChainConstraint::LastAtMost:
        keep = ch.last() <= constraint.t;
        break;
      case ChainConstraint::PenultimateAtMostLastEquals:
        keep = ch.last() == constraint.t && ch.len() >= 2 &&
               ch.penultimate() <= constraint.t2;
        break;
    }
    if (keep) out.push_back(std::move(ch));
  }
  return out;
}

Realization::Realization(RealizationParams params)
    : params_(std::move(params)), ctx_(params_.context()) {}

const SummableOperator& Realization::E(int r, const MultiIndex& m) const {
  return get('E', r, m);
}
const SummableOperator& Realization::F(int r, const MultiIndex& m) const {
  return get('F', r, m);
}
const SummableOperator& Realization::H(int r, const MultiIndex& m) const {
  return get('H', r, m);
}
const SummableOperator& Realization::phi_b(int r, const MultiIndex& m) const {
  return get('B', r, m);
}

const SummableOperator& Realization::get(char kind, int r,
                                         const MultiIndex& m) const {
  if (r < 0 || r > params_.n)
    throw std::out_of_range("Realization: generator index out of 0..n");
  if (int(m.dim()) != params_.N + 1)
    throw std::invalid_argument("Realization: mode dimension != N+1");
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(kind, r, m);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, build(kind, r, m)).first;
  return it->second;
}

SummableOperator Realization::build(char kind, int r,
                                    const MultiIndex& m) const {
  switch (kind) {
    case 'E': return build_E(r, m);
    case 'F': return build_F(r, m);
    case 'H': return build_H(r, m);
    case 'B': return op_phi_b(r, m, ctx_);
  }
  throw std::logic_error("Realization::build: bad kind");
}

SummableOperator Realization::build_E(int r, const MultiIndex& m) const {
  using SF = SeriesFactor;
  const int n = params_.n;
  SummableOperator op;
  if (r == 0) {
    op.add(Rat(-1), {SF::a(1, n + 1)}, m);
    return op;
  }
  op.add(Rat(1), {SF::a(r, r + 1), SF::a_star(r, r + 1), SF::a_star(r, r + 1)},
         m);
  for (int j = r + 2; j <= n + 1; ++j)
    op.add(Rat(-1), {SF::a(r + 1, j), SF::a_star(r, j)}, m);
  for (int j = 1; j <= r - 1; ++j)
    op.add(Rat(1), {SF::a(j, r), SF::a_star(j, r + 1)}, m);
  for (int j = r + 2; j <= n + 1; ++j) {
    op.add(Rat(1), {SF::a(r, j), SF::a_star(r, j), SF::a_star(r, r + 1)}, m);
    op.add(Rat(-1),
           {SF::a(r + 1, j), SF::a_star(r + 1, j), SF::a_star(r, r + 1)}, m);
  }
  op.add(Rat(1), {SF::a_star(r, r + 1), SF::phi_b(r)}, m);
  op.add(Rat(params_.flip_kappa_d ? -1 : 1), {SF::kappa_d_a_star(r, r + 1)},
         m);
  return op;
}

SummableOperator Realization::build_F(int r, const MultiIndex& m) const {
  using SF = SeriesFactor;
  const int n = params_.n;
  SummableOperator op;
  if (r >= 1) {
    op.add(Rat(1), {SF::a(r, r + 1)}, m);
    for (int j = 1; j <= r - 1; ++j)
      op.add(Rat(-1), {SF::a(j, r + 1), SF::a_star(j, r)}, m);
    return op;
  }
  // rho(F_0): three chain-sum blocks.
  // A: -a_{rj} a*_{q_1 q_2} ... a*_{q_{i-1} q_i} a*_{r,n+1}
  //    over chains with q_i = j and q_{i-1} <= r.  Here the chain ends at j
  //    itself, so its entries range up to n+1 (unlike blocks B and C, whose
  //    last entry is bounded by r <= n).
  for (int rr = 1; rr <= n; ++rr) {
    for (int j = rr + 1; j <= n + 1; ++j) {
      auto chains = chain_enumerate(
          n + 1, ChainConstraint::penult_at_most_last_equals(rr, j));
      for (const auto& ch : chains) {
        std::vector<SF> factors = {SF::a(rr, j)};
        for (std::size_t l = 0; l + 1 < ch.len(); ++l)
          factors.push_back(SF::a_star(ch.q[l], ch.q[l + 1]));
        factors.push_back(SF::a_star(rr, n + 1));
        op.add(Rat(-1), std::move(factors), m);
      }
    }
  }
  // B: -a*_{q_1 q_2} ... a*_{q_i, n+1} Phi(b_r) over chains with q_i <= r.
  for (int rr = 1; rr <= n; ++rr) {
    for (const auto& ch : chain_enumerate(n, ChainConstraint::last_at_most(rr))) {
      std::vector<SF> factors;
      for (std::size_t l = 0; l + 1 < ch.len(); ++l)
        factors.push_back(SF::a_star(ch.q[l], ch.q[l + 1]));
      factors.push_back(SF::a_star(ch.last(), n + 1));
      factors.push_back(SF::phi_b(rr));
      op.add(Rat(-1), std::move(factors), m);
    }
  }
  // C: -a*_{q_1 q_2} ... a*_{q_{i-1} q_i} kappa.D a*_{r,n+1} over chains
  //    with q_i = r.
  for (int rr = 1; rr <= n; ++rr) {
    for (const auto& ch : chain_enumerate(n, ChainConstraint::last_equals(rr))) {
      std::vector<SF> factors;
      for (std::size_t l = 0; l + 1 < ch.len(); ++l)
        factors.push_back(SF::a_star(ch.q[l], ch.q[l + 1]));
      factors.push_back(SF::kappa_d_a_star(rr, n + 1));
      op.add(Rat(-1), std::move(factors), m);
    }
  }
  return op;
}

SummableOperator Realization::build_H(int r, const MultiIndex& m) const {
  using SF = SeriesFactor;
  const int n = params_.n;
  SummableOperator op;
  if (r == 0) {
    for (int rr = 1; rr <= n; ++rr) op = op + (-build_H(rr, m));
    return op;
  }
  op.add(Rat(2), {SF::a(r, r + 1), SF::a_star(r, r + 1)}, m);
  for (int i = 1; i <= r - 1; ++i) {
    op.add(Rat(1), {SF::a(i, r + 1), SF::a_star(i, r + 1)}, m);
    op.add(Rat(-1), {SF::a(i, r), SF::a_star(i, r)}, m);
  }
  for (int j = r + 2; j <= n + 1; ++j) {
    op.add(Rat(1), {SF::a(r, j), SF::a_star(r, j)}, m);
    op.add(Rat(-1), {SF::a(r + 1, j), SF::a_star(r + 1, j)}, m);
  }
  op.add(Rat(1), {SF::phi_b(r)}, m);
  return op;
}

}  // namespace torfock
