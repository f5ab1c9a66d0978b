#include "torfock/operators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torfock {

PrimitiveOp PrimitiveOp::x_mul(int i, int j, MultiIndex m) {
  return {XMul, i, j, std::move(m), Rat(1)};
}
PrimitiveOp PrimitiveOp::x_der(int i, int j, MultiIndex m) {
  return {XDer, i, j, std::move(m), Rat(1)};
}
PrimitiveOp PrimitiveOp::y_mul(int i, MultiIndex k) {
  return {YMul, i, 0, std::move(k), Rat(1)};
}
PrimitiveOp PrimitiveOp::y_der(int i, MultiIndex k) {
  return {YDer, i, 0, std::move(k), Rat(1)};
}
PrimitiveOp PrimitiveOp::scalar_op(Rat c) {
  return {Scalar, 0, 0, {}, std::move(c)};
}

std::string PrimitiveOp::str() const {
  std::ostringstream os;
  switch (kind) {
    case XMul: os << "a[" << i << ',' << j << ']' << mode.str(); break;
    case XDer: os << "a*[" << i << ',' << j << ']' << mode.str(); break;
    case YMul: os << "ymul[" << i << ']' << mode.str(); break;
    case YDer: os << "yder[" << i << ']' << mode.str(); break;
    case Scalar: os << rat_str(scalar); break;
  }
  return os.str();
}

FockVector apply_primitive(const PrimitiveOp& op, const FockVector& v,
                           const OpContext& ctx) {
  switch (op.kind) {
    case PrimitiveOp::XMul:
      return v.mul_var(VarKey::x(op.i, op.j, op.mode)) * Rat(-1);
    case PrimitiveOp::XDer:
      return v.derive(VarKey::x(op.i, op.j, -op.mode));
    case PrimitiveOp::YMul:
      return v.mul_var(VarKey::y(op.i, op.mode));
    case PrimitiveOp::YDer:
      if (theta(op.mode, ctx.scheme) != 1)
        throw std::invalid_argument("YDer: mode must be strictly positive");
      return v.derive(VarKey::y(op.i, op.mode));
    case PrimitiveOp::Scalar:
      return v * op.scalar;
  }
  return FockVector::zero();
}

std::string SeriesFactor::str() const {
  std::ostringstream os;
  switch (kind) {
    case A: os << "a[" << i << ',' << j << ']'; break;
    case Astar: os << "a*[" << i << ',' << j << ']'; break;
    case PhiB: os << "Phi(b_" << i << ')'; break;
    case KappaDAstar: os << "kD.a*[" << i << ',' << j << ']'; break;
  }
  return os.str();
}

void ProductTerm::validate() const {
  int flex = 0;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (factors[t].flexible()) {
      ++flex;
      if (factors[t].kind == SeriesFactor::A && t != 0)
        throw std::logic_error(
            "ProductTerm: flexible a-factor must be leftmost");
    }
  }
  if (flex > 1)
    throw std::logic_error("ProductTerm: more than one flexible factor");
}

std::string ProductTerm::str() const {
  std::ostringstream os;
  os << rat_str(coeff) << " * ";
  if (factors.empty()) os << "1";
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (t) os << ' ';
    os << factors[t].str();
  }
  os << " @ " << mode.str();
  return os.str();
}

SummableOperator& SummableOperator::add(Rat coeff,
                                        std::vector<SeriesFactor> factors,
                                        MultiIndex mode) {
  ProductTerm t{std::move(coeff), std::move(factors), std::move(mode)};
  t.validate();
  terms.push_back(std::move(t));
  return *this;
}

SummableOperator SummableOperator::operator-() const {
  SummableOperator r = *this;
  for (auto& t : r.terms) t.coeff = -t.coeff;
  return r;
}

SummableOperator operator+(const SummableOperator& a,
                           const SummableOperator& b) {
  SummableOperator r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

std::string SummableOperator::str() const {
  std::ostringstream os;
  for (const auto& t : terms) os << t.str() << '\n';
  return os.str();
}

SummableOperator op_a(int i, int j, MultiIndex m) {
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::a(i, j)}, std::move(m));
  return op;
}
SummableOperator op_a_star(int i, int j, MultiIndex m) {
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::a_star(i, j)}, std::move(m));
  return op;
}
SummableOperator op_kappa_d_a_star(int i, int j, MultiIndex m) {
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::kappa_d_a_star(i, j)}, std::move(m));
  return op;
}
SummableOperator op_phi_b(int r, MultiIndex m, const OpContext&) {
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::phi_b(r)}, std::move(m));
  return op;
}

std::vector<std::pair<Rat, PrimitiveOp>> kappaD_astar_modes(
    const KappaSpec& spec, int i, int j, const MultiIndex& m) {
  std::vector<std::pair<Rat, PrimitiveOp>> out;
  for (const auto& sup : spec.support()) {
    MultiIndex s = m + sup;
    Rat c(0);
    for (int p = 0; p <= spec.N; ++p) c -= Rat(s[p]) * spec.value(sup, p);
    if (c != 0) out.emplace_back(c, PrimitiveOp::x_der(i, j, s));
  }
  return out;
}

FockVector apply_phi_b_fixed(const OpContext& ctx, int r, const MultiIndex& m,
                             const FockVector& v) {
  if (r < 0 || r > ctx.n)
    throw std::out_of_range("apply_phi_b_fixed: r out of 0..n");
  if (v.is_zero()) return v;
  if (r == 0) {
    FockVector out;
    for (int i = 1; i <= ctx.n; ++i)
      out = out - apply_phi_b_fixed(ctx, i, m, v);
    return out;
  }
  FockVector out;
  int th_m = theta(m, ctx.scheme);
  int th_neg = theta(-m, ctx.scheme);
  if (th_neg) out = out + v.mul_var(VarKey::y(r, -m));
  if (m.is_zero()) out = out - v * ctx.lambda[std::size_t(r)];
  if (th_m || th_neg) {
    // weights on the neighbouring y indices
    std::vector<std::pair<int, long>> weights;
    if (th_neg) {
      weights = {{r - 1, 1}, {r, -1}};
    } else {
      weights = {{r - 1, 1}, {r, -2}, {r + 1, 1}};
    }
    for (const auto& sup : ctx.kappa.support()) {
      MultiIndex s = m + sup;  // -m + s ranges over supp(kappa)
      if (theta(s, ctx.scheme) != 1) continue;
      Rat base(0);
      for (int p = 0; p <= ctx.N; ++p)
        base += Rat(m[p]) * ctx.kappa.value(sup, p);
      if (base == 0) continue;
      for (const auto& [a, w] : weights) {
        if (a < 1 || a > ctx.n) continue;
        out = out + v.derive(VarKey::y(a, s)) * (base * Rat(w));
      }
    }
  }
  return out;
}

namespace {

using StateMap = std::map<MultiIndex, FockVector>;

void add_state(StateMap& states, const MultiIndex& s, const FockVector& v) {
  if (v.is_zero()) return;
  auto it = states.find(s);
  if (it == states.end()) {
    states.emplace(s, v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) states.erase(it);
  }
}

FockVector apply_term(const ProductTerm& term, const FockVector& v,
                      const OpContext& ctx) {
  term.validate();
  long flex = -1;
  for (std::size_t t = 0; t < term.factors.size(); ++t)
    if (term.factors[t].flexible()) flex = long(t);

  StateMap states;
  states.emplace(MultiIndex(ctx.dim()), v * term.coeff);

  for (long idx = long(term.factors.size()) - 1; idx >= 0; --idx) {
    if (idx == flex) continue;
    const SeriesFactor& f = term.factors[idx];
    StateMap next;
    for (const auto& [s, vec] : states) {
      switch (f.kind) {
        case SeriesFactor::Astar: {
          // a*_{ij,m} = d/dx_{ij}(-m); admissible m = -q over the support
          for (const auto& q : vec.x_modes(f.i, f.j))
            add_state(next, s - q, vec.derive(VarKey::x(f.i, f.j, q)));
          break;
        }
        case SeriesFactor::KappaDAstar: {
          for (const auto& q : vec.x_modes(f.i, f.j)) {
            MultiIndex sprime = -q;
            FockVector dv = vec.derive(VarKey::x(f.i, f.j, q));
            for (const auto& sup : ctx.kappa.support()) {
              Rat c(0);
              for (int p = 0; p <= ctx.N; ++p)
                c -= Rat(sprime[p]) * ctx.kappa.value(sup, p);
              if (c != 0) add_state(next, s + sprime - sup, dv * c);
            }
          }
          break;
        }
        default:
          throw std::logic_error("apply_term: unexpected factor kind");
      }
    }
    states = std::move(next);
  }

  FockVector result;
  if (flex >= 0) {
    const SeriesFactor& f = term.factors[std::size_t(flex)];
    for (const auto& [s, vec] : states) {
      MultiIndex residual = term.mode - s;
      if (f.kind == SeriesFactor::A)
        result =
            result + vec.mul_var(VarKey::x(f.i, f.j, residual)) * Rat(-1);
      else
        result = result + apply_phi_b_fixed(ctx, f.i, residual, vec);
    }
  } else {
    auto it = states.find(term.mode);
    if (it != states.end()) result = it->second;
  }
  return result;
}

}  // namespace

FockVector apply_summable(const SummableOperator& op, const FockVector& v,
                          const OpContext& ctx) {
  FockVector out;
  for (const auto& t : op.terms) out = out + apply_term(t, v, ctx);
  return out;
}

FockVector commutator_apply(const SummableOperator& A,
                            const SummableOperator& B, const FockVector& v,
                            const OpContext& ctx) {
  return apply_summable(A, apply_summable(B, v, ctx), ctx) -
         apply_summable(B, apply_summable(A, v, ctx), ctx);
}

}  // namespace torfock
