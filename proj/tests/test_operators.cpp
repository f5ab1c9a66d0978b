#include <doctest.h>

#include <map>

#include "torfock/operators.hpp"

using namespace torfock;

namespace {

OpContext ctx2(const KappaSpec& kappa, std::vector<Rat> lambda = {}) {
  OpContext ctx;
  ctx.n = 2;
  ctx.N = kappa.N;
  ctx.scheme = OrderScheme::all_ones(std::size_t(kappa.N + 1));
  ctx.kappa = kappa;
  ctx.lambda = lambda.empty() ? std::vector<Rat>(3, Rat(0)) : lambda;
  return ctx;
}

// --- Independent truncated-series oracle for kappa.D a* -------------------
// A series is a finite map: w-exponent |-> linear combination of abstract
// symbols a*_s.  The field a*(w) = sum_s a*_s w^{-s} is truncated to a box;
// kappa_p(w) = sum_u kappa_{u,p} w^u is a genuine Laurent polynomial, and
// D_p = w_p d/dw_p.  Comparing low coefficients against kappaD_astar_modes
// checks the closed-form mode extraction against literal series algebra.
using Series = std::map<MultiIndex, std::map<MultiIndex, Rat>>;

void series_add(Series& s, const MultiIndex& wexp, const MultiIndex& sym,
                const Rat& c) {
  if (c == 0) return;
  Rat& slot = s[wexp][sym];
  slot += c;
  if (slot == 0) {
    s[wexp].erase(sym);
    if (s[wexp].empty()) s.erase(wexp);
  }
}

Series oracle_kappa_d_astar(const KappaSpec& spec, long trunc) {
  Series astar;
  for (const auto& s : mode_box(std::size_t(spec.N + 1), trunc))
    series_add(astar, -s, s, Rat(1));
  Series out;
  for (int p = 0; p <= spec.N; ++p) {
    // D_p a*(w): w^e picks up factor e_p
    Series dp;
    for (const auto& [wexp, syms] : astar)
      for (const auto& [sym, c] : syms)
        series_add(dp, wexp, sym, c * Rat(wexp[std::size_t(p)]));
    // multiply by kappa_p(w)
    for (const auto& u : spec.support()) {
      Rat k = spec.value(u, p);
      if (k == 0) continue;
      for (const auto& [wexp, syms] : dp)
        for (const auto& [sym, c] : syms)
          series_add(out, wexp + u, sym, c * k);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("primitive operators") {
  OpContext ctx = ctx2(kappa_point_at_zero(1, {Rat(0), Rat(0)}));
  FockVector one = FockVector::constant(Rat(1));
  MultiIndex m{1, 0};

  FockVector got = apply_primitive(PrimitiveOp::x_mul(1, 2, m), one, ctx);
  CHECK(got == FockVector::variable(VarKey::x(1, 2, m)) * Rat(-1));

  FockVector x = FockVector::variable(VarKey::x(1, 2, m));
  CHECK(apply_primitive(PrimitiveOp::x_der(1, 2, -m), x, ctx) == one);
  CHECK(apply_primitive(PrimitiveOp::x_der(1, 2, m), one, ctx).is_zero());
  CHECK(apply_primitive(PrimitiveOp::scalar_op(rat(1, 2)), x, ctx) ==
        x * rat(1, 2));
  CHECK_THROWS_AS(
      apply_primitive(PrimitiveOp::y_der(1, MultiIndex{-1, 0}), x, ctx),
      std::invalid_argument);
}

TEST_CASE("kappa.D a* mode lists") {
  SUBCASE("kappa at zero") {
    KappaSpec spec = kappa_point_at_zero(1, {Rat(2), Rat(3)});
    MultiIndex m{1, -2};
    auto modes = kappaD_astar_modes(spec, 1, 2, m);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].first == Rat(-(1 * 2 + (-2) * 3)));  // -(sum m_p c_p) = 4
    CHECK(modes[0].second.mode == m);
    CHECK(kappaD_astar_modes(spec, 1, 2, MultiIndex{0, 0}).empty());
  }
  SUBCASE("cancelling positive-cone point") {
    KappaSpec spec;
    spec.N = 1;
    spec.set(MultiIndex{1, 1}, 0, Rat(1));
    spec.set(MultiIndex{1, 1}, 1, Rat(-1));
    // s = (1,1): coefficient -(1*1 + 1*(-1)) = 0, pruned
    CHECK(kappaD_astar_modes(spec, 1, 2, MultiIndex{0, 0}).empty());
  }
}

TEST_CASE("kappa.D a* agrees with the truncated-series oracle") {
  std::vector<KappaSpec> specs;
  specs.push_back(kappa_point_at_zero(1, {Rat(2), Rat(-3)}));
  KappaSpec mixed;
  mixed.N = 1;
  mixed.set(MultiIndex{1, 1}, 0, Rat(1));
  mixed.set(MultiIndex{1, 1}, 1, Rat(-1));
  mixed.set(MultiIndex{0, 0}, 0, Rat(5));
  mixed.set(MultiIndex{2, -1}, 0, rat(1, 2));
  mixed.set(MultiIndex{2, -1}, 1, Rat(1));
  specs.push_back(mixed);

  const long trunc = 4;
  for (const auto& spec : specs) {
    Series oracle = oracle_kappa_d_astar(spec, trunc);
    for (const auto& m : mode_box(2, 1)) {
      auto modes = kappaD_astar_modes(spec, 1, 2, m);
      std::map<MultiIndex, Rat> got;
      for (const auto& [c, op] : modes) got[op.mode] = c;
      // oracle coefficient of w^{-m}
      std::map<MultiIndex, Rat> want;
      auto it = oracle.find(-m);
      if (it != oracle.end()) want = it->second;
      CHECK(got == want);
    }
  }
}

TEST_CASE("bracket with kappa.D a* matches Lemma (c) via the oracle") {
  KappaSpec mixed;
  mixed.N = 1;
  mixed.set(MultiIndex{0, 0}, 0, Rat(5));
  mixed.set(MultiIndex{1, -1}, 0, Rat(1));
  mixed.set(MultiIndex{1, -1}, 1, Rat(1));
  Series oracle = oracle_kappa_d_astar(mixed, 4);
  for (const auto& m : mode_box(2, 1)) {
    for (const auto& n : mode_box(2, 1)) {
      // [a(m), kappa.D a*(n)] = coefficient of a*_{-m} in the n-th mode,
      // predicted by the lemma as sum_p m_p kappa_{-m-n,p}
      Rat from_series(0);
      auto it = oracle.find(-n);
      if (it != oracle.end()) {
        auto jt = it->second.find(-m);
        if (jt != it->second.end()) from_series = jt->second;
      }
      Rat lemma(0);
      for (int p = 0; p <= 1; ++p)
        lemma += Rat(m[std::size_t(p)]) * mixed.value(-m - n, p);
      CHECK(from_series == lemma);
    }
  }
}

TEST_CASE("summable application basics") {
  OpContext ctx = ctx2(kappa_point_at_zero(1, {Rat(1), Rat(-1)}));
  MultiIndex m{1, 0}, q{0, 1};

  // mode-m of a_{12}(z)a*_{12}(z) on x_{12}(q) -> -x_{12}(m+q)
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::a(1, 2), SeriesFactor::a_star(1, 2)}, m);
  FockVector x = FockVector::variable(VarKey::x(1, 2, q));
  CHECK(apply_summable(op, x, ctx) ==
        FockVector::variable(VarKey::x(1, 2, m + q)) * Rat(-1));

  // pure-Astar terms kill constants
  SummableOperator astars;
  astars.add(Rat(1), {SeriesFactor::a_star(1, 2), SeriesFactor::a_star(1, 3)},
             m);
  CHECK(apply_summable(astars, FockVector::constant(Rat(1)), ctx).is_zero());

  // forced double contraction: a*_{ij,s} = d/dx_{ij}(-s) pins s = -q, so
  // the term survives exactly at total mode -(q1+q2)
  MultiIndex q1{1, -1}, q2{0, 1};
  FockVector v = FockVector::variable(VarKey::x(1, 2, q1))
                     .mul_var(VarKey::x(1, 3, q2));
  SummableOperator pair;
  pair.add(Rat(1), {SeriesFactor::a_star(1, 2), SeriesFactor::a_star(1, 3)},
           -(q1 + q2));
  CHECK(apply_summable(pair, v, ctx) == FockVector::constant(Rat(1)));
  SummableOperator off;
  off.add(Rat(1), {SeriesFactor::a_star(1, 2), SeriesFactor::a_star(1, 3)},
          -(q1 + q2) + MultiIndex{1, 0});
  CHECK(apply_summable(off, v, ctx).is_zero());
}

TEST_CASE("term construction contract") {
  SummableOperator bad;
  CHECK_THROWS_AS(
      bad.add(Rat(1), {SeriesFactor::a_star(1, 2), SeriesFactor::a(1, 2)},
              MultiIndex{0, 0}),
      std::logic_error);
  CHECK_THROWS_AS(
      bad.add(Rat(1), {SeriesFactor::a(1, 2), SeriesFactor::phi_b(1)},
              MultiIndex{0, 0}),
      std::logic_error);
}

TEST_CASE("commutators and Lemma (a)/(b) sweeps") {
  OpContext ctx = ctx2(kappa_point_at_zero(1, {Rat(1), Rat(-1)}));
  FockVector x0 = FockVector::variable(VarKey::x(1, 2, MultiIndex{0, 0}));
  MultiIndex m{1, 0};

  CHECK(commutator_apply(op_a(1, 2, m), op_a_star(1, 2, -m), x0, ctx) == x0);
  CHECK(commutator_apply(op_a(1, 2, m), op_a_star(1, 3, -m), x0, ctx)
            .is_zero());
  CHECK(commutator_apply(op_a(1, 2, m), op_a(1, 2, m), x0, ctx).is_zero());

  RandomVectorConfig rc;
  rc.n = 2;
  rc.N = 1;
  rc.scheme = ctx.scheme;
  rc.box_radius = 1;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    rc.seed = seed;
    FockVector v = random_vector(rc);
    for (const auto& mm : mode_box(2, 1)) {
      for (const auto& nn : mode_box(2, 1)) {
        // (a)
        FockVector br =
            commutator_apply(op_a(1, 2, mm), op_a_star(1, 2, nn), v, ctx);
        CHECK(br == ((mm + nn).is_zero() ? v : FockVector::zero()));
        // (b)
        SummableOperator q1, q2;
        q1.add(Rat(1), {SeriesFactor::a(1, 3), SeriesFactor::a_star(1, 3)},
               mm);
        q2.add(Rat(1), {SeriesFactor::a(1, 3), SeriesFactor::a_star(1, 3)},
               nn);
        CHECK(commutator_apply(q1, q2, v, ctx).is_zero());
      }
    }
  }
}

TEST_CASE("linearity of application") {
  OpContext ctx = ctx2(kappa_point_at_zero(1, {Rat(1), Rat(-1)}),
                       {Rat(1), rat(1, 2), Rat(-2)});
  SummableOperator op;
  op.add(Rat(1), {SeriesFactor::a_star(1, 2), SeriesFactor::phi_b(1)},
         MultiIndex{1, 0});
  op.add(Rat(-2), {SeriesFactor::a(1, 3), SeriesFactor::a_star(2, 3)},
         MultiIndex{0, -1});
  RandomVectorConfig rc;
  rc.n = 2;
  rc.N = 1;
  rc.scheme = ctx.scheme;
  rc.box_radius = 1;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    rc.seed = 2 * seed;
    FockVector v = random_vector(rc);
    rc.seed = 2 * seed + 1;
    FockVector w = random_vector(rc);
    CHECK(apply_summable(op, v + w * rat(3, 7), ctx) ==
          apply_summable(op, v, ctx) + apply_summable(op, w, ctx) * rat(3, 7));
  }
}

TEST_CASE("Heisenberg field modes on simple vectors") {
  std::vector<Rat> lambda = {Rat(0), rat(1, 2), Rat(3)};
  KappaSpec spec = kappa_point_at_zero(1, {Rat(1), Rat(-1)});
  OpContext ctx = ctx2(spec, lambda);
  FockVector one = FockVector::constant(Rat(1));

  // zero mode on the vacuum: -lambda_i
  for (int i = 1; i <= 2; ++i)
    CHECK(apply_phi_b_fixed(ctx, i, MultiIndex{0, 0}, one) ==
          one * (-lambda[std::size_t(i)]));

  // negative mode creates y_i(-m)
  MultiIndex neg{-1, 0};
  CHECK(apply_phi_b_fixed(ctx, 1, neg, one) ==
        FockVector::variable(VarKey::y(1, MultiIndex{1, 0})));

  // positive mode against y_1(m): only s = m survives; the y_0 term
  // vanishes, giving -2 * (sum_p m_p c_p)
  MultiIndex m{1, 0};
  FockVector y1 = FockVector::variable(VarKey::y(1, m));
  Rat scalar = Rat(-2) * (Rat(m[0]) * Rat(1) + Rat(m[1]) * Rat(-1));
  CHECK(apply_phi_b_fixed(ctx, 1, m, y1) == one * scalar);

  // b_0 is the negated sum
  FockVector sum;
  for (int i = 1; i <= 2; ++i)
    sum = sum + apply_phi_b_fixed(ctx, i, MultiIndex{0, 0}, one);
  CHECK(apply_phi_b_fixed(ctx, 0, MultiIndex{0, 0}, one) == sum * Rat(-1));
}

TEST_CASE("mode operators shift the grading by -m") {
  KappaSpec spec = kappa_point_at_zero(1, {Rat(1), Rat(-1)});
  OpContext ctx = ctx2(spec, {Rat(1), Rat(2), Rat(3)});
  RandomVectorConfig rc;
  rc.n = 2;
  rc.N = 1;
  rc.scheme = ctx.scheme;
  rc.box_radius = 1;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    rc.seed = seed;
    FockVector v = random_homogeneous_vector(rc);
    auto dv = degree(v, 2);
    REQUIRE(dv.has_value());
    for (const auto& m : mode_box(2, 1)) {
      SummableOperator op;
      op.add(Rat(1), {SeriesFactor::a(1, 2), SeriesFactor::a_star(1, 2)}, m);
      op.add(Rat(2), {SeriesFactor::a_star(1, 2), SeriesFactor::phi_b(1)}, m);
      op.add(Rat(1), {SeriesFactor::kappa_d_a_star(1, 2)}, m);
      FockVector out = apply_summable(op, v, ctx);
      if (out.is_zero()) continue;
      auto dout = degree(out, 2);
      REQUIRE(dout.has_value());
      CHECK(*dout == *dv - m);
    }
  }
}
