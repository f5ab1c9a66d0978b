#include "torfock/formalcalc.hpp"

#include <sstream>
#include <stdexcept>

namespace torfock {

Rat binom(long a, long k) {
  if (k < 0) return Rat(0);
  Rat num(1), den(1);
  for (long t = 0; t < k; ++t) {
    num *= Rat(a - t);
    den *= Rat(t + 1);
  }
  Rat r = num / den;
  r.canonicalize();
  return r;
}

LaurentPoly LaurentPoly::constant(std::size_t dim, const Rat& c) {
  return monomial(MultiIndex(dim), MultiIndex(dim), c);
}

LaurentPoly LaurentPoly::monomial(const MultiIndex& zexp,
                                  const MultiIndex& wexp, const Rat& c) {
  MultiIndex::check_dims(zexp, wexp);
  LaurentPoly p;
  p.add_term(zexp, wexp, c);
  return p;
}

LaurentPoly LaurentPoly::zmon(const MultiIndex& zexp, const Rat& c) {
  return monomial(zexp, MultiIndex(zexp.dim()), c);
}

LaurentPoly LaurentPoly::wmon(const MultiIndex& wexp, const Rat& c) {
  return monomial(MultiIndex(wexp.dim()), wexp, c);
}

std::size_t LaurentPoly::dim() const {
  return terms.empty() ? 0 : terms.begin()->first.first.dim();
}

bool LaurentPoly::z_free() const {
  for (const auto& [key, c] : terms)
    if (!key.first.is_zero()) return false;
  return true;
}

LaurentPoly& LaurentPoly::add_term(const MultiIndex& zexp,
                                   const MultiIndex& wexp, const Rat& c) {
  if (c == 0) return *this;
  if (!terms.empty()) MultiIndex::check_dims(terms.begin()->first.first, zexp);
  auto key = std::make_pair(zexp, wexp);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [key, c] : b.terms) r.add_term(key.first, key.second, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [key, c] : b.terms) r.add_term(key.first, key.second, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [key, k] : a.terms) r.add_term(key.first, key.second, c * k);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*z^" << key.first.str() << "*w^" << key.second.str();
  }
  return os.str();
}

LaurentPoly residue(const LaurentPoly& f, std::size_t i) {
  LaurentPoly r;
  for (const auto& [key, c] : f.terms) {
    if (i >= key.first.dim())
      throw std::out_of_range("residue: variable index out of range");
    if (key.first[i] == -1) {
      MultiIndex ze = key.first;
      ze[i] = 0;
      r.add_term(ze, key.second, c);
    }
  }
  return r;
}

DeltaExpr DeltaExpr::zero(std::size_t nvars) {
  DeltaExpr d;
  d.nvars = nvars;
  d.active.assign(nvars, true);
  return d;
}

DeltaExpr DeltaExpr::delta(std::size_t nvars) {
  return d_delta(MultiIndex(nvars));
}

DeltaExpr DeltaExpr::d_delta(const MultiIndex& order) {
  for (long v : order.c)
    if (v < 0) throw std::invalid_argument("d_delta: negative order");
  DeltaExpr d = zero(order.dim());
  d.parts.emplace(order, LaurentPoly::constant(order.dim(), Rat(1)));
  return d;
}

DeltaExpr& DeltaExpr::add_part(const MultiIndex& order,
                               const LaurentPoly& coeff) {
  if (order.dim() != nvars)
    throw std::invalid_argument("DeltaExpr: order dimension mismatch");
  for (std::size_t i = 0; i < nvars; ++i)
    if (!active[i] && order[i] != 0)
      throw std::invalid_argument("DeltaExpr: order on consumed variable");
  if (coeff.is_zero()) return *this;
  auto it = parts.find(order);
  if (it == parts.end()) {
    parts.emplace(order, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) parts.erase(it);
  }
  return *this;
}

bool DeltaExpr::is_canonical() const {
  for (const auto& [order, c] : parts)
    if (!c.z_free()) return false;
  return true;
}

DeltaExpr operator+(const DeltaExpr& a, const DeltaExpr& b) {
  if (a.nvars != b.nvars || a.active != b.active)
    throw std::invalid_argument("DeltaExpr: incompatible operands");
  DeltaExpr r = a;
  for (const auto& [order, c] : b.parts) r.add_part(order, c);
  return r;
}

DeltaExpr operator*(const Rat& c, const DeltaExpr& a) {
  DeltaExpr r = DeltaExpr::zero(a.nvars);
  r.active = a.active;
  for (const auto& [order, p] : a.parts) r.add_part(order, c * p);
  return r;
}

std::string DeltaExpr::str() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [order, c] : parts) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c.str() << "]*d^" << order.str() << "delta";
  }
  return os.str();
}

DeltaExpr multiply_into_delta(const LaurentPoly& f, const DeltaExpr& d) {
  DeltaExpr out = DeltaExpr::zero(d.nvars);
  out.active = d.active;
  for (const auto& [order, coeff] : d.parts) {
    LaurentPoly prod = f * coeff;
    for (const auto& [key, c] : prod.terms) {
      const MultiIndex& ze = key.first;
      const MultiIndex& we = key.second;
      if (ze.dim() != d.nvars)
        throw std::invalid_argument("multiply_into_delta: dimension mismatch");
      for (std::size_t i = 0; i < d.nvars; ++i)
        if (!d.active[i] && ze[i] != 0)
          throw std::invalid_argument(
              "multiply_into_delta: z-dependence on consumed variable");
      // Expand z^a d^(j) across variables:
      //   z_i^{a_i} d^(j_i) = sum_{j' <= j_i} C(a_i, j_i - j')
      //                       w_i^{a_i - j_i + j'} d^(j').
      std::vector<std::pair<MultiIndex, Rat>> partial = {
          {MultiIndex(d.nvars), c}};
      for (std::size_t i = 0; i < d.nvars; ++i) {
        std::vector<std::pair<MultiIndex, Rat>> next;
        for (long jp = 0; jp <= order[i]; ++jp) {
          Rat b = binom(ze[i], order[i] - jp);
          if (b == 0) continue;
          for (const auto& [jacc, cacc] : partial) {
            MultiIndex j2 = jacc;
            j2[i] = jp;
            next.emplace_back(j2, cacc * b);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [j2, c2] : partial) {
        MultiIndex wshift = we;
        for (std::size_t i = 0; i < d.nvars; ++i)
          wshift[i] += ze[i] - order[i] + j2[i];
        out.add_part(j2, LaurentPoly::wmon(wshift, c2));
      }
    }
  }
  return out;
}

DeltaExpr residue(const DeltaExpr& d, std::size_t i) {
  if (i >= d.nvars) throw std::out_of_range("residue: variable out of range");
  if (!d.active[i])
    throw std::invalid_argument("residue: delta already consumed in variable");
  DeltaExpr out = DeltaExpr::zero(d.nvars);
  out.active = d.active;
  out.active[i] = false;
  for (const auto& [order, coeff] : d.parts) {
    if (order[i] != 0) continue;  // Res_z d^(j) delta = 0 for j > 0
    // Res_z delta(z/w) = w
    LaurentPoly wi = LaurentPoly::wmon(MultiIndex::unit(d.nvars, i));
    out.add_part(order, wi * coeff);
  }
  return out;
}

DeltaExpr eval_w_one(const DeltaExpr& d) {
  DeltaExpr out = DeltaExpr::zero(d.nvars);
  out.active = d.active;
  for (const auto& [order, coeff] : d.parts) {
    LaurentPoly c2;
    for (const auto& [key, c] : coeff.terms)
      c2.add_term(key.first, MultiIndex(d.nvars), c);
    out.add_part(order, c2);
  }
  return out;
}

LambdaPoly fourier_lambda(const DeltaExpr& d) {
  if (!d.is_canonical())
    throw std::invalid_argument("fourier_lambda: input not in canonical form");
  LambdaPoly out;
  for (const auto& [order, coeff] : d.parts) {
    Rat inv_fact(1);
    for (long ji : order.c)
      for (long t = 2; t <= ji; ++t) inv_fact /= Rat(t);
    LaurentPoly c2 = inv_fact * coeff;
    if (!c2.is_zero()) out.terms.emplace(order, c2);
  }
  return out;
}

std::string LambdaPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [order, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c.str() << "]*lambda^" << order.str();
  }
  return os.str();
}

}  // namespace torfock
