#include "torfock/fock.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace torfock {

VarKey VarKey::x(int i, int j, MultiIndex m) {
  if (!(1 <= i && i < j))
    throw std::invalid_argument("VarKey::x: need 1 <= i < j");
  return VarKey{X, i, j, std::move(m)};
}

VarKey VarKey::y(int i, MultiIndex k) {
  if (i < 1) throw std::invalid_argument("VarKey::y: need i >= 1");
  return VarKey{Y, i, 0, std::move(k)};
}

std::string VarKey::str() const {
  std::ostringstream os;
  if (kind == X)
    os << "x[" << i << ',' << j << ']' << mode.str();
  else
    os << "y[" << i << ']' << mode.str();
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m) {
    if (!first) os << '*';
    first = false;
    os << k.str();
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

FockVector FockVector::constant(const Rat& c) {
  FockVector v;
  v.add_term({}, c);
  return v;
}

FockVector FockVector::variable(const VarKey& k) {
  FockVector v;
  v.add_term({{k, 1}}, Rat(1));
  return v;
}

void FockVector::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

FockVector FockVector::operator*(const Rat& c) const {
  FockVector r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

FockVector FockVector::mul_var(const VarKey& k) const {
  FockVector r;
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    auto pos = std::lower_bound(
        m2.begin(), m2.end(), k,
        [](const std::pair<VarKey, int>& a, const VarKey& b) {
          return a.first < b;
        });
    if (pos != m2.end() && pos->first == k)
      pos->second += 1;
    else
      m2.insert(pos, {k, 1});
    r.add_term(m2, c);
  }
  return r;
}

FockVector FockVector::derive(const VarKey& k) const {
  FockVector r;
  for (const auto& [m, c] : terms_) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m[t].first == k) {
        Monomial m2 = m;
        int e = m2[t].second;
        if (e == 1)
          m2.erase(m2.begin() + long(t));
        else
          m2[t].second = e - 1;
        r.add_term(m2, c * Rat(e));
        break;
      }
    }
  }
  return r;
}

std::vector<MultiIndex> FockVector::x_modes(int i, int j) const {
  std::vector<MultiIndex> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [k, e] : m)
      if (k.kind == VarKey::X && k.i == i && k.j == j) out.push_back(k.mode);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiIndex> FockVector::y_modes(int i) const {
  std::vector<MultiIndex> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [k, e] : m)
      if (k.kind == VarKey::Y && k.i == i) out.push_back(k.mode);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (!m.empty()) os << '*' << monomial_str(m);
  }
  return os.str();
}

std::optional<MultiIndex> degree(const FockVector& v, std::size_t dim) {
  std::optional<MultiIndex> deg;
  for (const auto& [m, c] : v.terms()) {
    MultiIndex d(dim);
    for (const auto& [k, e] : m) {
      for (int t = 0; t < e; ++t) d += (k.kind == VarKey::X) ? -k.mode : k.mode;
    }
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  if (!deg) deg = MultiIndex(dim);  // zero vector
  return deg;
}

namespace {

MultiIndex random_mode(std::mt19937_64& rng, int N, long radius) {
  MultiIndex m(std::size_t(N + 1));
  std::uniform_int_distribution<long> d(-radius, radius);
  for (auto& c : m.c) c = d(rng);
  return m;
}

Rat random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  long p = num(rng);
  if (p == 0) p = 1;
  return rat(p, den(rng));
}

Monomial random_monomial(std::mt19937_64& rng, const RandomVectorConfig& cfg,
                         int nfactors) {
  FockVector v = FockVector::constant(Rat(1));
  for (int f = 0; f < nfactors; ++f) {
    std::uniform_int_distribution<int> kind(0, 1);
    VarKey key;
    if (kind(rng) == 0) {
      std::uniform_int_distribution<int> di(1, cfg.n);
      int i = di(rng);
      std::uniform_int_distribution<int> dj(i + 1, cfg.n + 1);
      key = VarKey::x(i, dj(rng), random_mode(rng, cfg.N, cfg.box_radius));
    } else {
      std::uniform_int_distribution<int> di(1, cfg.n);
      int i = di(rng);
      MultiIndex k;
      do {
        k = random_mode(rng, cfg.N, cfg.box_radius);
      } while (theta(k, cfg.scheme) != 1);
      key = VarKey::y(i, k);
    }
    std::uniform_int_distribution<int> de(1, cfg.max_exponent);
    int e = de(rng);
    for (int t = 0; t < e; ++t) v = v.mul_var(key);
  }
  return v.terms().begin()->first;
}

}  // namespace

FockVector random_vector(const RandomVectorConfig& cfg) {
  if (cfg.box_radius < 1)
    throw std::invalid_argument("random_vector: box radius must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> nm(1, cfg.max_monomials);
  std::uniform_int_distribution<int> nf(0, cfg.max_factors);
  FockVector v;
  int count = nm(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m = random_monomial(rng, cfg, nf(rng));
    v.add_term(m, random_coeff(rng));
  }
  if (v.is_zero()) v = FockVector::constant(Rat(1));
  return v;
}

FockVector random_homogeneous_vector(const RandomVectorConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> nf(1, cfg.max_factors);
  Monomial m = random_monomial(rng, cfg, nf(rng));
  FockVector v;
  v.add_term(m, random_coeff(rng));
  return v;
}

}  // namespace torfock
