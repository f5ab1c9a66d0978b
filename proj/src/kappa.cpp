#include "torfock/kappa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torfock {

Rat KappaSpec::value(const MultiIndex& m, int p) const {
  if (p < 0 || p > N) throw std::out_of_range("KappaSpec: p out of range");
  auto it = entries.find({m, p});
  return it == entries.end() ? Rat(0) : it->second;
}

void KappaSpec::set(const MultiIndex& m, int p, const Rat& v) {
  if (p < 0 || p > N) throw std::out_of_range("KappaSpec: p out of range");
  if (int(m.dim()) != N + 1)
    throw std::invalid_argument("KappaSpec: mode dimension != N+1");
  if (v == 0)
    entries.erase({m, p});
  else
    entries[{m, p}] = v;
}

std::vector<MultiIndex> KappaSpec::support() const {
  std::vector<MultiIndex> out;
  for (const auto& [key, v] : entries) out.push_back(key.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string KappaViolation::str() const {
  std::ostringstream os;
  os << condition << " at r=" << r.str();
  if (condition == "eqn2") os << " m=" << m.str() << " n=" << n.str();
  os << " value=" << rat_str(value);
  return os.str();
}

namespace {

// Rank of the affine span of `pts` (dimension of span{p - p0}).
std::size_t affine_rank(const std::vector<MultiIndex>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t t = 1; t < pts.size(); ++t) {
    std::vector<Rat> row;
    for (std::size_t i = 0; i < pts[0].dim(); ++i)
      row.push_back(Rat(pts[t][i] - pts[0][i]));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0, cols = pts[0].dim();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t t = rank + 1; t < rows.size(); ++t) {
      if (rows[t][col] == 0) continue;
      Rat f = rows[t][col] / rows[rank][col];
      for (std::size_t c2 = col; c2 < cols; ++c2)
        rows[t][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

KappaReport validate_kappa(const KappaSpec& spec, const OrderScheme& scheme,
                           long box_radius) {
  if (int(scheme.dim()) != spec.N + 1)
    throw std::invalid_argument("validate_kappa: scheme dimension mismatch");
  KappaReport rep;
  auto supp = spec.support();

  for (const auto& m : supp) {
    Rat s(0);
    for (int p = 0; p <= spec.N; ++p) s += Rat(m[p]) * spec.value(m, p);
    if (s != 0) {
      rep.pass = false;
      rep.violations.push_back({"eqn1", m, {}, {}, s});
    }
  }

  auto box = mode_box(std::size_t(spec.N + 1), box_radius);
  for (const auto& r : supp) {
    // decompositions -r = m + n with m, n > 0 and m in the box
    std::vector<MultiIndex> decomps;
    MultiIndex target = -r;
    if (theta(target, scheme) == 1) {
      for (const auto& m : box) {
        MultiIndex n = target - m;
        if (theta(m, scheme) == 1 && theta(n, scheme) == 1)
          decomps.push_back(m);
      }
    }
    if (decomps.empty()) continue;
    if (affine_rank(decomps) == std::size_t(spec.N + 1)) {
      rep.criteria.emplace_back(r, "span");
      for (int p = 0; p <= spec.N; ++p) {
        Rat v = spec.value(r, p);
        if (v != 0) {
          rep.pass = false;
          rep.violations.push_back({"eqn2", r, {}, {}, v});
        }
      }
    } else {
      rep.criteria.emplace_back(r, "enumeration");
      for (const auto& m : decomps) {
        Rat s(0);
        for (int p = 0; p <= spec.N; ++p) s += Rat(m[p]) * spec.value(r, p);
        if (s != 0) {
          rep.pass = false;
          rep.violations.push_back({"eqn2", r, m, target - m, s});
        }
      }
    }
  }
  return rep;
}

Rat central_scalar(const KappaSpec& spec, const MultiIndex& m, int l) {
  return -spec.value(-m, l);
}

KappaSpec kappa_point_at_zero(int N, const std::vector<Rat>& c) {
  if (int(c.size()) != N + 1)
    throw std::invalid_argument("kappa_point_at_zero: need N+1 values");
  KappaSpec spec;
  spec.N = N;
  MultiIndex zero(std::size_t(N + 1));
  for (int p = 0; p <= N; ++p) spec.set(zero, p, c[std::size_t(p)]);
  return spec;
}

KappaSpec kappa_positive_cone(
    int N, const OrderScheme& scheme,
    const std::vector<std::pair<MultiIndex, std::vector<Rat>>>& points) {
  KappaSpec spec;
  spec.N = N;
  for (const auto& [m, c] : points) {
    if (int(c.size()) != N + 1)
      throw std::invalid_argument("kappa_positive_cone: need N+1 values");
    if (theta(m, scheme) != 1)
      throw std::invalid_argument(
          "kappa_positive_cone: support point not positive");
    Rat s(0);
    for (int p = 0; p <= N; ++p) s += Rat(m[p]) * c[std::size_t(p)];
    if (s != 0)
      throw std::invalid_argument(
          "kappa_positive_cone: values violate sum_p m_p c_p = 0");
    for (int p = 0; p <= N; ++p) spec.set(m, p, c[std::size_t(p)]);
  }
  return spec;
}

}  // namespace torfock
