#ifndef TORFOCK_KAPPA_HPP
#define TORFOCK_KAPPA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torfock/lattice.hpp"
#include "torfock/rational.hpp"

namespace torfock {

// Finitely supported central cocycle data kappa_{m,p}, 0 <= p <= N.
struct KappaSpec {
  int N = 0;
  std::map<std::pair<MultiIndex, int>, Rat> entries;

  Rat value(const MultiIndex& m, int p) const;
  void set(const MultiIndex& m, int p, const Rat& v);
  // Distinct support points m.
  std::vector<MultiIndex> support() const;
  bool operator==(const KappaSpec&) const = default;
};

struct KappaViolation {
  std::string condition;  // "eqn1" or "eqn2"
  MultiIndex r;           // support point
  MultiIndex m, n;        // decomposition witness (eqn2 only)
  Rat value;
  std::string str() const;
};

struct KappaReport {
  bool pass = true;
  std::vector<KappaViolation> violations;
  // Per support point subject to the second condition: "span" when the
  // decomposition set affinely spans and kappa_{r,.} = 0 was required,
  // "enumeration" otherwise.
  std::vector<std::pair<MultiIndex, std::string>> criteria;
};

// Checks sum_p m_p kappa_{m,p} = 0 at every support point, and for support
// points r with -r = m + n (m, n > 0): if the set of such m within the box
// affinely spans, kappa_{r,p} must vanish identically; otherwise
// sum_p m_p kappa_{r,p} = 0 for every decomposition found in the box.
KappaReport validate_kappa(const KappaSpec& spec, const OrderScheme& scheme,
                           long box_radius);

// K_{m,l} acts as left multiplication by -kappa_{-m,l}.
Rat central_scalar(const KappaSpec& spec, const MultiIndex& m, int l);

// Valid-by-construction families.
// point-at-zero: support {0} with values c_p (any values).
KappaSpec kappa_point_at_zero(int N, const std::vector<Rat>& c);
// positive-cone: support at the given strictly positive points; each point's
// values must satisfy sum_p m_p c_p = 0 (throws otherwise).
KappaSpec kappa_positive_cone(
    int N, const OrderScheme& scheme,
    const std::vector<std::pair<MultiIndex, std::vector<Rat>>>& points);

}  // namespace torfock

#endif
