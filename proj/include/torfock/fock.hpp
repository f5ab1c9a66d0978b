#ifndef TORFOCK_FOCK_HPP
#define TORFOCK_FOCK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torfock/lattice.hpp"
#include "torfock/rational.hpp"

namespace torfock {

// A generator of C[x] (x_{ij}(m), 1 <= i < j <= n+1) or of C[y]
// (y_i(k), 1 <= i <= n, k > 0 under the active scheme).
struct VarKey {
  enum Kind : std::uint8_t { X = 0, Y = 1 };
  Kind kind;
  int i = 0;
  int j = 0;  // unused for Y
  MultiIndex mode;

  static VarKey x(int i, int j, MultiIndex m);
  static VarKey y(int i, MultiIndex k);

  auto operator<=>(const VarKey&) const = default;
  std::string str() const;
};

// Monomial: sorted (key, exponent) pairs, exponents > 0.
using Monomial = std::vector<std::pair<VarKey, int>>;

std::string monomial_str(const Monomial& m);

// Exact sparse polynomial in the x and y variables: the Fock space
// C[x] (x) C[y].  Immutable-style: all operations return new values.
class FockVector {
 public:
  FockVector() = default;
  static FockVector zero() { return {}; }
  static FockVector constant(const Rat& c);
  static FockVector variable(const VarKey& k);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const Rat& c) const;
  bool operator==(const FockVector&) const = default;

  // Multiplication by the variable `k`.
  FockVector mul_var(const VarKey& k) const;
  // Partial derivative with respect to the variable `k`.
  FockVector derive(const VarKey& k) const;

  // Modes m such that x_{ij}(m) occurs in some monomial.
  std::vector<MultiIndex> x_modes(int i, int j) const;
  // Modes k such that y_i(k) occurs in some monomial.
  std::vector<MultiIndex> y_modes(int i) const;

  void add_term(const Monomial& m, const Rat& c);

  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

// deg x_{ij}(q) = -q, deg y_i(k) = k; degree of a product is the sum.
// Returns the common degree of all monomials, or nullopt when inhomogeneous.
// The zero vector and constants have degree 0.
std::optional<MultiIndex> degree(const FockVector& v, std::size_t dim);

struct RandomVectorConfig {
  int n = 2;
  int N = 1;
  OrderScheme scheme;
  long box_radius = 1;
  int max_monomials = 3;
  int max_factors = 3;
  int max_exponent = 2;
  std::uint64_t seed = 0;
};

// Deterministic sparse test vector; every key mode lies in the box and
// Y modes are strictly positive under cfg.scheme.  Never zero.
FockVector random_vector(const RandomVectorConfig& cfg);

// Single random monomial with a coefficient: always homogeneous.
FockVector random_homogeneous_vector(const RandomVectorConfig& cfg);

}  // namespace torfock

#endif
