#ifndef TORFOCK_VERIFY_HPP
#define TORFOCK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "torfock/realization.hpp"

namespace torfock {

struct CheckConfig {
  RealizationParams params;
  long box_radius = 1;
  int vectors = 10;  // test-vector pool size (vacuum + singles + randoms)
  std::uint64_t seed = 0;
  // Cost control: cap on sampled mode tuples per (check, generator pair);
  // the sample is deterministic, always contains (0,0) and m+n = 0 pairs.
  int mode_samples = 40;
  int vectors_per_instance = 2;
};

struct Failure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct CheckRecord {
  std::string id;
  long instances = 0;
  std::vector<Failure> failures;
  std::string note;
};

struct CheckReport {
  std::vector<CheckRecord> checks;
  bool pass() const;
  // Deterministic machine-readable serialization (JSON), including the
  // resolved configuration.
  std::string to_json(const CheckConfig& cfg) const;
};

enum class Relation { R0ii, R1, R2E, R2F, R3, S4iE, S4iF, S4ii, S4iii };

const char* relation_name(Relation r);

CheckReport check_heisenberg(const CheckConfig& cfg);
CheckReport check_relation(Relation rel, const CheckConfig& cfg);
CheckReport check_lemmas(const CheckConfig& cfg);
// Re-runs R3 and S4ii with the kappa.D term of rho(E_r) sign-flipped;
// passes iff the flipped build fails somewhere (suite non-vacuity).
CheckReport mutation_guard(const CheckConfig& cfg);
// Degree-shift check: with kappa supported at {0}, every generator mode
// rho(X)(m) maps homogeneous vectors of degree d into degree d - m (or 0).
CheckReport check_grading(const CheckConfig& cfg, int homogeneous_vectors);

// Deterministic pool: vacuum, single variables, seeded sparse randoms.
std::vector<FockVector> test_vector_pool(const CheckConfig& cfg);

}  // namespace torfock

#endif
