#pragma once

#include <cstdint>
#include <random>

#include "grassmann/hasse_schmidt.hpp"

namespace grassmann {

// Seed of trial `index` in a run seeded with `seed`. Trials are independent
// of each other and of execution order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Draws small exact instances:
//   int, rat      uniform in {-3..3}
//   nat, bool     uniform in {0, 1}
//   maxplus       -inf with probability 1/8, else uniform in {-5..5}
class InstanceGenerator {
 public:
  InstanceGenerator(DomainKind kind, std::uint64_t seed) : kind_(kind), engine_(seed) {}

  DomainKind kind() const { return kind_; }
  std::mt19937_64& engine() { return engine_; }

  int uniform(int lo, int hi);

  Scalar scalar();
  // A nonzero scalar; falls back to one after a few rejected draws.
  Scalar nonzero_scalar();
  Endomorphism endomorphism(int n);
  Word word(int n, int degree);
  // 1..max_terms distinct words of the given degree with random nonzero
  // coefficients; degree >= 2 coefficients also get a random neg slot.
  MultiVector homogeneous(int n, int degree, int max_terms = 3);

 private:
  DomainKind kind_;
  std::mt19937_64 engine_;
};

}  // namespace grassmann
