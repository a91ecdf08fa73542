#pragma once

// Theorem suites: each instance produces a TrialResult whose report is
//   {"theorem", "instance", "holds", "residual", "trunc", "seed"}.

#include <cstdint>
#include <string_view>
#include <vector>

#include "grassmann/random_instances.hpp"
#include "grassmann/trials.hpp"

namespace grassmann {

enum class Theorem { Leibniz, QuasiInverse, Prech, CayleyHamilton };

std::string_view theorem_name(Theorem t);

// Single instances on a given endomorphism. `instance` is merged into the
// report's instance object (trial index, trial seed, ...).
TrialResult verify_leibniz(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc,
                           std::uint64_t seed, Json instance = Json::object());
TrialResult verify_quasi_inverse(const Endomorphism& f, const MultiVector& x, int trunc, std::uint64_t seed,
                                 Json instance = Json::object());
TrialResult verify_prech(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc,
                         std::uint64_t seed, Json instance = Json::object());
// Eigenvalue-pair relation, every basis split (u, v) with deg u >= 1 and
// deg u + deg v = n, and the corollary form on every basis word of degree
// >= 2.
TrialResult verify_cayley_hamilton(const Endomorphism& f, int trunc, std::uint64_t seed,
                                   Json instance = Json::object());

// Random instance of the theorem: fresh f (and u, v, x) drawn from
// trial_seed. trunc is raised to the theorem's minimum when needed.
TrialResult random_trial(Theorem theorem, DomainKind kind, int n, int trunc, std::uint64_t run_seed,
                         std::size_t index, std::uint64_t trial_seed);

// Deterministic enumeration of basis instances on a fixed matrix.
std::vector<TrialResult> fixed_matrix_suite(Theorem theorem, const Endomorphism& f, int trunc, std::uint64_t seed);

}  // namespace grassmann
