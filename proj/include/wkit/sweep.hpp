#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "wkit/vector.hpp"

namespace wkit {

/// Randomized verification of the vector identity.
///
/// Sample i is a pure function of (seed, i): components uniform in
/// [−10, 10], dimension 2 + i mod 7, and every 100th sample a near-collinear
/// stress pair v = λu + ε·noise with ε alternating between 1e-6 and 1e-9.
/// Results are max-reductions, so the worker count never changes them.
struct SweepConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    double tol = 1e-9;
    unsigned jobs = 1;
};

struct SweepSummary {
    std::size_t count = 0;
    std::size_t stress_pairs = 0;
    double max_residual = 0.0;        // max |lhs − 2√3·u∧v − defect_explicit| / max(1, lhs)
    double max_oracle_gap = 0.0;      // max |defect_intrinsic − defect_explicit| / max(1, lhs)
    double max_negative_defect = 0.0; // max of −defect_intrinsic / max(1, lhs), clamped at 0
    std::size_t failures = 0;
    bool pass = false;
};

/// Exact sweep over planar rational pairs.
struct ExactSweepSummary {
    std::size_t count = 0;
    std::size_t nonzero = 0;
    bool pass = false;
};

std::pair<Vector, Vector> sweep_pair(std::uint64_t seed, std::size_t index);

/// Numerators in [−bound, bound], denominators in [1, bound].
std::pair<RationalVector, RationalVector> exact_pair(std::uint64_t seed, std::size_t index,
                                                     long bound = 1'000'000);

SweepSummary run_sweep(const SweepConfig& cfg);

ExactSweepSummary run_exact_sweep(const SweepConfig& cfg, long bound = 1'000'000);

} // namespace wkit
