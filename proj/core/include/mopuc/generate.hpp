#pragma once

// Seeded random measure generation. Deterministic given the seed: angles are
// uniform on [-pi, pi), weights are Gram matrices of Gaussian draws plus a
// small ridge, scaled by the atom count.

#include <cstdint>

#include "mopuc/measures.hpp"

namespace mopuc {

struct GeneratorConfig {
    Index p = 2;
    int atoms = 4;
    bool symmetric = false;
    std::uint64_t seed = 0;
    double ridge = 1e-3;
};

CircleMeasure random_circle_measure(const GeneratorConfig& cfg, const Tolerances& tol = {});

/// Random interval measure: abscissas uniform in (-1, 1), same weight model.
IntervalMeasure random_interval_measure(const GeneratorConfig& cfg, const Tolerances& tol = {});

}  // namespace mopuc
