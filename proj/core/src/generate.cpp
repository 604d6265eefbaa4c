#include "mopuc/generate.hpp"

#include <numbers>
#include <random>

namespace mopuc {

namespace {

HermitianMatrix random_weight(std::mt19937_64& rng, Index p, int atoms, double ridge) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    RMatrix x(p, p);
    for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < p; ++j) x(i, j) = gauss(rng);
    }
    const RMatrix w = (x * x.transpose() + ridge * RMatrix::Identity(p, p)) / atoms;
    return HermitianMatrix(w.cast<Complex>(), 1e-8);
}

}  // namespace

CircleMeasure random_circle_measure(const GeneratorConfig& cfg, const Tolerances& tol) {
    if (cfg.atoms < 1) throw InvalidInput("random_circle_measure: needs at least one atom");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<CircleAtom> atoms;
    atoms.reserve(static_cast<std::size_t>(cfg.atoms));
    for (int k = 0; k < cfg.atoms; ++k) {
        atoms.push_back({angle(rng), random_weight(rng, cfg.p, cfg.atoms, cfg.ridge)});
    }
    CircleMeasure mu(cfg.p, std::move(atoms), tol);
    return cfg.symmetric ? symmetrize(mu, tol) : mu;
}

IntervalMeasure random_interval_measure(const GeneratorConfig& cfg, const Tolerances& tol) {
    if (cfg.atoms < 1) throw InvalidInput("random_interval_measure: needs at least one atom");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> pos(-0.999, 0.999);
    std::vector<IntervalAtom> atoms;
    atoms.reserve(static_cast<std::size_t>(cfg.atoms));
    for (int k = 0; k < cfg.atoms; ++k) {
        atoms.push_back({pos(rng), random_weight(rng, cfg.p, cfg.atoms, cfg.ridge)});
    }
    return IntervalMeasure(cfg.p, std::move(atoms), tol);
}

}  // namespace mopuc
