#include "mopuc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mopuc {

namespace {

constexpr double kMergeTol = 1e-12;  // atoms closer than this are merged
constexpr double kPi = std::numbers::pi;

double normalize_angle(double theta) {
    if (!std::isfinite(theta)) throw InvalidInput("atom angle must be finite");
    double t = std::remainder(theta, 2.0 * kPi);
    if (t >= kPi) t -= 2.0 * kPi;
    return t;
}

/// Validate a weight as real symmetric PSD and return its cleaned-up form.
HermitianMatrix clean_weight(const HermitianMatrix& w, Index p, const Tolerances& tol) {
    if (w.dim() != p) throw DimensionMismatch("measure weight has wrong dimension");
    const double scale = std::max(1.0, max_abs(w.mat()));
    if (w.mat().imag().cwiseAbs().maxCoeff() > tol.hermitian * scale) {
        throw InvalidInput("measure weight must be a real symmetric matrix");
    }
    const RMatrix re = 0.5 * (w.mat().real() + w.mat().real().transpose());
    HermitianMatrix cleaned(re.cast<Complex>(), tol.hermitian);
    if (psd_classify(cleaned, tol).cls == PsdClass::Indefinite) {
        throw InvalidInput("measure weight must be positive semidefinite");
    }
    return cleaned;
}

HermitianMatrix add_weights(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.mat() + b.mat(), 1e-8);
}

}  // namespace

CircleMeasure::CircleMeasure(Index p, std::vector<CircleAtom> atoms, const Tolerances& tol)
    : p_(p) {
    if (p_ <= 0) throw InvalidInput("CircleMeasure: dimension must be positive");
    std::vector<CircleAtom> cleaned;
    cleaned.reserve(atoms.size());
    for (CircleAtom& a : atoms) {
        HermitianMatrix w = clean_weight(a.weight, p_, tol);
        if (max_abs(w.mat()) == 0.0) continue;  // zero atoms contribute nothing
        cleaned.push_back({normalize_angle(a.theta), std::move(w)});
    }
    if (cleaned.empty()) throw InvalidInput("CircleMeasure: needs at least one nonzero atom");
    std::sort(cleaned.begin(), cleaned.end(),
              [](const CircleAtom& a, const CircleAtom& b) { return a.theta < b.theta; });
    for (CircleAtom& a : cleaned) {
        if (!atoms_.empty() && a.theta - atoms_.back().theta < kMergeTol) {
            atoms_.back().weight = add_weights(atoms_.back().weight, a.weight);
        } else {
            atoms_.push_back(std::move(a));
        }
    }
    // wrap-around: -pi and pi-eps are the same point of the circle
    if (atoms_.size() > 1 && (atoms_.front().theta + 2.0 * kPi) - atoms_.back().theta < kMergeTol) {
        atoms_.front().weight = add_weights(atoms_.front().weight, atoms_.back().weight);
        atoms_.pop_back();
    }
}

IntervalMeasure::IntervalMeasure(Index p, std::vector<IntervalAtom> atoms, const Tolerances& tol)
    : p_(p) {
    if (p_ <= 0) throw InvalidInput("IntervalMeasure: dimension must be positive");
    std::vector<IntervalAtom> cleaned;
    cleaned.reserve(atoms.size());
    for (IntervalAtom& a : atoms) {
        if (!std::isfinite(a.x) || std::abs(a.x) > 1.0 + kMergeTol) {
            throw InvalidInput("IntervalMeasure: abscissa outside [-1, 1]");
        }
        HermitianMatrix w = clean_weight(a.weight, p_, tol);
        if (max_abs(w.mat()) == 0.0) continue;
        cleaned.push_back({std::clamp(a.x, -1.0, 1.0), std::move(w)});
    }
    if (cleaned.empty()) throw InvalidInput("IntervalMeasure: needs at least one nonzero atom");
    std::sort(cleaned.begin(), cleaned.end(),
              [](const IntervalAtom& a, const IntervalAtom& b) { return a.x < b.x; });
    for (IntervalAtom& a : cleaned) {
        if (!atoms_.empty() && a.x - atoms_.back().x < kMergeTol) {
            atoms_.back().weight = add_weights(atoms_.back().weight, a.weight);
        } else {
            atoms_.push_back(std::move(a));
        }
    }
}

MomentSequence::MomentSequence(Index p, std::vector<CMatrix> gammas, const Tolerances& tol)
    : p_(p), gammas_(std::move(gammas)) {
    if (p_ <= 0) throw InvalidInput("MomentSequence: dimension must be positive");
    if (gammas_.empty()) throw InvalidInput("MomentSequence: needs at least gamma_0");
    for (const CMatrix& g : gammas_) {
        if (g.rows() != p_ || g.cols() != p_) {
            throw DimensionMismatch("MomentSequence: moment shape mismatch");
        }
        require_finite(g, "MomentSequence");
    }
    HermitianMatrix g0(gammas_.front(), tol.hermitian);
    if (psd_classify(g0, tol).cls == PsdClass::Indefinite) {
        throw InvalidInput("MomentSequence: gamma_0 must be PSD");
    }
    gammas_.front() = g0.mat();
}

CMatrix MomentSequence::gamma(int k) const {
    const int a = std::abs(k);
    if (a > max_order()) throw InsufficientData("MomentSequence: order out of range");
    const CMatrix& g = gammas_[static_cast<std::size_t>(a)];
    return k >= 0 ? g : CMatrix(g.adjoint());
}

IntervalMomentSequence::IntervalMomentSequence(Index p, std::vector<CMatrix> moments,
                                               const Tolerances& tol)
    : p_(p), s_(std::move(moments)) {
    if (p_ <= 0) throw InvalidInput("IntervalMomentSequence: dimension must be positive");
    if (s_.empty()) throw InvalidInput("IntervalMomentSequence: needs at least S_0");
    for (CMatrix& m : s_) {
        if (m.rows() != p_ || m.cols() != p_) {
            throw DimensionMismatch("IntervalMomentSequence: moment shape mismatch");
        }
        require_finite(m, "IntervalMomentSequence");
        const double scale = std::max(1.0, max_abs(m));
        if (m.imag().cwiseAbs().maxCoeff() > tol.hermitian * scale ||
            max_abs(m - m.transpose()) > tol.hermitian * scale) {
            throw InvalidInput("IntervalMomentSequence: moments must be real symmetric");
        }
        const RMatrix re = 0.5 * (m.real() + m.real().transpose());
        m = re.cast<Complex>();
    }
    if (psd_classify(HermitianMatrix(s_.front(), tol.hermitian), tol).cls == PsdClass::Indefinite) {
        throw InvalidInput("IntervalMomentSequence: S_0 must be PSD");
    }
}

const CMatrix& IntervalMomentSequence::s(int k) const {
    if (k < 0 || k > max_order()) throw InsufficientData("IntervalMomentSequence: order out of range");
    return s_[static_cast<std::size_t>(k)];
}

MomentSequence circle_moments(const CircleMeasure& mu, int m, const Tolerances& tol) {
    if (m < 0) throw InvalidInput("circle_moments: order must be nonnegative");
    std::vector<CMatrix> gammas;
    gammas.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        CMatrix g = czeros(mu.dim(), mu.dim());
        for (const CircleAtom& a : mu.atoms()) {
            g += std::polar(1.0, k * a.theta) * a.weight.mat();
        }
        gammas.push_back(std::move(g));
    }
    return MomentSequence(mu.dim(), std::move(gammas), tol);
}

TrigMoments trig_moments(const MomentSequence& seq, const Tolerances& tol) {
    const CMatrix g0 = seq.gamma(0);
    if (g0.imag().cwiseAbs().maxCoeff() > tol.hermitian * std::max(1.0, max_abs(g0))) {
        throw ImaginaryResidue("trig_moments: gamma_0 has an imaginary part");
    }
    TrigMoments out;
    out.alpha.reserve(static_cast<std::size_t>(seq.max_order()) + 1);
    for (int k = 0; k <= seq.max_order(); ++k) {
        const CMatrix g = seq.gamma(k);
        out.alpha.push_back(g.real());
        if (k >= 1) out.beta.push_back(g.imag());
    }
    return out;
}

IntervalMomentSequence interval_moments(const IntervalMeasure& mu, int n, const Tolerances& tol) {
    if (n < 0) throw InvalidInput("interval_moments: order must be nonnegative");
    std::vector<CMatrix> s;
    s.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        CMatrix m = czeros(mu.dim(), mu.dim());
        for (const IntervalAtom& a : mu.atoms()) {
            m += std::pow(a.x, k) * a.weight.mat();
        }
        s.push_back(std::move(m));
    }
    return IntervalMomentSequence(mu.dim(), std::move(s), tol);
}

bool is_symmetric(const CircleMeasure& mu, double tol) {
    const auto& atoms = mu.atoms();
    for (const CircleAtom& a : atoms) {
        if (std::abs(a.theta) < kMergeTol || a.theta <= -kPi + kMergeTol) {
            continue;  // theta = 0 and theta = -pi are their own mirror images
        }
        const double mirror = -a.theta;
        bool found = false;
        for (const CircleAtom& b : atoms) {
            if (std::abs(b.theta - mirror) < kMergeTol) {
                const double scale = std::max(1.0, max_abs(a.weight.mat()));
                found = max_abs(a.weight.mat() - b.weight.mat()) <= tol * scale;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

CircleMeasure symmetrize(const CircleMeasure& mu, const Tolerances& tol) {
    std::vector<CircleAtom> atoms;
    atoms.reserve(2 * mu.atoms().size());
    for (const CircleAtom& a : mu.atoms()) {
        HermitianMatrix half(0.5 * a.weight.mat(), 1e-8);
        atoms.push_back({a.theta, half});
        atoms.push_back({-a.theta, half});
    }
    return CircleMeasure(mu.dim(), std::move(atoms), tol);
}

IntervalMeasure szego_map(const CircleMeasure& mu, const Tolerances& tol) {
    if (!is_symmetric(mu, tol.hermitian)) {
        throw NotSymmetric("szego_map: measure is not symmetric");
    }
    std::vector<IntervalAtom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const CircleAtom& a : mu.atoms()) {
        atoms.push_back({std::cos(a.theta), a.weight});
    }
    return IntervalMeasure(mu.dim(), std::move(atoms), tol);
}

CircleMeasure inverse_szego_map(const IntervalMeasure& mu, const Tolerances& tol) {
    std::vector<CircleAtom> atoms;
    atoms.reserve(2 * mu.atoms().size());
    for (const IntervalAtom& a : mu.atoms()) {
        if (a.x >= 1.0) {
            atoms.push_back({0.0, a.weight});
        } else if (a.x <= -1.0) {
            atoms.push_back({-kPi, a.weight});
        } else {
            const double theta = std::acos(a.x);
            HermitianMatrix half(0.5 * a.weight.mat(), 1e-8);
            atoms.push_back({theta, half});
            atoms.push_back({-theta, half});
        }
    }
    return CircleMeasure(mu.dim(), std::move(atoms), tol);
}

CMatrix gamma_from_chebyshev(const IntervalMomentSequence& s, int j) {
    if (j < 0) throw InvalidInput("gamma_from_chebyshev: order must be nonnegative");
    if (j > s.max_order()) throw InsufficientData("gamma_from_chebyshev: not enough moments");
    if (j == 0) return s.s(0);  // T_0 = 1; the general prefactor degenerates at j = 0
    CMatrix acc = czeros(s.dim(), s.dim());
    for (int k = 0; k <= j / 2; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double coeff = sign * j * std::tgamma(static_cast<double>(j - k)) /
                             (std::tgamma(static_cast<double>(k + 1)) *
                              std::tgamma(static_cast<double>(j - 2 * k + 1))) *
                             std::pow(2.0, j - 2 * k - 1);
        acc += coeff * s.s(j - 2 * k);
    }
    return acc;
}

}  // namespace mopuc
