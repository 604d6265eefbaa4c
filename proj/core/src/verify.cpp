#include "mopuc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>

#include "mopuc/interval.hpp"
#include "mopuc/opuc.hpp"

namespace mopuc {

namespace {

using Clock = std::chrono::steady_clock;

struct CheckSpec {
    std::string name;
    double tolerance;
    std::function<CheckResult()> run;
};

CheckResult make_result(const std::string& name, double residual, double tolerance,
                        const std::string& note = {}) {
    CheckResult r;
    r.name = name;
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.note = note;
    return r;
}

CheckResult make_skipped(const std::string& name, double tolerance, const std::string& note) {
    CheckResult r;
    r.name = name;
    r.tolerance = tolerance;
    r.passed = true;
    r.skipped = true;
    r.note = note;
    return r;
}

double rel_frob(const CMatrix& diff, const CMatrix& ref) {
    return frob(diff) / std::max(1.0, frob(ref));
}

}  // namespace

VerifySummary verify_measure(const CircleMeasure& mu, int order, int jobs,
                             const Tolerances& tol) {
    if (order < 1) throw InvalidInput("verify_measure: order must be at least 1");
    const MomentSequence seq = circle_moments(mu, order + 1, tol);
    const CanonicalSequence cs = canonical_sequence(seq, tol);
    const int n_avail = static_cast<int>(cs.coeffs.size());
    // largest order with T_m positive definite
    const int n_interior = cs.n_mu.has_value() ? *cs.n_mu - 1
                                               : std::min(order, seq.max_order() - 1);
    const bool symmetric = is_symmetric(mu, tol.hermitian);
    const Index p = mu.dim();

    std::vector<CheckSpec> specs;

    specs.push_back({"quadratic_form_nonnegative", 1e-10, [&, n_interior]() {
        std::mt19937_64 rng(12345);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const int m = std::max(0, std::min(3, seq.max_order() - 1));
        double worst = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<CMatrix> b;
            for (int i = 0; i <= m; ++i) {
                CMatrix bi(p, p);
                for (Index r = 0; r < p; ++r) {
                    for (Index c = 0; c < p; ++c) bi(r, c) = Complex(gauss(rng), gauss(rng));
                }
                b.push_back(std::move(bi));
            }
            worst = std::max(worst, -quadratic_form(seq, b, tol));
        }
        return make_result("quadratic_form_nonnegative", worst, 1e-10);
    }});

    specs.push_back({"verblunsky_equals_canonical", 1e-9, [&, n_avail]() {
        if (n_avail == 0) {
            return make_skipped("verblunsky_equals_canonical", 1e-9, "no interior step");
        }
        double worst = 0.0;
        for (int m = 0; m < n_avail; ++m) {
            const CMatrix h = verblunsky_extract(seq, m, tol);
            worst = std::max(worst, frob(cs.coeffs[static_cast<std::size_t>(m)] - h));
        }
        return make_result("verblunsky_equals_canonical", worst, 1e-9);
    }});

    specs.push_back({"szego_recursion", 1e-8, [&, n_interior]() {
        if (n_interior < 1) return make_skipped("szego_recursion", 1e-8, "no interior step");
        const OrthoSystem sys = monic_system(seq, n_interior, tol);
        const VerblunskySequence h = verblunsky_sequence(seq, n_interior, tol);
        double worst = 0.0;
        for (int m = 0; m + 1 <= n_interior; ++m) {
            const RecursionResiduals r = szego_residuals(sys, h, mu, m);
            worst = std::max({worst, r.left, r.right});
        }
        return make_result("szego_recursion", worst, 1e-8);
    }});

    specs.push_back({"determinantal_orthogonality", 1e-8, [&, n_interior]() {
        if (p > 3) return make_skipped("determinantal_orthogonality", 1e-8, "size guard: p > 3");
        const int m = std::min({3, n_interior, seq.max_order()});
        if (m < 1) return make_skipped("determinantal_orthogonality", 1e-8, "no interior step");
        const OrthogonalityResiduals r = theorem31_check(seq, m, tol);
        const double scale = std::max(1.0, std::abs(det(build_toeplitz(seq, m).base)));
        const double worst =
            std::max({r.low_right, r.top_right, r.low_left, r.top_left}) / scale;
        return make_result("determinantal_orthogonality", worst, 1e-8);
    }});

    const auto symmetric_or_skip = [&](const std::string& name, double tolerance,
                                       const std::function<CheckResult()>& body) {
        return CheckSpec{name, tolerance, [&, name, tolerance, body]() {
            if (!symmetric) return make_skipped(name, tolerance, "skipped: not symmetric");
            return body();
        }};
    };

    specs.push_back(symmetric_or_skip("canonical_moments_real_symmetric", 1e-10, [&]() {
        double worst = 0.0;
        for (const CMatrix& a : cs.coeffs) {
            worst = std::max({worst, a.imag().cwiseAbs().maxCoeff(),
                              max_abs(a - a.transpose())});
        }
        return make_result("canonical_moments_real_symmetric", worst, 1e-10);
    }));

    specs.push_back(symmetric_or_skip("radii_coincide", 1e-10, [&, n_interior]() {
        double worst = 0.0;
        for (int m = 0; m <= n_interior; ++m) {
            const MomentBall ball = moment_ball(seq, m, tol);
            worst = std::max(worst, max_abs(ball.left_radius.mat() - ball.right_radius.mat()) /
                                        std::max(1.0, max_abs(ball.left_radius.mat())));
        }
        return make_result("radii_coincide", worst, 1e-10);
    }));

    specs.push_back(symmetric_or_skip("toeplitz_inverse_persymmetry", 1e-9, [&, n_interior]() {
        const int m = std::min(4, n_interior + 1);
        if (m < 2) return make_skipped("toeplitz_inverse_persymmetry", 1e-9, "order too small");
        const CMatrix inv = build_toeplitz(seq, m - 1).base.inverse();
        double worst = 0.0;
        const double scale = std::max(1.0, max_abs(inv));
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) {
                worst = std::max(worst, max_abs(block_get(inv, k, l, p) -
                                                block_get(inv, m - 1 - k, m - 1 - l, p)) /
                                            scale);
            }
        }
        return make_result("toeplitz_inverse_persymmetry", worst, 1e-9);
    }));

    specs.push_back(symmetric_or_skip("interval_canonical_relation", 1e-9, [&, n_avail]() {
        if (n_avail == 0) {
            return make_skipped("interval_canonical_relation", 1e-9, "no interior step");
        }
        const IntervalMomentSequence s =
            interval_moments(szego_map(mu, tol), n_avail, tol);
        const IntervalCanonical ic = canonical_U(s, tol);
        const int n = std::min(n_avail, static_cast<int>(ic.u.size()));
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            const CMatrix expect = 2.0 * ic.u[static_cast<std::size_t>(k)] - identity(p);
            worst = std::max(worst, frob(cs.coeffs[static_cast<std::size_t>(k)] - expect));
        }
        const std::vector<MomentBall> balls = moment_balls(seq, n, tol);
        CanonicalSequence head = cs;
        head.coeffs.resize(static_cast<std::size_t>(n));
        const std::vector<CMatrix> abar = abar_from_A(head, balls, tol);
        for (int k = 0; k < n; ++k) {
            const CMatrix expect = 2.0 * ic.u_bar[static_cast<std::size_t>(k)] - identity(p);
            worst = std::max(worst, frob(abar[static_cast<std::size_t>(k)] - expect));
        }
        return make_result("interval_canonical_relation", worst, 1e-9);
    }));

    specs.push_back(symmetric_or_skip("chebyshev_moment_relation", 1e-10, [&]() {
        const int jmax = std::min(8, seq.max_order());
        const IntervalMomentSequence s = interval_moments(szego_map(mu, tol), jmax, tol);
        double worst = 0.0;
        for (int j = 0; j <= jmax; ++j) {
            worst = std::max(worst, rel_frob(gamma_from_chebyshev(s, j) - seq.gamma(j),
                                             seq.gamma(j)));
        }
        return make_result("chebyshev_moment_relation", worst, 1e-10);
    }));

    specs.push_back(symmetric_or_skip("geronimus_relations", 1e-8, [&, n_avail]() {
        const int k = std::min(4, (n_avail + 1) / 2);
        if (k < 2) return make_skipped("geronimus_relations", 1e-8, "order too small");
        const GeronimusReport report = geronimus_check(mu, k, tol);
        return make_result("geronimus_relations",
                           std::max(report.b_discrepancy, report.c_discrepancy), 1e-8);
    }));

    VerifySummary summary;
    summary.checks.resize(specs.size());
    const auto run_one = [](const CheckSpec& spec) {
        const auto t0 = Clock::now();
        CheckResult r;
        try {
            r = spec.run();
        } catch (const Error& e) {
            r.name = spec.name;
            r.tolerance = spec.tolerance;
            r.residual = std::numeric_limits<double>::infinity();
            r.passed = false;
            r.note = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
    };
    if (jobs > 1) {
        std::vector<std::future<CheckResult>> futures;
        futures.reserve(specs.size());
        for (const CheckSpec& spec : specs) {
            futures.push_back(std::async(std::launch::async, run_one, std::cref(spec)));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) summary.checks[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < specs.size(); ++i) summary.checks[i] = run_one(specs[i]);
    }
    summary.all_passed = std::all_of(summary.checks.begin(), summary.checks.end(),
                                     [](const CheckResult& r) { return r.passed; });
    return summary;
}

}  // namespace mopuc
