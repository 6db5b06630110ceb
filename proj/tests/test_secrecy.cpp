#include <cmath>
#include <utility>

#include "doctest.h"
#include "wiretap/secrecy.hpp"

using namespace wiretap;
using namespace wiretap::secrecy;

namespace {

Scenario table1() { return {5.0, 5.0, 5.0, 5.0, 4.0, 1e-3, 1e-3, 1.5, 0.5}; }

Scenario random_scenario(RngStream& rng) {
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * rng.next_uniform();
    };
    return {uni(2.0, 10.0),
            uni(2.0, 10.0),
            uni(2.0, 10.0),
            uni(2.0, 10.0),
            uni(2.0, 5.0),
            dbw_to_watts(uni(-40.0, -20.0)),
            dbw_to_watts(uni(-40.0, -20.0)),
            uni(0.5, 3.0),
            0.5};
}

}  // namespace

TEST_CASE("instantaneous secrecy rate") {
    const Scenario s = table1();
    CHECK(instantaneous_secrecy_rate(s, {0.0}, {1.0, 1.0, 1.0, 1.0}) == 0.0);

    // Eve sees nothing: rate is Bob's rate.
    const FadingDraw d{2.0, 0.0, 1.0, 1.0};
    CHECK(instantaneous_secrecy_rate(s, {0.5}, d) ==
          doctest::Approx(std::log2(1.0 + sinr_bob(s, {0.5}, 2.0))));

    // Eve ahead of Bob: clamped to zero.
    const FadingDraw worse{0.01, 50.0, 1.0, 0.0};
    CHECK(instantaneous_secrecy_rate(s, {0.5}, worse) == 0.0);
}

TEST_CASE("ergodic MC: trivial cases and clamp direction") {
    const Scenario s = table1();
    const auto zero = ergodic_secrecy_rate_mc(s, {0.0}, 1000, 1);
    CHECK(zero.mean == 0.0);
    CHECK(zero.std_error == 0.0);
    CHECK(zero.n_samples == 1000);

    Scenario far = s;
    far.d_ae = 1e6;
    const auto est = ergodic_secrecy_rate_mc(far, {0.5}, 20000, 1);
    double bob_only = 0.0;
    for (std::uint64_t t = 0; t < 20000; ++t) {
        RngStream rng(1, t);
        const FadingDraw d = sample_fading(rng);
        bob_only += std::log2(1.0 + sinr_bob(far, {0.5}, d.g_ab));
    }
    CHECK(est.mean == doctest::Approx(bob_only / 20000.0).epsilon(1e-9));

    const auto clamped = ergodic_secrecy_rate_mc(s, {0.5}, 20000, 7, true);
    const auto raw = ergodic_secrecy_rate_mc(s, {0.5}, 20000, 7, false);
    CHECK(clamped.mean >= raw.mean);
}

TEST_CASE("ergodic MC regression value is stable") {
    // Self-oracle: Table I scenario, rho = 0.5, 1e5 trials, seed 1. The
    // constant pins the estimator (and the RNG) against silent changes.
    const auto est = ergodic_secrecy_rate_mc(table1(), {0.5}, 100000, 1);
    CHECK(est.mean == doctest::Approx(0.525952296537).epsilon(1e-9));
}

TEST_CASE("secrecy lower bound values") {
    const Scenario s = table1();

    // rho = 0: forced negative since e^{-gamma} < 1.
    const double pj = s.p_total * path_gain(s.d_je, s.alpha);
    const double expected0 =
        (-std::log(s.sigma2_e + pj) +
         std::log(s.sigma2_e + pj * std::exp(-kEulerGamma))) /
        std::log(2.0);
    CHECK(expected0 < 0.0);
    CHECK(secrecy_lower_bound(s, {0.0}) == doctest::Approx(expected0));

    // Direct substitution at rho = 0.5 (independent arithmetic).
    const double eg = std::exp(-0.5772156649015329);
    const double direct = (std::log(1.0 + 0.75 * eg / 0.625) -
                           std::log(0.001 + 0.0012 + 0.0012) +
                           std::log(0.001 + 0.0012 * eg)) /
                          std::log(2.0);
    CHECK(secrecy_lower_bound(s, {0.5}) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("lower bound sits below the unclamped MC rate") {
    RngStream rng(11, 0);
    for (int k = 0; k < 20; ++k) {
        const Scenario s = random_scenario(rng);
        const PowerSplit p{0.05 + 0.9 * rng.next_uniform()};
        const auto mc = ergodic_secrecy_rate_mc(s, p, 50000, 42, false);
        CHECK(secrecy_lower_bound(s, p) <=
              mc.mean + 3.0 * mc.std_error);
    }
}

TEST_CASE("dc_parts: identity, boundary value, concavity") {
    const Scenario s = table1();
    RngStream rng(12, 0);
    for (int k = 0; k < 100; ++k) {
        const PowerSplit p{rng.next_uniform()};
        const auto [im, phi] = dc_parts(s, p);
        CHECK(im - phi ==
              doctest::Approx(secrecy_lower_bound(s, p)).epsilon(1e-12));
    }

    const double pj = s.p_total * path_gain(s.d_je, s.alpha);
    CHECK(dc_parts(s, {0.0}).second ==
          doctest::Approx(std::log(s.sigma2_e + pj) / std::log(2.0)));

    // Midpoint concavity of both parts on random triples.
    int violations = 0;
    for (int k = 0; k < 1000; ++k) {
        const Scenario sr = random_scenario(rng);
        double x = rng.next_uniform(), y = rng.next_uniform();
        if (x > y) std::swap(x, y);
        const double m = 0.5 * (x + y);
        const auto [ix, px] = dc_parts(sr, {x});
        const auto [iy, py] = dc_parts(sr, {y});
        const auto [im2, pm] = dc_parts(sr, {m});
        if (im2 < 0.5 * (ix + iy) - 1e-10) ++violations;
        if (pm < 0.5 * (px + py) - 1e-10) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("phi_gradient matches central finite differences") {
    RngStream rng(13, 0);
    for (int k = 0; k < 100; ++k) {
        const Scenario s = random_scenario(rng);
        const double rho = 0.05 + 0.9 * rng.next_uniform();
        const double h = 1e-6;
        const double fd =
            (dc_parts(s, {rho + h}).second - dc_parts(s, {rho - h}).second) /
            (2.0 * h);
        const double g = phi_gradient(s, {rho});
        CHECK(g == doctest::Approx(fd).epsilon(1e-6));

        const double sign_ref = path_gain(s.d_ae, s.alpha) -
                                path_gain(s.d_je, s.alpha);
        if (sign_ref != 0.0) CHECK(g * sign_ref > 0.0);
    }
}

TEST_CASE("phi_gradient vanishes for symmetric distances") {
    Scenario s = table1();
    s.d_ae = s.d_je = 5.0;
    for (double rho : {0.1, 0.5, 0.9})
        CHECK(phi_gradient(s, {rho}) == doctest::Approx(0.0));
}

TEST_CASE("surrogate: tangency and global minorant") {
    RngStream rng(14, 0);
    const Scenario s = table1();
    for (double rho_prev : {0.1, 0.5, 0.9}) {
        CHECK(surrogate_objective(s, rho_prev, rho_prev) ==
              doctest::Approx(secrecy_lower_bound(s, {rho_prev}))
                  .epsilon(1e-12));
    }
    int violations = 0;
    for (int k = 0; k < 1000; ++k) {
        const Scenario sr = random_scenario(rng);
        const double rho = rng.next_uniform();
        const double rho_prev = rng.next_uniform();
        if (surrogate_objective(sr, rho, rho_prev) >
            secrecy_lower_bound(sr, {rho}) + 1e-10)
            ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("surrogate gap is the tangent gap of a concave log when d_ae = d_je") {
    Scenario s = table1();
    s.d_ae = s.d_je = 5.0;
    // With symmetric distances the subtracted part is rho-independent, so
    // the surrogate differs from the bound by phi(rho) - phi(rho_prev) with
    // zero gradient: the gap must vanish identically.
    for (double rho : {0.0, 0.3, 0.8})
        for (double rho_prev : {0.1, 0.6})
            CHECK(surrogate_objective(s, rho, rho_prev) ==
                  doctest::Approx(secrecy_lower_bound(s, {rho}))
                      .epsilon(1e-12));
}

TEST_CASE("solve_surrogate: grid agreement, optimality, boundary case") {
    const Scenario s = table1();
    const double rho_prev = 0.4;
    const double inner_tol = 1e-10;
    const double sol = solve_surrogate(s, rho_prev, inner_tol);

    const std::uint64_t pts = 1000001;
    double best = -1e300, best_rho = 0.0;
    for (std::uint64_t i = 0; i < pts; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(pts - 1);
        const double v = surrogate_objective(s, rho, rho_prev);
        if (v > best) {
            best = v;
            best_rho = rho;
        }
    }
    CHECK(std::fabs(sol - best_rho) <= 1e-6);

    if (sol > 0.0 && sol < 1.0) {
        const double h = 1e-7;
        const double deriv = (surrogate_objective(s, sol + h, rho_prev) -
                              surrogate_objective(s, sol - h, rho_prev)) /
                             (2.0 * h);
        CHECK(std::fabs(deriv) < 1e-3);
    }

    // Monotone-increasing surrogate: boundary optimum at 1.
    Scenario remote = s;
    remote.d_ae = remote.d_je = 1e3;
    CHECK(solve_surrogate(remote, 0.5, inner_tol) == 1.0);
}

TEST_CASE("sca_optimize: symmetric distances converge in one step") {
    Scenario s = table1();
    s.d_ae = s.d_je = 5.0;
    ScaConfig cfg;
    const auto res = sca_optimize(s, cfg);
    CHECK(res.converged);
    // Gradient of the subtracted part is zero, so the first subproblem is
    // the full bound maximization. The bound is symmetric around 0.5 here,
    // which is also the starting point, so the loop stops immediately.
    REQUIRE(res.iterates.size() >= 2);
    const auto n = res.iterates.size();
    CHECK(std::fabs(res.iterates[n - 1] - res.iterates[n - 2]) <= cfg.omega);
    CHECK(std::fabs(res.rho_star - 0.5) <= cfg.omega);
    CHECK(res.rho_star == res.iterates.back());
}

TEST_CASE("sca_optimize: ascent trace and grid-max agreement") {
    RngStream rng(15, 0);
    for (int k = 0; k < 5; ++k) {
        const Scenario s = random_scenario(rng);
        const auto res = sca_optimize(s, {});
        REQUIRE(!res.iterates.empty());
        CHECK(res.rho_star == res.iterates.back());

        double prev = -1e300;
        for (double rho : res.iterates) {
            const double v = secrecy_lower_bound(s, {rho});
            CHECK(v >= prev - 1e-10);
            prev = v;
        }

        double grid_best = -1e300;
        const std::uint64_t pts = 1000001;
        for (std::uint64_t i = 0; i < pts; ++i) {
            const double rho =
                static_cast<double>(i) / static_cast<double>(pts - 1);
            grid_best = std::fmax(grid_best, secrecy_lower_bound(s, {rho}));
        }
        CHECK(grid_best - res.objective <= 1e-6);
    }
}

TEST_CASE("sca_optimize result is insensitive to the starting point") {
    const Scenario s = table1();
    ScaConfig cfg;
    double results[3];
    int i = 0;
    for (double rho0 : {0.1, 0.5, 0.9}) {
        cfg.rho_init = rho0;
        results[i++] = sca_optimize(s, cfg).rho_star;
    }
    // Empirical uniqueness check; a violation is flagged, not failed.
    WARN(std::fabs(results[0] - results[1]) <= 10.0 * cfg.omega);
    WARN(std::fabs(results[0] - results[2]) <= 10.0 * cfg.omega);
}

TEST_CASE("sca_optimize reports non-convergence without error") {
    ScaConfig cfg;
    cfg.max_iters = 1;
    cfg.omega = 1e-300;
    const auto res = sca_optimize(table1(), cfg);
    CHECK(!res.converged);
    CHECK(res.iterates.size() == 2);
}
