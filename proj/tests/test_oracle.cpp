#include <cmath>

#include "doctest.h"
#include "wiretap/oracle.hpp"

using namespace wiretap;
using namespace wiretap::oracle;

namespace {

Scenario table1() { return {5.0, 5.0, 5.0, 5.0, 4.0, 1e-3, 1e-3, 1.5, 0.5}; }

}  // namespace

TEST_CASE("adaptive quadrature on known integrals") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0,
                    3.14159265358979323846, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 50.0, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-11));
    // Sharply peaked integrand requires subdivision.
    CHECK(integrate([](double x) { return std::exp(-1e4 * x); }, 0.0, 10.0,
                    1e-12) == doctest::Approx(1e-4).epsilon(1e-9));
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0, 1e-12) == 0.0);
}

TEST_CASE("numeric_error_probs") {
    const Scenario s = table1();
    const PowerSplit p{0.3};

    const auto [fa0, md0] = numeric_error_probs(s, p, 0.5 * s.sigma2_e);
    CHECK(fa0 == 1.0);
    CHECK(md0 == 0.0);

    // Full-support normalization: FA region plus MD region covers the
    // density exactly once when theta = sigma_e^2.
    const auto [fa_all, md_none] = numeric_error_probs(s, p, s.sigma2_e);
    CHECK(fa_all == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(md_none == 0.0);

    // Closed-form agreement on a spread of thresholds.
    for (double mult : {1.2, 2.0, 5.0, 20.0}) {
        const double theta = mult * s.sigma2_e;
        const auto [qfa, qmd] = numeric_error_probs(s, p, theta);
        CHECK(std::fabs(qfa - detection::prob_false_alarm(s, p, theta)) < 1e-8);
        CHECK(std::fabs(qmd - detection::prob_missed_detection(s, p, theta)) <
              1e-8);
    }
}

TEST_CASE("grid_min_threshold: agreement, ties, degenerate case") {
    const Scenario s = table1();
    const PowerSplit p{0.3};
    const double t_star = detection::optimal_threshold(s, p);
    const GridSpec g{s.sigma2_e, t_star + 10.0 * (t_star - s.sigma2_e), 200001};
    const double step = (g.hi - g.lo) / static_cast<double>(g.points - 1);
    CHECK(std::fabs(grid_min_threshold(s, p, g) - t_star) <= step);

    const auto ties = grid_min_threshold_ties(s, p, g);
    REQUIRE(!ties.empty());
    for (double t : ties)
        CHECK(detection::error_sum(s, p, t) -
                  detection::error_sum(s, p, grid_min_threshold(s, p, g)) <=
              1e-12);

    // Degenerate scales: argmin near a + sigma_e^2.
    const PowerSplit balanced{0.5};  // d_ae = d_je makes a = b at rho = 1/2
    const auto sc = detection::eve_scales(s, balanced);
    REQUIRE(sc.a == doctest::Approx(sc.b));
    const GridSpec g2{s.sigma2_e, s.sigma2_e + 5.0 * sc.a, 200001};
    CHECK(grid_min_threshold(s, balanced, g2) ==
          doctest::Approx(sc.a + s.sigma2_e).epsilon(1e-3));
}

TEST_CASE("grid_search_secrecy") {
    const Scenario s = table1();

    // Eve effectively absent: objective is monotone in rho, boundary argmax.
    Scenario far = s;
    far.d_ae = 1e6;
    const auto mono = grid_search_secrecy(far, {0.0, 1.0, 11}, 1, 3);
    CHECK(mono.rho_star == doctest::Approx(1.0));

    // Two-point grid picks the larger MC value.
    const auto two = grid_search_secrecy(s, {0.0, 0.6, 2}, 1000, 3);
    const auto at0 = secrecy::ergodic_secrecy_rate_mc(s, {0.0}, 1000, 3);
    const auto at6 = secrecy::ergodic_secrecy_rate_mc(s, {0.6}, 1000, 3);
    CHECK(two.objective == doctest::Approx(std::fmax(at0.mean, at6.mean))
                               .epsilon(1e-12));

    // Argmax stable within one grid step across seeds.
    const GridSpec g{0.0, 1.0, 101};
    const double step = 0.01;
    const double r1 = grid_search_secrecy(s, g, 100000, 1).rho_star;
    const double r2 = grid_search_secrecy(s, g, 100000, 2).rho_star;
    const double r3 = grid_search_secrecy(s, g, 100000, 3).rho_star;
    CHECK(std::fabs(r1 - r2) <= step + 1e-15);
    CHECK(std::fabs(r1 - r3) <= step + 1e-15);
}

TEST_CASE("grid_search_covert") {
    const Scenario s = table1();

    // Near-vacuous constraint: top grid point wins.
    covert::CovertConfig vac{1.0 - 1e-12, 1e-9, 1000};
    const auto top = grid_search_covert(s, vac, {0.0, 1.0, 1001});
    CHECK(top.rho_star == doctest::Approx(0.999));

    covert::CovertConfig cfg{0.1, 1e-9, 1000};
    const auto ex = grid_search_covert(s, cfg, {0.0, 1.0, 100001});
    const double rho_b = covert::max_feasible_rho(s, cfg);
    CHECK(std::fabs(ex.rho_star - rho_b) <= 1e-5);

    // Stricter eps shrinks the feasible region.
    covert::CovertConfig tight{0.001, 1e-9, 1000};
    const auto ex_tight = grid_search_covert(s, tight, {0.0, 1.0, 100001});
    CHECK(ex_tight.rho_star < ex.rho_star);
}

TEST_CASE("finite_n_detector_sim") {
    const Scenario s = table1();
    const PowerSplit p{0.3};
    const double t_star = detection::optimal_threshold(s, p);

    // Asymptotic agreement at n = 1e4.
    const auto m = finite_n_detector_sim(s, p, t_star, 10000, 100000, 5);
    const double pfa = detection::prob_false_alarm(s, p, t_star);
    const double pmd = detection::prob_missed_detection(s, p, t_star);
    auto se = [](double q) { return std::sqrt(q * (1.0 - q) / 100000.0); };
    CHECK(std::fabs(m.p_fa - pfa) <= 3.0 * se(pfa));
    CHECK(std::fabs(m.p_md - pmd) <= 3.0 * se(pmd));

    // Threshold below the noise floor: every statistic exceeds it in the
    // large-n regime.
    const auto low =
        finite_n_detector_sim(s, p, 0.5 * s.sigma2_e, 1000, 20000, 5);
    CHECK(low.p_fa >= 0.99);
    CHECK(low.p_md == 0.0);

    // Symbol-level path agrees with the direct chi-squared path at small n.
    const auto fast = finite_n_detector_sim(s, p, t_star, 100, 40000, 6, false);
    const auto slow = finite_n_detector_sim(s, p, t_star, 100, 40000, 6, true);
    auto se2 = [](double q) {
        return std::sqrt(std::fmax(q * (1.0 - q), 1e-9) / 40000.0);
    };
    CHECK(std::fabs(fast.p_fa - slow.p_fa) <=
          4.0 * std::sqrt(2.0) * se2(fast.p_fa));
    CHECK(std::fabs(fast.p_md - slow.p_md) <=
          4.0 * std::sqrt(2.0) * se2(fast.p_md));

    // Determinism across repeated calls.
    const auto again = finite_n_detector_sim(s, p, t_star, 100, 40000, 6);
    CHECK(again.p_fa == fast.p_fa);
    CHECK(again.p_md == fast.p_md);
}

TEST_CASE("mc_log_fading_mean") {
    const auto est = mc_log_fading_mean(1000000, 21);
    CHECK(std::fabs(est.mean + 0.577216) < 0.013);
    // Var[ln g] = pi^2/6, so the reported SE should be ~ 1.28e-3.
    CHECK(est.std_error ==
          doctest::Approx(std::sqrt(1.6449340668 / 1e6)).epsilon(0.01));

    // Single trial: ln of that draw.
    const auto one = mc_log_fading_mean(1, 21);
    RngStream rng(21, 0);
    CHECK(one.mean == std::log(rng.next_exponential()));

    // Estimate + gamma centered at zero across independent seeds.
    int hits = 0;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto e = mc_log_fading_mean(100000, seed);
        if (std::fabs(e.mean + kEulerGamma) <= 3.0 * e.std_error) ++hits;
    }
    CHECK(hits >= 9);
}
