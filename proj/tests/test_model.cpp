#include <doctest.h>

#include <cmath>
#include <random>

#include "govgap/error.hpp"
#include "govgap/model.hpp"
#include "govgap/oracle.hpp"

using namespace govgap;
using doctest::Approx;

namespace {

ModelParams P(double theta, double mu, double lambda) { return ModelParams::make(theta, mu, lambda); }

// Independent α* by 1-D maximization of the defense-concentrated profit,
// where d is itself found numerically. Only the raw profit is used.
double alpha_by_search(const ModelParams& p) {
    auto best_d_profit = [&](double a) {
        return oracle::maximize_1d([&](double d) { return profit(a, d, p); }, 0.0, 4.0 * (p.theta() + p.mu()))
            .value_hat;
    };
    return oracle::maximize_1d(best_d_profit, 0.0, 2.0 * (p.theta() + p.mu())).x_hat;
}

}  // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(ModelParams::make(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ModelParams::make(1.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ModelParams::make(1.0, 1.0, NAN), DomainError);
    CHECK(P(2, 2, 2).positive_deployment_ok());
    CHECK_FALSE(ModelParams::make(2, 1, 2, Assumption::Relaxed).positive_deployment_ok());
}

TEST_CASE("classify_regime") {
    CHECK(classify_regime(P(2, 2, 0.71)) == Regime::Interior);
    CHECK(classify_regime(P(0.5, 2, 2.0)) == Regime::Corner);
    CHECK(classify_regime(P(1, 1, 1)) == Regime::Corner);
}

TEST_CASE("profit") {
    CHECK(profit(0, 0, P(2, 2, 2)) == 0.0);
    CHECK(profit(0, 3, P(2, 2, 2)) == -3.0);
    CHECK(profit(1, 1, P(2, 2, 2)) == Approx(0.5).epsilon(1e-12));
    CHECK(profit(2, 0, P(1, 1, 1)) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("optimal_defense") {
    CHECK(optimal_defense(1.8377, P(2, 2, 1.25)) == Approx(1.07).epsilon(0.005));
    CHECK(optimal_defense(5, P(0.5, 2, 1)) == 0.0);
    CHECK(optimal_defense(1, P(2, 2, 2)) == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(optimal_defense(0.0, P(2, 2, 2)), DomainError);

    // d-FOC of the raw profit: λθα²/(α+d)² = 1.
    const auto p = P(3, 2, 1.5);
    const double a = 1.7;
    const double d = optimal_defense(a, p);
    CHECK(p.lambda() * p.theta() * a * a / ((a + d) * (a + d)) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("breach_probability") {
    CHECK(breach_probability(1, 0) == 1.0);
    CHECK(breach_probability(1, 1) == 0.5);
    CHECK(breach_probability(0, 0) == 0.0);
    CHECK(std::abs(breach_probability(1.8377, 1.07) - 0.632) < 0.001);
}

TEST_CASE("equilibrium_breach_prob") {
    CHECK(equilibrium_breach_prob(P(2, 2, 2)) == Approx(0.5));
    CHECK(equilibrium_breach_prob(P(0.5, 2, 2)) == 1.0);
    CHECK(std::abs(equilibrium_breach_prob(P(2, 2, 0.71)) - 0.839) < 0.001);
}

TEST_CASE("reduced_profit") {
    CHECK(reduced_profit(0, P(2, 2, 2)) == 0.0);
    CHECK(reduced_profit(1, P(2, 2, 2)) == Approx(0.5));
    CHECK(std::abs(reduced_profit(2.145, P(0.5, 2, 0.71)) - 2.30) <= 0.005 + 1e-9);

    // Equals the raw profit at the best-response defense.
    for (double theta : {0.3, 1.0, 2.5}) {
        const auto p = P(theta, 2, 1.2);
        for (double a : {0.4, 1.3, 3.1})
            CHECK(reduced_profit(a, p) == Approx(profit(a, optimal_defense(a, p), p)).epsilon(1e-12));
    }
}

TEST_CASE("optimal_deployment") {
    CHECK(std::abs(optimal_deployment(P(2, 2, 0.71)) - 2.62) <= 0.005 + 1e-9);
    CHECK(optimal_deployment(P(2, 2, 2)) == Approx(1.0).epsilon(1e-12));
    for (double lambda : {0.4, 1.25, 2.5}) {
        const double mu = 2.0;
        const auto p = P(1.0 / lambda, mu, lambda);
        CHECK(optimal_deployment(p) == Approx(mu + 1.0 / lambda - 1.0).epsilon(1e-12));
    }
    SUBCASE("matches a numerical search") {
        for (const auto& p : {P(2, 2, 0.71), P(2, 2, 1.25), P(0.6, 1.5, 1.1), P(4, 3, 2.5)})
            CHECK(std::abs(optimal_deployment(p) - alpha_by_search(p)) < 1e-5);
    }
}

TEST_CASE("security_discount") {
    const auto fa = P(2, 2, 1.25);
    CHECK(security_discount(fa) == Approx(2 * std::sqrt(2.5) - 1));
    CHECK(std::abs(security_discount(fa) / (fa.theta() + fa.mu()) - 0.54) <= 0.005);
    CHECK(security_discount(P(1 / 1.6, 2, 1.6)) == Approx(1.0).epsilon(1e-12));
    const auto c = P(0.5, 2, 1);
    CHECK(security_discount(c) == Approx(0.5));
    CHECK(security_discount(c) == Approx(c.theta() + c.mu() - optimal_deployment(c)));
}

TEST_CASE("slopes against finite differences") {
    auto fd_theta = [](const ModelParams& p) {
        return oracle::central_difference([&](double t) { return optimal_deployment(p.with_theta(t)); },
                                          p.theta(), 1e-6);
    };
    auto fd_lambda = [](const ModelParams& p) {
        return oracle::central_difference([&](double l) { return optimal_deployment(p.with_lambda(l)); },
                                          p.lambda(), 1e-6);
    };
    CHECK(deployment_slope(P(2, 2, 2)) == Approx(0.0));
    CHECK(deployment_slope(P(1, 2, 2)) == Approx(1 - std::sqrt(2.0)));
    CHECK(std::abs(fd_theta(P(1, 2, 2)) - (1 - std::sqrt(2.0))) < 1e-6);
    CHECK(deployment_slope(P(0.5, 2, 0.71)) == Approx(0.29));
    CHECK(lambda_slope(P(0.8, 2, 1.25)) == Approx(-0.8));
    CHECK(lambda_slope(P(2, 2, 2)) == Approx(-1.0));
    CHECK(lambda_slope(P(0.4, 2, 2)) == Approx(-0.4));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> th(0.1, 5), mu(0.5, 5), la(0.1, 3);
    int checked = 0;
    while (checked < 200) {
        const double l = la(rng), m = mu(rng), t = th(rng);
        if (l >= m + 1 || std::abs(l * t - 1) < 1e-3) continue;
        const auto p = P(t, m, l);
        CHECK(std::abs(fd_theta(p) - deployment_slope(p)) < 1e-6);
        CHECK(std::abs(fd_lambda(p) - lambda_slope(p)) < 1e-6);
        CHECK(lambda_slope(p) < 0.0);
        ++checked;
    }
    // At the kink the common one-sided value 1 − λ is returned.
    CHECK(deployment_slope(P(0.5, 2, 2)) == Approx(-1.0));
}

TEST_CASE("solve bundles consistent fields") {
    const auto s = solve(P(2, 2, 1.14));
    CHECK(std::abs(s.alpha_star - 1.98) <= 0.005 + 1e-9);
    CHECK(std::abs(s.p_star - 0.66) <= 0.005 + 1e-9);
    const auto h = solve(P(2, 2, 2));
    CHECK(h.alpha_star == Approx(1.0));
    CHECK(h.d_star == Approx(1.0));
    CHECK(h.p_star == Approx(0.5));
    CHECK(h.firm_value == Approx(0.5));
    CHECK(std::abs(solve(P(3, 2, 2)).alpha_star - 1.10) <= 0.005 + 1e-9);

    for (const auto& p : {P(2, 2, 0.71), P(0.3, 1.5, 2), P(5, 4, 0.9)}) {
        const auto r = solve(p);
        CHECK(r.alpha_star + r.discount == Approx(r.alpha0).epsilon(1e-14));
        CHECK(r.profit == Approx(r.firm_value).epsilon(1e-12));
        CHECK((r.d_star == 0.0) == (r.regime == Regime::Corner));
        CHECK(r.d_star == Approx(optimal_defense(r.alpha_star, p)));
        CHECK(r.p_star == equilibrium_breach_prob(p));
        CHECK(r.expected_loss == Approx(r.p_star * p.lambda() * r.alpha_star * p.theta()));
    }
}

TEST_CASE("assumption 2 handling") {
    CHECK_THROWS_AS(solve(P(2, 1, 3)), DomainError);
    const auto r = solve(ModelParams::make(2, 1, 3, Assumption::Relaxed));
    CHECK(r.clamped);
    CHECK(r.alpha_star == 0.0);
    CHECK(r.firm_value == 0.0);
    // Negative vertex only near θ = λ; far from it α* stays positive.
    const auto far = solve(ModelParams::make(20, 1, 2.5, Assumption::Relaxed));
    CHECK_FALSE(far.clamped);
    CHECK(far.alpha_star > 0.0);
}

TEST_CASE("regime continuity and C1 discount") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> la(0.2, 3), mu(0.5, 5);
    for (int i = 0; i < 300; ++i) {
        const double l = la(rng), m = mu(rng);
        if (l >= m + 1) continue;
        const double t = 1.0 / l;
        const double corner = m + t * (1 - l);
        const double interior = t + m + 1 - 2 * std::sqrt(l * t);
        CHECK(std::abs(corner - interior) <= 1e-12);
        CHECK(std::abs(optimal_deployment(P(t, m, l)) - corner) <= 1e-12);

        auto disc = [&](double th) { return security_discount(P(th, m, l)); };
        const double left = oracle::backward_difference(disc, t, 1e-7);
        const double right = oracle::forward_difference(disc, t, 1e-7);
        CHECK(std::abs(left - l) < 1e-6);
        CHECK(std::abs(right - l) < 1e-6);
    }
}

TEST_CASE("discount is independent of mu") {
    for (double t : {0.3, 1.0, 2.7})
        for (double l : {0.5, 1.3, 2.9})
            CHECK(security_discount(P(t, 2.0, l)) == security_discount(P(t, 4.5, l)));
}

TEST_CASE("p* does not depend on alpha") {
    for (const auto& p : {P(2, 2, 2), P(3, 1, 0.8), P(0.5, 2, 1.1)}) {
        const double ref = breach_probability(0.1, optimal_defense(0.1, p));
        for (double a = 0.1; a <= 10.0; a += 0.1)
            CHECK(std::abs(breach_probability(a, optimal_defense(a, p)) - ref) <= 1e-12);
    }
}

TEST_CASE("U shape with minimum mu+1-lambda at theta=lambda") {
    for (double l : {1.14, 1.25, 2.0, 2.8}) {
        const double m = 2.0;
        double prev = optimal_deployment(P(0.01, m, l));
        for (double t = 0.02; t < l; t += 0.01) {
            const double cur = optimal_deployment(P(t, m, l));
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(std::abs(optimal_deployment(P(l, m, l)) - (m + 1 - l)) <= 1e-12);
        prev = optimal_deployment(P(l, m, l));
        for (double t = l + 0.01; t < l + 5; t += 0.01) {
            const double cur = optimal_deployment(P(t, m, l));
            CHECK(cur > prev);
            prev = cur;
        }
    }
    for (double l : {0.3, 0.7, 1.0})
        for (double t = 0.05; t < 6; t += 0.05) CHECK(deployment_slope(P(t, 2, l)) >= 0.0);
}

TEST_CASE("profit is strictly concave in d") {
    for (const auto& p : {P(2, 2, 2), P(0.5, 1, 0.7), P(4, 3, 1.9)}) {
        for (double a : {0.5, 1.5, 3.0})
            for (double d : {0.0, 0.3, 1.0, 4.0}) {
                const double h = 1e-3;
                const double dd = profit(a, d + h, p) - 2 * profit(a, d + 2 * h, p) + profit(a, d + 3 * h, p);
                CHECK(dd < 0.0);
            }
    }
}
