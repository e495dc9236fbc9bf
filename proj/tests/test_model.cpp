#include <cmath>
#include <vector>

#include <stdexcept>

#include <doctest.h>

#include "mmsp/model.hpp"

using namespace mmsp;

namespace {

// Expanded numerator form, evaluated independently of eval_potential.
double potential_expanded(const PotentialParams& p, double r) {
    const double s = std::exp(-2.0 * p.alpha * r);
    const double num = p.a_coef * p.a_coef + 2.0 * p.a_coef * p.b_coef * s +
                       p.b_coef * p.b_coef * s * s;
    const double den = (1.0 - s) * (1.0 - s);
    return -p.v0 * num / den;
}

}  // namespace

TEST_CASE("eval_potential at e^{-2 alpha r} = 1/2") {
    PotentialParams p{1.0, 1.0, 1.0, 0.5};
    CHECK(eval_potential(p, std::log(2.0)) == doctest::Approx(-9.0).epsilon(1e-14));
}

TEST_CASE("eval_potential collapses to a constant when B = -A") {
    PotentialParams p{1.0, 2.0, -2.0, 0.7};
    for (double r : {0.1, 1.0, 7.3})
        CHECK(eval_potential(p, r) == doctest::Approx(-4.0).epsilon(1e-14));
}

TEST_CASE("eval_potential large-r asymptote is -V0 A^2") {
    PotentialParams p{1.0, 2.0, 3.0, 1.0};
    CHECK(std::abs(eval_potential(p, 20.0) - (-4.0)) < 1e-12);
}

TEST_CASE("eval_potential matches the expanded form") {
    PotentialParams p{1.7, 0.8, -0.6, 0.9};
    for (int i = 0; i <= 40; ++i) {
        const double r = std::pow(10.0, -3.0 + 5.0 * i / 40.0);
        const double a = eval_potential(p, r);
        const double b = potential_expanded(p, r);
        CHECK(std::abs(a - b) <= 1e-13 * std::abs(b));
    }
}

TEST_CASE("eval_potential diverges like -V0 (A+B)^2 / (4 alpha^2 r^2) at the origin") {
    PotentialParams p{1.3, 0.8, 0.5, 0.7};
    const double r = 1e-4 / p.alpha;
    const double lead = -p.v0 * (p.a_coef + p.b_coef) * (p.a_coef + p.b_coef) /
                        (4.0 * p.alpha * p.alpha * r * r);
    CHECK(eval_potential(p, r) / lead == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("eval_potential rejects r <= 0") {
    PotentialParams p{1.0, 1.0, 0.5, 1.0};
    CHECK_THROWS_AS(eval_potential(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_potential(p, -1.0), std::domain_error);
}

TEST_CASE("to_dimensionless direct substitutions") {
    PhysicalContext ctx;
    SUBCASE("V0=2, A=B=1, alpha=1, l=0") {
        const auto d = to_dimensionless({2.0, 1.0, 1.0, 1.0}, ctx, 0, kDefaultC0);
        CHECK(d.beta == doctest::Approx(1.0));
        CHECK(d.delta == doctest::Approx(2.0));
        CHECK(d.eta == doctest::Approx(1.0));
        CHECK(d.gamma == 0.0);
        CHECK(!d.eps_n);
    }
    SUBCASE("zero potential") {
        const auto d = to_dimensionless({0.0, 1.0, 0.5, 1.0}, ctx, 0, kDefaultC0);
        CHECK(d.beta == 0.0);
        CHECK(d.delta == 0.0);
        CHECK(d.eta == 0.0);
    }
    SUBCASE("V0=1, A=0.3, B=0.2, alpha=1, l=1") {
        const auto d = to_dimensionless({1.0, 0.3, 0.2, 1.0}, ctx, 1, kDefaultC0);
        CHECK(d.beta == doctest::Approx(0.02).epsilon(1e-14));
        CHECK(d.delta == doctest::Approx(0.06).epsilon(1e-14));
        CHECK(d.eta == doctest::Approx(0.045).epsilon(1e-14));
        CHECK(d.gamma == 2.0);
    }
    SUBCASE("attaches eps_n when an energy is given") {
        const auto d = to_dimensionless({1.0, 0.3, 0.2, 1.0}, ctx, 0, kDefaultC0, -0.5);
        REQUIRE(d.eps_n);
        CHECK(*d.eps_n == doctest::Approx(0.25));
    }
}

TEST_CASE("centrifugal_approx at s = 1/2") {
    const double r = 0.5 * std::log(2.0);  // e^{-2r} = 1/2 at alpha = 1
    CHECK(centrifugal_approx(ApproximationScheme::greene_aldrich(), 1.0, r) ==
          doctest::Approx(8.0).epsilon(1e-14));
    CHECK(centrifugal_approx(ApproximationScheme::pekeris(1.0 / 12.0), 1.0, r) ==
          doctest::Approx(8.0 + 4.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("Greene-Aldrich approximates 1/r^2 at small alpha r") {
    const double r = 0.01;
    const double ga = centrifugal_approx(ApproximationScheme::greene_aldrich(), 1.0, r);
    CHECK(std::abs(ga * r * r - 1.0) < 4e-4);   // within 0.04% of 1/r^2
    CHECK(std::abs(ga * r * r - 1.0) < 1e-3);   // small-alpha-r limit
}

TEST_CASE("Pekeris minus Greene-Aldrich is exactly 4 alpha^2 C0") {
    const double alpha = 0.8, c0 = kDefaultC0;
    for (int i = 0; i < 100; ++i) {
        const double r = std::pow(10.0, -2.0 + 4.0 * i / 99.0);
        const double pk = centrifugal_approx(ApproximationScheme::pekeris(c0), alpha, r);
        const double ga = centrifugal_approx(ApproximationScheme::greene_aldrich(), alpha, r);
        const double expect = 4.0 * alpha * alpha * c0;
        // at small r both terms are ~1/r^2, so scale the tolerance by them
        CHECK(std::abs((pk - ga) - expect) <= 1e-12 * std::max(expect, pk));
    }
}

TEST_CASE("C0 = 1/12 cancels the O(1) Greene-Aldrich error") {
    const double r = 0.01;  // alpha r = 0.01
    const double exact = 1.0 / (r * r);
    const double ga_err =
        std::abs(centrifugal_approx(ApproximationScheme::greene_aldrich(), 1.0, r) - exact);
    const double pk_err =
        std::abs(centrifugal_approx(ApproximationScheme::pekeris(), 1.0, r) - exact);
    CHECK(pk_err * 100.0 <= ga_err);
}

TEST_CASE("centrifugal_approx rejects r <= 0") {
    CHECK_THROWS_AS(centrifugal_approx(ApproximationScheme::greene_aldrich(), 1.0, 0.0),
                    std::domain_error);
}

TEST_CASE("approx_error_table") {
    PotentialParams p{1.0, 0.3, 0.2, 1.0};
    SUBCASE("single point at s = 1/2") {
        const double r = 0.5 * std::log(2.0);
        const auto rows =
            approx_error_table(ApproximationScheme::greene_aldrich(), p, {r});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].approx == doctest::Approx(8.0));
        CHECK(rows[0].exact == doctest::Approx(1.0 / (r * r)));
    }
    SUBCASE("relative error decreases with alpha r") {
        const std::vector<double> grid{0.5, 1.0, 2.0};
        PotentialParams small = p;
        small.alpha = 0.01;
        const auto coarse = approx_error_table(ApproximationScheme::greene_aldrich(), p, grid);
        const auto fine =
            approx_error_table(ApproximationScheme::greene_aldrich(), small, grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(std::abs(fine[i].rel_error) < std::abs(coarse[i].rel_error));
    }
    SUBCASE("empty grid") {
        CHECK(approx_error_table(ApproximationScheme::greene_aldrich(), p, {}).empty());
    }
    SUBCASE("non-increasing grid rejected") {
        CHECK_THROWS_AS(
            approx_error_table(ApproximationScheme::greene_aldrich(), p, {1.0, 1.0}),
            std::invalid_argument);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PotentialParams({1.0, 1.0, 1.0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PotentialParams({1.0, 0.0, 0.0, 1.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalContext({0.0, 1.0}).validate(), std::invalid_argument);
}
