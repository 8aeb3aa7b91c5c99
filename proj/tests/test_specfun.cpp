// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy and outage analysis for RIS-aided underlay cognitive radio
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "rissec/quadrature.hpp"
#include "rissec/specfun.hpp"
#include "rissec/validation.hpp"

using namespace rissec;
using namespace rissec::specfun;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// W through an exp-sinh quadrature of the integral representation of U in
// long double, independent of the library's own integrator.
double w_oracle(double kappa, double mu, double z) {
    if (mu - kappa + 0.5 < 1.0) mu = -mu; // same function, a >= 1 representation
    const long double a = mu - kappa + 0.5L, b = 1.0L + 2.0L * mu, zz = z;
    boost::math::quadrature::exp_sinh<long double> integrator;
    auto f = [&](long double t) {
        return std::exp(-zz * t + (a - 1) * std::log(t) + (b - a - 1) * std::log1p(t));
    };
    const long double u = integrator.integrate(f, 1e-18L) / std::tgamma(a);
    return static_cast<double>(std::exp(-zz / 2) * std::pow(zz, mu + 0.5L) * u);
}

std::vector<std::pair<double, double>> lattice() {
    std::vector<std::pair<double, double>> out;
    for (int ne : {1, 3, 8})
        for (int k = 0; k <= ne; ++k) {
            out.emplace_back(-0.5 * (ne + k), 0.5 * (-ne + k + 1));
            for (int n : {1, 3})
                out.emplace_back(-0.5 * (ne + k + n), 0.5 * (-ne + k - n + 1));
        }
    for (int n = 0; n <= 3; ++n) {
        out.emplace_back(-0.5 * (n + 1), 0.5 * n);
        out.emplace_back(-0.5 * (n + 2), 0.5 * (n - 1));
    }
    return out;
}

} // namespace

TEST(UpperGammaZero, SpecExamples) {
    EXPECT_NEAR(upper_gamma_zero(1.0), 0.219383934, 1e-9);
    EXPECT_NEAR(upper_gamma_zero(10.0), 4.15697e-6, 1e-11);
}

TEST(UpperGammaZero, MatchesBoostExpint) {
    for (double x : {1e-6, 1e-3, 0.1, 0.5, 0.99, 1.0, 1.01, 2.0, 5.0, 10.0, 30.0, 50.0, 300.0})
        EXPECT_LE(rel(upper_gamma_zero(x), boost::math::expint(1, x)), 1e-12) << x;
}

TEST(UpperGammaZero, StrictlyDecreasingAndPositive) {
    double prev = upper_gamma_zero(1e-6);
    for (double x = 1e-6 * 1.05; x <= 50.0; x *= 1.05) {
        const double v = upper_gamma_zero(x);
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, prev) << x;
        prev = v;
    }
}

TEST(UpperGammaZero, ErrorsDistinguishPoleFromDomain) {
    EXPECT_THROW(upper_gamma_zero(0.0), PoleError);
    try {
        upper_gamma_zero(-1.0);
        FAIL();
    } catch (const PoleError &) {
        FAIL() << "negative argument reported as a pole";
    } catch (const DomainError &) {
    }
}

TEST(UpperGammaZero, ScaledFormConsistent) {
    for (double x : {0.2, 1.0, 3.0, 40.0})
        EXPECT_LE(rel(exp_scaled_upper_gamma_zero(x), std::exp(x) * boost::math::expint(1, x)), 1e-12);
    EXPECT_LE(rel(exp_scaled_upper_gamma_zero(800.0), 1.0 / 801.0), 2e-6); // e^x E1(x) ~ 1/(x+1)
}

TEST(WhittakerW, ClosedFormIdentity) {
    EXPECT_LE(rel(whittaker_w(0.0, 0.5, 2.0), std::exp(-1.0)), 1e-13);
    for (double z : {0.01, 0.7, 9.0}) EXPECT_LE(rel(whittaker_w(0.0, 0.5, z), std::exp(-z / 2)), 1e-13);
}

TEST(WhittakerW, IntegralOracleAtSpecPoint) {
    EXPECT_LE(rel(whittaker_w(-0.5, 0.0, 1.0), w_oracle(-0.5, 0.0, 1.0)), 1e-10);
}

TEST(WhittakerW, IntegralOracleOnLattice) {
    for (auto [k, m] : lattice())
        for (double z : {1e-3, 0.05, 0.5, 1.0, 3.0, 12.0, 50.0})
            EXPECT_LE(rel(whittaker_w(k, m, z), w_oracle(k, m, z)), 1e-10) << k << ' ' << m << ' ' << z;
}

TEST(WhittakerW, SymmetricInMu) {
    for (auto [k, m] : lattice())
        for (double z = 1e-3; z <= 50.0; z *= 2.5)
            EXPECT_LE(rel(whittaker_w(k, -m, z), whittaker_w(k, m, z)), 1e-12) << k << ' ' << m << ' ' << z;
}

TEST(WhittakerW, RejectsUnsupportedAndBadDomain) {
    EXPECT_THROW(whittaker_w(-3.0, 1.0, 1.0), UnsupportedParameters);  // mu - kappa + 1/2 not integral
    EXPECT_THROW(whittaker_w(0.3, 0.5, 1.0), UnsupportedParameters);   // off the half-integer grid
    EXPECT_THROW(whittaker_w(-0.5, 0.0, 0.0), DomainError);
    EXPECT_THROW(whittaker_w(-0.5, 0.0, -2.0), DomainError);
}

TEST(WhittakerW, FixtureGrid) {
    const auto checks = validation::specfun_checks(std::string(RISSEC_DATA_DIR) + "/specfun_grid.csv");
    for (const auto &c : checks) EXPECT_TRUE(c.pass) << validation::report_line(c);
}

TEST(ErfExact, Examples) {
    EXPECT_EQ(erf_exact(0.0), 0.0);
    EXPECT_NEAR(erf_exact(1.0), 0.842700793, 1e-9);
    EXPECT_NEAR(erf_exact(1.0), boost::math::erf(1.0), 1e-14);
    EXPECT_EQ(erf_exact(40.0), 1.0);
    EXPECT_EQ(erf_exact(-40.0), -1.0);
}

TEST(ErfExact, ComplementSumsToOne) {
    for (double x = -6.0; x <= 6.0; x += 0.01) EXPECT_LE(std::abs(erf_exact(x) + erfc_exact(x) - 1.0), 1e-15);
}

TEST(Erfcx, MatchesDirectProductAndAsymptote) {
    for (double x : {-3.0, -0.5, 0.0, 0.5, 2.0, 10.0, 25.0})
        EXPECT_LE(rel(erfcx(x), std::exp(x * x) * boost::math::erfc(x)), 1e-13) << x;
    EXPECT_LE(rel(erfcx(25.999), erfcx(26.001)), 1e-3);
    EXPECT_LE(rel(erfcx(1e4), 1.0 / (1e4 * std::sqrt(std::numbers::pi))), 1e-8);
}

TEST(ErfApprox, Coefficients) {
    const ErfApproxCoeffs c;
    EXPECT_EQ(c.theta[0], 1.0);
    EXPECT_EQ(c.theta[1], 2.0);
    EXPECT_EQ(c.theta[2], 20.0 / 3.0);
    EXPECT_EQ(c.theta[3], 20.0 / 17.0);
    EXPECT_DOUBLE_EQ(c.upsilon[0] + c.upsilon[1] + c.upsilon[2] + c.upsilon[3], 7.0 / 8.0);
}

TEST(ErfApprox, Examples) {
    EXPECT_DOUBLE_EQ(erf_approx(0.0), 0.125);
    EXPECT_NEAR(erf_approx(5.0), erf_exact(5.0), 1e-6);
    EXPECT_EQ(erf_approx(-5.0), -erf_approx(5.0));
    for (double x : {0.1, 0.9, 2.0}) EXPECT_EQ(erf_approx(-x), -erf_approx(x));
}

TEST(ErfApprox, FrozenMaxError) {
    double worst = 0.0;
    for (int i = 0; i <= 600000; ++i) worst = std::max(worst, std::abs(erf_approx(i * 1e-5) - erf_exact(i * 1e-5)));
    EXPECT_LE(worst, validation::kErfApproxMaxError);
    EXPECT_GE(worst, validation::kErfApproxMaxError - 1e-12);
}

TEST(Quadrature, MatchesBoostGaussKronrod) {
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x) / (1.0 + x * x); };
    const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 4.0, 15, 1e-14);
    const auto r = quad::integrate(f, 0.0, 4.0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, ref, 1e-12);
}

TEST(Quadrature, SemiInfinite) {
    const auto r = quad::integrate_semi_infinite([](double x) { return x * x * std::exp(-x / 3.0); }, 3.0);
    EXPECT_NEAR(r.value, 54.0, 1e-9); // 2 * 3^3
    EXPECT_THROW(quad::integrate_semi_infinite_or_throw([](double x) { return 1.0 / (1.0 + x); }, 1.0,
                                                        quad::Options{1e-14, 1e-14, 20}, "divergent"),
                 ComputationError);
}
