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
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rissec/analytics.hpp"
#include "rissec/montecarlo.hpp"
#include "rissec/validation.hpp"

using namespace rissec;
using namespace rissec::analytics;
using CS = CombiningScheme;

namespace {

DerivedParams raw_point(double omega_p, double omega_e, double lambda_e, int np, int ne, double r_s = 1.0,
                        double vartheta = 0.5) {
    RawParams r;
    r.omega_p = omega_p;
    r.omega_e = omega_e;
    r.lambda_e = lambda_e;
    r.lambda_p_param = 31.0;
    r.vartheta = vartheta;
    r.r_s = r_s;
    r.n_pt = np;
    r.n_eav = ne;
    return params_from_raw(r);
}

double boost_pdf_mass(CS s, const DerivedParams &p) {
    auto f = [&](double x) { return pdf_gamma_e(x, s, p); };
    const double knee = p.omega_e / p.lambda_e;
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    return ts.integrate(f, 0.0, knee) + es.integrate([&](double x) { return f(knee + x); });
}

} // namespace

TEST(CdfGammaP, Examples) {
    auto p = raw_point(1.0, 1.0, 1.0, 1, 1, 1.0, 1.0);
    EXPECT_NEAR(cdf_gamma_p(1.0, p), 1.0 - std::exp(-1.0), 1e-15);
    EXPECT_EQ(cdf_gamma_p(0.0, p), 0.0);
    p = raw_point(2.0, 1.0, 1.0, 3, 1, 1.0, 1.0);
    EXPECT_NEAR(cdf_gamma_p(2.0, p), std::pow(1.0 - std::exp(-1.0), 3), 1e-15);
}

TEST(CdfGammaP, ProductFormEqualsBinomialSum) {
    for (int np = 1; np <= kMaxAntennas; ++np) {
        const auto p = raw_point(3.0, 1.0, 1.0, np, 1, 1.0, 0.7);
        for (double x : {0.1, 1.0, 4.0, 20.0}) {
            double s = 0.0;
            for (int n = 0; n < np; ++n) s += analytics::detail::cdf_weight(np, n) * (1.0 - std::exp(-(n + 1) * x / p.phi_cap));
            EXPECT_NEAR(cdf_gamma_p(x, p), s, 1e-12) << np << ' ' << x;
        }
    }
}

TEST(PdfGammaE, NormalisesAgainstBoostIntegrator) {
    for (int ne : {1, 2, 3, 5, 8})
        for (auto s : {CS::SC, CS::MRC}) {
            const auto p = raw_point(10.0, 4.8, 48.9, 1, ne);
            EXPECT_NEAR(boost_pdf_mass(s, p), 1.0, 1e-9) << ne << ' ' << to_string(s);
        }
}

TEST(PdfGammaE, SingleAntennaSchemesCoincide) {
    const auto p = raw_point(10.0, 4.8, 48.9, 2, 1);
    for (double x : {0.0, 1e-3, 0.1, 1.0, 10.0})
        EXPECT_NEAR(pdf_gamma_e(x, CS::SC, p), pdf_gamma_e(x, CS::MRC, p), 1e-12 * (1 + pdf_gamma_e(x, CS::SC, p)));
    EXPECT_NEAR(sop_closed(CS::SC, p).raw, sop_closed(CS::MRC, p).raw, 1e-12);
}

TEST(SopClosed, VanishingJammingLimit) {
    // No jamming: gamma_E exponential with mean omega_e, single antennas.
    const auto p = raw_point(50.0, 3.0, 1e-8, 1, 1, 1.0, 0.5);
    const double phi = p.phi_cap;
    const double expected = 1.0 - std::exp(-p.alpha / phi) / (1.0 + p.beta * p.omega_e / phi);
    EXPECT_NEAR(sop_closed(CS::SC, p).raw, expected, 1e-6);
    EXPECT_NEAR(sop_closed(CS::MRC, p).raw, expected, 1e-6);
}

TEST(SopClosed, TendsToOneForWeakPrimary) {
    for (auto s : {CS::SC, CS::MRC}) EXPECT_GE(sop_closed(s, raw_point(1e-9, 5.0, 40.0, 3, 3)).value, 1.0 - 1e-6);
}

TEST(SopClosed, MatchesQuadratureAcrossAntennaCounts) {
    for (int np = 1; np <= kMaxAntennas; np += 3)
        for (int ne = 1; ne <= kMaxAntennas; ne += 3)
            for (auto s : {CS::SC, CS::MRC}) {
                const auto p = raw_point(300.0, 8.0, 30.0, np, ne);
                EXPECT_NEAR(sop_closed(s, p).raw, sop_quadrature(s, p), 1e-8) << np << ne << to_string(s);
                EXPECT_NEAR(pnsc_closed(s, p).raw, pnsc_quadrature(s, p), 1e-8) << np << ne << to_string(s);
            }
}

TEST(SopQuadrature, PointMassDensity) {
    const auto p = raw_point(20.0, 5.0, 40.0, 3, 2);
    QuadratureConfig q;
    q.density = EavDensity::PointMassAtZero;
    EXPECT_NEAR(sop_quadrature(CS::SC, p, q), std::pow(1.0 - std::exp(-p.alpha / p.phi_cap), 3), 1e-16);
    EXPECT_DOUBLE_EQ(pnsc_quadrature(CS::MRC, p, q), 1.0);
}

TEST(SopQuadrature, StableUnderSubdivisionDoubling) {
    const auto p = raw_point(1000.0, 10.0, 48.9, 3, 3);
    QuadratureConfig a, b;
    b.max_subdivisions = 2 * a.max_subdivisions;
    for (auto s : {CS::SC, CS::MRC}) EXPECT_NEAR(sop_quadrature(s, p, a), sop_quadrature(s, p, b), 1e-10);
}

TEST(Pnsc, EqualsComplementOfZeroRateSop) {
    for (auto s : {CS::SC, CS::MRC})
        for (double wp : {1.0, 30.0, 1000.0}) {
            const auto z = raw_point(wp, 6.0, 25.0, 3, 3, 0.0);
            EXPECT_NEAR(pnsc_closed(s, z).raw, 1.0 - sop_closed(s, z).raw, 1e-12);
        }
}

TEST(SopClosed, LiteralScReportsOverflowingTerm) {
    auto p = raw_point(1e-3, 1e3, 1e-3, 3, 3);
    p.options = ModelOptions::strict();
    try {
        sop_closed(CS::SC, p);
        FAIL() << "expected ComputationError";
    } catch (const ComputationError &e) {
        EXPECT_NE(std::string(e.what()).find("(n="), std::string::npos) << e.what();
    }
}

TEST(EavMoment, MatchesQuadrature) {
    const auto p = raw_point(10.0, 4.8, 48.9, 3, 3);
    for (auto s : {CS::SC, CS::MRC})
        for (int n = 0; n <= 3; ++n) {
            const double q = analytics::detail::integrate_against_eav([&](double x) { return std::pow(x, n); }, s, p,
                                                           QuadratureConfig{}, "moment");
            EXPECT_LE(std::abs(eav_moment(n, s, p) - q) / q, 1e-8) << n << to_string(s);
        }
}

TEST(SopAsymptotic, SlopeAndTail) {
    for (int np : {1, 2, 3})
        for (auto s : {CS::SC, CS::MRC}) {
            const auto a1 = sop_asymptotic(s, validation::fig2_params(20, 50.0, np));
            const auto a2 = sop_asymptotic(s, validation::fig2_params(20, 60.0, np));
            EXPECT_DOUBLE_EQ(a1.diversity_order, np);
            EXPECT_NEAR(std::log10(a2.value / a1.value), -np, 1e-12);
            EXPECT_NEAR(a1.array_gain, a2.array_gain, 1e-12 * a1.array_gain);
            const auto p60 = validation::fig2_params(20, 60.0, np);
            EXPECT_NEAR(sop_closed(s, p60).raw / a2.value, 1.0, 0.05) << np << to_string(s);
            EXPECT_NEAR(validation::sop_slope(s, 20, np, 50.0, 60.0), -np, 0.1) << np << to_string(s);
        }
}

TEST(SopAsymptotic, StrictScHasNoEvaluableForm) {
    auto p = validation::fig2_params(20, 30.0);
    p.options = ModelOptions::strict();
    EXPECT_THROW(sop_asymptotic(CS::SC, p), UnsupportedParameters);
    EXPECT_NO_THROW(sop_asymptotic(CS::MRC, p));
}

TEST(CdfPsiD, MonotoneWithLimits) {
    const auto p = derive_params(NetworkGeometry{}, RadioConfig{});
    double prev = -1.0;
    for (double x = 0.0; x <= 5000.0; x += 5.0) {
        const double v = cdf_psi_d(x, p);
        EXPECT_GE(v, prev - 1e-15);
        prev = v;
    }
    EXPECT_LE(cdf_psi_d(0.0, p), 1e-12);
    EXPECT_NEAR(cdf_psi_d(1e5, p), 1.0, 1e-10);
    EXPECT_THROW(cdf_psi_d(-1.0, p), DomainError);
}

TEST(CdfPsiD, RequiresGeometryDerivedParameters) {
    const auto p = raw_point(10.0, 4.8, 48.9, 3, 3);
    EXPECT_THROW(cdf_psi_d(1.0, p), MissingParameter);
    EXPECT_THROW(sn_outage_closed(p), MissingParameter);
}

TEST(CdfPsiD, AgreesWithSamplesOfItsOwnModel) {
    // (Omega1 chi1 + Omega2 chi2)^2 with chi1 ~ N(eps, sigma^2), chi2 Rayleigh, E[chi2^2] = 2 delta.
    const auto p = derive_params(NetworkGeometry{}, RadioConfig{});
    std::mt19937_64 gen(7);
    std::normal_distribution<double> chi1(*p.epsilon_clt, std::sqrt(*p.sigma2_clt));
    std::exponential_distribution<double> e(1.0);
    std::vector<double> xs(200000);
    for (auto &x : xs) {
        const double v = *p.omega1 * chi1(gen) + *p.omega2 * std::sqrt(2.0 * *p.delta * e(gen));
        x = v * v;
    }
    const double ks = montecarlo::ks_distance(xs, [&](double x) { return cdf_psi_d(x, p); });
    EXPECT_LE(ks, 0.006);
}

TEST(SnOutage, ClosedMatchesApproxQuadrature) {
    for (int n : {20, 30, 50})
        for (double q : {-20.0, -12.0, -6.0, 0.0}) {
            const auto p = derive_params(NetworkGeometry{}, validation::fig4_radio(n, q));
            const auto r = sn_outage_closed(p);
            EXPECT_NEAR(r.raw, sn_outage_quadrature(p, ErfKind::Approx), 1e-5) << n << ' ' << q;
            EXPECT_NEAR(r.raw, r.a1 - r.a2 - r.a3, 1e-15);
        }
}

TEST(SnOutage, Limits) {
    EXPECT_LE(sn_outage_closed(derive_params(NetworkGeometry{}, validation::fig4_radio(30, 40.0))).value, 1e-6);
    RadioConfig r = validation::fig4_radio(30, -10.0);
    r.r_d = 0.0;
    const auto zero = sn_outage_closed(derive_params(NetworkGeometry{}, r));
    EXPECT_EQ(zero.value, 0.0);
    EXPECT_EQ(sn_outage_quadrature(derive_params(NetworkGeometry{}, r)), 0.0);
}

TEST(SnOutage, DecreasesWithElements) {
    for (double q : {-15.0, -8.0})
        EXPECT_GT(sn_outage_closed(derive_params(NetworkGeometry{}, validation::fig4_radio(20, q))).value,
                  sn_outage_closed(derive_params(NetworkGeometry{}, validation::fig4_radio(50, q))).value);
}

TEST(SnOutage, NegativeRadicandNamesCoefficient) {
    auto p = derive_params(NetworkGeometry{}, RadioConfig{});
    p.sigma2_clt = -100.0;
    try {
        outage_coeffs(p);
        FAIL() << "expected ComputationError";
    } catch (const ComputationError &e) {
        EXPECT_NE(std::string(e.what()).find("xi1"), std::string::npos) << e.what();
    }
}
