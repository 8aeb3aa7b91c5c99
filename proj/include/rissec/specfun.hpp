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


#pragma once

// Special functions needed by the closed-form expressions: the upper
// incomplete gamma function at order zero, the Whittaker W function on the
// half-integer lattice, and the error function with its four-term
// exponential approximation.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rissec/error.hpp"
#include "rissec/quadrature.hpp"

namespace rissec::specfun {

// ---------------------------------------------------------------------------
// Upper incomplete gamma at order zero, Gamma(0, x) = E1(x).
// ---------------------------------------------------------------------------

namespace detail {

inline void check_gamma_zero_arg(double x) {
    if (x == 0.0) throw PoleError("upper_gamma_zero: pole at x = 0");
    if (!(x > 0.0)) throw DomainError("upper_gamma_zero: requires x > 0");
}

// Power series: E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!).
inline double e1_series(double x) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        const double add = term / k;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

// e^x E1(x) by the modified Lentz continued fraction
// 1/(x+1- 1/(x+3- 4/(x+5- ...))).
inline double scaled_e1_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h;
    }
    throw ComputationError("upper_gamma_zero: continued fraction did not converge");
}

} // namespace detail

/// Gamma(0, x) for x > 0. Series below 1, continued fraction above.
inline double upper_gamma_zero(double x) {
    detail::check_gamma_zero_arg(x);
    if (x < 1.0) return detail::e1_series(x);
    return std::exp(-x) * detail::scaled_e1_continued_fraction(x);
}

/// e^x * Gamma(0, x), finite for every x > 0 where Gamma(0, x) underflows.
inline double exp_scaled_upper_gamma_zero(double x) {
    detail::check_gamma_zero_arg(x);
    if (x < 1.0) return std::exp(x) * detail::e1_series(x);
    return detail::scaled_e1_continued_fraction(x);
}

// ---------------------------------------------------------------------------
// Tricomi U and Whittaker W
// ---------------------------------------------------------------------------

/// Largest first parameter of U accepted on the lattice. Covers N_P, N_E <= 8
/// in every expression (the asymptotic MRC gain reaches a = N_E + N_P).
inline constexpr int kMaxLatticeA = 40;

/// log U(a, b, z) for integer a >= 1, integer b, z > 0, from
/// U = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt
/// evaluated with the exp-sinh rule centred on the integrand's mode.
inline double log_tricomi_u(int a, int b, double z) {
    if (!(z > 0.0)) throw DomainError("tricomi_u: requires z > 0");
    if (a < 1 || a > kMaxLatticeA || std::abs(b) > 2 * kMaxLatticeA)
        throw UnsupportedParameters("tricomi_u: parameters outside the integer lattice");
    if (b == a + 1) return -a * std::log(z); // U(a, a+1, z) = z^-a exactly
    const double am1 = a - 1.0;
    const double pw = b - a - 1.0;
    // mode of t^a (1+t)^pw e^{-zt} (the t-weighted integrand of the map)
    const double lin = b - 1.0 - z;
    const double centre = (lin + std::sqrt(lin * lin + 4.0 * z * a)) / (2.0 * z);
    auto log_f = [=](double t) { return -z * t + am1 * std::log(t) + pw * std::log1p(t); };
    return quad::log_integrate_exp_sinh(log_f, centre) - std::lgamma(static_cast<double>(a));
}

inline double tricomi_u(int a, int b, double z) { return std::exp(log_tricomi_u(a, b, z)); }

namespace detail {

inline bool half_integer(double v, int &twice) {
    const double t = 2.0 * v;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-12) return false;
    twice = static_cast<int>(r);
    return true;
}

} // namespace detail

/// log W_{kappa,mu}(z) for z > 0 and (kappa, mu) on the half-integer
/// lattice, through W = e^{-z/2} z^{mu+1/2} U(mu-kappa+1/2, 1+2mu, z).
/// When mu - kappa + 1/2 < 1 the Kummer image (mu -> -mu) is used instead.
/// Anything off the lattice is rejected rather than approximated.
inline double log_whittaker_w(double kappa, double mu, double z) {
    if (!(z > 0.0)) throw DomainError("whittaker_w: requires z > 0");
    int two_k = 0, two_m = 0;
    if (!detail::half_integer(kappa, two_k) || !detail::half_integer(mu, two_m))
        throw UnsupportedParameters("whittaker_w: kappa and mu must be multiples of 1/2");
    // a = mu - kappa + 1/2 must be an integer, i.e. two_m - two_k odd
    if (((two_m - two_k) % 2 + 2) % 2 != 1)
        throw UnsupportedParameters("whittaker_w: mu - kappa + 1/2 must be an integer");
    int a = (two_m - two_k + 1) / 2;
    int b = 1 + two_m;
    double mu_eff = 0.5 * two_m;
    if (a < 1) {
        a = (-two_m - two_k + 1) / 2;
        b = 1 - two_m;
        mu_eff = -mu_eff;
        if (a < 1)
            throw UnsupportedParameters("whittaker_w: no representation with a >= 1");
    }
    if (a > kMaxLatticeA || std::abs(two_m) > 2 * kMaxLatticeA)
        throw UnsupportedParameters("whittaker_w: parameters beyond the supported lattice");
    return -0.5 * z + (mu_eff + 0.5) * std::log(z) + log_tricomi_u(a, b, z);
}

/// Whittaker W_{kappa,mu}(z); same domain as log_whittaker_w (W > 0 there).
inline double whittaker_w(double kappa, double mu, double z) {
    return std::exp(log_whittaker_w(kappa, mu, z));
}

// ---------------------------------------------------------------------------
// Error function
// ---------------------------------------------------------------------------

inline double erf_exact(double x) { return std::erf(x); }
inline double erfc_exact(double x) { return std::erfc(x); }

/// Scaled complementary error function e^{x^2} erfc(x).
inline double erfcx(double x) {
    if (x < 26.0) {
        if (x < -26.0) return std::numeric_limits<double>::infinity();
        return std::exp(x * x) * std::erfc(x);
    }
    // asymptotic series; the terms shrink by (2k-1)/(2x^2) < 0.04 here
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 12; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
    }
    return sum / (x * std::sqrt(std::numbers::pi));
}

/// Coefficient vectors of the four-term exponential erf approximation.
struct ErfApproxCoeffs {
    std::array<double, 4> theta{1.0, 2.0, 20.0 / 3.0, 20.0 / 17.0};
    std::array<double, 4> upsilon{1.0 / 8.0, 1.0 / 4.0, 1.0 / 4.0, 1.0 / 4.0};
};

inline constexpr ErfApproxCoeffs kErfApprox{};

/// 1 - sum_m upsilon_m exp(-theta_m x^2) for x >= 0, odd extension below.
/// Exactly 0 is on the upper branch, so erf_approx(0) = 1/8.
inline double erf_approx(double x, const ErfApproxCoeffs &c = kErfApprox) {
    const double ax = std::abs(x);
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += c.upsilon[m] * std::exp(-c.theta[m] * ax * ax);
    return x >= 0.0 ? 1.0 - s : -1.0 + s;
}

} // namespace rissec::specfun
