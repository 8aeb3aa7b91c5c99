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

// Numerical integration used by the quadrature oracles and the Tricomi U
// evaluation: adaptive Gauss-Kronrod (7/15) on finite intervals, an
// exponential map for [0, inf), and an exp-sinh rule for smooth positive
// integrands on [0, inf).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "rissec/error.hpp"

namespace rissec::quad {

struct Options {
    double abs_tol = 1e-11;
    double rel_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

// Kronrod 15-point abscissae (symmetric, last is the centre) and weights,
// with the embedded Gauss 7-point weights on the odd-indexed nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment &o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod_15(F &f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(centre - dx) + f(centre + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    // QUADPACK-style error scaling is too pessimistic for the smooth
    // integrands here; the raw Gauss/Kronrod difference is kept.
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Adaptive Gauss-Kronrod on [a, b]. Bisects the segment with the largest
/// error estimate until the summed estimate meets max(abs_tol, rel_tol*|I|).
template <class F>
Result integrate(F &&f, double a, double b, const Options &opt = {}) {
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gauss_kronrod_15(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int splits = 0;
    auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
    while (error > target() && splits < opt.max_subdivisions) {
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst); // cannot split further in floating point
            break;
        }
        auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    // Re-sum from the segments to shed accumulated update roundoff.
    double sum = 0.0, err = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sum, err, splits, err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum))};
}

/// Integral over [0, inf) through x = -scale*ln(u), u in (0, 1].
/// `scale` should be of the order of the integrand's decay length.
template <class F>
Result integrate_semi_infinite(F &&f, double scale, const Options &opt = {}) {
    auto mapped = [&](double u) {
        const double x = -scale * std::log(u);
        const double v = f(x);
        return v == 0.0 ? 0.0 : v * scale / u;
    };
    return integrate(mapped, 0.0, 1.0, opt);
}

/// Same as integrate_semi_infinite but throws ComputationError on
/// non-convergence, reporting the achieved error estimate.
template <class F>
double integrate_semi_infinite_or_throw(F &&f, double scale, const Options &opt,
                                        const char *what) {
    const auto r = integrate_semi_infinite(std::forward<F>(f), scale, opt);
    if (!r.converged || !std::isfinite(r.value)) {
        std::ostringstream os;
        os << what << ": quadrature did not converge (achieved error " << r.abs_error
           << " after " << r.subdivisions << " subdivisions)";
        throw ComputationError(os.str());
    }
    return r.value;
}

/// Exp-sinh rule for I = int_0^inf exp(log_f(t)) dt with log_f smooth and the
/// integrand unimodal around `centre`. Returns log(I) so that callers can
/// rescale without overflow. Substitution t = centre*exp(pi/2*sinh(s)).
template <class LogF>
double log_integrate_exp_sinh(LogF &&log_f, double centre, double rel_tol = 1e-14) {
    constexpr double half_pi = 0.5 * std::numbers::pi;
    auto log_term = [&](double s) {
        const double arg = half_pi * std::sinh(s);
        const double t = centre * std::exp(arg);
        if (!(t > 0.0) || !std::isfinite(t)) return -std::numeric_limits<double>::infinity();
        return log_f(t) + std::log(t) + std::log(half_pi * std::cosh(s));
    };
    const double ref = log_term(0.0);
    // Collect nodes on the coarsest grid, then refine by halving h.
    double h = 0.5;
    auto sweep = [&](double start, double step) {
        double acc = 0.0;
        for (int dir : {1, -1}) {
            for (int i = 0;; ++i) {
                const double s = dir * (start + i * step);
                if (dir == -1 && s == 0.0) continue;
                const double v = std::exp(log_term(s) - ref);
                acc += v;
                if ((v < 1e-20 && std::abs(s) > 1.0) || std::abs(s) > 8.0) break;
            }
        }
        return acc;
    };
    double sum = sweep(0.0, h); // includes s = 0 once
    double estimate = h * sum;
    for (int level = 0; level < 12; ++level) {
        // new nodes sit at odd multiples of h/2
        double extra = 0.0;
        for (int dir : {1, -1}) {
            for (int i = 0;; ++i) {
                const double s = dir * (0.5 * h + i * h);
                const double v = std::exp(log_term(s) - ref);
                extra += v;
                if ((v < 1e-20 && std::abs(s) > 1.0) || std::abs(s) > 8.0) break;
            }
        }
        sum += extra;
        h *= 0.5;
        const double next = h * sum;
        const bool done = std::abs(next - estimate) <= rel_tol * std::abs(next) && level >= 2;
        estimate = next;
        if (done) break;
    }
    return ref + std::log(estimate);
}

} // namespace rissec::quad
