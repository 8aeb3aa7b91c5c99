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

// Physical-channel Monte-Carlo simulator. Fading is drawn per element and
// per antenna, the RIS is co-phased toward the secondary receiver, and every
// composite quantity (jamming, interference, cascade) is formed from the
// draws rather than from the exponential or Gaussian approximations.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "rissec/analytics.hpp"
#include "rissec/error.hpp"
#include "rissec/rng.hpp"
#include "rissec/system_model.hpp"

namespace rissec::montecarlo {

using cplx = std::complex<double>;
using analytics::CombiningScheme;

enum class ScenarioKind { IdealPhase, UniformPhaseError, NoDirectLink, NoRis };

struct Scenario {
    ScenarioKind kind = ScenarioKind::IdealPhase;
    double bound = std::numbers::pi / 4.0; // phase-error half width (radians)

    static Scenario ideal() { return {}; }
    static Scenario phase_error(double b = std::numbers::pi / 4.0) {
        return {ScenarioKind::UniformPhaseError, b};
    }
    static Scenario no_direct_link() { return {ScenarioKind::NoDirectLink}; }
    static Scenario no_ris() { return {ScenarioKind::NoRis}; }
};

inline void validate(const Scenario &s) {
    if (s.kind == ScenarioKind::UniformPhaseError &&
        !(s.bound > 0.0 && s.bound <= std::numbers::pi))
        throw ValidationError("bound", "phase-error bound must lie in (0, pi]");
}

enum class Metric { SOP, PNSC, SnOutage };

/// One draw of every fading coefficient and the resulting SNR/SINR values.
/// h_se_direct holds the single S->Eav direct path; the RIS and direct
/// jamming combine into one term seen by all eavesdropper antennas.
struct ChannelRealization {
    std::vector<cplx> h_s, h_d, h_p_ris, h_e_ris;
    std::vector<double> theta; // applied RIS phase shifts
    std::vector<cplx> h_pp, h_pe, h_se_direct;
    cplx h_sd{}, h_sp{};
    double cascade_sum = 0.0; // sum_i |h_si||h_di|
    double psi_d = 0.0, psi_p = 0.0, psi_e = 0.0;
    double gamma_d = 0.0, gamma_p = 0.0, gamma_e_sc = 0.0, gamma_e_mrc = 0.0;
    double p_s_instant = 0.0;

    // composite sums independent of geometry and powers
    cplx u_d{}, u_p{}, u_e{};
    double max_pp = 0.0;
};

struct EstimateWithCI {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMinTrials = 10'000;
inline constexpr std::uint64_t kChunk = 8192;

namespace detail {

/// Amplitude scales of every link for one (geometry, radio) point.
struct LinkScales {
    double cd, sd, cp, sp, l1, l2;
    double omega_e, omega_p, q, sigma2_d, sigma2_p, beta;
};

inline LinkScales link_scales(const NetworkGeometry &g, const RadioConfig &r) {
    using rissec::detail::amp_loss;
    const DerivedParams p = derive_params(g, r);
    LinkScales s{};
    s.cd = amp_loss(g.d_sr * g.d_rd, g.d_o, 2, g.eta);
    s.sd = amp_loss(g.d_sd, g.d_o, 1, g.eta);
    s.cp = amp_loss(g.d_sr * g.d_rp, g.d_o, 2, g.eta);
    s.sp = amp_loss(g.d_sp, g.d_o, 1, g.eta);
    s.l1 = *p.lambda1;
    s.l2 = *p.lambda2;
    s.omega_e = p.omega_e;
    s.omega_p = p.omega_p;
    s.q = r.q_threshold;
    s.sigma2_d = r.sigma2_d;
    s.sigma2_p = r.sigma2_p;
    s.beta = p.beta;
    return s;
}

inline void resize(ChannelRealization &c, int n, int np, int ne) {
    c.h_s.resize(n);
    c.h_d.resize(n);
    c.h_p_ris.resize(n);
    c.h_e_ris.resize(n);
    c.theta.resize(n);
    c.h_pp.resize(np);
    c.h_pe.resize(ne);
    c.h_se_direct.resize(1);
}

/// Draw all gains of one trial in a fixed order (every scenario consumes
/// the same stream, so scenarios share their random numbers).
inline void draw(ChannelRealization &c, const RadioConfig &r, const Scenario &sc,
                 std::uint64_t trial, std::uint64_t seed) {
    const int n = r.n_ris;
    resize(c, n, r.n_pt, r.n_eav);
    SplitMix64 rng = trial_rng(seed, trial);
    std::exponential_distribution<double> unit_power(1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit_sym(-1.0, 1.0);
    // CN(0, 1): |h|^2 ~ Exp(1) with independent uniform phase
    auto gain = [&](double power) { return std::polar(std::sqrt(power * unit_power(rng)), angle(rng)); };

    for (int i = 0; i < n; ++i) c.h_s[i] = gain(1.0);
    for (int i = 0; i < n; ++i) c.h_d[i] = gain(1.0);
    for (int i = 0; i < n; ++i) c.h_p_ris[i] = gain(1.0);
    for (int i = 0; i < n; ++i) c.h_e_ris[i] = gain(1.0);
    for (int i = 0; i < n; ++i) c.theta[i] = unit_sym(rng); // phase-error draw
    for (auto &h : c.h_pp) h = gain(1.0);
    for (auto &h : c.h_pe) h = gain(1.0);
    c.h_se_direct[0] = gain(1.0);
    c.h_sd = gain(2.0 * r.delta); // Rayleigh magnitude with E|h|^2 = 2 delta
    c.h_sp = gain(1.0);

    if (sc.kind == ScenarioKind::NoDirectLink) c.h_sd = 0.0;
    const double err_scale = sc.kind == ScenarioKind::UniformPhaseError ? sc.bound : 0.0;
    const double ref = std::arg(c.h_sd);
    cplx ud{}, up{}, ue{};
    double casc = 0.0;
    for (int i = 0; i < n; ++i) {
        // co-phase S->RIS->D with the direct S->D path
        const double th = ref - std::arg(c.h_s[i]) - std::arg(c.h_d[i]) + err_scale * c.theta[i];
        c.theta[i] = th;
        const cplx rot = std::polar(1.0, th) * c.h_s[i];
        ud += rot * c.h_d[i];
        up += rot * c.h_p_ris[i];
        ue += rot * c.h_e_ris[i];
        casc += std::abs(c.h_s[i]) * std::abs(c.h_d[i]);
    }
    if (sc.kind == ScenarioKind::NoRis) ud = up = ue = 0.0;
    c.u_d = ud;
    c.u_p = up;
    c.u_e = ue;
    c.cascade_sum = casc;
    double mx = 0.0;
    for (const auto &h : c.h_pp) mx = std::max(mx, std::norm(h));
    c.max_pp = mx;
}

/// Fill the SNR/SINR fields of a drawn realization for one link-scale set.
inline void evaluate(ChannelRealization &c, const LinkScales &s) {
    const cplx amp_d = s.cd * c.u_d + s.sd * c.h_sd;
    c.psi_d = s.q / s.sigma2_d * std::norm(amp_d);
    c.psi_p = std::norm(s.cp * c.u_p + s.sp * c.h_sp);
    c.p_s_instant = s.q / c.psi_p;
    c.gamma_d = c.psi_d / c.psi_p;
    // interference at PR is p_s * psi_p = Q under the power control
    c.gamma_p = s.omega_p * c.max_pp / (c.p_s_instant * c.psi_p / s.sigma2_p + 1.0);
    c.psi_e = std::norm(s.l1 * c.u_e + s.l2 * c.h_se_direct[0]);
    double mx = 0.0, sum = 0.0;
    for (const auto &h : c.h_pe) {
        const double x = s.omega_e * std::norm(h);
        mx = std::max(mx, x);
        sum += x;
    }
    c.gamma_e_sc = mx / (c.psi_e + 1.0);
    c.gamma_e_mrc = sum / (c.psi_e + 1.0);
}

inline bool hit(Metric m, double gamma_e, const ChannelRealization &c, const LinkScales &s,
                double gamma_th) {
    switch (m) {
    case Metric::SOP: // log2(1 + gP) - log2(1 + gE) < R_s
        return 1.0 + c.gamma_p < s.beta * (1.0 + gamma_e);
    case Metric::PNSC:
        return c.gamma_p > gamma_e;
    case Metric::SnOutage:
        return c.gamma_d <= gamma_th;
    }
    return false;
}

inline unsigned resolve_workers(unsigned workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Run fn(begin, end) over fixed chunks of [0, n_trials) on a thread pool and
/// return the per-chunk results in chunk order. Chunk boundaries do not
/// depend on the worker count, so ordered reductions are reproducible.
template <class Partial, class Fn>
std::vector<Partial> run_chunks(std::uint64_t n_trials, unsigned workers, Fn &&fn) {
    const std::uint64_t n_chunks = (n_trials + kChunk - 1) / kChunk;
    std::vector<Partial> out(n_chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        try {
            for (std::uint64_t c = next++; c < n_chunks; c = next++) {
                const std::uint64_t b = c * kChunk;
                out[c] = fn(b, std::min(n_trials, b + kChunk));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_chunks;
        }
    };
    const unsigned w = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(n_chunks, 1)));
    if (w <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) pool.emplace_back(body);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

inline EstimateWithCI make_estimate(std::uint64_t hits, std::uint64_t n, std::uint64_t seed) {
    EstimateWithCI e;
    e.estimate = static_cast<double>(hits) / static_cast<double>(n);
    e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(n));
    e.n_trials = n;
    e.seed = seed;
    return e;
}

inline void check_same_shape(const std::vector<RadioConfig> &points) {
    for (const auto &r : points) {
        validate(r);
        if (r.n_ris != points.front().n_ris || r.n_pt != points.front().n_pt ||
            r.n_eav != points.front().n_eav || r.delta != points.front().delta)
            throw ValidationError("points", "sweep points must share n_ris, n_pt, n_eav and delta");
    }
}

} // namespace detail

/// One realization, a deterministic function of (seed, trial_index).
inline ChannelRealization sample_realization(const NetworkGeometry &g, const RadioConfig &r,
                                             const Scenario &sc, std::uint64_t trial_index,
                                             std::uint64_t seed) {
    validate(g);
    validate(r);
    validate(sc);
    ChannelRealization c;
    detail::draw(c, r, sc, trial_index, seed);
    detail::evaluate(c, detail::link_scales(g, r));
    return c;
}

/// Indicator-mean estimates at several radio points from one set of draws.
/// Result [i][s] is point i under scheme s (SC = 0, MRC = 1); both schemes
/// coincide for SnOutage.
inline std::vector<std::array<EstimateWithCI, 2>>
estimate_many(Metric metric, const NetworkGeometry &g, const std::vector<RadioConfig> &points,
              const Scenario &sc, std::uint64_t n_trials, std::uint64_t seed,
              unsigned workers = 0) {
    validate(g);
    validate(sc);
    if (points.empty()) throw ValidationError("points", "must be nonempty");
    if (n_trials < kMinTrials) throw ValidationError("n_trials", "must be >= 10000");
    detail::check_same_shape(points);
    std::vector<detail::LinkScales> scales;
    std::vector<double> thresholds;
    for (const auto &r : points) {
        scales.push_back(detail::link_scales(g, r));
        thresholds.push_back(std::exp2(r.r_d) - 1.0);
    }
    const std::size_t np = points.size();
    using Counts = std::vector<std::uint64_t>;
    auto partials = detail::run_chunks<Counts>(n_trials, workers, [&](std::uint64_t b, std::uint64_t e) {
        Counts cnt(2 * np, 0);
        ChannelRealization c;
        for (std::uint64_t t = b; t < e; ++t) {
            detail::draw(c, points.front(), sc, t, seed);
            for (std::size_t i = 0; i < np; ++i) {
                detail::evaluate(c, scales[i]);
                cnt[2 * i] += detail::hit(metric, c.gamma_e_sc, c, scales[i], thresholds[i]);
                cnt[2 * i + 1] += detail::hit(metric, c.gamma_e_mrc, c, scales[i], thresholds[i]);
            }
        }
        return cnt;
    });
    Counts total(2 * np, 0);
    for (const auto &p : partials)
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += p[j];
    std::vector<std::array<EstimateWithCI, 2>> out(np);
    for (std::size_t i = 0; i < np; ++i)
        for (int s = 0; s < 2; ++s) out[i][s] = detail::make_estimate(total[2 * i + s], n_trials, seed);
    return out;
}

inline EstimateWithCI estimate(Metric metric, CombiningScheme scheme, const NetworkGeometry &g,
                               const RadioConfig &r, const Scenario &sc, std::uint64_t n_trials,
                               std::uint64_t seed, unsigned workers = 0) {
    return estimate_many(metric, g, {r}, sc, n_trials, seed, workers)[0][scheme == CombiningScheme::SC ? 0 : 1];
}

// ---------------------------------------------------------------------------
// Composite-quantity statistics
// ---------------------------------------------------------------------------

enum class Quantity { PsiE, PsiP, PsiD, CascadeSum };

struct Moments {
    double mean = 0.0;
    double variance = 0.0; // unbiased
    std::uint64_t n = 0;
};

namespace detail {

inline double quantity_of(Quantity q, const ChannelRealization &c) {
    switch (q) {
    case Quantity::PsiE: return c.psi_e;
    case Quantity::PsiP: return c.psi_p;
    case Quantity::PsiD: return c.psi_d;
    case Quantity::CascadeSum: return c.cascade_sum;
    }
    return 0.0;
}

struct Welford {
    double n = 0, mean = 0, m2 = 0;
    void add(double x) {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    void merge(const Welford &o) {
        if (o.n == 0) return;
        const double tot = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / tot;
        m2 += o.m2 + d * d * n * o.n / tot;
        n = tot;
    }
};

} // namespace detail

/// Sample mean and variance of a composite channel quantity.
inline Moments empirical_moments(Quantity q, const NetworkGeometry &g, const RadioConfig &r,
                                 std::uint64_t n_trials, std::uint64_t seed,
                                 const Scenario &sc = Scenario::ideal(), unsigned workers = 0) {
    validate(g);
    validate(r);
    validate(sc);
    if (n_trials < 100'000) throw ValidationError("n_trials", "must be >= 100000");
    const auto s = detail::link_scales(g, r);
    auto parts = detail::run_chunks<detail::Welford>(n_trials, workers, [&](std::uint64_t b, std::uint64_t e) {
        detail::Welford w;
        ChannelRealization c;
        for (std::uint64_t t = b; t < e; ++t) {
            detail::draw(c, r, sc, t, seed);
            detail::evaluate(c, s);
            w.add(detail::quantity_of(q, c));
        }
        return w;
    });
    detail::Welford all;
    for (const auto &p : parts) all.merge(p);
    return {all.mean, all.m2 / (all.n - 1.0), n_trials};
}

/// Raw samples of a composite quantity, indexed by trial.
inline std::vector<double> sample_quantity(Quantity q, const NetworkGeometry &g, const RadioConfig &r,
                                           std::uint64_t n_trials, std::uint64_t seed,
                                           const Scenario &sc = Scenario::ideal(),
                                           unsigned workers = 0) {
    validate(g);
    validate(r);
    validate(sc);
    const auto s = detail::link_scales(g, r);
    std::vector<double> out(n_trials);
    detail::run_chunks<char>(n_trials, workers, [&](std::uint64_t b, std::uint64_t e) {
        ChannelRealization c;
        for (std::uint64_t t = b; t < e; ++t) {
            detail::draw(c, r, sc, t, seed);
            detail::evaluate(c, s);
            out[t] = detail::quantity_of(q, c);
        }
        return char{};
    });
    return out;
}

/// Kolmogorov-Smirnov distance between samples and a CDF.
template <class Cdf>
double ks_distance(std::vector<double> samples, Cdf &&cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
    }
    return d;
}

} // namespace rissec::montecarlo
