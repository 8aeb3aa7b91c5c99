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

// Configuration records and the derivation of every closed-form symbol
// from geometry and radio parameters.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "rissec/error.hpp"

namespace rissec {

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double to_linear(double db) { return std::pow(10.0, db / 10.0); }

// ---------------------------------------------------------------------------
// Formula switches
// ---------------------------------------------------------------------------

/// Corrected formulas (default) or the expressions exactly as printed,
/// including their typographical slips.
enum class FormulaVariant { Corrected, Printed };

/// Variance of the CLT approximation of sum_i |h_si||h_di|.
/// PiSquared = N(1 - pi^2/16), the second-moment identity for a product of
/// unit-power Rayleigh magnitudes; Printed = N(1 - pi/16).
/// PiSquared is the default: the Monte-Carlo variance of the cascade sum
/// lands on it (see montecarlo::empirical_moments).
enum class CltVariance { PiSquared, Printed };

struct ModelOptions {
    FormulaVariant variant = FormulaVariant::Corrected;
    CltVariance clt = CltVariance::PiSquared;

    static ModelOptions strict() { return {FormulaVariant::Printed, CltVariance::Printed}; }
};

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

/// Node-pair distances in meters. s: secondary transmitter, d: secondary
/// receiver, r: RIS, p: primary transmitter/receiver, e: eavesdropper.
struct NetworkGeometry {
    double d_sr = 1.0;
    double d_rd = 1.0;
    double d_sd = 1.0;
    double d_pp = 1.0;
    double d_pe = 1.2;
    double d_re = 1.2;
    double d_rp = 1.0;
    double d_se = 1.0;
    double d_sp = 1.0;
    double d_o = 1.0;
    double eta = 4.0;
};

/// Powers and noise variances in watts (linear), rates in b/s/Hz.
struct RadioConfig {
    int n_ris = 30;
    int n_pt = 3;
    int n_eav = 3;
    double p_p = 10.0;
    double q_threshold = 10.0;
    double sigma2_d = 1.0;
    double sigma2_p = 1.0;
    double sigma2_e = 1.0;
    double gamma_bar_se = 3.1622776601683795; // 5 dB
    double delta = 2.0;
    double r_s = 1.0;
    double r_d = 1.0;
};

inline void validate(const NetworkGeometry &g) {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(name, "must be > 0");
    };
    positive(g.d_sr, "d_sr");
    positive(g.d_rd, "d_rd");
    positive(g.d_sd, "d_sd");
    positive(g.d_pp, "d_pp");
    positive(g.d_pe, "d_pe");
    positive(g.d_re, "d_re");
    positive(g.d_rp, "d_rp");
    positive(g.d_se, "d_se");
    positive(g.d_sp, "d_sp");
    positive(g.d_o, "d_o");
    if (!(g.eta >= 2.0 && g.eta <= 6.0)) throw ValidationError("eta", "must lie in [2, 6]");
}

inline void validate(const RadioConfig &r) {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(name, "must be > 0");
    };
    auto nonneg = [](double v, const char *name) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError(name, "must be >= 0");
    };
    if (r.n_ris < 1) throw ValidationError("n_ris", "must be >= 1");
    if (r.n_pt < 1) throw ValidationError("n_pt", "must be >= 1");
    if (r.n_eav < 1) throw ValidationError("n_eav", "must be >= 1");
    positive(r.p_p, "p_p");
    positive(r.q_threshold, "q_threshold");
    positive(r.sigma2_d, "sigma2_d");
    positive(r.sigma2_p, "sigma2_p");
    positive(r.sigma2_e, "sigma2_e");
    positive(r.gamma_bar_se, "gamma_bar_se");
    positive(r.delta, "delta");
    nonneg(r.r_s, "r_s");
    nonneg(r.r_d, "r_d");
}

/// Every symbol the closed forms consume. Geometry-only quantities are
/// optional: a record built from raw closed-form parameters leaves them
/// empty and the secondary-network operations refuse it.
struct DerivedParams {
    int n_ris = 0; // 0 when unknown (raw parameters)
    int n_pt = 1;
    int n_eav = 1;

    std::optional<double> lambda1;  // cascaded RIS->Eav jamming scale
    std::optional<double> lambda2;  // direct S->Eav jamming scale
    double lambda_e = 0.0;          // mean of Psi_E
    double lambda_p_param = 0.0;    // mean of Psi_P
    double omega_e = 0.0;
    double omega_p = 0.0;
    double phi_cap = 0.0;           // omega_p * vartheta
    double vartheta = 1.0;

    std::optional<double> omega1;   // SN cascaded amplitude scale
    std::optional<double> omega2;   // SN direct amplitude scale
    std::optional<double> epsilon_clt;
    std::optional<double> sigma2_clt;
    std::optional<double> delta;
    std::optional<double> gamma_th; // 2^{r_d} - 1

    double alpha = 0.0;
    double beta = 1.0;
    double r_s = 0.0;

    ModelOptions options{};

    bool has_secondary_fields() const {
        return omega1 && omega2 && epsilon_clt && sigma2_clt && delta && gamma_th &&
               lambda_p_param > 0.0;
    }
};

inline double clt_variance(int n_ris, CltVariance kind) {
    const double pi = std::numbers::pi;
    return kind == CltVariance::PiSquared ? n_ris * (1.0 - pi * pi / 16.0)
                                          : n_ris * (1.0 - pi / 16.0);
}

namespace detail {

// (num / d_o^k)^(-eta/2): k = 1 for single hops, 2 for RIS cascades.
inline double amp_loss(double num, double d_o, int k, double eta) {
    return std::pow(num / std::pow(d_o, k), -0.5 * eta);
}

} // namespace detail

/// Derive every closed-form symbol from physical parameters.
inline DerivedParams derive_params(const NetworkGeometry &g, const RadioConfig &r,
                                   ModelOptions opt = {}) {
    validate(g);
    validate(r);
    using detail::amp_loss;
    const bool literal = opt.variant == FormulaVariant::Printed;
    const double eta = g.eta;
    const double sq_se = std::sqrt(r.gamma_bar_se);

    DerivedParams p;
    p.options = opt;
    p.n_ris = r.n_ris;
    p.n_pt = r.n_pt;
    p.n_eav = r.n_eav;

    p.lambda1 = sq_se * amp_loss(g.d_sr * g.d_re, g.d_o, 2, eta);
    // printed with d_o^2 under a single hop
    p.lambda2 = sq_se * amp_loss(g.d_se, g.d_o, literal ? 2 : 1, eta);
    p.lambda_e = r.n_ris * (*p.lambda1) * (*p.lambda1) + (*p.lambda2) * (*p.lambda2);

    const double casc_p = amp_loss(g.d_sr * g.d_rp, g.d_o, 2, eta);
    const double dir_p = amp_loss(g.d_sp, g.d_o, 1, eta);
    p.lambda_p_param = r.n_ris * casc_p * casc_p + dir_p * dir_p;

    // PT->Eav link is printed with d_sd
    const double pe = amp_loss(literal ? g.d_sd : g.d_pe, g.d_o, 1, eta);
    p.omega_e = r.p_p / r.sigma2_e * pe * pe;
    const double pp = amp_loss(g.d_pp, g.d_o, literal ? 2 : 1, eta);
    p.omega_p = r.p_p / r.sigma2_p * pp * pp;
    p.vartheta = 1.0 / (r.q_threshold / r.sigma2_p + 1.0);
    p.phi_cap = p.omega_p * p.vartheta;

    const double sq_q = std::sqrt(r.q_threshold) / std::sqrt(r.sigma2_d);
    p.omega1 = sq_q * amp_loss(g.d_sr * g.d_rd, g.d_o, 2, eta);
    p.omega2 = sq_q * amp_loss(g.d_sd, g.d_o, literal ? 2 : 1, eta);
    p.epsilon_clt = r.n_ris * std::numbers::pi / 4.0;
    p.sigma2_clt = clt_variance(r.n_ris, opt.clt);
    p.delta = r.delta;
    p.gamma_th = std::exp2(r.r_d) - 1.0;

    p.r_s = r.r_s;
    p.beta = std::exp2(r.r_s);
    p.alpha = p.beta - 1.0;
    return p;
}

/// Closed-form parameters supplied directly (the figure sweeps fix
/// omega_p and omega_e without distances).
struct RawParams {
    double omega_p = 0.0;
    double omega_e = 0.0;
    double lambda_e = 0.0;
    double lambda_p_param = 0.0;
    double vartheta = 1.0;
    double r_s = 0.0;
    int n_pt = 1;
    int n_eav = 1;
};

inline DerivedParams params_from_raw(const RawParams &raw, ModelOptions opt = {}) {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(name, "must be > 0");
    };
    positive(raw.omega_p, "omega_p");
    positive(raw.omega_e, "omega_e");
    positive(raw.lambda_e, "lambda_e");
    positive(raw.lambda_p_param, "lambda_p_param");
    if (!(raw.vartheta > 0.0 && raw.vartheta <= 1.0))
        throw ValidationError("vartheta", "must lie in (0, 1]");
    if (!(raw.r_s >= 0.0)) throw ValidationError("r_s", "must be >= 0");
    if (raw.n_pt < 1) throw ValidationError("n_pt", "must be >= 1");
    if (raw.n_eav < 1) throw ValidationError("n_eav", "must be >= 1");

    DerivedParams p;
    p.options = opt;
    p.n_pt = raw.n_pt;
    p.n_eav = raw.n_eav;
    p.omega_p = raw.omega_p;
    p.omega_e = raw.omega_e;
    p.lambda_e = raw.lambda_e;
    p.lambda_p_param = raw.lambda_p_param;
    p.vartheta = raw.vartheta;
    p.phi_cap = raw.omega_p * raw.vartheta;
    p.r_s = raw.r_s;
    p.beta = std::exp2(raw.r_s);
    p.alpha = p.beta - 1.0;
    return p;
}

inline RawParams to_raw(const DerivedParams &p) {
    return {p.omega_p, p.omega_e, p.lambda_e, p.lambda_p_param, p.vartheta, p.r_s, p.n_pt, p.n_eav};
}

/// Radio config whose primary-network SNRs hit the requested omega_p and
/// omega_e: p_p sets omega_p, sigma2_e then sets omega_e. Everything else is
/// kept, so gamma_bar_se stays fixed as in the figure sweeps.
inline RadioConfig with_pn_targets(const NetworkGeometry &g, RadioConfig r, double omega_p,
                                   double omega_e, ModelOptions opt = {}) {
    if (!(omega_p > 0.0)) throw ValidationError("omega_p", "must be > 0");
    if (!(omega_e > 0.0)) throw ValidationError("omega_e", "must be > 0");
    const bool literal = opt.variant == FormulaVariant::Printed;
    const double pp = detail::amp_loss(g.d_pp, g.d_o, literal ? 2 : 1, g.eta);
    const double pe = detail::amp_loss(literal ? g.d_sd : g.d_pe, g.d_o, 1, g.eta);
    r.p_p = omega_p * r.sigma2_p / (pp * pp);
    r.sigma2_e = r.p_p * pe * pe / omega_e;
    return r;
}

} // namespace rissec
