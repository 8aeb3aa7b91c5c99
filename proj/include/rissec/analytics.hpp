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

// Closed-form secrecy and outage expressions together with the numerical
// quadrature oracles that check them.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "rissec/error.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/specfun.hpp"
#include "rissec/system_model.hpp"

namespace rissec::analytics {

enum class CombiningScheme { SC, MRC };

inline const char *to_string(CombiningScheme s) { return s == CombiningScheme::SC ? "SC" : "MRC"; }

/// Which erf the secondary-network CDF uses.
enum class ErfKind { Exact, Approx };

/// Largest antenna count accepted by the binomial sums.
inline constexpr int kMaxAntennas = 8;

/// Probability after clamping to [0, 1]; `raw` keeps the unclamped value.
struct ClampedProbability {
    double value = 0.0;
    double raw = 0.0;
};

inline ClampedProbability clamp_probability(double raw) {
    return {std::fmin(1.0, std::fmax(0.0, raw)), raw};
}

namespace detail {

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline double sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

/// Neumaier compensated summation for the alternating binomial sums.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

inline void check_counts(const DerivedParams &p) {
    if (p.n_pt < 1 || p.n_pt > kMaxAntennas)
        throw UnsupportedParameters("n_pt must lie in [1, 8] for the closed forms");
    if (p.n_eav < 1 || p.n_eav > kMaxAntennas)
        throw UnsupportedParameters("n_eav must lie in [1, 8] for the closed forms");
}

inline void check_pn(const DerivedParams &p) {
    check_counts(p);
    if (!(p.phi_cap > 0.0)) throw ValidationError("phi_cap", "must be > 0");
    if (!(p.omega_e > 0.0)) throw ValidationError("omega_e", "must be > 0");
    if (!(p.lambda_e > 0.0)) throw ValidationError("lambda_e", "must be > 0");
    if (!(p.beta >= 1.0)) throw ValidationError("beta", "must be >= 1");
}

[[noreturn]] inline void term_overflow(const char *what, int n, int k) {
    std::ostringstream os;
    os << what << ": non-finite intermediate at term (n=" << n << ", k=" << k << ")";
    throw ComputationError(os.str());
}

inline double checked_sqrt(double v, const char *name) {
    if (!(v >= 0.0)) {
        std::ostringstream os;
        os << "square root of negative coefficient " << name << " = " << v;
        throw ComputationError(os.str());
    }
    return std::sqrt(v);
}

/// e^{e} erfc(x) without forming e^{e} or e^{x^2} separately.
inline double exp_erfc(double e, double x) {
    if (x > 0.0) return std::exp(e - x * x) * specfun::erfcx(x);
    return std::exp(e) * std::erfc(x);
}

/// c_n = N_P C(N_P-1, n) (-1)^n / (n+1): binomial weights of the CDF of gamma_P.
inline double cdf_weight(int n_pt, int n) {
    return n_pt * binom(n_pt - 1, n) * sign(n) / (n + 1.0);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Primary network distributions
// ---------------------------------------------------------------------------

/// CDF of the selected PT antenna SNR, (1 - e^{-x/Phi})^{N_P}. Equal to the
/// binomial sum with weights cdf_weight, evaluated in product form.
inline double cdf_gamma_p(double gamma, const DerivedParams &p) {
    if (!(gamma >= 0.0)) throw DomainError("cdf_gamma_p: requires gamma >= 0");
    if (p.n_pt < 1) throw ValidationError("n_pt", "must be >= 1");
    return std::pow(-std::expm1(-gamma / p.phi_cap), p.n_pt);
}

/// Density of the eavesdropper SINR with an exponential jamming term of
/// mean lambda_e shared by all N_E antennas.
inline double pdf_gamma_e(double gamma, CombiningScheme scheme, const DerivedParams &p) {
    if (!(gamma >= 0.0)) throw DomainError("pdf_gamma_e: requires gamma >= 0");
    const int ne = p.n_eav;
    const double we = p.omega_e;
    const double le = p.lambda_e;
    if (scheme == CombiningScheme::SC) {
        detail::CompensatedSum s;
        for (int k = 0; k < ne; ++k) {
            const double h1 = (k + 1.0) / we;
            const double u = gamma * h1 + 1.0 / le;
            s.add(detail::sign(k) * detail::binom(ne - 1, k) * std::exp(-gamma * h1) * (1.0 + u) /
                  (u * u));
        }
        return std::fmax(0.0, ne / (we * le) * s.value());
    }
    if (gamma == 0.0) return ne == 1 ? (1.0 + 1.0 / le) * le / we : 0.0;
    const double v = gamma / we + 1.0 / le;
    double s = 0.0;
    for (int k = 0; k <= ne; ++k)
        s += detail::binom(ne, k) * std::tgamma(k + 1.0) / std::pow(v, k + 1);
    const double log_pre = (ne - 1) * std::log(gamma) - gamma / we - std::lgamma(ne) -
                           ne * std::log(we) - std::log(le);
    return std::exp(log_pre) * s;
}

// ---------------------------------------------------------------------------
// Coefficient bundles
// ---------------------------------------------------------------------------

/// Per (n, k) symbols of the SOP and PNSC expressions. h6..h8 are the
/// beta = 1, alpha = 0 images of h3, h4, h5. z1, z2 are the per-term
/// prefactors of the asymptotic array gains (SC and MRC).
struct SopCoeffs {
    double h1 = 0, h2 = 0, h3 = 0, h4 = 0, h5 = 0, h6 = 0, h7 = 0, h8 = 0;
    double z1 = 0, z2 = 0;
};

inline SopCoeffs sop_coeffs(const DerivedParams &p, int n, int k) {
    SopCoeffs c;
    const double phi = p.phi_cap;
    const double we = p.omega_e;
    const double le = p.lambda_e;
    c.h1 = (k + 1.0) / we;
    c.h2 = p.alpha * (n + 1.0) / phi;
    c.h4 = p.beta * (n + 1.0) / phi + c.h1;
    c.h3 = c.h4 / (le * c.h1);
    c.h5 = (phi + p.beta * we * (n + 1.0)) / (phi * le);
    c.h7 = (n + 1.0) / phi + c.h1;
    c.h6 = c.h7 / (le * c.h1);
    c.h8 = (phi + we * (n + 1.0)) / (phi * le);
    const double ab = std::pow(p.beta, n) * std::pow(p.alpha, p.n_pt - n) / std::pow(p.vartheta, p.n_pt);
    c.z1 = p.n_eav * ab * std::tgamma(n + 1.0) * std::pow(we, n) * std::exp(0.5 / le);
    c.z2 = ab * std::tgamma(p.n_eav + n) * std::tgamma(k + 1.0) * std::pow(we, n) /
           std::tgamma(p.n_eav) * std::exp(0.5 / le) * std::pow(le, -0.5 * (p.n_eav + n - k));
    return c;
}

// ---------------------------------------------------------------------------
// Secrecy outage probability
// ---------------------------------------------------------------------------

namespace detail {

/// Pr(gamma_P < beta*gamma_E + alpha) in closed form for given (beta, alpha).
/// The SC inner sum integrates the shared-jamming density against each
/// exponential of the CDF; the MRC inner sum reduces to Whittaker functions.
inline double sop_closed_raw(CombiningScheme scheme, const DerivedParams &p, double beta,
                             double alpha, const char *what) {
    const int np = p.n_pt;
    const int ne = p.n_eav;
    const double phi = p.phi_cap;
    const double we = p.omega_e;
    const double le = p.lambda_e;
    CompensatedSum total;
    for (int n = 0; n < np; ++n) {
        const double cn = cdf_weight(np, n);
        const double h2 = alpha * (n + 1.0) / phi;
        if (scheme == CombiningScheme::SC) {
            CompensatedSum m;
            for (int k = 0; k < ne; ++k) {
                const double h1 = (k + 1.0) / we;
                const double h4 = beta * (n + 1.0) / phi + h1;
                const double h3 = h4 / (le * h1);
                const double t = sign(k) * binom(ne - 1, k) / h1 *
                                 (le - (h4 - h1) / h1 * specfun::exp_scaled_upper_gamma_zero(h3));
                if (!std::isfinite(t)) term_overflow(what, n, k);
                m.add(t);
            }
            const double inner = std::exp(-h2) * ne / (we * le) * m.value();
            total.add(cn * (1.0 - inner));
        } else {
            const double h5 = (phi + beta * we * (n + 1.0)) / (phi * le);
            const double log_h5 = std::log(h5);
            double s = 0.0;
            for (int k = 0; k <= ne; ++k) {
                const double lt = std::log(binom(ne, k)) + std::lgamma(k + 1.0) -
                                  (ne - k) * std::log(le) - 0.5 * (ne - k) * log_h5 +
                                  specfun::log_whittaker_w(-0.5 * (ne + k), 0.5 * (-ne + k + 1), h5) +
                                  0.5 * h5 - h2;
                const double t = std::exp(lt);
                if (!std::isfinite(t)) term_overflow(what, n, k);
                s += t;
            }
            total.add(cn * (1.0 - s));
        }
    }
    return total.value();
}

/// SC expressions exactly as printed, including the misplaced exponentials
/// and the sign of the incomplete-gamma term.
inline double sop_sc_literal_raw(const DerivedParams &p, bool pnsc, const char *what) {
    const int np = p.n_pt;
    const int ne = p.n_eav;
    const double le = p.lambda_e;
    double total = 0.0;
    for (int n = 0; n < np; ++n) {
        double m = 0.0;
        for (int k = 0; k < ne; ++k) {
            const SopCoeffs c = sop_coeffs(p, n, k);
            double t;
            if (!pnsc) {
                t = sign(k) * binom(ne - 1, k) / (c.h1 * std::exp(-(c.h3 - c.h2))) *
                    (le / std::exp(-c.h3) + (c.h4 - c.h1) / c.h1 * specfun::upper_gamma_zero(c.h3));
            } else {
                t = sign(k) * binom(ne - 1, k) / (c.h1 * std::exp(-c.h6)) *
                    (le / std::exp(-c.h6) + (c.h7 - c.h1) / c.h1 * specfun::upper_gamma_zero(c.h6));
            }
            if (!std::isfinite(t)) term_overflow(what, n, k);
            m += t;
        }
        total += cdf_weight(np, n) * (1.0 - ne / (p.omega_e * le) * m);
    }
    return pnsc ? 1.0 - total : total;
}

} // namespace detail

/// Secrecy outage probability of the primary link against an SC or MRC
/// eavesdropper.
inline ClampedProbability sop_closed(CombiningScheme scheme, const DerivedParams &p) {
    detail::check_pn(p);
    if (scheme == CombiningScheme::SC && p.options.variant == FormulaVariant::Printed)
        return clamp_probability(detail::sop_sc_literal_raw(p, false, "sop_closed"));
    return clamp_probability(detail::sop_closed_raw(scheme, p, p.beta, p.alpha, "sop_closed"));
}

/// Probability of non-zero secrecy capacity, Pr(gamma_P > gamma_E).
inline ClampedProbability pnsc_closed(CombiningScheme scheme, const DerivedParams &p) {
    detail::check_pn(p);
    if (scheme == CombiningScheme::SC && p.options.variant == FormulaVariant::Printed)
        return clamp_probability(detail::sop_sc_literal_raw(p, true, "pnsc_closed"));
    return clamp_probability(1.0 - detail::sop_closed_raw(scheme, p, 1.0, 0.0, "pnsc_closed"));
}

/// Eavesdropper law used by the quadrature oracle. PointMassAtZero is the
/// degenerate check path (gamma_E = 0 almost surely).
enum class EavDensity { Model, PointMassAtZero };

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    EavDensity density = EavDensity::Model;
};

namespace detail {

inline quad::Options to_options(const QuadratureConfig &q) {
    return {q.abs_tol, q.rel_tol, q.max_subdivisions};
}

/// int_0^inf g(gamma) f_E(gamma) d gamma, split at the jamming-induced
/// peak width so that the adaptive rule sees two smooth pieces.
template <class G>
double integrate_against_eav(G &&g, CombiningScheme scheme, const DerivedParams &p,
                             const QuadratureConfig &q, const char *what) {
    auto integrand = [&](double x) { return g(x) * pdf_gamma_e(x, scheme, p); };
    const double knee = p.omega_e / p.lambda_e;
    const auto opt = to_options(q);
    const auto head = quad::integrate(integrand, 0.0, knee, opt);
    auto tail = [&](double x) { return integrand(knee + x); };
    const auto rest = quad::integrate_semi_infinite(tail, p.omega_e, opt);
    if (!head.converged || !rest.converged || !std::isfinite(head.value + rest.value)) {
        std::ostringstream os;
        os << what << ": quadrature did not converge (achieved error "
           << head.abs_error + rest.abs_error << ")";
        throw ComputationError(os.str());
    }
    return head.value + rest.value;
}

} // namespace detail

/// Oracle: SOP = int F_gammaP(beta*g + alpha) f_gammaE(g) dg by adaptive quadrature.
inline double sop_quadrature(CombiningScheme scheme, const DerivedParams &p,
                             const QuadratureConfig &q = {}) {
    detail::check_pn(p);
    auto g = [&](double x) { return cdf_gamma_p(p.beta * x + p.alpha, p); };
    if (q.density == EavDensity::PointMassAtZero) return g(0.0);
    return detail::integrate_against_eav(g, scheme, p, q, "sop_quadrature");
}

/// Oracle: PNSC = int (1 - F_gammaP(g)) f_gammaE(g) dg.
inline double pnsc_quadrature(CombiningScheme scheme, const DerivedParams &p,
                              const QuadratureConfig &q = {}) {
    detail::check_pn(p);
    auto g = [&](double x) { return 1.0 - cdf_gamma_p(x, p); };
    if (q.density == EavDensity::PointMassAtZero) return g(0.0);
    return detail::integrate_against_eav(g, scheme, p, q, "pnsc_quadrature");
}

// ---------------------------------------------------------------------------
// Asymptotic SOP
// ---------------------------------------------------------------------------

struct AsymptoticSop {
    double value = 0.0;           // (G_a omega_p)^{-G_d}
    double diversity_order = 0.0; // G_d = N_P
    double array_gain = 0.0;      // G_a
};

/// E[gamma_E^n] in closed form (Whittaker functions at 1/lambda_e).
inline double eav_moment(int n, CombiningScheme scheme, const DerivedParams &p) {
    if (n < 0) throw DomainError("eav_moment: requires n >= 0");
    const int ne = p.n_eav;
    const double we = p.omega_e;
    const double le = p.lambda_e;
    const double z = 1.0 / le;
    const double lw = 0.5 / le; // log of e^{1/(2 lambda_e)}
    detail::CompensatedSum s;
    if (scheme == CombiningScheme::SC) {
        const double w_a = std::exp(lw + specfun::log_whittaker_w(-0.5 * (n + 2), 0.5 * (n - 1), z));
        const double w_b = std::exp(lw + specfun::log_whittaker_w(-0.5 * (n + 1), 0.5 * n, z));
        const double bracket = std::pow(le, -0.5 * n) * (w_a + w_b / std::sqrt(le));
        for (int k = 0; k < ne; ++k)
            s.add(ne * detail::sign(k) * detail::binom(ne - 1, k) * std::tgamma(n + 1.0) *
                  std::pow(we, n) / std::pow(k + 1.0, n + 1) * bracket);
        return s.value();
    }
    for (int k = 0; k <= ne; ++k) {
        const double lt = std::log(detail::binom(ne, k)) + std::lgamma(k + 1.0) +
                          std::lgamma(ne + n) - std::lgamma(ne) + n * std::log(we) + lw -
                          0.5 * (ne + n - k) * std::log(le) +
                          specfun::log_whittaker_w(-0.5 * (ne + k + n), 0.5 * (-ne + k - n + 1), z);
        s.add(std::exp(lt));
    }
    return s.value();
}

/// High-SNR SOP as omega_p grows with omega_e fixed: SOP ~ (G_a omega_p)^{-N_P}
/// with G_a^{-N_P} = sum_n C(N_P, n) beta^n alpha^{N_P-n} E[gamma_E^n] / vartheta^{N_P}.
inline AsymptoticSop sop_asymptotic(CombiningScheme scheme, const DerivedParams &p) {
    detail::check_pn(p);
    const int np = p.n_pt;
    double inv = 0.0; // G_a^{-N_P}
    if (p.options.variant == FormulaVariant::Printed) {
        if (scheme == CombiningScheme::SC)
            throw UnsupportedParameters(
                "sop_asymptotic: the printed SC array gain uses an unbound index i");
        // printed MRC gain: Whittaker argument and exponential in omega_e
        const int ne = p.n_eav;
        const double we = p.omega_e;
        for (int k = 0; k <= ne; ++k)
            for (int n = 0; n <= np; ++n) {
                const double z2 = std::pow(p.beta, n) * std::pow(p.alpha, np - n) *
                                  std::tgamma(ne + n) * std::tgamma(k + 1.0) * std::pow(we, n) /
                                  (std::tgamma(ne) * std::pow(p.vartheta, np) *
                                   std::exp(-0.5 / we) * std::pow(p.lambda_e, 0.5 * (ne + n - k)));
                const double t = detail::binom(ne, k) * detail::binom(np, n) * z2 *
                                 specfun::whittaker_w(-0.5 * (ne + k + n), 0.5 * (-ne + k - n + 1),
                                                      1.0 / we);
                if (!std::isfinite(t)) detail::term_overflow("sop_asymptotic", n, k);
                inv += t;
            }
    } else {
        for (int n = 0; n <= np; ++n) {
            const double t = detail::binom(np, n) * std::pow(p.beta, n) *
                             std::pow(p.alpha, np - n) * eav_moment(n, scheme, p) /
                             std::pow(p.vartheta, np);
            if (!std::isfinite(t)) detail::term_overflow("sop_asymptotic", n, -1);
            inv += t;
        }
    }
    if (!(inv > 0.0)) throw ComputationError("sop_asymptotic: non-positive array-gain sum");
    AsymptoticSop r;
    r.diversity_order = np;
    r.array_gain = std::pow(inv, -1.0 / np);
    r.value = inv * std::pow(p.omega_p, -np);
    return r;
}

// ---------------------------------------------------------------------------
// Secondary network outage
// ---------------------------------------------------------------------------

/// Symbols of the secondary-network CDF and outage expressions at the
/// rate threshold gamma_th. Per-m entries follow the erf approximation terms.
struct OutageCoeffs {
    double gamma = 0.0; // threshold 2^{r_d} - 1
    double lambda_p = 0.0;
    double varphi1 = 0, varphi2 = 0;
    double xi1 = 0, xi2 = 0, xi3 = 0, xi4 = 0, xi5 = 0;
    double kappa = 0; // xi5 / (xi1 xi2)
    double b1 = 0, b2 = 0;
    std::array<double, 4> a1{}, c4{}, ups4{}, bigxi3{}, bigxi6{};
    double a2 = 0;
    double c1 = 0, c2 = 0, c3 = 0;
    double ups1 = 0, ups2 = 0, ups3 = 0;
    double bigxi1 = 0, bigxi2 = 0, bigxi4 = 0, bigxi5 = 0;
};

namespace detail {

struct CdfSymbols {
    double varphi1, varphi2, epsilon, sigma2, delta, xi1, xi2, xi3, xi4, xi5;
};

inline CdfSymbols cdf_symbols(const DerivedParams &p) {
    if (!p.has_secondary_fields())
        throw MissingParameter(
            "secondary-network operations need geometry-derived parameters "
            "(omega1, omega2, epsilon_clt, sigma2_clt, delta); use derive_params");
    CdfSymbols s{};
    s.varphi1 = 1.0 / *p.omega2;
    s.varphi2 = *p.omega1 / *p.omega2;
    s.epsilon = *p.epsilon_clt;
    s.sigma2 = *p.sigma2_clt;
    s.delta = *p.delta;
    const bool literal = p.options.variant == FormulaVariant::Printed;
    // variance of varphi2*chi1 + chi2 enters with varphi2^2; printed with varphi2
    s.xi1 = checked_sqrt(s.sigma2 * (literal ? s.varphi2 : s.varphi2 * s.varphi2) + s.delta, "xi1");
    s.xi2 = checked_sqrt(2.0 * s.sigma2 * s.delta, "xi2");
    s.xi3 = s.sigma2 * s.varphi1 * s.varphi2;
    s.xi4 = s.delta * s.varphi1 / s.varphi2;
    s.xi5 = s.delta * s.epsilon;
    return s;
}

inline double erf_of(double x, ErfKind kind) {
    return kind == ErfKind::Exact ? specfun::erf_exact(x) : specfun::erf_approx(x);
}

inline double cdf_psi_d_raw(double gamma, const CdfSymbols &s, ErfKind kind) {
    const double r = std::sqrt(gamma);
    const double s2 = std::sqrt(2.0 * s.sigma2);
    const double lead = 0.5 * (erf_of((s.varphi1 / s.varphi2 * r - s.epsilon) / s2, kind) +
                               erf_of(s.epsilon / s2, kind));
    const double d = s.varphi1 * r - s.varphi2 * s.epsilon;
    const double env = std::sqrt(s.delta) / (2.0 * s.xi1) * std::exp(-d * d / (2.0 * s.xi1 * s.xi1));
    const double den = s.xi1 * s.xi2;
    return lead - env * (erf_of((s.xi4 * r - s.xi5) / den, kind) +
                         erf_of((s.xi3 * r + s.xi5) / den, kind));
}

} // namespace detail

/// CDF of Psi_D = (Omega1 chi1 + Omega2 chi2)^2 with chi1 Gaussian (CLT) and
/// chi2 Rayleigh, clamped to [0, 1].
inline double cdf_psi_d(double gamma, const DerivedParams &p, ErfKind kind = ErfKind::Exact) {
    if (!(gamma >= 0.0)) throw DomainError("cdf_psi_d: requires gamma >= 0");
    const auto s = detail::cdf_symbols(p);
    return std::fmin(1.0, std::fmax(0.0, detail::cdf_psi_d_raw(gamma, s, kind)));
}

inline OutageCoeffs outage_coeffs(const DerivedParams &p) {
    using detail::checked_sqrt;
    const auto s = detail::cdf_symbols(p);
    const bool literal = p.options.variant == FormulaVariant::Printed;
    const auto &th = specfun::kErfApprox.theta;
    OutageCoeffs c;
    const double g = *p.gamma_th;
    const double lam = p.lambda_p_param;
    c.gamma = g;
    c.lambda_p = lam;
    c.varphi1 = s.varphi1;
    c.varphi2 = s.varphi2;
    c.xi1 = s.xi1;
    c.xi2 = s.xi2;
    c.xi3 = s.xi3;
    c.xi4 = s.xi4;
    c.xi5 = s.xi5;
    c.kappa = s.xi5 / (s.xi1 * s.xi2);
    const double p1 = s.varphi1, p2 = s.varphi2, eps = s.epsilon, d = s.delta;
    const double x1 = s.xi1, x2 = s.xi2, x3 = s.xi3, x4 = s.xi4, x5 = s.xi5;
    const double x1s = x1 * x1, x2s = x2 * x2;

    c.b1 = p1 * std::sqrt(g) / ((literal ? 1.0 : p2) * std::sqrt(2.0 * s.sigma2));
    c.b2 = eps / std::sqrt(2.0 * s.sigma2);
    c.a2 = 2.0 * c.b2 / (lam * c.b1 * c.b1);
    for (int m = 0; m < 4; ++m) c.a1[m] = 1.0 / (lam * c.b1 * c.b1) + th[m];

    if (literal) {
        c.c1 = p1 * p1 * x2s / (2.0 * x4 * x4) + x1s * x2s / (lam * x4 * x4 * g);
        c.c2 = x2 / (x1 * x4 * x4 * g) * (p1 * (p1 * x5 * g - eps * x4 * g) + 2.0 * x1s * x5 / lam);
        const double q = p1 * x5 / x4 - eps;
        c.c3 = x5 * x5 / (lam * x4 * x4) + q * q / (2.0 * x1s);
        c.bigxi1 = x1 * x2s * std::sqrt(d) / (lam * x4 * x4);
        const double rg = std::sqrt(g);
        c.ups1 = p1 * p1 * x2s * g / (2.0 * x3 * x3) + x1s * x2s / (lam * x3 * x3);
        c.ups2 = x2 / (x1 * x3 * x3) * (p1 * (p1 * x5 * g + eps * x3 * rg) + 2.0 * x1s * x5 / lam);
        const double u = p1 * x5 * rg / x3 + eps;
        c.ups3 = x5 * x5 / (lam * x3 * x3) + u * u / (2.0 * x1s);
        c.bigxi4 = x1 * x2s * std::sqrt(d) / (lam * x3 * x3);
    } else {
        c.c1 = p1 * p1 * x2s / (2.0 * x4 * x4) + x1s * x2s / (lam * x4 * x4 * g);
        c.c2 = x2 / (x1 * x4 * x4 * g) *
               (p1 * (p1 * x5 * g - p2 * eps * x4 * g) + 2.0 * x1s * x5 / lam);
        const double q = p1 * x5 / x4 - p2 * eps;
        c.c3 = x5 * x5 / (lam * x4 * x4 * g) + q * q / (2.0 * x1s);
        c.bigxi1 = x1 * x2s * std::sqrt(d) / (lam * x4 * x4 * g);
        c.ups1 = p1 * p1 * x2s / (2.0 * x3 * x3) + x1s * x2s / (lam * x3 * x3 * g);
        c.ups2 = x2 / (x1 * x3 * x3 * g) *
                 (p1 * g * (p1 * x5 + p2 * eps * x3) + 2.0 * x1s * x5 / lam);
        const double u = p1 * x5 / x3 + p2 * eps;
        c.ups3 = x5 * x5 / (lam * x3 * x3 * g) + u * u / (2.0 * x1s);
        c.bigxi4 = x1 * x2s * std::sqrt(d) / (lam * x3 * x3 * g);
    }
    c.bigxi2 = c.c2 - 2.0 * c.c1 * c.kappa;
    c.bigxi5 = 2.0 * c.ups1 * c.kappa - c.ups2;
    for (int m = 0; m < 4; ++m) {
        c.c4[m] = c.c1 + th[m];
        c.ups4[m] = c.ups1 + th[m];
        c.bigxi3[m] = c.c2 - 2.0 * c.c4[m] * c.kappa;
        c.bigxi6[m] = 2.0 * c.ups4[m] * c.kappa - c.ups2;
    }
    // every coefficient that appears under a square root
    checked_sqrt(c.c1, "c1");
    checked_sqrt(c.ups1, "ups1");
    for (int m = 0; m < 4; ++m) {
        checked_sqrt(c.a1[m], "a1");
        checked_sqrt(c.c4[m], "c4");
        checked_sqrt(c.ups4[m], "ups4");
    }
    return c;
}

struct SnOutageResult {
    double value = 0.0; // clamped to [0, 1]
    double raw = 0.0;   // A1 - A2 - A3 before clamping
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

namespace detail {

constexpr double kSqrtPi = 1.7724538509055160273;

// Exponents are merged before exponentiation and erfc products go through
// exp_erfc, so that no factor overflows while the product stays finite.
inline SnOutageResult sn_closed_corrected(const OutageCoeffs &c) {
    const auto &up = specfun::kErfApprox.upsilon;
    const double lam = c.lambda_p;
    const double b1 = c.b1, b2 = c.b2, a2 = c.a2, k = c.kappa;

    double A1 = std::exp(-b2 * b2 / (b1 * b1 * lam)) + 0.5 * (std::erf(b2) - 1.0);
    for (int m = 0; m < 4; ++m) {
        const double a1 = c.a1[m];
        const double ra1 = std::sqrt(a1);
        const double e0 = -0.5 * a2 * b2;
        const double y = a2 / (2.0 * ra1);
        const double z = (a2 - 2.0 * a1 * b2) / (2.0 * ra1);
        const double e = e0 + a2 * a2 / (4.0 * a1);
        const double br = 2.0 * ra1 * (std::exp(e0 + b2 * (a2 - a1 * b2)) - 2.0 * std::exp(e0)) +
                          kSqrtPi * (a2 - 2.0 * a1 * b2) * (2.0 * exp_erfc(e, y) - exp_erfc(e, z));
        A1 += up[m] / (4.0 * b1 * b1 * a1 * ra1 * lam) * br;
    }

    // erf(x) - erf(y) + erfc(y) = 2 erfc(y) - erfc(x)
    auto a2_term = [&](double cc, double xi, double sgn) {
        const double rc = std::sqrt(cc);
        const double e = -c.c3 + c.c2 * c.c2 / (4.0 * cc);
        const double y = c.c2 / (2.0 * rc);
        const double x = xi / (2.0 * rc);
        const double lin = 2.0 * rc * sgn *
                           (2.0 * std::exp(-c.c3) - std::exp(-c.c3 + k * (c.c2 - cc * k)));
        return (lin - sgn * xi * kSqrtPi * (2.0 * exp_erfc(e, y) - exp_erfc(e, x))) / (cc * rc);
    };
    double A2 = a2_term(c.c1, c.bigxi2, 1.0);
    for (int m = 0; m < 4; ++m) A2 += up[m] * a2_term(c.c4[m], c.bigxi3[m], -1.0);
    A2 *= c.bigxi1 / 4.0;

    auto a3_term = [&](double uu, double xi, double sgn) {
        const double ru = std::sqrt(uu);
        const double e = -(c.ups3 - k * c.ups2) - k * k * uu;
        const double w = xi / (2.0 * ru);
        return sgn * (2.0 * ru * std::exp(e) - xi * kSqrtPi * exp_erfc(e + w * w, w)) / (uu * ru);
    };
    double A3 = a3_term(c.ups1, c.bigxi5, 1.0);
    for (int m = 0; m < 4; ++m) A3 += up[m] * a3_term(c.ups4[m], c.bigxi6[m], -1.0);
    A3 *= c.bigxi4 / 4.0;

    SnOutageResult r;
    r.a1 = A1;
    r.a2 = A2;
    r.a3 = A3;
    r.raw = A1 - A2 - A3;
    return r;
}

/// The three blocks exactly as printed (prefactor of A1, erf in A3).
inline SnOutageResult sn_closed_literal(const OutageCoeffs &c) {
    const auto &up = specfun::kErfApprox.upsilon;
    const double lam = c.lambda_p;
    const double b1 = c.b1, b2 = c.b2, a2 = c.a2, k = c.kappa;
    const double sp = kSqrtPi;
    double A1 = std::exp(-b2 * b2 / (b1 * b1 * lam)) + 0.5 * (std::erf(b2) - 1.0);
    for (int m = 0; m < 4; ++m) {
        const double a1 = c.a1[m];
        const double ra1 = std::sqrt(a1);
        const double y = a2 / (2.0 * ra1);
        const double br = 2.0 * ra1 * (std::exp(b2 * (a2 - a1 * b2)) - 2.0) +
                          std::exp(a2 * a2 / (4.0 * a1)) * sp * (a2 - 2.0 * a1 * b2) *
                              (std::erfc(y) - std::erf(y) + std::erf((a2 - 2.0 * a1 * b2) / (2.0 * ra1)));
        A1 += up[m] * std::exp(-a2 / 2.0) / (4.0 * b1 * b1 * std::sqrt(std::pow(a2 / 2.0, 3)) * lam) * br;
    }
    const double rc1 = std::sqrt(c.c1);
    double br2 = (2.0 * rc1 * (2.0 - std::exp(k * (c.c2 - c.c1 * k))) -
                  c.bigxi2 * sp * std::exp(c.c2 * c.c2 / (4.0 * c.c1)) *
                      (std::erf(c.bigxi2 / (2.0 * rc1)) - std::erf(c.c2 / (2.0 * rc1)) +
                       std::erfc(c.c2 / (2.0 * rc1)))) /
                 std::sqrt(std::pow(c.c1, 3));
    for (int m = 0; m < 4; ++m) {
        const double c4 = c.c4[m], rc4 = std::sqrt(c4);
        br2 += up[m] / std::sqrt(std::pow(c4, 3)) *
               (2.0 * rc4 * (std::exp(k * (c.c2 - c4 * k)) - 2.0) +
                c.bigxi3[m] * sp * std::exp(c.c2 * c.c2 / (4.0 * c4)) *
                    (std::erf(c.bigxi3[m] / (2.0 * rc4)) - std::erf(c.c2 / (2.0 * rc4)) +
                     std::erfc(c.c2 / (2.0 * rc4))));
    }
    const double A2 = std::exp(-c.c3) * c.bigxi1 / 4.0 * br2;
    const double ru1 = std::sqrt(c.ups1);
    double br3 = std::pow(c.ups1, -1.5) * std::exp(-k * k * c.ups1) *
                 (2.0 * ru1 - c.bigxi5 * sp * std::exp(c.bigxi5 * c.bigxi5 / (4.0 * c.ups1)) *
                                  std::erf(c.bigxi5 / (2.0 * ru1)));
    for (int m = 0; m < 4; ++m) {
        const double u4 = c.ups4[m], ru4 = std::sqrt(u4);
        br3 += up[m] / std::sqrt(std::pow(u4, 3)) * std::exp(-k * k * u4) *
               (-2.0 * ru4 + c.bigxi6[m] * sp * std::exp(c.bigxi6[m] * c.bigxi6[m] / (4.0 * u4)) *
                                 std::erf(c.bigxi6[m] / (2.0 * ru4)));
    }
    const double A3 = c.bigxi4 / 4.0 * std::exp(-(c.ups3 - k * c.ups2)) * br3;
    SnOutageResult r;
    r.a1 = A1;
    r.a2 = A2;
    r.a3 = A3;
    r.raw = A1 - A2 - A3;
    return r;
}

} // namespace detail

/// Secondary-network outage probability A1 - A2 - A3 (erf approximation
/// applied inside the integral), clamped, with the blocks exposed.
inline SnOutageResult sn_outage_closed(const DerivedParams &p) {
    detail::cdf_symbols(p); // rejects raw parameter sources
    if (*p.gamma_th == 0.0) return {};
    const OutageCoeffs c = outage_coeffs(p);
    SnOutageResult r = p.options.variant == FormulaVariant::Printed
                           ? detail::sn_closed_literal(c)
                           : detail::sn_closed_corrected(c);
    if (!std::isfinite(r.raw)) throw ComputationError("sn_outage_closed: non-finite result");
    r.value = std::fmin(1.0, std::fmax(0.0, r.raw));
    return r;
}

/// Oracle: P_out = int F_PsiD(gamma_th x) f_PsiP(x) dx with the unclamped CDF,
/// using either the exact erf or its exponential approximation.
inline double sn_outage_quadrature(const DerivedParams &p, ErfKind kind = ErfKind::Exact,
                                   const QuadratureConfig &q = {}) {
    const auto s = detail::cdf_symbols(p);
    const double g = *p.gamma_th;
    const double lam = p.lambda_p_param;
    if (g == 0.0) return 0.0;
    auto f = [&](double x) { return detail::cdf_psi_d_raw(g * x, s, kind) * std::exp(-x / lam) / lam; };
    return quad::integrate_semi_infinite_or_throw(f, lam, detail::to_options(q),
                                                  "sn_outage_quadrature");
}

} // namespace rissec::analytics
