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

// Sweep specifications, the figure presets, the configuration-file parser
// and the CSV writer behind the command-line driver.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rissec/analytics.hpp"
#include "rissec/error.hpp"
#include "rissec/montecarlo.hpp"
#include "rissec/system_model.hpp"

namespace rissec::sweep {

using analytics::CombiningScheme;
using montecarlo::Metric;
using montecarlo::Scenario;

enum class Evaluator { Closed, Asymptotic, Quadrature, MonteCarlo };

inline const char *to_string(Evaluator e) {
    switch (e) {
    case Evaluator::Closed: return "closed";
    case Evaluator::Asymptotic: return "asymptotic";
    case Evaluator::Quadrature: return "quadrature";
    case Evaluator::MonteCarlo: return "montecarlo";
    }
    return "?";
}

/// Parameters a sweep may vary. omega_p and omega_e are hit through
/// p_p and sigma2_e (with_pn_targets); the others map to RadioConfig fields.
enum class SweptParameter { OmegaP, OmegaE, QThreshold, GammaBarSe, RateS, RateD };

enum class Unit { Linear, DB, DBW };

inline const char *to_string(Unit u) {
    switch (u) {
    case Unit::Linear: return "linear";
    case Unit::DB: return "dB";
    case Unit::DBW: return "dBW";
    }
    return "?";
}

struct SweepSpec {
    std::string name;
    SweptParameter parameter = SweptParameter::OmegaP;
    Unit unit = Unit::DB;
    std::vector<double> values; // in `unit`
    Metric metric = Metric::SOP;
    std::vector<CombiningScheme> schemes{CombiningScheme::SC, CombiningScheme::MRC};
    std::vector<Evaluator> evaluators{Evaluator::Closed};
    Scenario scenario{};
    std::uint64_t n_trials = 1'000'000;
    std::uint64_t seed = 1;
    std::string output_path;
    NetworkGeometry geometry{};
    RadioConfig radio{};
    double omega_p = 100.0; // linear, used when not swept (PN metrics)
    double omega_e = 10.0;  // linear, 10 dB as in the fig2 SOP sweep
};

struct RunOptions {
    ModelOptions model{};
    unsigned workers = 0;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline bool is_pn(Metric m) { return m != Metric::SnOutage; }

inline void validate(const SweepSpec &s) {
    if (s.values.empty()) throw ValidationError("values", "must be nonempty");
    for (std::size_t i = 1; i < s.values.size(); ++i)
        if (!(s.values[i] > s.values[i - 1]) && !(s.values[i] < s.values[i - 1]))
            throw ValidationError("values", "must be strictly monotone");
    if (s.values.size() > 2) {
        const bool up = s.values[1] > s.values[0];
        for (std::size_t i = 1; i < s.values.size(); ++i)
            if ((s.values[i] > s.values[i - 1]) != up)
                throw ValidationError("values", "must be strictly monotone");
    }
    if (s.evaluators.empty()) throw ValidationError("evaluators", "must be nonempty");
    if (is_pn(s.metric) && s.schemes.empty()) throw ValidationError("schemes", "must be nonempty");
    for (auto e : s.evaluators)
        if (e == Evaluator::Asymptotic && s.metric != Metric::SOP)
            throw ValidationError("evaluators", "asymptotic is defined for the SOP metric only");
    if (!is_pn(s.metric) &&
        (s.parameter == SweptParameter::OmegaP || s.parameter == SweptParameter::OmegaE ||
         s.parameter == SweptParameter::RateS))
        throw ValidationError("parameter", "not an input of the secondary-network outage");
    if (is_pn(s.metric) && s.parameter == SweptParameter::RateD)
        throw ValidationError("parameter", "r_d is not an input of the primary-network metrics");
    if (s.unit == Unit::DBW && s.parameter != SweptParameter::QThreshold)
        throw ValidationError("unit", "dBW applies to q_threshold only");
    if (s.unit != Unit::Linear &&
        (s.parameter == SweptParameter::RateS || s.parameter == SweptParameter::RateD))
        throw ValidationError("unit", "rates are swept in linear units");
    for (auto e : s.evaluators)
        if (e == Evaluator::MonteCarlo && s.n_trials < montecarlo::kMinTrials)
            throw ValidationError("n_trials", "must be >= 10000 for the montecarlo evaluator");
    if (s.output_path.empty()) throw ValidationError("output", "must be set");
    rissec::validate(s.geometry);
    rissec::validate(s.radio);
    montecarlo::validate(s.scenario);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct Row {
    double param = 0.0;
    Unit unit = Unit::DB;
    std::string scheme;
    Evaluator evaluator = Evaluator::Closed;
    double value = 0.0;
    std::optional<double> std_error;
    std::optional<std::uint64_t> n_trials;
    std::optional<std::uint64_t> seed;
};

inline double to_linear_value(double v, Unit u) { return u == Unit::Linear ? v : to_linear(v); }

/// Radio configuration of one sweep point.
inline RadioConfig point_radio(const SweepSpec &s, double value, const ModelOptions &opt) {
    RadioConfig r = s.radio;
    double wp = s.omega_p, we = s.omega_e;
    const double lin = to_linear_value(value, s.unit);
    switch (s.parameter) {
    case SweptParameter::OmegaP: wp = lin; break;
    case SweptParameter::OmegaE: we = lin; break;
    case SweptParameter::QThreshold: r.q_threshold = lin; break;
    case SweptParameter::GammaBarSe: r.gamma_bar_se = lin; break;
    case SweptParameter::RateS: r.r_s = value; break;
    case SweptParameter::RateD: r.r_d = value; break;
    }
    if (is_pn(s.metric)) r = with_pn_targets(s.geometry, r, wp, we, opt);
    return r;
}

inline std::vector<Row> evaluate(const SweepSpec &s, const RunOptions &o = {}) {
    validate(s);
    std::vector<RadioConfig> radios;
    for (double v : s.values) radios.push_back(point_radio(s, v, o.model));

    const bool pn = is_pn(s.metric);
    std::vector<std::array<montecarlo::EstimateWithCI, 2>> mc;
    if (std::find(s.evaluators.begin(), s.evaluators.end(), Evaluator::MonteCarlo) != s.evaluators.end())
        mc = montecarlo::estimate_many(s.metric, s.geometry, radios, s.scenario, s.n_trials, s.seed,
                                       o.workers);

    std::vector<CombiningScheme> schemes = s.schemes;
    if (!pn) schemes = {CombiningScheme::SC}; // scheme does not enter the SN outage
    std::vector<Row> rows;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const DerivedParams p = derive_params(s.geometry, radios[i], o.model);
        for (auto sch : schemes) {
            for (auto ev : s.evaluators) {
                Row row;
                row.param = s.values[i];
                row.unit = s.unit;
                row.scheme = pn ? analytics::to_string(sch) : "none";
                row.evaluator = ev;
                switch (ev) {
                case Evaluator::Closed:
                    row.value = s.metric == Metric::SOP    ? analytics::sop_closed(sch, p).value
                                : s.metric == Metric::PNSC ? analytics::pnsc_closed(sch, p).value
                                                           : analytics::sn_outage_closed(p).value;
                    break;
                case Evaluator::Asymptotic:
                    row.value = analytics::sop_asymptotic(sch, p).value;
                    break;
                case Evaluator::Quadrature:
                    row.value = s.metric == Metric::SOP    ? analytics::sop_quadrature(sch, p)
                                : s.metric == Metric::PNSC ? analytics::pnsc_quadrature(sch, p)
                                                           : analytics::sn_outage_quadrature(p);
                    break;
                case Evaluator::MonteCarlo: {
                    const auto &e = mc[i][sch == CombiningScheme::SC ? 0 : 1];
                    row.value = e.estimate;
                    row.std_error = e.std_error;
                    row.n_trials = e.n_trials;
                    row.seed = e.seed;
                    break;
                }
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr const char *kCsvHeader = "param,param_unit,scheme,evaluator,value,std_error,n_trials,seed";

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string to_csv(const std::vector<Row> &rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto &r : rows) {
        os << format_number(r.param) << ',' << to_string(r.unit) << ',' << r.scheme << ','
           << to_string(r.evaluator) << ',' << format_number(r.value) << ',';
        if (r.std_error) os << format_number(*r.std_error);
        os << ',';
        if (r.n_trials) os << *r.n_trials;
        os << ',';
        if (r.seed) os << *r.seed;
        os << '\n';
    }
    return os.str();
}

inline void write_file(const std::filesystem::path &path, const std::string &text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    f.flush();
    if (!f) throw IoError("write failed for " + path.string());
}

/// Evaluate a sweep and write its CSV under `out_dir` (relative output
/// paths are resolved against it). Returns the written path.
inline std::filesystem::path run_sweep(const SweepSpec &s, const std::filesystem::path &out_dir,
                                       const RunOptions &o = {}) {
    const auto rows = evaluate(s, o); // nothing is written if evaluation throws
    std::filesystem::path out = s.output_path;
    if (out.is_relative()) out = out_dir / out;
    write_file(out, to_csv(rows));
    return out;
}

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

inline std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::lround((hi - lo) / step));
    for (int i = 0; i <= n; ++i) v.push_back(lo + i * step);
    return v;
}

/// Sweeps of one figure preset, one spec (and one CSV) per curve family.
inline std::vector<SweepSpec> figure_preset(const std::string &fig, std::uint64_t seed,
                                            std::uint64_t n_trials) {
    std::vector<SweepSpec> out;
    auto base = [&](const std::string &name) {
        SweepSpec s;
        s.name = name;
        s.seed = seed;
        s.n_trials = n_trials;
        s.output_path = name + ".csv";
        return s;
    };
    if (fig == "fig2" || fig == "fig3") {
        for (int n : {20, 50}) {
            SweepSpec s = base(fig + "_N" + std::to_string(n));
            s.metric = fig == "fig2" ? Metric::SOP : Metric::PNSC;
            s.parameter = SweptParameter::OmegaP;
            s.unit = Unit::DB;
            s.values = grid(0.0, 40.0, 2.0);
            s.omega_e = to_linear(10.0);
            s.radio.n_ris = n;
            s.evaluators = fig == "fig2"
                               ? std::vector<Evaluator>{Evaluator::Closed, Evaluator::Asymptotic,
                                                        Evaluator::MonteCarlo}
                               : std::vector<Evaluator>{Evaluator::Closed, Evaluator::MonteCarlo};
            out.push_back(s);
        }
    } else if (fig == "fig4") {
        for (int n : {20, 30, 50}) {
            SweepSpec s = base("fig4_N" + std::to_string(n));
            s.metric = Metric::SnOutage;
            s.parameter = SweptParameter::QThreshold;
            s.unit = Unit::DBW;
            s.values = grid(-20.0, 0.0, 1.0);
            s.radio.n_ris = n;
            s.radio.r_d = 1.0;
            s.evaluators = {Evaluator::Closed, Evaluator::MonteCarlo};
            out.push_back(s);
        }
    } else if (fig == "fig5") {
        const std::pair<const char *, Scenario> scen[] = {
            {"ideal", Scenario::ideal()},
            {"phase_error", Scenario::phase_error()},
            {"no_direct", Scenario::no_direct_link()},
        };
        for (const auto &[tag, sc] : scen) {
            SweepSpec s = base(std::string("fig5_") + tag);
            s.metric = Metric::SnOutage;
            s.parameter = SweptParameter::QThreshold;
            s.unit = Unit::DBW;
            s.values = grid(-20.0, 0.0, 1.0);
            s.radio.n_ris = 30;
            s.radio.r_d = 1.0;
            s.scenario = sc;
            // the closed form describes the ideal co-phased link only
            s.evaluators = sc.kind == montecarlo::ScenarioKind::IdealPhase
                               ? std::vector<Evaluator>{Evaluator::Closed, Evaluator::MonteCarlo}
                               : std::vector<Evaluator>{Evaluator::MonteCarlo};
            out.push_back(s);
        }
    } else {
        throw ValidationError("figure", "unknown figure '" + fig + "' (expected fig2..fig5)");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Configuration files
// ---------------------------------------------------------------------------
//
//   # comment
//   [geometry]            distances and eta
//   [radio]               RadioConfig fields; powers accept "dB"/"dBW"
//   [sweep]               one block per sweep; may override radio/geometry keys
//
// Values ending in "dB" or "dBW" are converted to linear.

namespace detail {

inline std::string trim(std::string s) {
    auto ns = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), ns));
    s.erase(std::find_if(s.rbegin(), s.rend(), ns).base(), s.end());
    return s;
}

inline std::string lower(std::string s) {
    for (auto &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline std::vector<std::string> split_list(const std::string &v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline double parse_double(const std::string &text, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (trim(text.substr(pos)).empty()) return v;
    } catch (const std::exception &) {
    }
    throw ParseError(line, "expected a number, got '" + text + "'");
}

/// Number with an optional dB/dBW suffix, returned in linear units.
inline double parse_quantity(const std::string &raw, int line) {
    std::string t = trim(raw);
    const std::string l = lower(t);
    auto ends = [&](const std::string &suf) {
        return l.size() >= suf.size() && l.compare(l.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends("dbw")) return to_linear(parse_double(trim(t.substr(0, t.size() - 3)), line));
    if (ends("db")) return to_linear(parse_double(trim(t.substr(0, t.size() - 2)), line));
    return parse_double(t, line);
}

inline std::uint64_t parse_count(const std::string &text, int line) {
    const double v = parse_double(text, line);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19)
        throw ParseError(line, "expected a nonnegative integer, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

/// "a:step:b" or a comma list.
inline std::vector<double> parse_values(const std::string &text, int line) {
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::string item;
        std::istringstream is(text);
        while (std::getline(is, item, ':')) parts.push_back(trim(item));
        if (parts.size() != 3) throw ParseError(line, "range must be start:step:stop");
        const double a = parse_double(parts[0], line), st = parse_double(parts[1], line),
                     b = parse_double(parts[2], line);
        if (!(st > 0.0) || b < a) throw ParseError(line, "range needs step > 0 and stop >= start");
        return grid(a, b, st);
    }
    std::vector<double> out;
    for (const auto &it : split_list(text)) out.push_back(parse_double(it, line));
    return out;
}

inline bool set_geometry(NetworkGeometry &g, const std::string &k, const std::string &v, int line) {
    static const std::map<std::string, double NetworkGeometry::*> fields = {
        {"d_sr", &NetworkGeometry::d_sr}, {"d_rd", &NetworkGeometry::d_rd},
        {"d_sd", &NetworkGeometry::d_sd}, {"d_pp", &NetworkGeometry::d_pp},
        {"d_pe", &NetworkGeometry::d_pe}, {"d_re", &NetworkGeometry::d_re},
        {"d_rp", &NetworkGeometry::d_rp}, {"d_se", &NetworkGeometry::d_se},
        {"d_sp", &NetworkGeometry::d_sp}, {"d_o", &NetworkGeometry::d_o},
        {"eta", &NetworkGeometry::eta}};
    const auto it = fields.find(k);
    if (it == fields.end()) return false;
    g.*(it->second) = parse_double(v, line);
    return true;
}

inline bool set_radio(RadioConfig &r, const std::string &k, const std::string &v, int line) {
    static const std::map<std::string, int RadioConfig::*> counts = {
        {"n_ris", &RadioConfig::n_ris}, {"n_pt", &RadioConfig::n_pt}, {"n_eav", &RadioConfig::n_eav}};
    static const std::map<std::string, double RadioConfig::*> quantities = {
        {"p_p", &RadioConfig::p_p},           {"q_threshold", &RadioConfig::q_threshold},
        {"sigma2_d", &RadioConfig::sigma2_d}, {"sigma2_p", &RadioConfig::sigma2_p},
        {"sigma2_e", &RadioConfig::sigma2_e}, {"gamma_bar_se", &RadioConfig::gamma_bar_se},
        {"delta", &RadioConfig::delta}};
    static const std::map<std::string, double RadioConfig::*> rates = {
        {"r_s", &RadioConfig::r_s}, {"r_d", &RadioConfig::r_d}};
    if (const auto it = counts.find(k); it != counts.end()) {
        const auto n = parse_count(v, line);
        if (n > 1'000'000) throw ParseError(line, "count out of range");
        r.*(it->second) = static_cast<int>(n);
        return true;
    }
    if (const auto it = quantities.find(k); it != quantities.end()) {
        r.*(it->second) = parse_quantity(v, line);
        return true;
    }
    if (const auto it = rates.find(k); it != rates.end()) {
        r.*(it->second) = parse_double(v, line);
        return true;
    }
    return false;
}

inline Metric parse_metric(const std::string &v, int line) {
    const auto l = lower(v);
    if (l == "sop") return Metric::SOP;
    if (l == "pnsc") return Metric::PNSC;
    if (l == "sn_outage" || l == "outage") return Metric::SnOutage;
    throw ParseError(line, "unknown metric '" + v + "'");
}

inline SweptParameter parse_parameter(const std::string &v, int line) {
    static const std::map<std::string, SweptParameter> m = {
        {"omega_p", SweptParameter::OmegaP},        {"omega_e", SweptParameter::OmegaE},
        {"q_threshold", SweptParameter::QThreshold}, {"gamma_bar_se", SweptParameter::GammaBarSe},
        {"r_s", SweptParameter::RateS},             {"r_d", SweptParameter::RateD}};
    const auto it = m.find(lower(v));
    if (it == m.end()) throw ParseError(line, "unknown swept parameter '" + v + "'");
    return it->second;
}

inline Unit parse_unit(const std::string &v, int line) {
    const auto l = lower(v);
    if (l == "db") return Unit::DB;
    if (l == "dbw") return Unit::DBW;
    if (l == "linear") return Unit::Linear;
    throw ParseError(line, "unknown unit '" + v + "'");
}

inline Scenario parse_scenario(const std::string &v, int line) {
    const auto l = lower(v);
    if (l == "ideal") return Scenario::ideal();
    if (l == "phase_error") return Scenario::phase_error();
    if (l == "no_direct" || l == "no_direct_link") return Scenario::no_direct_link();
    if (l == "no_ris") return Scenario::no_ris();
    throw ParseError(line, "unknown scenario '" + v + "'");
}

} // namespace detail

/// Parse a configuration text into sweep specifications.
inline std::vector<SweepSpec> parse_config(const std::string &text) {
    using namespace detail;
    NetworkGeometry geom;
    RadioConfig radio;
    struct Pending {
        SweepSpec spec;
        std::vector<std::pair<std::string, std::pair<std::string, int>>> overrides;
        bool has_values = false;
        int line = 0;
    };
    std::vector<Pending> sweeps;
    std::string section;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        if (const auto h = s.find('#'); h != std::string::npos) s.erase(h);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ParseError(line, "unterminated section header");
            section = lower(trim(s.substr(1, s.size() - 2)));
            if (section == "sweep") {
                sweeps.push_back({});
                sweeps.back().line = line;
            } else if (section != "geometry" && section != "radio") {
                throw ParseError(line, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key = value");
        const std::string key = lower(trim(s.substr(0, eq)));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError(line, "empty key");
        if (section.empty()) throw ParseError(line, "key outside of a section");
        if (section == "geometry") {
            if (!set_geometry(geom, key, val, line)) throw ParseError(line, "unknown geometry key '" + key + "'");
        } else if (section == "radio") {
            if (!set_radio(radio, key, val, line)) throw ParseError(line, "unknown radio key '" + key + "'");
        } else {
            auto &p = sweeps.back();
            auto &sp = p.spec;
            if (key == "name") sp.name = val;
            else if (key == "metric") sp.metric = parse_metric(val, line);
            else if (key == "parameter") sp.parameter = parse_parameter(val, line);
            else if (key == "unit") sp.unit = parse_unit(val, line);
            else if (key == "values") {
                sp.values = val.empty() ? std::vector<double>{} : parse_values(val, line);
                p.has_values = true;
            } else if (key == "schemes") {
                sp.schemes.clear();
                for (const auto &it : split_list(val)) {
                    const auto l = lower(it);
                    if (l == "sc") sp.schemes.push_back(CombiningScheme::SC);
                    else if (l == "mrc") sp.schemes.push_back(CombiningScheme::MRC);
                    else throw ParseError(line, "unknown scheme '" + it + "'");
                }
            } else if (key == "evaluators") {
                sp.evaluators.clear();
                for (const auto &it : split_list(val)) {
                    const auto l = lower(it);
                    if (l == "closed") sp.evaluators.push_back(Evaluator::Closed);
                    else if (l == "asymptotic") sp.evaluators.push_back(Evaluator::Asymptotic);
                    else if (l == "quadrature") sp.evaluators.push_back(Evaluator::Quadrature);
                    else if (l == "montecarlo") sp.evaluators.push_back(Evaluator::MonteCarlo);
                    else throw ParseError(line, "unknown evaluator '" + it + "'");
                }
            } else if (key == "scenario") {
                const double b = sp.scenario.bound;
                sp.scenario = parse_scenario(val, line);
                sp.scenario.bound = b;
            } else if (key == "phase_error_bound") sp.scenario.bound = parse_double(val, line);
            else if (key == "trials") sp.n_trials = parse_count(val, line);
            else if (key == "seed") sp.seed = parse_count(val, line);
            else if (key == "output") sp.output_path = val;
            else if (key == "omega_p") sp.omega_p = parse_quantity(val, line);
            else if (key == "omega_e") sp.omega_e = parse_quantity(val, line);
            else p.overrides.push_back({key, {val, line}});
        }
    }
    std::vector<SweepSpec> out;
    for (auto &p : sweeps) {
        p.spec.geometry = geom;
        p.spec.radio = radio;
        for (const auto &[k, vl] : p.overrides)
            if (!set_geometry(p.spec.geometry, k, vl.first, vl.second) &&
                !set_radio(p.spec.radio, k, vl.first, vl.second))
                throw ParseError(vl.second, "unknown sweep key '" + k + "'");
        if (!p.has_values) throw ParseError(p.line, "sweep section has no 'values' key");
        if (p.spec.name.empty()) p.spec.name = "sweep" + std::to_string(out.size() + 1);
        if (p.spec.output_path.empty()) p.spec.output_path = p.spec.name + ".csv";
        out.push_back(std::move(p.spec));
    }
    if (out.empty()) throw ParseError(line, "no [sweep] section");
    return out;
}

inline std::vector<SweepSpec> load_config(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read config " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

} // namespace rissec::sweep
