/*
   Copyright 2026 The d2dsel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "d2dsel/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "d2dsel/analytic.hpp"

namespace d2dsel {

namespace {

constexpr std::string_view kEol = "\r\n";

// Agreement is judged at three binomial standard errors.
constexpr double kAgreementSigmas = 3.0;

}  // namespace

std::optional<VariantSelector> parse_variant(std::string_view name) noexcept {
    if (name == "literal") return VariantSelector::Literal;
    if (name == "corrected") return VariantSelector::Corrected;
    if (name == "both") return VariantSelector::Both;
    return std::nullopt;
}

std::vector<double> parse_value_list(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double x = 0.0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
            throw std::invalid_argument("not a number in value list: '" + std::string(item) + "'");
        }
        values.push_back(x);
        pos = comma + 1;
    }
    return values;
}

std::string format_number(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 9);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

void write_csv(const OutageCurve& curve, VariantSelector variant, std::ostream& out) {
    out << kCsvHeader << kEol;
    const std::string axis(to_string(curve.axis));
    for (const auto& pt : curve.points) {
        out << axis << ',' << format_number(pt.value) << ',';
        if (!pt.ok) {
            out << ",,,,,,,,,,," << pt.estimate.trials << ',' << pt.seed << kEol;
            continue;
        }
        const auto& e = pt.estimate;
        const bool literal = variant != VariantSelector::Corrected;
        const bool corrected = variant != VariantSelector::Literal;
        out << format_number(e.p_oc_hat) << ',' << format_number(e.ci_halfwidth_oc) << ','
            << (literal ? format_number(pt.p_oc_literal) : "") << ','
            << (corrected ? format_number(pt.p_oc_corrected) : "") << ','
            << format_number(e.p_od_hat) << ',' << format_number(e.ci_halfwidth_od) << ','
            << format_number(pt.p_od_analytic);
        for (auto count : e.case_histogram) {
            out << ',' << count;
        }
        out << ',' << e.trials << ',' << pt.seed << kEol;
    }
}

int cmd_run(const SweepSpec& spec, std::ostream& err) {
    SystemConfig base;
    try {
        base = load_config(spec.config_path);
    } catch (const ConfigError& e) {
        err << e.what() << '\n';
        return 2;
    }
    if (spec.trials < 1) {
        err << "invalid argument: trials must be >= 1\n";
        return 2;
    }
    if (spec.values.empty()) {
        err << "invalid argument: values must be non-empty\n";
        return 2;
    }

    OutageCurve curve = sweep(base, spec.axis, spec.values, spec.trials, spec.seed, spec.workers);
    for (auto& pt : curve.points) {
        if (!pt.ok) {
            pt.estimate.trials = spec.trials;
            err << "point " << to_string(spec.axis) << '=' << format_number(pt.value)
                << " failed: " << pt.error << '\n';
        }
    }

    auto tmp = spec.out_path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (out) {
            write_csv(curve, spec.variant, out);
        }
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            err << "cannot write " << spec.out_path.string() << '\n';
            return 2;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, spec.out_path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        err << "cannot write " << spec.out_path.string() << '\n';
        return 2;
    }
    return curve.all_ok() ? 0 : 1;
}

ValidationCheck agreement_check(std::string name, std::uint64_t events, std::uint64_t n,
                                double analytic, bool mandatory) {
    ValidationCheck c;
    c.name = std::move(name);
    c.mandatory = mandatory;
    c.mc = n ? static_cast<double>(events) / n : 0.0;
    c.ci = ci_halfwidth(events, n);
    c.analytic = analytic;
    c.standard_error = n ? std::sqrt(analytic * (1.0 - analytic) / n) : 0.0;
    c.pass = std::abs(c.mc - analytic) <= kAgreementSigmas * c.standard_error;
    return c;
}

bool ValidationReport::mandatory_passed() const noexcept {
    for (const auto& c : checks) {
        if (c.mandatory && !c.pass) {
            return false;
        }
    }
    return true;
}

ValidationReport build_validation_report(const SystemConfig& cfg, std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers) {
    validate(cfg);
    ValidationReport r;
    r.config = cfg;
    r.trials = trials;
    r.seed = seed;
    r.estimate = estimate_outage(cfg, trials, seed, workers);
    const AlphaBounds bounds = alpha_bounds(cfg);
    r.alpha_bound_cellular = bounds.cellular;
    r.alpha_bound_d2d = bounds.d2d;
    r.p_oc_literal = cellular_outage(cfg, CellularVariant::Literal);
    r.p_oc_corrected = cellular_outage(cfg, CellularVariant::Corrected);
    r.p_od_analytic = d2d_outage(cfg);

    const auto cell = cellular_outage_terms(cfg);
    const auto d2d = d2d_outage_terms(cfg);
    const auto& e = r.estimate;
    r.checks.push_back(
        agreement_check("tx_decode_failure", e.tx_decode_failures, e.pair_draws, cell.p, true));
    r.checks.push_back(
        agreement_check("no_decoder", e.case_histogram[0], e.trials, cell.p1, true));
    r.checks.push_back(
        agreement_check("rx_decode_success", e.rx_decode_successes, e.pair_draws, d2d.phi, true));
    r.checks.push_back(agreement_check("cellular_outage[corrected]", e.cellular_outages,
                                       e.trials, r.p_oc_corrected, true));
    r.checks.push_back(agreement_check("cellular_outage[literal]", e.cellular_outages, e.trials,
                                       r.p_oc_literal, false));
    r.checks.push_back(
        agreement_check("d2d_outage", e.d2d_outages, e.trials, r.p_od_analytic, false));
    return r;
}

void write_report(const ValidationReport& r, std::ostream& out) {
    const auto& c = r.config;
    const auto& e = r.estimate;
    out << "config: n_pairs=" << c.n_pairs << " alpha=" << format_number(c.alpha)
        << " rho=" << format_number(c.rho) << " gamma=" << format_number(c.gamma)
        << " eta=" << format_number(c.eta) << " p_c_dbm=" << format_number(watts_to_dbm(c.p_c))
        << " sigma2_dbm=" << format_number(watts_to_dbm(c.sigma2))
        << " r_ct=" << format_number(c.r_ct) << " r_dt=" << format_number(c.r_dt) << '\n';
    out << "trials: " << r.trials << " seed: " << r.seed << '\n';
    out << "alpha bound (cellular): " << format_number(r.alpha_bound_cellular) << '\n';
    out << "alpha bound (d2d): " << format_number(r.alpha_bound_d2d) << '\n';
    out << "cellular target: r_ct=" << format_number(c.r_ct)
        << " gives 1 - r_ct/log2(1+rho/(1-rho)) = " << format_number(r.alpha_bound_cellular)
        << '\n';
    out << "cases: case1=" << e.case_histogram[0] << " case2=" << e.case_histogram[1]
        << " case3=" << e.case_histogram[2] << " case4=" << e.case_histogram[3] << '\n';
    out << "cellular_outage: mc=" << format_number(e.p_oc_hat) << " +/- "
        << format_number(e.ci_halfwidth_oc) << " literal=" << format_number(r.p_oc_literal)
        << " corrected=" << format_number(r.p_oc_corrected) << '\n';
    out << "d2d_outage: mc=" << format_number(e.p_od_hat) << " +/- "
        << format_number(e.ci_halfwidth_od) << " analytic=" << format_number(r.p_od_analytic)
        << '\n';
    for (const auto& chk : r.checks) {
        out << "check " << chk.name << ": mc=" << format_number(chk.mc) << " +/- "
            << format_number(chk.ci) << " analytic=" << format_number(chk.analytic)
            << " gap=" << format_number(chk.mc - chk.analytic)
            << " 3se=" << format_number(kAgreementSigmas * chk.standard_error) << ' '
            << (chk.pass ? "PASS" : "FAIL") << (chk.mandatory ? "" : " (informational)")
            << '\n';
    }
    out << "result: " << (r.mandatory_passed() ? "PASS" : "FAIL") << '\n';
}

int cmd_validate(const std::filesystem::path& config_path, std::uint64_t trials,
                 std::uint64_t seed, unsigned workers, std::ostream& out, std::ostream& err) {
    SystemConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const ConfigError& e) {
        err << e.what() << '\n';
        return 2;
    }
    if (trials < 1) {
        err << "invalid argument: trials must be >= 1\n";
        return 2;
    }
    const ValidationReport report = build_validation_report(cfg, trials, seed, workers);
    write_report(report, out);
    return report.mandatory_passed() ? 0 : 1;
}

}  // namespace d2dsel
