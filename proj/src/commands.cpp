#include "modinv/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "modinv/figure.hpp"
#include "modinv/forward_modular.hpp"
#include "modinv/inverse_chain.hpp"
#include "modinv/literal.hpp"
#include "modinv/moduli_reduction.hpp"
#include "modinv/rng.hpp"
#include "modinv/special_values.hpp"

namespace modinv {

namespace {

// Components that are pure numerical noise (the reduced tau of an imaginary
// axis point carries Re ~ 1e-16) print as exact zeros.
double snap_component(double v) {
    if (std::abs(v) <= 1e-10) return 0.0;
    if (std::abs(v - 0.5) <= 1e-10) return 0.5;
    if (std::abs(v + 0.5) <= 1e-10) return -0.5;
    return v;
}

std::string format_tau(UpperHalfPoint tau, int digits) {
    return format_complex({snap_component(tau.re()), tau.im()}, digits);
}

std::string format_branch(BranchChoice branch) {
    std::string s = "inner_sqrt_sign=";
    s += branch.inner_sqrt_sign > 0 ? "+1" : "-1";
    s += " cbrt_index=";
    s += char('0' + branch.cbrt_index);
    return s;
}

} // namespace

int cmd_jeval(std::string_view tau_literal, const CliConfig& cfg,
              std::ostream& out, std::ostream& err) {
    const auto parsed = parse_complex(tau_literal);
    if (!parsed) {
        err << "jeval: cannot parse complex literal '" << tau_literal << "'\n";
        return kExitUsage;
    }
    try {
        const UpperHalfPoint tau(*parsed);
        const Complex j = cfg.klein ? j_klein(tau) : j_invariant(tau);
        if (std::abs(j.imag()) <= 1e-12 * (1.0 + std::abs(j.real())))
            out << format_real(j.real(), cfg.digits) << "\n";
        else
            out << format_complex(j, cfg.digits) << "\n";
        return kExitOk;
    } catch (const std::runtime_error& e) {
        err << "jeval: " << e.what() << "\n";
        return kExitMathDomain;
    }
}

int cmd_jinv(std::string_view x_literal, const CliConfig& cfg,
             std::ostream& out, std::ostream& err) {
    const auto parsed = parse_complex(x_literal);
    if (!parsed) {
        err << "jinv: cannot parse complex literal '" << x_literal << "'\n";
        return kExitUsage;
    }
    Complex x = *parsed;
    if (cfg.klein) x /= 1728.0;
    try {
        const InversionResult result = invert_verified(x, cfg.tol);
        out << "tau = " << format_tau(result.tau, cfg.digits) << "\n";
        out << "branch = " << format_branch(result.branch_used) << "\n";
        out << "residual = " << format_real(result.residual, 3) << "\n";
        return kExitOk;
    } catch (const std::runtime_error& e) {
        err << "jinv: " << e.what() << "\n";
        return kExitMathDomain;
    }
}

int cmd_verify(const CliConfig& cfg, const std::string& json_path,
               std::ostream& out, std::ostream& err) {
    const auto& entries = table();
    nlohmann::json report = nlohmann::json::array();
    bool all_ok = true;

    out << "idx  tau                 expected        forward         rel_err    roundtrip\n";
    for (const SpecialValueEntry& entry : entries) {
        const double expected = evaluate_entry(entry);
        double rel_err = std::numeric_limits<double>::infinity();
        double forward_re = std::numeric_limits<double>::quiet_NaN();
        bool roundtrip_ok = false;
        try {
            const Complex forward = j_invariant(entry.tau);
            forward_re = forward.real();
            rel_err = std::abs(forward - expected) / (1.0 + std::abs(expected));
            const InversionResult inv = invert_verified(expected, cfg.tol);
            roundtrip_ok = is_equivalent(inv.tau, entry.tau, cfg.tol);
        } catch (const std::runtime_error&) {
            roundtrip_ok = false;
        }
        const bool row_ok = rel_err <= cfg.tol && roundtrip_ok;
        all_ok = all_ok && row_ok;

        out << (row_ok ? "ok   " : "FAIL ");
        out << entry.label;
        for (std::size_t i = entry.label.size(); i < 16; ++i) out << ' ';
        out << ' ' << format_real(expected, 10) << "  " << format_real(forward_re, 10)
            << "  " << format_real(rel_err, 3) << "  "
            << (roundtrip_ok ? "ok" : "FAIL") << "\n";

        report.push_back({
            {"label", entry.label},
            {"tau", {entry.tau.re(), entry.tau.im()}},
            {"expected", expected},
            {"forward", forward_re},
            {"rel_err", rel_err},
            {"roundtrip_ok", roundtrip_ok},
        });
    }

    const bool ascending = check_ascending(entries);
    all_ok = all_ok && ascending;
    out << "ascending chain: " << (ascending ? "ok" : "FAIL") << "\n";
    out << (all_ok ? "verify: 19/19 rows pass" : "verify: FAILURES present") << "\n";

    if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) {
            err << "verify: cannot open '" << json_path << "' for writing\n";
            return kExitIo;
        }
        file << report.dump(2) << "\n";
        if (!file.good()) {
            err << "verify: write to '" << json_path << "' failed\n";
            return kExitIo;
        }
    }
    return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_roundtrip(long samples, const CliConfig& cfg,
                  std::ostream& out, std::ostream& err) {
    if (samples < 1) {
        err << "roundtrip: samples must be >= 1\n";
        return kExitUsage;
    }
    const double accept = cfg.tol * 10.0;
    SplitMix64 rng(cfg.seed);
    std::vector<double> defects;
    defects.reserve(std::size_t(samples));
    std::array<long, 6> histogram{};
    long failures = 0;

    const auto& branches = all_branch_choices();
    for (long i = 0; i < samples; ++i) {
        const double re = rng.uniform(-5.0, 5.0);
        const double im = rng.uniform(-5.0, 5.0);
        try {
            const InversionResult result = invert_verified({re, im}, accept);
            defects.push_back(result.residual);
            const auto it = std::find(branches.begin(), branches.end(), result.branch_used);
            ++histogram[std::size_t(it - branches.begin())];
        } catch (const std::runtime_error&) {
            ++failures;
        }
    }

    double max_defect = 0.0;
    double median_defect = 0.0;
    if (!defects.empty()) {
        max_defect = *std::max_element(defects.begin(), defects.end());
        std::nth_element(defects.begin(), defects.begin() + defects.size() / 2, defects.end());
        median_defect = defects[defects.size() / 2];
    }

    out << "samples = " << samples << "\n";
    out << "failures = " << failures << "\n";
    out << "max defect = " << format_real(max_defect, 3) << "\n";
    out << "median defect = " << format_real(median_defect, 3) << "\n";
    out << "branch histogram =";
    for (long count : histogram) out << ' ' << count;
    out << "\n";

    return (failures == 0 && max_defect <= accept) ? kExitOk : kExitVerificationFailed;
}

int cmd_figure(const std::string& out_path, const CliConfig&,
               std::ostream&, std::ostream& err) {
    std::ofstream file(out_path);
    if (!file) {
        err << "figure: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    file << render_figure_svg();
    if (!file.good()) {
        err << "figure: write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace modinv
