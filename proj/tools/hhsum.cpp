// hhsum: evaluate, verify and self-test hyperharmonic series closed forms.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhsum/closed_forms.hpp"
#include "hhsum/config.hpp"
#include "hhsum/errors.hpp"
#include "hhsum/report_io.hpp"
#include "hhsum/sequences.hpp"
#include "hhsum/verification.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

struct SpecFlags {
    std::string kind = "linear";
    bool alt = false;
    int p = 1, s = 1, p2 = 1, s2 = 1, m = 1, k = 1;

    hhsum::SumSpec spec() const {
        if (kind == "linear") return hhsum::SumSpec::linear(p, s, m, k, alt);
        return hhsum::SumSpec::quadratic(p, s, p2, s2, m, k, alt);
    }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--kind", f.kind, "linear or quadratic")->check(CLI::IsMember({"linear", "quadratic"}));
    cmd->add_flag("--alt", f.alt, "alternating outer sign");
    cmd->add_option("-p", f.p, "harmonic order (first factor)");
    cmd->add_option("-s", f.s, "hyperharmonic depth (first factor)");
    cmd->add_option("--p2", f.p2, "harmonic order (second factor)");
    cmd->add_option("--s2", f.s2, "hyperharmonic depth (second factor)");
    cmd->add_option("-m", f.m, "power of n in the denominator");
    cmd->add_option("-k", f.k, "binomial index");
}

int exit_for(const std::vector<hhsum::VerificationReport>& rs) {
    for (const auto& r : rs)
        if (r.status == hhsum::Status::Discrepancy) return kDiscrepancy;
    return kOk;
}

void print_coeff_tables(std::ostream& os, int r_max) {
    for (int r = 1; r <= r_max; ++r) {
        os << "a(" << r << ",m,j):";
        for (const auto& [mj, v] : hhsum::coeff_table(r).entries())
            os << "  a(" << r << "," << mj.first << "," << mj.second << ")=" << v.to_string();
        os << '\n';
    }
}

// "-p2"/"-s2" are accepted as spellings of "--p2"/"--s2".
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (a == "-p2" || a == "-s2") a = "-" + a;
        out.push_back(a);
    }
    return out;  // CLI11 expects reversed order
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperharmonic series: closed forms, oracles and verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::optional<int> precision;
    std::optional<std::int64_t> exact_terms;
    app.add_option("--config", config_path, "key=value or JSON config file")->check(CLI::ExistingFile);
    app.add_option("--precision", precision, "significant digits (>= 15)");
    app.add_option("--exact-terms", exact_terms, "oracle terms formed from exact rationals");

    SpecFlags ev;
    bool ev_json = false;
    auto* eval = app.add_subcommand("eval", "evaluate a series through the closed forms");
    add_spec_flags(eval, ev);
    eval->add_flag("--json", ev_json, "single-line JSON {value, err}");

    SpecFlags vf;
    bool vf_json = false, vf_csv = false;
    std::optional<double> vf_tol;
    std::int64_t vf_max_terms = 0;
    auto* verify = app.add_subcommand("verify", "compare closed form and direct summation");
    add_spec_flags(verify, vf);
    verify->add_option("--tol", vf_tol, "absolute tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--max-terms", vf_max_terms, "oracle term budget")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", vf_json);
    verify->add_flag("--csv", vf_csv);

    std::string suite_name;
    std::uint64_t n_max = 200;
    int r_max = 5;
    bool su_json = false, su_csv = false;
    std::optional<double> su_tol;
    auto* suite = app.add_subcommand("suite", "run a named self-test suite");
    suite->add_option("name", suite_name, "coeffs|identities|integrals|examples|euler|lemmas|grid|all")
        ->required()
        ->check(CLI::IsMember({"coeffs", "identities", "integrals", "examples", "euler", "lemmas", "grid", "all"}));
    suite->add_option("--n-max", n_max, "largest n for exact checks");
    suite->add_option("--r-max", r_max, "largest order for exact checks")->check(CLI::Range(1, 12));
    suite->add_option("--tol", su_tol, "absolute tolerance")->check(CLI::PositiveNumber);
    suite->add_flag("--json", su_json);
    suite->add_flag("--csv", su_csv);

    try {
        std::vector<std::string> args = normalize_args(argc, argv);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        hhsum::EngineConfig cfg = hhsum::apply_environment(hhsum::EngineConfig{});
        if (!config_path.empty()) cfg = hhsum::load_config_file(config_path, cfg);
        if (precision) cfg.precision_digits = *precision;
        if (exact_terms) cfg.exact_terms = *exact_terms;
        cfg.validate();
        hhsum::configure(cfg);
        const auto digits = static_cast<unsigned>(cfg.precision_digits);

        if (*eval) {
            const hhsum::SumSpec spec = ev.spec();
            spec.validate();
            const hhsum::Approx v = hhsum::theorem_value(spec);
            if (ev_json) {
                nlohmann::json j;
                j["value"] = hhsum::format_real(v.value, digits);
                j["err"] = v.err;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << hhsum::format_real(v.value, digits) << " +- " << v.err << '\n';
            }
            return kOk;
        }

        const auto fmt = [](bool json, bool csv) {
            return json ? hhsum::OutputFormat::Json : csv ? hhsum::OutputFormat::Csv : hhsum::OutputFormat::Text;
        };

        if (*verify) {
            const hhsum::SumSpec spec = vf.spec();
            spec.validate();
            const auto r = hhsum::verify(spec, vf_tol.value_or(cfg.default_tolerance), vf_max_terms);
            hhsum::write_reports(std::cout, {r}, fmt(vf_json, vf_csv));
            if (r.status == hhsum::Status::Skipped) return kUsage;
            return exit_for({r});
        }

        const double tol = su_tol.value_or(cfg.default_tolerance);
        std::vector<hhsum::VerificationReport> rs;
        auto append = [&rs](std::vector<hhsum::VerificationReport> more) {
            rs.insert(rs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        };
        const bool all = suite_name == "all";
        if (all || suite_name == "coeffs") {
            if (!su_json && !su_csv) print_coeff_tables(std::cout, r_max);
            append(hhsum::coeffs_suite(r_max, n_max));
        }
        if (all || suite_name == "identities") append(hhsum::identities_suite(n_max, r_max));
        if (all || suite_name == "integrals") append(hhsum::section4_suite(tol));
        if (all || suite_name == "examples") append(hhsum::example_suite(tol));
        if (all || suite_name == "euler") append(hhsum::euler_suite(tol));
        if (all || suite_name == "lemmas") append(hhsum::lemma_suite(tol));
        if (all || suite_name == "grid") append(hhsum::grid_suite(su_tol.value_or(1e-6)));
        hhsum::write_reports(std::cout, rs, fmt(su_json, su_csv));
        return exit_for(rs);
    } catch (const hhsum::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
