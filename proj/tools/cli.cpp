// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockhrt/bargmann.hpp"
#include "fockhrt/deepzero.hpp"
#include "fockhrt/error.hpp"
#include "fockhrt/exact/lattice.hpp"
#include "fockhrt/exact/number_theory.hpp"
#include "fockhrt/hrt.hpp"
#include "fockhrt/json_io.hpp"
#include "fockhrt/svg.hpp"

namespace fockhrt::cli {

namespace {

using json = nlohmann::json;

const std::map<std::string, std::vector<std::string>> kFormats = {
    {"hrt-check", {"json", "csv"}},        {"deep-zero", {"json", "csv", "svg"}},
    {"lattice", {"json"}},                 {"phi", {"json", "csv"}},
    {"bargmann", {"json", "csv"}},         {"roots-figure", {"svg"}},
};

const std::vector<std::size_t> kDefaultSweep = {32, 48, 64, 80, 96};

std::string num(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::optional<json> read_input(const std::string& input) {
    if (input.empty()) return std::nullopt;
    std::string text;
    if (input.front() == '{' || input.front() == '[') {
        text = input;
    } else {
        std::ifstream f(input);
        if (!f) throw invalid_argument("cannot open input file '" + input + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

cplx beta_of(const RunConfig& c) { return {c.beta_re, c.beta_im}; }

std::string hrt_check(const RunConfig& c, const std::string& format) {
    io::HrtInput in;
    if (auto j = read_input(c.input)) {
        in = io::hrt_input_from_json(*j);
        if (c.M) in.M = *c.M;
    } else {
        in.M = c.M.value_or(kDefaultTruncation);
        if (c.d) {
            const cplx beta = beta_of(c);
            in.config = roots_config(*c.d, beta);
        } else {
            std::mt19937_64 rng(c.seed);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int k = 0; k < 4; ++k) {
                const double r = 2.0 * std::sqrt(u(rng));
                in.config.points.push_back(std::polar(r, 2.0 * std::numbers::pi * u(rng)));
            }
        }
        in.window = gaussian_window(in.M);
    }
    const Certificate cert = certify_independence(in.config, in.window, in.M);
    std::string known;
    try {
        known = to_string(classify_known_case(in.config));
    } catch (const EngineError&) {
        known = "unavailable";
    }
    const std::string label = known == "SmallN" || known == "ParallelPairs" || known == "RegularLattice"
                                  ? "PROVEN-CASE"
                                  : "EVIDENCE";
    if (format == "csv") {
        std::ostringstream os;
        os << "n_points,M,min_eigenvalue,condition_number,tail_slack,verdict,known_case,label\n";
        os << in.config.points.size() << ',' << in.M << ',' << num(cert.min_eigenvalue) << ','
           << num(cert.condition_number) << ',' << num(cert.tail_slack) << ','
           << to_string(*cert.verdict) << ',' << known << ',' << label << '\n';
        return os.str();
    }
    json out = {{"input", io::hrt_input_to_json(in)},
                {"certificate", io::certificate_to_json(cert)},
                {"known_case", known},
                {"label", label}};
    return out.dump(2) + "\n";
}

std::string deep_zero(const RunConfig& c, const std::string& format) {
    int d = c.d.value_or(2);
    cplx beta = beta_of(c);
    std::optional<std::size_t> guard = c.guard;
    std::vector<std::size_t> sweep = kDefaultSweep;
    if (auto j = read_input(c.input)) {
        const DeepZeroProblem p = io::problem_from_json(*j);
        d = p.d;
        beta = p.beta;
        sweep = {p.M};
        if (j->contains("guard")) guard = p.guard;
    }
    if (c.M) sweep = {*c.M};
    std::sort(sweep.begin(), sweep.end());

    std::vector<io::DeepZeroRow> rows;
    for (const std::size_t M : sweep) {
        DeepZeroProblem p{d, beta, M, guard ? *guard : deep_zero_default_guard(beta, M)};
        p.validate();
        const double s = min_singular_value(assemble_constraints(p), p.guard);
        rows.push_back({p, s, deep_zero_label(d)});
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "d,beta_re,beta_im,M,guard,sigma_min,label\n";
        for (const auto& r : rows) {
            os << r.problem.d << ',' << num(r.problem.beta.real()) << ',' << num(r.problem.beta.imag())
               << ',' << r.problem.M << ',' << r.problem.guard << ',' << num(r.sigma_min) << ','
               << r.label << '\n';
        }
        return os.str();
    }
    if (format == "svg") {
        SigmaSeries s{"d=" + std::to_string(d), {}};
        for (const auto& r : rows) s.points.emplace_back(static_cast<double>(r.problem.M), r.sigma_min);
        return sigma_curve_svg({s});
    }
    json out = json::array();
    for (const auto& r : rows) out.push_back(io::deep_zero_row_to_json(r));
    return json{{"rows", out}}.dump(2) + "\n";
}

std::string lattice(const RunConfig& c) {
    json out;
    if (auto j = read_input(c.input)) {
        std::vector<exact::CycloElement> pts;
        const int n = j->at("conductor").get<int>();
        for (const auto& coeffs : j->at("points")) {
            std::vector<exact::Rational> q;
            for (const auto& x : coeffs) q.push_back(io::rational_from_json(x));
            pts.push_back(exact::CycloElement::from_power_sum(n, q));
        }
        out = io::membership_to_json(exact::lattice_membership_decision(pts));
    } else {
        if (!c.d) throw invalid_argument("lattice needs --d or --input");
        out = io::membership_to_json(exact::roots_in_lattice(*c.d));
        out["d"] = *c.d;
    }
    return out.dump(2) + "\n";
}

std::string phi(const RunConfig& c, const std::string& format) {
    const long bound = c.bound.value_or(100);
    if (bound < 1) throw invalid_argument("--bound must be >= 1");
    const auto twos = exact::phi_equals_two_solutions(bound);
    if (format == "csv") {
        std::ostringstream os;
        os << "n,phi\n";
        for (long n = 1; n <= bound; ++n) os << n << ',' << exact::euler_phi(n) << '\n';
        return os.str();
    }
    json table = json::array();
    for (long n = 1; n <= bound; ++n) table.push_back({{"n", n}, {"phi", exact::euler_phi(n)}});
    return json{{"bound", bound}, {"table", table}, {"phi_equals_two", twos}}.dump(2) + "\n";
}

std::string bargmann(const RunConfig& c, const std::string& format) {
    const auto j = read_input(c.input);
    const SampledSignal s = j ? io::signal_from_json(*j) : SampledSignal::sample(default_rule(), normalized_gaussian);
    CoefficientOptions opts;
    if (c.radius) opts.radius = *c.radius;
    const std::size_t M = c.M.value_or(32);
    const FockVector f = bargmann_coefficients(s, M, opts);
    if (format == "csv") {
        std::ostringstream os;
        os << "j,re,im\n";
        for (std::size_t k = 0; k < M; ++k) os << k << ',' << num(f[k].real()) << ',' << num(f[k].imag()) << '\n';
        return os.str();
    }
    return json{{"M", M}, {"radius", opts.radius}, {"coefficients", io::fock_to_json(f)}}.dump(2) + "\n";
}

std::string roots_figure(const RunConfig& c) {
    if (!c.d) throw invalid_argument("roots-figure needs --d");
    return roots_figure_svg(*c.d, exact::roots_in_lattice(*c.d));
}

void report(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto it = kFormats.find(config.subcommand);
        if (it == kFormats.end()) throw invalid_argument("unknown subcommand '" + config.subcommand + "'");
        const std::string format = config.format.empty() ? it->second.front() : config.format;
        if (std::find(it->second.begin(), it->second.end(), format) == it->second.end()) {
            throw invalid_argument("format '" + format + "' is not available for " + config.subcommand);
        }
        std::string text;
        if (config.subcommand == "hrt-check") text = hrt_check(config, format);
        else if (config.subcommand == "deep-zero") text = deep_zero(config, format);
        else if (config.subcommand == "lattice") text = lattice(config);
        else if (config.subcommand == "phi") text = phi(config, format);
        else if (config.subcommand == "bargmann") text = bargmann(config, format);
        else text = roots_figure(config);

        if (config.output.empty()) {
            out << text;
        } else {
            std::ofstream f(config.output, std::ios::binary);
            if (!f) throw invalid_argument("cannot open output file '" + config.output + "'");
            f << text;
        }
        return 0;
    } catch (const InputError& e) {
        report(err, e.kind(), e.what());
        return 1;
    } catch (const EngineError& e) {
        report(err, e.kind(), e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        report(err, "invalid-argument", e.what());
        return 1;
    } catch (const std::exception& e) {
        report(err, "internal-error", e.what());
        return 2;
    }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fock-space engines for Weyl-translate independence and deep zeros"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    std::size_t M = 0, guard = 0;
    int d = 0;
    long bound = 0;
    double radius = 0;
    for (const auto& name : kSubcommands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input, "input file or inline JSON");
        sub->add_option("--output", cfg.output, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "json, csv or svg");
        sub->add_option("--seed", cfg.seed, "seed for randomized inputs");
        sub->add_option("--M", M, "truncation dimension");
        sub->add_option("--guard", guard, "guard band");
        sub->add_option("--d", d, "order of the root of unity");
        sub->add_option("--beta-re", cfg.beta_re, "real part of beta");
        sub->add_option("--beta-im", cfg.beta_im, "imaginary part of beta");
        sub->add_option("--bound", bound, "scan bound for phi");
        sub->add_option("--radius", radius, "contour radius for bargmann");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report(err, "invalid-argument", e.what());
        return 1;
    }
    auto* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    if (sub->count("--M")) cfg.M = M;
    if (sub->count("--guard")) cfg.guard = guard;
    if (sub->count("--d")) cfg.d = d;
    if (sub->count("--bound")) cfg.bound = bound;
    if (sub->count("--radius")) cfg.radius = radius;
    return run(cfg, out, err);
}

}  // namespace fockhrt::cli
