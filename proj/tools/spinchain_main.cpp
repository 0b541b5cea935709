// Command-line front end: build chains from named models or JSON files, run
// transfer/revival checks, and emit reports plus CSV time series.
//
// Exit codes: 0 success or check passed, 1 check failed, 2 usage/input error.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spinchain/chain.hpp"
#include "spinchain/chain_json.hpp"
#include "spinchain/deformation.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/fullspace.hpp"
#include "spinchain/models.hpp"
#include "spinchain/spectral.hpp"
#include "spinchain/pi_token.hpp"
#include "spinchain/transfer.hpp"

namespace {

using namespace spinchain;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += fmt(values[i]);
    }
    return out;
}

struct ChainArgs {
    std::string model;
    std::string file;
    long long n = -1;
    std::optional<double> shift;
};

void add_chain_options(CLI::App* cmd, ChainArgs& args, bool with_shift = true) {
    cmd->add_option("--model", args.model, "named model: krawtchouk or uniform");
    cmd->add_option("--file", args.file, "chain JSON file");
    cmd->add_option("--n", args.n, "chain order n (sites 0..n); required with --model");
    if (with_shift) {
        args.shift.reset();
        cmd->add_option("--shift", args.shift, "add a constant to every field");
    }
}

ChainSpec resolve_chain(const ChainArgs& args) {
    ChainSpec chain;
    if (!args.file.empty()) {
        if (!args.model.empty())
            throw std::invalid_argument("--model and --file are mutually exclusive");
        chain = load_chain_json(args.file);
    } else if (!args.model.empty()) {
        if (args.n < 0) throw std::invalid_argument("--model needs --n");
        const auto n = static_cast<std::size_t>(args.n);
        if (args.model == "krawtchouk")
            chain = krawtchouk(n);
        else if (args.model == "uniform")
            chain = uniform(n);
        else
            throw std::invalid_argument("unknown model \"" + args.model + "\"");
    } else {
        throw std::invalid_argument("need --model or --file");
    }
    if (args.shift) chain = shift_fields(chain, *args.shift);
    return chain;
}

void write_text(const std::string& path, const std::string& text) {
    // stage then rename so readers never observe a partial file
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << text;
        if (!out) throw std::runtime_error("failed writing " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text(path, text);
}

std::string evolution_csv(const ChainSpec& chain, const std::vector<double>& times) {
    const SpectralData spec = eigendecompose(chain);
    std::vector<complex> e0(chain.sites(), 0.0);
    e0[0] = 1.0;
    std::ostringstream csv;
    csv << "t,site,re,im,prob\n";
    for (double t : times) {
        const std::vector<complex> psi = evolve(spec, e0, t);
        for (std::size_t site = 0; site < psi.size(); ++site)
            csv << fmt(t) << ',' << site << ',' << fmt(psi[site].real()) << ','
                << fmt(psi[site].imag()) << ',' << fmt(std::norm(psi[site])) << '\n';
    }
    return csv.str();
}

int run_model(const ChainArgs& args, const std::string& out_path) {
    const ChainSpec chain = resolve_chain(args);
    std::cout << "n=" << chain.order() << '\n'
              << "n_sites=" << chain.sites() << '\n'
              << "couplings=" << join(chain.couplings) << '\n'
              << "fields=" << join(chain.fields) << '\n'
              << "mirror_symmetric=" << (is_mirror_symmetric(chain) ? "true" : "false")
              << '\n';
    if (!out_path.empty()) save_chain_json(chain, out_path);
    return kExitPass;
}

int run_deform(const ChainArgs& args, double theta, const std::string& out_path) {
    const ChainSpec base = resolve_chain(args);
    const ChainSpec deformed = deform_closed_form(base, theta);
    const ConjugationResult dense = deform_conjugate_detailed(base, theta);

    double route_gap = 0.0;
    for (std::size_t k = 0; k < deformed.couplings.size(); ++k)
        route_gap = std::max(route_gap,
                             std::abs(deformed.couplings[k] - dense.chain.couplings[k]));
    for (std::size_t l = 0; l < deformed.fields.size(); ++l)
        route_gap = std::max(route_gap, std::abs(deformed.fields[l] - dense.chain.fields[l]));

    std::cout << "theta=" << fmt(theta) << '\n'
              << "couplings=" << join(deformed.couplings) << '\n'
              << "fields=" << join(deformed.fields) << '\n'
              << "band_leakage=" << fmt(dense.band_leakage, "%.3e") << '\n'
              << "route_disagreement=" << fmt(route_gap, "%.3e") << '\n'
              << "isospectral_residual=" << fmt(isospectral_residual(base, deformed), "%.3e")
              << '\n';
    if (!out_path.empty()) save_chain_json(deformed, out_path);
    return kExitPass;
}

int run_evolve(const ChainArgs& args, const std::string& time_token,
               const std::string& t_max_token, long long steps,
               const std::string& out_path) {
    const ChainSpec chain = resolve_chain(args);
    std::vector<double> times;
    if (!time_token.empty()) {
        times.push_back(parse_pi_token(time_token));
    } else if (!t_max_token.empty()) {
        const double t_max = parse_pi_token(t_max_token);
        if (!(t_max > 0.0)) throw std::invalid_argument("--t-max must be positive");
        if (steps == 0) steps = static_cast<long long>(t_max / 1e-3) + 1; // default step 1e-3
        if (steps < 2) throw std::invalid_argument("--steps must be at least 2");
        for (long long s = 0; s < steps; ++s)
            times.push_back(t_max * static_cast<double>(s) / static_cast<double>(steps - 1));
    } else {
        throw std::invalid_argument("need --time, or --t-max with --steps >= 2");
    }
    emit(out_path, evolution_csv(chain, times));
    return kExitPass;
}

int run_check_pst(const ChainArgs& args, const std::string& time_token, double tolerance,
                  bool phase_free) {
    const ChainSpec chain = resolve_chain(args);
    const PstReport report = pst_report(chain, parse_pi_token(time_token));
    std::cout << "probe_time=" << fmt(report.probe_time) << '\n'
              << "strict_residual=" << fmt(report.strict_residual, "%.3e") << '\n'
              << "phase_opt_residual=" << fmt(report.phase_opt_residual, "%.3e") << '\n'
              << "phi_star=" << fmt(report.phi_star) << '\n'
              << "end_fidelity=" << fmt(report.end_fidelity, "%.9f") << '\n';
    const double checked = phase_free ? report.phase_opt_residual : report.strict_residual;
    return checked <= tolerance ? kExitPass : kExitCheckFailed;
}

int run_check_revival(const ChainArgs& args, double theta, const std::string& time_token,
                      double tolerance) {
    // --model builds the mirror-symmetric base and deforms it here;
    // --file is taken as an already-deformed chain.
    ChainSpec chain = resolve_chain(args);
    if (!args.model.empty()) chain = deform_closed_form(chain, theta);
    const double t = parse_pi_token(time_token);

    const RevivalReport report = revival_report(chain, t);
    const PatternReport pattern = revival_pattern_check(chain, t, theta, tolerance);
    const double expected_alpha = std::abs(std::sin(2.0 * theta));
    const double expected_beta = std::abs(std::cos(2.0 * theta));

    std::cout << "probe_time=" << fmt(t) << '\n'
              << "alpha_abs=" << fmt(std::abs(report.alpha)) << '\n'
              << "beta_abs=" << fmt(std::abs(report.beta)) << '\n'
              << "expected_alpha_abs=" << fmt(expected_alpha) << '\n'
              << "expected_beta_abs=" << fmt(expected_beta) << '\n'
              << "leak=" << fmt(report.leak, "%.3e") << '\n'
              << "pattern_residual=" << fmt(pattern.max_residual, "%.3e") << '\n';

    const bool pass = report.leak <= tolerance &&
                      std::abs(std::abs(report.alpha) - expected_alpha) <= tolerance &&
                      std::abs(std::abs(report.beta) - expected_beta) <= tolerance &&
                      pattern.pass;
    return pass ? kExitPass : kExitCheckFailed;
}

int run_sweep_theta(const ChainArgs& args, const std::string& time_token, long long steps,
                    const std::string& out_path) {
    const ChainSpec base = resolve_chain(args);
    const double t = parse_pi_token(time_token);

    // independent angles: fan out, merge rows by index, write once at the end
    std::vector<std::string> rows(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < steps; ++k) {
        const double theta =
            std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
        const RevivalReport report = revival_report(deform_closed_form(base, theta), t);
        rows[static_cast<std::size_t>(k)] = fmt(theta) + "," + fmt(std::abs(report.alpha)) +
                                            "," + fmt(std::abs(report.beta)) + "," +
                                            fmt(report.leak) + "\n";
    }
    std::string csv = "theta,alpha_abs,beta_abs,leak\n";
    for (const std::string& row : rows) csv += row;
    emit(out_path, csv);
    return kExitPass;
}

int run_full_sim(const ChainArgs& args, const std::optional<std::string>& theta,
                 const std::string& time_token, double tolerance) {
    ChainSpec chain = resolve_chain(args);
    if (theta) chain = deform_closed_form(chain, parse_pi_token(*theta));
    const double t = parse_pi_token(time_token);
    const std::size_t n = chain.order();

    const FullHamiltonian full = build_full(chain);
    const double commutator = magnetization_commutator_residual(full);
    const double restriction = max_abs_diff(restrict_one_excitation(full), to_matrix(chain));

    const SpectralData spec = eigendecompose_dense(full.entries);
    std::vector<complex> psi0(full.dimension(), 0.0);
    psi0[1] = 1.0; // excitation at site 0
    const std::vector<complex> psi = evolve(spec, psi0, t);

    double norm2 = 0.0;
    for (const complex& c : psi) norm2 += std::norm(c);
    std::cout << "commutator_residual=" << fmt(commutator, "%.3e") << '\n'
              << "restriction_residual=" << fmt(restriction, "%.3e") << '\n'
              << "norm_drift=" << fmt(std::abs(std::sqrt(norm2) - 1.0), "%.3e") << '\n';
    for (std::size_t site = 0; site <= n; ++site) {
        double p = 0.0;
        for (std::size_t b = 0; b < full.dimension(); ++b)
            if ((b >> site) & 1u) p += std::norm(psi[b]);
        std::cout << "site_prob_" << site << "=" << fmt(p) << '\n';
    }
    if (n >= 1)
        std::cout << "end_pair_concurrence=" << fmt(concurrence_after_revival(chain, t, 0, n))
                  << '\n';
    return (commutator <= tolerance && restriction <= tolerance) ? kExitPass
                                                                 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"XX spin chain transfer and fractional-revival toolkit"};
    app.require_subcommand(1);

    ChainArgs chain_args;
    std::string time_token;
    std::string out_path;
    std::string theta_token;
    std::optional<std::string> theta_opt;
    double tolerance = 1e-9;
    std::string t_max_token;
    long long steps = 0;
    long long sweep_steps = 64;
    bool phase_free = false;

    auto* model = app.add_subcommand("model", "build a named chain and print/save it");
    add_chain_options(model, chain_args);
    model->add_option("--out", out_path, "write chain JSON here");

    auto* deform = app.add_subcommand("deform", "apply the isospectral deformation");
    add_chain_options(deform, chain_args);
    deform->add_option("--theta", theta_token, "deformation angle in [0, pi), accepts pi tokens")
        ->required();
    deform->add_option("--out", out_path, "write deformed chain JSON here");

    auto* evolve_cmd = app.add_subcommand("evolve", "CSV of the end-site state evolution");
    add_chain_options(evolve_cmd, chain_args);
    evolve_cmd->add_option("--time", time_token, "single probe time (accepts pi tokens)");
    evolve_cmd->add_option("--t-max", t_max_token, "scan horizon, accepts pi tokens");
    evolve_cmd->add_option("--steps", steps, "scan sample count (>= 2)");
    evolve_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* check_pst = app.add_subcommand("check-pst", "residuals of U(T) against R");
    add_chain_options(check_pst, chain_args);
    check_pst->add_option("--time", time_token, "probe time")->required();
    check_pst->add_option("--tolerance", tolerance, "pass threshold (default 1e-9)");
    check_pst->add_flag("--phase-free", phase_free, "judge the phase-optimized residual");

    auto* check_revival = app.add_subcommand("check-revival", "two-site revival check");
    add_chain_options(check_revival, chain_args);
    check_revival->add_option("--theta", theta_token, "deformation angle")->required();
    check_revival->add_option("--time", time_token, "probe time")->required();
    check_revival->add_option("--tolerance", tolerance, "pass threshold (default 1e-9)");

    auto* sweep = app.add_subcommand("sweep-theta", "CSV of revival amplitudes over theta");
    add_chain_options(sweep, chain_args);
    sweep->add_option("--time", time_token, "probe time")->required();
    sweep->add_option("--steps", sweep_steps, "theta samples over [0, pi)");
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* full_sim = app.add_subcommand("full-sim", "full-Hilbert-space consistency run");
    add_chain_options(full_sim, chain_args);
    full_sim->add_option("--theta", theta_opt, "deform the chain before simulating");
    full_sim->add_option("--time", time_token, "probe time")->required();
    full_sim->add_option("--tolerance", tolerance, "pass threshold (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (model->parsed()) return run_model(chain_args, out_path);
        if (deform->parsed())
            return run_deform(chain_args, parse_pi_token(theta_token), out_path);
        if (evolve_cmd->parsed())
            return run_evolve(chain_args, time_token, t_max_token, steps, out_path);
        if (check_pst->parsed())
            return run_check_pst(chain_args, time_token, tolerance, phase_free);
        if (check_revival->parsed())
            return run_check_revival(chain_args, parse_pi_token(theta_token), time_token,
                                     tolerance);
        if (sweep->parsed())
            return run_sweep_theta(chain_args, time_token, sweep_steps, out_path);
        if (full_sim->parsed())
            return run_full_sim(chain_args, theta_opt, time_token, tolerance);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
