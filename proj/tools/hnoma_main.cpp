// hnoma — hybrid-NOMA underperformance-probability laboratory.
//
// Subcommands:
//   analytic   exact + asymptotic values and floors at a single point
//   simulate   Monte Carlo estimate at a single point
//   sweep      config/flag-driven grid of (snr, beta, scheme) rows
//   figure     preset grids (fig1, fig2a, fig2b, fig3, fig4a, fig4b)
//
// Exit codes: 0 success, 2 usage/config error, 3 numeric domain error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hnoma/analytic.hpp"
#include "hnoma/asymptotic.hpp"
#include "hnoma/montecarlo.hpp"
#include "hnoma/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CommonFlags {
    std::string snr_spec;
    std::vector<double> betas;
    double rm = 0.0;
    double eta = 0.0;
    std::string samples;
    std::string seed;
    int nc = 0;
    unsigned threads = 0;
    bool threads_set = false;
    std::string format = "csv";
    std::string out_path;
    std::string config_path;
};

void add_grid_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--rm", f.rm, "legacy target rate R_m [BPCU]");
    cmd->add_option("--beta", f.betas,
                    "power reduction coefficient(s), each in (0, 1/2)")
        ->delimiter(',');
    cmd->add_option("--eta", f.eta, "power ratio rho_n / rho_m");
    cmd->add_option("--snr-db", f.snr_spec,
                    "SNR grid in dB: start:stop:step or comma list");
}

void add_mc_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--samples", f.samples, "Monte Carlo draws per point");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)")
        ->each([&f](const std::string&) { f.threads_set = true; });
}

void add_out_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out_path, "output path (default: stdout)");
}

hnoma::EmitFormat emit_format(const std::string& name) {
    return name == "json" ? hnoma::EmitFormat::Json : hnoma::EmitFormat::Csv;
}

void emit_rows(const std::vector<hnoma::SweepRow>& rows, const CommonFlags& f) {
    if (f.out_path.empty())
        hnoma::emit(rows, emit_format(f.format), std::cout);
    else
        hnoma::emit_to_file(rows, emit_format(f.format), f.out_path);
}

bool flag_given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

void apply_overrides(hnoma::SweepConfig& cfg, const CommonFlags& f,
                     const CLI::App* cmd) {
    if (flag_given(cmd, "--snr-db"))
        cfg.snr_db_list = hnoma::parse_snr_spec(f.snr_spec);
    if (flag_given(cmd, "--beta")) cfg.beta_list = f.betas;
    if (flag_given(cmd, "--rm")) cfg.r_m = f.rm;
    if (flag_given(cmd, "--eta")) cfg.eta = f.eta;
    if (flag_given(cmd, "--samples")) cfg.n_samples = std::stoull(f.samples);
    if (flag_given(cmd, "--seed")) cfg.seed = std::stoull(f.seed);
    if (flag_given(cmd, "--nc")) cfg.n_c = f.nc;
    if (f.threads_set) cfg.n_threads = f.threads;
}

hnoma::SystemParams single_point(const CommonFlags& f) {
    const std::vector<double> snrs = hnoma::parse_snr_spec(f.snr_spec);
    if (snrs.size() != 1 || f.betas.size() != 1)
        throw std::invalid_argument(
            "this subcommand evaluates a single point: pass exactly one "
            "--snr-db value and one --beta value");
    const double rho_n = hnoma::snr_db_to_rho(snrs[0]);
    return hnoma::derive_params(rho_n, rho_n / f.eta, f.betas[0], f.rm);
}

int run_analytic(const CommonFlags& f) {
    const hnoma::SystemParams p = single_point(f);
    const hnoma::QuadratureSpec quad = hnoma::QuadratureSpec::chebyshev(f.nc);
    const hnoma::FloorReport fl = hnoma::floors(p);
    // evaluate everything before printing so a domain error cannot leave a
    // half-written table behind
    const double exact[3] = {hnoma::p_fsic_exact(p), hnoma::p_hsic_npa_exact(p),
                             hnoma::p_hsic_pa_exact(p, quad)};
    const double asym[3] = {hnoma::p_fsic_asymptotic(p),
                            hnoma::p_hsic_npa_asymptotic(p),
                            hnoma::p_hsic_pa_asymptotic(p)};
    const double floors[3] = {fl.fsic_floor, fl.npa_floor, fl.pa_floor};
    const char* names[3] = {"fsic", "hsic_npa", "hsic_pa"};
    std::printf("snr_db=%g beta=%.6g eta=%g rm=%g (rho_n=%.6g, rho_m=%.6g)\n",
                10.0 * std::log10(p.rho_n), p.beta, p.eta, p.r_m, p.rho_n,
                p.rho_m);
    std::printf("%-10s %-16s %-16s %-16s\n", "scheme", "p_exact",
                "p_asymptotic", "floor");
    for (int i = 0; i < 3; ++i)
        std::printf("%-10s %-16.9e %-16.9e %-16.9e\n", names[i], exact[i],
                    asym[i], floors[i]);
    return 0;
}

int run_simulate(const CommonFlags& f) {
    const hnoma::SystemParams p = single_point(f);
    const std::uint64_t n = std::stoull(f.samples);
    const std::uint64_t seed = std::stoull(f.seed);
    const hnoma::McReport r = hnoma::estimate(p, n, seed, f.threads);
    std::printf("snr_db=%g beta=%.6g eta=%g rm=%g samples=%llu seed=%llu\n",
                10.0 * std::log10(p.rho_n), p.beta, p.eta, p.r_m,
                static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(seed));
    std::printf("%-10s %-16s %-16s %s\n", "scheme", "p_hat", "stderr", "rare");
    const hnoma::ProbabilityEstimate* ests[3] = {&r.fsic, &r.npa, &r.pa};
    for (const auto* e : ests) {
        const bool rare = e->p_hat * static_cast<double>(n) < 10.0;
        std::printf("%-10s %-16.9e %-16.9e %s\n", hnoma::scheme_name(e->scheme),
                    e->p_hat, e->std_error, rare ? "yes" : "no");
    }
    std::printf("mean_gamma=%.9e mean_pa_energy=%.9e (2*beta*rho_n=%.9e)\n",
                r.mean_gamma, r.mean_pa_energy, 2.0 * p.beta * p.rho_n);
    if (r.fsic.p_hat * static_cast<double>(n) < 10.0 ||
        r.pa.p_hat * static_cast<double>(n) < 10.0)
        std::printf("note: estimates with p_hat*samples < 10 are unreliable; "
                    "increase --samples\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid-NOMA underperformance-probability laboratory"};
    app.require_subcommand(1);

    CommonFlags fa, fs, fw, ff;
    std::string figure_name;

    CLI::App* analytic = app.add_subcommand(
        "analytic", "exact + asymptotic values at a single point");
    add_grid_flags(analytic, fa);
    analytic->add_option("--nc", fa.nc, "quadrature nodes");
    fa.rm = 1.0;
    fa.eta = 5.0;
    fa.nc = 100;

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimate at a single point");
    add_grid_flags(simulate, fs);
    add_mc_flags(simulate, fs);
    fs.rm = 1.0;
    fs.eta = 5.0;
    fs.samples = "1000000";
    fs.seed = "1";

    CLI::App* sweep = app.add_subcommand("sweep", "config/flag-driven grid");
    sweep->add_option("--config", fw.config_path, "key=value config file");
    add_grid_flags(sweep, fw);
    add_mc_flags(sweep, fw);
    sweep->add_option("--nc", fw.nc, "quadrature nodes");
    add_out_flags(sweep, fw);

    CLI::App* figure = app.add_subcommand("figure", "preset figure grid");
    figure->add_option("name", figure_name, "fig1|fig2a|fig2b|fig3|fig4a|fig4b")
        ->required();
    add_mc_flags(figure, ff);
    figure->add_option("--nc", ff.nc, "quadrature nodes");
    add_out_flags(figure, ff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (analytic->parsed()) {
            if (fa.snr_spec.empty() || fa.betas.empty())
                throw std::invalid_argument("analytic requires --snr-db and --beta");
            return run_analytic(fa);
        }
        if (simulate->parsed()) {
            if (fs.snr_spec.empty() || fs.betas.empty())
                throw std::invalid_argument("simulate requires --snr-db and --beta");
            return run_simulate(fs);
        }
        if (sweep->parsed()) {
            hnoma::SweepConfig cfg;
            if (!fw.config_path.empty()) {
                cfg = hnoma::parse_config_file(fw.config_path);
            } else {
                cfg.schemes = {hnoma::Scheme::Fsic, hnoma::Scheme::HsicNpa,
                               hnoma::Scheme::HsicPa};
                cfg.snr_db_list.clear();  // must come from flags
            }
            apply_overrides(cfg, fw, sweep);
            if (cfg.snr_db_list.empty() || cfg.beta_list.empty())
                throw std::invalid_argument(
                    "sweep requires --snr-db and --beta (or a --config file)");
            emit_rows(hnoma::run_sweep(cfg), fw);
            return 0;
        }
        if (figure->parsed()) {
            hnoma::SweepConfig cfg = hnoma::figure_preset(figure_name);
            apply_overrides(cfg, ff, figure);
            emit_rows(hnoma::run_sweep(cfg), ff);
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "numeric domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
