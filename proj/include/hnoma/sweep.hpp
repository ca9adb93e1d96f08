#ifndef HNOMA_SWEEP_HPP
#define HNOMA_SWEEP_HPP

// Parameter sweeps over (SNR, beta) grids combining Monte Carlo, exact and
// asymptotic values into figure-ready rows, plus the CSV/JSON emitters and
// the strict key=value config-file parser behind the CLI.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hnoma/rates.hpp"

namespace hnoma {

struct SweepConfig {
    std::vector<double> snr_db_list;
    std::vector<double> beta_list;
    double r_m = 1.0;
    double eta = 5.0;
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;
    int n_c = 100;
    std::vector<Scheme> schemes;  // subset of {Fsic, HsicNpa, HsicPa}
    unsigned n_threads = 0;
};

struct SweepRow {
    double snr_db;
    double beta;
    double eta;
    double r_m_bpcu;
    Scheme scheme;
    double p_analytic;
    double p_asymptotic;
    double p_mc;
    double mc_stderr;
    std::uint64_t samples;
    bool flag_rare;  // p_mc * samples < 10: too few hits to trust
};

/// Preset grids reproducing the reference figure configurations
/// (fig1, fig2a, fig2b, fig3, fig4a, fig4b). Unknown name -> invalid_argument
/// listing the valid presets.
SweepConfig figure_preset(const std::string& name);

/// Cartesian product of (snr, beta, scheme) in ascending (snr, beta, scheme)
/// order. Deterministic for a fixed config, independent of n_threads.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

enum class EmitFormat { Csv, Json };

/// CSV: fixed header, floats as 9-significant-digit scientific; JSON: array
/// of objects with the same field names. Byte-identical for identical rows.
void emit(const std::vector<SweepRow>& rows, EmitFormat format, std::ostream& out);
void emit_to_file(const std::vector<SweepRow>& rows, EmitFormat format,
                  const std::string& path);

/// Inverse of the JSON emitter (round-trip support).
std::vector<SweepRow> parse_json_rows(std::istream& in);

/// Strict flat key=value config ('#' comments, comma lists, start:stop:step
/// SNR ranges). Unknown keys are errors.
SweepConfig parse_config_file(const std::string& path);

/// "start:stop:step" or a comma-separated list.
std::vector<double> parse_snr_spec(const std::string& spec);

Scheme scheme_from_name(const std::string& name);

}  // namespace hnoma

#endif
