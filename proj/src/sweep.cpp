#include "hnoma/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hnoma/analytic.hpp"
#include "hnoma/asymptotic.hpp"
#include "hnoma/montecarlo.hpp"

namespace hnoma {

namespace {

const std::vector<double> kDefaultBetas = {0.25, 1.0 / 3.0};

std::vector<double> default_snr_grid() {
    std::vector<double> g;
    for (int s = 0; s <= 60; s += 5) g.push_back(s);
    return g;
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value for " + what + ": '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer value for " + what + ": '" + s + "'");
    }
}

void format_float(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    out += buf;
}

const char* kCsvHeader =
    "snr_db,beta,eta,rm_bpcu,scheme,p_analytic,p_asymptotic,p_mc,mc_stderr,"
    "samples,flag_rare";

// Row values are probabilities; the high-SNR expansions can exceed 1 at low
// SNR, so they are clamped into [0, 1] at the row boundary.
double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

Scheme scheme_from_name(const std::string& name) {
    if (name == "fsic") return Scheme::Fsic;
    if (name == "hsic_npa") return Scheme::HsicNpa;
    if (name == "hsic_pa") return Scheme::HsicPa;
    if (name == "oma") return Scheme::Oma;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected fsic, hsic_npa or hsic_pa)");
}

std::vector<double> parse_snr_spec(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        const auto fields = [&] {
            std::vector<std::string> f;
            std::stringstream ss(spec);
            std::string item;
            while (std::getline(ss, item, ':')) f.push_back(trimmed(item));
            return f;
        }();
        if (fields.size() != 3)
            throw std::invalid_argument("snr range must be start:stop:step, got '" +
                                        spec + "'");
        const double start = parse_double(fields[0], "snr start");
        const double stop = parse_double(fields[1], "snr stop");
        const double step = parse_double(fields[2], "snr step");
        if (step <= 0.0 || stop < start)
            throw std::invalid_argument("snr range requires step > 0 and stop >= start");
        std::vector<double> grid;
        for (double s = start; s <= stop + 1e-9; s += step) grid.push_back(s);
        return grid;
    }
    std::vector<double> grid;
    for (const std::string& item : split_list(spec))
        grid.push_back(parse_double(item, "snr_db"));
    if (grid.empty()) throw std::invalid_argument("empty snr_db list");
    return grid;
}

SweepConfig figure_preset(const std::string& name) {
    SweepConfig cfg;
    cfg.snr_db_list = default_snr_grid();
    cfg.beta_list = kDefaultBetas;
    if (name == "fig1") {  // FSIC probability vs SNR
        cfg.r_m = 0.2;
        cfg.eta = 5.0;
        cfg.schemes = {Scheme::Fsic};
    } else if (name == "fig2a") {  // HSIC-NPA, floor regime
        cfg.r_m = 1.0;
        cfg.eta = 5.0;
        cfg.schemes = {Scheme::HsicNpa};
    } else if (name == "fig2b") {  // HSIC-NPA, vanishing regime
        cfg.r_m = 0.1;
        cfg.eta = 1.0;
        cfg.schemes = {Scheme::HsicNpa};
    } else if (name == "fig3") {  // HSIC-PA
        cfg.r_m = 0.2;
        cfg.eta = 5.0;
        cfg.schemes = {Scheme::HsicPa};
    } else if (name == "fig4a") {  // scheme comparison, epsilon_m above threshold
        cfg.r_m = 1.0;
        cfg.eta = 10.0;
        cfg.beta_list = {0.25};
        cfg.schemes = {Scheme::Fsic, Scheme::HsicNpa, Scheme::HsicPa};
    } else if (name == "fig4b") {  // scheme comparison, epsilon_m below threshold
        cfg.r_m = 0.1;
        cfg.eta = 10.0;
        cfg.beta_list = {1.0 / 3.0};
        cfg.schemes = {Scheme::Fsic, Scheme::HsicNpa, Scheme::HsicPa};
    } else {
        throw std::invalid_argument(
            "unknown figure preset '" + name +
            "' (valid: fig1, fig2a, fig2b, fig3, fig4a, fig4b)");
    }
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    if (cfg.snr_db_list.empty()) throw std::invalid_argument("empty snr_db list");
    if (cfg.beta_list.empty()) throw std::invalid_argument("empty beta list");
    if (cfg.n_samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (cfg.n_c < 1) throw std::invalid_argument("nc must be >= 1");
    for (Scheme s : cfg.schemes)
        if (s == Scheme::Oma)
            throw std::invalid_argument("sweep schemes must not include oma");

    std::vector<double> snrs = cfg.snr_db_list;
    std::vector<double> betas = cfg.beta_list;
    std::vector<Scheme> schemes = cfg.schemes;
    std::sort(snrs.begin(), snrs.end());
    std::sort(betas.begin(), betas.end());
    std::sort(schemes.begin(), schemes.end());

    const QuadratureSpec quad = QuadratureSpec::chebyshev(cfg.n_c);
    std::vector<SweepRow> rows;
    rows.reserve(snrs.size() * betas.size() * schemes.size());
    for (double snr : snrs) {
        for (double beta : betas) {
            try {
                const double rho_n = snr_db_to_rho(snr);
                const SystemParams p =
                    derive_params(rho_n, rho_n / cfg.eta, beta, cfg.r_m);
                const McReport mc =
                    schemes.empty()
                        ? McReport{}
                        : estimate(p, cfg.n_samples, cfg.seed, cfg.n_threads);
                for (Scheme scheme : schemes) {
                    SweepRow row;
                    row.snr_db = snr;
                    row.beta = beta;
                    row.eta = cfg.eta;
                    row.r_m_bpcu = cfg.r_m;
                    row.scheme = scheme;
                    switch (scheme) {
                        case Scheme::Fsic:
                            row.p_analytic = p_fsic_exact(p);
                            row.p_asymptotic = p_fsic_asymptotic(p);
                            row.p_mc = mc.fsic.p_hat;
                            row.mc_stderr = mc.fsic.std_error;
                            break;
                        case Scheme::HsicNpa:
                            row.p_analytic = p_hsic_npa_exact(p);
                            row.p_asymptotic = p_hsic_npa_asymptotic(p);
                            row.p_mc = mc.npa.p_hat;
                            row.mc_stderr = mc.npa.std_error;
                            break;
                        case Scheme::HsicPa:
                            row.p_analytic = p_hsic_pa_exact(p, quad);
                            row.p_asymptotic = p_hsic_pa_asymptotic(p);
                            row.p_mc = mc.pa.p_hat;
                            row.mc_stderr = mc.pa.std_error;
                            break;
                        case Scheme::Oma:
                            break;
                    }
                    row.p_analytic = clamp01(row.p_analytic);
                    row.p_asymptotic = clamp01(row.p_asymptotic);
                    row.samples = cfg.n_samples;
                    row.flag_rare =
                        row.p_mc * static_cast<double>(cfg.n_samples) < 10.0;
                    rows.push_back(row);
                }
            } catch (const std::domain_error& e) {
                std::ostringstream os;
                os << e.what() << " [at snr_db=" << snr << ", beta=" << beta << "]";
                throw std::domain_error(os.str());
            } catch (const std::invalid_argument& e) {
                std::ostringstream os;
                os << e.what() << " [at snr_db=" << snr << ", beta=" << beta << "]";
                throw std::invalid_argument(os.str());
            }
        }
    }
    return rows;
}

void emit(const std::vector<SweepRow>& rows, EmitFormat format,
          std::ostream& out) {
    if (format == EmitFormat::Csv) {
        std::string text(kCsvHeader);
        text += '\n';
        for (const SweepRow& r : rows) {
            format_float(text, r.snr_db);
            text += ',';
            format_float(text, r.beta);
            text += ',';
            format_float(text, r.eta);
            text += ',';
            format_float(text, r.r_m_bpcu);
            text += ',';
            text += scheme_name(r.scheme);
            text += ',';
            format_float(text, r.p_analytic);
            text += ',';
            format_float(text, r.p_asymptotic);
            text += ',';
            format_float(text, r.p_mc);
            text += ',';
            format_float(text, r.mc_stderr);
            text += ',';
            text += std::to_string(r.samples);
            text += ',';
            text += r.flag_rare ? '1' : '0';
            text += '\n';
        }
        out << text;
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json o;
        o["snr_db"] = r.snr_db;
        o["beta"] = r.beta;
        o["eta"] = r.eta;
        o["rm_bpcu"] = r.r_m_bpcu;
        o["scheme"] = scheme_name(r.scheme);
        o["p_analytic"] = r.p_analytic;
        o["p_asymptotic"] = r.p_asymptotic;
        o["p_mc"] = r.p_mc;
        o["mc_stderr"] = r.mc_stderr;
        o["samples"] = r.samples;
        o["flag_rare"] = r.flag_rare;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

void emit_to_file(const std::vector<SweepRow>& rows, EmitFormat format,
                  const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit(rows, format, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<SweepRow> parse_json_rows(std::istream& in) {
    const nlohmann::json arr = nlohmann::json::parse(in);
    std::vector<SweepRow> rows;
    rows.reserve(arr.size());
    for (const auto& o : arr) {
        SweepRow r;
        r.snr_db = o.at("snr_db").get<double>();
        r.beta = o.at("beta").get<double>();
        r.eta = o.at("eta").get<double>();
        r.r_m_bpcu = o.at("rm_bpcu").get<double>();
        r.scheme = scheme_from_name(o.at("scheme").get<std::string>());
        r.p_analytic = o.at("p_analytic").get<double>();
        r.p_asymptotic = o.at("p_asymptotic").get<double>();
        r.p_mc = o.at("p_mc").get<double>();
        r.mc_stderr = o.at("mc_stderr").get<double>();
        r.samples = o.at("samples").get<std::uint64_t>();
        r.flag_rare = o.at("flag_rare").get<bool>();
        rows.push_back(r);
    }
    return rows;
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    SweepConfig cfg;
    cfg.schemes = {Scheme::Fsic, Scheme::HsicNpa, Scheme::HsicPa};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty value for '" + key + "'");
        if (key == "snr_db") {
            cfg.snr_db_list = parse_snr_spec(value);
        } else if (key == "beta") {
            cfg.beta_list.clear();
            for (const std::string& item : split_list(value))
                cfg.beta_list.push_back(parse_double(item, "beta"));
        } else if (key == "rm") {
            cfg.r_m = parse_double(value, "rm");
        } else if (key == "eta") {
            cfg.eta = parse_double(value, "eta");
        } else if (key == "samples") {
            cfg.n_samples = parse_u64(value, "samples");
        } else if (key == "seed") {
            cfg.seed = parse_u64(value, "seed");
        } else if (key == "nc") {
            cfg.n_c = static_cast<int>(parse_u64(value, "nc"));
        } else if (key == "threads") {
            cfg.n_threads = static_cast<unsigned>(parse_u64(value, "threads"));
        } else if (key == "schemes") {
            cfg.schemes.clear();
            for (const std::string& item : split_list(value))
                cfg.schemes.push_back(scheme_from_name(item));
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (cfg.snr_db_list.empty())
        throw std::invalid_argument("config: snr_db is required");
    if (cfg.beta_list.empty())
        throw std::invalid_argument("config: beta is required");
    return cfg;
}

}  // namespace hnoma
