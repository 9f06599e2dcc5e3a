// Command-line front end: regenerate the closed-form decay curves (figure1),
// run a single model over a time grid (evolve), and diff two series files
// (compare). Frequencies are taken in kHz and times in microseconds at this
// boundary; everything behind it is rad/s and seconds.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <qdec/qdec.hpp>

namespace {

struct physics_options {
    double q = 1.001;
    double eta = 0.202;
    double omega_khz = 500.0;
    double gamma0_khz = 11.9;
    double exponent = 0.7;
    double tau_us = 0.0;
    std::size_t dim = 30;
    double tmax_us = 0.0;  // 0: derive from the validity horizon
    std::size_t steps = 2000;
    std::string out;
    std::string format;  // empty: infer from the output extension
    std::string config_path;
};

void add_common_options(CLI::App* cmd, physics_options& o) {
    cmd->add_option("--q", o.q, "extensivity parameter (>= 1)")
        ->capture_default_str();
    cmd->add_option("--eta", o.eta, "Lamb-Dicke parameter")->capture_default_str();
    cmd->add_option("--omega-khz", o.omega_khz, "carrier coupling Omega/2pi in kHz")
        ->capture_default_str();
    cmd->add_option("--dim", o.dim, "vibrational Fock truncation")->capture_default_str();
    cmd->add_option("--tmax-us", o.tmax_us,
                    "grid end in microseconds (default: validity horizon)");
    cmd->add_option("--steps", o.steps, "grid intervals (points = steps + 1)")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "output file path")->required();
    cmd->add_option("--format", o.format, "csv or json (default: by extension)");
    cmd->add_option("--config", o.config_path, "flat key=value config file; flags override");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double config_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (value.empty() || pos != value.size())
        throw qdec::config_error("config key '" + key + "': cannot parse '" + value +
                                 "' as a number");
    return v;
}

std::size_t config_count(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (value.empty() || value[0] == '-' || pos != value.size())
        throw qdec::config_error("config key '" + key + "': cannot parse '" + value +
                                 "' as a count");
    return static_cast<std::size_t>(v);
}

// Applies config file values underneath command-line flags: a key is used
// only when its flag was not given. Keys are the long option names without
// the leading dashes; unknown keys and keys the subcommand does not take are
// errors.
void apply_config(CLI::App* cmd, physics_options& o, std::string& panel,
                  std::string& model, std::string& init) {
    if (o.config_path.empty()) return;
    std::ifstream is(o.config_path);
    if (!is)
        throw qdec::io_error("cannot open '" + o.config_path + "' for reading");

    struct entry {
        const char* key;
        const char* flag;
        std::function<void(const std::string&, const std::string&)> set;
    };
    const std::vector<entry> table = {
        {"q", "--q", [&](const std::string& k, const std::string& v) { o.q = config_double(k, v); }},
        {"eta", "--eta", [&](const std::string& k, const std::string& v) { o.eta = config_double(k, v); }},
        {"omega-khz", "--omega-khz", [&](const std::string& k, const std::string& v) { o.omega_khz = config_double(k, v); }},
        {"gamma0-khz", "--gamma0-khz", [&](const std::string& k, const std::string& v) { o.gamma0_khz = config_double(k, v); }},
        {"exponent", "--exponent", [&](const std::string& k, const std::string& v) { o.exponent = config_double(k, v); }},
        {"tau-us", "--tau-us", [&](const std::string& k, const std::string& v) { o.tau_us = config_double(k, v); }},
        {"tmax-us", "--tmax-us", [&](const std::string& k, const std::string& v) { o.tmax_us = config_double(k, v); }},
        {"dim", "--dim", [&](const std::string& k, const std::string& v) { o.dim = config_count(k, v); }},
        {"steps", "--steps", [&](const std::string& k, const std::string& v) { o.steps = config_count(k, v); }},
        {"format", "--format", [&](const std::string&, const std::string& v) { o.format = v; }},
        {"panel", "--panel", [&](const std::string& k, const std::string& v) {
             if (v != "a" && v != "b")
                 throw qdec::config_error("config key '" + k + "': panel must be 'a' or 'b'");
             panel = v;
         }},
        {"model", "--model", [&](const std::string&, const std::string& v) { model = v; }},
        {"init", "--init", [&](const std::string&, const std::string& v) { init = v; }},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto where = o.config_path + ":" + std::to_string(lineno);
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw qdec::config_error(where + ": expected key=value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (value.empty())
            throw qdec::config_error(where + ": empty value for key '" + key + "'");

        const entry* found = nullptr;
        for (const auto& e : table)
            if (key == e.key) found = &e;
        if (found == nullptr)
            throw qdec::config_error(where + ": unknown config key '" + key + "'");
        const CLI::Option* opt = cmd->get_option_no_throw(found->flag);
        if (opt == nullptr)
            throw qdec::config_error(where + ": key '" + key +
                                     "' is not an option of this command");
        if (opt->count() > 0) continue;  // the flag wins
        found->set(key, value);
    }
}

qdec::run_config to_run_config(const physics_options& o) {
    qdec::run_config cfg;
    cfg.ion.omega_over_2pi_hz = o.omega_khz * 1e3;
    cfg.ion.eta = o.eta;
    cfg.ion.dim = o.dim;
    cfg.q = o.q;
    cfg.decay.gamma0_per_s = o.gamma0_khz * 1e3;
    cfg.decay.exponent = o.exponent;
    cfg.tau_s = o.tau_us * 1e-6;
    cfg.t_max_s = o.tmax_us * 1e-6;
    cfg.steps = o.steps;
    return cfg;
}

qdec::file_format resolve_format(const physics_options& o) {
    if (!o.format.empty()) return qdec::parse_file_format(o.format);
    const std::string& p = o.out;
    if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0)
        return qdec::file_format::json;
    return qdec::file_format::csv;
}

void emit(const qdec::run_output& out, const physics_options& o) {
    for (double t : out.beyond_horizon)
        std::cerr << "warning: t = " << qdec::format_double(t)
                  << " s exceeds validity horizon " << qdec::format_double(out.horizon_s)
                  << " s\n";
    qdec::write_series_file(out.series, o.out, resolve_format(o));
    std::cout << "wrote " << o.out << ": " << out.series.times.size() << " points, "
              << out.series.channels.size() << " channel(s)\n";
}

bool use_color() {
    return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

int exit_code(const qdec::error& e) {
    switch (e.category()) {
        case qdec::error_category::validation: return 1;
        case qdec::error_category::numeric: return 2;
        case qdec::error_category::io: return 3;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoherence decay curves for blue-sideband Rabi oscillations"};
    app.set_version_flag("--version", "qdec 1.0.0");
    app.require_subcommand(1);

    physics_options fig_opt;
    std::string panel = "a";
    CLI::App* fig = app.add_subcommand(
        "figure1", "write the two closed-form decay curves for one panel");
    fig->add_option("--panel", panel, "a: vacuum start, b: coherent nbar=3 start")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
    add_common_options(fig, fig_opt);
    fig->add_option("--gamma0-khz", fig_opt.gamma0_khz,
                    "empirical decay rate gamma0 in units of 1e3/s")
        ->capture_default_str();
    fig->add_option("--exponent", fig_opt.exponent, "empirical decay level exponent")
        ->capture_default_str();

    physics_options ev_opt;
    std::string model = "qmodel";
    std::string init = "fock:0";
    CLI::App* ev = app.add_subcommand("evolve", "run one model over a time grid");
    ev->add_option("--model", model,
                   "empirical|qmodel|unitary|qexp|qshort|milburn")
        ->capture_default_str();
    ev->add_option("--init", init, "initial vibrational state, fock:N or coherent:NBAR")
        ->capture_default_str();
    add_common_options(ev, ev_opt);
    ev->add_option("--gamma0-khz", ev_opt.gamma0_khz,
                   "empirical decay rate gamma0 in units of 1e3/s")
        ->capture_default_str();
    ev->add_option("--exponent", ev_opt.exponent, "empirical decay level exponent")
        ->capture_default_str();
    ev->add_option("--tau-us", ev_opt.tau_us, "Milburn time step in microseconds")
        ->capture_default_str();

    std::string path_a, path_b;
    qdec::compare_options cmp_opt;
    double mode_khz = 0.0;
    bool fit = false;
    CLI::App* cmp = app.add_subcommand("compare", "diff a channel of two series files");
    cmp->add_option("file_a", path_a, "first series file")->required();
    cmp->add_option("file_b", path_b, "second series file")->required();
    cmp->add_option("--channel", cmp_opt.channel, "channel name in both files")
        ->capture_default_str();
    cmp->add_option("--channel-b", cmp_opt.channel_b,
                    "channel name in the second file, when it differs");
    cmp->add_flag("--fit-decay", fit, "fit exponential and Gaussian envelope decay laws");
    cmp->add_option("--mode-khz", mode_khz,
                    "oscillation frequency (cosine mode / 2pi, kHz) for --fit-decay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (fig->parsed()) {
            apply_config(fig, fig_opt, panel, model, init);
            emit(qdec::cmd_figure1(panel[0], to_run_config(fig_opt)), fig_opt);
        } else if (ev->parsed()) {
            apply_config(ev, ev_opt, panel, model, init);
            qdec::run_config cfg = to_run_config(ev_opt);
            cfg.model = qdec::parse_model(model);
            cfg.init = qdec::parse_vibrational_state(init);
            emit(qdec::cmd_evolve(cfg), ev_opt);
        } else if (cmp->parsed()) {
            cmp_opt.fit = fit;
            if (fit) {
                if (!(mode_khz > 0.0))
                    throw qdec::config_error("--mode-khz is required with --fit-decay");
                cmp_opt.mode_omega_rad_s = 2.0 * std::numbers::pi * mode_khz * 1e3;
            }
            const qdec::compare_report rep = qdec::cmd_compare(path_a, path_b, cmp_opt);
            qdec::print_report(std::cout, rep, use_color());
        }
    } catch (const qdec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
