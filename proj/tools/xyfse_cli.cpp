#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xyfse/corr_matrix.hpp"
#include "xyfse/correlator.hpp"
#include "xyfse/errors.hpp"
#include "xyfse/runner.hpp"
#include "xyfse/util.hpp"

namespace {

void print_error_report(const std::string& type, const std::string& message) {
    // Machine-readable single-line error object on stderr.
    std::string msg = message;
    for (char& c : msg)
        if (c == '"') c = '\'';
    std::cerr << "{\"error\":\"" << msg << "\",\"type\":\"" << type << "\"}\n";
}

int dump_gamma(double gamma, double h, const std::string& pattern_text,
               long long ring) {
    const xyfse::Pattern pattern = xyfse::parse_pattern(pattern_text);
    const xyfse::IntervalSet set = xyfse::IntervalSet::from_pattern(pattern);
    const xyfse::Correlator corr(xyfse::PhasePoint{gamma, h});
    const Eigen::MatrixXd m = ring > 0 ? xyfse::build_gamma_ring(corr, set, ring)
                                       : xyfse::build_gamma(corr, set);
    for (long long i = 0; i < m.rows(); ++i)
        for (long long j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0)
                std::cout << i << ' ' << j << ' ' << xyfse::fmt_g17(m(i, j)) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"XY-chain entanglement entropies and finite-size-effect scaling"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a run configuration");
    run_cmd->add_option("config", config_path, "key = value configuration file")
        ->required();

    std::string report_dir;
    CLI::App* report_cmd =
        app.add_subcommand("report", "summarize fits from a run directory");
    report_cmd->add_option("dir", report_dir, "directory holding records.csv + fits.json")
        ->required();

    CLI::App* cache_cmd = app.add_subcommand("cache", "correlator cache maintenance");
    double warm_gamma = 0.0, warm_h = 0.0;
    long long warm_xmax = 0;
    std::string warm_dir;
    CLI::App* warm_cmd =
        cache_cmd->add_subcommand("warm", "precompute G(x) for |x| <= xmax");
    warm_cmd->add_option("gamma", warm_gamma, "coupling gamma")->required();
    warm_cmd->add_option("field", warm_h, "field h")->required();
    warm_cmd->add_option("xmax", warm_xmax, "largest separation")->required();
    warm_cmd->add_option("--dir", warm_dir,
                         "cache directory (default: XYFSE_CACHE_DIR or ./xyfse_cache)");
    cache_cmd->require_subcommand(1);

    double dump_g = 0.0, dump_h = 0.0;
    std::string dump_pattern;
    long long dump_ring = 0;
    CLI::App* dump_cmd = app.add_subcommand(
        "dump", "print the Majorana correlation matrix as 'i j value' triplets");
    dump_cmd->add_option("gamma", dump_g, "coupling gamma")->required();
    dump_cmd->add_option("field", dump_h, "field h")->required();
    dump_cmd->add_option("pattern", dump_pattern, "interval pattern, e.g. 1,3,2")
        ->required();
    dump_cmd->add_option("--ring", dump_ring, "use the N-site ring correlator");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return xyfse::run(xyfse::parse_run_config_file(config_path));
        if (report_cmd->parsed()) return xyfse::report(report_dir, std::cout);
        if (cache_cmd->parsed()) {
            xyfse::cache_warm(warm_gamma, warm_h, warm_xmax, warm_dir, std::cout);
            return 0;
        }
        if (dump_cmd->parsed())
            return dump_gamma(dump_g, dump_h, dump_pattern, dump_ring);
    } catch (const xyfse::ConfigError& e) {
        print_error_report("config", e.what());
        return 2;
    } catch (const xyfse::MalformedInput& e) {
        print_error_report("malformed-input", e.what());
        return 2;
    } catch (const xyfse::Error& e) {
        print_error_report("numerical", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error_report("internal", e.what());
        return 3;
    }
    return 0;
}
