#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xyfse/cft.hpp"
#include "xyfse/correlator.hpp"
#include "xyfse/fse.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

// One sweep family: either a plain pattern dilated uniformly, or a
// non-uniform family where '@' entries take the literal dilation factor
// while the rest stay fixed (e.g. "28,@,24").
struct PatternFamily {
    std::string text;
    std::vector<long long> entries;  // -1 marks an '@' slot
    bool uniform = true;

    Pattern at(long long lambda) const;
    Pattern base() const;  // uniform families only
};

PatternFamily parse_family(const std::string& text);

struct RunConfig {
    std::string mode = "sweep";  // "sweep" | "correlator" | "modes"
    double gamma = 0.0;
    double h = 0.0;
    std::vector<PatternFamily> patterns;
    std::vector<double> alphas;
    std::vector<FseKind> kinds;
    long long lambda_min = 1;
    long long lambda_max = 20;
    long long lambda_step = 1;
    std::string output_dir = "out";
    int threads = 1;
    std::string cache_dir;  // empty: XYFSE_CACHE_DIR env var, else output_dir
    LogCoefficientMode coefficient_mode = LogCoefficientMode::standard;
    long long x_max = 200;  // correlator mode
    long long width = 2;  // modes mode: edge-window width

    std::vector<long long> lambda_list() const;
    PhasePoint phase_point() const { return {gamma, h}; }
    void validate() const;  // throws ConfigError
};

// Flat key = value text (comments with '#', optional [section] headers are
// ignored); unknown keys are rejected.
RunConfig parse_run_config_text(const std::string& text);
RunConfig parse_run_config_file(const std::string& path);

// One output record; `pattern_text` is the family as written in the config,
// so non-uniform families keep their '@' notation in the CSV.
struct RunRow {
    std::string pattern_text;
    FseKind kind = FseKind::single;
    double alpha = 1.0;
    long long lambda = 1;
    double delta_bits = 0.0;
    int sign = 0;
};

struct FitSummary {
    std::string pattern_text;
    FseKind kind = FseKind::single;
    double alpha = 1.0;
    bool ok = false;
    ScalingFit fit;
    std::string error;  // set when the fit raised (e.g. too few points)
};

struct SweepOutput {
    std::vector<RunRow> rows;               // sorted by (pattern, kind, alpha, lambda)
    std::vector<FitSummary> fits;           // same order, one per (pattern, kind, alpha)
    std::map<double, double> s0_by_alpha;   // empty when no CFT-referenced kind ran
};

// Pure compute stage: calibrate (when needed), evaluate every
// (family, kind, alpha, lambda) task on a worker pool, fit.  Output is
// deterministic for any thread count: tasks write into preassigned slots and
// every shared cache is value-deterministic.
SweepOutput run_sweeps(const RunConfig& cfg, const Correlator& corr);

// Deterministic CSV rendering (%.17g floats, '\n' endings).
std::string render_records_csv(const std::vector<RunRow>& rows);

// Runs an acquire-cache -> calibrate -> sweep -> fit -> persist pipeline into
// cfg.output_dir: records.csv, fits.json, manifests.json, plot data + plot.gp.
// Returns 0; throws ConfigError (caller exit 2) or Error (caller exit 3).
int run(const RunConfig& cfg);

// Summarizes records.csv + fits.json from a run directory: one row per
// (pattern, kind, alpha) with the fitted eta judged against min(2, 2/alpha)
// +/- 0.15; the alpha in (0.8, 1.25) window reports SKIPPED.
int report(const std::string& dir, std::ostream& out);

// Precomputes G(x) for |x| <= xmax and saves the cache file; returns its path.
std::string cache_warm(double gamma, double h, long long xmax,
                       const std::string& cache_dir, std::ostream& out);

std::string default_cache_dir();
std::string cache_file_name(const PhasePoint& p);

// Shared worker-pool primitive (slot-deterministic; rethrows the first
// captured exception after all workers join).
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace xyfse
