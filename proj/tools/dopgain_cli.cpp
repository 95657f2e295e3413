// Command-line front end for the dopgain shared library. Materializes the
// a-priori DOP density, information-gain tables, Monte Carlo validation runs,
// and the self-check suite as CSV/TSV. Talks to the library exclusively
// through its C interface.

#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dopgain.h"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;
constexpr int kHistogramBins = 100;

struct Options {
    std::string pmd_list;
    double sigma_ps = 10.0;
    int grid_points = 2001;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string output_path;  // empty = stdout
    std::string format = "csv";
    std::string inject_fault;

    char separator() const { return format == "tsv" ? '\t' : ','; }
};

// Output sink with explicit error checking; any write failure exits with the
// I/O status code.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) {
            file_ = stdout;
        } else {
            file_ = std::fopen(path.c_str(), "w");
            owned_ = true;
            if (!file_) {
                std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                             path.c_str());
                std::exit(kExitIoFailure);
            }
        }
    }

    ~Sink() { close(); }

    void close() {
        if (!file_) return;
        const bool bad = std::ferror(file_) != 0;
        if (owned_) std::fclose(file_);
        file_ = nullptr;
        if (bad) {
            std::fprintf(stderr, "error: write failure\n");
            std::exit(kExitIoFailure);
        }
    }

    void printf(const char* format, ...) __attribute__((format(printf, 2, 3))) {
        va_list args;
        va_start(args, format);
        const int rc = std::vfprintf(file_, format, args);
        va_end(args);
        if (rc < 0) {
            std::fprintf(stderr, "error: write failure\n");
            std::exit(kExitIoFailure);
        }
    }

private:
    FILE* file_ = nullptr;
    bool owned_ = false;
};

[[noreturn]] void die_library(dop_status status) {
    std::fprintf(stderr, "error: %s: %s\n", dop_status_name(status),
                 dop_last_error());
    std::exit(status == DOP_ERR_DOMAIN || status == DOP_ERR_BADARG
                  ? kExitBadArguments
                  : kExitValidationFailure);
}

void require_ok(dop_status status) {
    if (status != DOP_OK) die_library(status);
}

// Parses "20,30,40" or "inf"; infinity is only meaningful where the
// asymptotic uniform prior applies.
std::vector<double> parse_pmd_list(const std::string& text, bool allow_inf) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (token == "inf" && allow_inf) {
            values.push_back(INFINITY);
        } else {
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (token.empty() || end == nullptr || *end != '\0' ||
                !std::isfinite(v) || v <= 0.0) {
                std::fprintf(stderr, "error: bad --pmd-ps value '%s'\n",
                             token.c_str());
                std::exit(kExitBadArguments);
            }
            values.push_back(v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) {
        std::fprintf(stderr, "error: --pmd-ps is empty\n");
        std::exit(kExitBadArguments);
    }
    return values;
}

void resolve_seed(Options& opt) {
    if (opt.seed_given) return;
    const char* env = std::getenv("DOP_SEED");
    if (!env) return;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        std::fprintf(stderr, "error: DOP_SEED is not an integer: '%s'\n", env);
        std::exit(kExitBadArguments);
    }
    opt.seed = v;
}

int cmd_prior(const Options& opt) {
    const auto pmds = parse_pmd_list(opt.pmd_list, /*allow_inf=*/false);
    const char sep = opt.separator();
    Sink out(opt.output_path);
    out.printf("m%cdensity\n", sep);
    for (const double pmd : pmds) {
        dop_prior* prior = nullptr;
        require_ok(dop_prior_create(pmd, opt.sigma_ps, opt.grid_points, &prior));
        out.printf("# pmd_ps=%.6g sigma_ps=%.6g\n", pmd, opt.sigma_ps);
        const int n = dop_prior_points(prior);
        for (int i = 0; i < n; ++i) {
            double m = 0.0, density = 0.0;
            require_ok(dop_prior_row(prior, i, &m, &density));
            out.printf("%.6g%c%.6g\n", m, sep, density);
        }
        dop_prior_free(prior);
    }
    out.close();
    return kExitSuccess;
}

int cmd_infogain(const Options& opt) {
    const auto pmds = parse_pmd_list(opt.pmd_list, /*allow_inf=*/true);
    const char sep = opt.separator();
    Sink out(opt.output_path);
    out.printf("pmd_ps%csigma_ps%ci_coh_bits%ci_incoh_bits%cratio\n", sep, sep, sep,
               sep);
    for (const double pmd : pmds) {
        dop_prior* prior = nullptr;
        if (std::isinf(pmd))
            require_ok(dop_prior_create_uniform(opt.grid_points, &prior));
        else
            require_ok(dop_prior_create(pmd, opt.sigma_ps, opt.grid_points, &prior));

        dop_gain_report coherent{}, incoherent{};
        double ratio = 0.0;
        require_ok(dop_info_gain(prior, DOP_MODEL_COHERENT, &coherent));
        require_ok(dop_info_gain(prior, DOP_MODEL_INCOHERENT, &incoherent));
        require_ok(dop_gain_ratio(prior, &ratio));
        dop_prior_free(prior);

        out.printf("%.6g%c%.6g%c%.6g%c%.6g%c%.6g\n", pmd, sep, opt.sigma_ps, sep,
                   coherent.mean_gain_bits, sep, incoherent.mean_gain_bits, sep,
                   ratio);
    }
    out.close();
    return kExitSuccess;
}

int cmd_simulate(const Options& opt) {
    const auto pmds = parse_pmd_list(opt.pmd_list, /*allow_inf=*/false);
    const char sep = opt.separator();
    Sink out(opt.output_path);
    out.printf("m_bin_center%cempirical_density\n", sep);
    for (const double pmd : pmds) {
        dop_ensemble* ensemble = nullptr;
        require_ok(
            dop_ensemble_create(opt.samples, pmd, opt.sigma_ps, opt.seed, &ensemble));
        double density[kHistogramBins];
        require_ok(dop_ensemble_histogram(ensemble, kHistogramBins, density));

        out.printf("# pmd_ps=%.6g sigma_ps=%.6g samples=%" PRId64 " seed=%" PRIu64
                   "\n",
                   pmd, opt.sigma_ps, opt.samples, opt.seed);
        for (int b = 0; b < kHistogramBins; ++b)
            out.printf("%.6g%c%.6g\n", (b + 0.5) / kHistogramBins, sep, density[b]);

        const struct {
            dop_model model;
            const char* name;
        } models[] = {{DOP_MODEL_COHERENT, "coherent"},
                      {DOP_MODEL_INCOHERENT, "incoherent"}};
        for (const auto& m : models) {
            double bits = 0.0, se = 0.0;
            require_ok(dop_ensemble_mutual_information(ensemble, m.model, &bits, &se));
            out.printf("# mi_%s_bits=%.6g std_error=%.6g\n", m.name, bits, se);
        }
        dop_ensemble_free(ensemble);
    }
    out.close();
    return kExitSuccess;
}

void print_check(const char* name, int passed, double observed, double bound,
                 const char* detail, void* user) {
    auto* sink = static_cast<Sink*>(user);
    sink->printf("%-28s %s  observed=%-12.4g bound=%-10.4g %s\n", name,
                 passed ? "ok  " : "FAIL", observed, bound, detail);
}

int cmd_validate(const Options& opt) {
    dop_validate_config config;
    dop_validate_config_init(&config);
    config.sigma_ps = opt.sigma_ps;
    config.grid_points = opt.grid_points;
    config.samples = opt.samples;
    config.seed = opt.seed;
    if (!opt.inject_fault.empty()) config.inject_fault = opt.inject_fault.c_str();

    Sink out(opt.output_path);
    int all_passed = 0;
    require_ok(dop_validate_run(&config, print_check, &out, &all_passed));
    out.printf("validation: %s\n", all_passed ? "all checks passed" : "FAILED");
    out.close();
    return all_passed ? kExitSuccess : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"PMD depolarization statistics and measurement information gain"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_pmd) {
        if (needs_pmd)
            cmd->add_option("--pmd-ps", opt.pmd_list,
                            "rms DGD in ps; comma-separated list, infogain also "
                            "accepts 'inf'")
                ->required();
        cmd->add_option("--sigma-ps", opt.sigma_ps, "pulse spread in ps")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--grid-points", opt.grid_points, "DOP grid resolution")
            ->check(CLI::Range(101, 1'000'000))
            ->capture_default_str();
        cmd->add_option("--samples", opt.samples, "Monte Carlo sample count")
            ->check(CLI::Range(static_cast<std::int64_t>(1),
                               static_cast<std::int64_t>(1'000'000'000)))
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed,
                        "random seed (falls back to DOP_SEED, then 1)")
            ->trigger_on_parse()  // mark explicit seeds
            ->each([&](const std::string&) { opt.seed_given = true; });
        cmd->add_option("--output", opt.output_path, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "csv or tsv")
            ->check(CLI::IsMember({"csv", "tsv"}))
            ->capture_default_str();
    };

    auto* prior = app.add_subcommand("prior", "tabulate the a-priori DOP density");
    add_common(prior, true);
    auto* infogain =
        app.add_subcommand("infogain", "coherent vs incoherent information gain");
    add_common(infogain, true);
    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo DOP histogram and gain estimates");
    add_common(simulate, true);
    auto* validate = app.add_subcommand("validate", "run the self-check suite");
    add_common(validate, false);
    validate->add_option("--inject-fault", opt.inject_fault,
                         "test hook: force the named check to fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitBadArguments;
    }

    resolve_seed(opt);
    if (prior->parsed()) return cmd_prior(opt);
    if (infogain->parsed()) return cmd_infogain(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
    if (validate->parsed()) return cmd_validate(opt);
    return kExitBadArguments;
}
