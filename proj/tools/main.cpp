// Command-line front end: solve zeros, cache them, and run the statistics
// and prime-counting reproductions on top of the cache.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zetazero/cache.hpp"
#include "zetazero/primes.hpp"
#include "zetazero/solver.hpp"
#include "zetazero/statistics.hpp"
#include "zetazero/zeta.hpp"

namespace zz = zetazero;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int digits = 30;
    std::string format = "plain";
    std::string cache_path;  // empty: per-method default
    std::vector<double> delta_schedule;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

std::string cache_path_for(const GlobalOpts& g, zz::SolveMethod m) {
    return g.cache_path.empty() ? zz::default_cache_path(m) : g.cache_path;
}

zz::ZeroCacheFile load_or_new(const std::string& path, int digits, zz::SolveMethod m) {
    if (std::filesystem::exists(path)) return zz::load_zero_cache(path);
    zz::ZeroCacheFile cache;
    cache.digits = digits;
    cache.method = m;
    return cache;
}

void print_zero_record(const zz::ZeroRecord& rec, const std::string& format) {
    std::string y = rec.y.to_decimal_string(rec.digits_certified);
    if (format == "json") {
        json j{{"n", rec.n},
               {"y", y},
               {"digits_certified", rec.digits_certified},
               {"method", zz::to_string(rec.method)},
               {"residual", rec.residual}};
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,y,digits_certified,method,residual\n";
        std::printf("%ld,%s,%d,%s,%.3e\n", rec.n, y.c_str(), rec.digits_certified,
                    zz::to_string(rec.method).c_str(), rec.residual);
    } else {
        std::printf("n        = %ld\n", rec.n);
        std::printf("y        = %s\n", y.c_str());
        std::printf("digits   = %d\n", rec.digits_certified);
        std::printf("method   = %s\n", zz::to_string(rec.method).c_str());
        std::printf("residual = %.3e\n", rec.residual);
    }
}

// ---------------------------------------------------------------- zero ----
int cmd_zero(const GlobalOpts& g, const std::string& n_str, const std::string& method_str,
             bool no_cache) {
    zz::SolveMethod method = zz::solve_method_from_string(method_str);
    zz::PrecisionContext ctx(g.digits);

    if (method == zz::SolveMethod::lambert_seed) {
        // seeds are defined for arbitrarily large n; keep n as a string
        zz::Real y = zz::lambert_seed(n_str, ctx);
        zz::ZeroRecord rec;
        rec.n = 0;
        try {
            rec.n = std::stol(n_str);
        } catch (...) {
            rec.n = -1;  // beyond long: printed as the string below
        }
        rec.y = y;
        rec.digits_certified =
            static_cast<int>(std::min<long>(g.digits, static_cast<long>(n_str.size()) + 3));
        rec.method = method;
        rec.residual = 0.0;
        if (rec.n > 0 && !no_cache) {
            std::string path = cache_path_for(g, method);
            zz::ZeroCacheFile cache = load_or_new(path, g.digits, method);
            if (!cache.contains(rec.n)) {
                cache.insert(rec);
                zz::save_zero_cache(path, cache);
            }
        }
        if (rec.n < 0) {
            std::printf("n        = %s\n", n_str.c_str());
            std::printf("y        = %s\n", rec.y.to_decimal_string(rec.digits_certified).c_str());
            std::printf("method   = lambert_seed\n");
            return 0;
        }
        print_zero_record(rec, g.format);
        return 0;
    }

    long n = 0;
    try {
        n = std::stol(n_str);
    } catch (...) {
        throw zz::UsageError("zero: n out of range for solving; use --method seed");
    }
    if (n < 1) throw zz::UsageError("zero: n must be >= 1");

    zz::SolverConfig cfg;
    cfg.target_digits = g.digits;
    if (!g.delta_schedule.empty()) cfg.delta_schedule = g.delta_schedule;

    zz::ZeroRecord rec = (method == zz::SolveMethod::exact_eq)
                             ? zz::solve_zero_exact(n, cfg, ctx)
                             : zz::solve_zero_asymptotic(n, cfg, ctx);
    if (!no_cache) {
        std::string path = cache_path_for(g, method);
        zz::ZeroCacheFile cache = load_or_new(path, g.digits, method);
        if (!cache.contains(n)) {
            cache.insert(rec);
            zz::save_zero_cache(path, cache);
        }
    }
    print_zero_record(rec, g.format);
    return 0;
}

// --------------------------------------------------------------- batch ----
int cmd_batch(const GlobalOpts& g, long n_lo, long n_hi, const std::string& method_str) {
    zz::SolveMethod method = zz::solve_method_from_string(method_str);
    if (method == zz::SolveMethod::lambert_seed)
        throw zz::UsageError("batch: method must be asymptotic or exact");
    if (n_lo < 1 || n_hi < n_lo) throw zz::UsageError("batch: need 1 <= n_lo <= n_hi");

    zz::PrecisionContext ctx(g.digits);
    zz::SolverConfig cfg;
    cfg.target_digits = g.digits;
    if (!g.delta_schedule.empty()) cfg.delta_schedule = g.delta_schedule;

    std::string path = cache_path_for(g, method);
    zz::ZeroCacheFile cache = load_or_new(path, g.digits, method);

    std::vector<long> have;
    for (long n = n_lo; n <= n_hi; ++n)
        if (cache.contains(n)) have.push_back(n);

    std::vector<zz::BatchFailure> failures;
    long solved = 0;
    double min_res = 0.0, max_res = 0.0;
    if (method == zz::SolveMethod::asymptotic_eq) {
        zz::PrecisionContext fast_ctx(15);
        zz::BatchResult res =
            zz::solve_zero_batch(n_lo, n_hi, cfg, g.digits > 15 ? ctx : fast_ctx, g.jobs, have);
        for (const auto& rec : res.records) cache.insert(rec);
        failures = res.failures;
        solved = static_cast<long>(res.records.size());
        min_res = res.min_residual;
        max_res = res.max_residual;
    } else {
        bool first = true;
        for (long n = n_lo; n <= n_hi; ++n) {
            if (cache.contains(n)) continue;
            try {
                zz::ZeroRecord rec = zz::solve_zero_exact(n, cfg, ctx);
                cache.insert(rec);
                ++solved;
                if (first || rec.residual < min_res) min_res = rec.residual;
                if (first || rec.residual > max_res) max_res = rec.residual;
                first = false;
            } catch (const std::exception& e) {
                failures.push_back({n, e.what()});
            }
        }
    }
    zz::save_zero_cache(path, cache);

    std::printf("cache        %s\n", path.c_str());
    std::printf("range        %ld..%ld\n", n_lo, n_hi);
    std::printf("cache hits   %zu\n", have.size());
    std::printf("solved       %ld\n", solved);
    if (solved > 0) std::printf("residuals    min %.3e  max %.3e\n", min_res, max_res);
    if (!failures.empty()) {
        std::printf("failures     %zu\n", failures.size());
        for (const auto& f : failures) std::printf("  n=%ld: %s\n", f.n, f.message.c_str());
        return 1;
    }
    return 0;
}

// ----------------------------------------------------------------- gue ----
int cmd_gue(const GlobalOpts& g, long M, long N, double step, int bins,
            const std::string& import_path, long import_offset) {
    if (N <= M) throw zz::UsageError("gue: need N > M");
    zz::PrecisionContext ctx(g.digits);
    zz::SpacingSeries spacings;
    if (!import_path.empty()) {
        std::vector<double> ys = zz::load_ordinate_file(import_path);
        spacings = zz::normalized_spacings(ys, import_offset, M, N);
    } else {
        std::string path = cache_path_for(g, zz::SolveMethod::asymptotic_eq);
        zz::ZeroCacheFile cache = load_or_new(path, g.digits, zz::SolveMethod::asymptotic_eq);
        if (auto gap = cache.missing_range(M, N + 1))
            throw zz::MissingZerosError("gue: cache is missing zeros " +
                                            std::to_string(gap->first) + ".." +
                                            std::to_string(gap->second) +
                                            " (run `zetazero batch` first)",
                                        gap->first, gap->second);
        spacings = zz::normalized_spacings(cache.to_records(M, N + 1), M, N);
    }
    auto rows = zz::pair_correlation_bins(spacings, 0.0, step, bins, ctx);
    std::printf("x_mid,empirical,gue\n");
    for (const auto& b : rows) std::printf("%.6f,%.8f,%.8f\n", b.x_mid, b.empirical, b.gue);
    return 0;
}

// --------------------------------------------------------------- prime ----
int cmd_prime(const GlobalOpts& g, double x_lo, double x_hi, int zero_count,
              const std::string& what, int samples, bool seed_ordinates, std::uint64_t limit) {
    zz::PrecisionContext ctx(g.digits);
    zz::ArithmeticFunctionTable tables = zz::build_arithmetic_tables(limit);
    std::vector<zz::ZeroRecord> zeros;
    if (!seed_ordinates && zero_count > 0) {
        std::string path = cache_path_for(g, zz::SolveMethod::exact_eq);
        if (!std::filesystem::exists(path))
            path = cache_path_for(g, zz::SolveMethod::asymptotic_eq);
        zz::ZeroCacheFile cache = load_or_new(path, g.digits, zz::SolveMethod::asymptotic_eq);
        if (auto gap = cache.missing_range(1, zero_count))
            throw zz::MissingZerosError("prime: cache is missing zeros " +
                                            std::to_string(gap->first) + ".." +
                                            std::to_string(gap->second),
                                        gap->first, gap->second);
        zeros = cache.to_records(1, zero_count);
    }
    zz::PrimeReconstruction rec = zz::reconstruct_figure(
        x_lo, x_hi, samples, zero_count,
        seed_ordinates ? zz::ZeroSource::lambert_seed : zz::ZeroSource::solved, zeros, tables, ctx);

    const std::vector<double>* values = &rec.pi_vals;
    const std::vector<double>* oracle = &rec.pi_true;
    if (what == "psi") {
        values = &rec.psi_vals;
        oracle = &rec.psi_true;
    } else if (what == "j") {
        values = &rec.j_vals;
        oracle = nullptr;
    } else if (what != "pi") {
        throw zz::UsageError("prime: --what must be pi, psi or j");
    }
    std::printf("x,reconstructed,oracle\n");
    for (std::size_t i = 0; i < rec.xs.size(); ++i) {
        if (oracle)
            std::printf("%.6f,%.8f,%.8f\n", rec.xs[i], (*values)[i], (*oracle)[i]);
        else
            std::printf("%.6f,%.8f,\n", rec.xs[i], (*values)[i]);
    }
    return 0;
}

// --------------------------------------------------------------- audit ----
int cmd_audit(const GlobalOpts& g, long n_lo, long n_hi, double delta) {
    if (delta <= 0.0)
        throw zz::UsageError("audit: delta must be strictly positive");
    if (n_lo < 1 || n_hi < n_lo) throw zz::UsageError("audit: need 1 <= n_lo <= n_hi");
    zz::PrecisionContext ctx(g.digits);

    std::string path = g.cache_path;
    if (path.empty()) {
        path = zz::default_cache_path(zz::SolveMethod::exact_eq);
        if (!std::filesystem::exists(path))
            path = zz::default_cache_path(zz::SolveMethod::asymptotic_eq);
    }
    zz::ZeroCacheFile cache = load_or_new(path, g.digits, zz::SolveMethod::asymptotic_eq);
    if (auto gap = cache.missing_range(n_lo, n_hi))
        throw zz::MissingZerosError("audit: cache is missing zeros " +
                                        std::to_string(gap->first) + ".." +
                                        std::to_string(gap->second),
                                    gap->first, gap->second);

    zz::Real d(delta, ctx.prec_bits());
    std::printf("n,asymptotic_abs,exact_abs\n");
    for (long n = n_lo; n <= n_hi; ++n) {
        zz::Real y(*cache.ordinate(n), zz::bits_for_digits(cache.digits + 4));
        double asym = std::abs(zz::asymptotic_lhs(y, n, d, ctx).to_double());
        double exact = std::abs(zz::exact_lhs(y, n, d, ctx).to_double());
        std::printf("%ld,%.6e,%.6e\n", n, asym, exact);
    }
    return 0;
}

// ---------------------------------------------------------------- gram ----
int cmd_gram(const GlobalOpts& g, long n) {
    zz::PrecisionContext ctx(g.digits);
    zz::Real gp = zz::gram_point(n, ctx);
    if (g.format == "json") {
        json j{{"n", n}, {"gram_point", gp.to_decimal_string(g.digits)}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("%s\n", gp.to_decimal_string(g.digits).c_str());
    }
    return 0;
}

// --------------------------------------------------------------- count ----
int cmd_count(const GlobalOpts& g, double T, const std::string& variant) {
    zz::PrecisionContext ctx(g.digits);
    zz::Real Tr(T, ctx.prec_bits());
    auto one = [&](zz::CountVariant v) { return zz::count_zeros_smooth(Tr, v, ctx); };
    struct Row {
        const char* name;
        zz::CountVariant v;
    };
    std::vector<Row> rows;
    if (variant == "all") {
        rows = {{"riemann_asymptotic", zz::CountVariant::riemann_asymptotic},
                {"backlund_exact", zz::CountVariant::backlund_exact},
                {"critical_line_asymptotic", zz::CountVariant::critical_line_asymptotic},
                {"critical_line_exact", zz::CountVariant::critical_line_exact}};
    } else if (variant == "riemann") {
        rows = {{"riemann_asymptotic", zz::CountVariant::riemann_asymptotic}};
    } else if (variant == "backlund") {
        rows = {{"backlund_exact", zz::CountVariant::backlund_exact}};
    } else if (variant == "critical-asymptotic") {
        rows = {{"critical_line_asymptotic", zz::CountVariant::critical_line_asymptotic}};
    } else if (variant == "critical-exact") {
        rows = {{"critical_line_exact", zz::CountVariant::critical_line_exact}};
    } else {
        throw zz::UsageError("count: unknown variant '" + variant + "'");
    }
    std::printf("variant,value,near_zero_warning\n");
    for (const auto& r : rows) {
        zz::CountResult res = one(r.v);
        std::printf("%s,%.9f,%d\n", r.name, res.value.to_double(), res.near_zero_warning ? 1 : 0);
        if (res.near_zero_warning)
            std::fprintf(stderr, "warning: T is close to a zero ordinate; count is unstable\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision Riemann zeta zeros: solving, statistics, prime counting"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string config_path;
    app.add_option("--digits", g.digits, "working significant decimal digits")
        ->check(CLI::Range(15, 2000));
    app.add_option("--format", g.format, "output format: plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--cache", g.cache_path, "cache file path (default per method)");
    app.add_option("--config", config_path, "JSON config file with run defaults");
    app.add_option("--jobs", g.jobs, "worker threads for batch solving")->check(CLI::Range(1, 512));

    // zero
    auto* zero = app.add_subcommand("zero", "solve or estimate the n-th zero");
    std::string zero_n, zero_method = "asymptotic";
    bool zero_no_cache = false;
    zero->add_option("n", zero_n, "zero index (arbitrary size for --method seed)")->required();
    zero->add_option("--method", zero_method, "asymptotic|exact|seed");
    zero->add_flag("--no-cache", zero_no_cache, "do not touch the cache");

    // batch
    auto* batch = app.add_subcommand("batch", "solve an index range into the cache");
    long b_lo = 0, b_hi = 0;
    std::string batch_method = "asymptotic";
    batch->add_option("n_lo", b_lo)->required();
    batch->add_option("n_hi", b_hi)->required();
    batch->add_option("--method", batch_method, "asymptotic|exact");

    // gue
    auto* gue = app.add_subcommand("gue", "pair-correlation histogram vs the GUE curve");
    long gue_m = 0, gue_n = 0, gue_offset = 1;
    double gue_step = 0.05;
    int gue_bins = 61;
    std::string gue_import;
    gue->add_option("M", gue_m)->required();
    gue->add_option("N", gue_n)->required();
    gue->add_option("--step", gue_step, "bin width (default 0.05)");
    gue->add_option("--bins", gue_bins, "number of bins (default 61: x in (0, 3.05])");
    gue->add_option("--import", gue_import, "external ordinate file, one per line");
    gue->add_option("--offset", gue_offset, "index of the first imported line (default 1)");

    // prime
    auto* prime = app.add_subcommand("prime", "prime-counting reconstruction from zeros");
    double p_lo = 2.0, p_hi = 100.0;
    int p_zeros = 50, p_samples = 393;
    std::string p_what = "pi";
    bool p_seed = false;
    std::uint64_t p_limit = 100000;
    prime->add_option("x_lo", p_lo)->required();
    prime->add_option("x_hi", p_hi)->required();
    prime->add_option("--zeros", p_zeros, "number of zeros in the explicit formula");
    prime->add_option("--what", p_what, "pi|psi|j");
    prime->add_option("--samples", p_samples, "grid points");
    prime->add_flag("--seed-ordinates", p_seed, "use closed-form seed ordinates instead of solved");
    prime->add_option("--limit", p_limit, "sieve table limit");

    // audit
    auto* audit = app.add_subcommand("audit", "equation residuals for cached zeros");
    long a_lo = 0, a_hi = 0;
    double a_delta = 1e-9;
    audit->add_option("n_lo", a_lo)->required();
    audit->add_option("n_hi", a_hi)->required();
    audit->add_option("--delta", a_delta, "shift used in both equations (must be > 0)");

    // gram
    auto* gram = app.add_subcommand("gram", "n-th Gram point");
    long gram_n = 0;
    gram->add_option("n", gram_n)->required();

    // count
    auto* count = app.add_subcommand("count", "zero-counting formulas at height T");
    double count_T = 0.0;
    std::string count_variant = "all";
    count->add_option("T", count_T)->required();
    count->add_option("--variant", count_variant,
                      "all|riemann|backlund|critical-asymptotic|critical-exact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            zz::RunConfig cfg = zz::load_run_config(config_path);
            if (!app.count("--digits")) g.digits = cfg.digits;
            if (!app.count("--format")) g.format = cfg.output_format;
            if (g.cache_path.empty()) g.cache_path = cfg.cache_path;
            g.delta_schedule = cfg.delta_schedule;
        }
        if (zero->parsed()) return cmd_zero(g, zero_n, zero_method, zero_no_cache);
        if (batch->parsed()) return cmd_batch(g, b_lo, b_hi, batch_method);
        if (gue->parsed()) return cmd_gue(g, gue_m, gue_n, gue_step, gue_bins, gue_import, gue_offset);
        if (prime->parsed())
            return cmd_prime(g, p_lo, p_hi, p_zeros, p_what, p_samples, p_seed, p_limit);
        if (audit->parsed()) return cmd_audit(g, a_lo, a_hi, a_delta);
        if (gram->parsed()) return cmd_gram(g, gram_n);
        if (count->parsed()) return cmd_count(g, count_T, count_variant);
    } catch (const zz::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
