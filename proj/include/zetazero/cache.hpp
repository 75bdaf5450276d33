#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetazero/solver.hpp"

namespace zetazero {

// Line-oriented persistent store of solved zeros. Ordinates are decimal
// strings so precision never silently degrades through binary floats.
//
//   zetazero-cache 1 digits=<D> method=<asymptotic_eq|exact_eq|lambert_seed>
//   <n> <ordinate>
//   ...
//
// Rows are strictly increasing in both n and y; no duplicate n.
struct ZeroCacheFile {
    int format_version = 1;
    int digits = 15;
    SolveMethod method = SolveMethod::asymptotic_eq;
    std::vector<std::pair<long, std::string>> rows;

    bool contains(long n) const;
    std::optional<std::string> ordinate(long n) const;
    // Inserts keeping order; an existing row for n wins (idempotent reruns).
    void insert(long n, std::string y);
    void insert(const ZeroRecord& rec);
    // First missing index in [lo, hi], or nullopt when fully covered.
    std::optional<std::pair<long, long>> missing_range(long lo, long hi) const;

    std::vector<ZeroRecord> to_records(long lo, long hi) const;
    void validate() const;  // invariants; throws CacheError naming the row
};

ZeroCacheFile load_zero_cache(const std::string& path);
// Atomic replace: the new content is written beside the target and renamed.
void save_zero_cache(const std::string& path, const ZeroCacheFile& cache);

// Run-wide configuration; JSON file with the same field names.
struct RunConfig {
    int digits = 30;
    std::vector<double> delta_schedule;
    long n_lo = 1;
    long n_hi = 1;
    std::string output_format = "plain";  // csv | json | plain
    std::string cache_path;

    void validate() const;
};

RunConfig load_run_config(const std::string& path);

// Default cache file path for a method, honouring the ZETAZERO_CACHE
// environment variable (a directory) when set.
std::string default_cache_path(SolveMethod method);

}  // namespace zetazero
