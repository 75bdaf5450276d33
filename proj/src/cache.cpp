#include "zetazero/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zetazero {

namespace {

double parse_ordinate(const std::string& s, long lineno) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw CacheError("cache row " + std::to_string(lineno) + ": bad ordinate '" + s + "'");
    }
}

}  // namespace

bool ZeroCacheFile::contains(long n) const { return ordinate(n).has_value(); }

std::optional<std::string> ZeroCacheFile::ordinate(long n) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), n,
                               [](const auto& row, long v) { return row.first < v; });
    if (it != rows.end() && it->first == n) return it->second;
    return std::nullopt;
}

void ZeroCacheFile::insert(long n, std::string y) {
    auto it = std::lower_bound(rows.begin(), rows.end(), n,
                               [](const auto& row, long v) { return row.first < v; });
    if (it != rows.end() && it->first == n) return;  // keep the existing row
    rows.insert(it, {n, std::move(y)});
}

void ZeroCacheFile::insert(const ZeroRecord& rec) {
    insert(rec.n, rec.y.to_decimal_string(std::min(rec.digits_certified, digits)));
}

std::optional<std::pair<long, long>> ZeroCacheFile::missing_range(long lo, long hi) const {
    long first_missing = 0, last_missing = 0;
    bool any = false;
    for (long n = lo; n <= hi; ++n) {
        if (!contains(n)) {
            if (!any) first_missing = n;
            any = true;
            last_missing = n;
        }
    }
    if (!any) return std::nullopt;
    return std::make_pair(first_missing, last_missing);
}

std::vector<ZeroRecord> ZeroCacheFile::to_records(long lo, long hi) const {
    if (auto gap = missing_range(lo, hi))
        throw MissingZerosError("cache is missing zeros " + std::to_string(gap->first) + ".." +
                                    std::to_string(gap->second),
                                gap->first, gap->second);
    std::vector<ZeroRecord> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    mpfr_prec_t prec = bits_for_digits(digits + 4);
    for (long n = lo; n <= hi; ++n) {
        ZeroRecord r;
        r.n = n;
        r.y = Real(*ordinate(n), prec);
        r.digits_certified = digits;
        r.method = method;
        out.push_back(std::move(r));
    }
    return out;
}

void ZeroCacheFile::validate() const {
    double prev_y = 0.0;
    long prev_n = 0;
    long lineno = 1;
    for (const auto& [n, y] : rows) {
        ++lineno;
        if (n <= prev_n)
            throw CacheError("cache row " + std::to_string(lineno) + ": index " +
                             std::to_string(n) + " not strictly increasing");
        double yv = parse_ordinate(y, lineno);
        if (yv <= prev_y)
            throw CacheError("cache row " + std::to_string(lineno) + " (n=" + std::to_string(n) +
                             "): ordinate not strictly increasing");
        prev_n = n;
        prev_y = yv;
    }
}

ZeroCacheFile load_zero_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot open cache file: " + path);
    ZeroCacheFile cache;
    std::string header;
    if (!std::getline(in, header)) throw CacheError("cache file is empty: " + path);
    std::istringstream hs(header);
    std::string magic, digits_field, method_field;
    int version = 0;
    hs >> magic >> version >> digits_field >> method_field;
    if (magic != "zetazero-cache" || version != 1 || digits_field.rfind("digits=", 0) != 0 ||
        method_field.rfind("method=", 0) != 0)
        throw CacheError("unrecognized cache header: '" + header + "'");
    cache.format_version = version;
    cache.digits = std::atoi(digits_field.c_str() + 7);
    if (cache.digits < 1) throw CacheError("cache header: bad digits field");
    cache.method = solve_method_from_string(method_field.substr(7));

    std::string line;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long n = 0;
        std::string y;
        if (!(ls >> n >> y) || n < 1)
            throw CacheError("cache row " + std::to_string(lineno) + ": malformed line '" + line +
                             "'");
        parse_ordinate(y, lineno);
        cache.rows.emplace_back(n, y);
    }
    cache.validate();
    return cache;
}

void save_zero_cache(const std::string& path, const ZeroCacheFile& cache) {
    cache.validate();
    std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CacheError("cannot write cache file: " + tmp.string());
        out << "zetazero-cache " << cache.format_version << " digits=" << cache.digits
            << " method=" << to_string(cache.method) << "\n";
        for (const auto& [n, y] : cache.rows) out << n << " " << y << "\n";
        out.flush();
        if (!out) throw CacheError("short write to cache file: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void RunConfig::validate() const {
    if (digits < 15) throw UsageError("config: digits must be >= 15");
    if (n_lo < 1 || n_hi < n_lo) throw UsageError("config: bad n_range");
    if (output_format != "csv" && output_format != "json" && output_format != "plain")
        throw UsageError("config: output_format must be csv, json or plain");
    for (std::size_t i = 0; i + 1 < delta_schedule.size(); ++i)
        if (delta_schedule[i + 1] >= delta_schedule[i])
            throw UsageError("config: delta_schedule must be strictly decreasing");
    if (!delta_schedule.empty() && delta_schedule.back() <= 0.0)
        throw UsageError("config: delta_schedule entries must be positive");
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
    RunConfig cfg;
    if (j.contains("digits")) cfg.digits = j["digits"].get<int>();
    if (j.contains("delta_schedule"))
        cfg.delta_schedule = j["delta_schedule"].get<std::vector<double>>();
    if (j.contains("n_range")) {
        auto r = j["n_range"].get<std::vector<long>>();
        if (r.size() != 2) throw UsageError("config: n_range must be [lo, hi]");
        cfg.n_lo = r[0];
        cfg.n_hi = r[1];
    }
    if (j.contains("output_format")) cfg.output_format = j["output_format"].get<std::string>();
    if (j.contains("cache_path")) cfg.cache_path = j["cache_path"].get<std::string>();
    cfg.validate();
    return cfg;
}

std::string default_cache_path(SolveMethod method) {
    std::string dir = ".";
    if (const char* env = std::getenv("ZETAZERO_CACHE")) dir = env;
    return dir + "/zeros." + to_string(method) + ".cache";
}

}  // namespace zetazero
