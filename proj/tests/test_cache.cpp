#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "zetazero/cache.hpp"

using namespace zetazero;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cache write/read round trip is byte exact") {
    TempFile tf("cache_roundtrip.tmp");
    ZeroCacheFile cache;
    cache.digits = 30;
    cache.method = SolveMethod::exact_eq;
    cache.insert(1, "14.134725141734693790457251984");
    cache.insert(2, "21.022039638771554992628479594");
    cache.insert(3, "25.010857580145688763213790993");
    save_zero_cache(tf.path, cache);

    ZeroCacheFile loaded = load_zero_cache(tf.path);
    CHECK(loaded.digits == 30);
    CHECK(loaded.method == SolveMethod::exact_eq);
    REQUIRE(loaded.rows.size() == 3);
    CHECK(loaded.rows[0].second == "14.134725141734693790457251984");
    CHECK(*loaded.ordinate(2) == "21.022039638771554992628479594");

    // writing again produces identical bytes
    save_zero_cache(tf.path, loaded);
    std::ifstream in(tf.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all ==
          "zetazero-cache 1 digits=30 method=exact_eq\n"
          "1 14.134725141734693790457251984\n"
          "2 21.022039638771554992628479594\n"
          "3 25.010857580145688763213790993\n");
}

TEST_CASE("cache insert is idempotent and ordered") {
    ZeroCacheFile cache;
    cache.insert(5, "32.9");
    cache.insert(2, "21.0");
    cache.insert(5, "different");  // ignored: first writer wins
    REQUIRE(cache.rows.size() == 2);
    CHECK(cache.rows[0].first == 2);
    CHECK(*cache.ordinate(5) == "32.9");
    CHECK_FALSE(cache.contains(3));
    auto gap = cache.missing_range(2, 5);
    REQUIRE(gap.has_value());
    CHECK(gap->first == 3);
    CHECK(gap->second == 4);
}

TEST_CASE("corrupt cache rows are rejected with the row named") {
    TempFile tf("cache_corrupt.tmp");
    {
        std::ofstream out(tf.path);
        out << "zetazero-cache 1 digits=15 method=asymptotic_eq\n";
        out << "1 14.134725142\n";
        out << "2 not-a-number\n";
    }
    try {
        load_zero_cache(tf.path);
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
}

TEST_CASE("monotonicity violations are rejected") {
    TempFile tf("cache_mono.tmp");
    {
        std::ofstream out(tf.path);
        out << "zetazero-cache 1 digits=15 method=asymptotic_eq\n";
        out << "1 14.134725142\n";
        out << "2 13.0\n";  // ordinate goes backwards
    }
    CHECK_THROWS_AS(load_zero_cache(tf.path), CacheError);

    TempFile tf2("cache_mono2.tmp");
    {
        std::ofstream out(tf2.path);
        out << "zetazero-cache 1 digits=15 method=asymptotic_eq\n";
        out << "2 21.0\n";
        out << "2 22.0\n";  // duplicate n
    }
    CHECK_THROWS_AS(load_zero_cache(tf2.path), CacheError);
}

TEST_CASE("bad headers are rejected") {
    TempFile tf("cache_header.tmp");
    {
        std::ofstream out(tf.path);
        out << "something-else 7\n1 14.1\n";
    }
    CHECK_THROWS_AS(load_zero_cache(tf.path), CacheError);
    CHECK_THROWS_AS(load_zero_cache("no_such_file.cache"), CacheError);
}

TEST_CASE("to_records parses ordinates at header precision") {
    ZeroCacheFile cache;
    cache.digits = 20;
    cache.insert(1, "14.134725141734693790");
    cache.insert(2, "21.022039638771554993");
    auto recs = cache.to_records(1, 2);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].y.to_double() == doctest::Approx(14.134725141734694));
    CHECK(recs[0].digits_certified == 20);
    CHECK_THROWS_AS(cache.to_records(1, 3), MissingZerosError);
}

TEST_CASE("run config JSON parsing and validation") {
    TempFile tf("runconfig.tmp.json");
    {
        std::ofstream out(tf.path);
        out << R"({"digits": 40, "delta_schedule": [1e-5, 1e-8],
                   "n_range": [1, 100], "output_format": "csv",
                   "cache_path": "zeros.cache"})";
    }
    RunConfig cfg = load_run_config(tf.path);
    CHECK(cfg.digits == 40);
    CHECK(cfg.delta_schedule.size() == 2);
    CHECK(cfg.n_lo == 1);
    CHECK(cfg.n_hi == 100);
    CHECK(cfg.output_format == "csv");
    CHECK(cfg.cache_path == "zeros.cache");

    TempFile bad("runconfig_bad.tmp.json");
    {
        std::ofstream out(bad.path);
        out << R"({"digits": 5})";
    }
    CHECK_THROWS_AS(load_run_config(bad.path), UsageError);
}

TEST_CASE("default cache path honours the environment variable") {
    setenv("ZETAZERO_CACHE", "/tmp/zz-test", 1);
    CHECK(default_cache_path(SolveMethod::exact_eq) == "/tmp/zz-test/zeros.exact_eq.cache");
    unsetenv("ZETAZERO_CACHE");
    CHECK(default_cache_path(SolveMethod::asymptotic_eq) == "./zeros.asymptotic_eq.cache");
}
