#include "zetazero/statistics.hpp"

#include <cmath>
#include <fstream>

#include "zetazero/quadrature.hpp"

namespace zetazero {

namespace {

constexpr double kTwoPi = 6.283185307179586;

SpacingSeries spacings_impl(const std::vector<double>& ys, long first_index, long M, long N,
                            double global_log_density) {
    if (N <= M) throw UsageError("normalized_spacings: need N > M");
    if (M < first_index || N + 1 > first_index + static_cast<long>(ys.size()) - 1)
        throw MissingZerosError("normalized_spacings: ordinates missing for requested range", M,
                                N + 1);
    SpacingSeries out;
    out.M = M;
    out.N = N;
    out.deltas.reserve(static_cast<std::size_t>(N - M + 1));
    for (long n = M; n <= N; ++n) {
        double yn = ys[static_cast<std::size_t>(n - first_index)];
        double yn1 = ys[static_cast<std::size_t>(n + 1 - first_index)];
        if (!(yn1 > yn))
            throw UsageError("normalized_spacings: ordinates must be strictly increasing at n=" +
                             std::to_string(n));
        double dens = global_log_density > 0.0 ? global_log_density : std::log(yn / kTwoPi);
        out.deltas.push_back(dens / kTwoPi * (yn1 - yn));
    }
    return out;
}

std::vector<double> ordinates_of(const std::vector<ZeroRecord>& zeros, long* first) {
    if (zeros.empty()) throw UsageError("normalized_spacings: empty zero list");
    std::vector<double> ys;
    ys.reserve(zeros.size());
    long expect = zeros.front().n;
    for (const ZeroRecord& r : zeros) {
        if (r.n != expect)
            throw MissingZerosError("normalized_spacings: gap in zero indices", expect, r.n - 1);
        ys.push_back(r.y.to_double());
        ++expect;
    }
    *first = zeros.front().n;
    return ys;
}

}  // namespace

SpacingSeries normalized_spacings(const std::vector<ZeroRecord>& zeros, long M, long N) {
    long first = 0;
    std::vector<double> ys = ordinates_of(zeros, &first);
    return spacings_impl(ys, first, M, N, 0.0);
}

SpacingSeries normalized_spacings(const std::vector<double>& ys, long first_index, long M, long N) {
    return spacings_impl(ys, first_index, M, N, 0.0);
}

SpacingSeries montgomery_spacings(const std::vector<ZeroRecord>& zeros, long M, long N, double T) {
    if (T <= kTwoPi) throw UsageError("montgomery_spacings: T must exceed 2 pi");
    long first = 0;
    std::vector<double> ys = ordinates_of(zeros, &first);
    return spacings_impl(ys, first, M, N, std::log(T / kTwoPi));
}

double gue_rhs(double alpha, double beta, const PrecisionContext& ctx) {
    (void)ctx;  // the quadrature tolerance is fixed by the contract
    if (!(alpha >= 0.0 && beta > alpha)) throw UsageError("gue_rhs: need 0 <= alpha < beta");
    auto integrand = [](double u) {
        double pu = 3.14159265358979323846 * u;
        if (std::abs(pu) < 1e-6) {
            double s = pu * pu;
            return s / 3.0 - s * s / 22.5;  // 1 - (sin x / x)^2 for small x
        }
        double s = std::sin(pu) / pu;
        return 1.0 - s * s;
    };
    double integral = adaptive_simpson(integrand, alpha, beta, 1e-11);
    return integral / (beta - alpha);
}

namespace {

// Shared pair-counting walk: calls visit(distance) for each pair (m, n),
// m < n, with distance <= cutoff.
template <typename Visit>
void walk_pairs(const SpacingSeries& sp, double cutoff, Visit visit) {
    const long M = sp.M, N = sp.N;
    // prefix[i] = deltas[0] + ... + deltas[i-1]; the pair (m, n) is at
    // distance delta_{m+1} + ... + delta_n = prefix[n-M+1] - prefix[m-M+1]
    std::vector<double> prefix(sp.deltas.size() + 1, 0.0);
    for (std::size_t i = 0; i < sp.deltas.size(); ++i) prefix[i + 1] = prefix[i] + sp.deltas[i];
    for (long m = M; m < N; ++m) {
        double pm = prefix[static_cast<std::size_t>(m - M) + 1];
        for (long n = m + 1; n <= N; ++n) {
            double d = prefix[static_cast<std::size_t>(n - M) + 1] - pm;
            if (d > cutoff) break;  // deltas are positive, distances only grow
            visit(d);
        }
    }
}

}  // namespace

CorrelationBin pair_correlation(const SpacingSeries& spacings, double alpha, double beta,
                                const PrecisionContext& ctx) {
    if (!(beta > alpha && alpha >= 0.0)) throw UsageError("pair_correlation: need beta > alpha >= 0");
    if (spacings.N <= spacings.M) throw UsageError("pair_correlation: empty index range");
    long count = 0;
    walk_pairs(spacings, beta, [&](double d) {
        if (d > alpha && d <= beta) ++count;
    });
    CorrelationBin bin;
    bin.alpha = alpha;
    bin.beta = beta;
    bin.x_mid = 0.5 * (alpha + beta);
    bin.empirical = static_cast<double>(count) /
                    (static_cast<double>(spacings.N - spacings.M) * (beta - alpha));
    bin.gue = gue_rhs(alpha, beta, ctx);
    return bin;
}

std::vector<CorrelationBin> pair_correlation_bins(const SpacingSeries& spacings, double alpha0,
                                                  double step, int nbins,
                                                  const PrecisionContext& ctx) {
    if (nbins < 1 || step <= 0.0) throw UsageError("pair_correlation_bins: bad binning");
    if (spacings.N <= spacings.M) throw UsageError("pair_correlation_bins: empty index range");
    std::vector<long> counts(static_cast<std::size_t>(nbins), 0);
    double cutoff = alpha0 + step * nbins;
    walk_pairs(spacings, cutoff, [&](double d) {
        if (d <= alpha0) return;
        long idx = static_cast<long>(std::ceil((d - alpha0) / step)) - 1;
        if (idx >= 0 && idx < nbins) ++counts[static_cast<std::size_t>(idx)];
    });
    std::vector<CorrelationBin> bins;
    bins.reserve(static_cast<std::size_t>(nbins));
    double norm = static_cast<double>(spacings.N - spacings.M) * step;
    for (int i = 0; i < nbins; ++i) {
        CorrelationBin b;
        b.alpha = alpha0 + step * i;
        b.beta = alpha0 + step * (i + 1);
        b.x_mid = 0.5 * (b.alpha + b.beta);
        b.empirical = static_cast<double>(counts[static_cast<std::size_t>(i)]) / norm;
        b.gue = gue_rhs(b.alpha, b.beta, ctx);
        bins.push_back(b);
    }
    return bins;
}

std::vector<double> load_ordinate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot open ordinate file: " + path);
    std::vector<double> ys;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            std::size_t used = 0;
            double y = std::stod(line, &used);
            ys.push_back(y);
        } catch (const std::exception&) {
            throw CacheError("ordinate file " + path + ": bad value at line " +
                             std::to_string(lineno));
        }
    }
    if (ys.empty()) throw CacheError("ordinate file " + path + " contains no data");
    return ys;
}

}  // namespace zetazero
