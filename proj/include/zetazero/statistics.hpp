#pragma once

#include <string>
#include <vector>

#include "zetazero/precision.hpp"
#include "zetazero/solver.hpp"

namespace zetazero {

// Normalized consecutive spacings delta_n for n in [M, N]:
//   delta_n = (1/2pi) log(y_n / 2pi) (y_{n+1} - y_n)
struct SpacingSeries {
    long M = 0;
    long N = 0;
    std::vector<double> deltas;  // deltas[i] = delta_{M+i}

    double delta_at(long n) const { return deltas.at(static_cast<std::size_t>(n - M)); }
};

// One correlation bin (alpha, beta].
struct CorrelationBin {
    double alpha = 0.0;
    double beta = 0.0;
    double empirical = 0.0;  // pair count / ((N-M)(beta-alpha))
    double gue = 0.0;        // bin average of 1 - sin^2(pi u)/(pi u)^2
    double x_mid = 0.0;
};

SpacingSeries normalized_spacings(const std::vector<ZeroRecord>& zeros, long M, long N);
// Plain-ordinate variant for externally supplied zero tables; ys[0] is the
// ordinate of zero index `first_index`.
SpacingSeries normalized_spacings(const std::vector<double>& ys, long first_index, long M, long N);

// Global-normalization spacings (the original pair-correlation form, using
// log(T/2pi) with one fixed T instead of the local density).
SpacingSeries montgomery_spacings(const std::vector<ZeroRecord>& zeros, long M, long N, double T);

// (1/(beta-alpha)) * int_alpha^beta (1 - sin^2(pi u)/(pi u)^2) du, adaptive
// quadrature to 1e-10.
double gue_rhs(double alpha, double beta, const PrecisionContext& ctx);

// Empirical pair correlation over one bin, plus its GUE counterpart.
CorrelationBin pair_correlation(const SpacingSeries& spacings, double alpha, double beta,
                                const PrecisionContext& ctx = PrecisionContext(30));

// Whole histogram at once: bins (alpha0 + i*step, alpha0 + (i+1)*step].
std::vector<CorrelationBin> pair_correlation_bins(const SpacingSeries& spacings, double alpha0,
                                                  double step, int nbins,
                                                  const PrecisionContext& ctx = PrecisionContext(30));

// One decimal ordinate per line; index of the first line supplied by caller.
std::vector<double> load_ordinate_file(const std::string& path);

}  // namespace zetazero
