#include "zetazero/primes.hpp"

#include <cmath>

#include "zetazero/quadrature.hpp"

namespace zetazero {

namespace {

// floor(x^(1/m)) with exact integer verification at the boundary
std::uint64_t nth_root_floor(double x, int m) {
    if (x < 1.0) return 0;
    auto pow_le = [&](std::uint64_t r) {
        // r^m <= x, computed without overflow
        long double p = 1.0L;
        for (int i = 0; i < m; ++i) {
            p *= static_cast<long double>(r);
            if (p > static_cast<long double>(x) * 1.0000001L) return false;
        }
        return static_cast<double>(p) <= x;
    };
    std::uint64_t r = static_cast<std::uint64_t>(std::pow(x, 1.0 / m) + 1e-9);
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

// conjugate-pair sum guard: the imaginary parts must cancel
Real checked_real_part(const Complex& acc, const char* what) {
    double im = std::abs(acc.im.to_double());
    if (im > 1e-8)
        throw Error(std::string(what) + ": conjugate-pair imaginary residue exceeds 1e-8");
    return acc.re;
}

}  // namespace

double j_tail_integral(double x) {
    if (x <= 1.0) throw DomainError("j_tail_integral: requires x > 1");
    double lx = std::log(x);
    // t = x e^u maps the tail onto [0, inf) with integrand
    // 1 / ((x^2 e^{2u} - 1)(log x + u))
    auto f = [&](double u) {
        double t2 = x * x * std::exp(2.0 * u);
        return 1.0 / ((t2 - 1.0) * (lx + u));
    };
    return adaptive_simpson(f, 0.0, 40.0, 1e-13);
}

Real j_from_zeros(double x, const std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx) {
    if (x <= 1.0) throw DomainError("j_from_zeros: requires x > 1");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real lx = log(Real(x, prec));

    Complex acc(prec);
    for (const ZeroRecord& r : zeros) {
        Real half(0.5, prec);
        Real y(r.y);
        Complex z{half * lx, y * lx};  // rho log x
        Complex e = exp_integral_ei(z, ctx);
        // conjugate ordinate contributes Ei(conj(rho) log x) = conj(Ei)
        acc += e;
        acc += conj(e);
    }
    Real osc = checked_real_part(acc, "j_from_zeros");

    Real li = exp_integral_ei(lx, ctx);
    return li - osc + Real(j_tail_integral(x), prec) - log(Real(2.0, prec));
}

double pi_from_j(double x, const std::function<double(double)>& j,
                 const ArithmeticFunctionTable& tables) {
    if (x < 2.0) throw DomainError("pi_from_j: requires x >= 2");
    double acc = 0.0;
    for (int n = 1;; ++n) {
        double root = std::pow(x, 1.0 / n);
        if (root < 2.0) break;  // J vanishes below 2
        int mu = tables.mobius(static_cast<std::uint64_t>(n));
        if (mu != 0) acc += static_cast<double>(mu) / n * j(root);
    }
    return acc;
}

Real psi_from_zeros(double x, const std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx) {
    if (x <= 1.0) throw DomainError("psi_from_zeros: requires x > 1");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real xr(x, prec);
    Real lx = log(xr);
    Real sqrt_x = sqrt(xr);

    Complex acc(prec);
    for (const ZeroRecord& r : zeros) {
        Real y(r.y);
        Complex rho{Real(0.5, prec), y};
        // x^rho = sqrt(x) (cos(y log x) + i sin(y log x))
        Complex xp = cis(y * lx) * sqrt_x;
        Complex term = xp / rho;
        acc += term;
        acc += conj(term);  // conjugate zero
    }
    Real osc = checked_real_part(acc, "psi_from_zeros");

    Real two_pi = 2.0 * Real::pi(prec);
    Real corr = Real(0.5, prec) * log(Real(1.0, prec) - Real(1.0, prec) / (xr * xr));
    return xr - osc - log(two_pi) - corr;
}

std::uint64_t pi_oracle(double x, const ArithmeticFunctionTable& tables) {
    return tables.prime_count(x);
}

double j_oracle(double x, const ArithmeticFunctionTable& tables) {
    if (x < 2.0) return 0.0;
    double acc = 0.0;
    for (int m = 1;; ++m) {
        std::uint64_t r = nth_root_floor(x, m);
        if (r < 2) break;
        acc += static_cast<double>(tables.prime_count(static_cast<double>(r))) / m;
    }
    return acc;
}

double psi_oracle(double x, const ArithmeticFunctionTable& tables) {
    if (x < 2.0) return 0.0;
    if (x > static_cast<double>(tables.limit()))
        throw ResourceError("psi_oracle: x exceeds the sieve table limit");
    double acc = 0.0;
    for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(x); ++n)
        acc += tables.von_mangoldt(n);
    return acc;
}

PrimeReconstruction reconstruct_figure(double x_lo, double x_hi, int samples, int zero_count,
                                       ZeroSource source, const std::vector<ZeroRecord>& solved,
                                       const ArithmeticFunctionTable& tables,
                                       const PrecisionContext& ctx) {
    if (!(2.0 <= x_lo && x_lo < x_hi)) throw UsageError("reconstruct_figure: need 2 <= x_lo < x_hi");
    if (x_hi > static_cast<double>(tables.limit()))
        throw ResourceError("reconstruct_figure: range exceeds the sieve table limit");
    if (samples < 2) throw UsageError("reconstruct_figure: need at least 2 samples");
    if (zero_count < 0) throw UsageError("reconstruct_figure: zero_count must be >= 0");

    std::vector<ZeroRecord> zeros;
    if (zero_count > 0) {
        if (source == ZeroSource::lambert_seed) {
            zeros.reserve(static_cast<std::size_t>(zero_count));
            for (int k = 1; k <= zero_count; ++k) {
                ZeroRecord r;
                r.n = k;
                r.y = lambert_seed(static_cast<long>(k), ctx);
                r.method = SolveMethod::lambert_seed;
                r.digits_certified = 2;
                zeros.push_back(std::move(r));
            }
        } else {
            if (static_cast<int>(solved.size()) < zero_count ||
                solved.front().n != 1)
                throw MissingZerosError("reconstruct_figure: need solved zeros 1..K", 1, zero_count);
            zeros.assign(solved.begin(), solved.begin() + zero_count);
        }
    }

    PrimeReconstruction out;
    out.zero_count = zero_count;
    auto j_rec = [&](double v) { return j_from_zeros(v, zeros, ctx).to_double(); };
    for (int i = 0; i < samples; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (samples - 1);
        out.xs.push_back(x);
        out.j_vals.push_back(j_rec(x));
        out.pi_vals.push_back(pi_from_j(x, j_rec, tables));
        out.psi_vals.push_back(psi_from_zeros(x, zeros, ctx).to_double());
        out.pi_true.push_back(static_cast<double>(pi_oracle(x, tables)));
        out.psi_true.push_back(psi_oracle(x, tables));
    }
    return out;
}

}  // namespace zetazero
