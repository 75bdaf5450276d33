#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "zetazero/cache.hpp"
#include "zetazero/primes.hpp"
#include "zetazero/solver.hpp"
#include "zetazero/statistics.hpp"
#include "zetazero/zeta.hpp"

namespace py = pybind11;
namespace zz = zetazero;

namespace {

zz::PrecisionContext ctx_of(int digits) { return zz::PrecisionContext(digits); }

std::vector<zz::ZeroRecord> records_from_ordinates(const std::vector<double>& ys, long first_n) {
    std::vector<zz::ZeroRecord> out;
    out.reserve(ys.size());
    long n = first_n;
    for (double y : ys) {
        zz::ZeroRecord r;
        r.n = n++;
        r.y = zz::Real(y, 64);
        r.digits_certified = 15;
        r.method = zz::SolveMethod::asymptotic_eq;
        out.push_back(std::move(r));
    }
    return out;
}

py::dict record_to_dict(const zz::ZeroRecord& rec) {
    py::dict d;
    d["n"] = rec.n;
    d["y"] = rec.y.to_decimal_string(rec.digits_certified);
    d["y_float"] = rec.y.to_double();
    d["digits_certified"] = rec.digits_certified;
    d["method"] = zz::to_string(rec.method);
    d["residual"] = rec.residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riemann zeta zeros from the counting-phase equations: solvers, "
              "pair-correlation statistics and prime-counting reconstruction";

    py::register_exception<zz::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<zz::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<zz::Error>(m, "NumericalError", PyExc_RuntimeError);

    m.def(
        "zeta",
        [](std::complex<double> z, int digits) {
            auto ctx = ctx_of(digits);
            zz::Complex v = zz::zeta(zz::Complex(z.real(), z.imag(), ctx.prec_bits()), ctx);
            return std::complex<double>(v.re.to_double(), v.im.to_double());
        },
        py::arg("z"), py::arg("digits") = 30, "zeta(z) via Euler-Maclaurin summation");

    m.def(
        "chi",
        [](std::complex<double> z, int digits) {
            auto ctx = ctx_of(digits);
            zz::Complex v = zz::chi(zz::Complex(z.real(), z.imag(), ctx.prec_bits()), ctx);
            return std::complex<double>(v.re.to_double(), v.im.to_double());
        },
        py::arg("z"), py::arg("digits") = 30, "completed function pi^(-z/2) Gamma(z/2) zeta(z)");

    m.def(
        "riemann_siegel_theta",
        [](double t, int digits) { return zz::riemann_siegel_theta(t, ctx_of(digits)).to_double(); },
        py::arg("t"), py::arg("digits") = 30);

    m.def(
        "arg_zeta",
        [](double y, double delta, int digits) {
            auto ctx = ctx_of(digits);
            return zz::arg_zeta_shifted(zz::Real(y, ctx.prec_bits()),
                                        zz::Real(delta, ctx.prec_bits()), ctx)
                .to_double();
        },
        py::arg("y"), py::arg("delta") = 1e-9, py::arg("digits") = 30,
        "principal arg zeta(1/2 + delta + i y)");

    m.def("lambert_w0", [](double x) { return zz::lambert_w0(x); }, py::arg("x"),
          "principal Lambert branch, double precision");

    m.def(
        "lambert_seed",
        [](const std::string& n, int digits) {
            auto ctx = ctx_of(digits);
            zz::Real y = zz::lambert_seed(n, ctx);
            return y.to_decimal_string(std::min<int>(digits, static_cast<int>(n.size()) + 4));
        },
        py::arg("n"), py::arg("digits") = 30,
        "closed-form zero estimate as a decimal string; n may be arbitrarily large");

    m.def(
        "zero",
        [](long n, const std::string& method, int digits) {
            auto ctx = ctx_of(digits);
            zz::SolverConfig cfg;
            cfg.target_digits = digits;
            zz::SolveMethod sm = zz::solve_method_from_string(method);
            zz::ZeroRecord rec;
            if (sm == zz::SolveMethod::lambert_seed) {
                rec.n = n;
                rec.y = zz::lambert_seed(n, ctx);
                rec.digits_certified = std::min(digits, 12);
                rec.method = sm;
            } else if (sm == zz::SolveMethod::exact_eq) {
                rec = zz::solve_zero_exact(n, cfg, ctx);
            } else {
                rec = zz::solve_zero_asymptotic(n, cfg, ctx);
            }
            return record_to_dict(rec);
        },
        py::arg("n"), py::arg("method") = "asymptotic", py::arg("digits") = 30,
        "solve the n-th zero; returns a dict with the ordinate as a decimal string");

    m.def(
        "gram_point",
        [](long n, int digits) { return zz::gram_point(n, ctx_of(digits)).to_double(); },
        py::arg("n"), py::arg("digits") = 30);

    m.def(
        "count_zeros",
        [](double T, const std::string& variant, int digits) {
            zz::CountVariant v = zz::CountVariant::critical_line_exact;
            if (variant == "riemann") v = zz::CountVariant::riemann_asymptotic;
            else if (variant == "backlund") v = zz::CountVariant::backlund_exact;
            else if (variant == "critical-asymptotic") v = zz::CountVariant::critical_line_asymptotic;
            else if (variant != "critical-exact")
                throw zz::UsageError("count_zeros: unknown variant " + variant);
            auto ctx = ctx_of(digits);
            return zz::count_zeros_smooth(zz::Real(T, ctx.prec_bits()), v, ctx).value.to_double();
        },
        py::arg("T"), py::arg("variant") = "critical-exact", py::arg("digits") = 30);

    m.def("gue_rhs",
          [](double alpha, double beta) { return zz::gue_rhs(alpha, beta, ctx_of(30)); },
          py::arg("alpha"), py::arg("beta"), "bin average of 1 - sin^2(pi u)/(pi u)^2");

    m.def(
        "normalized_spacings",
        [](const std::vector<double>& ordinates, long first_index, long M, long N) {
            return zz::normalized_spacings(ordinates, first_index, M, N).deltas;
        },
        py::arg("ordinates"), py::arg("first_index"), py::arg("M"), py::arg("N"));

    m.def(
        "pair_correlation",
        [](const std::vector<double>& ordinates, long first_index, long M, long N, double alpha0,
           double step, int nbins) {
            auto sp = zz::normalized_spacings(ordinates, first_index, M, N);
            auto bins = zz::pair_correlation_bins(sp, alpha0, step, nbins);
            py::list out;
            for (const auto& b : bins) out.append(py::make_tuple(b.x_mid, b.empirical, b.gue));
            return out;
        },
        py::arg("ordinates"), py::arg("first_index"), py::arg("M"), py::arg("N"),
        py::arg("alpha0") = 0.0, py::arg("step") = 0.05, py::arg("nbins") = 61);

    m.def(
        "pi_oracle",
        [](double x, std::uint64_t limit) {
            return zz::pi_oracle(x, zz::build_arithmetic_tables(limit));
        },
        py::arg("x"), py::arg("limit") = 100000);

    m.def(
        "psi_oracle",
        [](double x, std::uint64_t limit) {
            return zz::psi_oracle(x, zz::build_arithmetic_tables(limit));
        },
        py::arg("x"), py::arg("limit") = 100000);

    m.def(
        "j_from_zeros",
        [](double x, const std::vector<double>& ordinates, int digits) {
            return zz::j_from_zeros(x, records_from_ordinates(ordinates, 1), ctx_of(digits))
                .to_double();
        },
        py::arg("x"), py::arg("ordinates"), py::arg("digits") = 30);

    m.def(
        "psi_from_zeros",
        [](double x, const std::vector<double>& ordinates, int digits) {
            return zz::psi_from_zeros(x, records_from_ordinates(ordinates, 1), ctx_of(digits))
                .to_double();
        },
        py::arg("x"), py::arg("ordinates"), py::arg("digits") = 30);

    m.def(
        "pi_from_zeros",
        [](double x, const std::vector<double>& ordinates, int digits, std::uint64_t limit) {
            auto tables = zz::build_arithmetic_tables(limit);
            auto zeros = records_from_ordinates(ordinates, 1);
            auto ctx = ctx_of(digits);
            auto j = [&](double v) { return zz::j_from_zeros(v, zeros, ctx).to_double(); };
            return zz::pi_from_j(x, j, tables);
        },
        py::arg("x"), py::arg("ordinates"), py::arg("digits") = 30, py::arg("limit") = 100000);

    m.attr("__version__") = "0.1.0";
}
