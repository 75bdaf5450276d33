#include "zetazero/solver.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

#include "zetazero/brent.hpp"
#include "zetazero/special_functions.hpp"
#include "zetazero/zeta.hpp"

namespace zetazero {

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::lambert_seed: return "lambert_seed";
        case SolveMethod::asymptotic_eq: return "asymptotic_eq";
        case SolveMethod::exact_eq: return "exact_eq";
    }
    return "unknown";
}

SolveMethod solve_method_from_string(const std::string& s) {
    if (s == "lambert_seed" || s == "seed") return SolveMethod::lambert_seed;
    if (s == "asymptotic_eq" || s == "asymptotic") return SolveMethod::asymptotic_eq;
    if (s == "exact_eq" || s == "exact") return SolveMethod::exact_eq;
    throw UsageError("unknown solve method: '" + s + "'");
}

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kPi = 3.14159265358979323846;

double mean_spacing(double y) {
    double r = y / kTwoPi;
    if (r < 1.7) r = 1.7;
    return kTwoPi / std::log(r);
}

int integer_digits(double y) {
    if (y < 1.0) return 1;
    return static_cast<int>(std::floor(std::log10(y))) + 1;
}

Real seed_from_real_index(const Real& n, const PrecisionContext& ctx) {
    mpfr_prec_t wp = std::max(ctx.prec_bits(), n.prec()) + 32;
    int wdigits = static_cast<int>(static_cast<double>(wp) / 3.3219280948873626);
    PrecisionContext wctx(std::max(15, wdigits - 10), 10);
    Real pi = Real::pi(wp);
    Real shifted(wp);
    mpfr_set(shifted.raw(), n.raw(), MPFR_RNDN);
    shifted -= Real(1.375, wp);
    Real w = lambert_w0(shifted / exp(Real(1.0, wp)), wctx);
    return 2.0 * pi * shifted / w;
}

}  // namespace

Real lambert_seed(long n, const PrecisionContext& ctx) {
    if (n < 1) throw UsageError("lambert_seed: n must be >= 1");
    return seed_from_real_index(Real(n, ctx.prec_bits()), ctx);
}

Real lambert_seed(const std::string& n_str, const PrecisionContext& ctx) {
    // precision scaled with the size of n so the 11/8 shift is not lost
    mpfr_prec_t prec = bits_for_digits(static_cast<int>(n_str.size()) + ctx.digits + ctx.guard);
    Real n(n_str, prec);
    if (n < 1.0) throw UsageError("lambert_seed: n must be >= 1");
    return seed_from_real_index(n, ctx);
}

Real asymptotic_lhs(const Real& y, long n, const Real& delta, const PrecisionContext& ctx) {
    if (n < 1) throw UsageError("asymptotic_lhs: n must be >= 1");
    if (y.to_double() <= kTwoPi)
        throw DomainError("asymptotic_lhs: y must exceed 2 pi (monotone region)");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real pi = Real::pi(prec);
    Real two_pi_e = 2.0 * pi * exp(Real(1.0, prec));
    Real s = arg_zeta_shifted(y, delta, ctx) / pi;
    return y / (2.0 * pi) * log(y / two_pi_e) + s - (Real(n, prec) - 1.375);
}

Real exact_lhs(const Real& y, long n, const Real& delta, const PrecisionContext& ctx) {
    if (n < 1) throw UsageError("exact_lhs: n must be >= 1");
    if (y.sign() <= 0) throw DomainError("exact_lhs: y must be positive");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real pi = Real::pi(prec);
    Real theta = riemann_siegel_theta(y, ctx);
    Real s = arg_zeta_shifted(y, delta, ctx);
    return theta + s - (Real(n, prec) - 1.5) * pi;
}

namespace {

// ---------------------------------------------------------------------------
// Normalized equation LHS in "counting units": between consecutive zeros the
// value sits exactly on a half-integer plateau (-1/2 just below y_n, +1/2
// just above), and it crosses zero only on the delta-smoothed jump at y_n.
// Bracketing reads the plateau values to know how many jumps it stepped over.

struct EvalPoint {
    double lhs;       // normalized LHS
    double abs_zeta;  // |zeta| at the shifted point, for branch-cut detection
};

// MPFR-backed evaluator; delta is kept in full precision because the exact
// solver drives it far below the double underflow threshold.
class MpEquationEval {
  public:
    MpEquationEval(long n, bool exact, Real delta, const PrecisionContext& ectx)
        : n_(n), exact_(exact), ectx_(ectx), delta_(std::move(delta)) {}

    Real lhs(const Real& y, Real* abs_out = nullptr) const {
        const mpfr_prec_t prec = ectx_.prec_bits() + 16;
        Real pi = Real::pi(prec);
        LineValue lv = arg_zeta_shifted_with_modulus(y, delta_, ectx_);
        if (abs_out) *abs_out = lv.abs_zeta;
        if (exact_) {
            Real theta = riemann_siegel_theta(y, ectx_);
            return (theta + lv.arg) / pi - (Real(n_, prec) - 1.5);
        }
        Real two_pi_e = 2.0 * pi * exp(Real(1.0, prec));
        return y / (2.0 * pi) * log(y / two_pi_e) + lv.arg / pi - (Real(n_, prec) - 1.375);
    }

    EvalPoint point(double y) const {
        Real az(ectx_.prec_bits());
        Real v = lhs(Real(y, ectx_.prec_bits() + 16), &az);
        return {v.to_double(), az.to_double()};
    }

  private:
    long n_;
    bool exact_;
    PrecisionContext ectx_;
    Real delta_;
};

// Fast-path evaluator for the asymptotic equation (double-double engine for
// arg zeta; the smooth log term goes through MPFR because its cancellation
// against n reaches the double round-off floor by n ~ 1e5).
class FastEquationEval {
  public:
    FastEquationEval(const FastLineEvaluator* ev, long n)
        : ev_(ev), n_(n), smooth_ctx_(26, 6) {}

    EvalPoint point(double y) const {
        FastLineEvaluator::Value v = ev_->eval(y);
        const mpfr_prec_t prec = smooth_ctx_.prec_bits();
        Real pi = Real::pi(prec);
        Real yy(y, prec);
        Real smooth = yy / (2.0 * pi) * log(yy / (2.0 * pi * exp(Real(1.0, prec)))) -
                      (Real(n_, prec) - 1.375);
        return {smooth.to_double() + v.arg_pv / kPi, v.abs_zeta};
    }

  private:
    const FastLineEvaluator* ev_;
    long n_;
    PrecisionContext smooth_ctx_;
};

struct Plateau {
    double y;
    double lhs;
    double abs_zeta;
    long offset;  // lhs snapped to offset + 1/2
};

// Reads the plateau at y, nudging away from a jump when the raw value does
// not sit near a half-integer.
template <typename Eval>
Plateau read_plateau(const Eval& ev, double y, double spacing, int* budget) {
    static constexpr double kSnapTol = 0.17;
    double probe = y;
    for (int attempt = 0; attempt < 7; ++attempt) {
        EvalPoint p = ev.point(probe);
        double r = p.lhs - 0.5;
        double m = std::nearbyint(r);
        if (std::abs(r - m) <= kSnapTol)
            return Plateau{probe, p.lhs, p.abs_zeta, static_cast<long>(m)};
        if (budget && --*budget < 0) throw BracketError("bracket: plateau snap budget exhausted");
        double step = spacing * 0.073 * (attempt + 1);
        probe = y + ((attempt % 2 == 0) ? -step : step);
        if (probe <= kTwoPi + 0.6) probe = y + spacing * 0.073 * (attempt + 1);
    }
    throw BracketError("bracket: no half-integer plateau near y");
}

struct Bracket {
    double a;
    double b;
    double fa;
    double fb;
    double abs_a;
    double abs_b;
};

// Walks endpoints outward until the left plateau lies below the n-th jump
// and the right plateau above it.
template <typename Eval>
Bracket bracket_jump(const Eval& ev, double seed, double spacing, const SolverConfig& cfg) {
    int budget = cfg.max_bracket_expansions;
    double h = cfg.bracket_halfwidth_factor * spacing;
    double lo = kTwoPi + 0.55;

    double a = std::max(seed - h, lo);
    Plateau pa = read_plateau(ev, a, spacing, &budget);
    while (pa.offset > -1) {
        if (--budget < 0) throw BracketError("bracket: expansion budget exhausted (left)");
        double step = (static_cast<double>(pa.offset) + 1.0 + 0.45) * spacing;
        a = std::max(pa.y - step, lo);
        pa = read_plateau(ev, a, spacing, &budget);
    }

    double b = seed + h;
    if (b <= pa.y + 0.05 * spacing) b = pa.y + h;
    Plateau pb = read_plateau(ev, b, spacing, &budget);
    while (pb.offset < 0) {
        if (--budget < 0) throw BracketError("bracket: expansion budget exhausted (right)");
        double step = (-static_cast<double>(pb.offset) + 0.45) * spacing;
        b = pb.y + step;
        pb = read_plateau(ev, b, spacing, &budget);
    }
    return Bracket{pa.y, pb.y, pa.lhs, pb.lhs, pa.abs_zeta, pb.abs_zeta};
}

// A root is accepted only if |zeta| there is far below the plateau level;
// a principal-value branch cut also produces a sign change but leaves
// |zeta| at ordinary size.
bool genuine_zero(double abs_at_root, double plateau_scale) {
    return abs_at_root < std::max(1e-7, 1e-4 * plateau_scale);
}

struct FastSolveOutcome {
    double y;
    double residual;
};

FastSolveOutcome solve_fast(const FastLineEvaluator& engine, long n, double seed,
                            const SolverConfig& cfg) {
    FastEquationEval ev(&engine, n);
    double spacing = mean_spacing(seed);
    Bracket br = bracket_jump(ev, seed, spacing, cfg);
    auto f = [&](double y) { return ev.point(y).lhs; };
    double tol = std::max({cfg.brent_tol, std::abs(seed) * 4e-16, 1e-13});
    double root = brent_root<double>(f, br.a, br.b, br.fa, br.fb, tol);
    EvalPoint at_root = ev.point(root);
    if (!genuine_zero(at_root.abs_zeta, std::max(br.abs_a, br.abs_b)))
        throw BracketError("solver: converged onto an arg branch cut, not a zero");
    return {root, std::abs(at_root.lhs)};
}

}  // namespace

ZeroRecord solve_zero_asymptotic(long n, const SolverConfig& cfg, const PrecisionContext& ctx) {
    if (n < 1) throw UsageError("solve_zero_asymptotic: n must be >= 1");
    if (n > cfg.n_cap) throw ResourceError("solve_zero_asymptotic: n exceeds configured cap");

    double seed = lambert_seed(n, PrecisionContext(30)).to_double();
    double delta = cfg.asymptotic_delta;

    if (ctx.digits <= 15) {
        for (int attempt = 0;; ++attempt) {
            FastLineEvaluator engine(delta, seed + 8.0 * mean_spacing(seed) + 16.0);
            try {
                FastSolveOutcome out = solve_fast(engine, n, seed, cfg);
                int decimals = std::min(10, static_cast<int>(-std::log10(delta)));
                ZeroRecord rec;
                rec.n = n;
                rec.y = Real(out.y, bits_for_digits(18));
                rec.digits_certified = integer_digits(out.y) + decimals;
                rec.method = SolveMethod::asymptotic_eq;
                rec.residual = out.residual;
                return rec;
            } catch (const BracketError&) {
                if (attempt >= 2) throw;
                delta *= 1e-3;  // sharpen the jump, move branch-cut windows
            }
        }
    }

    // High-precision variant: locate with the fast engine, then re-solve with
    // the MPFR evaluator at a delta matched to the digit target.
    FastLineEvaluator engine(delta, seed + 8.0 * mean_spacing(seed) + 16.0);
    FastSolveOutcome rough = solve_fast(engine, n, seed, cfg);
    const mpfr_prec_t yprec = bits_for_digits(ctx.digits + 12);
    Real mp_delta = Real::pow10(-(ctx.digits + 2), yprec);
    int eval_digits = 18 + integer_digits(rough.y);
    MpEquationEval ev(n, /*exact=*/false, mp_delta, PrecisionContext(ctx.digits + 8 + eval_digits));
    Real half_width(1e-6, yprec);
    Real a = Real(rough.y, yprec) - half_width;
    Real b = Real(rough.y, yprec) + half_width;
    Real fa = ev.lhs(a), fb = ev.lhs(b);
    Real tol = Real(rough.y, yprec) * Real::pow10(-(ctx.digits + 4), yprec);
    auto f = [&](const Real& y) { return ev.lhs(y); };
    Real root = brent_root<Real>(f, a, b, fa, fb, tol);
    Real residual = ev.lhs(root);
    ZeroRecord rec;
    rec.n = n;
    rec.y = root;
    rec.digits_certified = ctx.digits;
    rec.method = SolveMethod::asymptotic_eq;
    rec.residual = std::abs(residual.to_double());
    return rec;
}

ZeroRecord solve_zero_exact(long n, const SolverConfig& cfg, const PrecisionContext& ctx) {
    if (n < 1) throw UsageError("solve_zero_exact: n must be >= 1");
    if (n > cfg.n_cap) throw ResourceError("solve_zero_exact: n exceeds configured cap");
    if (cfg.delta_schedule.empty()) throw UsageError("solve_zero_exact: empty delta schedule");
    for (std::size_t i = 0; i + 1 < cfg.delta_schedule.size(); ++i)
        if (cfg.delta_schedule[i + 1] >= cfg.delta_schedule[i])
            throw UsageError("solve_zero_exact: delta schedule must be strictly decreasing");
    if (cfg.delta_schedule.back() <= 0.0)
        throw UsageError("solve_zero_exact: delta must stay strictly positive");

    const int target = std::max(cfg.target_digits, ctx.digits);
    double seed = lambert_seed(n, PrecisionContext(30)).to_double();
    const double spacing = mean_spacing(seed);
    const int int_digits = integer_digits(seed);
    const int target_decimals = std::max(1, target - int_digits);
    const mpfr_prec_t yprec = bits_for_digits(target + 16);
    const int n_mag = integer_digits(static_cast<double>(n));

    Real root(yprec);
    bool have_prev = false;
    Real prev(yprec);
    Real delta(cfg.delta_schedule.front(), yprec);
    double neg_log10_delta = -std::log10(cfg.delta_schedule.front());
    double prev_neg_log10 = neg_log10_delta;
    std::size_t schedule_pos = 0;
    std::optional<MpEquationEval> final_ev;
    Real final_delta(yprec);
    int agreed_decimals = 0;

    const int max_stages = 200;
    bool converged = false;
    for (int stage = 0; stage < max_stages && !converged; ++stage) {
        int eval_digits = std::max(18, static_cast<int>(std::ceil(neg_log10_delta)) + 12 + n_mag);
        MpEquationEval ev(n, /*exact=*/true, delta, PrecisionContext(eval_digits));

        Real stage_root(yprec);
        if (!have_prev) {
            Bracket br = bracket_jump(ev, seed, spacing, cfg);
            Real a(br.a, yprec), b(br.b, yprec);
            Real tol(std::max(std::pow(10.0, -neg_log10_delta - 2.0), 1e-14), yprec);
            auto f = [&](const Real& y) { return ev.lhs(y); };
            stage_root = brent_root<Real>(f, a, b, Real(br.fa, yprec), Real(br.fb, yprec), tol);
            Real az(yprec);
            ev.lhs(stage_root, &az);
            if (!genuine_zero(az.to_double(), std::max(br.abs_a, br.abs_b)))
                throw BracketError("solve_zero_exact: converged onto an arg branch cut");
        } else {
            // bracket around the previous stage's root; its error is O(delta_prev)
            Real w = Real::pow10(-static_cast<long>(prev_neg_log10), yprec) * 60.0;
            Real a = prev - w, b = prev + w;
            Real fa = ev.lhs(a), fb = ev.lhs(b);
            int widen = 0;
            while ((sgn(fa) >= 0 || sgn(fb) <= 0) && widen < 5) {
                w = w * 8.0;
                a = prev - w;
                b = prev + w;
                fa = ev.lhs(a);
                fb = ev.lhs(b);
                ++widen;
            }
            Real tol = Real::pow10(-static_cast<long>(neg_log10_delta + 2.0), yprec);
            auto f = [&](const Real& y) { return ev.lhs(y); };
            stage_root = brent_root<Real>(f, a, b, fa, fb, tol);
        }

        if (have_prev) {
            Real gap = abs(stage_root - prev);
            if (gap.is_zero()) {
                agreed_decimals = target_decimals + 3;
            } else {
                agreed_decimals = static_cast<int>(
                    -(static_cast<double>(mpfr_get_exp(gap.raw())) * 0.30102999566398) - 1.0);
            }
            if (agreed_decimals >= target_decimals + 1 ||
                neg_log10_delta >= target_decimals + 4.0) {
                root = stage_root;
                final_delta = delta;
                final_ev.emplace(n, true, delta, PrecisionContext(eval_digits));
                converged = true;
                break;
            }
        }
        prev = stage_root;
        have_prev = true;

        ++schedule_pos;
        prev_neg_log10 = neg_log10_delta;
        if (schedule_pos < cfg.delta_schedule.size()) {
            delta = Real(cfg.delta_schedule[schedule_pos], yprec);
            neg_log10_delta = -std::log10(cfg.delta_schedule[schedule_pos]);
        } else {
            delta = delta * 1e-3;  // extend the schedule, never reaching zero
            neg_log10_delta += 3.0;
        }
    }
    if (!converged) throw ConvergenceError("solve_zero_exact: stage budget exhausted");

    // Newton polish so the recorded residual honours its contract; near the
    // jump the slope in counting units is 1/(pi delta).
    int digits_certified = std::min(target, int_digits + std::max(agreed_decimals, 1));
    double residual_goal = 0.2 * std::pow(10.0, -(digits_certified - 2));
    Real pi_delta = final_delta * kPi;
    double residual = 0.0;
    for (int it = 0; it < 10; ++it) {
        Real l = final_ev->lhs(root);
        residual = std::abs(l.to_double()) * kPi;
        if (residual <= residual_goal) break;
        root -= l * pi_delta;
    }

    // misindexing guard: the staircase must step from -1/2 to +1/2 across
    // the solved root
    {
        MpEquationEval guard(n, true, Real(1e-6, 64), PrecisionContext(18 + n_mag));
        double rd = root.to_double();
        bool ok = false;
        for (double frac : {0.02, 0.006, 0.0015}) {
            double eps = frac * spacing;
            EvalPoint lo = guard.point(rd - eps);
            EvalPoint hi = guard.point(rd + eps);
            long off_lo = static_cast<long>(std::nearbyint(lo.lhs - 0.5));
            long off_hi = static_cast<long>(std::nearbyint(hi.lhs - 0.5));
            if (off_lo == -1 && off_hi == 0) {
                ok = true;
                break;
            }
            if (off_lo > -1 || off_hi < 0) break;  // genuinely misindexed
        }
        if (!ok) throw BracketError("solve_zero_exact: index check failed around the solved root");
    }

    ZeroRecord rec;
    rec.n = n;
    rec.y = root;
    rec.digits_certified = digits_certified;
    rec.method = SolveMethod::exact_eq;
    rec.residual = residual;
    return rec;
}

BatchResult solve_zero_batch(long n_lo, long n_hi, const SolverConfig& cfg,
                             const PrecisionContext& ctx, int jobs,
                             const std::vector<long>& skip) {
    (void)ctx;
    if (n_lo < 1 || n_hi < n_lo) throw UsageError("solve_zero_batch: bad index range");
    if (n_hi > cfg.n_cap) throw ResourceError("solve_zero_batch: range exceeds configured cap");
    if (jobs < 1) jobs = 1;

    std::vector<char> skip_flag(static_cast<std::size_t>(n_hi - n_lo + 1), 0);
    for (long s : skip)
        if (s >= n_lo && s <= n_hi) skip_flag[static_cast<std::size_t>(s - n_lo)] = 1;

    double y_top = lambert_seed(n_hi, PrecisionContext(30)).to_double();
    double y_cap = y_top + 8.0 * mean_spacing(y_top) + 16.0;
    FastLineEvaluator engine(cfg.asymptotic_delta, y_cap);
    // fallback engine at a sharper delta for bracket failures
    FastLineEvaluator engine_fine(cfg.asymptotic_delta * 1e-3, y_cap);

    const long count = n_hi - n_lo + 1;
    std::vector<ZeroRecord> records(static_cast<std::size_t>(count));
    std::vector<char> present(static_cast<std::size_t>(count), 0);
    std::vector<BatchFailure> failures;
    std::mutex failures_mu;
    std::atomic<long> next(n_lo);

    auto worker = [&]() {
        PrecisionContext seed_ctx(30);
        for (;;) {
            long n = next.fetch_add(1);
            if (n > n_hi) return;
            if (skip_flag[static_cast<std::size_t>(n - n_lo)]) continue;
            try {
                double seed = lambert_seed(n, seed_ctx).to_double();
                FastSolveOutcome out;
                int decimals = std::min(10, static_cast<int>(-std::log10(cfg.asymptotic_delta)));
                try {
                    out = solve_fast(engine, n, seed, cfg);
                } catch (const BracketError&) {
                    out = solve_fast(engine_fine, n, seed, cfg);
                    decimals = 10;
                }
                ZeroRecord rec;
                rec.n = n;
                rec.y = Real(out.y, bits_for_digits(18));
                rec.digits_certified = integer_digits(out.y) + decimals;
                rec.method = SolveMethod::asymptotic_eq;
                rec.residual = out.residual;
                records[static_cast<std::size_t>(n - n_lo)] = std::move(rec);
                present[static_cast<std::size_t>(n - n_lo)] = 1;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failures_mu);
                failures.push_back({n, e.what()});
            }
        }
    };

    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    BatchResult out;
    double min_res = 1e300, max_res = 0.0;
    for (long i = 0; i < count; ++i) {
        if (!present[static_cast<std::size_t>(i)]) continue;
        const ZeroRecord& r = records[static_cast<std::size_t>(i)];
        min_res = std::min(min_res, r.residual);
        max_res = std::max(max_res, r.residual);
        out.records.push_back(r);
    }
    out.failures = std::move(failures);
    out.min_residual = out.records.empty() ? 0.0 : min_res;
    out.max_residual = max_res;

    // monotone interleaving check across the solved block
    for (std::size_t i = 1; i < out.records.size(); ++i) {
        if (out.records[i - 1].n + 1 == out.records[i].n &&
            !(out.records[i - 1].y < out.records[i].y)) {
            out.failures.push_back(
                {out.records[i].n, "monotonicity violated against previous zero"});
        }
    }
    return out;
}

Real gram_point(long n, const PrecisionContext& ctx) {
    if (n < 0) throw UsageError("gram_point: n must be >= 0");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real pi = Real::pi(prec);
    // seed from the same Lambert inversion, with theta's own counting offset
    Real idx(static_cast<double>(n) + 0.125, prec);
    Real w = lambert_w0(idx / exp(Real(1.0, prec)), ctx);
    double t0 = (2.0 * pi * idx / w).to_double();
    double sp = mean_spacing(std::max(t0, 9.0));

    Real target = Real(n, prec) * pi;
    auto f = [&](const Real& t) { return riemann_siegel_theta(t, ctx) - target; };
    double a = std::max(t0 - 1.2 * sp, 7.0);
    double b = t0 + 1.2 * sp;
    Real fa = f(Real(a, prec));
    Real fb = f(Real(b, prec));
    int widen = 0;
    while (sgn(fa) > 0 || sgn(fb) < 0) {
        if (++widen > 24) throw BracketError("gram_point: failed to bracket");
        if (sgn(fa) > 0) a = std::max(a - 0.8 * sp, 6.3);
        if (sgn(fb) < 0) b += 0.8 * sp;
        fa = f(Real(a, prec));
        fb = f(Real(b, prec));
    }
    Real tol = Real(t0, prec) * Real::pow10(-(ctx.digits + 2), prec);
    return brent_root<Real>(f, Real(a, prec), Real(b, prec), fa, fb, tol);
}

CountResult count_zeros_smooth(const Real& T, CountVariant variant, const PrecisionContext& ctx) {
    if (T.to_double() <= kTwoPi) throw DomainError("count_zeros_smooth: requires T > 2 pi");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real pi = Real::pi(prec);
    Real two_pi_e = 2.0 * pi * exp(Real(1.0, prec));
    Real smooth_asym = T / (2.0 * pi) * log(T / two_pi_e) + 0.875;

    if (variant == CountVariant::riemann_asymptotic) return {smooth_asym, false};

    LineValue lv = arg_zeta_shifted_with_modulus(T, Real(1e-9, prec), ctx);
    bool near_zero = lv.abs_zeta < 1e-6;
    Real s = lv.arg / pi;
    if (variant == CountVariant::critical_line_asymptotic) return {smooth_asym + s, near_zero};
    // backlund_exact and critical_line_exact are the same expression
    Real theta = riemann_siegel_theta(T, ctx);
    return {theta / pi + s + 1.0, near_zero};
}

}  // namespace zetazero
