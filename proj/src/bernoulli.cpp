#include "zetazero/bernoulli.hpp"

#include <gmpxx.h>

#include <mutex>
#include <vector>

namespace zetazero {

namespace {

// Exact rationals B_0, B_1, B_2, ... via the defining recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0  (m >= 1),  B_0 = 1.
// The cache only grows; readers copy the value out under the lock.
class BernoulliCache {
  public:
    mpq_class get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return table_[static_cast<std::size_t>(n)];
    }

  private:
    void grow(int n) {
        if (table_.empty()) {
            table_.emplace_back(1);           // B_0
            table_.emplace_back(-1, 2);       // B_1
        }
        mpz_class binom;
        while (static_cast<int>(table_.size()) <= n) {
            const unsigned long m = table_.size();  // computing B_m
            if (m % 2 == 1) {
                table_.emplace_back(0);
                continue;
            }
            mpq_class acc(0);
            for (unsigned long j = 0; j < m; ++j) {
                mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
                acc += mpq_class(binom) * table_[j];
            }
            acc /= mpq_class(m + 1);
            table_.push_back(-acc);
        }
    }

    std::mutex mu_;
    std::vector<mpq_class> table_;
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

Real from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

}  // namespace

Real bernoulli_number(int j, mpfr_prec_t prec) { return from_mpq(cache().get(2 * j), prec); }

Real bernoulli_over_factorial(int j, mpfr_prec_t prec) {
    Real r = from_mpq(cache().get(2 * j), prec);
    Real fact(prec);
    mpfr_fac_ui(fact.raw(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
    return r / fact;
}

Real bernoulli_stirling_coeff(int j, mpfr_prec_t prec) {
    Real r = from_mpq(cache().get(2 * j), prec);
    return r / Real(static_cast<long>(2 * j) * (2L * j - 1L), prec);
}

}  // namespace zetazero
