#include "idealinterp/combinatorics.hpp"

namespace idealinterp {

mpz_class factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class alternating_power_sum(unsigned n, unsigned m) {
    mpz_class sum = 0;
    for (unsigned r = 0; r <= m; ++r) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), r, n);
        term *= binomial(m, r);
        if ((m - r) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

}  // namespace idealinterp
