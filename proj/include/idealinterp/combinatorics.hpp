#pragma once

#include <gmpxx.h>

namespace idealinterp {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

/// sum_{r=0}^{m} (-1)^{m-r} C(m, r) r^n, the m-th forward difference of
/// t^n at t = 0. Equals m! when n = m and 0 when n < m.
mpz_class alternating_power_sum(unsigned n, unsigned m);

}  // namespace idealinterp
