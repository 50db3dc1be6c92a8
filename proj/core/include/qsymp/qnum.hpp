#pragma once

#include <cstdint>

#include "qsymp/ratq.hpp"

namespace qsymp {

/// lambda = q - q^{-1}
const RatQ& q_lambda();

/// q-integer [m]_q = (q^m - q^{-m})/(q - q^{-1}); [0]_q = 0, [-m]_q = -[m]_q.
RatQ qint(std::int64_t m);

/// q-factorial [m]_q! = [1]_q [2]_q ... [m]_q with [0]_q! = 1; m must be >= 0.
RatQ qfact(std::int64_t m);

/// q-binomial coefficient, defined for all integers m and k >= 0 by
/// [m]_q [m-1]_q ... [m-k+1]_q / [k]_q!; equals 0 when k > m >= 0.
RatQ qbinom(std::int64_t m, std::int64_t k);

/// Same q-combinatorics with q replaced by q^s (s >= 1), e.g. [m]_{q^2}.
RatQ qint_base(std::int64_t m, int s);
RatQ qbinom_base(std::int64_t m, std::int64_t k, int s);

}  // namespace qsymp
