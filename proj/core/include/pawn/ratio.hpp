#pragma once

#include <gmpxx.h>

#include <string>

namespace pawn {

/// Exact rational in lowest terms with a positive denominator.
using ExactRatio = mpq_class;

inline ExactRatio make_ratio(const mpz_class& num, const mpz_class& den) {
    ExactRatio r(num, den);
    r.canonicalize();
    return r;
}

inline mpz_class floor_of(const ExactRatio& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline mpz_class ceil_of(const ExactRatio& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline bool is_integral(const ExactRatio& x) { return x.get_den() == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const ExactRatio& x) { return x.get_str(); }

}  // namespace pawn
