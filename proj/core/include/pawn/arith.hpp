#pragma once

#include <gmpxx.h>

#include "pawn/factorization.hpp"
#include "pawn/ratio.hpp"

namespace pawn {

/// sigma(p^e) = 1 + p + ... + p^e.
mpz_class sigma_prime_power(const mpz_class& p, unsigned e);

/// Sum of divisors, product of sigma(p^e) over the factors.
mpz_class sigma(const Factorization& f);

/// sigma(n) - 2n. Positive for abundant numbers.
mpz_class abundance(const Factorization& f);

/// 2n - sigma(n), the negated abundance.
mpz_class deficiency(const Factorization& f);

/// sigma(n) / n.
ExactRatio abundancy(const Factorization& f);

/// sigma(m) / d(m) for deficient m; NotDeficient otherwise.
ExactRatio center(const Factorization& m);

/// d(m p^e) for p not dividing m, as d(m) p^e - sigma(m) sigma(p^(e-1)).
/// NotCoprime if p divides m.
mpz_class deficiency_after_coprime_extension(const Factorization& m, const mpz_class& p,
                                             unsigned e);

/// d(m p) for p dividing m with p^a || m, as d(m) p - sigma(m)/sigma(p^a).
/// NotADivisor if p does not divide m.
mpz_class deficiency_after_same_prime_extension(const Factorization& m, const mpz_class& p);

}  // namespace pawn
