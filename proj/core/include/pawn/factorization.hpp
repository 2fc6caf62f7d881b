#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/primes.hpp"

namespace pawn {

struct PrimePower {
    mpz_class prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.exponent == b.exponent && a.prime == b.prime;
    }
};

/// A positive integer kept as its prime factorization with strictly
/// increasing primes. The empty list is 1. The integer value is never
/// stored; value() rebuilds it.
class Factorization {
public:
    Factorization() = default;

    /// Takes ownership of `factors`; throws InvalidArgument unless primes
    /// are >= 2 and strictly increasing and exponents are >= 1. Primality
    /// is not rechecked here.
    explicit Factorization(std::vector<PrimePower> factors);

    /// Parses `p1^e1*p2^e2*...` ("1" for the empty product) and checks
    /// every prime under `policy`.
    static Factorization parse(std::string_view text, const PrimalityPolicy& policy = {});

    /// Trial division plus Pollard rho.
    static Factorization of(std::uint64_t n);

    /// Same, for values that fit in 64 bits; InvalidArgument otherwise.
    static Factorization of(const mpz_class& n);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::size_t omega() const { return factors_.size(); }
    unsigned big_omega() const;
    bool is_square_free() const;
    bool is_odd() const;

    const PrimePower& largest() const;

    /// Exponent of p in this number (0 if p does not divide it).
    unsigned exponent_of(const mpz_class& p) const;

    mpz_class value() const;
    std::size_t digits() const;

    /// this * p^e. p may equal the largest prime (exponent grows) or be
    /// any prime not yet present.
    Factorization times(const mpz_class& p, unsigned e = 1) const;

    Factorization times(const Factorization& other) const;

    /// this / p; NotADivisor if p does not divide this number.
    Factorization divided_by(const mpz_class& p) const;

    /// Canonical text form, e.g. "2^2*13*17*443".
    std::string to_string() const;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<PrimePower> factors_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& f);

}  // namespace pawn
