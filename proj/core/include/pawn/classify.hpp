#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

#include "pawn/factorization.hpp"
#include "pawn/ratio.hpp"

namespace pawn {

enum class NumberClass { Deficient, Perfect, Abundant };

std::string_view to_string(NumberClass c);

struct ExtensionVerdict {
    NumberClass cls = NumberClass::Deficient;
    /// Meaningful only when cls is Abundant or Perfect.
    bool primitive = false;

    friend bool operator==(const ExtensionVerdict&, const ExtensionVerdict&) = default;
};

/// c(m/q) = num/den for a chosen prime q of m, in the integer form
/// (sigma - s) / (d + s) with s = sigma(m)/sigma(q^a).
struct CenterBound {
    mpz_class num;
    mpz_class den;

    /// x > num/den.
    bool below(const mpz_class& x) const { return x * den > num; }
    /// x/y > num/den (y > 0).
    bool below(const mpz_class& x, const mpz_class& y) const { return x * den > num * y; }
    ExactRatio ratio() const { return make_ratio(num, den); }
};

/// A number with the quantities every predicate reads, carried through
/// the search tree and updated incrementally as primes are appended.
class NumberState {
public:
    NumberState();  // the number 1
    explicit NumberState(Factorization f);

    const Factorization& factorization() const { return factors_; }
    const mpz_class& value() const { return value_; }
    const mpz_class& sigma() const { return sigma_; }
    /// 2m - sigma(m); may be zero or negative.
    const mpz_class& deficiency() const { return deficiency_; }
    /// sigma(q^a) for each q^a || m, aligned with factorization().factors().
    const std::vector<mpz_class>& factor_sigmas() const { return factor_sigmas_; }

    NumberClass number_class() const;
    bool is_deficient() const { return sgn(deficiency_) > 0; }
    bool is_one() const { return factors_.is_one(); }

    /// Largest prime of m, or 1 for m = 1.
    mpz_class largest_prime() const;
    unsigned largest_exponent() const;

    /// sigma(m) / d(m). NotDeficient unless deficient.
    ExactRatio center() const;

    /// Sign of x - c(m), i.e. of x d(m) - sigma(m). Requires m deficient.
    int compare_to_center(const mpz_class& x) const {
        return sgn(mpz_class(x * deficiency_ - sigma_));
    }

    /// m p for p >= largest prime.
    NumberState times(const mpz_class& p) const;

    /// max over q | m, q != exclude, of c(m/q), evaluated at the q with
    /// the largest sigma(q^a). Empty when no such q exists.
    std::optional<CenterBound> primitivity_bound(const mpz_class* exclude = nullptr) const;

private:
    Factorization factors_;
    mpz_class value_;
    mpz_class sigma_;
    mpz_class deficiency_;
    std::vector<mpz_class> factor_sigmas_;
};

NumberClass classify(const Factorization& f);

/// Class of m p^e for deficient m, p coprime to m, by comparing
/// p^e d(m) against sigma(m) sigma(p^(e-1)).
NumberClass classify_coprime_extension(const Factorization& m, const mpz_class& p, unsigned e);

/// Class of m p for deficient m with p^a || m, by comparing
/// p sigma(p^a) d(m) against sigma(m).
NumberClass classify_same_prime_extension(const Factorization& m, const mpz_class& p);

/// max_{q | m} c(m/q) for deficient m > 1; 0 for m = 1.
ExactRatio primitivity_lower_bound(const Factorization& m);

/// Whether m p^e is primitive non-deficient, p coprime to m.
ExtensionVerdict extend_primitive_coprime(const Factorization& m, const mpz_class& p, unsigned e);
ExtensionVerdict extend_primitive_coprime(const NumberState& m, const mpz_class& p, unsigned e);

/// Whether m p is primitive non-deficient, p | m.
ExtensionVerdict extend_primitive_same(const Factorization& m, const mpz_class& p);
ExtensionVerdict extend_primitive_same(const NumberState& m, const mpz_class& p);

/// Reference check: f non-deficient and f/p deficient for every prime p | f.
/// NotAbundantOrPerfect if f is deficient.
bool is_primitive_nondeficient_oracle(const Factorization& f);

}  // namespace pawn
