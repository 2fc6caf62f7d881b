#include "pawn/arith.hpp"

#include "pawn/errors.hpp"

namespace pawn {

mpz_class sigma_prime_power(const mpz_class& p, unsigned e) {
    // (p^(e+1) - 1) / (p - 1), exact.
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e + 1);
    t -= 1;
    mpz_class den = p - 1;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    return t;
}

mpz_class sigma(const Factorization& f) {
    mpz_class s = 1;
    for (const auto& pp : f.factors()) s *= sigma_prime_power(pp.prime, pp.exponent);
    return s;
}

mpz_class abundance(const Factorization& f) { return sigma(f) - 2 * f.value(); }

mpz_class deficiency(const Factorization& f) { return 2 * f.value() - sigma(f); }

ExactRatio abundancy(const Factorization& f) { return make_ratio(sigma(f), f.value()); }

ExactRatio center(const Factorization& m) {
    mpz_class s = sigma(m);
    mpz_class d = 2 * m.value() - s;
    if (sgn(d) <= 0) throw NotDeficient("center: " + m.to_string() + " is not deficient");
    return make_ratio(s, d);
}

mpz_class deficiency_after_coprime_extension(const Factorization& m, const mpz_class& p,
                                             unsigned e) {
    if (m.exponent_of(p) != 0)
        throw NotCoprime(p.get_str() + " divides " + m.to_string());
    mpz_class s = sigma(m);
    mpz_class d = 2 * m.value() - s;
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    return d * pe - s * sigma_prime_power(p, e - 1);
}

mpz_class deficiency_after_same_prime_extension(const Factorization& m, const mpz_class& p) {
    unsigned a = m.exponent_of(p);
    if (a == 0) throw NotADivisor(p.get_str() + " does not divide " + m.to_string());
    mpz_class s = sigma(m);
    mpz_class d = 2 * m.value() - s;
    mpz_class q = s;
    mpz_class sp = sigma_prime_power(p, a);
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), sp.get_mpz_t());
    return d * p - q;
}

}  // namespace pawn
