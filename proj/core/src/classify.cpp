#include "pawn/classify.hpp"

#include "pawn/arith.hpp"
#include "pawn/errors.hpp"

namespace pawn {

namespace {

NumberClass class_of_deficiency(const mpz_class& d) {
    const int s = sgn(d);
    return s > 0 ? NumberClass::Deficient : (s == 0 ? NumberClass::Perfect : NumberClass::Abundant);
}

void require_deficient(const NumberState& m, const char* op) {
    if (!m.is_deficient())
        throw NotDeficient(std::string(op) + ": " + m.factorization().to_string() + " is not deficient");
}

mpz_class pow_ui(const mpz_class& p, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

}  // namespace

std::string_view to_string(NumberClass c) {
    switch (c) {
        case NumberClass::Deficient: return "deficient";
        case NumberClass::Perfect: return "perfect";
        case NumberClass::Abundant: return "abundant";
    }
    return "?";
}

NumberState::NumberState() : value_(1), sigma_(1), deficiency_(1) {}

NumberState::NumberState(Factorization f) : factors_(std::move(f)) {
    value_ = factors_.value();
    sigma_ = 1;
    factor_sigmas_.reserve(factors_.omega());
    for (const auto& pp : factors_.factors()) {
        factor_sigmas_.push_back(sigma_prime_power(pp.prime, pp.exponent));
        sigma_ *= factor_sigmas_.back();
    }
    deficiency_ = 2 * value_ - sigma_;
}

NumberClass NumberState::number_class() const { return class_of_deficiency(deficiency_); }

mpz_class NumberState::largest_prime() const { return factors_.is_one() ? mpz_class(1) : factors_.largest().prime; }

unsigned NumberState::largest_exponent() const { return factors_.is_one() ? 0 : factors_.largest().exponent; }

ExactRatio NumberState::center() const {
    require_deficient(*this, "center");
    return make_ratio(sigma_, deficiency_);
}

NumberState NumberState::times(const mpz_class& p) const {
    if (!factors_.is_one() && p < factors_.largest().prime)
        throw InvalidArgument("NumberState::times expects primes in nondecreasing order");
    NumberState r;
    r.factors_ = factors_.times(p);
    r.value_ = value_ * p;
    r.factor_sigmas_ = factor_sigmas_;
    if (!factors_.is_one() && factors_.largest().prime == p) {
        // sigma(p^(a+1)) = p sigma(p^a) + 1
        mpz_class& last = r.factor_sigmas_.back();
        mpz_class next = p * last + 1;
        r.sigma_ = sigma_;
        mpz_divexact(r.sigma_.get_mpz_t(), r.sigma_.get_mpz_t(), last.get_mpz_t());
        r.sigma_ *= next;
        last = std::move(next);
    } else {
        r.factor_sigmas_.push_back(p + 1);
        r.sigma_ = sigma_ * (p + 1);
    }
    r.deficiency_ = 2 * r.value_ - r.sigma_;
    return r;
}

std::optional<CenterBound> NumberState::primitivity_bound(const mpz_class* exclude) const {
    const auto& fs = factors_.factors();
    std::size_t best = fs.size();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (exclude && fs[i].prime == *exclude) continue;
        if (best == fs.size() || factor_sigmas_[i] > factor_sigmas_[best]) best = i;
    }
    if (best == fs.size()) return std::nullopt;
    mpz_class s = sigma_;
    mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), factor_sigmas_[best].get_mpz_t());
    return CenterBound{sigma_ - s, deficiency_ + s};
}

NumberClass classify(const Factorization& f) { return class_of_deficiency(deficiency(f)); }

NumberClass classify_coprime_extension(const Factorization& m, const mpz_class& p, unsigned e) {
    return extend_primitive_coprime(m, p, e).cls;
}

NumberClass classify_same_prime_extension(const Factorization& m, const mpz_class& p) {
    return extend_primitive_same(m, p).cls;
}

ExactRatio primitivity_lower_bound(const Factorization& m) {
    NumberState s(m);
    require_deficient(s, "primitivity_lower_bound");
    auto b = s.primitivity_bound();
    return b ? b->ratio() : ExactRatio(0);
}

ExtensionVerdict extend_primitive_coprime(const Factorization& m, const mpz_class& p, unsigned e) {
    return extend_primitive_coprime(NumberState(m), p, e);
}

ExtensionVerdict extend_primitive_coprime(const NumberState& m, const mpz_class& p, unsigned e) {
    if (e == 0) throw InvalidArgument("exponent must be at least 1");
    if (m.factorization().exponent_of(p) != 0)
        throw NotCoprime(p.get_str() + " divides " + m.factorization().to_string());
    require_deficient(m, "extend_primitive_coprime");

    // p^e / sigma(p^(e-1)) against c(m) = sigma(m)/d(m).
    const mpz_class top = pow_ui(p, e);
    const mpz_class bottom = sigma_prime_power(p, e - 1);
    ExtensionVerdict v;
    v.cls = class_of_deficiency(mpz_class(m.deficiency() * top - m.sigma() * bottom));
    if (v.cls == NumberClass::Deficient) return v;

    bool primitive = true;
    if (auto lb = m.primitivity_bound()) primitive = lb->below(top, bottom);
    if (primitive && e > 1) {
        // m p^(e-1) must stay deficient.
        const mpz_class t = pow_ui(p, e - 1);
        const mpz_class b = sigma_prime_power(p, e - 2);
        primitive = t * m.deficiency() > b * m.sigma();
    }
    v.primitive = primitive;
    return v;
}

ExtensionVerdict extend_primitive_same(const Factorization& m, const mpz_class& p) {
    return extend_primitive_same(NumberState(m), p);
}

ExtensionVerdict extend_primitive_same(const NumberState& m, const mpz_class& p) {
    const unsigned a = m.factorization().exponent_of(p);
    if (a == 0) throw NotADivisor(p.get_str() + " does not divide " + m.factorization().to_string());
    require_deficient(m, "extend_primitive_same");

    const mpz_class x = p * sigma_prime_power(p, a);
    ExtensionVerdict v;
    v.cls = class_of_deficiency(mpz_class(x * m.deficiency() - m.sigma()));
    if (v.cls == NumberClass::Deficient) return v;
    auto lb = m.primitivity_bound(&p);
    v.primitive = !lb || lb->below(x);
    return v;
}

bool is_primitive_nondeficient_oracle(const Factorization& f) {
    if (classify(f) == NumberClass::Deficient)
        throw NotAbundantOrPerfect(f.to_string() + " is deficient");
    for (const auto& pp : f.factors())
        if (classify(f.divided_by(pp.prime)) != NumberClass::Deficient) return false;
    return true;
}

}  // namespace pawn
