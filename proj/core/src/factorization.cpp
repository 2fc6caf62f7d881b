#include "pawn/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "pawn/errors.hpp"

namespace pawn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// Brent's variant of Pollard rho; n must be odd, composite, > 3.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 m = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad exponent in factorization '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].prime < 2) throw InvalidArgument("factor below 2");
        if (factors_[i].exponent == 0) throw InvalidArgument("zero exponent");
        if (i > 0 && factors_[i].prime <= factors_[i - 1].prime)
            throw InvalidArgument("primes must be strictly increasing");
    }
}

Factorization Factorization::parse(std::string_view text, const PrimalityPolicy& policy) {
    std::string_view whole = text;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "1") return {};
    if (text.empty()) throw ParseError("empty factorization");

    std::vector<PrimePower> factors;
    while (true) {
        auto star = text.find('*');
        std::string_view term = trim(text.substr(0, star));
        auto caret = term.find('^');
        std::string_view base = trim(term.substr(0, caret));
        unsigned e = 1;
        if (caret != std::string_view::npos) e = parse_unsigned(trim(term.substr(caret + 1)), whole);
        if (base.empty() || !std::all_of(base.begin(), base.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad prime in factorization '" + std::string(whole) + "'");
        mpz_class p(std::string(base), 10);
        if (e == 0) throw ParseError("zero exponent in '" + std::string(whole) + "'");
        if (!is_prime(p, policy))
            throw ParseError(p.get_str() + " is not prime in '" + std::string(whole) + "'");
        if (!factors.empty() && p <= factors.back().prime)
            throw ParseError("primes must be strictly increasing in '" + std::string(whole) + "'");
        factors.push_back({std::move(p), e});
        if (star == std::string_view::npos) break;
        text = text.substr(star + 1);
    }
    return Factorization(std::move(factors));
}

Factorization Factorization::of(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    std::vector<u64> primes;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    split(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> factors;
    for (u64 p : primes) {
        if (!factors.empty() && factors.back().prime == static_cast<unsigned long>(p))
            ++factors.back().exponent;
        else
            factors.push_back({mpz_class(static_cast<unsigned long>(p)), 1});
    }
    return Factorization(std::move(factors));
}

Factorization Factorization::of(const mpz_class& n) {
    if (sgn(n) <= 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw InvalidArgument("integer factoring only supports 1 <= n < 2^64");
    return of(static_cast<std::uint64_t>(n.get_ui()));
}

unsigned Factorization::big_omega() const {
    unsigned s = 0;
    for (const auto& pp : factors_) s += pp.exponent;
    return s;
}

bool Factorization::is_square_free() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool Factorization::is_odd() const { return factors_.empty() || factors_.front().prime != 2; }

const PrimePower& Factorization::largest() const {
    if (factors_.empty()) throw InvalidArgument("1 has no prime factors");
    return factors_.back();
}

unsigned Factorization::exponent_of(const mpz_class& p) const {
    for (const auto& pp : factors_) {
        if (pp.prime == p) return pp.exponent;
        if (pp.prime > p) break;
    }
    return 0;
}

mpz_class Factorization::value() const {
    mpz_class v = 1, t;
    for (const auto& pp : factors_) {
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= t;
    }
    return v;
}

std::size_t Factorization::digits() const { return value().get_str().size(); }

Factorization Factorization::times(const mpz_class& p, unsigned e) const {
    Factorization r = *this;
    if (e == 0) return r;
    auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), p,
                               [](const PrimePower& pp, const mpz_class& q) { return pp.prime < q; });
    if (it != r.factors_.end() && it->prime == p)
        it->exponent += e;
    else
        r.factors_.insert(it, PrimePower{p, e});
    return r;
}

Factorization Factorization::times(const Factorization& other) const {
    Factorization r = *this;
    for (const auto& pp : other.factors_) r = r.times(pp.prime, pp.exponent);
    return r;
}

Factorization Factorization::divided_by(const mpz_class& p) const {
    Factorization r = *this;
    for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
        if (it->prime == p) {
            if (--it->exponent == 0) r.factors_.erase(it);
            return r;
        }
    }
    throw NotADivisor(p.get_str() + " does not divide " + to_string());
}

std::string Factorization::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& pp : factors_) {
        if (!s.empty()) s += '*';
        s += pp.prime.get_str();
        if (pp.exponent != 1) {
            s += '^';
            s += std::to_string(pp.exponent);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Factorization& f) { return os << f.to_string(); }

}  // namespace pawn
