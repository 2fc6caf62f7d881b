#include "pawn/index_sequence.hpp"

#include <cctype>
#include <charconv>

#include "pawn/classify.hpp"
#include "pawn/errors.hpp"

namespace pawn {

namespace {

// Past this many primes between center and factor, counting switches
// from stepping to the sieve (when under its ceiling).
constexpr unsigned long kSteppingGap = 1ul << 22;

std::int64_t rank_above(const ExactRatio& c, const mpz_class& p, const PrimalityPolicy& policy) {
    if (p - floor_of(c) > kSteppingGap && p <= static_cast<unsigned long>(kDefaultSieveCeiling))
        return static_cast<std::int64_t>(count_primes_in_open_interval(c, ExactRatio(p)) + 1);
    std::int64_t r = 0;
    mpz_class q = floor_of(c);
    do {
        q = next_prime(q, policy);
        ++r;
    } while (q < p);
    if (q != p) throw InvalidArgument(p.get_str() + " is not prime");
    return r;
}

std::int64_t rank_below(const ExactRatio& c, const mpz_class& p, const PrimalityPolicy& policy) {
    if (ceil_of(c) - p > kSteppingGap && ceil_of(c) <= static_cast<unsigned long>(kDefaultSieveCeiling))
        return static_cast<std::int64_t>(count_primes_in_open_interval(ExactRatio(p), c) + 1);
    std::int64_t r = 0;
    mpz_class q = ceil_of(c);
    do {
        q = prev_prime(q, policy);
        ++r;
    } while (q > p);
    if (q != p) throw InvalidArgument(p.get_str() + " is not prime");
    return r;
}

}  // namespace

std::string IndexSequence::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(entries[i].index);
        if (entries[i].exponent != 1) {
            s += '^';
            s += std::to_string(entries[i].exponent);
        }
    }
    return s + "]";
}

IndexSequence IndexSequence::parse(std::string_view text) {
    const std::string whole(text);
    auto fail = [&] { return ParseError("malformed index sequence '" + whole + "'"); };
    auto skip_ws = [&] {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    };
    auto read_int = [&](auto& out) {
        skip_ws();
        const char* b = text.data();
        const char* e = b + text.size();
        if (b != e && *b == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, e, out);
        if (ec != std::errc{}) throw fail();
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    };

    skip_ws();
    if (text.empty() || text.front() != '[') throw fail();
    text.remove_prefix(1);
    IndexSequence s;
    skip_ws();
    if (!text.empty() && text.front() == ']') {
        text.remove_prefix(1);
    } else {
        while (true) {
            IndexEntry entry;
            read_int(entry.index);
            skip_ws();
            if (!text.empty() && text.front() == '^') {
                text.remove_prefix(1);
                read_int(entry.exponent);
                if (entry.exponent == 0) throw fail();
            }
            s.entries.push_back(entry);
            skip_ws();
            if (text.empty()) throw fail();
            if (text.front() == ']') {
                text.remove_prefix(1);
                break;
            }
            if (text.front() != ',') throw fail();
            text.remove_prefix(1);
        }
    }
    skip_ws();
    if (!text.empty()) throw fail();
    return s;
}

IndexSequence encode_index_sequence(const Factorization& f, const PrimalityPolicy& policy) {
    IndexSequence s;
    NumberState w;
    for (const auto& pp : f.factors()) {
        if (!w.is_deficient())
            throw PrefixNotDeficient("prefix " + w.factorization().to_string() + " of " + f.to_string() +
                                     " is not deficient");
        const ExactRatio c = w.center();
        const int cmp = w.compare_to_center(pp.prime);
        std::int64_t index = 0;
        if (cmp > 0)
            index = rank_above(c, pp.prime, policy);
        else if (cmp < 0)
            index = -rank_below(c, pp.prime, policy);
        s.entries.push_back({index, pp.exponent});
        for (unsigned e = 0; e < pp.exponent; ++e) w = w.times(pp.prime);
    }
    return s;
}

Factorization decode_index_sequence(const IndexSequence& s, const PrimalityPolicy& policy) {
    NumberState w;
    for (const auto& entry : s.entries) {
        if (entry.exponent == 0) throw InvalidSequence("zero exponent in " + s.to_string());
        if (!w.is_deficient())
            throw InvalidSequence("prefix " + w.factorization().to_string() + " of " + s.to_string() +
                                  " is not deficient");
        const ExactRatio c = w.center();
        mpz_class p;
        if (entry.index > 0) {
            p = kth_prime_above(c, static_cast<unsigned>(entry.index), policy);
        } else if (entry.index < 0) {
            try {
                p = kth_prime_below(c, static_cast<unsigned>(-entry.index), policy);
            } catch (const NoSuchPrime&) {
                throw InvalidSequence("not enough primes below " + to_string(c) + " in " + s.to_string());
            }
        } else {
            auto at = prime_at_or_zero(c, policy);
            if (!at) throw InvalidSequence("index 0 at non-prime center " + to_string(c) + " in " + s.to_string());
            p = *at;
        }
        if (!w.is_one() && p <= w.largest_prime())
            throw InvalidSequence("primes do not increase in " + s.to_string());
        for (unsigned e = 0; e < entry.exponent; ++e) w = w.times(p);
    }
    return w.factorization();
}

}  // namespace pawn
