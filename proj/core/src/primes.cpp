#include "pawn/primes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "pawn/errors.hpp"

namespace pawn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<unsigned, 15> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % m);
        b = static_cast<u64>(static_cast<u128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(u64 n, u64 a, u64 d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = static_cast<u64>(static_cast<u128>(x) * x % n);
        if (x == n - 1) return true;
    }
    return false;
}

bool fits_u64(const mpz_class& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const mpz_class& n) { return static_cast<u64>(mpz_get_ui(n.get_mpz_t())); }

// GMP 6.2 runs Baillie-PSW for the first 24 repetitions and plain
// Miller-Rabin with random bases for the rest.
constexpr int kBpswReps = 24;

bool probable_prime(const mpz_class& n, unsigned rounds) {
    return mpz_probab_prime_p(n.get_mpz_t(), kBpswReps + static_cast<int>(rounds)) != 0;
}

std::vector<std::uint32_t> base_primes(u64 limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Sieves odd numbers in [lo, hi] (lo odd) into `odd`, where odd[i]
// stands for lo + 2i. Entries are 1 for primes.
void sieve_odd_segment(u64 lo, u64 hi, const std::vector<std::uint32_t>& primes, std::vector<char>& odd) {
    const u64 n = (hi - lo) / 2 + 1;
    odd.assign(n, 1);
    for (std::uint32_t p : primes) {
        if (p == 2) continue;
        const u64 pp = static_cast<u64>(p) * p;
        if (pp > hi) break;
        u64 start = std::max(pp, (lo + p - 1) / p * p);
        if ((start & 1) == 0) start += p;
        for (u64 j = (start - lo) / 2; j < n; j += p) odd[j] = 0;
    }
    if (lo == 1) odd[0] = 0;
}

template <class F>
void for_each_segment(u64 lo, u64 hi, F&& f) {
    if (hi < lo) return;
    const auto primes = base_primes(isqrt(hi) + 1);
    constexpr u64 kSegment = u64{1} << 21;
    std::vector<char> odd;
    u64 start = lo | 1;
    while (start <= hi) {
        u64 end = std::min(hi, start + 2 * kSegment - 2);
        if ((end & 1) == 0) --end;
        if (end < start) break;
        sieve_odd_segment(start, end, primes, odd);
        f(start, odd);
        if (end >= hi - 1) break;
        start = end + 2;
    }
}

u64 sieve_count(u64 lo, u64 hi) {
    if (hi < lo) return 0;
    u64 count = (lo <= 2 && 2 <= hi) ? 1 : 0;
    for_each_segment(std::max<u64>(lo, 3), hi, [&](u64, const std::vector<char>& odd) {
        count += static_cast<u64>(std::count(odd.begin(), odd.end(), 1));
    });
    return count;
}

}  // namespace

void PrimalityPolicy::validate() const {
    if (deterministic_limit < kMinDeterministicLimit)
        throw InvalidArgument("deterministic limit must be at least 2^32");
    if (probabilistic_rounds < 1) throw InvalidArgument("probabilistic rounds must be at least 1");
}

PrimalityPolicy PrimalityPolicy::from_environment() {
    PrimalityPolicy p;
    if (const char* v = std::getenv("PAWN_DET_LIMIT")) p.deterministic_limit = std::stoull(v);
    if (const char* v = std::getenv("PAWN_MR_ROUNDS")) p.probabilistic_rounds = static_cast<unsigned>(std::stoul(v));
    p.validate();
    return p;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 47 * 47) return true;
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    if (n < (u64{1} << 32)) {
        for (u64 a : {2, 7, 61})
            if (!strong_probable_prime(n, a, d, s)) return false;
        return true;
    }
    // Deterministic for all n < 2^64.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL})
        if (!strong_probable_prime(n, a, d, s)) return false;
    return true;
}

bool is_prime(const mpz_class& n, const PrimalityPolicy& policy) {
    if (n < 2) return false;
    if (fits_u64(n)) {
        const u64 v = to_u64(n);
        if (v <= policy.deterministic_limit) return is_prime_u64(v);
    }
    return probable_prime(n, policy.probabilistic_rounds);
}

PrimeVerdict certify_prime(const mpz_class& n) {
    if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? PrimeVerdict::Prime : PrimeVerdict::Composite;
    switch (mpz_probab_prime_p(n.get_mpz_t(), kBpswReps + 25)) {
        case 0: return PrimeVerdict::Composite;
        case 2: return PrimeVerdict::Prime;
        default: return PrimeVerdict::ProbablePrime;
    }
}

mpz_class next_prime(const mpz_class& n, const PrimalityPolicy& policy) {
    if (n < 2) return 2;
    mpz_class c = n + 1;
    if (c == 2) return c;
    if (mpz_even_p(c.get_mpz_t())) c += 1;
    if (fits_u64(c)) {
        // Odd candidates on machine words while the exact test applies.
        u64 v = to_u64(c);
        while (v <= policy.deterministic_limit && v < UINT64_MAX - 1) {
            if (is_prime_u64(v)) return mpz_class(static_cast<unsigned long>(v));
            v += 2;
        }
        c = static_cast<unsigned long>(v);
    }
    while (!is_prime(c, policy)) c += 2;
    return c;
}

mpz_class prev_prime(const mpz_class& n, const PrimalityPolicy& policy) {
    if (n <= 2) throw NoSuchPrime("no prime below " + n.get_str());
    if (n == 3) return 2;
    mpz_class c = n - 1;
    if (mpz_even_p(c.get_mpz_t())) c -= 1;
    while (c >= 3) {
        if (is_prime(c, policy)) return c;
        c -= 2;
    }
    return 2;
}

mpz_class kth_prime_above(const ExactRatio& x, unsigned k, const PrimalityPolicy& policy) {
    if (k == 0) throw InvalidArgument("prime rank must be at least 1");
    mpz_class p = floor_of(x);
    for (unsigned i = 0; i < k; ++i) p = next_prime(p, policy);
    return p;
}

mpz_class kth_prime_below(const ExactRatio& x, unsigned k, const PrimalityPolicy& policy) {
    if (k == 0) throw InvalidArgument("prime rank must be at least 1");
    mpz_class p = ceil_of(x);
    for (unsigned i = 0; i < k; ++i) {
        if (p <= 2)
            throw NoSuchPrime("fewer than " + std::to_string(k) + " primes below " + to_string(x));
        p = prev_prime(p, policy);
    }
    return p;
}

std::optional<mpz_class> prime_at_or_zero(const ExactRatio& x, const PrimalityPolicy& policy) {
    if (!is_integral(x)) return std::nullopt;
    mpz_class v = x.get_num();
    if (!is_prime(v, policy)) return std::nullopt;
    return v;
}

std::uint64_t count_primes_in_open_interval(const ExactRatio& a, const ExactRatio& b, std::uint64_t ceiling) {
    if (b > mpz_class(static_cast<unsigned long>(ceiling)))
        throw CeilingExceeded("prime count bound " + to_string(b) + " above sieve ceiling");
    mpz_class lo = floor_of(a) + 1;
    mpz_class hi = ceil_of(b) - 1;
    if (lo < 2) lo = 2;
    if (hi < lo) return 0;
    return sieve_count(to_u64(lo), to_u64(hi));
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < lo) return out;
    if (lo <= 2 && 2 <= hi) out.push_back(2);
    for_each_segment(std::max<u64>(lo, 3), hi, [&](u64 start, const std::vector<char>& odd) {
        for (std::size_t i = 0; i < odd.size(); ++i)
            if (odd[i]) out.push_back(start + 2 * i);
    });
    return out;
}

// Bit i of `bits` marks 2i+1 prime. `block_prefix[j]` counts set bits in
// words [0, 8j).
struct PrimeCounter::Table {
    static constexpr u64 kWordsPerBlock = 8;
    std::vector<u64> bits;
    std::vector<u64> block_prefix{0};
    u64 covered = 0;  // every odd number < covered is represented
    std::vector<std::uint32_t> base;
};

PrimeCounter::PrimeCounter(std::uint64_t ceiling, std::uint64_t dense_limit)
    : ceiling_(ceiling), dense_limit_(std::min(dense_limit, ceiling)), table_(std::make_unique<Table>()) {
    table_->base = base_primes(isqrt(dense_limit_) + 2);
}

PrimeCounter::~PrimeCounter() = default;

void PrimeCounter::ensure(std::uint64_t x) {
    Table& t = *table_;
    if (x < t.covered) return;
    // Grow in chunks of 2^24 numbers (one byte-sieve segment each).
    constexpr u64 kChunk = u64{1} << 24;
    const u64 target = std::min<u64>((x / kChunk + 1) * kChunk, (dense_limit_ / kChunk + 1) * kChunk);
    std::vector<char> odd;
    while (t.covered < target) {
        const u64 lo = t.covered + 1;  // odd
        const u64 hi = t.covered + kChunk - 1;
        sieve_odd_segment(lo, hi, t.base, odd);
        // kChunk/2 odd numbers -> kChunk/128 words.
        const std::size_t first = t.bits.size();
        t.bits.resize(first + kChunk / 128, 0);
        for (std::size_t i = 0; i < odd.size(); ++i)
            if (odd[i]) t.bits[first + i / 64] |= u64{1} << (i % 64);
        for (std::size_t w = first; w < t.bits.size(); w += Table::kWordsPerBlock) {
            u64 c = 0;
            for (std::size_t k = 0; k < Table::kWordsPerBlock; ++k) c += std::popcount(t.bits[w + k]);
            t.block_prefix.push_back(t.block_prefix.back() + c);
        }
        t.covered += kChunk;
    }
}

std::uint64_t PrimeCounter::pi(std::uint64_t x) {
    if (x < 2) return 0;
    if (x > dense_limit_) throw InvalidArgument("pi(x) beyond dense table");
    {
        std::shared_lock lock(mutex_);
        if (x >= table_->covered) {
            lock.unlock();
            std::unique_lock ulock(mutex_);
            ensure(x);
        }
    }
    std::shared_lock lock(mutex_);
    const Table& t = *table_;
    const u64 j = (x - 1) / 2;  // last odd index <= x
    const u64 w = j / 64;
    const u64 block = w / Table::kWordsPerBlock;
    u64 c = t.block_prefix[block];
    for (u64 k = block * Table::kWordsPerBlock; k < w; ++k) c += std::popcount(t.bits[k]);
    const unsigned r = static_cast<unsigned>(j % 64);
    const u64 mask = r == 63 ? ~u64{0} : ((u64{1} << (r + 1)) - 1);
    c += std::popcount(t.bits[w] & mask);
    return c + 1;  // the prime 2
}

bool PrimeCounter::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n > dense_limit_) return is_prime_u64(n);
    return pi(n) != pi(n - 1);
}

std::uint64_t PrimeCounter::count_closed(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) return 0;
    if (hi > ceiling_) throw CeilingExceeded("prime count bound " + std::to_string(hi) + " above sieve ceiling");
    if (hi <= dense_limit_) return pi(hi) - (lo == 0 ? 0 : pi(lo - 1));
    if (lo <= dense_limit_) return pi(dense_limit_) - (lo == 0 ? 0 : pi(lo - 1)) + sieve_count(dense_limit_ + 1, hi);
    return sieve_count(lo, hi);
}

std::uint64_t PrimeCounter::count_open(const ExactRatio& a, const ExactRatio& b) {
    if (b > mpz_class(static_cast<unsigned long>(ceiling_)))
        throw CeilingExceeded("prime count bound " + to_string(b) + " above sieve ceiling");
    mpz_class lo = floor_of(a) + 1;
    mpz_class hi = ceil_of(b) - 1;
    if (lo < 2) lo = 2;
    if (hi < lo) return 0;
    return count_closed(to_u64(lo), to_u64(hi));
}

}  // namespace pawn
