#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "pawn/ratio.hpp"

namespace pawn {

/// How primality is decided. Below `deterministic_limit` the answer is
/// exact; above it the test is Baillie-PSW followed by
/// `probabilistic_rounds` random-base Miller-Rabin rounds.
struct PrimalityPolicy {
    static constexpr std::uint64_t kMinDeterministicLimit = std::uint64_t{1} << 32;

    std::uint64_t deterministic_limit = UINT64_MAX;
    unsigned probabilistic_rounds = 25;
    bool certify = false;

    /// Throws InvalidArgument when the limits are out of range.
    void validate() const;

    /// Defaults overridden by PAWN_DET_LIMIT and PAWN_MR_ROUNDS when set.
    static PrimalityPolicy from_environment();
};

enum class PrimeVerdict { Composite, Prime, ProbablePrime };

bool is_prime_u64(std::uint64_t n);
bool is_prime(const mpz_class& n, const PrimalityPolicy& policy = {});

/// Exact verdict for n < 2^64; larger n are only ever ProbablePrime or
/// Composite and need an external certificate.
PrimeVerdict certify_prime(const mpz_class& n);

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n, const PrimalityPolicy& policy = {});

/// Largest prime strictly less than n; NoSuchPrime when n <= 2.
mpz_class prev_prime(const mpz_class& n, const PrimalityPolicy& policy = {});

/// k-th prime strictly greater than x (k >= 1).
mpz_class kth_prime_above(const ExactRatio& x, unsigned k, const PrimalityPolicy& policy = {});

/// k-th prime strictly less than x (k >= 1). NoSuchPrime if there are
/// fewer than k primes below x.
mpz_class kth_prime_below(const ExactRatio& x, unsigned k, const PrimalityPolicy& policy = {});

/// x itself when x is an integral prime.
std::optional<mpz_class> prime_at_or_zero(const ExactRatio& x, const PrimalityPolicy& policy = {});

inline constexpr std::uint64_t kDefaultSieveCeiling = 10'000'000'000ULL;

/// #{p prime : a < p < b} by a segmented sieve over the interval.
/// CeilingExceeded when b is above `ceiling`.
std::uint64_t count_primes_in_open_interval(const ExactRatio& a, const ExactRatio& b,
                                            std::uint64_t ceiling = kDefaultSieveCeiling);

/// Primes in [lo, hi] with hi <= ceiling, in increasing order.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Prime counter for the enumeration hot path. Keeps a bitmap of odd
/// numbers up to a lazily grown dense limit with running popcounts, so
/// pi(x) below that limit is O(1); above it falls back to sieving the
/// queried interval. Safe for concurrent use.
class PrimeCounter {
public:
    explicit PrimeCounter(std::uint64_t ceiling = kDefaultSieveCeiling,
                          std::uint64_t dense_limit = std::uint64_t{1} << 31);
    ~PrimeCounter();

    PrimeCounter(const PrimeCounter&) = delete;
    PrimeCounter& operator=(const PrimeCounter&) = delete;

    std::uint64_t ceiling() const { return ceiling_; }

    /// #{p prime : a < p < b}.
    std::uint64_t count_open(const ExactRatio& a, const ExactRatio& b);

    /// #{p prime : lo <= p <= hi}.
    std::uint64_t count_closed(std::uint64_t lo, std::uint64_t hi);

    /// pi(x) for x within the dense table; grows the table as needed.
    std::uint64_t pi(std::uint64_t x);

    /// Exact primality from the dense table (grows it as needed).
    bool is_prime(std::uint64_t n);

private:
    struct Table;

    void ensure(std::uint64_t x);

    std::uint64_t ceiling_;
    std::uint64_t dense_limit_;
    std::unique_ptr<Table> table_;
    std::shared_mutex mutex_;
};

}  // namespace pawn
