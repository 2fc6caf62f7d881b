#include <gtest/gtest.h>

#include <pawn/errors.hpp>
#include <pawn/primes.hpp>

#include <cstdlib>
#include <random>

#include "oracle/oracle.hpp"

using pawn::ExactRatio;
using pawn::PrimalityPolicy;

TEST(Primes, IsPrimeExamples) {
    EXPECT_FALSE(pawn::is_prime(1));
    EXPECT_FALSE(pawn::is_prime(0));
    EXPECT_TRUE(pawn::is_prime(2));
    EXPECT_TRUE(pawn::is_prime(563915507));
    EXPECT_TRUE(pawn::is_prime(97919));
    EXPECT_TRUE(pawn::is_prime(mpz_class("10965542434977103")));
}

TEST(Primes, MatchesSieveBelowTwoMillion) {
    const auto flags = oracle::prime_flags(2000000);
    for (std::uint64_t n = 0; n <= 2000000; ++n) {
        ASSERT_EQ(pawn::is_prime_u64(n), flags[n]) << n;
        if (n % 97 == 0) ASSERT_EQ(pawn::is_prime(mpz_class(static_cast<unsigned long>(n))), flags[n]) << n;
    }
}

TEST(Primes, RejectsStrongPseudoprimes) {
    // Carmichael numbers and strong pseudoprimes to several small bases.
    for (std::uint64_t n : {561ULL, 1105ULL, 2047ULL, 3215031751ULL, 4759123141ULL, 1122004669633ULL,
                            2152302898747ULL, 3474749660383ULL, 341550071728321ULL, 3825123056546413051ULL}) {
        EXPECT_FALSE(pawn::is_prime_u64(n)) << n;
    }
    EXPECT_FALSE(pawn::is_prime(mpz_class("318665857834031151167461")));
    EXPECT_FALSE(pawn::is_prime(mpz_class("3317044064679887385961981")));
    EXPECT_TRUE(pawn::is_prime_u64(18446744073709551557ULL));
    EXPECT_TRUE(pawn::is_prime(mpz_class("170141183460469231731687303715884105727")));
}

TEST(Primes, KthPrimeAbove) {
    EXPECT_EQ(pawn::kth_prime_above(ExactRatio(7), 2), 13);
    EXPECT_EQ(pawn::kth_prime_above(ExactRatio(49, 3), 1), 17);
    EXPECT_EQ(pawn::kth_prime_above(ExactRatio(1), 1), 2);
    EXPECT_EQ(pawn::kth_prime_above(ExactRatio(13), 1), 17);
    EXPECT_EQ(pawn::kth_prime_above(ExactRatio(-5), 1), 2);
}

TEST(Primes, KthPrimeBelow) {
    EXPECT_EQ(pawn::kth_prime_below(ExactRatio(9), 1), 7);
    EXPECT_EQ(pawn::kth_prime_below(ExactRatio(31), 2), 23);
    EXPECT_EQ(pawn::kth_prime_below(ExactRatio(7), 1), 5);
    EXPECT_EQ(pawn::kth_prime_below(ExactRatio(15, 2), 1), 7);
    EXPECT_THROW(pawn::kth_prime_below(ExactRatio(2), 1), pawn::NoSuchPrime);
    EXPECT_THROW(pawn::kth_prime_below(ExactRatio(10), 5), pawn::NoSuchPrime);
}

TEST(Primes, PrimeAtOrZero) {
    EXPECT_EQ(pawn::prime_at_or_zero(ExactRatio(7)), mpz_class(7));
    EXPECT_FALSE(pawn::prime_at_or_zero(ExactRatio(49, 3)));
    EXPECT_FALSE(pawn::prime_at_or_zero(ExactRatio(9)));
    EXPECT_FALSE(pawn::prime_at_or_zero(ExactRatio(1)));
}

TEST(Primes, StrictStepping) {
    for (unsigned long p : {3ul, 5ul, 97919ul, 563915507ul}) {
        EXPECT_GT(pawn::next_prime(p), p);
        EXPECT_LT(pawn::prev_prime(p), p);
    }
    EXPECT_EQ(pawn::next_prime(0), 2);
    EXPECT_EQ(pawn::next_prime(2), 3);
    EXPECT_EQ(pawn::prev_prime(3), 2);
    EXPECT_THROW(pawn::prev_prime(2), pawn::NoSuchPrime);
    EXPECT_EQ(pawn::next_prime(mpz_class("18446744073709551557")), mpz_class("18446744073709551629"));
    EXPECT_EQ(pawn::prev_prime(mpz_class("18446744073709551629")), mpz_class("18446744073709551557"));
}

TEST(Primes, CountExamples) {
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(5), ExactRatio(9)), 1u);
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(2), ExactRatio(3)), 0u);
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(7), ExactRatio(31)), 6u);
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(9), ExactRatio(5)), 0u);
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(0), ExactRatio(1000000)), 78498u);
    EXPECT_EQ(pawn::count_primes_in_open_interval(ExactRatio(13, 2), ExactRatio(23, 2)), 2u);
}

TEST(Primes, CountCeiling) {
    EXPECT_THROW(pawn::count_primes_in_open_interval(ExactRatio(0), ExactRatio(101), 100), pawn::CeilingExceeded);
    EXPECT_NO_THROW(pawn::count_primes_in_open_interval(ExactRatio(0), ExactRatio(100), 100));
    pawn::PrimeCounter small(1000, 512);
    EXPECT_THROW(small.count_open(ExactRatio(0), ExactRatio(2000)), pawn::CeilingExceeded);
}

TEST(Primes, SteppingAgreesWithCounting) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t a_num = rng() % 3000000, den = 1 + rng() % 7;
        const ExactRatio a = pawn::make_ratio(a_num, den);
        const ExactRatio b = a + pawn::make_ratio(rng() % 20000, 1 + rng() % 5);
        const auto n = pawn::count_primes_in_open_interval(a, b);
        std::uint64_t stepped = 0;
        for (mpz_class p = pawn::kth_prime_above(a, 1); p < b; p = pawn::next_prime(p)) ++stepped;
        ASSERT_EQ(n, stepped);
        if (n > 0) ASSERT_LT(pawn::kth_prime_above(a, static_cast<unsigned>(n)), b);
        ASSERT_GE(pawn::kth_prime_above(a, static_cast<unsigned>(n + 1)), b);
    }
}

TEST(Primes, RangeAgreesWithSieve) {
    const auto ref = oracle::primes_up_to(200000);
    const auto got = pawn::primes_in_range(0, 200000);
    EXPECT_EQ(got, ref);
    const auto mid = pawn::primes_in_range(1000003, 1000500);
    for (auto p : mid) EXPECT_TRUE(pawn::is_prime_u64(p));
    EXPECT_EQ(mid.front(), 1000003u);
}

TEST(Primes, CounterMatchesSieveAcrossDenseLimit) {
    const std::uint64_t limit = 3000000;
    const auto flags = oracle::prime_flags(limit);
    std::vector<std::uint64_t> pi(limit + 1, 0);
    for (std::uint64_t n = 1; n <= limit; ++n) pi[n] = pi[n - 1] + (flags[n] ? 1 : 0);

    // Small dense limit so both the table and the sieve fallback are used.
    pawn::PrimeCounter counter(pawn::kDefaultSieveCeiling, 1u << 20);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t lo = rng() % limit, hi = rng() % limit;
        if (lo > hi) std::swap(lo, hi);
        ASSERT_EQ(counter.count_closed(lo, hi), pi[hi] - (lo ? pi[lo - 1] : 0)) << lo << " " << hi;
        const ExactRatio a = pawn::make_ratio(lo * 3 + 1, 3), b = pawn::make_ratio(hi * 2 + 1, 2);
        ASSERT_EQ(counter.count_open(a, b), pawn::count_primes_in_open_interval(a, b));
    }
    for (std::uint64_t n = 0; n < 5000; ++n) ASSERT_EQ(counter.is_prime(n), flags[n]);
    EXPECT_EQ(counter.pi(1000000), 78498u);
}

TEST(Primes, PolicyValidation) {
    PrimalityPolicy p;
    EXPECT_NO_THROW(p.validate());
    p.deterministic_limit = 1000;
    EXPECT_THROW(p.validate(), pawn::InvalidArgument);
    p = {};
    p.probabilistic_rounds = 0;
    EXPECT_THROW(p.validate(), pawn::InvalidArgument);
}

TEST(Primes, PolicyFromEnvironment) {
    setenv("PAWN_DET_LIMIT", "4294967296", 1);
    setenv("PAWN_MR_ROUNDS", "7", 1);
    const auto p = PrimalityPolicy::from_environment();
    EXPECT_EQ(p.deterministic_limit, 4294967296ULL);
    EXPECT_EQ(p.probabilistic_rounds, 7u);
    unsetenv("PAWN_DET_LIMIT");
    unsetenv("PAWN_MR_ROUNDS");
    EXPECT_EQ(PrimalityPolicy::from_environment().deterministic_limit, PrimalityPolicy{}.deterministic_limit);
}

TEST(Primes, ProbabilisticPathAgreesAboveLowLimit) {
    PrimalityPolicy low;
    low.deterministic_limit = PrimalityPolicy::kMinDeterministicLimit;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t n = (rng() >> 4) | 1;
        ASSERT_EQ(pawn::is_prime(mpz_class(static_cast<unsigned long>(n)), low), pawn::is_prime_u64(n)) << n;
    }
}

TEST(Primes, CertifyNeverRejectsTruePrimes) {
    PrimalityPolicy cert;
    cert.certify = true;
    for (auto p : oracle::primes_up_to(100000)) {
        EXPECT_EQ(pawn::certify_prime(p), pawn::PrimeVerdict::Prime);
        EXPECT_TRUE(pawn::is_prime(mpz_class(static_cast<unsigned long>(p)), cert));
    }
    EXPECT_EQ(pawn::certify_prime(561), pawn::PrimeVerdict::Composite);
    EXPECT_EQ(pawn::certify_prime(mpz_class("10965542434977103")), pawn::PrimeVerdict::Prime);
    EXPECT_EQ(pawn::certify_prime(mpz_class("170141183460469231731687303715884105727")),
              pawn::PrimeVerdict::ProbablePrime);
}
