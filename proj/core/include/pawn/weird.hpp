#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>

#include "pawn/factorization.hpp"
#include "pawn/index_sequence.hpp"
#include "pawn/primes.hpp"

namespace pawn {

/// Abundant and not a sum of distinct proper divisors.
/// NotAbundant unless f is abundant.
bool is_weird(const Factorization& f);

struct PwnRecord {
    Factorization factorization;
    IndexSequence index_sequence;
    mpz_class abundance;
    std::size_t digits = 0;
    /// Every prime factor is below 2^64 and proven prime.
    bool certified = false;
};

using PwnSink = std::function<void(const PwnRecord&)>;

struct SearchConfig {
    Factorization seed;
    /// Target size of the emissions: omega in the square-free search,
    /// Omega in the general one. Counts the seed's own factors.
    unsigned k = 3;
    /// Candidate primes per level.
    unsigned amplitude = 3;
    bool allow_square_extensions = false;
    /// Last prime must exceed sigma(q^a) for every q^a || m, instead of
    /// being at least sigma(q^a) - 1.
    bool strict_sigma_bound = false;
    PrimalityPolicy policy{};
    unsigned jobs = 1;
};

/// Square-free extensions of the seed; at each node the first `amplitude`
/// primes above the center, at the last step the first `amplitude`
/// primes below it. Returns the number of weird numbers emitted.
std::uint64_t pwn_search_squarefree(const SearchConfig& cfg, const PwnSink& sink);

/// As pwn_search_squarefree, with the largest prime also allowed to
/// repeat and exact primitivity conditions at the last step.
std::uint64_t pwn_search_general(const SearchConfig& cfg, const PwnSink& sink);

/// Builds the record for a primitive abundant weird number.
PwnRecord make_pwn_record(const Factorization& f, const PrimalityPolicy& policy = {});

}  // namespace pawn
