#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>

#include "pawn/classify.hpp"
#include "pawn/factorization.hpp"
#include "pawn/primes.hpp"

namespace pawn {

struct EnumRecord {
    Factorization factorization;
    NumberClass cls = NumberClass::Abundant;
    mpz_class abundance;
    std::size_t omega = 0;
    unsigned big_omega = 0;
};

struct EnumOutcome {
    std::uint64_t count_abundant = 0;
    std::uint64_t count_perfect = 0;
    /// A (possibly non-primitive) non-deficient completion exists below
    /// this node. Drives the stopping rule; never inferred from counts.
    bool found = false;

    EnumOutcome& operator+=(const EnumOutcome& o) {
        count_abundant += o.count_abundant;
        count_perfect += o.count_perfect;
        found = found || o.found;
        return *this;
    }
    friend bool operator==(const EnumOutcome&, const EnumOutcome&) = default;
};

using RecordSink = std::function<void(const EnumRecord&)>;

/// Called when an interior loop stops: `prefix` is the node, `stop_prime`
/// the first prime whose subtree found nothing, `remaining` the number of
/// factors that were still to be added below `prefix`. Every prime above
/// `stop_prime` is pruned. Must be thread-safe when jobs > 1.
using PruneObserver = std::function<void(const Factorization& prefix, const mpz_class& stop_prime, unsigned remaining)>;

struct EnumOptions {
    /// Only odd results: the first level adds primes >= 3. The seed must be odd.
    bool odd_only = false;
    /// Emit perfect leaves too. They are always counted in count_perfect,
    /// never in count_abundant.
    bool include_perfect = false;
    /// Worker threads for the top two recursion levels.
    unsigned jobs = 1;
    PrimalityPolicy policy{};
    /// Prime counter for the counting modes; a shared process-wide one is
    /// used when null.
    std::shared_ptr<PrimeCounter> counter;
    PruneObserver on_prune;
};

/// Every primitive abundant seed * p1 * ... * pk with largest(seed) < p1 < ... < pk.
EnumOutcome sfpan(unsigned k, const Factorization& seed, const RecordSink& sink, const EnumOptions& options = {});

/// Same counts as sfpan, with leaf intervals counted by the sieve.
EnumOutcome sfpan_count(unsigned k, const Factorization& seed, const EnumOptions& options = {});

/// Every primitive non-deficient seed * p1 * ... * pk with
/// largest(seed) <= p1 <= ... <= pk.
EnumOutcome pndn(unsigned k, const Factorization& seed, const RecordSink& sink, const EnumOptions& options = {});

EnumOutcome pndn_count(unsigned k, const Factorization& seed, const EnumOptions& options = {});

/// Process-wide counter shared by the counting modes.
std::shared_ptr<PrimeCounter> shared_prime_counter();

}  // namespace pawn
