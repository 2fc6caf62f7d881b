#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "pawn/factorization.hpp"

namespace pawn {

/// Divisors d of f with d <= bound, ascending. The number itself is
/// left out when `proper` is set. Built by a bounded product search over
/// the factorization, so only the divisors below the bound are touched.
std::vector<mpz_class> divisors_up_to(const Factorization& f, const mpz_class& bound, bool proper = true);

/// Targets up to this size are decided by bitset reachability.
inline constexpr std::uint64_t kBitsetTargetLimit = std::uint64_t{1} << 24;

/// Whether some subset of `values` (each used at most once) sums to
/// exactly `target`. Values must be positive.
bool subset_sums_to(std::span<const mpz_class> values, const mpz_class& target);

/// Bitset reachability; target <= kBitsetTargetLimit.
bool subset_sums_to_bitset(std::span<const std::uint64_t> values, std::uint64_t target);

/// Descending branch-and-bound with suffix-sum pruning.
bool subset_sums_to_branch_and_bound(std::span<const mpz_class> values, const mpz_class& target);

}  // namespace pawn
