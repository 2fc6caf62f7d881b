#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/factorization.hpp"
#include "pawn/primes.hpp"

namespace pawn {

/// One prime power of a factorization, located by its signed rank
/// relative to the center of the preceding prefix: index > 0 is the
/// index-th prime above the center, index < 0 the |index|-th prime below
/// it, index 0 the center itself.
struct IndexEntry {
    std::int64_t index = 0;
    unsigned exponent = 1;

    friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

struct IndexSequence {
    std::vector<IndexEntry> entries;

    /// "[i1^e1, i2, ..., ik]".
    std::string to_string() const;

    /// Accepts the to_string() form, with or without spaces.
    static IndexSequence parse(std::string_view text);

    friend bool operator==(const IndexSequence&, const IndexSequence&) = default;
};

/// PrefixNotDeficient when a prefix before the last prime is not deficient.
IndexSequence encode_index_sequence(const Factorization& f, const PrimalityPolicy& policy = {});

/// InvalidSequence when the primes do not strictly increase, a prefix
/// before the last entry is not deficient, or an index 0 sits at a
/// center that is not an integral prime.
Factorization decode_index_sequence(const IndexSequence& s, const PrimalityPolicy& policy = {});

}  // namespace pawn
