#pragma once

#include <pawn/factorization.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"

namespace testing_support {

inline pawn::Factorization to_factorization(const oracle::Partial& p) {
    std::vector<pawn::PrimePower> fs;
    for (const auto& [q, e] : p.factors) fs.push_back({mpz_class(static_cast<unsigned long>(q)), e});
    return pawn::Factorization(std::move(fs));
}

inline std::uint64_t to_u64(const pawn::Factorization& f) {
    const mpz_class v = f.value();
    return static_cast<std::uint64_t>(v.get_ui());
}

struct KnownPwn {
    unsigned omega;
    const char* factorization;
    const char* delta;
    const char* index_sequence;
};

// Square-free primitive weird numbers with their abundance and index
// sequence, grouped by omega.
inline const std::vector<KnownPwn>& known_small_pwn() {
    static const std::vector<KnownPwn> rows = {
        {3, "2*5*7", "4", "[1, 1, -1]"},
        {3, "2^2*11*19", "8", "[1^2, 1, -1]"},
        {3, "2^3*17*127", "16", "[1^3, 1, -2]"},
        {3, "2^3*19*71", "16", "[1^3, 2, -2]"},
        {3, "2^3*19*61", "56", "[1^3, 2, -4]"},
        {3, "2^3*23*43", "16", "[1^3, 3, -1]"},
        {3, "2^3*29*31", "16", "[1^3, 4, -1]"},
        {4, "2*5*11*53", "4", "[1, 1, 1, -1]"},
        {4, "2*5*13*31", "4", "[1, 1, 2, -1]"},
        {4, "2^2*11*23*251", "8", "[1^2, 1, 1, -1]"},
        {4, "2^2*11*23*241", "88", "[1^2, 1, 1, -2]"},
        {4, "2^2*11*31*67", "8", "[1^2, 1, 3, -1]"},
        {4, "2^2*13*17*439", "8", "[1^2, 2, 1, -1]"},
        {4, "2^3*17*137*9311", "16", "[1^3, 1, 1, -1]"},
        {4, "2^3*17*139*4723", "16", "[1^3, 1, 2, -1]"},
        {4, "2^3*19*79*1499", "16", "[1^3, 2, 1, -1]"},
        {4, "2^3*19*83*787", "16", "[1^3, 2, 2, -1]"},
        {4, "2^3*23*67*139", "16", "[1^3, 3, 5, -1]"},
        {5, "2*5*11*59*647", "20", "[1, 1, 1, 1, -1]"},
        {5, "2^2*11*23*257*13003", "8", "[1^2, 1, 1, 1, -1]"},
        {5, "2^2*11*23*257*13001", "88", "[1^2, 1, 1, 1, -2]"},
        {5, "2^2*11*23*263*6047", "88", "[1^2, 1, 1, 2, -1]"},
        {5, "2^2*13*17*449*24799", "232", "[1^2, 2, 1, 2, -1]"},
        {5, "2^2*13*23*61*1657", "8", "[1^2, 2, 3, 2, -1]"},
        {5, "2^3*17*137*9337*3953791", "272", "[1^3, 1, 1, 3, -1]"},
        {5, "2^3*17*137*9341*3346951", "16", "[1^3, 1, 1, 4, -1]"},
        {5, "2^3*17*137*9341*3346883", "7088", "[1^3, 1, 1, 4, -6]"},
        {5, "2^3*23*47*1091*107209", "976", "[1^3, 3, 1, 2, -1]"},
        {5, "2^3*23*47*1103*51839", "368", "[1^3, 3, 1, 5, -1]"},
        {5, "2^3*23*71*127*6689", "16", "[1^3, 3, 6, 1, -1]"},
        {5, "2^3*31*37*163*186959", "16", "[1^3, 5, 2, 1, -1]"},
        {5, "2^3*37*43*67*15227", "16", "[1^3, 6, 5, 1, -1]"},
        {6, "2^2*11*23*269*4003*24766559", "88", "[1^2, 1, 1, 3, 1, -1]"},
        {6, "2^2*11*23*269*4013*1508909", "248", "[1^2, 1, 1, 3, 3, -1]"},
        {6, "2^2*13*17*443*97919*563915507", "1768", "[1^2, 2, 1, 1, 1, -2]"},
        {6, "2^2*13*17*443*97931*330611657", "4888", "[1^2, 2, 1, 1, 3, -1]"},
        {6, "2^3*17*137*9349*2561627*3280965162749", "272", "[1^3, 1, 1, 6, 1, -1]"},
        {6, "2^3*17*137*9349*2561651*252384300173", "272", "[1^3, 1, 1, 6, 3, -1]"},
        {6, "2^3*17*139*4783*389749*8454956717", "7088", "[1^3, 1, 2, 5, 2, -1]"},
        {6, "2^3*23*47*1087*167863*197246914559", "16", "[1^3, 3, 1, 1, 1, -1]"},
        {7, "2*5*11*89*167*829*7972687", "20", "[1, 1, 1, 8, 6, 1, -1]"},
        {7, "2^2*13*17*443*97919*563915549*10965542434977103", "1768", "[1^2, 2, 1, 1, 1, 2, -1]"},
    };
    return rows;
}

// Primitive weird numbers with a square odd prime factor and Omega = 7.
inline const std::vector<KnownPwn>& known_square_pwn_omega7() {
    static const std::vector<KnownPwn> rows = {
        {5, "2^2*13^2*19*383*23203", "8", "[1^2, 2^2, 1, 2, -1]"},
        {5, "2^2*13*17*443^2*194867", "103192", "[1^2, 2, 1, 1^2, -6]"},
        {6, "2*5^2*29*37*137*211", "20", "[1, 1^2, 4, 3, 11, -1]"},
        {6, "2*5*11^2*103*877*2376097", "4", "[1, 1, 1^2, 3, 1, -1]"},
        {6, "2*5*11*127^2*167*223", "4", "[1, 1, 1, 15^2, 15, -1]"},
    };
    return rows;
}

inline oracle::Partial to_partial(const pawn::Factorization& f) {
    oracle::Partial p;
    for (const auto& pp : f.factors())
        for (unsigned e = 0; e < pp.exponent; ++e) p = p.times(pp.prime.get_ui());
    return p;
}

/// Primitive non-deficient numbers inside a subtree the enumeration
/// pruned: prefix * p1 * ... * p_remaining with p1 >= stop_prime.
/// The square-free enumeration targets abundant numbers only, so perfect
/// ones are not reported for it.
inline std::vector<oracle::Partial> primitive_in_pruned_subtree(const pawn::Factorization& prefix,
                                                               const mpz_class& stop_prime, unsigned remaining,
                                                               bool square_free, const std::vector<bool>& flags) {
    std::vector<oracle::Partial> hits;
    oracle::brute_force_extensions(to_partial(prefix), remaining, stop_prime.get_ui(), square_free, flags,
                                   [&](const oracle::Partial& p) {
                                       if (!square_free || p.sigma > 2 * p.value) hits.push_back(p);
                                   });
    return hits;
}

}  // namespace testing_support
