#include "pawn/subset_sum.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "pawn/errors.hpp"

namespace pawn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool fits_u64(const mpz_class& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63; }

// values sorted descending, suffix[i] = sum of values[i..].
class MachineSearch {
public:
    MachineSearch(std::vector<u64> values) : values_(std::move(values)), suffix_(values_.size() + 1, 0) {
        for (std::size_t i = values_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + values_[i];
    }

    bool run(std::size_t i, u64 target) {
        if (target == 0) return true;
        if (i == values_.size() || suffix_[i] < target) return false;
        if (suffix_[i] == target) return true;
        if (target <= kBitsetTargetLimit / 16) {
            // Small residual: finish exactly with a bitset over the tail.
            std::vector<u64> tail;
            for (std::size_t j = i; j < values_.size(); ++j)
                if (values_[j] <= target) tail.push_back(values_[j]);
            return subset_sums_to_bitset(tail, target);
        }
        const u64 key_hi = static_cast<u64>(i);
        if (failed_.count(key(key_hi, target))) return false;
        if (values_[i] <= target && run(i + 1, target - values_[i])) return true;
        if (run(i + 1, target)) return true;
        failed_.insert(key(key_hi, target));
        return false;
    }

private:
    struct Hash {
        std::size_t operator()(u128 k) const {
            return std::hash<u64>{}(static_cast<u64>(k)) ^ (std::hash<u64>{}(static_cast<u64>(k >> 64)) * 0x9e3779b97f4a7c15ULL);
        }
    };
    static u128 key(u64 i, u64 t) { return (static_cast<u128>(i) << 64) | t; }

    std::vector<u64> values_;
    std::vector<u128> suffix_;
    std::unordered_set<u128, Hash> failed_;
};

bool big_search(const std::vector<mpz_class>& values, const std::vector<mpz_class>& suffix, std::size_t i,
                const mpz_class& target) {
    if (target == 0) return true;
    if (i == values.size() || suffix[i] < target) return false;
    if (suffix[i] == target) return true;
    if (values[i] <= target && big_search(values, suffix, i + 1, target - values[i])) return true;
    return big_search(values, suffix, i + 1, target);
}

}  // namespace

std::vector<mpz_class> divisors_up_to(const Factorization& f, const mpz_class& bound, bool proper) {
    std::vector<mpz_class> out;
    const auto& fs = f.factors();
    const mpz_class n = proper ? f.value() : mpz_class(0);
    std::function<void(std::size_t, const mpz_class&)> rec = [&](std::size_t i, const mpz_class& cur) {
        if (i == fs.size()) {
            if (!proper || cur != n) out.push_back(cur);
            return;
        }
        mpz_class d = cur;
        for (unsigned e = 0; e <= fs[i].exponent; ++e) {
            if (d > bound) break;
            rec(i + 1, d);
            d *= fs[i].prime;
        }
    };
    if (bound >= 1) rec(0, mpz_class(1));
    std::sort(out.begin(), out.end());
    return out;
}

bool subset_sums_to_bitset(std::span<const std::uint64_t> values, std::uint64_t target) {
    if (target > kBitsetTargetLimit) throw InvalidArgument("bitset subset-sum target too large");
    const std::size_t words = target / 64 + 1;
    std::vector<u64> reach(words, 0);
    reach[0] = 1;
    const u64 target_bit = u64{1} << (target % 64);
    for (u64 v : values) {
        if (v == 0 || v > target) continue;
        const std::size_t ws = v / 64;
        const unsigned bs = static_cast<unsigned>(v % 64);
        for (std::size_t w = words; w-- > ws;) {
            u64 shifted = reach[w - ws] << bs;
            if (bs != 0 && w - ws >= 1) shifted |= reach[w - ws - 1] >> (64 - bs);
            reach[w] |= shifted;
        }
        if (reach[words - 1] & target_bit) return true;
    }
    return (reach[words - 1] & target_bit) != 0;
}

bool subset_sums_to_branch_and_bound(std::span<const mpz_class> values, const mpz_class& target) {
    std::vector<mpz_class> sorted;
    for (const auto& v : values)
        if (v <= target) sorted.push_back(v);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    mpz_class total = 0;
    for (const auto& v : sorted) total += v;

    if (fits_u64(target) && fits_u64(total)) {
        std::vector<u64> small;
        small.reserve(sorted.size());
        for (const auto& v : sorted) small.push_back(static_cast<u64>(v.get_ui()));
        return MachineSearch(std::move(small)).run(0, static_cast<u64>(target.get_ui()));
    }
    std::vector<mpz_class> suffix(sorted.size() + 1, 0);
    for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];
    return big_search(sorted, suffix, 0, target);
}

bool subset_sums_to(std::span<const mpz_class> values, const mpz_class& target) {
    if (sgn(target) < 0) return false;
    if (target == 0) return true;
    if (target <= static_cast<unsigned long>(kBitsetTargetLimit)) {
        std::vector<u64> small;
        for (const auto& v : values)
            if (v <= target) small.push_back(static_cast<u64>(v.get_ui()));
        return subset_sums_to_bitset(small, static_cast<u64>(target.get_ui()));
    }
    return subset_sums_to_branch_and_bound(values, target);
}

}  // namespace pawn
