#include "pawn/weird.hpp"

#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <algorithm>
#include <vector>

#include "pawn/arith.hpp"
#include "pawn/classify.hpp"
#include "pawn/errors.hpp"
#include "pawn/subset_sum.hpp"

namespace pawn {

namespace {

bool weird_with_abundance(const Factorization& f, const mpz_class& delta) {
    const auto divisors = divisors_up_to(f, delta);
    return !subset_sums_to(divisors, delta);
}

bool is_power_of_two(const Factorization& f) {
    return f.is_one() || (f.omega() == 1 && f.factors().front().prime == 2);
}

struct Node {
    NumberState state;
    IndexSequence seq;
};

class Search {
public:
    Search(const SearchConfig& cfg, bool general) : cfg_(cfg), general_(general), pow2_seed_(is_power_of_two(cfg.seed)) {}

    // Children of an interior node in search order.
    std::vector<Node> children(const Node& n) const {
        std::vector<Node> out;
        const NumberState& m = n.state;
        if (general_ && !m.is_one()) {
            const mpz_class p = m.largest_prime();
            if (m.compare_to_center(mpz_class(p * m.factor_sigmas().back())) > 0) {
                Node c{m.times(p), n.seq};
                ++c.seq.entries.back().exponent;
                out.push_back(std::move(c));
            }
        }
        const mpz_class pr = m.largest_prime();
        mpz_class q = floor_of(m.center());
        for (unsigned j = 1; j <= cfg_.amplitude; ++j) {
            q = next_prime(q, cfg_.policy);
            if (q <= pr) continue;
            Node c{m.times(q), n.seq};
            c.seq.entries.push_back({static_cast<std::int64_t>(j), 1});
            out.push_back(std::move(c));
        }
        return out;
    }

    void leaf(const Node& n, std::vector<PwnRecord>& out) const {
        const NumberState& m = n.state;
        const mpz_class pr = m.largest_prime();
        const auto lb = m.primitivity_bound();
        mpz_class max_sigma = 0;
        for (const auto& s : m.factor_sigmas()) max_sigma = std::max(max_sigma, s);

        mpz_class q = ceil_of(m.center());
        for (unsigned j = 1; j <= cfg_.amplitude; ++j) {
            if (q <= 2) break;
            q = prev_prime(q, cfg_.policy);
            if (q <= pr) break;
            bool primitive;
            if (general_ || pow2_seed_)
                primitive = !lb || lb->below(q);
            else
                primitive = cfg_.strict_sigma_bound ? q > max_sigma : q >= max_sigma - 1;
            if (!primitive) continue;
            Node c{m.times(q), n.seq};
            c.seq.entries.push_back({-static_cast<std::int64_t>(j), 1});
            consider(c, out);
        }

        if (general_ && !m.is_one()) {
            const mpz_class p = m.largest_prime();
            const mpz_class x = p * m.factor_sigmas().back();
            if (m.compare_to_center(x) < 0) {
                const auto lb2 = m.primitivity_bound(&p);
                if (!lb2 || lb2->below(x)) {
                    Node c{m.times(p), n.seq};
                    ++c.seq.entries.back().exponent;
                    consider(c, out);
                }
            }
        }
    }

    void run(const Node& n, unsigned remaining, std::vector<PwnRecord>& out) const {
        if (remaining == 1) {
            leaf(n, out);
            return;
        }
        for (const Node& c : children(n)) run(c, remaining - 1, out);
    }

private:
    void consider(const Node& c, std::vector<PwnRecord>& out) const {
        const mpz_class delta = -c.state.deficiency();
        if (!weird_with_abundance(c.state.factorization(), delta)) return;
        PwnRecord r;
        r.factorization = c.state.factorization();
        r.index_sequence = c.seq;
        r.abundance = delta;
        r.digits = c.state.value().get_str().size();
        r.certified = std::all_of(r.factorization.factors().begin(), r.factorization.factors().end(),
                                  [](const PrimePower& pp) { return certify_prime(pp.prime) == PrimeVerdict::Prime; });
        out.push_back(std::move(r));
    }

    const SearchConfig& cfg_;
    bool general_;
    bool pow2_seed_;
};

std::uint64_t drive(const SearchConfig& cfg, const PwnSink& sink, bool general) {
    cfg.policy.validate();
    if (cfg.amplitude == 0) throw InvalidArgument("amplitude must be at least 1");
    if (cfg.jobs == 0) throw InvalidArgument("jobs must be at least 1");
    const std::size_t have = general ? cfg.seed.big_omega() : cfg.seed.omega();
    if (cfg.k <= have)
        throw InvalidArgument("k = " + std::to_string(cfg.k) + " leaves nothing to add to seed " + cfg.seed.to_string());
    NumberState seed(cfg.seed);
    if (!seed.is_deficient()) throw NotDeficient("seed " + cfg.seed.to_string() + " is not deficient");

    Search search(cfg, general);
    const Node root{seed, encode_index_sequence(cfg.seed, cfg.policy)};
    const unsigned remaining = cfg.k - static_cast<unsigned>(have);
    std::uint64_t count = 0;
    auto flush = [&](const std::vector<PwnRecord>& records) {
        count += records.size();
        if (sink)
            for (const auto& r : records) sink(r);
    };

    if (cfg.jobs == 1 || remaining == 1) {
        std::vector<PwnRecord> out;
        search.run(root, remaining, out);
        flush(out);
        return count;
    }
    const auto kids = search.children(root);
    std::vector<std::vector<PwnRecord>> buffers(kids.size());
    tbb::task_arena arena(static_cast<int>(cfg.jobs));
    arena.execute([&] {
        tbb::parallel_for(std::size_t{0}, kids.size(),
                          [&](std::size_t i) { search.run(kids[i], remaining - 1, buffers[i]); });
    });
    for (const auto& b : buffers) flush(b);
    return count;
}

}  // namespace

bool is_weird(const Factorization& f) {
    const mpz_class delta = abundance(f);
    if (sgn(delta) <= 0) throw NotAbundant(f.to_string() + " is not abundant");
    return weird_with_abundance(f, delta);
}

PwnRecord make_pwn_record(const Factorization& f, const PrimalityPolicy& policy) {
    PwnRecord r;
    r.factorization = f;
    r.index_sequence = encode_index_sequence(f, policy);
    r.abundance = abundance(f);
    r.digits = f.digits();
    r.certified = std::all_of(f.factors().begin(), f.factors().end(),
                              [](const PrimePower& pp) { return certify_prime(pp.prime) == PrimeVerdict::Prime; });
    return r;
}

std::uint64_t pwn_search_squarefree(const SearchConfig& cfg, const PwnSink& sink) {
    if (cfg.allow_square_extensions) throw InvalidArgument("square extensions need the general search");
    return drive(cfg, sink, false);
}

std::uint64_t pwn_search_general(const SearchConfig& cfg, const PwnSink& sink) {
    return drive(cfg, sink, true);
}

}  // namespace pawn
