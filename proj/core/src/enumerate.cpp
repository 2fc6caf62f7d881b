#include "pawn/enumerate.hpp"

#include <tbb/task_arena.h>

#include <optional>
#include <vector>

#include "parallel.hpp"
#include "pawn/errors.hpp"

namespace pawn {

namespace {

enum class Shape { SquareFree, General };

struct Out {
    const RecordSink* sink = nullptr;
    std::vector<EnumRecord>* buffer = nullptr;

    bool active() const { return buffer != nullptr || (sink != nullptr && *sink); }

    void emit(EnumRecord&& r) const {
        if (buffer)
            buffer->push_back(std::move(r));
        else if (sink && *sink)
            (*sink)(r);
    }
};

EnumRecord make_record(const NumberState& n, NumberClass cls) {
    EnumRecord r;
    r.factorization = n.factorization();
    r.cls = cls;
    r.abundance = -n.deficiency();
    r.omega = n.factorization().omega();
    r.big_omega = n.factorization().big_omega();
    return r;
}

class Engine {
public:
    Engine(Shape shape, bool counting, const EnumOptions& opt)
        : shape_(shape), counting_(counting), opt_(opt) {
        if (counting_) counter_ = opt_.counter ? opt_.counter : shared_prime_counter();
    }

    EnumOutcome run(unsigned k, const NumberState& m, const Out& out, unsigned depth) {
        return k == 1 ? leaf(m, out, depth) : interior(k, m, out, depth);
    }

private:
    struct Child {
        mpz_class prime;
        NumberState state;
    };
    struct Result {
        EnumOutcome outcome;
        std::vector<EnumRecord> records;
    };

    // Smallest prime a new coprime factor may exceed.
    mpz_class floor_prime(const NumberState& m, unsigned depth) const {
        mpz_class pr = m.largest_prime();
        if (opt_.odd_only && depth == 0 && pr < 2) pr = 2;
        return pr;
    }

    void emit(const NumberState& product, NumberClass cls, EnumOutcome& o, const Out& out) const {
        if (cls == NumberClass::Abundant) {
            ++o.count_abundant;
            if (out.active()) out.emit(make_record(product, cls));
        } else {
            ++o.count_perfect;
            if (opt_.include_perfect && out.active()) out.emit(make_record(product, cls));
        }
    }

    EnumOutcome leaf(const NumberState& m, const Out& out, unsigned depth) {
        EnumOutcome o;
        const mpz_class pr = floor_prime(m, depth);
        const auto lb = m.primitivity_bound();
        const bool allow_equal = shape_ == Shape::General;

        if (counting_) {
            const ExactRatio c = m.center();
            ExactRatio low(pr);
            if (lb) {
                ExactRatio r = lb->ratio();
                if (r > low) low = r;
            }
            o.count_abundant = counter_->count_open(low, c);
            o.found = o.count_abundant > 0 || (low != ExactRatio(pr) && counter_->count_open(ExactRatio(pr), c) > 0);
            if (allow_equal) {
                if (auto eq = prime_at_or_zero(c, opt_.policy); eq && *eq > pr) {
                    o.found = true;
                    if (!lb || lb->below(*eq)) ++o.count_perfect;
                }
            }
        } else {
            for (mpz_class p = next_prime(pr, opt_.policy);; p = next_prime(p, opt_.policy)) {
                const int cmp = m.compare_to_center(p);
                if (cmp > 0 || (cmp == 0 && !allow_equal)) break;
                o.found = true;
                if (!lb || lb->below(p))
                    emit(m.times(p), cmp < 0 ? NumberClass::Abundant : NumberClass::Perfect, o, out);
            }
        }

        if (shape_ == Shape::General && !m.is_one()) {
            // Repeat the largest prime: m p with p^a || m.
            const mpz_class p = m.largest_prime();
            const mpz_class x = p * m.factor_sigmas().back();
            const int cmp = m.compare_to_center(x);
            if (cmp <= 0) {
                o.found = true;
                const auto lb2 = m.primitivity_bound(&p);
                if (!lb2 || lb2->below(x)) {
                    const NumberClass cls = cmp < 0 ? NumberClass::Abundant : NumberClass::Perfect;
                    if (counting_)
                        ++(cls == NumberClass::Abundant ? o.count_abundant : o.count_perfect);
                    else
                        emit(m.times(p), cls, o, out);
                }
            }
        }
        return o;
    }

    EnumOutcome interior(unsigned k, const NumberState& m, const Out& out, unsigned depth) {
        EnumOutcome total;
        if (shape_ == Shape::General && !m.is_one()) {
            const mpz_class p = m.largest_prime();
            if (m.compare_to_center(mpz_class(p * m.factor_sigmas().back())) > 0)
                total += run(k - 1, m.times(p), out, depth + 1);
        }

        mpz_class p = floor_prime(m, depth);
        if (const mpz_class c = floor_of(m.center()); c > p) p = c;

        auto next = [&]() -> std::optional<Child> {
            p = next_prime(p, opt_.policy);
            return Child{p, m.times(p)};
        };
        auto take = [&](const Child& child, Result&& r) {
            total += r.outcome;
            for (auto& rec : r.records) out.emit(std::move(rec));
            if (!r.outcome.found) {
                if (opt_.on_prune) opt_.on_prune(m.factorization(), child.prime, k);
                return false;
            }
            return true;
        };

        const std::size_t batch = (opt_.jobs > 1 && depth < 2) ? 2 * static_cast<std::size_t>(opt_.jobs) : 1;
        if (batch == 1) {
            detail::ordered_speculative_loop<Child, Result>(
                1, next, [&](const Child& c) { return Result{run(k - 1, c.state, out, depth + 1), {}}; }, take);
        } else {
            const bool buffered = out.active();
            detail::ordered_speculative_loop<Child, Result>(
                batch, next,
                [&](const Child& c) {
                    Result r;
                    Out local{nullptr, buffered ? &r.records : nullptr};
                    r.outcome = run(k - 1, c.state, local, depth + 1);
                    return r;
                },
                take);
        }
        return total;
    }

    Shape shape_;
    bool counting_;
    const EnumOptions& opt_;
    std::shared_ptr<PrimeCounter> counter_;
};

EnumOutcome drive(Shape shape, bool counting, unsigned k, const Factorization& seed, const RecordSink* sink,
                  const EnumOptions& options) {
    if (k == 0) throw InvalidArgument("k must be at least 1");
    if (options.jobs == 0) throw InvalidArgument("jobs must be at least 1");
    if (options.odd_only && !seed.is_odd()) throw InvalidArgument("odd-only enumeration needs an odd seed");
    NumberState m(seed);
    if (!m.is_deficient()) throw NotDeficient("seed " + seed.to_string() + " is not deficient");

    Engine engine(shape, counting, options);
    Out out{sink, nullptr};
    if (options.jobs == 1) return engine.run(k, m, out, 0);
    EnumOutcome result;
    tbb::task_arena arena(static_cast<int>(options.jobs));
    arena.execute([&] { result = engine.run(k, m, out, 0); });
    return result;
}

}  // namespace

std::shared_ptr<PrimeCounter> shared_prime_counter() {
    static const auto counter = std::make_shared<PrimeCounter>();
    return counter;
}

EnumOutcome sfpan(unsigned k, const Factorization& seed, const RecordSink& sink, const EnumOptions& options) {
    return drive(Shape::SquareFree, false, k, seed, &sink, options);
}

EnumOutcome sfpan_count(unsigned k, const Factorization& seed, const EnumOptions& options) {
    return drive(Shape::SquareFree, true, k, seed, nullptr, options);
}

EnumOutcome pndn(unsigned k, const Factorization& seed, const RecordSink& sink, const EnumOptions& options) {
    return drive(Shape::General, false, k, seed, &sink, options);
}

EnumOutcome pndn_count(unsigned k, const Factorization& seed, const EnumOptions& options) {
    return drive(Shape::General, true, k, seed, nullptr, options);
}

}  // namespace pawn
