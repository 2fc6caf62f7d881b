#pragma once

#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace pawn::detail {

/// Evaluates the children yielded by `next` in order and hands each
/// result to `take`, stopping as soon as `take` returns false. With
/// batch > 1 the children of a batch are evaluated concurrently and then
/// consumed in order, so the sequence seen by `take` is the sequential
/// one; results past the stopping child are discarded.
template <class Child, class Result, class Next, class Eval, class Take>
void ordered_speculative_loop(std::size_t batch, Next&& next, Eval&& eval, Take&& take) {
    if (batch <= 1) {
        while (std::optional<Child> c = next()) {
            if (!take(*c, eval(*c))) return;
        }
        return;
    }
    std::vector<Child> children;
    std::vector<Result> results;
    while (true) {
        children.clear();
        while (children.size() < batch) {
            std::optional<Child> c = next();
            if (!c) break;
            children.push_back(std::move(*c));
        }
        if (children.empty()) return;
        results.assign(children.size(), Result{});
        tbb::parallel_for(std::size_t{0}, children.size(), [&](std::size_t i) { results[i] = eval(children[i]); });
        for (std::size_t i = 0; i < children.size(); ++i)
            if (!take(children[i], std::move(results[i]))) return;
    }
}

}  // namespace pawn::detail
