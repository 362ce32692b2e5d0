#pragma once

// Internal branch-and-bound engine shared by the exact extremal searches.
// Not installed; include only from src/.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "turanwb/extremal.hpp"

namespace turan::detail {

// Problem contract (mutable state, one instance per worker):
//   std::size_t universe_size() const
//   long long value() const                        // objective of current state
//   long long upper_bound(std::size_t i) const     // optimistic max from here on
//   bool try_include(std::size_t i)                // false = infeasible, state unchanged
//   void undo_include(std::size_t i)
//   void include_unchecked(std::size_t i)          // replay without feasibility check
//   bool root_symmetry_prune() const               // suppress skip branch at the root
//
// The objective must be nondecreasing along include paths. The engine
// maximizes it over all feasible subsets of the universe, visited in
// lexicographic include-first depth-first order.
//
// Witness rule: for exact results the witness is the first state in that
// order attaining the maximum (reconstructed by a sequential pass after a
// parallel run), so value and witness are independent of worker count.

struct EngineOutcome {
    long long value = 0;
    std::vector<std::size_t> witness;  // included universe indices
    SearchStats stats;
};

template <class Problem>
class BnbRunner {
public:
    BnbRunner(const Problem& prototype, const SearchBudget& budget)
        : proto_(prototype), budget_(budget) {}

    EngineOutcome run() {
        start_ = std::chrono::steady_clock::now();
        best_.store(0);
        nodes_.store(0);
        exhausted_.store(false);
        have_witness_ = false;

        const int workers = budget_.workers > 1 ? budget_.workers : 1;
        if (workers == 1 || proto_.universe_size() < 8) {
            run_sequential();
        } else {
            run_parallel(workers);
        }

        EngineOutcome out;
        out.value = best_.load();
        out.stats.nodes = nodes_.load();
        out.stats.budget_exhausted = exhausted_.load();
        out.stats.wall_ms = elapsed_ms();
        if (!out.stats.budget_exhausted) {
            Problem p(proto_);
            std::vector<std::size_t> chosen;
            canonical_dfs(p, chosen, 0, out.value, out.witness);
        } else {
            out.witness = witness_;  // best found; not canonical under races
        }
        return out;
    }

private:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

    bool budget_hit(std::uint64_t& local_ticks) {
        if (exhausted_.load(std::memory_order_relaxed)) return true;
        ++local_ticks;
        if ((local_ticks & 0xfff) == 0) {
            nodes_.fetch_add(0x1000, std::memory_order_relaxed);
            if (budget_.max_nodes && nodes_.load(std::memory_order_relaxed) > budget_.max_nodes) {
                exhausted_.store(true);
                return true;
            }
            if (budget_.max_seconds > 0 && elapsed_ms() > budget_.max_seconds * 1000.0) {
                exhausted_.store(true);
                return true;
            }
        }
        return false;
    }

    void record(long long v, const std::vector<std::size_t>& chosen, long long task_order) {
        long long cur = best_.load(std::memory_order_relaxed);
        while (v > cur && !best_.compare_exchange_weak(cur, v)) {
        }
        // Witness bookkeeping matters only for budget-exhausted runs (exact
        // runs rebuild a canonical witness afterwards).
        std::lock_guard<std::mutex> g(witness_mu_);
        if (!have_witness_ || v > witness_value_ ||
            (v == witness_value_ && task_order < witness_order_)) {
            have_witness_ = true;
            witness_value_ = v;
            witness_order_ = task_order;
            witness_ = chosen;
        }
    }

    void dfs(Problem& p, std::vector<std::size_t>& chosen, std::size_t i,
             std::uint64_t& ticks, long long task_order) {
        if (budget_hit(ticks)) return;
        if (i == p.universe_size()) return;
        if (p.upper_bound(i) <= best_.load(std::memory_order_relaxed)) return;
        if (p.try_include(i)) {
            chosen.push_back(i);
            if (p.value() > best_.load(std::memory_order_relaxed)) record(p.value(), chosen, task_order);
            dfs(p, chosen, i + 1, ticks, task_order);
            chosen.pop_back();
            p.undo_include(i);
        }
        if (exhausted_.load(std::memory_order_relaxed)) return;
        if (i == 0 && chosen.empty() && p.root_symmetry_prune()) return;
        dfs(p, chosen, i + 1, ticks, task_order);
    }

    void run_sequential() {
        Problem p(proto_);
        std::vector<std::size_t> chosen;
        std::uint64_t ticks = 0;
        dfs(p, chosen, 0, ticks, -1);
        nodes_.fetch_add(ticks & 0xfff);
    }

    struct Task {
        std::vector<std::size_t> chosen;
        std::size_t next = 0;
    };

    void gen_tasks(Problem& p, std::vector<std::size_t>& chosen, std::size_t i,
                   std::size_t frontier, std::vector<Task>& tasks, std::uint64_t& ticks) {
        if (budget_hit(ticks)) return;
        if (i == p.universe_size()) return;
        if (p.upper_bound(i) <= best_.load(std::memory_order_relaxed)) return;
        if (i == frontier) {
            tasks.push_back(Task{chosen, i});
            return;
        }
        if (p.try_include(i)) {
            chosen.push_back(i);
            if (p.value() > best_.load(std::memory_order_relaxed)) record(p.value(), chosen, -1);
            gen_tasks(p, chosen, i + 1, frontier, tasks, ticks);
            chosen.pop_back();
            p.undo_include(i);
        }
        if (exhausted_.load(std::memory_order_relaxed)) return;
        if (i == 0 && chosen.empty() && p.root_symmetry_prune()) return;
        gen_tasks(p, chosen, i + 1, frontier, tasks, ticks);
    }

    void run_parallel(int workers) {
        std::size_t frontier = 4;
        while ((std::size_t{1} << frontier) < static_cast<std::size_t>(workers) * 8 &&
               frontier < 10)
            ++frontier;
        frontier = std::min(frontier, proto_.universe_size());

        std::vector<Task> tasks;
        {
            Problem p(proto_);
            std::vector<std::size_t> chosen;
            std::uint64_t ticks = 0;
            gen_tasks(p, chosen, 0, frontier, tasks, ticks);
            nodes_.fetch_add(ticks & 0xfff);
        }
        std::atomic<std::size_t> next_task{0};
        auto work = [&]() {
            std::uint64_t ticks = 0;
            for (;;) {
                std::size_t ti = next_task.fetch_add(1);
                if (ti >= tasks.size()) break;
                Problem p(proto_);
                std::vector<std::size_t> chosen = tasks[ti].chosen;
                for (std::size_t idx : chosen) p.include_unchecked(idx);
                if (p.value() > best_.load(std::memory_order_relaxed))
                    record(p.value(), chosen, static_cast<long long>(ti));
                dfs(p, chosen, tasks[ti].next, ticks, static_cast<long long>(ti));
                if (exhausted_.load(std::memory_order_relaxed)) break;
            }
            nodes_.fetch_add(ticks & 0xfff);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // First state in include-first depth-first order attaining `target`.
    bool canonical_dfs(Problem& p, std::vector<std::size_t>& chosen, std::size_t i,
                       long long target, std::vector<std::size_t>& out) {
        if (p.value() == target) {
            out = chosen;
            return true;
        }
        if (i == p.universe_size()) return false;
        if (p.upper_bound(i) < target) return false;
        if (p.try_include(i)) {
            chosen.push_back(i);
            if (canonical_dfs(p, chosen, i + 1, target, out)) return true;
            chosen.pop_back();
            p.undo_include(i);
        }
        if (i == 0 && chosen.empty() && p.root_symmetry_prune()) return false;
        return canonical_dfs(p, chosen, i + 1, target, out);
    }

    Problem proto_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<long long> best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    std::mutex witness_mu_;
    bool have_witness_ = false;
    long long witness_value_ = -1;
    long long witness_order_ = 0;
    std::vector<std::size_t> witness_;
};

}  // namespace turan::detail
