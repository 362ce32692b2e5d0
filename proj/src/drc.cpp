#include "turanwb/drc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

#include "turanwb/errors.hpp"
#include "turanwb/extremal.hpp"
#include "turanwb/rng.hpp"

namespace turan {

namespace {

void check_instance(const DrcInstance& inst) {
    if (inst.g.uniformity() < 2) throw ArityTooSmall("drc: hypergraph uniformity must be >= 2");
    if (inst.g.vertex_count() > 64) throw Unsupported("drc: at most 64 vertices");
    if (inst.t < 1) throw InvalidArgument("drc: t must be >= 1");
    if (inst.r < 1) throw InvalidArgument("drc: r must be >= 1");
    if (inst.x < 0) throw InvalidArgument("drc: x must be >= 0");
}

BigRat hypothesis_lhs_value(const DrcInstance& inst, const NeighborStructure& ns) {
    const int n = ns.n;
    const BigInt c = binom(n, ns.d);
    if (n == 0 || c == 0) return BigRat(0) - BigRat(binom(n, inst.r));
    const long long m = static_cast<long long>(inst.g.edge_count());
    BigRat lower = BigRat(n) * rat_pow(BigRat(m, n), static_cast<unsigned long long>(inst.t)) /
                   rat_pow(BigRat(c), static_cast<unsigned long long>(inst.t));
    BigRat ub_y = BigRat(binom(n, inst.r)) *
                  rat_pow(BigRat(BigInt(inst.x), c), static_cast<unsigned long long>(inst.t));
    return lower - ub_y;
}

}  // namespace

NeighborStructure neighbor_sets(const Hypergraph& g) {
    if (g.uniformity() < 2) throw ArityTooSmall("neighbor_sets: uniformity must be >= 2");
    if (g.vertex_count() > 64) throw Unsupported("neighbor_sets: at most 64 vertices");
    NeighborStructure ns;
    ns.n = g.vertex_count();
    ns.d = g.uniformity() - 1;
    ns.subsets = all_d_subsets(ns.n, ns.d);
    std::map<Edge, int> index;
    for (int i = 0; i < static_cast<int>(ns.subsets.size()); ++i) index[ns.subsets[static_cast<std::size_t>(i)]] = i;

    ns.n_of_v.assign(static_cast<std::size_t>(ns.n), {});
    ns.vertices_of.assign(ns.subsets.size(), 0);
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            Edge rest;
            rest.reserve(e.size() - 1);
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != i) rest.push_back(e[j]);
            int idx = index.at(rest);
            ns.n_of_v[static_cast<std::size_t>(e[i])].push_back(idx);
            ns.vertices_of[static_cast<std::size_t>(idx)] |= 1ull << e[i];
        }
    }
    ns.n_size.assign(static_cast<std::size_t>(ns.n), 0);
    for (int v = 0; v < ns.n; ++v) {
        auto& lst = ns.n_of_v[static_cast<std::size_t>(v)];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        ns.n_size[static_cast<std::size_t>(v)] = static_cast<long long>(lst.size());
    }
    return ns;
}

long long common_neighbors(const NeighborStructure& ns, std::uint64_t s_mask) {
    long long count = 0;
    for (std::uint64_t mask : ns.vertices_of)
        if ((mask & s_mask) == s_mask) ++count;
    return count;
}

ExpectationX exact_expectation_X(const DrcInstance& inst) {
    check_instance(inst);
    NeighborStructure ns = neighbor_sets(inst.g);
    const BigInt c = binom(ns.n, ns.d);
    ExpectationX out;
    if (ns.n == 0 || c == 0) {
        out.exact = 0;
        out.lower_bound = 0;
        out.jensen_ok = true;
        return out;
    }
    for (int v = 0; v < ns.n; ++v)
        out.exact += rat_pow(BigRat(BigInt(ns.n_size[static_cast<std::size_t>(v)]), c),
                             static_cast<unsigned long long>(inst.t));
    const long long m = static_cast<long long>(inst.g.edge_count());
    out.lower_bound = BigRat(ns.n) *
                      rat_pow(BigRat(m, ns.n), static_cast<unsigned long long>(inst.t)) /
                      rat_pow(BigRat(c), static_cast<unsigned long long>(inst.t));
    out.jensen_ok = out.exact >= out.lower_bound;
    return out;
}

ExpectationY bound_EY(const DrcInstance& inst) {
    check_instance(inst);
    NeighborStructure ns = neighbor_sets(inst.g);
    const BigInt c = binom(ns.n, ns.d);
    ExpectationY out;
    if (c == 0) {
        out.exact = 0;
        out.paper_ub = 0;
        out.bound_ok = true;
        return out;
    }
    for (const Edge& s : all_d_subsets(ns.n, inst.r)) {
        std::uint64_t mask = 0;
        for (int v : s) mask |= 1ull << v;
        long long cn = common_neighbors(ns, mask);
        if (cn < inst.x)
            out.exact += rat_pow(BigRat(BigInt(cn), c), static_cast<unsigned long long>(inst.t));
    }
    out.paper_ub = BigRat(binom(ns.n, inst.r)) *
                   rat_pow(BigRat(BigInt(inst.x), c), static_cast<unsigned long long>(inst.t));
    out.bound_ok = out.exact <= out.paper_ub;
    return out;
}

namespace {

// Cleaning step for one sample: start from B, repeatedly locate the
// lexicographically first bad r-subset of the current set and delete its
// highest vertex. Every deletion retires at least one bad subset of B, so
// at most Y vertices go.
struct Cleaner {
    const NeighborStructure& ns;
    int r;
    long long x;

    // returns surviving vertex list; `removed` counts deletions
    std::vector<int> clean(std::uint64_t b_mask, long long& removed) const {
        std::vector<int> verts;
        for (int v = 0; v < ns.n; ++v)
            if (b_mask & (1ull << v)) verts.push_back(v);
        removed = 0;
        for (;;) {
            int victim = first_bad_victim(verts);
            if (victim < 0) break;
            verts.erase(std::find(verts.begin(), verts.end(), victim));
            ++removed;
        }
        return verts;
    }

    // highest vertex of the lexicographically first bad r-subset; -1 = none
    int first_bad_victim(const std::vector<int>& verts) const {
        const int k = static_cast<int>(verts.size());
        if (k < r) return -1;
        std::vector<int> pick(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (int i : pick) mask |= 1ull << verts[static_cast<std::size_t>(i)];
            if (common_neighbors(ns, mask) < x)
                return verts[static_cast<std::size_t>(pick[static_cast<std::size_t>(r - 1)])];
            int i = r - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - r + i) --i;
            if (i < 0) return -1;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
};

}  // namespace

DrcWitness drc_witness(const DrcInstance& inst, std::uint64_t max_tuples, std::uint64_t seed,
                       int workers) {
    check_instance(inst);
    NeighborStructure ns = neighbor_sets(inst.g);
    const std::size_t k = ns.subsets.size();
    DrcWitness out;
    out.seed = seed;
    out.hypothesis_lhs = hypothesis_lhs_value(inst, ns);
    out.hypothesis_holds = out.hypothesis_lhs >= BigRat(inst.a);

    const std::uint64_t all_verts =
        ns.n >= 64 ? ~0ull : ((1ull << ns.n) - 1);
    Cleaner cleaner{ns, inst.r, inst.x};

    BigInt total = ipow(BigInt(static_cast<long long>(k)), static_cast<unsigned long long>(inst.t));
    out.exhaustive = k > 0 && total <= max_tuples;

    long long best_size = -1;
    auto consider = [&](const std::vector<int>& tuple) {
        std::uint64_t b = all_verts;
        for (int idx : tuple) b &= ns.vertices_of[static_cast<std::size_t>(idx)];
        long long removed = 0;
        std::vector<int> a = cleaner.clean(b, removed);
        if (static_cast<long long>(a.size()) > best_size) {
            best_size = static_cast<long long>(a.size());
            out.a_set = a;
            out.best_tuple = tuple;
            out.x_count = static_cast<long long>(std::popcount(b));
            out.removed = removed;
        }
    };

    if (k == 0) {
        // no d-subsets at all: B is empty under any reading; report empty A
        out.exhaustive = true;
        out.a_set.clear();
        out.tuples_examined = 0;
        best_size = 0;
    } else if (out.exhaustive) {
        std::vector<int> tuple(static_cast<std::size_t>(inst.t), 0);
        for (;;) {
            consider(tuple);
            ++out.tuples_examined;
            int i = inst.t - 1;
            while (i >= 0 && tuple[static_cast<std::size_t>(i)] == static_cast<int>(k) - 1) {
                tuple[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++tuple[static_cast<std::size_t>(i)];
        }
    } else {
        Rng rng(seed);
        std::vector<int> tuple(static_cast<std::size_t>(inst.t));
        for (std::uint64_t it = 0; it < max_tuples; ++it) {
            for (auto& idx : tuple) idx = static_cast<int>(rand_below(rng, k));
            consider(tuple);
            ++out.tuples_examined;
        }
    }
    (void)workers;  // sample loop is cheap at supported sizes

    out.guarantee_met = best_size >= inst.a;
    // direct recheck of the conclusion on the returned set
    out.a_set_verified = true;
    if (static_cast<int>(out.a_set.size()) >= inst.r) {
        std::vector<int> pick(static_cast<std::size_t>(inst.r));
        const int sz = static_cast<int>(out.a_set.size());
        for (int i = 0; i < inst.r; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (int i : pick) mask |= 1ull << out.a_set[static_cast<std::size_t>(i)];
            if (common_neighbors(ns, mask) < inst.x) {
                out.a_set_verified = false;
                break;
            }
            int i = inst.r - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == sz - inst.r + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < inst.r; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

DrcEnumeration drc_enumeration_oracle(const NeighborStructure& ns, int t, int r, long long x,
                                      int workers) {
    const std::size_t k = ns.subsets.size();
    DrcEnumeration out;
    out.tuple_count = ipow(BigInt(static_cast<long long>(k)), static_cast<unsigned long long>(t));
    if (k == 0) return out;
    BigInt total_big = out.tuple_count;
    if (total_big > 100000000) throw Unsupported("drc_enumeration_oracle: too many samples");
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();

    const std::uint64_t all_verts = ns.n >= 64 ? ~0ull : ((1ull << ns.n) - 1);
    // r-subset masks, precomputed once
    std::vector<std::uint64_t> r_masks;
    for (const Edge& s : all_d_subsets(ns.n, r)) {
        std::uint64_t mask = 0;
        for (int v : s) mask |= 1ull << v;
        r_masks.push_back(mask);
    }
    std::vector<char> bad(r_masks.size());
    for (std::size_t i = 0; i < r_masks.size(); ++i)
        bad[i] = common_neighbors(ns, r_masks[i]) < x ? 1 : 0;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, BigInt& sx, BigInt& sy) {
        // decode tuple ranks in base k
        std::vector<std::size_t> tuple(static_cast<std::size_t>(t));
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            std::uint64_t rest = rank;
            std::uint64_t b = all_verts;
            for (int i = 0; i < t; ++i) {
                tuple[static_cast<std::size_t>(i)] = static_cast<std::size_t>(rest % k);
                rest /= k;
                b &= ns.vertices_of[tuple[static_cast<std::size_t>(i)]];
            }
            sx += static_cast<long long>(std::popcount(b));
            long long y = 0;
            for (std::size_t i = 0; i < r_masks.size(); ++i)
                if (bad[i] && (r_masks[i] & b) == r_masks[i]) ++y;
            sy += y;
        }
    };

    const int w = std::max(1, workers);
    if (w == 1 || total < 1024) {
        run_range(0, total, out.sum_x, out.sum_y);
    } else {
        std::vector<BigInt> xs(static_cast<std::size_t>(w)), ys(static_cast<std::size_t>(w));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + static_cast<std::uint64_t>(w) - 1) / static_cast<std::uint64_t>(w);
        for (int i = 0; i < w; ++i) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(i);
            std::uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, i, lo, hi]() { run_range(lo, hi, xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]); });
        }
        for (auto& th : pool) th.join();
        for (int i = 0; i < w; ++i) {
            out.sum_x += xs[static_cast<std::size_t>(i)];
            out.sum_y += ys[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

SweepResult drc_sweep(const SweepConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 16) throw InvalidArgument("drc_sweep: n out of range");
    if (cfg.uniformity < 2) throw ArityTooSmall("drc_sweep: uniformity must be >= 2");
    const std::vector<Edge> universe = all_d_subsets(cfg.n, cfg.uniformity);
    const int m_all = static_cast<int>(universe.size());
    if (m_all > 30) throw Unsupported("drc_sweep: edge universe too large");
    const int cap = std::min(cfg.max_edges, m_all);

    SweepResult res;
    const long long x_max = cfg.x_max >= 0 ? cfg.x_max : binom(cfg.n, cfg.uniformity - 1).convert_to<long long>();
    const long long a_max = cfg.a_max >= 0 ? cfg.a_max : cfg.n;

    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << m_all); ++mask)
        if (std::popcount(mask) <= cap) masks.push_back(mask);
    if (cfg.max_graphs > 0 && masks.size() > cfg.max_graphs) {
        Rng rng(cfg.seed);
        std::vector<std::uint32_t> sample;
        sample.reserve(cfg.max_graphs);
        for (std::uint64_t i = 0; i < cfg.max_graphs; ++i)
            sample.push_back(masks[static_cast<std::size_t>(rand_below(rng, masks.size()))]);
        masks = std::move(sample);
    }

    auto note = [&](const std::string& s) {
        if (res.failures.size() < 20) res.failures.push_back(s);
    };

    for (std::uint32_t mask : masks) {
        std::vector<Edge> edges;
        for (int i = 0; i < m_all; ++i)
            if (mask & (1u << i)) edges.push_back(universe[static_cast<std::size_t>(i)]);
        Hypergraph g(cfg.n, cfg.uniformity, std::move(edges));
        ++res.graphs;
        NeighborStructure ns = neighbor_sets(g);
        const BigInt c = binom(cfg.n, cfg.uniformity - 1);

        for (int t = 1; t <= cfg.t_max; ++t) {
            // oracle route for E[X]/E[Y]: full enumeration of ordered samples
            bool oracle_feasible = cfg.check_oracle &&
                                   ipow(BigInt(static_cast<long long>(ns.subsets.size())),
                                        static_cast<unsigned long long>(t)) <= cfg.oracle_tuple_cap;
            DrcInstance base{g, t, 1, 0, 1};
            ExpectationX ex = exact_expectation_X(base);
            if (!ex.jensen_ok) {
                ++res.property_violations;
                note("convexity lower bound failed: " + g.digest() + " t=" + std::to_string(t));
            }
            for (int r = 1; r <= cfg.r_max; ++r) {
                for (long long x = 0; x <= x_max; ++x) {
                    DrcInstance inst{g, t, r, x, 1};
                    ExpectationY ey = bound_EY(inst);
                    if (!ey.bound_ok) {
                        ++res.property_violations;
                        note("E[Y] bound failed: " + g.digest());
                    }
                    if (oracle_feasible) {
                        DrcEnumeration en = drc_enumeration_oracle(ns, t, r, x);
                        BigRat denom(en.tuple_count);
                        ++res.oracle_checks;
                        if (ex.exact != BigRat(en.sum_x) / denom ||
                            ey.exact != BigRat(en.sum_y) / denom) {
                            ++res.oracle_mismatches;
                            note("enumeration oracle mismatch: " + g.digest() +
                                 " t=" + std::to_string(t) + " r=" + std::to_string(r) +
                                 " x=" + std::to_string(x));
                        }
                    }
                    // hypothesis across a = 1..a_max; one witness run covers all
                    BigRat lhs = hypothesis_lhs_value(inst, ns);
                    long long a_star = 0;
                    for (long long a = 1; a <= a_max; ++a) {
                        ++res.instances;
                        if (lhs >= BigRat(a)) {
                            ++res.hypothesis_held;
                            a_star = a;
                        }
                    }
                    if (a_star >= 1) {
                        DrcInstance winst{g, t, r, x, a_star};
                        DrcWitness w = drc_witness(winst);
                        ++res.witness_runs;
                        if (!w.exhaustive || !w.guarantee_met) {
                            ++res.guarantee_violations;
                            note("witness below guarantee: " + g.digest() + " t=" +
                                 std::to_string(t) + " r=" + std::to_string(r) +
                                 " x=" + std::to_string(x) + " a=" + std::to_string(a_star));
                        }
                        if (!w.a_set_verified) {
                            ++res.property_violations;
                            note("returned set fails threshold recheck: " + g.digest());
                        }
                    }
                }
            }
        }
        (void)c;
    }
    return res;
}

}  // namespace turan
