#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turanwb/hypergraph.hpp"
#include "turanwb/numbers.hpp"

namespace turan {

/// One dependent-random-choice instance: a (d+1)-uniform hypergraph plus
/// the sample count t, subset size r, common-neighbor threshold x and the
/// guaranteed set size a. A vertex v and a d-subset T are neighbors iff
/// some edge equals T + {v}; subsets with at least x common neighbors are
/// good, strictly fewer are bad.
struct DrcInstance {
    Hypergraph g;
    int t = 1;
    int r = 1;
    long long x = 0;
    long long a = 1;
};

/// N(v) for every vertex, as indices into the lex-ordered list of
/// d-subsets, plus the transposed bitmask view used for intersections.
/// Requires uniformity >= 2 (ArityTooSmall) and at most 64 vertices.
struct NeighborStructure {
    int n = 0;
    int d = 0;  // subset size = uniformity - 1
    std::vector<Edge> subsets;                  // all d-subsets, lex order
    std::vector<std::vector<int>> n_of_v;       // sorted subset indices per vertex
    std::vector<std::uint64_t> vertices_of;     // subset index -> bitmask of neighboring v
    std::vector<long long> n_size;              // |N(v)|
};

NeighborStructure neighbor_sets(const Hypergraph& g);

/// |N(S)| for the vertex set given as a bitmask: d-subsets neighboring
/// every vertex of S. The empty set has every d-subset as a neighbor.
long long common_neighbors(const NeighborStructure& ns, std::uint64_t s_mask);

struct ExpectationX {
    BigRat exact;        // sum_v (|N(v)| / C(n,d))^t
    BigRat lower_bound;  // n * C(n,d)^{-t} * (m/n)^t
    bool jensen_ok = false;
};

/// E[X] for X = |{v : every sampled d-subset lies in N(v)}| under t
/// uniform samples with repetition, exactly, plus the convexity lower
/// bound checked per instance.
ExpectationX exact_expectation_X(const DrcInstance& inst);

struct ExpectationY {
    BigRat exact;     // sum over bad r-subsets S of (|N(S)| / C(n,d))^t
    BigRat paper_ub;  // C(n,r) * (x / C(n,d))^t
    bool bound_ok = false;
};

/// E[Y] for Y = number of bad r-subsets inside B = common-neighborhood of
/// the sample, exactly, plus its closed-form upper bound.
ExpectationY bound_EY(const DrcInstance& inst);

struct DrcWitness {
    bool exhaustive = true;
    std::uint64_t tuples_examined = 0;
    std::uint64_t seed = 0;
    std::vector<int> a_set;         // the surviving vertex set A (sorted)
    std::vector<int> best_tuple;    // d-subset indices of the winning sample
    long long x_count = 0;          // |B| for the winning sample
    long long removed = 0;          // vertices deleted by the cleaning step
    BigRat hypothesis_lhs;          // lower_bound(E[X]) - paper_ub(E[Y])
    bool hypothesis_holds = false;  // hypothesis_lhs >= a
    bool guarantee_met = false;     // |A| >= a
    bool a_set_verified = false;    // every r-subset of A has >= x common neighbors
};

/// Runs the cleaning argument over every ordered sample (exhaustive when
/// C(n,d)^t <= max_tuples, otherwise a seeded random sample, flagged) and
/// returns the largest surviving A. Cleaning tie-break: repeatedly remove
/// the highest vertex of the lexicographically first bad r-subset.
DrcWitness drc_witness(const DrcInstance& inst, std::uint64_t max_tuples = 1u << 20,
                       std::uint64_t seed = 0, int workers = 1);

/// Full-enumeration oracle over all C(n,d)^t ordered samples: exact sums of
/// X and Y (integers), so E[X] = sum_x / C(n,d)^t etc. A second route,
/// independent of the per-vertex/per-subset formulas above. Partitioned
/// across workers; the reduction is an exact integer sum, so the result is
/// schedule-independent.
struct DrcEnumeration {
    BigInt sum_x;
    BigInt sum_y;
    BigInt tuple_count;  // C(n,d)^t
};
DrcEnumeration drc_enumeration_oracle(const NeighborStructure& ns, int t, int r, long long x,
                                      int workers = 1);

struct SweepConfig {
    int n = 5;
    int uniformity = 3;
    int max_edges = 6;
    int t_max = 2;
    int r_max = 3;
    long long x_max = -1;          // -1: C(n, uniformity-1)
    long long a_max = -1;          // -1: n
    std::uint64_t max_graphs = 0;  // 0: enumerate all; else seeded sample
    std::uint64_t seed = 0;
    bool check_oracle = true;
    std::uint64_t oracle_tuple_cap = 1000000;
};

struct SweepResult {
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;         // (t, r, x, a) combinations examined
    std::uint64_t hypothesis_held = 0;   // of which the hypothesis inequality holds
    std::uint64_t witness_runs = 0;
    std::uint64_t guarantee_violations = 0;  // hypothesis held but |A| < a
    std::uint64_t property_violations = 0;   // returned A failing the x-threshold recheck
    std::uint64_t oracle_checks = 0;
    std::uint64_t oracle_mismatches = 0;
    std::vector<std::string> failures;  // capped at 20 entries

    bool ok() const {
        return guarantee_violations == 0 && property_violations == 0 && oracle_mismatches == 0;
    }
};

/// Exhaustive (or seeded-sampled) verification over all hypergraphs of the
/// configured size: whenever the hypothesis inequality holds the witness
/// must deliver, and the exact expectations must match the enumeration
/// oracle.
SweepResult drc_sweep(const SweepConfig& cfg);

}  // namespace turan
