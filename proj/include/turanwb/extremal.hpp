#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "turanwb/hypergraph.hpp"
#include "turanwb/lettering.hpp"
#include "turanwb/matrix01.hpp"
#include "turanwb/numbers.hpp"

namespace turan {

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0;       // 0 = unlimited
    int workers = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double wall_ms = 0;
    bool budget_exhausted = false;
};

enum class RecordKind { ex_hypergraph, f_lettered, ex_matrix };

const char* record_kind_name(RecordKind k);
RecordKind record_kind_from_name(const std::string& s);

/// All d-subsets of 0..n-1 in lexicographic order.
std::vector<Edge> all_d_subsets(int n, int d);

/// One computed extremal value with its witness. `exact` is false when the
/// search budget ran out, in which case `value` is only a lower bound.
/// Witness determinism: the witness is always the one a depth-first,
/// include-first sequential pass finds first, independent of worker count.
struct ExtremalRecord {
    RecordKind kind = RecordKind::ex_hypergraph;
    int n = 0;
    int d = 0;
    int k = 0;  // only for f_lettered
    std::string forbidden_digest;
    long long value = 0;
    bool exact = true;
    std::variant<std::monostate, Hypergraph, LetteredHypergraph, Matrix01> witness;
    SearchStats stats;
};

/// Exact ex_d(n, H): maximum edges of an H-free d-uniform hypergraph on n
/// vertices. Branch-and-bound over the d-subsets in lexicographic order;
/// adding an edge is pruned when it completes a copy of H, a branch is
/// pruned when the remaining edges cannot beat the incumbent. Requires H
/// with at least one edge.
ExtremalRecord ex_exact(int n, const Hypergraph& h, const SearchBudget& budget = {});

/// Exact f_d(n, k, H): maximum distinct letters of an H-free lettered
/// d-uniform hypergraph on n vertices, every letter occurring at least k
/// times. Search space reduction (proved in the module notes below): only
/// per-greatest-vertex edge counts matter, so f equals the maximum of
/// sum_v floor(m_v / k) over H-free hypergraphs, and a witness lettering
/// uses blocks of exactly k.
///
/// Reduction argument. (a) Any valid lettering with r letters, each >= k
/// times, keeps r letters after deleting all but k lex-least edges per
/// letter, and stays H-free, so exactly-k letterings achieve the maximum.
/// (b) Letters partition the edges at each greatest vertex v into disjoint
/// k-blocks, so r <= sum_v floor(m_v / k); conversely lex-grouping attains
/// it. Hence the formula.
ExtremalRecord f_exact(int n, int k, const Hypergraph& h, const SearchBudget& budget = {});

struct Lemma1Report {
    int n = 0, k = 0, d = 0;
    long long ex_value = 0;
    long long f_value = 0;
    long long rhs = 0;              // k * (f + n)
    bool inequality_ok = false;     // ex <= k*(f+n)
    int transform_letters = 0;      // letters of letter_transform(ex witness, k)
    bool transform_ok = false;      // transform_letters <= f
    bool exact = true;
    bool pass() const { return inequality_ok && transform_ok && exact; }
};

/// Computes ex_d(n,H) and f_d(n,k,H) exactly and checks
/// ex <= k*(f + n); additionally letters the ex-witness greedily and
/// confirms the construction stays within f.
Lemma1Report verify_lemma1(int n, int k, const Hypergraph& h, const SearchBudget& budget = {});

/// Exact ex(n, Q, d): maximum ones of a Q-avoiding d-dimensional 0-1 matrix
/// with every side equal to n, where d = q.dim(). Branch-and-bound over the
/// cells in lexicographic order with incremental avoidance checks.
/// Implemented in matrix01.cpp. Requires q with at least one one.
ExtremalRecord mat_ex_exact(int n, const Matrix01& q, const SearchBudget& budget = {});

}  // namespace turan
