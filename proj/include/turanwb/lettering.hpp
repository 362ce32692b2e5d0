#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turanwb/hypergraph.hpp"
#include "turanwb/numbers.hpp"

namespace turan {

/// Hypergraph plus an edge -> letter labeling. Two edges may share a letter
/// only if they have the same greatest vertex; letter ids are dense 0..r-1.
/// letters[i] labels base.edges()[i]. k records the intended multiplicity
/// (informational).
struct LetteredHypergraph {
    Hypergraph base;
    std::vector<int> letters;
    int k = 0;

    int letter_count() const;
    std::vector<int> multiplicities() const;  // index = letter id

    // Text format: the hypergraph format, then one "edge_index letter_id"
    // line per edge.
    std::string to_text() const;
    void write(std::ostream& os) const;
    static LetteredHypergraph parse(std::istream& is);
    static LetteredHypergraph from_text(const std::string& s);
};

struct LetteringReport {
    bool greatest_vertex_rule_ok = true;
    bool dense_ids_ok = true;
    int letter_count = 0;
    std::vector<int> multiplicities;
    std::optional<int> uniform_multiplicity;   // set when all letters agree
    std::vector<int> letters_below_k;          // only when required_k given
    std::vector<std::string> violations;

    bool ok() const { return greatest_vertex_rule_ok && dense_ids_ok && violations.empty(); }
};

/// Checks the greatest-vertex rule and id density, and reports per-letter
/// multiplicities. Violations are report entries, never exceptions. When
/// required_k is given, letters occurring fewer than k times are flagged.
LetteringReport validate_lettering(const LetteredHypergraph& l,
                                   std::optional<int> required_k = std::nullopt);

/// The greedy lettering of an arbitrary hypergraph: for each vertex v from
/// greatest to least, edges whose greatest vertex is v are grouped (in
/// lexicographic order) into blocks of exactly k, one fresh letter per
/// block; the < k leftover edges per vertex are deleted. The result keeps
/// at least |E(Q)| - n*(k-1) edges and every letter occurs exactly k times.
LetteredHypergraph letter_transform(const Hypergraph& q, int k);

/// deg(z) over d-subsets z: the number of edges consisting of z plus one
/// vertex greater than all of z. Every edge is counted for exactly one z
/// (its d least vertices), so the values sum to |E(Q)|. Requires
/// uniformity >= 2 (ArityTooSmall).
std::map<Edge, int> low_degree_profile(const Hypergraph& q);

/// All intermediate quantities of the block-multiplicity counting chain,
/// with one verdict per inequality. Exact integers throughout.
struct Lemma2Audit {
    int n = 0, d = 0, t = 0;
    int r = 0;  // distinct letters
    int k = 0;  // common multiplicity
    BigInt ex_value;
    std::map<Edge, int> deg_profile;
    long long p = 0;              // #{z : deg(z) > 0}
    BigInt deg_sum;               // sum of deg(z); equals k*r
    BigInt tuple_count;           // sum of C(deg(z), t)
    BigInt pigeonhole_bound;      // C(r, t) * ex_value
    BigInt chain_lhs;             // (t-1) * p
    BigInt chain_rhs;             // k*r - sum_{deg >= t} (deg - t + 1)
    BigInt p_cap;                 // C(n, d)
    bool kht_free = false;

    bool partition_ok = false;    // deg_sum == |E|
    bool pigeonhole_ok = false;   // tuple_count <= pigeonhole_bound
    bool chain_ok = false;        // chain_lhs >= chain_rhs
    bool p_ok = false;            // p <= p_cap

    bool all_ok() const { return partition_ok && pigeonhole_ok && chain_ok && p_ok; }
};

/// Audits one lettered (d+1)-uniform instance against a d-uniform H and a
/// caller-supplied ex_d(n, H) value (exact or upper). Preconditions: the
/// lettering validates, every letter occurs exactly k times
/// (NotUniformMultiplicity), and L.base has uniformity H.d + 1
/// (ArityMismatch). When require_kht_free is set and a K_{H,t} copy
/// exists, NotKHtFree is thrown carrying the witness map.
Lemma2Audit lemma2_audit(const LetteredHypergraph& l, const Hypergraph& h, int t,
                         const BigInt& ex_value, bool require_kht_free = true);

}  // namespace turan
