#pragma once

// Independent oracles for the exact searches and containment routines.
// These deliberately use plain enumeration, separate from the pruned
// backtracking in the library, so the two routes can cross-check.

#include <vector>

#include "turanwb/hypergraph.hpp"
#include "turanwb/matrix01.hpp"

namespace turan::oracle {

// all-injections containment check
bool contains_bruteforce(const Hypergraph& g, const Hypergraph& h);

// enumerate every edge subset of the full d-uniform universe on n vertices
long long ex_bruteforce(int n, const Hypergraph& h);

// enumerate every H-free subset and, per greatest-vertex group, every set
// partition into classes of size >= k
long long f_bruteforce(int n, int k, const Hypergraph& h);

// maximum class count over all partitions of g elements into classes of
// size >= k; -1 if no such partition exists
int max_letters_partition(int g, int k);

// full per-dimension increasing-map enumeration
bool mat_contains_bruteforce(const Matrix01& a, const Matrix01& b);

// enumerate all 2^(n^d) cell sets (d = q.dim())
long long mat_ex_bruteforce(int n, const Matrix01& q);

// maximum ones of an n x n 0-1 matrix with no two rows sharing two columns;
// row-by-row search with pairwise pruning
long long zarankiewicz_rowpruned(int n);

}  // namespace turan::oracle
