#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace turan {

using Vertex = int;
using Edge = std::vector<Vertex>;  // vertices sorted ascending

/// Ordered d-uniform hypergraph on vertices 0..n-1. The vertex ordering is
/// the integer order; no separate permutation object. Edges are stored
/// sorted ascending and the edge list is kept lexicographic, so equal
/// hypergraphs compare and serialize identically.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and canonicalizes. Throws WrongArity, VertexOutOfRange,
    /// DuplicateEdge.
    Hypergraph(int n, int d, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return d_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Membership of a sorted d-subset in the canonical edge list.
    bool has_edge(const Edge& sorted_edge) const;

    /// Edge indices incident to each vertex.
    const std::vector<std::vector<int>>& incidence() const { return incident_; }
    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && d_ == o.d_ && edges_ == o.edges_;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

    // Text format: header line "d n m", then m lines of d vertex indices.
    std::string to_text() const;
    void write(std::ostream& os) const;
    static Hypergraph parse(std::istream& is);          // throws ParseError
    static Hypergraph from_text(const std::string& s);  // throws ParseError

    std::string digest() const;  // fnv1a64 hex of to_text()

private:
    int n_ = 0;
    int d_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

Hypergraph make_hypergraph(int n, int d, std::vector<Edge> edges);

/// Unordered sub-hypergraph containment: an injection V(h) -> V(g) mapping
/// every edge of h onto an edge of g. Isolated vertices of h only require
/// room, i.e. g.vertex_count() >= h.vertex_count(). Throws ArityMismatch.
bool contains(const Hypergraph& g, const Hypergraph& h);

/// As contains(), but returns the injection (index = h vertex, value = g
/// vertex, -1 for vertices placed on unused slots arbitrarily).
std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& g, const Hypergraph& h);

/// Incremental variant for branch-and-bound: does the edge set `g_edges`
/// (on g_n vertices, all of uniformity h.uniformity()) contain a copy of h
/// that uses the pinned edge? The pinned edge must be a member of g_edges.
bool contains_with_edge(const std::vector<Edge>& g_edges, int g_n, const Hypergraph& h,
                        const Edge& pinned);

/// (d+1)-uniform K_{H,t}: t new vertices appended after V(H) (they become
/// the t greatest), every edge e of H replaced by {e + {v_i} : i < t}.
/// Requires t >= 1 and at least one edge.
Hypergraph build_k_h_t(const Hypergraph& h, int t);

/// The s-special-vertices generalization: for each t-subset T of the s
/// special vertices, r fresh disjoint copies of H, each copy edge e
/// replaced by {e + {u} : u in T}. Special vertices are placed last, so
/// build_k_h_t_s_r(H, t, t, 1) coincides with build_k_h_t(H, t).
/// Requires s >= t >= 2 (ParameterOrder when s < t), r >= 1, >= 1 edge.
Hypergraph build_k_h_t_s_r(const Hypergraph& h, int t, int s, int r);

/// d-uniform matching with s pairwise-disjoint edges on d*s vertices.
Hypergraph matching(int d, int s);

/// Isomorphism of unordered hypergraphs by exhaustive relabeling; supported
/// for vertex counts <= 10 (throws Unsupported above).
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace turan
