#include "turanwb/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "turanwb/errors.hpp"
#include "turanwb/numbers.hpp"

namespace turan {

Hypergraph::Hypergraph(int n, int d, std::vector<Edge> edges) : n_(n), d_(d) {
    if (n < 0) throw InvalidArgument("vertex count must be >= 0");
    if (d < 1) throw InvalidArgument("uniformity must be >= 1");
    for (Edge& e : edges) {
        if (static_cast<int>(e.size()) != d)
            throw WrongArity("edge of size " + std::to_string(e.size()) +
                             " in a " + std::to_string(d) + "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw WrongArity("edge with repeated vertex");
        if (!e.empty() && (e.front() < 0 || e.back() >= n))
            throw VertexOutOfRange("edge vertex outside 0.." + std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DuplicateEdge("duplicate edge in input");
    edges_ = std::move(edges);
    incident_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        for (Vertex v : edges_[i]) incident_[v].push_back(i);
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

std::string Hypergraph::to_text() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void Hypergraph::write(std::ostream& os) const {
    os << d_ << ' ' << n_ << ' ' << edges_.size() << '\n';
    for (const Edge& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
}

Hypergraph Hypergraph::parse(std::istream& is) {
    long long d = 0, n = 0, m = 0;
    if (!(is >> d >> n >> m)) throw ParseError("hypergraph header: expected 'd n m'");
    if (d < 1 || n < 0 || m < 0) throw ParseError("hypergraph header: bad values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        Edge e(static_cast<std::size_t>(d));
        for (auto& v : e)
            if (!(is >> v)) throw ParseError("hypergraph edge " + std::to_string(i) + ": truncated");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(static_cast<int>(n), static_cast<int>(d), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
}

Hypergraph Hypergraph::from_text(const std::string& s) {
    std::istringstream is(s);
    return parse(is);
}

std::string Hypergraph::digest() const { return fnv1a64_hex(to_text()); }

Hypergraph make_hypergraph(int n, int d, std::vector<Edge> edges) {
    return Hypergraph(n, d, std::move(edges));
}

namespace {

// Backtracking embedding of a pattern into a host edge list. Pattern edges
// are processed in a connectivity-first order; vertices already mapped pin
// the candidate host edges, unmapped vertices are assigned to the free
// slots in every bijection. Degree pruning: a pattern vertex may only land
// on a host vertex of at least its degree.
class Embedder {
public:
    Embedder(const std::vector<Edge>& host_edges, int host_n, const Hypergraph& pat)
        : host_(host_edges), host_n_(host_n), pat_(pat) {
        host_deg_.assign(host_n_, 0);
        host_inc_.assign(host_n_, {});
        for (int i = 0; i < static_cast<int>(host_.size()); ++i)
            for (Vertex v : host_[i]) {
                ++host_deg_[v];
                host_inc_[v].push_back(i);
            }
        phi_.assign(pat_.vertex_count(), -1);
        used_.assign(host_n_, 0);
    }

    // Embedding with pattern edge `seed` mapped onto host edge `pinned`
    // (all bijections tried). seed < 0 means unconstrained.
    std::optional<std::vector<Vertex>> run(int seed, const Edge* pinned) {
        if (pat_.vertex_count() > host_n_) return std::nullopt;
        if (pat_.edge_count() > host_.size()) return std::nullopt;
        if (pat_.edge_count() == 0) return complete_map();
        order_ = connectivity_order(seed < 0 ? 0 : seed);
        if (seed < 0) {
            if (dfs(0)) return complete_map();
            return std::nullopt;
        }
        // Map the seed edge onto `pinned` in every injective way, then
        // continue with the remaining edges.
        const Edge& se = pat_.edges()[seed];
        std::vector<Vertex> slots(*pinned);
        std::sort(slots.begin(), slots.end());
        do {
            bool ok = true;
            for (std::size_t i = 0; i < se.size() && ok; ++i)
                ok = host_deg_[slots[i]] >= pat_.degree(se[i]);
            if (!ok) continue;
            for (std::size_t i = 0; i < se.size(); ++i) {
                phi_[se[i]] = slots[i];
                used_[slots[i]] = 1;
            }
            if (dfs(1)) return complete_map();
            for (std::size_t i = 0; i < se.size(); ++i) {
                used_[slots[i]] = 0;
                phi_[se[i]] = -1;
            }
        } while (std::next_permutation(slots.begin(), slots.end()));
        return std::nullopt;
    }

private:
    std::vector<int> connectivity_order(int first) {
        int m = static_cast<int>(pat_.edge_count());
        std::vector<int> order;
        std::vector<char> done(m, 0), covered(pat_.vertex_count(), 0);
        order.push_back(first);
        done[first] = 1;
        for (Vertex v : pat_.edges()[first]) covered[v] = 1;
        while (static_cast<int>(order.size()) < m) {
            int best = -1, best_shared = -1;
            for (int i = 0; i < m; ++i) {
                if (done[i]) continue;
                int shared = 0;
                for (Vertex v : pat_.edges()[i]) shared += covered[v];
                if (shared > best_shared) {
                    best_shared = shared;
                    best = i;
                }
            }
            order.push_back(best);
            done[best] = 1;
            for (Vertex v : pat_.edges()[best]) covered[v] = 1;
        }
        return order;
    }

    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Edge& e = pat_.edges()[order_[depth]];
        int anchor = -1;  // some already-mapped vertex of e
        for (Vertex v : e)
            if (phi_[v] >= 0) {
                anchor = v;
                break;
            }
        if (anchor >= 0) {
            for (int idx : host_inc_[phi_[anchor]])
                if (try_edge(e, host_[idx], depth)) return true;
        } else {
            for (const Edge& he : host_)
                if (try_edge(e, he, depth)) return true;
        }
        return false;
    }

    bool try_edge(const Edge& e, const Edge& he, std::size_t depth) {
        // every mapped vertex of e must land inside he
        std::vector<Vertex> slots(he.begin(), he.end());
        std::vector<Vertex> need;
        for (Vertex v : e) {
            if (phi_[v] >= 0) {
                auto it = std::find(slots.begin(), slots.end(), phi_[v]);
                if (it == slots.end()) return false;
                slots.erase(it);
            } else {
                need.push_back(v);
            }
        }
        return assign(need, slots, 0, depth);
    }

    bool assign(std::vector<Vertex>& need, std::vector<Vertex>& slots, std::size_t i,
                std::size_t depth) {
        if (i == need.size()) return dfs(depth + 1);
        Vertex v = need[i];
        for (std::size_t j = i; j < slots.size(); ++j) {
            Vertex w = slots[j];
            if (used_[w] || host_deg_[w] < pat_.degree(v)) continue;
            std::swap(slots[i], slots[j]);
            phi_[v] = w;
            used_[w] = 1;
            if (assign(need, slots, i + 1, depth)) return true;
            used_[w] = 0;
            phi_[v] = -1;
            std::swap(slots[i], slots[j]);
        }
        return false;
    }

    // Extend phi over isolated pattern vertices using the lowest unused
    // host vertices, producing a full injection.
    std::optional<std::vector<Vertex>> complete_map() {
        std::vector<Vertex> out(phi_);
        int next = 0;
        for (int v = 0; v < pat_.vertex_count(); ++v) {
            if (out[v] >= 0) continue;
            while (next < host_n_ && used_[next]) ++next;
            if (next >= host_n_) return std::nullopt;  // unreachable given the size check
            used_[next] = 1;
            out[v] = next;
        }
        return out;
    }

    const std::vector<Edge>& host_;
    int host_n_;
    const Hypergraph& pat_;
    std::vector<int> host_deg_;
    std::vector<std::vector<int>> host_inc_;
    std::vector<Vertex> phi_;
    std::vector<char> used_;
    std::vector<int> order_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& g, const Hypergraph& h) {
    if (g.uniformity() != h.uniformity())
        throw ArityMismatch("containment between different uniformities");
    Embedder em(g.edges(), g.vertex_count(), h);
    return em.run(-1, nullptr);
}

bool contains(const Hypergraph& g, const Hypergraph& h) {
    return find_embedding(g, h).has_value();
}

bool contains_with_edge(const std::vector<Edge>& g_edges, int g_n, const Hypergraph& h,
                        const Edge& pinned) {
    if (h.edge_count() == 0) return h.vertex_count() <= g_n;
    for (int seed = 0; seed < static_cast<int>(h.edge_count()); ++seed) {
        Embedder em(g_edges, g_n, h);
        if (em.run(seed, &pinned)) return true;
    }
    return false;
}

Hypergraph build_k_h_t(const Hypergraph& h, int t) {
    if (t < 1) throw InvalidArgument("build_k_h_t: t must be >= 1");
    if (h.edge_count() == 0) throw InvalidArgument("build_k_h_t: H needs at least one edge");
    std::vector<Edge> edges;
    edges.reserve(h.edge_count() * static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        for (Edge e : h.edges()) {
            e.push_back(h.vertex_count() + i);
            edges.push_back(std::move(e));
        }
    return Hypergraph(h.vertex_count() + t, h.uniformity() + 1, std::move(edges));
}

Hypergraph build_k_h_t_s_r(const Hypergraph& h, int t, int s, int r) {
    if (s < t) throw ParameterOrder("build_k_h_t_s_r: requires s >= t");
    if (t < 2) throw InvalidArgument("build_k_h_t_s_r: t must be >= 2");
    if (r < 1) throw InvalidArgument("build_k_h_t_s_r: r must be >= 1");
    if (h.edge_count() == 0) throw InvalidArgument("build_k_h_t_s_r: H needs at least one edge");

    BigInt subsets = binom(s, t);
    BigInt copies_big = subsets * r;
    BigInt verts = copies_big * h.vertex_count() + s;
    if (verts > 1000000) throw Unsupported("build_k_h_t_s_r: construction too large");
    const long long num_copies = copies_big.convert_to<long long>();
    const int base_special = static_cast<int>(num_copies) * h.vertex_count();

    // Enumerate t-subsets of the special vertices in lexicographic order;
    // copy blocks are laid out subset-major, then by copy index.
    std::vector<Edge> edges;
    std::vector<int> subset(t);
    for (int i = 0; i < t; ++i) subset[i] = i;
    long long copy = 0;
    while (true) {
        for (int j = 0; j < r; ++j, ++copy) {
            const int off = static_cast<int>(copy) * h.vertex_count();
            for (const Edge& e : h.edges())
                for (int u : subset) {
                    Edge ne;
                    ne.reserve(e.size() + 1);
                    for (Vertex v : e) ne.push_back(v + off);
                    ne.push_back(base_special + u);
                    edges.push_back(std::move(ne));
                }
        }
        // next t-subset of {0..s-1}
        int i = t - 1;
        while (i >= 0 && subset[i] == s - t + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
    }
    const int n = base_special + s;
    return Hypergraph(n, h.uniformity() + 1, std::move(edges));
}

Hypergraph matching(int d, int s) {
    if (d < 1 || s < 1) throw InvalidArgument("matching: requires d >= 1, s >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        Edge e(static_cast<std::size_t>(d));
        std::iota(e.begin(), e.end(), i * d);
        edges.push_back(std::move(e));
    }
    return Hypergraph(d * s, d, std::move(edges));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    if (a.vertex_count() > 10)
        throw Unsupported("isomorphism testing supported for <= 10 vertices");
    // equal vertex counts: an embedding of a into b is a bijection, and with
    // equal edge counts it maps E(a) onto E(b)
    return contains(b, a);
}

}  // namespace turan
