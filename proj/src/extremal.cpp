#include "turanwb/extremal.hpp"

#include <algorithm>

#include "search_engine.hpp"
#include "turanwb/errors.hpp"

namespace turan {

const char* record_kind_name(RecordKind k) {
    switch (k) {
        case RecordKind::ex_hypergraph: return "ex_hypergraph";
        case RecordKind::f_lettered: return "f_lettered";
        case RecordKind::ex_matrix: return "ex_matrix";
    }
    return "?";
}

RecordKind record_kind_from_name(const std::string& s) {
    if (s == "ex_hypergraph") return RecordKind::ex_hypergraph;
    if (s == "f_lettered") return RecordKind::f_lettered;
    if (s == "ex_matrix") return RecordKind::ex_matrix;
    throw ParseError("unknown record kind: " + s);
}

std::vector<Edge> all_d_subsets(int n, int d) {
    std::vector<Edge> out;
    if (d > n) return out;
    Edge cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

void check_search_inputs(int n, const Hypergraph& h) {
    if (n < 0) throw InvalidArgument("search: n must be >= 0");
    if (h.edge_count() == 0) throw InvalidArgument("search: forbidden H needs at least one edge");
    if (binom(n, h.uniformity()) > 2000000)
        throw Unsupported("search: edge universe too large for exact search");
}

struct ExProblem {
    int n;
    const Hypergraph* h;
    const std::vector<Edge>* uni;
    std::vector<Edge> cur;

    std::size_t universe_size() const { return uni->size(); }
    long long value() const { return static_cast<long long>(cur.size()); }
    long long upper_bound(std::size_t i) const {
        return value() + static_cast<long long>(uni->size() - i);
    }
    bool try_include(std::size_t i) {
        cur.push_back((*uni)[i]);
        if (contains_with_edge(cur, n, *h, (*uni)[i])) {
            cur.pop_back();
            return false;
        }
        return true;
    }
    void undo_include(std::size_t) { cur.pop_back(); }
    void include_unchecked(std::size_t i) { cur.push_back((*uni)[i]); }
    // With no edge chosen all vertices are interchangeable, so some optimum
    // contains the lexicographically least edge; the root skip branch adds
    // nothing.
    bool root_symmetry_prune() const { return true; }
};

struct FProblem {
    int n, k;
    const Hypergraph* h;
    const std::vector<Edge>* uni;
    const std::vector<std::vector<int>>* suffix;  // suffix[i][v] = #remaining edges with greatest v
    std::vector<Edge> cur;
    std::vector<int> m_v;  // chosen edges per greatest vertex
    long long val = 0;

    std::size_t universe_size() const { return uni->size(); }
    long long value() const { return val; }
    long long upper_bound(std::size_t i) const {
        long long ub = 0;
        const auto& suf = (*suffix)[i];
        for (int v = 0; v < n; ++v) ub += (m_v[static_cast<std::size_t>(v)] + suf[static_cast<std::size_t>(v)]) / k;
        return ub;
    }
    bool try_include(std::size_t i) {
        cur.push_back((*uni)[i]);
        if (contains_with_edge(cur, n, *h, (*uni)[i])) {
            cur.pop_back();
            return false;
        }
        bump(i);
        return true;
    }
    void undo_include(std::size_t i) {
        int g = (*uni)[i].back();
        if (m_v[static_cast<std::size_t>(g)] % k == 0) --val;
        --m_v[static_cast<std::size_t>(g)];
        cur.pop_back();
    }
    void include_unchecked(std::size_t i) {
        cur.push_back((*uni)[i]);
        bump(i);
    }
    // The objective depends on the vertex ordering, which vertex relabeling
    // does not preserve; no symmetry pruning here.
    bool root_symmetry_prune() const { return false; }

private:
    void bump(std::size_t i) {
        int g = (*uni)[i].back();
        ++m_v[static_cast<std::size_t>(g)];
        if (m_v[static_cast<std::size_t>(g)] % k == 0) ++val;
    }
};

}  // namespace

ExtremalRecord ex_exact(int n, const Hypergraph& h, const SearchBudget& budget) {
    check_search_inputs(n, h);
    std::vector<Edge> uni = all_d_subsets(n, h.uniformity());

    ExProblem proto{n, &h, &uni, {}};
    detail::BnbRunner<ExProblem> runner(proto, budget);
    auto out = runner.run();

    ExtremalRecord rec;
    rec.kind = RecordKind::ex_hypergraph;
    rec.n = n;
    rec.d = h.uniformity();
    rec.forbidden_digest = h.digest();
    rec.value = out.value;
    rec.exact = !out.stats.budget_exhausted;
    rec.stats = out.stats;
    std::vector<Edge> edges;
    edges.reserve(out.witness.size());
    for (std::size_t i : out.witness) edges.push_back(uni[i]);
    rec.witness = Hypergraph(n, h.uniformity(), std::move(edges));
    return rec;
}

ExtremalRecord f_exact(int n, int k, const Hypergraph& h, const SearchBudget& budget) {
    check_search_inputs(n, h);
    if (k < 1) throw InvalidArgument("f_exact: k must be >= 1");
    std::vector<Edge> uni = all_d_subsets(n, h.uniformity());

    // suffix counts of candidate edges per greatest vertex, for the bound
    std::vector<std::vector<int>> suffix(uni.size() + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = uni.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1];
        ++suffix[i][static_cast<std::size_t>(uni[i].back())];
    }

    FProblem proto{n, k, &h, &uni, &suffix, {}, std::vector<int>(static_cast<std::size_t>(n), 0), 0};
    detail::BnbRunner<FProblem> runner(proto, budget);
    auto out = runner.run();

    ExtremalRecord rec;
    rec.kind = RecordKind::f_lettered;
    rec.n = n;
    rec.d = h.uniformity();
    rec.k = k;
    rec.forbidden_digest = h.digest();
    rec.value = out.value;
    rec.exact = !out.stats.budget_exhausted;
    rec.stats = out.stats;
    std::vector<Edge> edges;
    edges.reserve(out.witness.size());
    for (std::size_t i : out.witness) edges.push_back(uni[i]);
    // blocks of exactly k per greatest vertex; leftovers are dropped
    rec.witness = letter_transform(Hypergraph(n, h.uniformity(), std::move(edges)), k);
    return rec;
}

Lemma1Report verify_lemma1(int n, int k, const Hypergraph& h, const SearchBudget& budget) {
    if (k < 1) throw InvalidArgument("verify_lemma1: k must be >= 1");
    auto ex = ex_exact(n, h, budget);
    auto f = f_exact(n, k, h, budget);

    Lemma1Report rep;
    rep.n = n;
    rep.k = k;
    rep.d = h.uniformity();
    rep.ex_value = ex.value;
    rep.f_value = f.value;
    rep.rhs = static_cast<long long>(k) * (f.value + n);
    rep.inequality_ok = rep.ex_value <= rep.rhs;
    rep.exact = ex.exact && f.exact;

    const auto& witness = std::get<Hypergraph>(ex.witness);
    auto lettered = letter_transform(witness, k);
    rep.transform_letters = lettered.letter_count();
    rep.transform_ok = rep.transform_letters <= rep.f_value;
    return rep;
}

}  // namespace turan
