#include "turanwb/lettering.hpp"

#include <algorithm>
#include <sstream>

#include "turanwb/errors.hpp"

namespace turan {

int LetteredHypergraph::letter_count() const {
    int r = 0;
    for (int l : letters) r = std::max(r, l + 1);
    return r;
}

std::vector<int> LetteredHypergraph::multiplicities() const {
    std::vector<int> mult(letter_count(), 0);
    for (int l : letters)
        if (l >= 0) ++mult[l];
    return mult;
}

std::string LetteredHypergraph::to_text() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void LetteredHypergraph::write(std::ostream& os) const {
    base.write(os);
    for (std::size_t i = 0; i < letters.size(); ++i) os << i << ' ' << letters[i] << '\n';
}

LetteredHypergraph LetteredHypergraph::parse(std::istream& is) {
    LetteredHypergraph l;
    l.base = Hypergraph::parse(is);
    l.letters.assign(l.base.edge_count(), -1);
    for (std::size_t i = 0; i < l.base.edge_count(); ++i) {
        long long idx = 0, letter = 0;
        if (!(is >> idx >> letter)) throw ParseError("lettering line truncated");
        if (idx < 0 || idx >= static_cast<long long>(l.base.edge_count()))
            throw ParseError("lettering: edge index out of range");
        if (letter < 0) throw ParseError("lettering: negative letter id");
        if (l.letters[static_cast<std::size_t>(idx)] != -1)
            throw ParseError("lettering: edge lettered twice");
        l.letters[static_cast<std::size_t>(idx)] = static_cast<int>(letter);
    }
    return l;
}

LetteredHypergraph LetteredHypergraph::from_text(const std::string& s) {
    std::istringstream is(s);
    return parse(is);
}

LetteringReport validate_lettering(const LetteredHypergraph& l, std::optional<int> required_k) {
    LetteringReport rep;
    const auto& edges = l.base.edges();
    if (l.letters.size() != edges.size()) {
        rep.violations.push_back("letter list size differs from edge count");
        rep.dense_ids_ok = false;
        return rep;
    }
    int max_id = -1;
    for (int id : l.letters) max_id = std::max(max_id, id);
    rep.letter_count = max_id + 1;
    rep.multiplicities.assign(rep.letter_count, 0);
    std::vector<int> greatest(rep.letter_count, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int id = l.letters[i];
        if (id < 0) {
            rep.violations.push_back("edge " + std::to_string(i) + " unlettered");
            rep.dense_ids_ok = false;
            continue;
        }
        ++rep.multiplicities[id];
        int g = edges[i].back();
        if (greatest[id] == -1) {
            greatest[id] = g;
        } else if (greatest[id] != g) {
            rep.greatest_vertex_rule_ok = false;
            rep.violations.push_back("letter " + std::to_string(id) +
                                     " spans edges with different greatest vertices");
        }
    }
    for (int id = 0; id < rep.letter_count; ++id)
        if (rep.multiplicities[id] == 0) {
            rep.dense_ids_ok = false;
            rep.violations.push_back("letter id " + std::to_string(id) + " unused");
        }
    if (!rep.multiplicities.empty()) {
        int k0 = rep.multiplicities[0];
        if (std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(),
                        [&](int m) { return m == k0; }))
            rep.uniform_multiplicity = k0;
    }
    if (required_k)
        for (int id = 0; id < rep.letter_count; ++id)
            if (rep.multiplicities[id] < *required_k) rep.letters_below_k.push_back(id);
    return rep;
}

LetteredHypergraph letter_transform(const Hypergraph& q, int k) {
    if (k < 1) throw InvalidArgument("letter_transform: k must be >= 1");
    // Edges grouped by greatest vertex. Within a group the canonical edge
    // order is already lexicographic; ties in the procedure are broken that
    // way, which makes the transform deterministic.
    std::vector<std::vector<int>> by_greatest(q.vertex_count());
    for (int i = 0; i < static_cast<int>(q.edge_count()); ++i)
        by_greatest[q.edges()[i].back()].push_back(i);

    std::vector<Edge> kept;
    std::vector<int> kept_letters;
    int next_letter = 0;
    for (int v = q.vertex_count() - 1; v >= 0; --v) {
        const auto& group = by_greatest[v];
        std::size_t blocks = group.size() / static_cast<std::size_t>(k);
        for (std::size_t b = 0; b < blocks; ++b) {
            for (int j = 0; j < k; ++j) {
                kept.push_back(q.edges()[group[b * k + j]]);
                kept_letters.push_back(next_letter);
            }
            ++next_letter;
        }
        // the remaining group.size() % k edges are deleted
    }
    // Canonical edge order in the result; letters are carried over by edge.
    std::vector<std::pair<Edge, int>> paired;
    paired.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) paired.emplace_back(kept[i], kept_letters[i]);
    std::sort(paired.begin(), paired.end());
    std::vector<Edge> edges;
    std::vector<int> letters;
    for (auto& [e, l] : paired) {
        edges.push_back(std::move(e));
        letters.push_back(l);
    }
    LetteredHypergraph out;
    out.base = Hypergraph(q.vertex_count(), q.uniformity(), std::move(edges));
    out.letters = std::move(letters);
    out.k = k;
    return out;
}

std::map<Edge, int> low_degree_profile(const Hypergraph& q) {
    if (q.uniformity() < 2) throw ArityTooSmall("low_degree_profile: uniformity must be >= 2");
    std::map<Edge, int> profile;
    for (const Edge& e : q.edges()) {
        Edge z(e.begin(), e.end() - 1);  // the d least vertices
        ++profile[z];
    }
    return profile;
}

Lemma2Audit lemma2_audit(const LetteredHypergraph& l, const Hypergraph& h, int t,
                         const BigInt& ex_value, bool require_kht_free) {
    if (t < 1) throw InvalidArgument("lemma2_audit: t must be >= 1");
    if (l.base.uniformity() != h.uniformity() + 1)
        throw ArityMismatch("lemma2_audit: lettered instance must be (d+1)-uniform for d = H.d");
    auto rep = validate_lettering(l);
    if (!rep.ok()) throw InvalidArgument("lemma2_audit: lettering invalid: " + rep.violations.front());

    Lemma2Audit audit;
    audit.n = l.base.vertex_count();
    audit.d = h.uniformity();
    audit.t = t;
    audit.r = rep.letter_count;
    audit.ex_value = ex_value;
    if (audit.r > 0) {
        if (!rep.uniform_multiplicity)
            throw NotUniformMultiplicity("lemma2_audit: letters have differing multiplicities");
        audit.k = *rep.uniform_multiplicity;
    }

    // Freeness of the underlying hypergraph with respect to K_{H,t}.
    Hypergraph kht = build_k_h_t(h, t);
    auto copy = find_embedding(l.base, kht);
    audit.kht_free = !copy.has_value();
    if (require_kht_free && copy)
        throw NotKHtFree("lemma2_audit: instance is not K_{H,t}-free", *copy);

    audit.deg_profile = low_degree_profile(l.base);
    audit.p = static_cast<long long>(audit.deg_profile.size());
    BigInt surplus = 0;  // sum over deg >= t of (deg - t + 1)
    for (const auto& [z, deg] : audit.deg_profile) {
        audit.deg_sum += deg;
        audit.tuple_count += binom(deg, t);
        if (deg >= t) surplus += deg - t + 1;
    }
    audit.pigeonhole_bound = binom(audit.r, t) * ex_value;
    audit.chain_lhs = BigInt(t - 1) * audit.p;
    audit.chain_rhs = BigInt(audit.k) * audit.r - surplus;
    audit.p_cap = binom(audit.n, audit.d);

    audit.partition_ok = audit.deg_sum == BigInt(l.base.edge_count());
    audit.pigeonhole_ok = audit.tuple_count <= audit.pigeonhole_bound;
    audit.chain_ok = audit.chain_lhs >= audit.chain_rhs;
    audit.p_ok = BigInt(audit.p) <= audit.p_cap;
    return audit;
}

}  // namespace turan
