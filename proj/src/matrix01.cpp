#include "turanwb/matrix01.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "search_engine.hpp"
#include "turanwb/errors.hpp"
#include "turanwb/extremal.hpp"
#include "turanwb/numbers.hpp"

namespace turan {

Matrix01::Matrix01(std::vector<int> dims, std::vector<Coord> ones) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidArgument("matrix needs at least one dimension");
    for (int s : dims_)
        if (s < 0) throw InvalidArgument("negative side length");
    for (Coord& c : ones) {
        if (c.size() != dims_.size())
            throw DimensionMismatch("coordinate tuple of wrong length");
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] < 0 || c[j] >= dims_[j])
                throw VertexOutOfRange("coordinate outside matrix bounds");
    }
    std::sort(ones.begin(), ones.end());
    if (std::adjacent_find(ones.begin(), ones.end()) != ones.end())
        throw DuplicateEdge("duplicate one-cell");
    ones_ = std::move(ones);
}

bool Matrix01::is_square() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](int s) { return s == dims_[0]; });
}

std::string Matrix01::to_text() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void Matrix01::write(std::ostream& os) const {
    os << dims_.size() << '\n';
    for (std::size_t j = 0; j < dims_.size(); ++j) os << (j ? " " : "") << dims_[j];
    os << '\n';
    for (const Coord& c : ones_) {
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
        os << '\n';
    }
}

Matrix01 Matrix01::parse(std::istream& is) {
    long long d = 0;
    if (!(is >> d)) throw ParseError("matrix header: expected dimensionality");
    if (d < 1 || d > 64) throw ParseError("matrix header: bad dimensionality");
    std::vector<int> dims(static_cast<std::size_t>(d));
    for (auto& s : dims)
        if (!(is >> s)) throw ParseError("matrix header: truncated side lengths");
    std::vector<Coord> ones;
    for (;;) {
        Coord c(static_cast<std::size_t>(d));
        if (!(is >> c[0])) break;  // end of input
        for (long long j = 1; j < d; ++j)
            if (!(is >> c[static_cast<std::size_t>(j)])) throw ParseError("matrix one-cell truncated");
        ones.push_back(std::move(c));
    }
    try {
        return Matrix01(std::move(dims), std::move(ones));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid matrix: ") + e.what());
    }
}

Matrix01 Matrix01::from_text(const std::string& s) {
    std::istringstream is(s);
    return parse(is);
}

std::string Matrix01::digest() const { return fnv1a64_hex(to_text()); }

Matrix01 make_matrix(std::vector<int> dims, std::vector<Coord> ones) {
    return Matrix01(std::move(dims), std::move(ones));
}

Matrix01 all_ones(std::vector<int> dims) {
    std::vector<Coord> ones;
    Coord cur(dims.size(), 0);
    for (int s : dims)
        if (s == 0) return Matrix01(std::move(dims), {});
    for (;;) {
        ones.push_back(cur);
        int j = static_cast<int>(dims.size()) - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == dims[static_cast<std::size_t>(j)] - 1) {
            cur[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
    }
    return Matrix01(std::move(dims), std::move(ones));
}

namespace {

// Backtracking over per-dimension strictly increasing index maps, assigned
// on the indices the pattern actually uses. Room conditions guarantee the
// map extends to the full index range; after each dimension is fixed every
// pattern one must still match some host one on the assigned prefix.
class MatEmbedder {
public:
    MatEmbedder(const std::vector<Coord>& host_ones, const std::vector<int>& host_dims,
                const Matrix01& pat)
        : host_(host_ones), host_dims_(host_dims), pat_(pat) {
        const int d = pat_.dim();
        used_.resize(static_cast<std::size_t>(d));
        for (const Coord& c : pat_.ones())
            for (int j = 0; j < d; ++j) used_[static_cast<std::size_t>(j)].push_back(c[static_cast<std::size_t>(j)]);
        for (auto& u : used_) {
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
        }
        fmap_.resize(static_cast<std::size_t>(d));
    }

    // pin: host cell that pattern one `pin_one` must land on (nullptr = none)
    bool run(const Coord* pin, int pin_one) {
        pin_ = pin;
        pin_one_ = pin_one;
        for (int j = 0; j < pat_.dim(); ++j)
            if (pat_.dims()[static_cast<std::size_t>(j)] > host_dims_[static_cast<std::size_t>(j)]) return false;
        if (pat_.ones().empty()) return true;
        if (pat_.ones().size() > host_.size()) return false;
        return dfs_dim(0);
    }

private:
    bool dfs_dim(int j) {
        if (j == pat_.dim()) return true;
        fmap_[static_cast<std::size_t>(j)].assign(used_[static_cast<std::size_t>(j)].size(), -1);
        return enum_maps(j, 0, -1);
    }

    bool enum_maps(int j, std::size_t pos, int prev_w) {
        const auto& u = used_[static_cast<std::size_t>(j)];
        if (pos == u.size()) {
            if (!prefix_ok(j)) return false;
            return dfs_dim(j + 1);
        }
        const int b_side = pat_.dims()[static_cast<std::size_t>(j)];
        const int a_side = host_dims_[static_cast<std::size_t>(j)];
        const int ui = u[pos];
        int lo = pos == 0 ? ui : prev_w + (ui - u[pos - 1]);
        int hi = a_side - 1 - (b_side - 1 - ui);
        if (pin_ && pin_one_ >= 0 && pat_.ones()[static_cast<std::size_t>(pin_one_)][static_cast<std::size_t>(j)] == ui) {
            int w = (*pin_)[static_cast<std::size_t>(j)];
            if (w < lo || w > hi) return false;
            fmap_[static_cast<std::size_t>(j)][pos] = w;
            return enum_maps(j, pos + 1, w);
        }
        for (int w = lo; w <= hi; ++w) {
            fmap_[static_cast<std::size_t>(j)][pos] = w;
            if (enum_maps(j, pos + 1, w)) return true;
        }
        return false;
    }

    int image(int j, int idx) const {
        const auto& u = used_[static_cast<std::size_t>(j)];
        auto it = std::lower_bound(u.begin(), u.end(), idx);
        return fmap_[static_cast<std::size_t>(j)][static_cast<std::size_t>(it - u.begin())];
    }

    // every pattern one must match some host one on dimensions 0..j
    bool prefix_ok(int j) {
        for (const Coord& b : pat_.ones()) {
            bool found = false;
            for (const Coord& a : host_) {
                bool ok = true;
                for (int jj = 0; jj <= j && ok; ++jj)
                    ok = a[static_cast<std::size_t>(jj)] == image(jj, b[static_cast<std::size_t>(jj)]);
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    const std::vector<Coord>& host_;
    const std::vector<int>& host_dims_;
    const Matrix01& pat_;
    std::vector<std::vector<int>> used_;
    std::vector<std::vector<int>> fmap_;
    const Coord* pin_ = nullptr;
    int pin_one_ = -1;
};

}  // namespace

bool mat_contains(const Matrix01& a, const Matrix01& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("containment between different dimensionalities");
    MatEmbedder em(a.ones(), a.dims(), b);
    return em.run(nullptr, -1);
}

bool mat_contains_with_cell(const std::vector<Coord>& a_ones, const std::vector<int>& a_dims,
                            const Matrix01& q, const Coord& pinned) {
    if (q.ones().empty()) return true;
    for (int i = 0; i < static_cast<int>(q.ones().size()); ++i) {
        MatEmbedder em(a_ones, a_dims, q);
        if (em.run(&pinned, i)) return true;
    }
    return false;
}

Matrix01 stack(const Matrix01& p, int t) {
    if (t < 1) throw InvalidArgument("stack: t must be >= 1");
    std::vector<int> dims = p.dims();
    dims.push_back(t);
    std::vector<Coord> ones;
    ones.reserve(p.ones_count() * static_cast<std::size_t>(t));
    for (const Coord& c : p.ones())
        for (int j = 0; j < t; ++j) {
            Coord nc = c;
            nc.push_back(j);
            ones.push_back(std::move(nc));
        }
    return Matrix01(std::move(dims), std::move(ones));
}

namespace {

// GF(q) for q in {2,3,4,5}; q = 4 is the field of order 4 (not Z/4).
struct SmallField {
    int q;
    int add(int a, int b) const {
        if (q == 4) return a ^ b;
        return (a + b) % q;
    }
    int mul(int a, int b) const {
        if (q == 4) {
            static const int t[4][4] = {
                {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
            return t[a][b];
        }
        return (a * b) % q;
    }
};

}  // namespace

Matrix01 polarity_construction(int q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
        throw UnsupportedOrder("polarity_construction: q must be one of 2, 3, 4, 5");
    SmallField f{q};
    // projective points: (1,a,b), then (0,1,b), then (0,0,1)
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    const int n = static_cast<int>(pts.size());  // q^2+q+1

    std::vector<Coord> ones;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dot = 0;
            for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]));
            if (dot == 0) ones.push_back({i, j});
        }
    return Matrix01({n, n}, std::move(ones));
}

Matrix01 inflate(const Matrix01& m, int d, int n) {
    if (m.dim() != 2) throw InvalidArgument("inflate: base matrix must be two-dimensional");
    if (!m.is_square()) throw NotSquare("inflate: base matrix must be square");
    if (m.dims()[0] != n) throw InvalidArgument("inflate: side parameter must equal the base side");
    if (d < 2) throw InvalidArgument("inflate: target dimensionality must be >= 2");
    const int out_dim = d + 1;
    std::vector<int> dims(static_cast<std::size_t>(out_dim), n);

    std::vector<Coord> ones;
    // middle coordinates run over [0,n)^(d-1)
    std::vector<int> mid(static_cast<std::size_t>(d - 1), 0);
    for (;;) {
        for (const Coord& c : m.ones()) {
            Coord nc;
            nc.reserve(static_cast<std::size_t>(out_dim));
            nc.push_back(c[0]);
            for (int v : mid) nc.push_back(v);
            nc.push_back(c[1]);
            ones.push_back(std::move(nc));
        }
        int j = d - 2;
        while (j >= 0 && mid[static_cast<std::size_t>(j)] == n - 1) {
            mid[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++mid[static_cast<std::size_t>(j)];
    }
    return Matrix01(std::move(dims), std::move(ones));
}

std::string render_grid(const Matrix01& m) {
    if (m.dim() != 2) throw InvalidArgument("render_grid: two-dimensional matrices only");
    std::string out;
    std::vector<std::string> rows(static_cast<std::size_t>(m.dims()[0]),
                                  std::string(static_cast<std::size_t>(m.dims()[1]), '0'));
    for (const Coord& c : m.ones()) rows[static_cast<std::size_t>(c[0])][static_cast<std::size_t>(c[1])] = '1';
    for (const auto& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

namespace {

struct MatProblem {
    const Matrix01* q;
    const std::vector<Coord>* cells;
    std::vector<int> dims;
    std::vector<Coord> cur;

    std::size_t universe_size() const { return cells->size(); }
    long long value() const { return static_cast<long long>(cur.size()); }
    long long upper_bound(std::size_t i) const {
        return value() + static_cast<long long>(cells->size() - i);
    }
    bool try_include(std::size_t i) {
        cur.push_back((*cells)[i]);
        if (mat_contains_with_cell(cur, dims, *q, (*cells)[i])) {
            cur.pop_back();
            return false;
        }
        return true;
    }
    void undo_include(std::size_t) { cur.pop_back(); }
    void include_unchecked(std::size_t i) { cur.push_back((*cells)[i]); }
    // index maps are order-sensitive, so cells are not interchangeable
    bool root_symmetry_prune() const { return false; }
};

}  // namespace

ExtremalRecord mat_ex_exact(int n, const Matrix01& q, const SearchBudget& budget) {
    if (n < 0) throw InvalidArgument("mat_ex_exact: n must be >= 0");
    if (q.ones().empty()) throw InvalidArgument("mat_ex_exact: pattern needs at least one one");
    const int d = q.dim();
    BigInt cell_count = ipow(BigInt(n), static_cast<unsigned long long>(d));
    if (cell_count > 2000000) throw Unsupported("mat_ex_exact: cell universe too large");

    std::vector<int> dims(static_cast<std::size_t>(d), n);
    std::vector<Coord> cells;
    if (n > 0) {
        Coord cur(static_cast<std::size_t>(d), 0);
        for (;;) {
            cells.push_back(cur);
            int j = d - 1;
            while (j >= 0 && cur[static_cast<std::size_t>(j)] == n - 1) {
                cur[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++cur[static_cast<std::size_t>(j)];
        }
    }

    MatProblem proto{&q, &cells, dims, {}};
    detail::BnbRunner<MatProblem> runner(proto, budget);
    auto out = runner.run();

    ExtremalRecord rec;
    rec.kind = RecordKind::ex_matrix;
    rec.n = n;
    rec.d = d;
    rec.forbidden_digest = q.digest();
    rec.value = out.value;
    rec.exact = !out.stats.budget_exhausted;
    rec.stats = out.stats;
    std::vector<Coord> ones;
    ones.reserve(out.witness.size());
    for (std::size_t i : out.witness) ones.push_back(cells[i]);
    rec.witness = Matrix01(dims, std::move(ones));
    return rec;
}

}  // namespace turan
