#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

using Coord = std::vector<int>;

/// d-dimensional 0-1 matrix: side lengths plus the set of one-cells, kept
/// duplicate-free and in lexicographic order.
class Matrix01 {
public:
    Matrix01() = default;
    Matrix01(std::vector<int> dims, std::vector<Coord> ones);  // validates + canonicalizes

    int dim() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Coord>& ones() const { return ones_; }
    std::size_t ones_count() const { return ones_.size(); }
    bool is_square() const;

    bool operator==(const Matrix01& o) const { return dims_ == o.dims_ && ones_ == o.ones_; }
    bool operator!=(const Matrix01& o) const { return !(*this == o); }

    // Text format: dimensionality, side lengths, then one coordinate tuple
    // per line until end of input.
    std::string to_text() const;
    void write(std::ostream& os) const;
    static Matrix01 parse(std::istream& is);
    static Matrix01 from_text(const std::string& s);
    std::string digest() const;

private:
    std::vector<int> dims_;
    std::vector<Coord> ones_;
};

Matrix01 make_matrix(std::vector<int> dims, std::vector<Coord> ones);

/// All-ones matrix of the given side lengths.
Matrix01 all_ones(std::vector<int> dims);

/// Pattern containment: strictly increasing index maps, one per dimension,
/// sending every one of b onto a one of a. Throws DimensionMismatch on
/// different dimensionality.
bool mat_contains(const Matrix01& a, const Matrix01& b);

/// Incremental variant: does the cell set `a_ones` (sorted, within `a_dims`)
/// contain a copy of q that uses the pinned cell? Pinned must be in a_ones.
bool mat_contains_with_cell(const std::vector<Coord>& a_ones, const std::vector<int>& a_dims,
                            const Matrix01& q, const Coord& pinned);

/// Q_{P,t}: t copies of p stacked with the same orientation along a new
/// trailing dimension. Requires t >= 1.
Matrix01 stack(const Matrix01& p, int t);

/// Incidence-of-polar-lines matrix of the projective plane over the
/// q-element field: side q^2+q+1, a one at (x, y) iff the standard dot
/// product of the representative vectors vanishes. Avoids the 2x2 all-ones
/// pattern; (q+1)(q^2+q+1) ones. Supported q: 2, 3, 4, 5 (UnsupportedOrder
/// otherwise); q = 4 uses a fixed GF(4) table.
Matrix01 polarity_construction(int q);

/// Places a square two-dimensional m in coordinates (1, d+1) of a
/// (d+1)-dimensional side-n matrix and replicates it over every choice of
/// the intermediate coordinates: one at (i_1..i_{d+1}) iff m has a one at
/// (i_1, i_{d+1}). Requires m square of side n (NotSquare / InvalidArgument)
/// and d >= 2. Avoidance of any particular stacked pattern is a property of
/// m and must be checked computationally, never assumed.
Matrix01 inflate(const Matrix01& m, int d, int n);

/// 0/1 grid rendering of a two-dimensional matrix (rows = first dimension).
std::string render_grid(const Matrix01& m);

}  // namespace turan
