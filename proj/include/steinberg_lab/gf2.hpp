// Bit-packed linear algebra over F_2 and cochain-complex homology. All maps in
// the library are GF2Matrix values acting on column vectors; composition g*f
// applies f first. Everything is immutable after construction and therefore
// safe to share across threads.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace stlab {

class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    GF2Vector& operator^=(const GF2Vector& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool is_zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool operator==(const GF2Vector&) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static GF2Matrix identity(std::size_t n);
    static GF2Matrix from_rows(const std::vector<GF2Vector>& rows, std::size_t cols);
    static GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= m;
        else
            w_[r * wpr_ + (c >> 6)] &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        w_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    GF2Vector row(std::size_t r) const;
    void set_row(std::size_t r, const GF2Vector& v);
    void xor_row_into(std::size_t dst, std::size_t src);  // row dst ^= row src
    // row dst ^= src.row(src_row); matrices must share the column count
    void xor_row_from(std::size_t dst, const GF2Matrix& src, std::size_t src_row);
    void swap_rows(std::size_t a, std::size_t b);

    GF2Matrix transposed() const;
    GF2Matrix operator*(const GF2Matrix& o) const;
    GF2Matrix operator+(const GF2Matrix& o) const;
    GF2Vector apply(const GF2Vector& v) const;  // this * column vector

    bool is_zero() const;
    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

struct RrefResult {
    GF2Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const GF2Matrix& m);
std::size_t rank_of(const GF2Matrix& m);

// rows form a basis of {v : m v = 0}; row count = cols - rank
GF2Matrix kernel_basis(const GF2Matrix& m);

// rref of the row space, zero rows dropped
GF2Matrix row_basis(const GF2Matrix& m);

// column-space basis, as rows (basis of the image of m)
GF2Matrix image_basis(const GF2Matrix& m);

struct SolveResult {
    bool consistent = false;
    GF2Vector particular;  // one solution of a x = b when consistent
    GF2Matrix kernel;      // rows span {x : a x = 0}
};

SolveResult solve_linear_system(const GF2Matrix& a, const GF2Vector& b);

// X with a X = b, columnwise; nullopt if any column is inconsistent
std::optional<GF2Matrix> solve_matrix(const GF2Matrix& a, const GF2Matrix& b);

// C with C * basis = v (rows of v expressed in the rows of basis)
std::optional<GF2Matrix> express_in_rows(const GF2Matrix& basis, const GF2Matrix& v);

// row index (i_a * b.rows + i_b), same for columns
GF2Matrix kronecker(const GF2Matrix& a, const GF2Matrix& b);

// Incremental rref container; insert returns true when the row was new.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}
    bool insert(GF2Vector v);
    bool contains(GF2Vector v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    GF2Matrix basis() const;

private:
    std::size_t cols_;
    std::vector<GF2Vector> rows_;  // kept reduced, pivots strictly ordered
    std::vector<std::size_t> pivots_;
};

// Deterministic chart for ker(d_out)/im(d_in):
//   reps rows are cocycles completing the boundary basis pivot-greedily,
//   coords * z = homology coordinates of any cocycle z,
//   so coords * reps^T = identity and coords kills the boundaries.
struct HomologySpace {
    std::size_t dim = 0;
    GF2Matrix reps;
    GF2Matrix coords;
};

HomologySpace homology_chart(const GF2Matrix& d_out, const GF2Matrix& d_in);

// chart for span(space) / span(sub); coords is only meaningful on vectors of
// the numerator span
HomologySpace span_quotient(const GF2Matrix& space, const GF2Matrix& sub);

// dims[k] spaces with d[k] : dims[k] -> dims[k+1]
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<GF2Matrix> d;

    void validate() const;  // shape agreement and d(d(x)) = 0, throws otherwise
    HomologySpace homology(std::size_t k) const;
    std::size_t homology_dim(std::size_t k) const;
    std::vector<std::size_t> homology_dims() const;
    bool is_exact() const;

    GF2Matrix out_map(std::size_t k) const;  // zero 0 x dims[k] past the end
    GF2Matrix in_map(std::size_t k) const;   // zero dims[k] x 0 before the start
};

}  // namespace stlab
