// gf2.cpp

#include "steinberg_lab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace stlab {

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<GF2Vector>& rows, std::size_t cols) {
    GF2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

GF2Matrix GF2Matrix::vstack(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    GF2Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) m.set_row(r, a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) m.set_row(a.rows() + r, b.row(r));
    return m;
}

GF2Vector GF2Matrix::row(std::size_t r) const {
    GF2Vector v(cols_);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = w_[r * wpr_ + k];
    return v;
}

void GF2Matrix::set_row(std::size_t r, const GF2Vector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t k = 0; k < wpr_; ++k) w_[r * wpr_ + k] = v.words()[k];
}

void GF2Matrix::xor_row_into(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= w_[src * wpr_ + k];
}

void GF2Matrix::xor_row_from(std::size_t dst, const GF2Matrix& src, std::size_t src_row) {
    for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= src.w_[src_row * wpr_ + k];
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < wpr_; ++k) std::swap(w_[a * wpr_ + k], w_[b * wpr_ + k]);
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t word = w_[r * wpr_ + k];
            while (word) {
                std::size_t c = (k << 6) + std::countr_zero(word);
                t.set(c, r, true);
                word &= word - 1;
            }
        }
    return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matmul: shape mismatch");
    GF2Matrix out(rows_, o.cols());
    // out.row(r) = xor of o rows selected by bits of this->row(r)
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t word = w_[r * wpr_ + k];
            while (word) {
                std::size_t j = (k << 6) + std::countr_zero(word);
                out.xor_row_from(r, o, j);
                word &= word - 1;
            }
        }
    return out;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matadd: shape mismatch");
    GF2Matrix out = *this;
    for (std::size_t k = 0; k < out.w_.size(); ++k) out.w_[k] ^= o.w_[k];
    return out;
}

GF2Vector GF2Matrix::apply(const GF2Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    GF2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= w_[r * wpr_ + k] & v.words()[k];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

RrefResult rref(const GF2Matrix& m) {
    RrefResult res;
    res.reduced = m;
    GF2Matrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !a.get(p, c)) ++p;
        if (p == m.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row_into(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank_of(const GF2Matrix& m) { return rref(m).rank; }

GF2Matrix kernel_basis(const GF2Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    GF2Matrix out(m.cols() - rr.rank, m.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        out.set(k, c, true);
        for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, c)) out.set(k, rr.pivots[i], true);
        ++k;
    }
    return out;
}

GF2Matrix row_basis(const GF2Matrix& m) {
    RrefResult rr = rref(m);
    GF2Matrix out(rr.rank, m.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) out.set_row(r, rr.reduced.row(r));
    return out;
}

GF2Matrix image_basis(const GF2Matrix& m) { return row_basis(m.transposed()); }

SolveResult solve_linear_system(const GF2Matrix& a, const GF2Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    // eliminate on [a | b]
    GF2Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, a.cols(), b.get(r));
    }
    RrefResult rr = rref(aug);
    SolveResult res;
    res.kernel = kernel_basis(a);
    res.particular = GF2Vector(a.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == a.cols()) return res;  // 0 = 1 row, inconsistent
        res.particular.set(rr.pivots[i], rr.reduced.get(i, a.cols()));
    }
    res.consistent = true;
    return res;
}

std::optional<GF2Matrix> solve_matrix(const GF2Matrix& a, const GF2Matrix& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    GF2Matrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) aug.set(r, a.cols() + c, b.get(r, c));
    }
    RrefResult rr = rref(aug);
    GF2Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.set(rr.pivots[i], c, rr.reduced.get(i, a.cols() + c));
    }
    return x;
}

std::optional<GF2Matrix> express_in_rows(const GF2Matrix& basis, const GF2Matrix& v) {
    if (basis.cols() != v.cols()) throw std::invalid_argument("express_in_rows: width mismatch");
    // C basis = v  <=>  basis^T C^T = v^T
    auto ct = solve_matrix(basis.transposed(), v.transposed());
    if (!ct) return std::nullopt;
    return ct->transposed();
}

GF2Matrix kronecker(const GF2Matrix& a, const GF2Matrix& b) {
    GF2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            if (!a.get(ra, ca)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    if (b.get(rb, cb))
                        out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
        }
    return out;
}

bool RowSpan::insert(GF2Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    std::size_t p = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (v.get(c)) {
            p = c;
            break;
        }
    if (p == cols_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i] ^= v;
    // keep pivot order for a canonical basis
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool RowSpan::contains(GF2Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v.is_zero();
}

GF2Matrix RowSpan::basis() const { return GF2Matrix::from_rows(rows_, cols_); }

HomologySpace span_quotient(const GF2Matrix& space, const GF2Matrix& sub) {
    if (space.cols() != sub.cols())
        throw std::invalid_argument("span_quotient: ambient dimension mismatch");
    std::size_t n = space.cols();
    GF2Matrix b = row_basis(sub);
    // complete b to a basis of the numerator pivot-greedily; new rows are reps
    RowSpan span(n);
    for (std::size_t r = 0; r < b.rows(); ++r) span.insert(b.row(r));
    std::vector<GF2Vector> reps;
    for (std::size_t r = 0; r < space.rows(); ++r) {
        GF2Vector v = space.row(r);
        if (span.insert(v)) reps.push_back(v);
    }
    HomologySpace h;
    h.dim = reps.size();
    h.reps = GF2Matrix::from_rows(reps, n);
    // coords solves coords * [reps; b]^T = [I | 0]; transpose to D y = e.
    // D has independent rows, so the system is always solvable.
    GF2Matrix d = GF2Matrix::vstack(h.reps, b);
    GF2Matrix e(d.rows(), h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) e.set(i, i, true);
    auto y = solve_matrix(d, e);
    if (!y) throw std::logic_error("span_quotient: dual solve failed");
    h.coords = y->transposed();
    return h;
}

HomologySpace homology_chart(const GF2Matrix& d_out, const GF2Matrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_chart: dimension mismatch");
    return span_quotient(kernel_basis(d_out), row_basis(d_in.transposed()));
}

GF2Matrix CochainComplex::out_map(std::size_t k) const {
    if (k < d.size()) return d[k];
    return GF2Matrix(0, dims.at(k));
}

GF2Matrix CochainComplex::in_map(std::size_t k) const {
    if (k == 0) return GF2Matrix(dims.at(0), 0);
    return d.at(k - 1);
}

void CochainComplex::validate() const {
    if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
        throw std::invalid_argument("complex: need one differential per adjacent pair");
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].cols() != dims[k] || d[k].rows() != dims[k + 1])
            throw std::invalid_argument("complex: differential shape mismatch");
        if (k + 1 < d.size() && !(d[k + 1] * d[k]).is_zero())
            throw std::invalid_argument("complex: d composed with d is nonzero");
    }
}

HomologySpace CochainComplex::homology(std::size_t k) const {
    validate();
    return homology_chart(out_map(k), in_map(k));
}

std::size_t CochainComplex::homology_dim(std::size_t k) const {
    // rank arithmetic only, cheaper than the chart
    std::size_t z = out_map(k).cols() - rank_of(out_map(k));
    return z - rank_of(in_map(k));
}

std::vector<std::size_t> CochainComplex::homology_dims() const {
    validate();
    std::vector<std::size_t> out(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) out[k] = homology_dim(k);
    return out;
}

bool CochainComplex::is_exact() const {
    validate();
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (homology_dim(k) != 0) return false;
    return true;
}

}  // namespace stlab
