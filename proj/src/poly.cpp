#include "steinberg_lab/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stlab {

namespace {

void toggle(std::set<Monomial>& terms, const Monomial& m) {
    auto [it, inserted] = terms.insert(m);
    if (!inserted) terms.erase(it);
}

Poly monomial_poly(const Monomial& m) {
    Poly p;
    p.terms.insert(m);
    return p;
}

// extra exponents per variable are binary submasks of the current exponents
void sq_term(const Monomial& a, std::size_t idx, unsigned budget, bool exact,
             Monomial& cur, std::set<Monomial>& out) {
    if (idx == a.size()) {
        if (!exact || budget == 0) toggle(out, cur);
        return;
    }
    for (unsigned s = a[idx];; s = (s - 1) & a[idx]) {
        if (s <= budget) {
            cur[idx] = a[idx] + s;
            sq_term(a, idx + 1, budget - s, exact, cur, out);
        }
        if (s == 0) break;
    }
    cur[idx] = a[idx];
}

}  // namespace

unsigned monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

bool Poly::homogeneous() const {
    for (const Monomial& m : terms)
        if (monomial_degree(m) != monomial_degree(*terms.begin())) return false;
    return true;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const Monomial& m : terms) d = std::max(d, monomial_degree(m));
    return d;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const Monomial& m : b.terms) toggle(r.terms, m);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const Monomial& ma : a.terms)
        for (const Monomial& mb : b.terms) {
            if (ma.size() != mb.size())
                throw std::invalid_argument("poly product: variable count mismatch");
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            toggle(r.terms, m);
        }
    return r;
}

Poly poly_zero() { return {}; }

Poly poly_one(int n) { return monomial_poly(Monomial(n, 0)); }

Poly form_poly(int n, Mask u) {
    Poly p;
    for (int i = 0; i < n; ++i)
        if ((u >> i) & 1) {
            Monomial m(n, 0);
            m[i] = 1;
            p.terms.insert(m);
        }
    return p;
}

TruncatedPolyAlgebra::TruncatedPolyAlgebra(int n, unsigned cap)
    : n_(n), cap_(cap) {
    if (n < 0) throw std::invalid_argument("polynomial algebra: negative variable count");
    bases_.resize(cap + 1);
    index_.resize(cap + 1);
    Monomial cur(n, 0);
    // fill degree d with exponent vectors in ascending lexicographic order
    auto fill = [&](auto&& self, unsigned d, std::size_t idx, unsigned left) -> void {
        if (idx + 1 == cur.size()) {
            cur[idx] = left;
            bases_[d].push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[idx] = e;
            self(self, d, idx + 1, left - e);
        }
    };
    for (unsigned d = 0; d <= cap; ++d) {
        if (n == 0) {
            if (d == 0) bases_[0].push_back({});
        } else {
            fill(fill, d, 0, d);
        }
        for (std::size_t i = 0; i < bases_[d].size(); ++i) index_[d][bases_[d][i]] = i;
    }
}

void TruncatedPolyAlgebra::check_degree(unsigned d) const {
    if (d > cap_)
        throw std::invalid_argument("polynomial algebra: degree " + std::to_string(d) +
                                    " above cap " + std::to_string(cap_));
}

std::size_t TruncatedPolyAlgebra::dim(unsigned d) const {
    check_degree(d);
    return bases_[d].size();
}

const std::vector<Monomial>& TruncatedPolyAlgebra::basis(unsigned d) const {
    check_degree(d);
    return bases_[d];
}

std::size_t TruncatedPolyAlgebra::index_of(const Monomial& m) const {
    unsigned d = monomial_degree(m);
    check_degree(d);
    auto it = index_[d].find(m);
    if (it == index_[d].end())
        throw std::invalid_argument("polynomial algebra: unknown monomial");
    return it->second;
}

GF2Vector TruncatedPolyAlgebra::to_coords(const Poly& p, unsigned d) const {
    check_degree(d);
    GF2Vector v(dim(d));
    for (const Monomial& m : p.terms) {
        if (monomial_degree(m) != d)
            throw std::invalid_argument("to_coords: term degree mismatch");
        v.flip(index_of(m));
    }
    return v;
}

Poly TruncatedPolyAlgebra::from_coords(const GF2Vector& v, unsigned d) const {
    if (v.size() != dim(d)) throw std::invalid_argument("from_coords: size mismatch");
    Poly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) p.terms.insert(bases_[d][i]);
    return p;
}

const GF2Matrix& TruncatedPolyAlgebra::form_action(Mask u, unsigned d) const {
    check_degree(d + 1);
    if (u == 0 || (n_ < 32 && u >= (Mask{1} << n_)))
        throw std::invalid_argument("form_action: form outside the dual space");
    auto key = std::make_pair(u, d);
    auto it = form_cache_.find(key);
    if (it != form_cache_.end()) return it->second;
    GF2Matrix a(dim(d + 1), dim(d));
    for (std::size_t j = 0; j < bases_[d].size(); ++j)
        for (int i = 0; i < n_; ++i)
            if ((u >> i) & 1) {
                Monomial m = bases_[d][j];
                ++m[i];
                a.flip(index_of(m), j);
            }
    return form_cache_.emplace(key, std::move(a)).first->second;
}

GF2Matrix TruncatedPolyAlgebra::squaring_matrix(unsigned d) const {
    check_degree(2 * d);
    GF2Matrix s(dim(2 * d), dim(d));
    for (std::size_t j = 0; j < bases_[d].size(); ++j) {
        Monomial m = bases_[d][j];
        for (unsigned& e : m) e *= 2;
        s.set(index_of(m), j, true);
    }
    return s;
}

Poly TruncatedPolyAlgebra::sq_total(const Poly& p) const {
    check_degree(2 * p.degree());
    Poly r;
    for (const Monomial& a : p.terms) {
        Monomial cur = a;
        sq_term(a, 0, monomial_degree(a), false, cur, r.terms);
    }
    return r;
}

Poly TruncatedPolyAlgebra::sq(unsigned i, const Poly& p) const {
    Poly r;
    for (const Monomial& a : p.terms) {
        unsigned d = monomial_degree(a);
        if (i > d) continue;
        check_degree(d + i);
        Monomial cur = a;
        sq_term(a, 0, i, true, cur, r.terms);
    }
    return r;
}

bool operator==(const FormProduct& a, const FormProduct& b) {
    return a.n == b.n && a.forms == b.forms;
}

FormProduct form_product(int n, std::vector<Mask> forms) {
    for (Mask u : forms)
        if (u == 0 || (n < 32 && u >= (Mask{1} << n)))
            throw std::invalid_argument("form product: form outside the dual space");
    std::sort(forms.begin(), forms.end());
    return {n, std::move(forms)};
}

FormProduct operator*(const FormProduct& a, const FormProduct& b) {
    if (a.n != b.n) throw std::invalid_argument("form product: rank mismatch");
    std::vector<Mask> forms = a.forms;
    forms.insert(forms.end(), b.forms.begin(), b.forms.end());
    return form_product(a.n, std::move(forms));
}

Poly FormProduct::poly() const {
    Poly p = poly_one(n);
    for (Mask u : forms) p = p * form_poly(n, u);
    return p;
}

FormProduct vanishing_part(const FormProduct& e, const Subspace& w) {
    if (w.n != e.n) throw std::invalid_argument("vanishing_part: rank mismatch");
    std::vector<Mask> kept;
    for (Mask u : e.forms) {
        bool vanishes = true;
        for (Mask row : w.rows)
            if (std::popcount(u & row) & 1) vanishes = false;
        if (vanishes) kept.push_back(u);
    }
    return form_product(e.n, std::move(kept));
}

FormProduct all_nonzero_forms(int n) {
    std::vector<Mask> forms;
    for (Mask u = 1; u < (Mask{1} << n); ++u) forms.push_back(u);
    return form_product(n, std::move(forms));
}

FormProduct forms_vanishing_on(const Subspace& w) {
    std::vector<Mask> forms;
    for (Mask u : member_masks(perp(w)))
        if (u != 0) forms.push_back(u);
    return form_product(w.n, std::move(forms));
}

GF2Matrix ideal_basis(const TruncatedPolyAlgebra& alg, const FormProduct& e,
                      unsigned d) {
    if (e.n != alg.vars()) throw std::invalid_argument("ideal_basis: rank mismatch");
    if (d < e.degree()) return GF2Matrix(0, alg.dim(d));
    Poly ep = e.poly();
    std::vector<GF2Vector> rows;
    for (const Monomial& m : alg.basis(d - e.degree()))
        rows.push_back(alg.to_coords(ep * monomial_poly(m), d));
    return row_basis(GF2Matrix::from_rows(rows, alg.dim(d)));
}

GF2Matrix restriction_matrix(const TruncatedPolyAlgebra& alg, const Subspace& w,
                             unsigned d) {
    if (w.n != alg.vars()) throw std::invalid_argument("restriction: rank mismatch");
    int k = w.dim();
    TruncatedPolyAlgebra sub(k, d);
    // the i-th coordinate form restricted to w, in the dual basis of w.rows
    std::vector<Poly> restricted;
    for (int i = 0; i < alg.vars(); ++i) {
        Mask ru = 0;
        for (std::size_t j = 0; j < w.rows.size(); ++j)
            ru |= ((w.rows[j] >> i) & 1u) << j;
        restricted.push_back(form_poly(k, ru));
    }
    GF2Matrix r(sub.dim(d), alg.dim(d));
    std::size_t col = 0;
    for (const Monomial& m : alg.basis(d)) {
        Poly image = poly_one(k);
        for (int i = 0; i < alg.vars(); ++i)
            for (unsigned t = 0; t < m[i] && !image.zero(); ++t)
                image = image * restricted[i];
        GF2Vector v = sub.to_coords(image, d);
        for (std::size_t row = 0; row < v.size(); ++row)
            if (v.get(row)) r.set(row, col, true);
        ++col;
    }
    return r;
}

GF2Matrix restriction_kernel(const TruncatedPolyAlgebra& alg, const Subspace& w,
                             unsigned d) {
    return kernel_basis(restriction_matrix(alg, w, d));
}

bool GradedIdeal::contains(const TruncatedPolyAlgebra& alg, const Poly& p) const {
    if (p.zero()) return true;
    if (!p.homogeneous())
        throw std::invalid_argument("graded ideal: membership needs a homogeneous element");
    unsigned d = p.degree();
    if (d >= slices.size())
        throw std::invalid_argument("graded ideal: degree above the built range");
    GF2Matrix v = GF2Matrix::from_rows({alg.to_coords(p, d)}, alg.dim(d));
    return express_in_rows(slices[d], v).has_value();
}

void GradedIdeal::validate(const TruncatedPolyAlgebra& alg) const {
    for (unsigned d = 0; d + 1 < slices.size(); ++d) {
        if (slices[d].cols() != alg.dim(d))
            throw std::logic_error("graded ideal: slice width mismatch");
        for (Mask u = 1; u < (Mask{1} << alg.vars()); ++u) {
            GF2Matrix mapped = slices[d] * alg.form_action(u, d).transposed();
            if (!express_in_rows(slices[d + 1], mapped))
                throw std::logic_error("graded ideal: not closed under a form");
        }
    }
}

GradedIdeal principal_ideal(const TruncatedPolyAlgebra& alg, const FormProduct& e,
                            unsigned dmax) {
    GradedIdeal ideal;
    for (unsigned d = 0; d <= dmax; ++d) ideal.slices.push_back(ideal_basis(alg, e, d));
    return ideal;
}

GradedIdeal ideal_from_generators(const TruncatedPolyAlgebra& alg,
                                  const std::vector<Poly>& gens, unsigned dmax) {
    for (const Poly& g : gens)
        if (!g.homogeneous())
            throw std::invalid_argument("graded ideal: generators must be homogeneous");
    GradedIdeal ideal;
    for (unsigned d = 0; d <= dmax; ++d) {
        std::vector<GF2Vector> rows;
        for (const Poly& g : gens) {
            if (g.zero() || g.degree() > d) continue;
            for (const Monomial& m : alg.basis(d - g.degree()))
                rows.push_back(alg.to_coords(g * monomial_poly(m), d));
        }
        ideal.slices.push_back(row_basis(GF2Matrix::from_rows(rows, alg.dim(d))));
    }
    return ideal;
}

GradedIdeal restriction_kernel_ideal(const TruncatedPolyAlgebra& alg,
                                     const Subspace& w, unsigned dmax) {
    GradedIdeal ideal;
    for (unsigned d = 0; d <= dmax; ++d)
        ideal.slices.push_back(restriction_kernel(alg, w, d));
    return ideal;
}

StabilityReport sq_stability_check(const TruncatedPolyAlgebra& alg,
                                   const GradedIdeal& ideal, unsigned dmax) {
    if (dmax >= ideal.slices.size())
        throw std::invalid_argument("stability check: range above the built ideal");
    StabilityReport report;
    for (unsigned d = 0; d <= dmax; ++d)
        for (std::size_t row = 0; row < ideal.slices[d].rows(); ++row) {
            Poly p = alg.from_coords(ideal.slices[d].row(row), d);
            for (unsigned i = 1; d + i <= dmax; ++i) {
                Poly q = alg.sq(i, p);
                if (!ideal.contains(alg, q)) {
                    report.ok = false;
                    report.violations.push_back({d, row, i});
                }
            }
        }
    return report;
}

RadicalReport radical_check(const TruncatedPolyAlgebra& alg, const FormProduct& e,
                            unsigned d, unsigned m_max) {
    for (std::size_t i = 0; i + 1 < e.forms.size(); ++i)
        if (e.forms[i] == e.forms[i + 1])
            throw std::invalid_argument("radical check: forms must be pairwise distinct");
    if (static_cast<unsigned long long>(d) << m_max > alg.cap())
        throw std::invalid_argument("radical check: power degree above cap");

    RadicalReport report;
    report.degree = d;

    // preimages of the ideal slices under iterated squaring
    GF2Matrix power = GF2Matrix::identity(alg.dim(d));
    GF2Matrix previous(0, alg.dim(d));
    for (unsigned m = 0; m <= m_max; ++m) {
        unsigned dm = d << m;
        HomologySpace chart =
            span_quotient(GF2Matrix::identity(alg.dim(dm)), ideal_basis(alg, e, dm));
        GF2Matrix level = row_basis(kernel_basis(chart.coords * power));
        if (!express_in_rows(level, previous))
            throw std::logic_error("radical check: power preimages not increasing");
        report.power_dims.push_back(level.rows());
        previous = level;
        if (m < m_max) power = alg.squaring_matrix(dm) * power;
    }
    report.radical_slice = previous;
    report.radical_dim = previous.rows();

    // intersection of the restriction kernels of the hyperplanes killed by e
    GF2Matrix stacked(0, alg.dim(d));
    for (Mask u : e.forms) {
        Subspace hyperplane = perp(canonical_subspace(alg.vars(), {u}));
        stacked = GF2Matrix::vstack(stacked, restriction_matrix(alg, hyperplane, d));
    }
    report.intersection_slice = row_basis(kernel_basis(stacked));
    report.intersection_dim = report.intersection_slice.rows();

    report.ok = report.radical_slice == report.intersection_slice;
    return report;
}

}  // namespace stlab
