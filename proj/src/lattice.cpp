// lattice.cpp

#include "steinberg_lab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stlab {

namespace {

constexpr int kMaxAmbient = 6;

void check_ambient(int n) {
    if (n < 0 || n > kMaxAmbient) throw std::invalid_argument("ambient dim out of range");
}

GF2Matrix rows_to_matrix(const Subspace& w) {
    GF2Matrix m(w.rows.size(), w.n);
    for (std::size_t r = 0; r < w.rows.size(); ++r)
        for (int c = 0; c < w.n; ++c)
            if ((w.rows[r] >> c) & 1) m.set(r, c, true);
    return m;
}

Mask row_to_mask(const GF2Vector& v) {
    Mask m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) m |= Mask{1} << i;
    return m;
}

}  // namespace

bool Subspace::operator<(const Subspace& o) const {
    if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
    return rows < o.rows;
}

Subspace canonical_subspace(int n, std::vector<Mask> spanning) {
    check_ambient(n);
    std::vector<Mask> basis;  // kept reduced, ascending pivots
    for (Mask v : spanning) {
        if (v >> n) throw std::invalid_argument("vector outside ambient space");
        for (Mask b : basis) {
            Mask pivot = b & -b;
            if (v & pivot) v ^= b;
        }
        if (!v) continue;
        Mask pivot = v & -v;
        for (Mask& b : basis)
            if (b & pivot) b ^= v;
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(),
              [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    return Subspace{n, std::move(basis)};
}

Subspace zero_subspace(int n) {
    check_ambient(n);
    return Subspace{n, {}};
}

Subspace full_subspace(int n) {
    check_ambient(n);
    std::vector<Mask> rows;
    for (int i = 0; i < n; ++i) rows.push_back(Mask{1} << i);
    return Subspace{n, std::move(rows)};
}

bool member(const Subspace& w, Mask v) {
    for (Mask b : w.rows) {
        Mask pivot = b & -b;
        if (v & pivot) v ^= b;
    }
    return v == 0;
}

bool contains(const Subspace& big, const Subspace& small) {
    if (big.n != small.n) throw std::invalid_argument("ambient mismatch");
    for (Mask v : small.rows)
        if (!member(big, v)) return false;
    return true;
}

bool covers(const Subspace& lo, const Subspace& hi) {
    return hi.dim() == lo.dim() + 1 && contains(hi, lo);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
    std::vector<Mask> all = a.rows;
    all.insert(all.end(), b.rows.begin(), b.rows.end());
    return canonical_subspace(a.n, all);
}

Subspace perp(const Subspace& w) {
    GF2Matrix k = kernel_basis(rows_to_matrix(w));
    std::vector<Mask> rows;
    for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(row_to_mask(k.row(r)));
    return canonical_subspace(w.n, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
    // the dot form is nondegenerate, so meet and join are perp-dual
    return perp(sum(perp(a), perp(b)));
}

std::vector<Mask> member_masks(const Subspace& w) {
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << w.rows.size());
    for (Mask sel = 0; sel < (Mask{1} << w.rows.size()); ++sel) {
        Mask v = 0;
        for (std::size_t j = 0; j < w.rows.size(); ++j)
            if ((sel >> j) & 1) v ^= w.rows[j];
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subspaces(int n) {
    check_ambient(n);
    std::vector<Subspace> out;
    // walk pivot sets, then fill the free positions of each rref shape
    for (Mask pivots = 0; pivots < (Mask{1} << n); ++pivots) {
        std::vector<int> pv;
        for (int i = 0; i < n; ++i)
            if ((pivots >> i) & 1) pv.push_back(i);
        std::vector<std::pair<std::size_t, int>> free_slots;  // (row, bit)
        for (std::size_t r = 0; r < pv.size(); ++r)
            for (int c = pv[r] + 1; c < n; ++c)
                if (!((pivots >> c) & 1)) free_slots.emplace_back(r, c);
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_slots.size()); ++fill) {
            std::vector<Mask> rows(pv.size());
            for (std::size_t r = 0; r < pv.size(); ++r) rows[r] = Mask{1} << pv[r];
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                if ((fill >> s) & 1) rows[free_slots[s].first] |= Mask{1} << free_slots[s].second;
            out.push_back(Subspace{n, std::move(rows)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subspaces(int n, int dim_filter) {
    std::vector<Subspace> out;
    for (auto& w : enumerate_subspaces(n))
        if (w.dim() == dim_filter) out.push_back(w);
    return out;
}

QuotientChart quotient_chart(int n, const Subspace& w) {
    if (w.n != n) throw std::invalid_argument("ambient mismatch");
    // complete w by the lex-least coordinate vectors
    Subspace span = w;
    std::vector<int> complement;
    for (int i = 0; i < n && span.dim() < n; ++i) {
        Mask e = Mask{1} << i;
        if (member(span, e)) continue;
        complement.push_back(i);
        std::vector<Mask> rows = span.rows;
        rows.push_back(e);
        span = canonical_subspace(n, rows);
    }
    std::size_t q = complement.size();
    // coordinates in the basis [w rows; complement] are (B^T)^{-1} v
    GF2Matrix bt(n, n);
    for (std::size_t r = 0; r < w.rows.size(); ++r)
        for (int c = 0; c < n; ++c)
            if ((w.rows[r] >> c) & 1) bt.set(c, r, true);
    for (std::size_t j = 0; j < q; ++j) bt.set(complement[j], w.rows.size() + j, true);
    auto inv = solve_matrix(bt, GF2Matrix::identity(n));
    if (!inv) throw std::logic_error("quotient_chart: basis not invertible");
    QuotientChart out;
    out.proj = GF2Matrix(q, n);
    for (std::size_t r = 0; r < q; ++r)
        for (int c = 0; c < n; ++c) out.proj.set(r, c, inv->get(w.rows.size() + r, c));
    out.section = GF2Matrix(n, q);
    for (std::size_t j = 0; j < q; ++j) out.section.set(complement[j], j, true);
    return out;
}

GLElement gl_identity(int n) { return GLElement{GF2Matrix::identity(n)}; }

GLElement gl_mul(const GLElement& a, const GLElement& b) { return GLElement{a.m * b.m}; }

GLElement gl_inverse(const GLElement& a) {
    auto inv = solve_matrix(a.m, GF2Matrix::identity(a.m.rows()));
    if (!inv) throw std::invalid_argument("gl_inverse: matrix is singular");
    return GLElement{*inv};
}

std::vector<GLElement> enumerate_gl(int n, bool full_four) {
    if (n < 0 || n > 4) throw std::invalid_argument("gl enumeration capped at n = 4");
    if (n == 4 && !full_four) {
        // a cyclic coordinate shift and one transvection generate the group
        GF2Matrix cyc(4, 4), trans = GF2Matrix::identity(4);
        for (int i = 0; i < 4; ++i) cyc.set((i + 1) % 4, i, true);
        trans.set(0, 1, true);
        return {GLElement{cyc}, GLElement{trans}};
    }
    std::vector<GLElement> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
        GF2Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if ((bits >> (r * n + c)) & 1) m.set(r, c, true);
        if (rank_of(m) == static_cast<std::size_t>(n)) out.push_back(GLElement{std::move(m)});
    }
    return out;
}

Mask apply_mask(const GF2Matrix& g, Mask v) {
    Mask out = 0;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        int parity = 0;
        Mask rest = v;
        while (rest) {
            int c = std::countr_zero(rest);
            parity ^= g.get(r, c);
            rest &= rest - 1;
        }
        if (parity) out |= Mask{1} << r;
    }
    return out;
}

Subspace act(const GLElement& g, const Subspace& w) {
    std::vector<Mask> rows;
    for (Mask v : w.rows) rows.push_back(apply_mask(g.m, v));
    return canonical_subspace(w.n, rows);
}

std::size_t PosetView::index_of(const Subspace& w) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == w) return i;
    throw std::out_of_range("subspace not in poset");
}

bool PosetView::contains_element(const Subspace& w) const {
    for (auto& e : elements)
        if (e == w) return true;
    return false;
}

PosetView poset_all(int n) { return PosetView{n, PosetKind::all, enumerate_subspaces(n)}; }

PosetView poset_nonzero(int n) {
    PosetView p{n, PosetKind::nonzero, {}};
    for (auto& w : enumerate_subspaces(n))
        if (w.dim() > 0) p.elements.push_back(w);
    return p;
}

PosetView poset_band(int n, int min_dim, int min_codim) {
    PosetView p{n, PosetKind::band, {}};
    for (auto& w : enumerate_subspaces(n))
        if (w.dim() >= min_dim && w.codim() >= min_codim) p.elements.push_back(w);
    return p;
}

PosetView poset_open_interval(const Subspace& bot, const Subspace& top) {
    if (!contains(top, bot)) throw std::invalid_argument("interval requires bot <= top");
    PosetView p{bot.n, PosetKind::custom, {}};
    for (auto& w : enumerate_subspaces(bot.n))
        if (w.dim() > bot.dim() && w.dim() < top.dim() && contains(w, bot) && contains(top, w))
            p.elements.push_back(w);
    return p;
}

namespace {

void extend_chains(const PosetView& p, Simplex& cur, int left,
                   std::vector<Simplex>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    std::size_t start = cur.empty() ? 0 : cur.back() + 1;
    for (std::size_t i = start; i < p.elements.size(); ++i) {
        if (!cur.empty() &&
            !(p.elements[cur.back()].dim() < p.elements[i].dim() &&
              contains(p.elements[i], p.elements[cur.back()])))
            continue;
        cur.push_back(i);
        extend_chains(p, cur, left - 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Simplex> chains(const PosetView& p, int k) {
    std::vector<Simplex> out;
    if (k < 0) return out;
    Simplex cur;
    extend_chains(p, cur, k + 1, out);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> poset_covers(const PosetView& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t j = 0; j < p.elements.size(); ++j) {
            if (i == j || !(p.elements[i] < p.elements[j]) ||
                !contains(p.elements[j], p.elements[i]))
                continue;
            bool direct = true;
            for (std::size_t k = 0; k < p.elements.size() && direct; ++k)
                if (k != i && k != j && contains(p.elements[k], p.elements[i]) &&
                    contains(p.elements[j], p.elements[k]) && p.elements[i] < p.elements[k] &&
                    p.elements[k] < p.elements[j])
                    direct = false;
            if (direct) out.emplace_back(i, j);
        }
    return out;
}

std::string subspace_key(const Subspace& w) {
    if (w.rows.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.rows[i]);
    }
    return s;
}

}  // namespace stlab
