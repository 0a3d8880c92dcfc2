#include "steinberg_lab/resolutions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace stlab {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// One summand St(w,z)-style block of a graded term. coef is the full block
// dimension (Steinberg factor times any coefficient factor); the summand is
// present at U iff z <= U (up) or U <= w (down).
struct Piece {
    Subspace w, z;
    std::size_t coef = 0;
    bool up = false;
};

struct GradedTerm {
    std::vector<Piece> pieces;
    PosetFunctor functor;
    std::vector<std::vector<std::size_t>> offset;  // [elem][piece]
};

bool piece_active(const Piece& pc, const Subspace& u) {
    return pc.up ? contains(u, pc.z) : contains(pc.w, u);
}

GradedTerm build_term(const PosetView& poset, std::vector<Piece> pieces) {
    GradedTerm t;
    t.pieces = std::move(pieces);
    t.functor.poset = poset;
    std::size_t ne = poset.elements.size();
    t.functor.dims.assign(ne, 0);
    t.offset.assign(ne, {});
    for (std::size_t e = 0; e < ne; ++e) {
        t.offset[e].assign(t.pieces.size(), npos);
        std::size_t at = 0;
        for (std::size_t i = 0; i < t.pieces.size(); ++i) {
            if (!piece_active(t.pieces[i], poset.elements[e])) continue;
            t.offset[e][i] = at;
            at += t.pieces[i].coef;
        }
        t.functor.dims[e] = at;
    }
    // transitions keep shared summands identically and drop the rest
    for (auto [lo, hi] : poset_covers(poset)) {
        GF2Matrix m(t.functor.dims[hi], t.functor.dims[lo]);
        for (std::size_t i = 0; i < t.pieces.size(); ++i) {
            std::size_t a = t.offset[lo][i], b = t.offset[hi][i];
            if (a == npos || b == npos) continue;
            for (std::size_t r = 0; r < t.pieces[i].coef; ++r) m.set(b + r, a + r, true);
        }
        t.functor.cover_maps.emplace(std::make_pair(lo, hi), std::move(m));
    }
    return t;
}

// blocks[i][j] maps src piece j into dst piece i, the same matrix at every
// element where both pieces are present
NaturalTransformation assemble_nat(
    const GradedTerm& src, const GradedTerm& dst,
    const std::vector<std::vector<std::optional<GF2Matrix>>>& blocks) {
    const PosetView& poset = src.functor.poset;
    NaturalTransformation nat;
    nat.at.reserve(poset.elements.size());
    for (std::size_t e = 0; e < poset.elements.size(); ++e) {
        GF2Matrix m(dst.functor.dims[e], src.functor.dims[e]);
        for (std::size_t i = 0; i < dst.pieces.size(); ++i) {
            if (dst.offset[e][i] == npos) continue;
            for (std::size_t j = 0; j < src.pieces.size(); ++j) {
                if (src.offset[e][j] == npos || !blocks[i][j]) continue;
                const GF2Matrix& blk = *blocks[i][j];
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t c = 0; c < blk.cols(); ++c)
                        if (blk.get(r, c)) m.set(dst.offset[e][i] + r, src.offset[e][j] + c, true);
            }
        }
        nat.at.push_back(std::move(m));
    }
    return nat;
}

using BlockFn = std::optional<GF2Matrix> (*)(const Piece&, const Piece&);

std::vector<std::vector<std::optional<GF2Matrix>>> block_table(const GradedTerm& src,
                                                               const GradedTerm& dst,
                                                               BlockFn fn) {
    std::vector<std::vector<std::optional<GF2Matrix>>> blocks(
        dst.pieces.size(), std::vector<std::optional<GF2Matrix>>(src.pieces.size()));
    for (std::size_t i = 0; i < dst.pieces.size(); ++i)
        for (std::size_t j = 0; j < src.pieces.size(); ++j)
            blocks[i][j] = fn(dst.pieces[i], src.pieces[j]);
    return blocks;
}

// P-resolution step: same bottom, drop the top by one; chains peaking at the
// smaller top survive
std::optional<GF2Matrix> proj_block(const Piece& dst, const Piece& src) {
    if (!(dst.w == src.w) || !covers(dst.z, src.z)) return std::nullopt;
    return interval_r_map(*steinberg_interval(src.w, src.z), dst.z);
}

// I-resolution step: same top, drop the bottom by one, dualized
std::optional<GF2Matrix> inj_block(const Piece& dst, const Piece& src) {
    if (!(dst.z == src.z) || !covers(dst.w, src.w)) return std::nullopt;
    return interval_s_map(*steinberg_interval(dst.w, dst.z), src.w).transposed();
}

std::size_t st_dim(const Subspace& w, const Subspace& z) {
    return steinberg_interval(w, z)->dim;
}

}  // namespace

void FunctorComplex::validate() const {
    if (terms.empty()) throw std::invalid_argument("functor complex: no terms");
    if (diffs.size() + 1 != terms.size())
        throw std::invalid_argument("functor complex: need one map per adjacent pair");
    std::size_t ne = terms[0].poset.elements.size();
    for (const auto& t : terms) {
        if (t.poset.elements != terms[0].poset.elements)
            throw std::invalid_argument("functor complex: terms on different posets");
        t.validate();
    }
    auto cov = poset_covers(terms[0].poset);
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k].at.size() != ne)
            throw std::invalid_argument("functor complex: map missing elements");
        for (std::size_t e = 0; e < ne; ++e) {
            const GF2Matrix& m = diffs[k].at[e];
            if (m.rows() != terms[k + 1].dims[e] || m.cols() != terms[k].dims[e])
                throw std::invalid_argument("functor complex: map shape mismatch");
        }
        for (auto [lo, hi] : cov) {
            GF2Matrix lhs = diffs[k].at[hi] * terms[k].cover_maps.at({lo, hi});
            GF2Matrix rhs = terms[k + 1].cover_maps.at({lo, hi}) * diffs[k].at[lo];
            if (!(lhs == rhs)) throw std::logic_error("functor complex: map not natural");
        }
        if (k + 1 < diffs.size())
            for (std::size_t e = 0; e < ne; ++e)
                if (!(diffs[k + 1].at[e] * diffs[k].at[e]).is_zero())
                    throw std::logic_error("functor complex: d after d nonzero");
    }
}

CochainComplex FunctorComplex::at_element(std::size_t elem) const {
    CochainComplex cx;
    for (const auto& t : terms) cx.dims.push_back(t.dims.at(elem));
    for (const auto& d : diffs) cx.d.push_back(d.at.at(elem));
    return cx;
}

bool FunctorComplex::exact_everywhere() const {
    for (std::size_t e = 0; e < terms[0].poset.elements.size(); ++e)
        if (!at_element(e).is_exact()) return false;
    return true;
}

FunctorComplex proj_resolution_simple(const PosetView& poset, const Subspace& w) {
    if (w.n != poset.n) throw std::invalid_argument("proj resolution: ambient mismatch");
    int big = poset.n - w.dim();
    std::vector<GradedTerm> terms;  // index t holds P_{big - t}
    for (int k = big; k >= 0; --k) {
        std::vector<Piece> pieces;
        for (const Subspace& z : enumerate_subspaces(poset.n, w.dim() + k))
            if (contains(z, w)) pieces.push_back({w, z, st_dim(w, z), true});
        terms.push_back(build_term(poset, std::move(pieces)));
    }
    FunctorComplex res;
    for (std::size_t t = 0; t + 1 < terms.size(); ++t)
        res.diffs.push_back(assemble_nat(terms[t], terms[t + 1],
                                         block_table(terms[t], terms[t + 1], proj_block)));
    // augmentation onto the simple functor: identity over w itself
    PosetFunctor s = simple_functor(poset, w);
    NaturalTransformation aug;
    const GradedTerm& p0 = terms.back();
    for (std::size_t e = 0; e < poset.elements.size(); ++e) {
        GF2Matrix m(s.dims[e], p0.functor.dims[e]);
        if (poset.elements[e] == w) m.set(0, 0, true);
        aug.at.push_back(std::move(m));
    }
    res.diffs.push_back(std::move(aug));
    for (auto& t : terms) res.terms.push_back(std::move(t.functor));
    res.terms.push_back(std::move(s));
    res.validate();
    return res;
}

FunctorComplex inj_resolution_simple(const PosetView& poset, const Subspace& z) {
    if (z.n != poset.n) throw std::invalid_argument("inj resolution: ambient mismatch");
    std::vector<GradedTerm> terms;  // index t holds I^t
    for (int k = 0; k <= z.dim(); ++k) {
        std::vector<Piece> pieces;
        for (const Subspace& w : enumerate_subspaces(poset.n, z.dim() - k))
            if (contains(z, w)) pieces.push_back({w, z, st_dim(w, z), false});
        terms.push_back(build_term(poset, std::move(pieces)));
    }
    FunctorComplex res;
    PosetFunctor s = simple_functor(poset, z);
    NaturalTransformation unit;
    const GradedTerm& i0 = terms.front();
    for (std::size_t e = 0; e < poset.elements.size(); ++e) {
        GF2Matrix m(i0.functor.dims[e], s.dims[e]);
        if (poset.elements[e] == z) m.set(0, 0, true);
        unit.at.push_back(std::move(m));
    }
    res.terms.push_back(s);
    res.diffs.push_back(std::move(unit));
    for (std::size_t t = 0; t + 1 < terms.size(); ++t)
        res.diffs.push_back(assemble_nat(terms[t], terms[t + 1],
                                         block_table(terms[t], terms[t + 1], inj_block)));
    for (auto& t : terms) res.terms.push_back(std::move(t.functor));
    res.validate();
    return res;
}

namespace {

// shared by the bicomplex cells and the total complex: summand (w, z) with
// coefficient St(z/w)* (x) f(z), indicator below w
Piece coinduced_piece(const PosetFunctor& f, const Subspace& w, const Subspace& z) {
    return {w, z, st_dim(w, z) * f.dims[f.poset.index_of(z)], false};
}

// strip a line off the bottom, dual side, constant coefficient factor
std::optional<GF2Matrix> coinduced_h_block(const PosetFunctor& f, const Piece& dst,
                                           const Piece& src) {
    if (!(dst.z == src.z) || !covers(dst.w, src.w)) return std::nullopt;
    GF2Matrix s = interval_s_map(*steinberg_interval(dst.w, dst.z), src.w).transposed();
    return kronecker(s, GF2Matrix::identity(f.dims[f.poset.index_of(src.z)]));
}

// push the top up through f, dual Steinberg factor
std::optional<GF2Matrix> coinduced_v_block(const PosetFunctor& f, const Piece& dst,
                                           const Piece& src) {
    if (!(dst.w == src.w) || !covers(src.z, dst.z)) return std::nullopt;
    GF2Matrix r = interval_r_map(*steinberg_interval(dst.w, dst.z), src.z).transposed();
    return kronecker(r, f.transition(f.poset.index_of(src.z), f.poset.index_of(dst.z)));
}

std::vector<std::vector<std::optional<GF2Matrix>>> coinduced_blocks(const PosetFunctor& f,
                                                                    const GradedTerm& src,
                                                                    const GradedTerm& dst,
                                                                    bool horizontal) {
    std::vector<std::vector<std::optional<GF2Matrix>>> blocks(
        dst.pieces.size(), std::vector<std::optional<GF2Matrix>>(src.pieces.size()));
    for (std::size_t i = 0; i < dst.pieces.size(); ++i)
        for (std::size_t j = 0; j < src.pieces.size(); ++j)
            blocks[i][j] = horizontal ? coinduced_h_block(f, dst.pieces[i], src.pieces[j])
                                      : coinduced_v_block(f, dst.pieces[i], src.pieces[j]);
    return blocks;
}

void require_full_lattice(const PosetFunctor& f, const char* who) {
    if (f.poset.kind != PosetKind::all)
        throw std::invalid_argument(std::string(who) + ": functor must live on the full lattice");
}

}  // namespace

FunctorBicomplex bicomplex_I(const PosetFunctor& f) {
    require_full_lattice(f, "bicomplex");
    int n = f.poset.n;
    std::vector<std::vector<GradedTerm>> cells(n + 1);
    FunctorBicomplex bx;
    bx.n = n;
    bx.pair_w.resize(n + 1);
    bx.pair_z.resize(n + 1);
    bx.cells.resize(n + 1);
    for (int p = 0; p <= n; ++p) {
        for (int j = 0; j <= p; ++j) {
            std::vector<Piece> pieces;
            for (const Subspace& w : enumerate_subspaces(n, n - p))
                for (const Subspace& z : enumerate_subspaces(n, n - j))
                    if (contains(z, w)) pieces.push_back(coinduced_piece(f, w, z));
            cells[p].push_back(build_term(f.poset, std::move(pieces)));
            bx.pair_w[p].push_back({});
            bx.pair_z[p].push_back({});
            for (const Piece& pc : cells[p].back().pieces) {
                bx.pair_w[p][j].push_back(pc.w);
                bx.pair_z[p][j].push_back(pc.z);
            }
        }
    }
    bx.dh.resize(n + 1);
    bx.dv.resize(n + 1);
    for (int p = 0; p <= n; ++p)
        for (int j = 0; j <= p; ++j) {
            if (p < n)
                bx.dh[p].push_back(assemble_nat(
                    cells[p][j], cells[p + 1][j],
                    coinduced_blocks(f, cells[p][j], cells[p + 1][j], true)));
            if (j > 0)
                bx.dv[p].push_back(assemble_nat(
                    cells[p][j], cells[p][j - 1],
                    coinduced_blocks(f, cells[p][j], cells[p][j - 1], false)));
        }
    std::size_t ne = f.poset.elements.size();
    auto cov = poset_covers(f.poset);
    auto check_natural = [&](const NaturalTransformation& nat, const PosetFunctor& a,
                             const PosetFunctor& b) {
        for (auto [lo, hi] : cov)
            if (!(nat.at[hi] * a.cover_maps.at({lo, hi}) ==
                  b.cover_maps.at({lo, hi}) * nat.at[lo]))
                throw std::logic_error("bicomplex: differential not natural");
    };
    for (int p = 0; p <= n; ++p)
        for (int j = 0; j <= p; ++j) {
            cells[p][j].functor.validate();
            if (p < n) check_natural(bx.dh[p][j], cells[p][j].functor, cells[p + 1][j].functor);
            if (j > 0) check_natural(bx.dv[p][j - 1], cells[p][j].functor, cells[p][j - 1].functor);
        }
    for (std::size_t e = 0; e < ne; ++e)
        for (int p = 0; p <= n; ++p)
            for (int j = 0; j <= p; ++j) {
                if (p + 1 < n && !(bx.dh[p + 1][j].at[e] * bx.dh[p][j].at[e]).is_zero())
                    throw std::logic_error("bicomplex: horizontal square nonzero");
                if (j > 1 && !(bx.dv[p][j - 2].at[e] * bx.dv[p][j - 1].at[e]).is_zero())
                    throw std::logic_error("bicomplex: vertical square nonzero");
                if (p < n && j > 0 &&
                    !(bx.dh[p][j - 1].at[e] * bx.dv[p][j - 1].at[e] ==
                      bx.dv[p + 1][j - 1].at[e] * bx.dh[p][j].at[e]))
                    throw std::logic_error("bicomplex: squares do not commute");
            }
    for (int p = 0; p <= n; ++p)
        for (int j = 0; j <= p; ++j) bx.cells[p].push_back(std::move(cells[p][j].functor));
    return bx;
}

FunctorComplex tot_resolution(const PosetFunctor& f) {
    require_full_lattice(f, "total resolution");
    int n = f.poset.n;
    std::vector<GradedTerm> tot;  // tot[k] sums the layer-k pairs
    for (int k = 0; k <= n; ++k) {
        std::vector<Piece> pieces;
        for (const Subspace& w : f.poset.elements)
            for (const Subspace& z : f.poset.elements)
                if (z.dim() - w.dim() == k && contains(z, w))
                    pieces.push_back(coinduced_piece(f, w, z));
        tot.push_back(build_term(f.poset, std::move(pieces)));
    }
    FunctorComplex res;
    res.terms.push_back(f);
    // unit: the component of f(U) at summand (w, w) is the transition to w
    NaturalTransformation unit;
    for (std::size_t e = 0; e < f.poset.elements.size(); ++e) {
        GF2Matrix m(tot[0].functor.dims[e], f.dims[e]);
        for (std::size_t i = 0; i < tot[0].pieces.size(); ++i) {
            if (tot[0].offset[e][i] == npos) continue;
            GF2Matrix blk = f.transition(e, f.poset.index_of(tot[0].pieces[i].w));
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    if (blk.get(r, c)) m.set(tot[0].offset[e][i] + r, c, true);
        }
        unit.at.push_back(std::move(m));
    }
    res.diffs.push_back(std::move(unit));
    for (int k = 0; k < n; ++k) {
        auto blocks_h = coinduced_blocks(f, tot[k], tot[k + 1], true);
        auto blocks_v = coinduced_blocks(f, tot[k], tot[k + 1], false);
        for (std::size_t i = 0; i < tot[k + 1].pieces.size(); ++i)
            for (std::size_t j = 0; j < tot[k].pieces.size(); ++j)
                if (blocks_v[i][j]) {
                    if (blocks_h[i][j]) throw std::logic_error("total: overlapping blocks");
                    blocks_h[i][j] = blocks_v[i][j];
                }
        res.diffs.push_back(assemble_nat(tot[k], tot[k + 1], blocks_h));
    }
    for (auto& t : tot) res.terms.push_back(std::move(t.functor));
    res.validate();
    return res;
}

namespace {

// shared frame of ext_complex_from_S0 and oliver_complex: degree k sums
// St(z)* (x) f(z) over the subspaces of dimension k + shift
ExtComplex dual_steinberg_complex(const PosetFunctor& f, int shift, int degrees) {
    int n = f.poset.n;
    Subspace zero = zero_subspace(n);
    ExtComplex ec;
    ec.summands.resize(degrees);
    ec.offsets.resize(degrees);
    ec.cx.dims.assign(degrees, 0);
    for (int k = 0; k < degrees; ++k) {
        std::size_t at = 0;
        for (const Subspace& z : enumerate_subspaces(n, k + shift)) {
            ec.summands[k].push_back(z);
            ec.offsets[k].push_back(at);
            at += st_dim(zero, z) * f.dims[f.poset.index_of(z)];
        }
        ec.cx.dims[k] = at;
    }
    for (int k = 0; k + 1 < degrees; ++k) {
        GF2Matrix m(ec.cx.dims[k + 1], ec.cx.dims[k]);
        for (std::size_t j = 0; j < ec.summands[k].size(); ++j)
            for (std::size_t i = 0; i < ec.summands[k + 1].size(); ++i) {
                const Subspace& z = ec.summands[k][j];
                const Subspace& zp = ec.summands[k + 1][i];
                if (!contains(zp, z)) continue;
                GF2Matrix r = interval_r_map(*steinberg_interval(zero, zp), z).transposed();
                GF2Matrix blk =
                    kronecker(r, f.transition(f.poset.index_of(z), f.poset.index_of(zp)));
                for (std::size_t a = 0; a < blk.rows(); ++a)
                    for (std::size_t b = 0; b < blk.cols(); ++b)
                        if (blk.get(a, b))
                            m.set(ec.offsets[k + 1][i] + a, ec.offsets[k][j] + b, true);
            }
        ec.cx.d.push_back(std::move(m));
    }
    ec.cx.validate();
    return ec;
}

}  // namespace

ExtComplex ext_complex_from_S0(const PosetFunctor& f) {
    require_full_lattice(f, "ext complex");
    return dual_steinberg_complex(f, 0, f.poset.n + 1);
}

HomologySpace ext_from_S0(const PosetFunctor& f, std::size_t k) {
    ExtComplex ec = ext_complex_from_S0(f);
    if (k >= ec.cx.dims.size()) return HomologySpace{0, GF2Matrix(0, 0), GF2Matrix(0, 0)};
    return ec.cx.homology(k);
}

std::vector<std::size_t> ext_dims_from_S0(const PosetFunctor& f) {
    return ext_complex_from_S0(f).cx.homology_dims();
}

ExtComplex oliver_complex(const PosetFunctor& f) {
    if (f.poset.kind != PosetKind::nonzero)
        throw std::invalid_argument("codim complex: functor must live on nonzero subspaces");
    return dual_steinberg_complex(f, 1, f.poset.n);
}

std::vector<std::size_t> oliver_dims(const PosetFunctor& f) {
    return oliver_complex(f).cx.homology_dims();
}

KlimReport klim_bridge(const PosetFunctor& f) {
    require_full_lattice(f, "limit bridge");
    int n = f.poset.n;
    KlimReport rep;
    rep.ext_dims = ext_dims_from_S0(f);
    rep.f0_dim = f.dims[f.poset.index_of(zero_subspace(n))];
    PosetFunctor g = restrict_functor(f, poset_nonzero(n));
    rep.lim_dims = derived_limit_dims(g);
    rep.lim_dims.resize(std::max<std::size_t>(n, rep.lim_dims.size()), 0);
    if (n == 0) {
        rep.lim0_dim = 0;
        rep.rank_rho = 0;
        rep.ok = rep.ext_dims.at(0) == rep.f0_dim;
        return rep;
    }
    LComplex lc = l_complex(g);
    HomologySpace lim0 = lc.cx.homology(0);
    rep.lim0_dim = lim0.dim;
    // restriction of f(0) along every single-element simplex
    GF2Matrix rho(lc.cx.dims[0], rep.f0_dim);
    std::size_t e0 = f.poset.index_of(zero_subspace(n));
    for (std::size_t s = 0; s < lc.simplices[0].size(); ++s) {
        const Subspace& u = g.poset.elements[lc.simplices[0][s][0]];
        GF2Matrix blk = f.transition(e0, f.poset.index_of(u));
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                if (blk.get(r, c)) rho.set(lc.offsets[0][s] + r, c, true);
    }
    rep.rank_rho = rank_of(lim0.coords * rho);
    bool ok = rep.ext_dims.at(0) + rep.rank_rho == rep.f0_dim &&
              rep.ext_dims.at(1) + rep.rank_rho == rep.lim0_dim;
    for (int k = 1; k < n; ++k)
        ok = ok && rep.lim_dims.at(k) == rep.ext_dims.at(k + 1);
    rep.ok = ok;
    return rep;
}

Bicomplex b_bicomplex(const PosetFunctor& f) {
    FunctorBicomplex bx = bicomplex_I(f);
    std::size_t e0 = f.poset.index_of(zero_subspace(f.poset.n));
    Bicomplex b;
    b.n = bx.n;
    b.dims.resize(bx.n + 1);
    b.dh.resize(bx.n + 1);
    b.dv.resize(bx.n + 1);
    for (int p = 0; p <= bx.n; ++p)
        for (int j = 0; j <= p; ++j) {
            b.dims[p].push_back(bx.cells[p][j].dims[e0]);
            if (p < bx.n) b.dh[p].push_back(bx.dh[p][j].at[e0]);
            if (j > 0) b.dv[p].push_back(bx.dv[p][j - 1].at[e0]);
        }
    return b;
}

FilteredE1 filtered_e1(const CochainComplex& cx,
                       const std::vector<std::vector<GF2Matrix>>& filt) {
    cx.validate();
    std::size_t levels = filt.size();
    std::size_t degrees = cx.dims.size();
    for (std::size_t p = 0; p < levels; ++p) {
        if (filt[p].size() != degrees)
            throw std::invalid_argument("filtration: degree count mismatch");
        for (std::size_t k = 0; k < degrees; ++k) {
            const GF2Matrix& rows = filt[p][k];
            if (rows.cols() != cx.dims[k])
                throw std::invalid_argument("filtration: ambient dimension mismatch");
            if (p == 0 && rank_of(rows) != cx.dims[k])
                throw std::invalid_argument("filtration: level 0 must be everything");
            if (p + 1 < levels && !express_in_rows(rows, filt[p + 1][k]))
                throw std::invalid_argument("filtration: levels must decrease");
            if (k + 1 < degrees) {
                GF2Matrix image = rows * cx.d[k].transposed();  // rows mapped through d
                if (!express_in_rows(filt[p][k + 1], image))
                    throw std::invalid_argument("filtration: not preserved by d");
            }
        }
    }
    // graded charts, induced differential, then columnwise cohomology
    std::vector<std::vector<HomologySpace>> q(levels);
    for (std::size_t p = 0; p < levels; ++p)
        for (std::size_t k = 0; k < degrees; ++k)
            q[p].push_back(span_quotient(
                filt[p][k], p + 1 < levels ? filt[p + 1][k] : GF2Matrix(0, cx.dims[k])));
    std::vector<std::vector<GF2Matrix>> dbar(levels);
    for (std::size_t p = 0; p < levels; ++p)
        for (std::size_t k = 0; k + 1 < degrees; ++k)
            dbar[p].push_back(q[p][k + 1].coords * cx.d[k] * q[p][k].reps.transposed());
    std::vector<std::vector<HomologySpace>> page(levels);
    FilteredE1 out;
    out.dims.assign(levels, std::vector<std::size_t>(degrees, 0));
    out.d1_rank.assign(levels, std::vector<std::size_t>(degrees, 0));
    for (std::size_t p = 0; p < levels; ++p) {
        CochainComplex col;
        col.dims.assign(degrees, 0);
        for (std::size_t k = 0; k < degrees; ++k) col.dims[k] = q[p][k].dim;
        col.d = dbar[p];
        col.validate();
        for (std::size_t k = 0; k < degrees; ++k) {
            page[p].push_back(col.homology(k));
            out.dims[p][k] = page[p][k].dim;
        }
    }
    for (std::size_t p = 0; p + 1 < levels; ++p)
        for (std::size_t k = 0; k + 1 < degrees; ++k) {
            if (page[p][k].dim == 0 || page[p + 1][k + 1].dim == 0) continue;
            // lift classes, push through d, read off in the next level
            GF2Matrix amb = page[p][k].reps * q[p][k].reps;
            GF2Matrix image = amb * cx.d[k].transposed();
            if (!express_in_rows(filt[p + 1][k + 1], image))
                throw std::logic_error("filtration: page-one image escapes the next level");
            GF2Matrix in_q = image * q[p + 1][k + 1].coords.transposed();
            GF2Matrix cls = in_q * page[p + 1][k + 1].coords.transposed();
            out.d1_rank[p][k] = rank_of(cls);
        }
    return out;
}

E1Report be1_check(const PosetFunctor& f) {
    require_full_lattice(f, "page-one check");
    int n = f.poset.n;
    Bicomplex b = b_bicomplex(f);
    E1Report rep;
    auto triangle = [&](std::size_t fill) {
        std::vector<std::vector<std::size_t>> g(n + 1);
        for (int p = 0; p <= n; ++p) g[p].assign(p + 1, fill);
        return g;
    };
    rep.dims_vertical = triangle(0);
    rep.dims_filtered = triangle(0);
    rep.d1_rank_vertical = triangle(0);
    rep.d1_rank_filtered = triangle(0);
    // columnwise cohomology of the evaluated bicomplex; t counts up from the
    // deepest cell, so cell (p, j) sits at position t = p - j
    std::vector<std::vector<HomologySpace>> vert(n + 1);
    for (int p = 0; p <= n; ++p) {
        CochainComplex col;
        col.dims.assign(p + 1, 0);
        for (int t = 0; t <= p; ++t) col.dims[t] = b.dims[p][p - t];
        for (int t = 0; t < p; ++t) col.d.push_back(b.dv[p][p - t - 1]);
        col.validate();
        for (int t = 0; t <= p; ++t) {
            vert[p].push_back(col.homology(t));
            rep.dims_vertical[p][p - t] = vert[p][t].dim;
        }
    }
    for (int p = 0; p < n; ++p)
        for (int j = 0; j <= p; ++j) {
            const HomologySpace& src = vert[p][p - j];
            const HomologySpace& dst = vert[p + 1][p + 1 - j];
            if (src.dim == 0 || dst.dim == 0) continue;
            GF2Matrix image = src.reps * b.dh[p][j].transposed();
            GF2Matrix cls = image * dst.coords.transposed();
            rep.d1_rank_vertical[p][j] = rank_of(cls);
        }
    // the same page out of the codim filtration of the evaluated resolution
    FunctorComplex tot = tot_resolution(f);
    std::size_t e0 = f.poset.index_of(zero_subspace(n));
    CochainComplex tcx;
    for (int k = 0; k <= n; ++k) tcx.dims.push_back(tot.terms[k + 1].dims[e0]);
    for (int k = 0; k < n; ++k) tcx.d.push_back(tot.diffs[k + 1].at[e0]);
    std::vector<std::vector<GF2Matrix>> filt(n + 1);
    for (int p = 0; p <= n; ++p)
        for (int k = 0; k <= n; ++k)
            filt[p].push_back(filt2(tot.terms[k + 1], p).inclusions[e0]);
    FilteredE1 fe = filtered_e1(tcx, filt);
    for (int p = 0; p <= n; ++p)
        for (int j = 0; j <= p; ++j) {
            rep.dims_filtered[p][j] = fe.dims[p][p - j];
            rep.d1_rank_filtered[p][j] = fe.d1_rank[p][p - j];
        }
    rep.ok = rep.dims_vertical == rep.dims_filtered &&
             rep.d1_rank_vertical == rep.d1_rank_filtered;
    return rep;
}

}  // namespace stlab
