#pragma once
// Complexes of poset functors on the subspace lattice: projective and
// injective resolutions of simple functors, the coinduced bicomplex of an
// arbitrary functor with its total resolution, Ext groups off the zero
// subspace, the codim-1 limit complex, and the two spectral-sequence
// front ends used by the consistency checks.

#include <cstddef>
#include <vector>

#include "steinberg_lab/functors.hpp"
#include "steinberg_lab/steinberg.hpp"

namespace stlab {

// One map of functors, stored pointwise: at[i] acts at poset element i.
struct NaturalTransformation {
    std::vector<GF2Matrix> at;
};

// terms[0] -> terms[1] -> ... with diffs[k] : terms[k] -> terms[k+1].
// All terms live on the same poset.
struct FunctorComplex {
    std::vector<PosetFunctor> terms;
    std::vector<NaturalTransformation> diffs;

    // shape, naturality over every cover, d after d = 0 at every element
    void validate() const;

    CochainComplex at_element(std::size_t elem) const;

    // every pointwise complex is exact in every degree
    bool exact_everywhere() const;
};

// Augmented projective resolution of the simple functor at w:
//   P_K -> ... -> P_1 -> P_0 -> S_w,   K = codim w,
// P_k the direct sum over w <= z with dim z/w = k of St(z/w) (x) P_z.
// Stored left to right, so the last term is S_w; exact at every element.
FunctorComplex proj_resolution_simple(const PosetView& poset, const Subspace& w);

// Augmented injective resolution of the simple functor at z:
//   S_z -> I^0 -> I^1 -> ... -> I^K,   K = dim z,
// I^k the direct sum over w <= z with dim z/w = k of St(z/w)* (x) J^w,
// J^w the injective indicator functor of the interval below w.
FunctorComplex inj_resolution_simple(const PosetView& poset, const Subspace& z);

// Coinduced bicomplex of a functor f on the full lattice.  Cell (p, q) with
// p = codim w, q = -codim z holds the sum over pairs w <= z of
// St(z/w)* (x) f(z) (x) J^w; the p-differential strips a line off w, the
// q-differential pushes z up through f.  Cells are indexed [p][j] with
// j = -q, 0 <= j <= p <= n.
struct FunctorBicomplex {
    int n = 0;
    // summand bookkeeping per cell: parallel lists of (w, z) pairs
    std::vector<std::vector<std::vector<Subspace>>> pair_w, pair_z;
    std::vector<std::vector<PosetFunctor>> cells;        // [p][j]
    std::vector<std::vector<NaturalTransformation>> dh;  // (p,j) -> (p+1,j)
    std::vector<std::vector<NaturalTransformation>> dv;  // (p,j) -> (p,j-1)
};

FunctorBicomplex bicomplex_I(const PosetFunctor& f);

// Total complex of bicomplex_I(f), augmented by the unit
//   f -> Tot^0 -> Tot^1 -> ... -> Tot^n,
// Tot^k the sum over pairs with dim z/w = k.  Exact at every element, so the
// Tot terms form an injective resolution of f.
FunctorComplex tot_resolution(const PosetFunctor& f);

// Cochain complex whose degree-k piece sums St(z)* (x) f(z) over dim z = k;
// its cohomology computes Ext^k from the simple functor at 0 into f.
// f lives on the full lattice.
struct ExtComplex {
    CochainComplex cx;
    std::vector<std::vector<Subspace>> summands;        // [k][i]
    std::vector<std::vector<std::size_t>> offsets;      // [k][i]
};

ExtComplex ext_complex_from_S0(const PosetFunctor& f);
HomologySpace ext_from_S0(const PosetFunctor& f, std::size_t k);
std::vector<std::size_t> ext_dims_from_S0(const PosetFunctor& f);

// Degree-k piece sums St(w)* (x) f(w) over dim w = k+1, for f on the lattice
// of nonzero subspaces; cohomology computes the derived limits of f.
ExtComplex oliver_complex(const PosetFunctor& f);
std::vector<std::size_t> oliver_dims(const PosetFunctor& f);

// Comparison of the derived limits of f restricted to nonzero subspaces
// against Ext from the simple functor at 0, including the rank bookkeeping
// of the low-degree exact sequence
//   0 -> Hom(S_0, f) -> f(0) -> lim^0 -> Ext^1 -> 0.
struct KlimReport {
    bool ok = false;
    std::size_t f0_dim = 0;       // dim f(0)
    std::size_t lim0_dim = 0;     // dim lim^0 over nonzero subspaces
    std::size_t rank_rho = 0;     // rank of f(0) -> lim^0
    std::vector<std::size_t> lim_dims;  // lim^k, k = 0..n-1
    std::vector<std::size_t> ext_dims;  // Ext^k, k = 0..n
};

KlimReport klim_bridge(const PosetFunctor& f);

// bicomplex_I(f) evaluated at the zero subspace: a bicomplex of plain
// vector spaces with the same cell indexing.
struct Bicomplex {
    int n = 0;
    std::vector<std::vector<std::size_t>> dims;   // [p][j]
    std::vector<std::vector<GF2Matrix>> dh;       // (p,j) -> (p+1,j)
    std::vector<std::vector<GF2Matrix>> dv;       // (p,j) -> (p,j-1)
};

Bicomplex b_bicomplex(const PosetFunctor& f);

// First page of a filtered cochain complex.  filt[p][k] rows span the p-th
// filtration level of degree k; levels decrease in p, start at the whole
// space and end at zero, and the differential must preserve them.
struct FilteredE1 {
    std::vector<std::vector<std::size_t>> dims;      // [p][k], k total degree
    std::vector<std::vector<std::size_t>> d1_rank;   // [p][k]
};

FilteredE1 filtered_e1(const CochainComplex& cx,
                       const std::vector<std::vector<GF2Matrix>>& filt);

// Cross-check of the two spectral-sequence constructions for f on the full
// lattice: the column-wise cohomology of b_bicomplex(f) with its induced
// p-differential, against the first page of the codim filtration of the
// total resolution evaluated at 0.  Entries are compared as (dim, d1 rank)
// tables; disagreements land in the report instead of throwing.
struct E1Report {
    bool ok = false;
    // [p][j] with j = -q; total degree p - j
    std::vector<std::vector<std::size_t>> dims_vertical, dims_filtered;
    std::vector<std::vector<std::size_t>> d1_rank_vertical, d1_rank_filtered;
};

E1Report be1_check(const PosetFunctor& f);

}  // namespace stlab
