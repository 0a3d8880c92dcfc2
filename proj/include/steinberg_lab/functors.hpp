// Functors from a subspace poset to finite F_2-vector spaces, stored as one
// dimension per element and one matrix per covering relation. The simplicial
// complex L(F) computes derived limits; filtrations and simplex permutation
// maps operate on the same layouts.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steinberg_lab/gf2.hpp"
#include "steinberg_lab/lattice.hpp"

namespace stlab {

struct PosetFunctor {
    PosetView poset;
    std::vector<std::size_t> dims;  // by element index
    // key (lo, hi) is a covering pair; shape dims[hi] x dims[lo]
    std::map<std::pair<std::size_t, std::size_t>, GF2Matrix> cover_maps;

    // composite along the lex-least saturated chain; identity when from == to
    GF2Matrix transition(std::size_t from, std::size_t to) const;
    // shape agreement plus exhaustive saturated-chain functoriality
    void validate() const;
};

PosetFunctor constant_functor(const PosetView& p, std::size_t d);
PosetFunctor simple_functor(const PosetView& p, const Subspace& w);
PosetFunctor projective_functor(const PosetView& p, const Subspace& w);  // 1 iff w <= U
PosetFunctor injective_functor(const PosetView& p, const Subspace& w);   // 1 iff U <= w
PosetFunctor coinduced_functor(const PosetView& p, const Subspace& w);
// f restricted to a sub-poset; transitions compose through the larger poset
PosetFunctor restrict_functor(const PosetFunctor& f, const PosetView& sub);
// pointwise cokernel of a random map between projective sums, seeded
PosetFunctor random_functor(const PosetView& p, std::uint64_t seed);

// L^k(F) = direct sum over k-simplices of F(sup), differential by inclusion
// of simplices; simplices in the lex order produced by chains()
struct LComplex {
    CochainComplex cx;
    std::vector<std::vector<Simplex>> simplices;        // per degree
    std::vector<std::vector<std::size_t>> offsets;      // per degree, per simplex
    std::size_t simplex_index(int k, const Simplex& s) const;
};

LComplex l_complex(const PosetFunctor& f);
HomologySpace derived_limit(const PosetFunctor& f, int k);
std::vector<std::size_t> derived_limit_dims(const PosetFunctor& f);
// lim as the compatible-family kernel over covering pairs, bypassing L(F)
std::size_t limit_dim_equalizer(const PosetFunctor& f);

// permutation of element indices induced by a lattice automorphism
std::vector<std::size_t> automorphism_perm(const PosetView& p, const GLElement& g);
PosetFunctor compose_with(const PosetFunctor& f, const std::vector<std::size_t>& perm);
// chain map L(F) -> L(F∘φ); the component at simplex σ reads factor φσ
std::vector<GF2Matrix> lambda_phi(const PosetFunctor& f, const std::vector<std::size_t>& perm);

struct SubFunctor {
    PosetFunctor functor;
    std::vector<GF2Matrix> inclusions;  // rows: sub basis in ambient coordinates
};

// sub-functor from per-element row bases; throws when transitions escape
SubFunctor make_sub_functor(const PosetFunctor& f, std::vector<GF2Matrix> inclusions);
// support truncation: keep F(U) for dim U >= p
SubFunctor filt1(const PosetFunctor& f, int p);
// intersection of the kernels of F(U) -> F(U+W) over codim W < p; needs the
// full subspace poset
SubFunctor filt2(const PosetFunctor& f, int p);

std::string functor_to_json(const PosetFunctor& f);
PosetFunctor functor_from_json(const std::string& text);

}  // namespace stlab
