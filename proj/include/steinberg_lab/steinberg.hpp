// Steinberg modules as the top reduced homology of the poset of proper
// nonzero subspaces, generalized to any layer top/bot through the open
// interval between them. Chains are augmented: the slot with s vertices sits
// in homological position s, the empty chain included, which makes the one
// dimensional conventions for layers of dimension 0 and 1 come out of the
// same code path instead of special cases.

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "steinberg_lab/gf2.hpp"
#include "steinberg_lab/lattice.hpp"

namespace stlab {

struct SteinbergModule {
    Subspace bot, top;
    std::size_t dim = 0;
    PosetView interval;                 // open interval (bot, top)
    std::vector<Simplex> top_chains;    // m-1 vertex chains; {{}} when m <= 1
    std::vector<Simplex> below_chains;  // m-2 vertex chains; empty when m <= 1
    GF2Matrix boundary;                 // below x top chain coordinates
    GF2Matrix cycles;                   // dim x top rows, the module basis
    GF2Matrix coords;                   // dim x top chart, cycle -> coordinates

    int layer_dim() const { return top.dim() - bot.dim(); }
    std::size_t chain_dim() const { return top_chains.size(); }
};

using StHandle = std::shared_ptr<const SteinbergModule>;

// cached per interval; layer dimension capped at 4 unless unsafe
StHandle steinberg_interval(const Subspace& bot, const Subspace& top, bool unsafe = false);
StHandle steinberg(int n, bool unsafe = false);  // the full layer of F_2^n

// reduced homology of the augmented interval complex, one entry per vertex
// count 0..m-1
std::vector<std::size_t> reduced_homology_dims(const Subspace& bot, const Subspace& top);

// keep the chains peaking at h, strip h: St(bot,top) -> St(bot,h) for h one
// step below top; identity on the one dimensional conventions
GF2Matrix interval_r_map(const SteinbergModule& src, const Subspace& h);
// keep the chains starting at d, strip d: St(bot,top) -> St(d,top) for d one
// step above bot
GF2Matrix interval_s_map(const SteinbergModule& src, const Subspace& d);

// ambient typed maps of the full layer
GF2Matrix r_map(int n, const Subspace& h);  // St_V -> St_H, codim h = 1
// St_V -> St of the quotient ambient F_2^{n-1}, vertices pushed through
// quotient_chart(n, d)
GF2Matrix s_map(int n, const Subspace& d);  // dim d = 1

// chain relabeling along g from src to dst, on module coordinates; requires
// act(g, dst interval) = src interval endpointwise
GF2Matrix gl_transport(const GLElement& g, const SteinbergModule& src,
                       const SteinbergModule& dst);
// right action: the returned matrices satisfy R(gh) = R(h) R(g)
GF2Matrix gl_on_steinberg(const GLElement& g, const SteinbergModule& st);

struct LusztigComplex {
    int n = 0;
    int variant = 1;
    std::vector<std::vector<Subspace>> summands;    // per degree p
    std::vector<std::vector<std::size_t>> offsets;  // per degree, per summand
    std::vector<std::size_t> dims;                  // per degree p = 0..n
    std::vector<GF2Matrix> boundary;                // [p-1]: degree p -> p-1

    CochainComplex as_cochain() const;  // ascending, C_k = degree n-k
    std::vector<std::size_t> homology_dims() const;  // indexed by degree p
    bool is_acyclic() const;
};

// variant 1: degree p sums St_W over dim W = p, blocks keep-and-strip at the
// top; variant 2: degree p sums St over the layers V/W with codim W = p,
// blocks keep-and-strip at the bottom
LusztigComplex lusztig_complex(int n, int variant);

}  // namespace stlab
