// Subspaces of F_2^n as rref bitmask rows, the posets built from them, and
// GL_n(F_2). A Subspace is canonical by construction, so equality is encoding
// equality and values can key maps directly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steinberg_lab/gf2.hpp"

namespace stlab {

// bit i = coefficient of coordinate i
using Mask = std::uint32_t;

struct Subspace {
    int n = 0;
    std::vector<Mask> rows;  // rref, pivots strictly increasing

    int dim() const { return static_cast<int>(rows.size()); }
    int codim() const { return n - dim(); }
    bool operator==(const Subspace&) const = default;
    // orders by (dim, rows); total on a fixed ambient
    bool operator<(const Subspace& o) const;
};

Subspace canonical_subspace(int n, std::vector<Mask> spanning);
Subspace zero_subspace(int n);
Subspace full_subspace(int n);

bool contains(const Subspace& big, const Subspace& small);
bool member(const Subspace& w, Mask v);
bool covers(const Subspace& lo, const Subspace& hi);  // lo < hi, corank one
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// vectors pairing to zero with all of w under the coordinate dot product
Subspace perp(const Subspace& w);
std::vector<Mask> member_masks(const Subspace& w);  // all 2^dim vectors, sorted

// all subspaces (optionally of one dimension), sorted; caps at n = 6
std::vector<Subspace> enumerate_subspaces(int n);
std::vector<Subspace> enumerate_subspaces(int n, int dim_filter);

// proj : F_2^n -> F_2^{n-dim w} with kernel w; section splits it using the
// lexicographically least coordinate subset completing w
struct QuotientChart {
    GF2Matrix proj;
    GF2Matrix section;
};
QuotientChart quotient_chart(int n, const Subspace& w);

struct GLElement {
    GF2Matrix m;
    bool operator==(const GLElement&) const = default;
};
GLElement gl_identity(int n);
GLElement gl_mul(const GLElement& a, const GLElement& b);  // a after b
GLElement gl_inverse(const GLElement& a);
// n <= 3 enumerates the whole group; n = 4 returns two generators unless
// full_four forces the 20160-element enumeration
std::vector<GLElement> enumerate_gl(int n, bool full_four = false);
Mask apply_mask(const GF2Matrix& g, Mask v);
Subspace act(const GLElement& g, const Subspace& w);

enum class PosetKind { all, nonzero, band, custom };

struct PosetView {
    int n = 0;
    PosetKind kind = PosetKind::custom;
    std::vector<Subspace> elements;  // sorted by operator<

    std::size_t index_of(const Subspace& w) const;  // throws when absent
    bool contains_element(const Subspace& w) const;
};

PosetView poset_all(int n);
PosetView poset_nonzero(int n);
// dim >= min_dim and codim >= min_codim
PosetView poset_band(int n, int min_dim, int min_codim);
// subspaces strictly between bot and top
PosetView poset_open_interval(const Subspace& bot, const Subspace& top);

// indices into p.elements, strictly increasing along inclusion
using Simplex = std::vector<std::size_t>;

// all k-simplices = chains of k+1 distinct comparable elements, lex order
std::vector<Simplex> chains(const PosetView& p, int k);

// covering relations of the poset itself: (lo, hi) with nothing strictly
// between among the elements present
std::vector<std::pair<std::size_t, std::size_t>> poset_covers(const PosetView& p);

// "0" for the zero space, else comma-joined decimal row masks
std::string subspace_key(const Subspace& w);

}  // namespace stlab
