#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "steinberg_lab/gf2.hpp"
#include "steinberg_lab/lattice.hpp"

// Degree-truncated polynomial cohomology of an elementary abelian 2-group:
// F2[x_1..x_n] with Steenrod squares, ideals generated by products of nonzero
// linear forms, restriction kernels, and the bounded radical comparison.

namespace stlab {

// exponent vector, one entry per variable
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);

// sparse F2 polynomial; a term is present iff its coefficient is 1
struct Poly {
    std::set<Monomial> terms;

    bool zero() const { return terms.empty(); }
    bool homogeneous() const;
    // maximal term degree; zero polynomial has degree 0
    unsigned degree() const;
};

bool operator==(const Poly& a, const Poly& b);
bool operator!=(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

Poly poly_zero();
Poly poly_one(int n);
// the linear form with coefficient mask u, as a polynomial
Poly form_poly(int n, Mask u);

class TruncatedPolyAlgebra {
public:
    TruncatedPolyAlgebra(int n, unsigned cap);

    int vars() const { return n_; }
    unsigned cap() const { return cap_; }

    std::size_t dim(unsigned d) const;
    // monomials of total degree d in ascending lexicographic order
    const std::vector<Monomial>& basis(unsigned d) const;
    std::size_t index_of(const Monomial& m) const;

    // p must be homogeneous of degree d (or zero)
    GF2Vector to_coords(const Poly& p, unsigned d) const;
    Poly from_coords(const GF2Vector& v, unsigned d) const;

    // multiplication by the nonzero form u, degree d -> d + 1; cached
    const GF2Matrix& form_action(Mask u, unsigned d) const;
    // p -> p^2, degree d -> 2d
    GF2Matrix squaring_matrix(unsigned d) const;

    // total Steenrod square; needs 2 * deg p <= cap
    Poly sq_total(const Poly& p) const;
    // degree-i component, acting termwise; a term of degree below i
    // contributes zero, any other needs its degree + i within cap
    Poly sq(unsigned i, const Poly& p) const;

private:
    void check_degree(unsigned d) const;

    int n_;
    unsigned cap_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    mutable std::map<std::pair<Mask, unsigned>, GF2Matrix> form_cache_;
};

// multiset of nonzero linear forms; the product polynomial has degree size()
struct FormProduct {
    int n = 0;
    std::vector<Mask> forms;  // sorted

    unsigned degree() const { return static_cast<unsigned>(forms.size()); }
    Poly poly() const;
};

bool operator==(const FormProduct& a, const FormProduct& b);
FormProduct form_product(int n, std::vector<Mask> forms);
FormProduct operator*(const FormProduct& a, const FormProduct& b);

// the forms of e whose restriction to w vanishes; vanishing_part(e, 0) = e,
// vanishing_part(e, V) = 1
FormProduct vanishing_part(const FormProduct& e, const Subspace& w);
// product of all nonzero forms, degree 2^n - 1
FormProduct all_nonzero_forms(int n);
// product of the nonzero forms vanishing on w, degree 2^codim(w) - 1
FormProduct forms_vanishing_on(const Subspace& w);

// basis of the span of e * (monomials of degree d - deg e); empty for
// d < deg e
GF2Matrix ideal_basis(const TruncatedPolyAlgebra& alg, const FormProduct& e,
                      unsigned d);

// restriction to the subspace w in the dual basis of its canonical row basis;
// rows index H^d(w) monomials, columns H^d(V) monomials
GF2Matrix restriction_matrix(const TruncatedPolyAlgebra& alg, const Subspace& w,
                             unsigned d);
// degree-d slice of ker(H*V -> H*W)
GF2Matrix restriction_kernel(const TruncatedPolyAlgebra& alg, const Subspace& w,
                             unsigned d);

// homogeneous ideal held degreewise; slices[d] rows span the degree-d piece
struct GradedIdeal {
    std::vector<GF2Matrix> slices;

    unsigned max_degree() const {
        return static_cast<unsigned>(slices.size()) - 1;
    }
    bool contains(const TruncatedPolyAlgebra& alg, const Poly& p) const;
    // closure under multiplication by every nonzero form, degreewise
    void validate(const TruncatedPolyAlgebra& alg) const;
};

GradedIdeal principal_ideal(const TruncatedPolyAlgebra& alg,
                            const FormProduct& e, unsigned dmax);
GradedIdeal ideal_from_generators(const TruncatedPolyAlgebra& alg,
                                  const std::vector<Poly>& gens, unsigned dmax);
GradedIdeal restriction_kernel_ideal(const TruncatedPolyAlgebra& alg,
                                     const Subspace& w, unsigned dmax);

struct StabilityViolation {
    unsigned degree = 0;  // degree of the offending basis element
    std::size_t row = 0;  // its row in the slice
    unsigned op = 0;      // the square that escapes the ideal
};

struct StabilityReport {
    bool ok = true;
    std::vector<StabilityViolation> violations;
};

// checks Sq^i(slice d) stays in slice d + i for all d + i <= dmax
StabilityReport sq_stability_check(const TruncatedPolyAlgebra& alg,
                                   const GradedIdeal& ideal, unsigned dmax);

struct RadicalReport {
    bool ok = false;
    unsigned degree = 0;
    // dim {x : x^(2^m) in (e)} for m = 0..m_max
    std::vector<std::size_t> power_dims;
    std::size_t radical_dim = 0;       // last entry of power_dims
    std::size_t intersection_dim = 0;  // dim of the intersected form kernels
    GF2Matrix radical_slice;           // rref
    GF2Matrix intersection_slice;      // rref
};

// degreewise comparison of {x : x^(2^m) in (e), m <= m_max} with the
// intersection of the restriction kernels of the hyperplanes ker u, u | e;
// e must have pairwise distinct forms and d * 2^m_max must fit the cap
RadicalReport radical_check(const TruncatedPolyAlgebra& alg,
                            const FormProduct& e, unsigned d, unsigned m_max);

}  // namespace stlab
