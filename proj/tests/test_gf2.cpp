#include <doctest.h>

#include <random>

#include "steinberg_lab/gf2.hpp"

using namespace stlab;

namespace {

GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

GF2Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        GF2Matrix m = random_matrix(rng, n, n);
        if (rank_of(m) == n) return m;
    }
}

GF2Matrix from_bits(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t nr = rows.size(), nc = rows.begin()->size();
    GF2Matrix m(nr, nc);
    std::size_t r = 0;
    for (auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("rref ranks and pivots") {
    auto id2 = GF2Matrix::identity(2);
    auto rr = rref(id2);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rr.reduced == id2);

    CHECK(rank_of(GF2Matrix(3, 3)) == 0);

    // three distinct weight-2 rows in F_2^3 span a plane
    auto m = from_bits({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank_of(m) == 2);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(GF2Matrix::identity(4)).rows() == 0);
    CHECK(kernel_basis(GF2Matrix(2, 3)).rows() == 3);

    auto ones = from_bits({{1, 1, 1}});
    auto k = kernel_basis(ones);
    REQUIRE(k.rows() == 2);
    for (std::size_t r = 0; r < 2; ++r) CHECK(ones.apply(k.row(r)).is_zero());
}

TEST_CASE("solve_linear_system enumerates the affine solution set") {
    auto a = from_bits({{1, 1}});
    GF2Vector b(1);
    b.set(0, true);
    auto s = solve_linear_system(a, b);
    REQUIRE(s.consistent);
    CHECK(a.apply(s.particular) == b);
    REQUIRE(s.kernel.rows() == 1);
    GF2Vector other = s.particular;
    other ^= s.kernel.row(0);
    CHECK(a.apply(other) == b);
    CHECK_FALSE(other == s.particular);

    // 0 x = 1 has no solution
    auto z = from_bits({{0, 0}});
    CHECK_FALSE(solve_linear_system(z, b).consistent);
}

TEST_CASE("solve_matrix and express_in_rows round-trip") {
    std::mt19937_64 rng(420001);
    for (int it = 0; it < 50; ++it) {
        auto a = random_matrix(rng, 5, 7);
        auto x0 = random_matrix(rng, 7, 3);
        auto b = a * x0;
        auto x = solve_matrix(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
    for (int it = 0; it < 50; ++it) {
        auto basis = random_matrix(rng, 4, 9);
        auto c0 = random_matrix(rng, 6, 4);
        auto v = c0 * basis;
        auto c = express_in_rows(basis, v);
        REQUIRE(c.has_value());
        CHECK(*c * basis == v);
    }
    // a vector outside the row space is rejected
    auto basis = from_bits({{1, 0, 0}});
    auto v = from_bits({{0, 1, 0}});
    CHECK_FALSE(express_in_rows(basis, v).has_value());
}

TEST_CASE("rank equals transpose rank, kernel complements rank") {
    std::mt19937_64 rng(420002);
    for (int it = 0; it < 100; ++it) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        auto m = random_matrix(rng, rows, cols);
        auto r = rank_of(m);
        CHECK(r == rank_of(m.transposed()));
        CHECK(kernel_basis(m).rows() + r == cols);
        CHECK(row_basis(m).rows() == r);
        CHECK(image_basis(m).rows() == r);
    }
}

TEST_CASE("kronecker respects composition") {
    std::mt19937_64 rng(420003);
    for (int it = 0; it < 30; ++it) {
        auto a = random_matrix(rng, 3, 4);
        auto b = random_matrix(rng, 2, 5);
        auto c = random_matrix(rng, 4, 2);
        auto d = random_matrix(rng, 5, 3);
        CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    }
    CHECK(kronecker(GF2Matrix::identity(3), GF2Matrix::identity(4)) == GF2Matrix::identity(12));
}

TEST_CASE("row span keeps a canonical reduced basis") {
    RowSpan span(4);
    auto v = [](std::initializer_list<int> bits) {
        GF2Vector out(4);
        std::size_t i = 0;
        for (int b : bits) out.set(i++, b);
        return out;
    };
    CHECK(span.insert(v({1, 1, 0, 0})));
    CHECK(span.insert(v({0, 1, 1, 0})));
    CHECK_FALSE(span.insert(v({1, 0, 1, 0})));
    CHECK(span.dim() == 2);
    CHECK(span.contains(v({1, 0, 1, 0})));
    CHECK_FALSE(span.contains(v({0, 0, 0, 1})));
    CHECK(span.basis() == from_bits({{1, 0, 1, 0}, {0, 1, 1, 0}}));
}

TEST_CASE("complex validation") {
    CochainComplex cx;
    cx.dims = {2, 2};
    cx.d = {GF2Matrix::identity(2)};
    CHECK_NOTHROW(cx.validate());

    cx.dims = {2, 2, 2};
    cx.d = {GF2Matrix::identity(2), GF2Matrix::identity(2)};
    CHECK_THROWS(cx.validate());  // id * id != 0

    cx.d[1] = GF2Matrix(2, 2);
    CHECK_NOTHROW(cx.validate());

    cx.d[0] = GF2Matrix(3, 2);
    CHECK_THROWS(cx.validate());  // shape mismatch
}

TEST_CASE("homology of basic complexes") {
    // single space, no differentials
    CochainComplex point;
    point.dims = {3};
    CHECK(point.homology_dims() == std::vector<std::size_t>{3});

    // three points augmented over one empty simplex: one surviving class pair
    CochainComplex pts;
    pts.dims = {3, 1};
    pts.d = {from_bits({{1, 1, 1}})};
    CHECK(pts.homology_dims() == std::vector<std::size_t>{2, 0});
    CHECK_FALSE(pts.is_exact());

    // identity differential is exact
    CochainComplex ex;
    ex.dims = {2, 2};
    ex.d = {GF2Matrix::identity(2)};
    CHECK(ex.is_exact());
}

TEST_CASE("homology chart identities") {
    std::mt19937_64 rng(420004);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + rng() % 6;
        auto d_in = random_matrix(rng, n, 1 + rng() % 6);
        // d_out * d_in = 0 iff every row of d_out lies in ker(d_in^T)
        auto lk = kernel_basis(d_in.transposed());
        auto sel = random_matrix(rng, 1 + rng() % 4, lk.rows());
        auto d_out = sel * lk;
        REQUIRE((d_out * d_in).is_zero());

        auto h = homology_chart(d_out, d_in);
        // representatives are cocycles and chart is a left inverse on them
        for (std::size_t r = 0; r < h.reps.rows(); ++r)
            CHECK(d_out.apply(h.reps.row(r)).is_zero());
        if (h.dim) {
            CHECK(h.coords * h.reps.transposed() == GF2Matrix::identity(h.dim));
            CHECK((h.coords * d_in).is_zero());
        }
        // dimension agrees with rank arithmetic
        std::size_t z = n - rank_of(d_out);
        CHECK(h.dim == z - rank_of(d_in));
    }
}

TEST_CASE("homology dims are invariant under change of basis") {
    std::mt19937_64 rng(420005);
    for (int it = 0; it < 20; ++it) {
        CochainComplex cx;
        cx.dims = {4, 6, 5};
        auto d0 = random_matrix(rng, 6, 4);
        auto lk = kernel_basis(d0.transposed());
        auto sel = random_matrix(rng, 5, lk.rows());
        cx.d = {d0, sel * lk};
        auto base = cx.homology_dims();

        // conjugate by invertible maps q_k on each degree
        auto q0 = random_invertible(rng, 4);
        auto q1 = random_invertible(rng, 6);
        auto q2 = random_invertible(rng, 5);
        CochainComplex cy;
        cy.dims = cx.dims;
        cy.d = {q1 * cx.d[0] * *solve_matrix(q0, GF2Matrix::identity(4)),
                q2 * cx.d[1] * *solve_matrix(q1, GF2Matrix::identity(6))};
        CHECK(cy.homology_dims() == base);
    }
}
