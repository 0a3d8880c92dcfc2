#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>

#include "steinberg_lab/lattice.hpp"

using namespace stlab;

namespace {

long long gaussian_binomial(int n, int k) {
    // product form over 2, exact in 64 bits for n <= 6
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (1LL << (n - i)) - 1;
        den *= (1LL << (k - i)) - 1;
    }
    return num / den;
}

GF2Vector mask_vec(int n, Mask m) {
    GF2Vector v(n);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) v.set(i, true);
    return v;
}

}  // namespace

TEST_CASE("subspace counts by dimension") {
    std::map<int, std::vector<std::size_t>> expect = {
        {0, {1}},
        {1, {1, 1}},
        {2, {1, 3, 1}},
        {3, {1, 7, 7, 1}},
        {4, {1, 15, 35, 15, 1}},
    };
    for (auto& [n, counts] : expect) {
        auto all = enumerate_subspaces(n);
        std::vector<std::size_t> got(n + 1, 0);
        std::set<std::vector<Mask>> seen;
        for (auto& w : all) {
            ++got[w.dim()];
            CHECK(seen.insert(w.rows).second);  // no duplicates
            CHECK(canonical_subspace(n, w.rows) == w);
        }
        CHECK(got == counts);
        std::size_t total = 0;
        for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k);
        CHECK(all.size() == total);
        CHECK(std::is_sorted(all.begin(), all.end(),
                             [](const Subspace& a, const Subspace& b) { return a < b; }));
    }
    CHECK(enumerate_subspaces(3, 1).size() == 7);
    CHECK(enumerate_subspaces(4, 2).size() == 35);
    CHECK_THROWS(enumerate_subspaces(7));
}

TEST_CASE("canonicalization is idempotent and order independent") {
    std::mt19937_64 rng(430001);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + rng() % 5;
        std::vector<Mask> span;
        for (int j = 0; j < 4; ++j) span.push_back(rng() & ((Mask{1} << n) - 1));
        auto w = canonical_subspace(n, span);
        CHECK(canonical_subspace(n, w.rows) == w);
        std::shuffle(span.begin(), span.end(), rng);
        CHECK(canonical_subspace(n, span) == w);
        for (Mask v : span) CHECK(member(w, v));
    }
}

TEST_CASE("lattice operations") {
    auto zero = zero_subspace(2);
    auto l1 = canonical_subspace(2, {1});
    auto l2 = canonical_subspace(2, {2});
    auto l3 = canonical_subspace(2, {3});
    CHECK(sum(l1, zero) == l1);
    CHECK(sum(l1, l2) == full_subspace(2));
    CHECK(intersect(l1, l3) == zero);
    CHECK(contains(full_subspace(2), l3));
    CHECK_FALSE(contains(l1, l3));

    auto a = canonical_subspace(3, {1, 2});
    auto b = canonical_subspace(3, {2, 4});
    CHECK(intersect(a, b) == canonical_subspace(3, {2}));
    CHECK_THROWS(sum(l1, a));  // ambient mismatch

    CHECK(covers(l1, full_subspace(2)));
    CHECK_FALSE(covers(zero, full_subspace(2)));
}

TEST_CASE("modularity spot checks and perp duality") {
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_subspaces(n);
        for (auto& w : all) {
            CHECK(perp(perp(w)) == w);
            CHECK(perp(w).dim() == n - w.dim());
            CHECK(member_masks(w).size() == (std::size_t{1} << w.dim()));
        }
        // meet and join agree with element-wise membership on a sample
        std::mt19937_64 rng(430100 + n);
        for (int it = 0; it < 30; ++it) {
            auto& u = all[rng() % all.size()];
            auto& v = all[rng() % all.size()];
            auto m = intersect(u, v);
            auto s = sum(u, v);
            for (Mask x = 0; x < (Mask{1} << n); ++x) {
                bool in_u = member(u, x), in_v = member(v, x);
                CHECK(member(m, x) == (in_u && in_v));
                if (in_u || in_v) CHECK(member(s, x));
            }
            CHECK(m.dim() + s.dim() == u.dim() + v.dim());
        }
    }
}

TEST_CASE("quotient charts split the projection") {
    CHECK(quotient_chart(3, zero_subspace(3)).proj == GF2Matrix::identity(3));
    CHECK(quotient_chart(3, full_subspace(3)).proj.rows() == 0);

    auto diag = canonical_subspace(2, {3});
    auto ch = quotient_chart(2, diag);
    REQUIRE(ch.proj.rows() == 1);
    CHECK(ch.proj.get(0, 0));
    CHECK(ch.proj.get(0, 1));

    for (int n = 1; n <= 4; ++n)
        for (auto& w : enumerate_subspaces(n)) {
            auto c = quotient_chart(n, w);
            std::size_t q = n - w.dim();
            CHECK(c.proj.rows() == q);
            CHECK(c.proj * c.section == GF2Matrix::identity(q));
            CHECK(rank_of(c.proj) == q);
            // kernel of proj is exactly w
            for (Mask x = 0; x < (Mask{1} << n); ++x)
                CHECK(c.proj.apply(mask_vec(n, x)).is_zero() == member(w, x));
        }
}

TEST_CASE("GL enumeration and action") {
    CHECK(enumerate_gl(0, true).size() == 1);
    CHECK(enumerate_gl(1).size() == 1);
    CHECK(enumerate_gl(2).size() == 6);
    CHECK(enumerate_gl(3).size() == 168);

    auto gl3 = enumerate_gl(3);
    auto subs = enumerate_subspaces(3);
    std::mt19937_64 rng(430200);
    for (int it = 0; it < 100; ++it) {
        auto& g = gl3[rng() % gl3.size()];
        auto& h = gl3[rng() % gl3.size()];
        auto& w = subs[rng() % subs.size()];
        CHECK(act(gl_identity(3), w) == w);
        CHECK(act(gl_mul(g, h), w) == act(g, act(h, w)));
        CHECK(act(gl_inverse(g), act(g, w)) == w);
        CHECK(act(g, w).dim() == w.dim());
    }
}

TEST_CASE("GL4 generators close to the full group") {
    auto gens = enumerate_gl(4);
    REQUIRE(gens.size() == 2);
    auto encode = [](const GF2Matrix& m) {
        std::uint16_t code = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (m.get(r, c)) code |= std::uint16_t{1} << (r * 4 + c);
        return code;
    };
    std::set<std::uint16_t> seen{encode(GF2Matrix::identity(4))};
    std::vector<GF2Matrix> frontier{GF2Matrix::identity(4)};
    while (!frontier.empty()) {
        std::vector<GF2Matrix> next;
        for (auto& m : frontier)
            for (auto& g : gens) {
                auto p = g.m * m;
                if (seen.insert(encode(p)).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    CHECK(seen.size() == 20160);
}

TEST_CASE("poset views and chains") {
    auto building2 = poset_band(2, 1, 1);
    CHECK(building2.elements.size() == 3);
    CHECK(chains(building2, 0).size() == 3);
    CHECK(chains(building2, 1).empty());

    auto w0 = poset_nonzero(2);
    CHECK(chains(w0, 0).size() == 4);
    CHECK(chains(w0, 1).size() == 3);
    CHECK(chains(w0, 7).empty());

    auto building4 = poset_band(4, 1, 1);
    CHECK(building4.elements.size() == 65);
    CHECK(chains(building4, 0).size() == 65);
    CHECK(chains(building4, 1).size() == 315);
    CHECK(chains(building4, 2).size() == 315);
    CHECK(chains(building4, 3).empty());

    // simplices are strict inclusion chains in index order
    for (auto& s : chains(building4, 2)) {
        REQUIRE(s.size() == 3);
        for (int i = 0; i + 1 < 3; ++i) {
            CHECK(s[i] < s[i + 1]);
            CHECK(contains(building4.elements[s[i + 1]], building4.elements[s[i]]));
            CHECK(building4.elements[s[i]].dim() < building4.elements[s[i + 1]].dim());
        }
    }

    auto inter = poset_open_interval(zero_subspace(3), full_subspace(3));
    CHECK(inter.elements.size() == 14);
    CHECK(poset_open_interval(zero_subspace(3), canonical_subspace(3, {1})).elements.empty());
}

TEST_CASE("subspace keys") {
    CHECK(subspace_key(zero_subspace(3)) == "0");
    CHECK(subspace_key(canonical_subspace(2, {1, 2})) == "1,2");
    CHECK(subspace_key(canonical_subspace(3, {5})) == "5");
}
