#include <doctest.h>

#include "necklace/errors.hpp"
#include "necklace/jacobi.hpp"
#include "necklace/splitmix.hpp"

using namespace necklace;

namespace {

// random star-free element over the base loops, paths of length <= maxlen
PathAlgebraElement random_free_element(const QuiverPtr& q, SplitMix64& rng, int maxlen,
                                       int nterms) {
    PathAlgebraElement x(q);
    for (int t = 0; t < nterms; ++t) {
        int len = static_cast<int>(rng.next() % (maxlen + 1));
        Path p;
        p.tail = p.head = 0;
        for (int s = 0; s < len; ++s)
            p.edges.push_back(q->base_edge(static_cast<int>(rng.next() % q->num_base_edges())));
        x.add_term(p, Rational(rng.range(-3, 3)));
    }
    return x;
}

}  // namespace

TEST_CASE("jacobi matrix basics") {
    auto q = double_quiver(loop_quiver(1));
    PathAlgebraElement x = PathAlgebraElement::edge(q, 0);
    Path e = Path::trivial(0);

    SUBCASE("identity map") {
        JacobiMatrix j = jacobi_matrix(q, {x});
        REQUIRE(j.size() == 1);
        BiPoly expect;
        bipoly_add_term(expect, e, e, 1);
        CHECK(j.entry(0, 0) == expect);
    }
    SUBCASE("x^2") {
        JacobiMatrix j = jacobi_matrix(q, {pa_mul(x, x)});
        BiPoly expect;
        bipoly_add_term(expect, e, make_path(*q, {0}), 1);
        bipoly_add_term(expect, make_path(*q, {0}), e, 1);
        CHECK(j.entry(0, 0) == expect);
    }
    SUBCASE("chain rule for F = G = x^2") {
        std::vector<PathAlgebraElement> F{pa_mul(x, x)};
        auto GF = compose_endo(F, F);  // x^4
        JacobiMatrix lhs = jacobi_matrix(q, GF);
        JacobiMatrix rhs = star_mul(substitute(jacobi_matrix(q, F), F), jacobi_matrix(q, F));
        CHECK(lhs == rhs);
        CHECK_FALSE(lhs == jacobi_matrix(q, F));
        // D(x^4) = sum_k x^k (x) x^{3-k}
        BiPoly expect;
        for (int k = 0; k <= 3; ++k) {
            Path u{0, 0, std::vector<int>(k, 0)}, v{0, 0, std::vector<int>(3 - k, 0)};
            bipoly_add_term(expect, u, v, 1);
        }
        CHECK(lhs.entry(0, 0) == expect);
    }
    SUBCASE("rejects multi-vertex quivers") {
        auto qa = double_quiver(line_quiver(2));
        CHECK_THROWS_AS(jacobi_matrix(qa, {PathAlgebraElement::edge(qa, 0)}), NotFreeAlgebra);
    }
    SUBCASE("rejects reversed edges") {
        CHECK_THROWS_AS(jacobi_matrix(q, {PathAlgebraElement::edge(q, 1)}), NotFreeAlgebra);
    }
}

TEST_CASE("chain rule on random endomorphisms") {
    SplitMix64 rng(4242);
    for (int ngen : {1, 2}) {
        auto q = double_quiver(loop_quiver(ngen));
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<PathAlgebraElement> F, G;
            for (int i = 0; i < ngen; ++i) {
                F.push_back(random_free_element(q, rng, 3, 2));
                G.push_back(random_free_element(q, rng, 3, 2));
            }
            JacobiMatrix lhs = jacobi_matrix(q, compose_endo(G, F));
            JacobiMatrix rhs = star_mul(substitute(jacobi_matrix(q, G), F), jacobi_matrix(q, F));
            CHECK(lhs == rhs);
        }
    }
}
