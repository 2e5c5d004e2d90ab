#include <doctest.h>

#include "necklace/errors.hpp"
#include "necklace/necklace_lie.hpp"
#include "necklace/preprojective.hpp"
#include "necklace/splitmix.hpp"

using namespace necklace;

TEST_CASE("quotient dimensions") {
    SUBCASE("jordan quiver is the polynomial ring in two variables") {
        auto tq = build_quotient(double_quiver(loop_quiver(1)), {}, 4);
        long expect[] = {1, 2, 3, 4, 5};
        for (int k = 0; k <= 4; ++k) CHECK(tq.dim(k) == expect[k]);
    }
    SUBCASE("two loops") {
        auto tq = build_quotient(double_quiver(loop_quiver(2)), {}, 4);
        long expect[] = {1, 4, 15, 56, 209};
        for (int k = 0; k <= 4; ++k) CHECK(tq.dim(k) == expect[k]);
    }
    SUBCASE("degree zero is the vertex span") {
        auto tq = build_quotient(double_quiver(line_quiver(3)), {}, 0);
        CHECK(tq.dim(0) == 3);
    }
}

TEST_CASE("normal form") {
    auto q = double_quiver(loop_quiver(1));
    auto tq = build_quotient(q, {}, 4);
    PathAlgebraElement w = moment_element(q);

    SUBCASE("defining relation reduces to zero (c = 0)") {
        CHECK(tq.normal_form(w).is_zero());
    }
    SUBCASE("trivial paths are fixed") {
        auto e = PathAlgebraElement::trivial(q, 0);
        CHECK(tq.normal_form(e) == e);
    }
    SUBCASE("x* x rewrites to x x*") {
        PathAlgebraElement xsx(q, make_path(*q, {1, 0}));
        PathAlgebraElement xxs(q, make_path(*q, {0, 1}));
        CHECK(tq.normal_form(xsx) == xxs);
        CHECK(tq.normal_form(xxs) == xxs);
    }
    SUBCASE("idempotent and multiplicative") {
        SplitMix64 rng(99);
        PathTable pt(q);
        for (int t = 0; t < 30; ++t) {
            PathAlgebraElement x(q), y(q);
            int lx = static_cast<int>(rng.next() % 3), ly = static_cast<int>(rng.next() % 2);
            x.add_term(pt.path_at(lx, 0, 0, static_cast<long>(rng.next() % pt.count(lx, 0, 0))),
                       Rational(rng.range(-3, 3)));
            y.add_term(pt.path_at(ly, 0, 0, static_cast<long>(rng.next() % pt.count(ly, 0, 0))),
                       Rational(rng.range(-3, 3)));
            CHECK(tq.normal_form(tq.normal_form(x)) == tq.normal_form(x));
            CHECK(tq.normal_form(pa_mul(x, y)) ==
                  tq.normal_form(pa_mul(tq.normal_form(x), tq.normal_form(y))));
        }
    }
    SUBCASE("degree above the truncation") {
        PathAlgebraElement big(q, make_path(*q, {0, 0, 0, 0, 0}));
        CHECK_THROWS_AS(tq.normal_form(big), TruncationExceeded);
    }
}

TEST_CASE("deformed normal form") {
    auto q = double_quiver(loop_quiver(1));
    std::map<int, Rational> c{{0, Rational(1)}};
    auto tq = build_quotient(q, c, 4);
    PathAlgebraElement w = moment_element(q);

    SUBCASE("defining relation reduces to the parameter") {
        CHECK(tq.normal_form(w) == PathAlgebraElement::trivial(q, 0));
    }
    SUBCASE("graded queries are gated") {
        CHECK_THROWS_AS(tq.dim(2), DeformedUnsupported);
        CHECK_THROWS_AS(l_dims(tq, 3), DeformedUnsupported);
    }
    SUBCASE("multiplicativity still holds") {
        PathAlgebraElement xsx(q, make_path(*q, {1, 0}));
        PathAlgebraElement xxs(q, make_path(*q, {0, 1}));
        // x* x = x x* - 1 in the deformed quotient (Weyl algebra)
        CHECK(tq.normal_form(xsx) == tq.normal_form(xxs) - PathAlgebraElement::trivial(q, 0));
    }
}

TEST_CASE("hilbert check") {
    SUBCASE("two loops to degree 5") {
        Report rep = hilbert_check(loop_quiver(2), 5);
        CHECK(rep.pass);
        REQUIRE(rep.lines.size() == 6);
    }
    SUBCASE("three loops to degree 4 matches 1/(1-6t+t^2)") {
        auto tq = build_quotient(double_quiver(loop_quiver(3)), {}, 4);
        long expect[] = {1, 6, 35, 204, 1189};
        for (int k = 0; k <= 4; ++k) CHECK(tq.dim(k) == expect[k]);
    }
    SUBCASE("triple kronecker to degree 5, matrix level") {
        Report rep = hilbert_check(kronecker_quiver(3), 5);
        CHECK(rep.pass);
    }
    SUBCASE("dynkin input is rejected") {
        CHECK_THROWS_AS(hilbert_check(line_quiver(2), 3), Precondition);
    }
}

TEST_CASE("euler check") {
    CHECK(euler_check(loop_quiver(2), 5).pass);
    CHECK(euler_check(kronecker_quiver(3), 5).pass);
    CHECK_THROWS_AS(euler_check(loop_quiver(1), 3), Precondition);
    // a wild tree: a star with five arms
    CHECK(classify(star_quiver(5)) == QuiverClass::Wild);
    CHECK(euler_check(star_quiver(5), 4).pass);
    CHECK(hilbert_check(star_quiver(5), 4).pass);
}

TEST_CASE("center probe") {
    SUBCASE("two loops: only scalars, and nothing in degrees 1..3") {
        auto tq = build_quotient(double_quiver(loop_quiver(2)), {}, 4);
        CHECK(center_probe(tq, 0) == 1);
        for (int k = 1; k <= 3; ++k) CHECK(center_probe(tq, k) == 0);
    }
    SUBCASE("jordan quiver: the whole commutative algebra") {
        auto tq = build_quotient(double_quiver(loop_quiver(1)), {}, 4);
        CHECK(center_probe(tq, 0) == 1);
        CHECK(center_probe(tq, 1) == 2);
        CHECK(center_probe(tq, 2) == 3);
    }
    SUBCASE("truncation guard") {
        auto tq = build_quotient(double_quiver(loop_quiver(1)), {}, 2);
        CHECK_THROWS_AS(center_probe(tq, 2), TruncationExceeded);
    }
}

TEST_CASE("commutator quotient dimensions") {
    SUBCASE("degree zero counts vertices") {
        auto tq = build_quotient(double_quiver(line_quiver(2)), {}, 3);
        CHECK(l_dims(tq, 0)[0] == 2);
    }
    SUBCASE("jordan quiver: commutative, so L = Pi") {
        auto tq = build_quotient(double_quiver(loop_quiver(1)), {}, 5);
        auto l = l_dims(tq, 5);
        for (int k = 0; k <= 5; ++k) {
            CHECK(l[k] == tq.dim(k));
        }
    }
    SUBCASE("two loops: dim L_1 = 4 and L_k <= Pi_k") {
        auto tq = build_quotient(double_quiver(loop_quiver(2)), {}, 5);
        auto l = l_dims(tq, 5);
        CHECK(l[0] == 1);
        CHECK(l[1] == 4);
        for (int k = 0; k <= 5; ++k) CHECK(l[k] <= tq.dim(k));
    }
}

TEST_CASE("commutator quotient against the normal-form route") {
    // independent route: echelonize normal forms of commutators of quotient
    // basis elements, giving dim [Pi, Pi]_k directly
    auto q = double_quiver(loop_quiver(2));
    const int top = 4;
    auto tq = build_quotient(q, {}, top);
    auto l = l_dims(tq, top);
    for (int k = 0; k <= top; ++k) {
        std::map<Path, long> index;
        for (const Path& p : tq.basis(k)) index.emplace(p, static_cast<long>(index.size()));
        EchelonBasis span;
        for (int s = 0; s <= k; ++s)
            for (const Path& u : tq.basis(s))
                for (const Path& v : tq.basis(k - s)) {
                    PathAlgebraElement eu(q, u), ev(q, v);
                    PathAlgebraElement com = tq.normal_form(commutator(eu, ev));
                    SparseVec vec;
                    for (const auto& [p, c] : com.terms()) vec[index.at(p)] = c;
                    span.insert(std::move(vec));
                }
        CHECK(l[k] == tq.dim(k) - span.rank());
    }
}

TEST_CASE("multi-vertex quotients") {
    SUBCASE("center probe on the triple kronecker") {
        auto tq = build_quotient(double_quiver(kronecker_quiver(3)), {}, 3);
        CHECK(center_probe(tq, 0) == 1);
        CHECK(center_probe(tq, 1) == 0);
        CHECK(center_probe(tq, 2) == 0);
    }
    SUBCASE("commutator quotient both routes, triple kronecker") {
        auto q = double_quiver(kronecker_quiver(3));
        auto tq = build_quotient(q, {}, 3);
        auto l = l_dims(tq, 3);
        CHECK(l[0] == 2);
        for (int k = 0; k <= 3; ++k) {
            std::map<Path, long> index;
            for (const Path& p : tq.basis(k)) index.emplace(p, static_cast<long>(index.size()));
            EchelonBasis span;
            for (int s = 0; s <= k; ++s)
                for (const Path& u : tq.basis(s))
                    for (const Path& v : tq.basis(k - s)) {
                        PathAlgebraElement com =
                            tq.normal_form(commutator(PathAlgebraElement(q, u),
                                                      PathAlgebraElement(q, v)));
                        SparseVec vec;
                        for (const auto& [p, c] : com.terms()) vec[index.at(p)] = c;
                        span.insert(std::move(vec));
                    }
            CHECK(l[k] == tq.dim(k) - span.rank());
        }
    }
    SUBCASE("descent on the doubled line quiver") {
        auto tq = build_quotient(double_quiver(line_quiver(2)), {}, 4);
        CHECK(descent_check(tq, 4).pass);
    }
    SUBCASE("deformed multi-vertex normal form") {
        auto base = line_quiver(2);
        auto q = double_quiver(base);
        std::map<int, Rational> c{{0, Rational(1)}, {1, Rational(-1)}};
        auto tq = build_quotient(q, c, 4);
        PathAlgebraElement expect =
            PathAlgebraElement::trivial(q, 0) - PathAlgebraElement::trivial(q, 1);
        CHECK(tq.normal_form(moment_element(q)) == tq.normal_form(expect));
        // multiplicativity against the filtered reduction
        PathAlgebraElement x(q, make_path(*q, {0}));   // a1
        PathAlgebraElement y(q, make_path(*q, {1}));   // a1*
        CHECK(tq.normal_form(pa_mul(x, y)) ==
              tq.normal_form(pa_mul(tq.normal_form(x), tq.normal_form(y))));
    }
}

TEST_CASE("bracket descent") {
    auto tq = build_quotient(double_quiver(loop_quiver(2)), {}, 4);
    Report rep = descent_check(tq, 4);
    CHECK(rep.pass);
    // the moment class itself brackets to zero exactly
    auto q = tq.quiver();
    NecklaceElement wbar = necklace_project(moment_element(q));
    NecklaceTable nt(q);
    for (int len = 1; len <= 4; ++len)
        for (const Path& c : nt.cycles(len)) {
            NecklaceElement single(q);
            single.add_cycle(c, 1);
            CHECK(necklace_bracket(wbar, single).is_zero());
        }
}
