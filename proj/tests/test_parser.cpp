#include <doctest.h>

#include "necklace/errors.hpp"
#include "necklace/json_io.hpp"
#include "necklace/parser.hpp"
#include "necklace/splitmix.hpp"

using namespace necklace;

TEST_CASE("element grammar") {
    auto q = double_quiver(loop_quiver(1));

    SUBCASE("coefficients and words") {
        auto e = parse_path_element("3/2*x.x* - 1*x*.x", q);
        CHECK(e.terms().size() == 2);
        CHECK(e.coeff(make_path(*q, {0, 1})) == Rational(3, 2));
        CHECK(e.coeff(make_path(*q, {1, 0})) == Rational(-1));
    }
    SUBCASE("cycles") {
        auto n = parse_necklace("cyc(x.x*)", q);
        REQUIRE(n.terms().size() == 1);
        CHECK(n.terms().begin()->first == canonical_rotation(*q, make_path(*q, {0, 1})));
    }
    SUBCASE("trivial paths") {
        auto e = parse_path_element("e_0", q);
        CHECK(e == PathAlgebraElement::trivial(q, 0));
        auto n = parse_necklace("2*e_0", q);
        CHECK(n.terms().begin()->second == Rational(2));
    }
    SUBCASE("rejects non-composable words") {
        auto qa = double_quiver(line_quiver(2));
        CHECK_THROWS_AS(parse_path_element("a1.a1", qa), NonComposablePath);
    }
    SUBCASE("rejects open cycles") {
        auto qa = double_quiver(line_quiver(2));
        CHECK_THROWS_AS(parse_element("cyc(a1)", qa), NonComposablePath);
    }
    SUBCASE("unknown names") {
        CHECK_THROWS_AS(parse_element("z", q), UnknownEdge);
        CHECK_THROWS_AS(parse_element("e_7", q), ParseError);
    }
    SUBCASE("mixed atoms are rejected") {
        auto q2 = double_quiver(loop_quiver(2));
        CHECK_THROWS_AS(parse_element("cyc(x) + x.y", q2), ParseError);
    }
    SUBCASE("positions in errors") {
        try {
            parse_element("x + + x", q);
            FAIL("expected a throw");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    }
}

TEST_CASE("print/parse round trip") {
    SplitMix64 rng(4711);
    for (auto q : {double_quiver(loop_quiver(2)), double_quiver(line_quiver(2))}) {
        PathTable pt(q);
        for (int trial = 0; trial < 500; ++trial) {
            PathAlgebraElement x(q);
            int nterms = 1 + static_cast<int>(rng.next() % 4);
            for (int t = 0; t < nterms; ++t) {
                int len = static_cast<int>(rng.next() % 4);
                long total = pt.count(len);
                if (!total) continue;
                long pick = static_cast<long>(rng.next() % total);
                for (int i = 0; i < q->num_vertices() && pick >= 0; ++i)
                    for (int j = 0; j < q->num_vertices(); ++j) {
                        long c = pt.count(len, i, j);
                        if (pick < c) {
                            long num = rng.range(-9, 9), den = 1 + (long)(rng.next() % 6);
                            x.add_term(pt.path_at(len, i, j, pick), Rational(num, den));
                            pick = -1;
                            break;
                        }
                        pick -= c;
                    }
            }
            std::string text = print_element(x);
            if (x.is_zero()) continue;
            CHECK(parse_path_element(text, q) == x);
        }
        // necklace round trip
        NecklaceTable nt(q);
        for (int trial = 0; trial < 100; ++trial) {
            NecklaceElement n(q);
            for (int len = 0; len <= 3; ++len) {
                const auto& cs = nt.cycles(len);
                if (cs.empty()) continue;
                n.add_cycle(cs[rng.next() % cs.size()], Rational(rng.range(-4, 4)));
            }
            if (n.is_zero()) continue;
            CHECK(parse_necklace(print_element(n), q) == n);
        }
    }
}

TEST_CASE("quiver json round trip") {
    Quiver q = star_quiver(3);
    Quiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back == q);
    CHECK_THROWS_AS(quiver_from_json(nlohmann::json::array()), ConfigError);
    CHECK_THROWS_AS(load_quiver("no-such-file-or-spec"), ConfigError);
    CHECK(load_quiver("kronecker-3").num_edges() == 3);
}

TEST_CASE("dimension vectors and rep points") {
    Quiver base = line_quiver(2);
    auto q = double_quiver(base);
    DimVector d = parse_dims("1:2,2:3", base);
    CHECK(d == DimVector{2, 3});
    CHECK_THROWS_AS(parse_dims("zz:1", base), ConfigError);

    SplitMix64 rng(5);
    RepPoint rho = RepPoint::random(q, d, rng, 5);
    RepPoint back = rep_point_from_json(rep_point_to_json(rho), q);
    for (int e = 0; e < q->num_edges(); ++e) CHECK(back.matrix(e) == rho.matrix(e));
}

TEST_CASE("form json round trip") {
    auto q = double_quiver(loop_quiver(2));
    NCForm w(q, 2);
    w.add_term(FormMonomial{{Path::trivial(0), make_path(*q, {0}), make_path(*q, {1})}},
               Rational(3, 2));
    w.add_term(FormMonomial{{make_path(*q, {2}), make_path(*q, {0, 0}), make_path(*q, {3})}},
               Rational(-1));
    NCForm back = form_from_json(form_to_json(w), q);
    CHECK(back == w);
}
