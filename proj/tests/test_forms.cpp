#include <doctest.h>

#include "necklace/derivation.hpp"
#include "necklace/errors.hpp"
#include "necklace/ncform.hpp"
#include "necklace/splitmix.hpp"

using namespace necklace;

namespace {

QuiverPtr q2() {
    static QuiverPtr q = double_quiver(loop_quiver(2));
    return q;
}

Path pth(const QuiverPtr& q, std::initializer_list<int> edges) {
    return make_path(*q, std::vector<int>(edges));
}

NCForm one_form(const QuiverPtr& q, const Path& p0, const Path& p1) {
    return form_from_slots(q, {p0, p1});
}

// sum_i e_i (x) e_i as a biform of total degree n (acting frame for the
// separability element)
BiForm sep_biform(const QuiverPtr& q) {
    BiForm e(q, 0);
    for (int v = 0; v < q->num_vertices(); ++v) {
        FormMonomial t{{Path::trivial(v)}};
        e.add_term(BiMonomial{t, t}, 1);
    }
    return e;
}

// random element with paths of length <= maxlen
PathAlgebraElement random_element(const QuiverPtr& q, SplitMix64& rng, int maxlen, int nterms) {
    PathAlgebraElement x(q);
    PathTable pt(q);
    for (int t = 0; t < nterms; ++t) {
        int len = static_cast<int>(rng.next() % (maxlen + 1));
        long count = pt.count(len);
        if (count == 0) continue;
        long pick = static_cast<long>(rng.next() % count);
        for (int i = 0; i < q->num_vertices(); ++i)
            for (int j = 0; j < q->num_vertices(); ++j) {
                long c = pt.count(len, i, j);
                if (pick < c) {
                    x.add_term(pt.path_at(len, i, j, pick), Rational(rng.range(-3, 3)));
                    goto next;
                }
                pick -= c;
            }
    next:;
    }
    return x;
}

NCForm random_form(const QuiverPtr& q, SplitMix64& rng, int degree, int max_path_len, int nterms) {
    NCForm w(q, degree);
    PathTable pt(q);
    for (int t = 0; t < nterms; ++t) {
        // pick slot lengths
        std::vector<int> lens(degree + 1);
        int remaining = max_path_len;
        lens[0] = static_cast<int>(rng.next() % (remaining + 1));
        remaining -= lens[0];
        bool ok = true;
        for (int k = 1; k <= degree; ++k) {
            int avail = remaining - (degree - k);
            if (avail < 1) {
                ok = false;
                break;
            }
            lens[k] = 1 + static_cast<int>(rng.next() % avail);
            remaining -= lens[k];
        }
        if (!ok) continue;
        // grow a composable chain of slots
        FormMonomial m;
        int vertex = static_cast<int>(rng.next() % q->num_vertices());
        for (int k = 0; k <= degree; ++k) {
            if (lens[k] == 0) {
                m.slots.push_back(Path::trivial(vertex));
                continue;
            }
            Path p;
            p.tail = vertex;
            int v = vertex;
            for (int s = 0; s < lens[k]; ++s) {
                const auto& out = q->out_edges(v);
                if (out.empty()) {
                    ok = false;
                    break;
                }
                int e = out[rng.next() % out.size()];
                p.edges.push_back(e);
                v = q->head(e);
            }
            if (!ok) break;
            p.head = v;
            vertex = v;
            m.slots.push_back(p);
        }
        if (ok) w.add_term(m, Rational(rng.range(-3, 3)));
    }
    return w;
}

}  // namespace

TEST_CASE("differential") {
    auto q = q2();
    auto e = PathAlgebraElement::trivial(q, 0);
    CHECK(d(NCForm::from_element(e)).is_zero());

    auto x = PathAlgebraElement::edge(q, 0);
    NCForm dx = d(NCForm::from_element(x));
    REQUIRE(dx.terms().size() == 1);
    CHECK(dx.terms().begin()->first.slots[0].is_trivial());
    CHECK(dx.terms().begin()->first.slots[1] == pth(q, {0}));

    auto xy = pa_mul(x, PathAlgebraElement::edge(q, 2));
    CHECK(d(d(NCForm::from_element(xy))).is_zero());
}

TEST_CASE("form multiplication") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});
    NCForm dx = d_path(q, x), dy = d_path(q, y);

    SUBCASE("(dx) y = d(xy) - x dy") {
        NCForm lhs = mul_form_by_element(dx, PathAlgebraElement(q, y));
        NCForm rhs = d_path(q, *compose(*q, x, y)) - form_from_slots(q, {x, y});
        CHECK(lhs == rhs);
    }
    SUBCASE("unit is neutral") {
        NCForm w = form_from_slots(q, {x, y, x});
        NCForm u = NCForm::from_element(PathAlgebraElement::unit(q));
        CHECK(form_mul(w, u) == w);
        CHECK(form_mul(u, w) == w);
    }
    SUBCASE("(dx)(dy) is a tensor monomial") {
        NCForm prod = form_mul(dx, dy);
        REQUIRE(prod.terms().size() == 1);
        const FormMonomial& m = prod.terms().begin()->first;
        CHECK(m.slots[0].is_trivial());
        CHECK(m.slots[1] == x);
        CHECK(m.slots[2] == y);
    }
    SUBCASE("associative on random forms") {
        SplitMix64 rng(404);
        for (int t = 0; t < 15; ++t) {
            NCForm a = random_form(q, rng, 1, 2, 2);
            NCForm b = random_form(q, rng, 1, 2, 2);
            NCForm c = random_form(q, rng, 0, 2, 2);
            CHECK(form_mul(form_mul(a, b), c) == form_mul(a, form_mul(b, c)));
            CHECK(form_mul(c, form_mul(a, b)) == form_mul(form_mul(c, a), b));
        }
    }
}

TEST_CASE("ordinary contraction") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});
    Derivation th(q);
    th.set_value(0, PathAlgebraElement::trivial(q, 0));  // theta(x) = e, theta(y) = 0

    CHECK(contract_der(th, d_path(q, x)) == NCForm::from_element(PathAlgebraElement::trivial(q, 0)));
    CHECK(contract_der(th, form_mul(d_path(q, x), d_path(q, y))) == d_path(q, y));
    CHECK_THROWS_AS(contract_der(th, NCForm::from_element(PathAlgebraElement::edge(q, 0))),
                    DegreeZero);

    SUBCASE("repeated contraction regression") {
        Derivation both(q);
        both.set_value(0, PathAlgebraElement::trivial(q, 0));
        both.set_value(2, PathAlgebraElement::trivial(q, 0));
        NCForm w = form_mul(d_path(q, x), d_path(q, y));
        NCForm first = contract_der(both, w);  // dy - dx
        CHECK(first == d_path(q, y) - d_path(q, x));
        CHECK(contract_der(both, first).is_zero());  // e - e
    }
}

TEST_CASE("lie derivative of the euler derivation counts path length") {
    auto q = q2();
    Derivation eu = Derivation::euler(q);
    Path p = pth(q, {0, 1, 2});
    CHECK(lie_der(eu, NCForm::from_element(PathAlgebraElement(q, p))) ==
          Rational(3) * NCForm::from_element(PathAlgebraElement(q, p)));
    CHECK(lie_der(eu, NCForm::from_element(PathAlgebraElement::trivial(q, 0))).is_zero());
    NCForm w = form_mul(d_path(q, pth(q, {0})), d_path(q, pth(q, {2})));
    CHECK(lie_der(eu, w) == Rational(2) * w);
}

TEST_CASE("d squares to zero on random forms") {
    SplitMix64 rng(9090);
    for (auto q : {q2(), double_quiver(line_quiver(2))})
        for (int t = 0; t < 15; ++t) {
            NCForm w = random_form(q, rng, (int)(rng.next() % 3), 3, 3);
            CHECK(d(d(w)).is_zero());
        }
}

TEST_CASE("distinguished derivation telescopes on paths") {
    for (auto q : {q2(), double_quiver(line_quiver(2))}) {
        DoubleDerivation delta = DoubleDerivation::distinguished(q);
        PathTable pt(q);
        for (int len = 1; len <= 3; ++len)
            for (int i = 0; i < q->num_vertices(); ++i)
                for (int j = 0; j < q->num_vertices(); ++j)
                    for (const Path& p : pt.block(len, i, j)) {
                        BiPoly expect;
                        bipoly_add_term(expect, p, Path::trivial(p.head), 1);
                        bipoly_add_term(expect, Path::trivial(p.tail), p, Rational(-1));
                        CHECK(delta.apply(p) == expect);
                    }
        // and it kills the vertex span
        for (int v = 0; v < q->num_vertices(); ++v)
            CHECK(delta.apply(Path::trivial(v)).empty());
    }
}

TEST_CASE("double contraction") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});

    SUBCASE("coordinate derivations") {
        DoubleDerivation px = DoubleDerivation::coordinate(q, 0);
        BiForm c = contract_dd(px, d_path(q, x));
        REQUIRE(c.terms().size() == 1);
        CHECK(c.terms().begin()->first.left.slots[0].is_trivial());
        CHECK(c.terms().begin()->first.right.slots[0].is_trivial());
        CHECK(c.terms().begin()->second == Rational(1));
        CHECK(contract_dd(px, d_path(q, y)).is_zero());
    }
    SUBCASE("distinguished derivation on an edge") {
        DoubleDerivation delta = DoubleDerivation::distinguished(q);
        BiForm c = contract_dd(delta, d_path(q, x));
        BiForm expect(q, 0);
        expect.add_term(BiMonomial{FormMonomial{{x}}, FormMonomial{{Path::trivial(0)}}}, 1);
        expect.add_term(BiMonomial{FormMonomial{{Path::trivial(0)}}, FormMonomial{{x}}}, Rational(-1));
        CHECK(c == expect);
    }
    SUBCASE("super-derivation property") {
        SplitMix64 rng(777);
        DoubleDerivation delta = DoubleDerivation::distinguished(q);
        for (int t = 0; t < 12; ++t) {
            NCForm a = random_form(q, rng, 1, 2, 2);
            NCForm b = random_form(q, rng, 1 + (int)(rng.next() % 2), 2, 2);
            BiForm lhs = contract_dd(delta, form_mul(a, b));
            BiForm rhs = biform_right_mul(contract_dd(delta, a), b);
            BiForm ib = contract_dd(delta, b);
            BiForm second = biform_left_mul(a, ib);
            if (a.degree() % 2 == 1) second *= Rational(-1);
            rhs += second;
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("anticommutation of double contractions") {
        SplitMix64 rng(888);
        DoubleDerivation delta = DoubleDerivation::distinguished(q);
        DoubleDerivation px = DoubleDerivation::coordinate(q, 0);
        for (int t = 0; t < 10; ++t) {
            NCForm w = random_form(q, rng, 2 + (int)(rng.next() % 2), 3, 2);
            TriForm acc = contract_dd_biform(px, contract_dd(delta, w));
            acc += contract_dd_biform(delta, contract_dd(px, w));
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("diamond") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});
    FormMonomial e0{{Path::trivial(0)}};

    SUBCASE("scalars") {
        BiForm b(q, 0);
        b.add_term(BiMonomial{e0, e0}, 1);
        CHECK(diamond(b) == NCForm::from_element(PathAlgebraElement::trivial(q, 0)));
    }
    SUBCASE("two one-forms pick up a sign") {
        BiForm b(q, 2);
        FormMonomial dxm{{Path::trivial(0), x}};
        FormMonomial dym{{Path::trivial(0), y}};
        b.add_term(BiMonomial{dxm, dym}, 1);
        CHECK(diamond(b) == -form_mul(d_path(q, y), d_path(q, x)));
    }
    SUBCASE("degree (0,1) has no sign") {
        BiForm b(q, 1);
        FormMonomial xm{{x}};
        FormMonomial dym{{Path::trivial(0), y}};
        b.add_term(BiMonomial{xm, dym}, 1);
        CHECK(diamond(b) == mul_form_by_element(d_path(q, y), PathAlgebraElement(q, x)));
    }
}

TEST_CASE("reduced contraction with the distinguished derivation") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});
    DoubleDerivation delta = DoubleDerivation::distinguished(q);
    PathAlgebraElement ex(q, x), ey(q, y);

    SUBCASE("x dy contracts to the commutator [y, x]") {
        NCForm w = mul_element_by_form(ex, d_path(q, y));
        NCForm got = contract_reduced(delta, w);
        NCForm expect = NCForm::from_element(pa_mul(ey, ex) - pa_mul(ex, ey));
        CHECK(got == expect);
    }
    SUBCASE("exact one-forms contract to zero") {
        CHECK(contract_reduced(delta, d_path(q, x)).is_zero());
        Path xy = pth(q, {0, 2});
        CHECK(contract_reduced(delta, d_path(q, xy)).is_zero());
    }
    SUBCASE("dx dy contracts to d(xy) - d(yx)") {
        NCForm w = form_mul(d_path(q, x), d_path(q, y));
        NCForm got = contract_reduced(delta, w);
        NCForm expect = d_path(q, pth(q, {0, 2})) - d_path(q, pth(q, {2, 0}));
        CHECK(got == expect);
    }
}

TEST_CASE("lie derivatives of the distinguished derivation") {
    auto q = q2();
    Path x = pth(q, {0}), y = pth(q, {2});
    DoubleDerivation delta = DoubleDerivation::distinguished(q);
    SplitMix64 rng(2024);

    SUBCASE("reduced lie derivative vanishes identically") {
        CHECK(lie_reduced(delta, NCForm::from_element(PathAlgebraElement(q, x))).is_zero());
        NCForm w = mul_element_by_form(PathAlgebraElement(q, x), d_path(q, y));
        CHECK(lie_reduced(delta, w).is_zero());
        for (int t = 0; t < 10; ++t) {
            NCForm r = random_form(q, rng, 1 + (int)(rng.next() % 3), 3, 3);
            CHECK(lie_reduced(delta, r).is_zero());
        }
    }
    SUBCASE("unreduced lie derivative is the separability commutator") {
        for (int t = 0; t < 10; ++t) {
            NCForm r = random_form(q, rng, (int)(rng.next() % 3), 3, 3);
            BiForm expect = biform_left_mul(r, sep_biform(q));
            expect -= biform_right_mul(sep_biform(q), r);
            CHECK(lie_dd(delta, r) == expect);
        }
    }
}

TEST_CASE("cartan identity for double derivations") {
    SplitMix64 rng(1234);
    for (QuiverPtr q : {q2(), double_quiver(line_quiver(2))}) {
        DoubleDerivation delta = DoubleDerivation::distinguished(q);
        for (int t = 0; t < 12; ++t) {
            NCForm w = random_form(q, rng, 1 + (int)(rng.next() % 2), 3, 3);
            BiForm lhs = d_biform(contract_dd(delta, w)) + contract_dd(delta, d(w));
            CHECK(lhs == lie_dd(delta, w));
        }
    }
}

TEST_CASE("reduced cartan and anticommutation identities") {
    auto q = q2();
    SplitMix64 rng(555);
    DoubleDerivation delta = DoubleDerivation::distinguished(q);
    DoubleDerivation px = DoubleDerivation::coordinate(q, 1);
    Derivation eu = Derivation::euler(q);

    for (int t = 0; t < 12; ++t) {
        NCForm w = random_form(q, rng, 1 + (int)(rng.next() % 2), 3, 3);
        for (const DoubleDerivation* th : {&delta, &px}) {
            // d o red + red o d = reduced lie derivative
            NCForm lhs = d(contract_reduced(*th, w)) + contract_reduced(*th, d(w));
            CHECK(lhs == lie_reduced(*th, w));
            // i_xi o red + red o i_xi = 0 (on forms of degree >= 2)
            if (w.degree() >= 2) {
                NCForm anti = contract_der(eu, contract_reduced(*th, w)) +
                              contract_reduced(*th, contract_der(eu, w));
                CHECK(anti.is_zero());
            }
        }
        // iddi: red_Delta o d + d o red_Delta = 0 (consequence of vanishing
        // reduced lie derivative)
        NCForm z = d(contract_reduced(delta, w)) + contract_reduced(delta, d(w));
        CHECK(z.is_zero());
    }
}

TEST_CASE("inner double derivations factor through the distinguished one") {
    auto q = q2();
    SplitMix64 rng(31415);
    DoubleDerivation delta = DoubleDerivation::distinguished(q);

    for (int t = 0; t < 10; ++t) {
        // p = p' (x) p'' with matching endpoints (R-invariant)
        PathTable pt(q);
        int l1 = 1 + (int)(rng.next() % 2), l2 = 1 + (int)(rng.next() % 2);
        Path u = pt.path_at(l1, 0, 0, (long)(rng.next() % pt.count(l1, 0, 0)));
        Path v = pt.path_at(l2, 0, 0, (long)(rng.next() % pt.count(l2, 0, 0)));
        BiPoly p;
        bipoly_add_term(p, u, v, 1);
        DoubleDerivation adp = DoubleDerivation::inner(q, p);

        NCForm w = random_form(q, rng, 1 + (int)(rng.next() % 2), 2, 3);
        NCForm lhs = contract_reduced(adp, w);
        NCForm rhs = mul_form_by_element(
            mul_element_by_form(PathAlgebraElement(q, v), contract_reduced(delta, w)),
            PathAlgebraElement(q, u));
        CHECK(lhs == rhs);
    }
}
