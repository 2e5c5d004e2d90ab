#include "necklace/necklace_lie.hpp"

#include "necklace/errors.hpp"
#include "necklace/dr.hpp"

namespace necklace {

PathAlgebraElement cyclic_partial(int edge, const NecklaceElement& p) {
    const QuiverPtr& q = p.quiver();
    PathAlgebraElement out(q);
    for (const auto& [cycle, c] : p.terms()) {
        for (int i = 0; i < cycle.length(); ++i) {
            if (cycle.edges[i] != edge) continue;
            // cycle = (before) a_i (after); contribution (after)(before)
            Path after{q->head(edge), cycle.head, {cycle.edges.begin() + i + 1, cycle.edges.end()}};
            Path before{cycle.tail, q->tail(edge), {cycle.edges.begin(), cycle.edges.begin() + i}};
            out.add_term(*compose(*q, after, before), c);
        }
    }
    return out;
}

NCForm d_necklace(const NecklaceElement& p) {
    const QuiverPtr& q = p.quiver();
    NCForm out(q, 1);
    for (int e = 0; e < q->num_edges(); ++e) {
        PathAlgebraElement coeff = cyclic_partial(e, p);
        for (const auto& [f, c] : coeff.terms()) {
            FormMonomial m;
            m.slots.push_back(f);
            m.slots.push_back(edge_path(*q, e));
            out.add_term(m, c);
        }
    }
    return out;
}

Derivation hamiltonian_derivation(const NecklaceElement& p) {
    const QuiverPtr& q = p.quiver();
    Derivation th(q);
    for (int e = 0; e < q->num_edges(); ++e) {
        PathAlgebraElement v = cyclic_partial(q->reverse(e), p);
        if (q->eps(e) < 0) v *= Rational(-1);
        th.set_value(e, std::move(v));
    }
    return th;
}

Derivation h_omega(const NCForm& alpha) {
    const QuiverPtr& q = alpha.quiver();
    std::vector<PathAlgebraElement> f = dr1_coordinates(alpha);
    Derivation th(q);
    for (int e = 0; e < q->num_edges(); ++e) {
        PathAlgebraElement v = f[q->reverse(e)];
        if (q->eps(e) < 0) v *= Rational(-1);
        th.set_value(e, std::move(v));
    }
    return th;
}

NecklaceElement necklace_bracket(const NecklaceElement& p, const NecklaceElement& q) {
    check_same_quiver(p.quiver(), q.quiver());
    const QuiverPtr& quiv = p.quiver();
    PathAlgebraElement acc(quiv);
    for (int e = 0; e < quiv->num_edges(); ++e) {
        PathAlgebraElement dp = cyclic_partial(e, p);
        if (dp.is_zero()) continue;
        PathAlgebraElement dq = cyclic_partial(quiv->reverse(e), q);
        if (dq.is_zero()) continue;
        PathAlgebraElement prod = pa_mul(dp, dq);
        if (quiv->eps(quiv->reverse(e)) < 0) prod *= Rational(-1);
        acc += prod;
    }
    return necklace_project(acc);
}

NCForm canonical_symplectic_form(const QuiverPtr& q) {
    NCForm w(q, 2);
    for (int i = 0; i < q->num_base_edges(); ++i) {
        const int a = q->base_edge(i);
        FormMonomial m;
        m.slots.push_back(Path::trivial(q->tail(a)));
        m.slots.push_back(edge_path(*q, a));
        m.slots.push_back(edge_path(*q, q->reverse(a)));
        w.add_term(m, 1);
    }
    return w;
}

PathAlgebraElement moment_element(const QuiverPtr& q) {
    PathAlgebraElement w(q);
    for (int i = 0; i < q->num_base_edges(); ++i) {
        const int a = q->base_edge(i);
        PathAlgebraElement ea = PathAlgebraElement::edge(q, a);
        PathAlgebraElement eas = PathAlgebraElement::edge(q, q->reverse(a));
        w += pa_mul(ea, eas) - pa_mul(eas, ea);
    }
    return w;
}

NCForm liouville(const QuiverPtr& q) {
    NCForm out(q, 1);
    for (int i = 0; i < q->num_base_edges(); ++i) {
        const int a = q->base_edge(i);
        FormMonomial m;
        m.slots.push_back(edge_path(*q, a));
        m.slots.push_back(edge_path(*q, q->reverse(a)));
        out.add_term(m, 1);
    }
    return out;
}

CentralityReport centrality_check(const QuiverPtr& q, const NecklaceElement& p, int degree_bound) {
    NecklaceTable nt(q);
    CentralityReport rep;
    for (int len = 0; len <= degree_bound; ++len) {
        for (const Path& cyc : nt.cycles(len)) {
            NecklaceElement single(q);
            single.add_cycle(cyc, 1);
            NecklaceElement b = necklace_bracket(p, single);
            if (!b.is_zero()) {
                rep.central = false;
                rep.witness_cycle = cyc;
                rep.witness_bracket = b;
                return rep;
            }
        }
    }
    return rep;
}

CentralityReport centrality_check(const QuiverPtr& q, int power, int vertex, int degree_bound) {
    PathAlgebraElement x = PathAlgebraElement::trivial(q, vertex);
    PathAlgebraElement w = moment_element(q);
    for (int i = 0; i < power; ++i) x = pa_mul(x, w);
    return centrality_check(q, necklace_project(x), degree_bound);
}

}  // namespace necklace
