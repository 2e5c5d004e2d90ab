#include "necklace/jacobi.hpp"

#include "necklace/errors.hpp"

namespace necklace {

JacobiMatrix::JacobiMatrix(QuiverPtr q, int n) : q_(std::move(q)), n_(n), entries_(n * n) {}

static void check_free(const QuiverPtr& q, const std::vector<PathAlgebraElement>& images) {
    if (q->num_vertices() != 1) throw NotFreeAlgebra("quiver has more than one vertex");
    if (static_cast<int>(images.size()) != q->num_base_edges())
        throw NotFreeAlgebra("one image per base loop required");
    for (const auto& f : images)
        for (const auto& [p, c] : f.terms()) {
            (void)c;
            for (int e : p.edges)
                if (!q->is_base(e)) throw NotFreeAlgebra("element uses reversed edges");
        }
}

JacobiMatrix jacobi_matrix(const QuiverPtr& q, const std::vector<PathAlgebraElement>& images) {
    check_free(q, images);
    const int n = q->num_base_edges();
    JacobiMatrix out(q, n);
    // Rows indexed by the component functions, columns by the coordinate
    // derivations: entry(i, j) = partial_j(f_i). With the A^e product
    // (a (x) b)(c (x) d) = ac (x) db this is the indexing for which the
    // composite rule reads D(G o F) = (DG)(F) * DF.
    for (int j = 0; j < n; ++j) {
        DoubleDerivation partial = DoubleDerivation::coordinate(q, q->base_edge(j));
        for (int i = 0; i < n; ++i) {
            BiPoly acc;
            for (const auto& [p, c] : images[i].terms())
                for (const auto& [uv, cv] : partial.apply(p))
                    bipoly_add_term(acc, uv.first, uv.second, c * cv);
            out.entry(i, j) = std::move(acc);
        }
    }
    return out;
}

JacobiMatrix star_mul(const JacobiMatrix& a, const JacobiMatrix& b) {
    if (a.size() != b.size() || !same_quiver(a.quiver(), b.quiver()))
        throw Error("jacobi matrix product mismatch");
    const int n = a.size();
    const DoubledQuiver& q = *a.quiver();
    JacobiMatrix out(a.quiver(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BiPoly acc;
            for (int k = 0; k < n; ++k)
                for (const auto& [ab, c1] : a.entry(i, k))
                    for (const auto& [cd, c2] : b.entry(k, j)) {
                        auto ac = compose(q, ab.first, cd.first);
                        auto db = compose(q, cd.second, ab.second);
                        if (ac && db) bipoly_add_term(acc, *ac, *db, c1 * c2);
                    }
            out.entry(i, j) = std::move(acc);
        }
    return out;
}

PathAlgebraElement apply_endo(const std::vector<PathAlgebraElement>& images,
                              const PathAlgebraElement& x) {
    const QuiverPtr& q = x.quiver();
    check_free(q, images);
    PathAlgebraElement out(q);
    for (const auto& [p, c] : x.terms()) {
        PathAlgebraElement word = PathAlgebraElement::trivial(q, p.tail);
        for (int e : p.edges) {
            if (!q->is_base(e)) throw NotFreeAlgebra("element uses reversed edges");
            word = pa_mul(word, images[e / 2]);
        }
        word *= c;
        out += word;
    }
    return out;
}

JacobiMatrix substitute(const JacobiMatrix& j, const std::vector<PathAlgebraElement>& images) {
    const int n = j.size();
    JacobiMatrix out(j.quiver(), n);
    for (int r = 0; r < n; ++r)
        for (int cidx = 0; cidx < n; ++cidx) {
            BiPoly acc;
            for (const auto& [uv, c] : j.entry(r, cidx)) {
                PathAlgebraElement fu = apply_endo(images, PathAlgebraElement(j.quiver(), uv.first));
                PathAlgebraElement fv = apply_endo(images, PathAlgebraElement(j.quiver(), uv.second));
                for (const auto& [pu, cu] : fu.terms())
                    for (const auto& [pv, cv] : fv.terms())
                        bipoly_add_term(acc, pu, pv, c * cu * cv);
            }
            out.entry(r, cidx) = std::move(acc);
        }
    return out;
}

std::vector<PathAlgebraElement> compose_endo(const std::vector<PathAlgebraElement>& outer,
                                             const std::vector<PathAlgebraElement>& inner) {
    std::vector<PathAlgebraElement> out;
    out.reserve(outer.size());
    for (const auto& g : outer) out.push_back(apply_endo(inner, g));
    return out;
}

}  // namespace necklace
