#include "necklace/dr.hpp"

#include "necklace/errors.hpp"

namespace necklace {

DrCalculator::Block& DrCalculator::block(int n, int m) {
    auto key = std::make_pair(n, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (m > bound_) throw TruncationExceeded("path degree " + std::to_string(m) +
                                             " above the de Rham block bound");

    Block b;
    b.monomials = enumerate_form_monomials(q_, n, m);
    for (size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], i);

    // span of super-commutators [alpha, beta] = alpha beta - (-1)^{jk} beta
    // alpha over monomials of complementary degrees
    for (int j = 0; 2 * j <= n; ++j) {
        const int k = n - j;
        for (int s = 0; s <= m; ++s) {
            if (j >= 1 && s < j) continue;
            const int t = m - s;
            if (k >= 1 && t < k) continue;
            std::vector<FormMonomial> left = enumerate_form_monomials(q_, j, s);
            std::vector<FormMonomial> right = enumerate_form_monomials(q_, k, t);
            const Rational sign = (j * k) % 2 == 0 ? Rational(1) : Rational(-1);
            for (const FormMonomial& a : left) {
                NCForm fa(q_, j);
                fa.add_term(a, 1);
                for (const FormMonomial& bm : right) {
                    NCForm fb(q_, k);
                    fb.add_term(bm, 1);
                    NCForm comm = form_mul(fa, fb) - sign * form_mul(fb, fa);
                    if (comm.is_zero()) continue;
                    b.span.insert(coords(b, comm));
                }
            }
        }
    }
    return cache_.emplace(key, std::move(b)).first->second;
}

SparseVec DrCalculator::coords(const Block& b, const NCForm& w) const {
    SparseVec v;
    for (const auto& [m, c] : w.terms()) {
        auto it = b.index.find(m);
        if (it == b.index.end()) throw Error("form monomial outside its block");
        v[it->second] = c;
    }
    return v;
}

bool DrCalculator::dr_is_zero(const NCForm& w) {
    if (w.is_zero()) return true;
    check_same_quiver(q_, w.quiver());
    if (w.degree() == 1) {
        for (const auto& f : dr1_coordinates(w))
            if (!f.is_zero()) return false;
        return true;
    }
    for (int m = 0; m <= w.max_path_length(); ++m) {
        NCForm part = w.path_graded_part(m);
        if (part.is_zero()) continue;
        Block& b = block(w.degree(), m);
        if (!b.span.contains(coords(b, part))) return false;
    }
    return true;
}

bool DrCalculator::dr_equal(const NCForm& a, const NCForm& b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
        throw Error("de Rham comparison needs forms of equal degree");
    return dr_is_zero(a - b);
}

NCForm DrCalculator::dr_project(const NCForm& w, int m) {
    check_same_quiver(q_, w.quiver());
    NCForm part = w.path_graded_part(m);
    if (part.is_zero()) return part;
    Block& b = block(w.degree(), m);
    SparseVec residue = b.span.reduce(coords(b, part));
    NCForm out(q_, w.degree());
    for (const auto& [idx, c] : residue) out.add_term(b.monomials[idx], c);
    return out;
}

std::vector<PathAlgebraElement> dr1_coordinates(const NCForm& w) {
    if (w.degree() != 1 && !w.is_zero()) throw Error("dr1_coordinates needs a 1-form");
    const QuiverPtr& q = w.quiver();
    std::vector<PathAlgebraElement> out(q ? q->num_edges() : 0, PathAlgebraElement(q));
    if (w.is_zero()) return out;
    for (const auto& [m, c] : w.terms()) {
        const Path& p0 = m.slots[0];
        const Path& p1 = m.slots[1];
        for (int j = 0; j < p1.length(); ++j) {
            const int e = p1.edges[j];
            Path before{p1.tail, q->tail(e), {p1.edges.begin(), p1.edges.begin() + j}};
            Path after{q->head(e), p1.head, {p1.edges.begin() + j + 1, p1.edges.end()}};
            // wrap-around: f_e += after . p0 . before when composable
            auto ap = compose(*q, after, p0);
            if (!ap) continue;
            auto full = compose(*q, *ap, before);
            if (!full) continue;
            out[e].add_term(*full, c);
        }
    }
    return out;
}

}  // namespace necklace
