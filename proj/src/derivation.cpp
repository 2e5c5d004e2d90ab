#include "necklace/derivation.hpp"

#include "necklace/errors.hpp"

namespace necklace {

Derivation::Derivation(QuiverPtr q) : q_(std::move(q)) {
    values_.assign(q_->num_edges(), PathAlgebraElement(q_));
}

Derivation Derivation::euler(const QuiverPtr& q) {
    Derivation th(q);
    for (int e = 0; e < q->num_edges(); ++e) th.set_value(e, PathAlgebraElement::edge(q, e));
    return th;
}

void Derivation::set_value(int edge, PathAlgebraElement v) {
    if (!v.quiver()) v = PathAlgebraElement(q_);
    check_same_quiver(q_, v.quiver());
    for (const auto& [p, c] : v.terms()) {
        (void)c;
        if (p.tail != q_->tail(edge) || p.head != q_->head(edge))
            throw Error("derivation value endpoints do not match the edge");
    }
    values_[edge] = std::move(v);
}

PathAlgebraElement Derivation::apply(const Path& p) const {
    PathAlgebraElement out(q_);
    for (int j = 0; j < p.length(); ++j) {
        const PathAlgebraElement& mid = values_[p.edges[j]];
        if (mid.is_zero()) continue;
        Path before{p.tail, q_->tail(p.edges[j]), {p.edges.begin(), p.edges.begin() + j}};
        Path after{q_->head(p.edges[j]), p.head, {p.edges.begin() + j + 1, p.edges.end()}};
        PathAlgebraElement left(q_, before);
        PathAlgebraElement right(q_, after);
        out += pa_mul(pa_mul(left, mid), right);
    }
    return out;
}

PathAlgebraElement Derivation::apply(const PathAlgebraElement& x) const {
    check_same_quiver(q_, x.quiver());
    PathAlgebraElement out(q_);
    for (const auto& [p, c] : x.terms()) {
        PathAlgebraElement t = apply(p);
        t *= c;
        out += t;
    }
    return out;
}

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [k, c] : b) bipoly_add_term(out, k.first, k.second, c);
    return out;
}

void bipoly_add_term(BiPoly& dst, const Path& u, const Path& v, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

DoubleDerivation::DoubleDerivation(QuiverPtr q) : q_(std::move(q)) {
    values_.assign(q_->num_edges(), BiPoly{});
}

DoubleDerivation DoubleDerivation::distinguished(const QuiverPtr& q) {
    DoubleDerivation th(q);
    for (int e = 0; e < q->num_edges(); ++e) {
        BiPoly v;
        bipoly_add_term(v, edge_path(*q, e), Path::trivial(q->head(e)), 1);
        bipoly_add_term(v, Path::trivial(q->tail(e)), edge_path(*q, e), Rational(-1));
        th.set_value(e, std::move(v));
    }
    return th;
}

DoubleDerivation DoubleDerivation::coordinate(const QuiverPtr& q, int edge) {
    DoubleDerivation th(q);
    BiPoly v;
    bipoly_add_term(v, Path::trivial(q->tail(edge)), Path::trivial(q->head(edge)), 1);
    th.set_value(edge, std::move(v));
    return th;
}

DoubleDerivation DoubleDerivation::inner(const QuiverPtr& q, const BiPoly& p) {
    for (const auto& [uv, c] : p) {
        (void)c;
        if (uv.first.tail != uv.second.head)
            throw Error("inner double derivation needs an R-invariant tensor");
    }
    DoubleDerivation th(q);
    for (int e = 0; e < q->num_edges(); ++e) {
        BiPoly val;
        Path a = edge_path(*q, e);
        for (const auto& [uv, c] : p) {
            if (auto au = compose(*q, a, uv.first)) bipoly_add_term(val, *au, uv.second, c);
            if (auto va = compose(*q, uv.second, a)) bipoly_add_term(val, uv.first, *va, -c);
        }
        th.set_value(e, std::move(val));
    }
    return th;
}

void DoubleDerivation::set_value(int edge, BiPoly v) {
    for (const auto& [uv, c] : v) {
        (void)c;
        if (uv.first.tail != q_->tail(edge) || uv.second.head != q_->head(edge))
            throw Error("double derivation value endpoints do not match the edge");
    }
    values_[edge] = std::move(v);
}

BiPoly DoubleDerivation::apply(const Path& p) const {
    BiPoly out;
    for (int j = 0; j < p.length(); ++j) {
        const BiPoly& mid = values_[p.edges[j]];
        if (mid.empty()) continue;
        Path before{p.tail, q_->tail(p.edges[j]), {p.edges.begin(), p.edges.begin() + j}};
        Path after{q_->head(p.edges[j]), p.head, {p.edges.begin() + j + 1, p.edges.end()}};
        for (const auto& [uv, c] : mid) {
            auto left = compose(*q_, before, uv.first);
            auto right = compose(*q_, uv.second, after);
            if (left && right) bipoly_add_term(out, *left, *right, c);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const BiMonomial& a, const BiMonomial& b) {
    auto c = a.left <=> b.left;
    if (c != std::strong_ordering::equal) return c;
    return a.right <=> b.right;
}

void BiForm::add_term(const BiMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.left.degree() + m.right.degree() != degree_) throw Error("biform degree mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiForm& BiForm::operator+=(const BiForm& o) {
    if (!q_) {
        q_ = o.q_;
        degree_ = o.degree_;
    } else if (!o.terms_.empty()) {
        check_same_quiver(q_, o.q_);
        if (terms_.empty()) degree_ = o.degree_;
        else if (degree_ != o.degree_) throw Error("biform degree mismatch in sum");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) { return *this += o.operator-(); }

BiForm& BiForm::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BiForm BiForm::operator-() const {
    BiForm out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

void TriForm::add_term(const std::array<FormMonomial, 3>& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TriForm& TriForm::operator+=(const TriForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCForm contract_der(const Derivation& th, const NCForm& w) {
    if (w.degree() == 0) throw DegreeZero();
    const QuiverPtr& q = w.quiver();
    NCForm out(q, w.degree() - 1);
    for (const auto& [m, c] : w.terms()) {
        const int n = m.degree();
        for (int k = 1; k <= n; ++k) {
            PathAlgebraElement val = th.apply(m.slots[k]);
            if (val.is_zero()) continue;
            FormMonomial prefix{{m.slots.begin(), m.slots.begin() + k}};
            NCForm left(q, k - 1);
            left.add_term(prefix, (k % 2 == 1) ? c : -c);
            left = mul_form_by_element(left, val);
            std::span<const Path> rest(m.slots.data() + k + 1, m.slots.size() - k - 1);
            out += append_slots(left, rest);
        }
    }
    return out;
}

NCForm lie_der(const Derivation& th, const NCForm& w) {
    NCForm out = contract_der(th, d(w));
    if (w.degree() > 0) out += d(contract_der(th, w));
    return out;
}

BiForm contract_dd(const DoubleDerivation& th, const NCForm& w) {
    if (w.degree() == 0) throw DegreeZero();
    const QuiverPtr& q = w.quiver();
    BiForm out(q, w.degree() - 1);
    for (const auto& [m, c] : w.terms()) {
        const int n = m.degree();
        for (int k = 1; k <= n; ++k) {
            BiPoly val = th.apply(m.slots[k]);
            if (val.empty()) continue;
            const Rational sign = (k % 2 == 1) ? c : -c;
            FormMonomial prefix{{m.slots.begin(), m.slots.begin() + k}};
            for (const auto& [uv, cv] : val) {
                NCForm left = mul_monomial_by_path(q, prefix, uv.first, sign * cv);
                // right part: v d p_{k+1} ... d p_n
                FormMonomial rstart{{uv.second}};
                NCForm right(q, 0);
                right.add_term(rstart, 1);
                std::span<const Path> rest(m.slots.data() + k + 1, m.slots.size() - k - 1);
                right = append_slots(right, rest);
                for (const auto& [lm, lc] : left.terms())
                    for (const auto& [rm, rc] : right.terms())
                        out.add_term(BiMonomial{lm, rm}, lc * rc);
            }
        }
    }
    return out;
}

TriForm contract_dd_biform(const DoubleDerivation& th, const BiForm& w) {
    TriForm out;
    const QuiverPtr& q = w.quiver();
    for (const auto& [bm, c] : w.terms()) {
        // i(left (x) right) = i(left) (x) right + (-1)^{deg left} left (x) i(right)
        for (int side = 0; side < 2; ++side) {
            const FormMonomial& target = side == 0 ? bm.left : bm.right;
            if (target.degree() == 0) continue;
            NCForm single(q, target.degree());
            single.add_term(target, 1);
            Rational sgn = c;
            if (side == 1 && bm.left.degree() % 2 == 1) sgn = -sgn;
            BiForm contracted = contract_dd(th, single);
            for (const auto& [cm, cc] : contracted.terms()) {
                std::array<FormMonomial, 3> key = side == 0
                    ? std::array<FormMonomial, 3>{cm.left, cm.right, bm.right}
                    : std::array<FormMonomial, 3>{bm.left, cm.left, cm.right};
                out.add_term(key, sgn * cc);
            }
        }
    }
    return out;
}

BiForm lie_dd(const DoubleDerivation& th, const NCForm& w) {
    const QuiverPtr& q = w.quiver();
    BiForm out(q, w.degree());
    for (const auto& [m, c] : w.terms()) {
        const int n = m.degree();
        // term for p0
        if (!m.slots[0].is_trivial()) {
            for (const auto& [uv, cv] : th.apply(m.slots[0])) {
                FormMonomial lm{{uv.first}};
                FormMonomial rm;
                rm.slots.push_back(uv.second);
                rm.slots.insert(rm.slots.end(), m.slots.begin() + 1, m.slots.end());
                out.add_term(BiMonomial{lm, rm}, c * cv);
            }
        }
        for (int k = 1; k <= n; ++k) {
            BiPoly val = th.apply(m.slots[k]);
            if (val.empty()) continue;
            FormMonomial prefix{{m.slots.begin(), m.slots.begin() + k}};
            std::span<const Path> rest(m.slots.data() + k + 1, m.slots.size() - k - 1);
            for (const auto& [uv, cv] : val) {
                // ... d(u) (x) v d p_{k+1} ...
                if (!uv.first.is_trivial()) {
                    FormMonomial lm = prefix;
                    lm.slots.push_back(uv.first);
                    NCForm right(q, 0);
                    right.add_term(FormMonomial{{uv.second}}, 1);
                    right = append_slots(right, rest);
                    for (const auto& [rm, rc] : right.terms())
                        out.add_term(BiMonomial{lm, rm}, c * cv * rc);
                }
                // ... u (x) d(v) d p_{k+1} ...
                if (!uv.second.is_trivial()) {
                    NCForm left = mul_monomial_by_path(q, prefix, uv.first, c * cv);
                    FormMonomial rm;
                    rm.slots.push_back(Path::trivial(uv.second.tail));
                    rm.slots.push_back(uv.second);
                    NCForm right(q, 1);
                    right.add_term(rm, 1);
                    right = append_slots(right, rest);
                    for (const auto& [lm, lc] : left.terms())
                        for (const auto& [rmm, rc] : right.terms())
                            out.add_term(BiMonomial{lm, rmm}, lc * rc);
                }
            }
        }
    }
    return out;
}

NCForm diamond(const BiForm& b) {
    if (b.is_zero()) return NCForm(b.quiver(), b.total_degree());
    const QuiverPtr& q = b.quiver();
    NCForm out(q, b.total_degree());
    for (const auto& [bm, c] : b.terms()) {
        const int k = bm.left.degree(), l = bm.right.degree();
        NCForm left(q, k), right(q, l);
        left.add_term(bm.left, 1);
        right.add_term(bm.right, (k * l) % 2 == 0 ? c : -c);
        out += form_mul(right, left);
    }
    return out;
}

NCForm contract_reduced(const DoubleDerivation& th, const NCForm& w) {
    NCForm out = diamond(contract_dd(th, w));
    return -out;
}

NCForm lie_reduced(const DoubleDerivation& th, const NCForm& w) {
    NCForm out = diamond(lie_dd(th, w));
    return -out;
}

BiForm d_biform(const BiForm& b) {
    BiForm out(b.quiver(), b.total_degree() + 1);
    const QuiverPtr& q = b.quiver();
    for (const auto& [bm, c] : b.terms()) {
        NCForm left(q, bm.left.degree()), right(q, bm.right.degree());
        left.add_term(bm.left, 1);
        right.add_term(bm.right, 1);
        NCForm dl = d(left), dr = d(right);
        for (const auto& [lm, lc] : dl.terms()) out.add_term(BiMonomial{lm, bm.right}, c * lc);
        const Rational sgn = bm.left.degree() % 2 == 0 ? c : -c;
        for (const auto& [rm, rc] : dr.terms()) out.add_term(BiMonomial{bm.left, rm}, sgn * rc);
    }
    return out;
}

BiForm biform_left_mul(const NCForm& a, const BiForm& b) {
    BiForm out(b.quiver(), a.degree() + b.total_degree());
    const QuiverPtr& q = b.quiver();
    for (const auto& [bm, c] : b.terms()) {
        NCForm left(q, bm.left.degree());
        left.add_term(bm.left, c);
        NCForm prod = form_mul(a, left);
        for (const auto& [lm, lc] : prod.terms()) out.add_term(BiMonomial{lm, bm.right}, lc);
    }
    return out;
}

BiForm biform_right_mul(const BiForm& b, const NCForm& a) {
    BiForm out(b.quiver(), a.degree() + b.total_degree());
    const QuiverPtr& q = b.quiver();
    for (const auto& [bm, c] : b.terms()) {
        NCForm right(q, bm.right.degree());
        right.add_term(bm.right, c);
        NCForm prod = form_mul(right, a);
        for (const auto& [rm, rc] : prod.terms()) out.add_term(BiMonomial{bm.left, rm}, rc);
    }
    return out;
}

}  // namespace necklace
