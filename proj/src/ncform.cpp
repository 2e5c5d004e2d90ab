#include "necklace/ncform.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

int FormMonomial::path_length() const {
    int n = 0;
    for (const Path& p : slots) n += p.length();
    return n;
}

std::strong_ordering operator<=>(const FormMonomial& a, const FormMonomial& b) {
    if (a.slots.size() != b.slots.size()) return a.slots.size() <=> b.slots.size();
    for (size_t i = 0; i < a.slots.size(); ++i) {
        auto c = a.slots[i] <=> b.slots[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

static void check_monomial(const FormMonomial& m) {
    if (m.slots.empty()) throw Error("form monomial needs a p0 slot");
    for (size_t i = 1; i < m.slots.size(); ++i) {
        if (m.slots[i].is_trivial()) throw Error("d-slot may not be a trivial path");
        if (m.slots[i - 1].head != m.slots[i].tail) throw Error("form monomial chain broken");
    }
}

NCForm NCForm::from_element(const PathAlgebraElement& x) {
    NCForm w(x.quiver(), 0);
    for (const auto& [p, c] : x.terms()) w.add_term(FormMonomial{{p}}, c);
    return w;
}

PathAlgebraElement NCForm::to_element() const {
    if (degree_ != 0 && !terms_.empty()) throw Error("to_element requires a degree-0 form");
    PathAlgebraElement x(q_);
    for (const auto& [m, c] : terms_) x.add_term(m.slots[0], c);
    return x;
}

void NCForm::add_term(const FormMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.degree() != degree_) throw Error("form term degree mismatch");
    check_monomial(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int NCForm::max_path_length() const {
    int m = 0;
    for (const auto& [mon, c] : terms_) m = std::max(m, mon.path_length());
    return m;
}

NCForm& NCForm::operator+=(const NCForm& o) {
    if (!q_) {
        q_ = o.q_;
        degree_ = o.degree_;
    } else if (!o.terms_.empty()) {
        check_same_quiver(q_, o.q_);
        if (terms_.empty()) degree_ = o.degree_;
        else if (degree_ != o.degree_) throw Error("form degree mismatch in sum");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCForm& NCForm::operator-=(const NCForm& o) {
    NCForm neg = o.operator-();
    return *this += neg;
}

NCForm& NCForm::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

NCForm NCForm::operator-() const {
    NCForm out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

NCForm NCForm::path_graded_part(int m) const {
    NCForm out(q_, degree_);
    for (const auto& [mon, c] : terms_)
        if (mon.path_length() == m) out.add_term(mon, c);
    return out;
}

NCForm d(const NCForm& w) {
    NCForm out(w.quiver(), w.degree() + 1);
    for (const auto& [m, c] : w.terms()) {
        if (m.slots[0].is_trivial()) continue;
        FormMonomial dm;
        dm.slots.reserve(m.slots.size() + 1);
        dm.slots.push_back(Path::trivial(m.slots[0].tail));
        dm.slots.insert(dm.slots.end(), m.slots.begin(), m.slots.end());
        out.add_term(dm, c);
    }
    return out;
}

NCForm mul_monomial_by_path(const QuiverPtr& q, const FormMonomial& m, const Path& b,
                            const Rational& coeff) {
    const int n = m.degree();
    if (b.is_trivial()) {
        NCForm out(q, n);
        if (m.head() == b.tail) out.add_term(m, coeff);
        return out;
    }
    NCForm out(q, n);
    if (m.head() != b.tail) return out;
    if (n == 0) {
        Path prod = *compose(*q, m.slots[0], b);
        out.add_term(FormMonomial{{prod}}, coeff);
        return out;
    }
    // (... dp_n) b = (... d(p_n b)) - (... p_n db)
    FormMonomial merged = m;
    merged.slots.back() = *compose(*q, m.slots.back(), b);
    out.add_term(merged, coeff);

    FormMonomial prefix;
    prefix.slots.assign(m.slots.begin(), m.slots.end() - 1);
    NCForm inner = mul_monomial_by_path(q, prefix, m.slots.back(), coeff);
    for (const auto& [k, c] : inner.terms()) {
        FormMonomial ext = k;
        ext.slots.push_back(b);
        out.add_term(ext, -c);
    }
    return out;
}

NCForm mul_form_by_element(const NCForm& a, const PathAlgebraElement& x) {
    check_same_quiver(a.quiver(), x.quiver());
    NCForm out(a.quiver(), a.degree());
    for (const auto& [m, c] : a.terms())
        for (const auto& [p, v] : x.terms()) out += mul_monomial_by_path(a.quiver(), m, p, c * v);
    return out;
}

NCForm mul_element_by_form(const PathAlgebraElement& x, const NCForm& a) {
    check_same_quiver(a.quiver(), x.quiver());
    NCForm out(a.quiver(), a.degree());
    for (const auto& [m, c] : a.terms())
        for (const auto& [p, v] : x.terms()) {
            if (p.head != m.tail()) continue;
            FormMonomial shifted = m;
            shifted.slots[0] = *compose(*a.quiver(), p, m.slots[0]);
            out.add_term(shifted, c * v);
        }
    return out;
}

NCForm append_slots(const NCForm& a, std::span<const Path> slots) {
    if (slots.empty()) return a;
    NCForm out(a.quiver(), a.degree() + static_cast<int>(slots.size()));
    for (const auto& [m, c] : a.terms()) {
        if (m.head() != slots.front().tail) continue;
        FormMonomial ext = m;
        ext.slots.insert(ext.slots.end(), slots.begin(), slots.end());
        out.add_term(ext, c);
    }
    return out;
}

NCForm form_mul(const NCForm& a, const NCForm& b) {
    check_same_quiver(a.quiver(), b.quiver());
    NCForm out(a.quiver(), a.degree() + b.degree());
    for (const auto& [mb, cb] : b.terms()) {
        // a * (q0 dq1...dqm) = (a q0) dq1...dqm
        std::span<const Path> rest(mb.slots.data() + 1, mb.slots.size() - 1);
        for (const auto& [ma, ca] : a.terms()) {
            NCForm left = mul_monomial_by_path(a.quiver(), ma, mb.slots[0], ca * cb);
            out += append_slots(left, rest);
        }
    }
    return out;
}

NCForm d_path(const QuiverPtr& q, const Path& p) {
    NCForm out(q, 1);
    if (!p.is_trivial()) out.add_term(FormMonomial{{Path::trivial(p.tail), p}}, 1);
    return out;
}

NCForm form_from_slots(const QuiverPtr& q, const std::vector<Path>& slots, const Rational& c) {
    NCForm out(q, static_cast<int>(slots.size()) - 1);
    out.add_term(FormMonomial{slots}, c);
    return out;
}

std::vector<FormMonomial> enumerate_form_monomials(const QuiverPtr& q, int degree,
                                                   int path_length) {
    std::vector<FormMonomial> out;
    if (path_length < degree) return out;
    PathTable pt(q);
    const int n = degree;
    std::vector<int> lens(n + 1, 0);
    std::vector<Path> slots;

    // vertex = required start of the current slot, -1 when free (slot 0)
    auto emit = [&](auto&& self, int slot, int vertex) -> void {
        if (slot == n + 1) {
            out.push_back(FormMonomial{slots});
            return;
        }
        const int len = lens[slot];
        if (len == 0) {
            for (int v = 0; v < q->num_vertices(); ++v) {
                if (vertex >= 0 && v != vertex) continue;
                slots.push_back(Path::trivial(v));
                self(self, slot + 1, v);
                slots.pop_back();
            }
            return;
        }
        for (int i = 0; i < q->num_vertices(); ++i) {
            if (vertex >= 0 && i != vertex) continue;
            for (int j = 0; j < q->num_vertices(); ++j) {
                long cnt = pt.count(len, i, j);
                for (long r = 0; r < cnt; ++r) {
                    slots.push_back(pt.path_at(len, i, j, r));
                    self(self, slot + 1, j);
                    slots.pop_back();
                }
            }
        }
    };

    auto rec_lens = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n + 1) {
            if (remaining == 0) emit(emit, 0, -1);
            return;
        }
        int lo = (slot == 0) ? 0 : 1;
        for (int l = lo; l <= remaining - (n - slot); ++l) {
            lens[slot] = l;
            self(self, slot + 1, remaining - l);
        }
    };
    rec_lens(rec_lens, 0, path_length);
    return out;
}

std::string form_to_string(const NCForm& w) {
    if (w.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : w.terms()) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string();
        s += "*(" + path_to_string(*w.quiver(), m.slots[0]);
        for (size_t i = 1; i < m.slots.size(); ++i)
            s += "; " + path_to_string(*w.quiver(), m.slots[i]);
        s += ")";
    }
    return s;
}

}  // namespace necklace
