#include "necklace/path.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

std::optional<Path> compose(const DoubledQuiver& q, const Path& a, const Path& b) {
    (void)q;
    if (a.head != b.tail) return std::nullopt;
    Path out;
    out.tail = a.tail;
    out.head = b.head;
    out.edges = a.edges;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
}

Path edge_path(const DoubledQuiver& q, int e) { return Path{q.tail(e), q.head(e), {e}}; }

Path make_path(const DoubledQuiver& q, const std::vector<int>& edges) {
    if (edges.empty()) throw Error("make_path needs at least one edge");
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (q.head(edges[i]) != q.tail(edges[i + 1]))
            throw NonComposablePath("edges " + q.edge_name(edges[i]) + " and " +
                                    q.edge_name(edges[i + 1]) + " do not compose");
    return Path{q.tail(edges.front()), q.head(edges.back()), edges};
}

Path canonical_rotation(const DoubledQuiver& q, const Path& p) {
    if (p.tail != p.head) throw Error("canonical rotation of an open path");
    if (p.is_trivial() || p.length() == 1) return p;
    const int n = p.length();
    int best = 0;
    auto less_rot = [&](int a, int b) {
        for (int k = 0; k < n; ++k) {
            int ea = p.edges[(a + k) % n], eb = p.edges[(b + k) % n];
            if (ea != eb) return ea < eb;
        }
        return false;
    };
    for (int s = 1; s < n; ++s)
        if (less_rot(s, best)) best = s;
    if (best == 0) return p;
    Path out;
    out.edges.reserve(n);
    for (int k = 0; k < n; ++k) out.edges.push_back(p.edges[(best + k) % n]);
    out.tail = out.head = q.tail(out.edges.front());
    return out;
}

PathAlgebraElement::PathAlgebraElement(QuiverPtr q, const Path& p, const Rational& c)
    : q_(std::move(q)) {
    add_term(p, c);
}

PathAlgebraElement PathAlgebraElement::unit(const QuiverPtr& q) {
    PathAlgebraElement e(q);
    for (int v = 0; v < q->num_vertices(); ++v) e.add_term(Path::trivial(v), 1);
    return e;
}

PathAlgebraElement PathAlgebraElement::trivial(const QuiverPtr& q, int vertex) {
    return PathAlgebraElement(q, Path::trivial(vertex));
}

PathAlgebraElement PathAlgebraElement::edge(const QuiverPtr& q, int e) {
    return PathAlgebraElement(q, edge_path(*q, e));
}

Rational PathAlgebraElement::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational() : it->second;
}

void PathAlgebraElement::add_term(const Path& p, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int PathAlgebraElement::max_length() const {
    int m = 0;
    for (const auto& [p, c] : terms_) m = std::max(m, p.length());
    return m;
}

PathAlgebraElement& PathAlgebraElement::operator+=(const PathAlgebraElement& o) {
    if (!q_) q_ = o.q_;
    else if (!o.terms_.empty() || o.q_) check_same_quiver(q_, o.q_);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PathAlgebraElement& PathAlgebraElement::operator-=(const PathAlgebraElement& o) {
    if (!q_) q_ = o.q_;
    else if (!o.terms_.empty() || o.q_) check_same_quiver(q_, o.q_);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PathAlgebraElement& PathAlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

PathAlgebraElement PathAlgebraElement::operator-() const {
    PathAlgebraElement out = *this;
    for (auto& [p, v] : out.terms_) v = -v;
    return out;
}

PathAlgebraElement PathAlgebraElement::graded_part(int k) const {
    PathAlgebraElement out(q_);
    for (const auto& [p, c] : terms_)
        if (p.length() == k) out.add_term(p, c);
    return out;
}

PathAlgebraElement pa_mul(const PathAlgebraElement& x, const PathAlgebraElement& y) {
    check_same_quiver(x.quiver(), y.quiver());
    PathAlgebraElement out(x.quiver());
    const DoubledQuiver& q = *x.quiver();
    for (const auto& [p, a] : x.terms())
        for (const auto& [r, b] : y.terms())
            if (auto pr = compose(q, p, r)) out.add_term(*pr, a * b);
    return out;
}

PathAlgebraElement commutator(const PathAlgebraElement& x, const PathAlgebraElement& y) {
    return pa_mul(x, y) - pa_mul(y, x);
}

void NecklaceElement::add_cycle(const Path& canonical, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(canonical);
    if (it == terms_.end()) {
        terms_.emplace(canonical, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NecklaceElement& NecklaceElement::operator+=(const NecklaceElement& o) {
    if (!q_) q_ = o.q_;
    else if (!o.terms_.empty() || o.q_) check_same_quiver(q_, o.q_);
    for (const auto& [p, c] : o.terms_) add_cycle(p, c);
    return *this;
}

NecklaceElement& NecklaceElement::operator-=(const NecklaceElement& o) {
    if (!q_) q_ = o.q_;
    else if (!o.terms_.empty() || o.q_) check_same_quiver(q_, o.q_);
    for (const auto& [p, c] : o.terms_) add_cycle(p, -c);
    return *this;
}

NecklaceElement& NecklaceElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

NecklaceElement NecklaceElement::operator-() const {
    NecklaceElement out = *this;
    for (auto& [p, v] : out.terms_) v = -v;
    return out;
}

NecklaceElement NecklaceElement::graded_part(int k) const {
    NecklaceElement out(q_);
    for (const auto& [p, c] : terms_)
        if (p.length() == k) out.add_cycle(p, c);
    return out;
}

PathAlgebraElement NecklaceElement::representative() const {
    PathAlgebraElement out(q_);
    for (const auto& [p, c] : terms_) out.add_term(p, c);
    return out;
}

NecklaceElement necklace_project(const PathAlgebraElement& x) {
    NecklaceElement out(x.quiver());
    for (const auto& [p, c] : x.terms()) {
        if (p.tail != p.head) continue;
        out.add_cycle(canonical_rotation(*x.quiver(), p), c);
    }
    return out;
}

PathTable::PathTable(QuiverPtr q) : q_(std::move(q)) {
    const int nv = q_->num_vertices();
    counts_.push_back(std::vector<std::vector<long>>(nv, std::vector<long>(nv, 0)));
    for (int v = 0; v < nv; ++v) counts_[0][v][v] = 1;
}

void PathTable::ensure(int length) const {
    const int nv = q_->num_vertices();
    while (static_cast<int>(counts_.size()) <= length) {
        const auto& prev = counts_.back();
        std::vector<std::vector<long>> next(nv, std::vector<long>(nv, 0));
        for (int v = 0; v < nv; ++v)
            for (int e : q_->out_edges(v))
                for (int j = 0; j < nv; ++j) next[v][j] += prev[q_->head(e)][j];
        counts_.push_back(std::move(next));
    }
}

long PathTable::count(int length, int i, int j) const {
    ensure(length);
    return counts_[length][i][j];
}

long PathTable::count(int length) const {
    long total = 0;
    for (int i = 0; i < q_->num_vertices(); ++i)
        for (int j = 0; j < q_->num_vertices(); ++j) total += count(length, i, j);
    return total;
}

long PathTable::rank_in_block(const Path& p) const {
    ensure(p.length());
    long rank = 0;
    int v = p.tail;
    for (int pos = 0; pos < p.length(); ++pos) {
        const int remaining = p.length() - pos - 1;
        for (int e : q_->out_edges(v)) {
            if (e == p.edges[pos]) break;
            rank += counts_[remaining][q_->head(e)][p.head];
        }
        v = q_->head(p.edges[pos]);
    }
    return rank;
}

Path PathTable::path_at(int length, int i, int j, long rank) const {
    ensure(length);
    Path p;
    p.tail = i;
    p.head = j;
    int v = i;
    for (int pos = 0; pos < length; ++pos) {
        const int remaining = length - pos - 1;
        bool found = false;
        for (int e : q_->out_edges(v)) {
            long below = counts_[remaining][q_->head(e)][j];
            if (rank < below) {
                p.edges.push_back(e);
                v = q_->head(e);
                found = true;
                break;
            }
            rank -= below;
        }
        if (!found) throw Error("path rank out of range");
    }
    return p;
}

std::vector<Path> PathTable::block(int length, int i, int j) const {
    const long n = count(length, i, j);
    std::vector<Path> out;
    out.reserve(n);
    for (long r = 0; r < n; ++r) out.push_back(path_at(length, i, j, r));
    return out;
}

std::vector<Path> PathTable::all(int length) const {
    std::vector<Path> out;
    for (int i = 0; i < q_->num_vertices(); ++i)
        for (int j = 0; j < q_->num_vertices(); ++j) {
            auto b = block(length, i, j);
            out.insert(out.end(), b.begin(), b.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Path>& NecklaceTable::cycles(int length) const {
    auto it = cycles_.find(length);
    if (it != cycles_.end()) return it->second;

    std::vector<Path> found;
    if (length == 0) {
        for (int v = 0; v < q_->num_vertices(); ++v) found.push_back(Path::trivial(v));
    } else {
        PathTable pt(q_);
        for (int v = 0; v < q_->num_vertices(); ++v)
            for (const Path& p : pt.block(length, v, v))
                if (canonical_rotation(*q_, p) == p) found.push_back(p);
    }
    std::sort(found.begin(), found.end());
    return cycles_.emplace(length, std::move(found)).first->second;
}

long NecklaceTable::index_of(const Path& canonical) const {
    const auto& cs = cycles(canonical.length());
    auto it = std::lower_bound(cs.begin(), cs.end(), canonical);
    if (it == cs.end() || !(*it == canonical)) throw Error("cycle not in table");
    return it - cs.begin();
}

std::string path_to_string(const DoubledQuiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex_name(p.tail);
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += ".";
        s += q.edge_name(p.edges[i]);
    }
    return s;
}

}  // namespace necklace
