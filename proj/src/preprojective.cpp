#include "necklace/preprojective.hpp"

#include <sstream>

#include "necklace/errors.hpp"
#include "necklace/necklace_lie.hpp"

namespace necklace {

namespace {

// e_s w e_s, the vertex component of the moment element
PathAlgebraElement moment_component(const QuiverPtr& q, int s) {
    PathAlgebraElement out(q);
    for (int i = 0; i < q->num_base_edges(); ++i) {
        const int a = q->base_edge(i);
        if (q->tail(a) == s) out.add_term(make_path(*q, {a, q->reverse(a)}), 1);
        if (q->head(a) == s) out.add_term(make_path(*q, {q->reverse(a), a}), Rational(-1));
    }
    return out;
}

}  // namespace

TruncatedQuotient::TruncatedQuotient(QuiverPtr q, std::map<int, Rational> c, int truncation)
    : q_(std::move(q)), c_(std::move(c)), trunc_(truncation),
      paths_(std::make_shared<PathTable>(q_)) {
    for (const auto& [v, val] : c_) {
        if (v < 0 || v >= q_->num_vertices()) throw Error("parameter vertex out of range");
        if (!val.is_zero()) deformed_ = true;
    }
}

TruncatedQuotient build_quotient(QuiverPtr q, std::map<int, Rational> c, int truncation) {
    if (truncation < 0) throw Precondition("truncation degree must be nonnegative");
    TruncatedQuotient tq(std::move(q), std::move(c), truncation);
    if (tq.deformed()) tq.build_filtered();
    else tq.build_graded();
    return tq;
}

// Columns are ranked in descending lexicographic order, so the pivot of a
// relation row is its lex-largest monomial and normal forms rewrite toward
// lex-smaller paths.
long TruncatedQuotient::col_graded(const Path& p) const {
    return paths_->count(p.length(), p.tail, p.head) - 1 - paths_->rank_in_block(p);
}

long TruncatedQuotient::col_filtered(const Path& p) const {
    long off = 0;
    for (int l = trunc_; l > p.length(); --l) off += paths_->count(l, p.tail, p.head);
    return off + paths_->count(p.length(), p.tail, p.head) - 1 - paths_->rank_in_block(p);
}

SparseVec TruncatedQuotient::to_vec(const PathAlgebraElement& x) const {
    SparseVec v;
    for (const auto& [p, c] : x.terms())
        v[deformed_ ? col_filtered(p) : col_graded(p)] = c;
    return v;
}

void TruncatedQuotient::build_graded() {
    const int nv = q_->num_vertices();
    for (int k = 2; k <= trunc_; ++k) {
        for (int i = 0; i < nv; ++i) {
            for (int j = 0; j < nv; ++j) {
                EchelonBasis eb;
                const long total = paths_->count(k, i, j);
                if (total == 0) {
                    graded_.emplace(std::make_tuple(k, i, j), std::move(eb));
                    continue;
                }
                // transported copies: a * (echelon of degree k-1); the edge
                // prefix shifts every descending rank by a block constant
                long offset = 0;
                for (int a : q_->out_edges(i)) {
                    const long cnt = paths_->count(k - 1, q_->head(a), j);
                    auto it = graded_.find(std::make_tuple(k - 1, q_->head(a), j));
                    if (it != graded_.end() && cnt > 0) {
                        const long shift = total - offset - cnt;
                        for (const auto& [lead, row] : it->second.rows()) {
                            SparseVec moved;
                            auto hint = moved.end();
                            for (const auto& [col, val] : row)
                                hint = moved.emplace_hint(hint, col + shift, val);
                            eb.insert_raw(std::move(moved));
                        }
                    }
                    offset += cnt;
                }
                // fresh relation rows w_i r
                PathAlgebraElement wi = moment_component(q_, i);
                if (!wi.is_zero()) {
                    const long nr = paths_->count(k - 2, i, j);
                    for (long r = 0; r < nr; ++r) {
                        PathAlgebraElement rel =
                            pa_mul(wi, PathAlgebraElement(q_, paths_->path_at(k - 2, i, j, r)));
                        eb.insert(to_vec(rel));
                    }
                }
                graded_.emplace(std::make_tuple(k, i, j), std::move(eb));
            }
        }
    }
}

void TruncatedQuotient::build_filtered() {
    const int nv = q_->num_vertices();
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) filtered_.emplace(std::make_pair(i, j), EchelonBasis{});

    for (int s = 0; s < nv; ++s) {
        PathAlgebraElement rel = moment_component(q_, s);
        auto itc = c_.find(s);
        if (itc != c_.end())
            rel.add_term(Path::trivial(s), -itc->second);
        if (rel.is_zero()) continue;
        for (int lp = 0; lp + 2 <= trunc_; ++lp)
            for (int lq = 0; lp + lq + 2 <= trunc_; ++lq)
                for (int i = 0; i < nv; ++i)
                    for (int j = 0; j < nv; ++j) {
                        const long np = paths_->count(lp, i, s), nq = paths_->count(lq, s, j);
                        for (long rp = 0; rp < np; ++rp) {
                            PathAlgebraElement left(q_, paths_->path_at(lp, i, s, rp));
                            PathAlgebraElement mid = pa_mul(left, rel);
                            for (long rq = 0; rq < nq; ++rq) {
                                PathAlgebraElement full = pa_mul(
                                    mid, PathAlgebraElement(q_, paths_->path_at(lq, s, j, rq)));
                                filtered_[{i, j}].insert(to_vec(full));
                            }
                        }
                    }
    }
}

long TruncatedQuotient::dim(int degree, int i, int j) const {
    if (deformed_) throw DeformedUnsupported();
    if (degree > trunc_) throw TruncationExceeded("degree above the truncation");
    long total = paths_->count(degree, i, j);
    auto it = graded_.find(std::make_tuple(degree, i, j));
    if (it != graded_.end()) total -= it->second.rank();
    return total;
}

long TruncatedQuotient::dim(int degree) const {
    long total = 0;
    for (int i = 0; i < q_->num_vertices(); ++i)
        for (int j = 0; j < q_->num_vertices(); ++j) total += dim(degree, i, j);
    return total;
}

PathAlgebraElement TruncatedQuotient::from_vec(const SparseVec& v, int degree, int i,
                                               int j) const {
    PathAlgebraElement out(q_);
    const long total = paths_->count(degree, i, j);
    for (const auto& [col, val] : v)
        out.add_term(paths_->path_at(degree, i, j, total - 1 - col), val);
    return out;
}

PathAlgebraElement TruncatedQuotient::normal_form(const PathAlgebraElement& x) const {
    check_same_quiver(q_, x.quiver());
    if (x.max_length() > trunc_)
        throw TruncationExceeded("element degree above the truncation");
    PathAlgebraElement out(q_);
    if (deformed_) {
        // split by endpoint block, reduce in the stacked space
        for (int i = 0; i < q_->num_vertices(); ++i)
            for (int j = 0; j < q_->num_vertices(); ++j) {
                PathAlgebraElement part(q_);
                for (const auto& [p, c] : x.terms())
                    if (p.tail == i && p.head == j) part.add_term(p, c);
                if (part.is_zero()) continue;
                SparseVec red = filtered_.at({i, j}).reduce(to_vec(part));
                // decode: locate the (length, rank) of each column
                for (const auto& [col, val] : red) {
                    long rest = col;
                    int len = trunc_;
                    while (rest >= paths_->count(len, i, j)) {
                        rest -= paths_->count(len, i, j);
                        --len;
                    }
                    out.add_term(paths_->path_at(len, i, j, paths_->count(len, i, j) - 1 - rest),
                                 val);
                }
            }
        return out;
    }
    for (const auto& [p, c] : x.terms()) {
        auto it = graded_.find(std::make_tuple(p.length(), p.tail, p.head));
        if (it == graded_.end()) {
            out.add_term(p, c);
            continue;
        }
        SparseVec v;
        v[col_graded(p)] = c;
        out += from_vec(it->second.reduce(std::move(v)), p.length(), p.tail, p.head);
    }
    return out;
}

std::vector<Path> TruncatedQuotient::basis(int degree, int i, int j) const {
    if (deformed_) throw DeformedUnsupported();
    if (degree > trunc_) throw TruncationExceeded("degree above the truncation");
    std::vector<Path> out;
    auto it = graded_.find(std::make_tuple(degree, i, j));
    const long total = paths_->count(degree, i, j);
    for (long rank = 0; rank < total; ++rank) {
        const long col = total - 1 - rank;
        if (it == graded_.end() || !it->second.is_pivot(col))
            out.push_back(paths_->path_at(degree, i, j, rank));
    }
    return out;
}

std::vector<Path> TruncatedQuotient::basis(int degree) const {
    std::vector<Path> out;
    for (int i = 0; i < q_->num_vertices(); ++i)
        for (int j = 0; j < q_->num_vertices(); ++j) {
            auto b = basis(degree, i, j);
            out.insert(out.end(), b.begin(), b.end());
        }
    return out;
}

MatrixSeries graded_dims(const TruncatedQuotient& tq) {
    const int n = tq.quiver()->num_vertices();
    MatrixSeries s(n, tq.truncation());
    for (int k = 0; k <= tq.truncation(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.coefficient(k).set(i, j, Rational(tq.dim(k, i, j)));
    return s;
}

CycleQuotient::CycleQuotient(QuiverPtr q)
    : q_(std::move(q)), table_(std::make_shared<NecklaceTable>(q_)) {}

CycleQuotient::Layer& CycleQuotient::layer(int degree) {
    auto it = layers_.find(degree);
    if (it != layers_.end()) return it->second;
    Layer l;
    l.cycles = table_;
    if (degree >= 2) {
        PathTable pt(q_);
        for (int s = 0; s < q_->num_vertices(); ++s) {
            PathAlgebraElement ws = moment_component(q_, s);
            if (ws.is_zero()) continue;
            const long nr = pt.count(degree - 2, s, s);
            for (long r = 0; r < nr; ++r) {
                NecklaceElement cls = necklace_project(
                    pa_mul(ws, PathAlgebraElement(q_, pt.path_at(degree - 2, s, s, r))));
                if (cls.is_zero()) continue;
                l.span.insert(coords(l, cls, degree));
            }
        }
    }
    return layers_.emplace(degree, std::move(l)).first->second;
}

SparseVec CycleQuotient::coords(const Layer& l, const NecklaceElement& x, int degree) const {
    SparseVec v;
    for (const auto& [cyc, c] : x.terms()) {
        if (cyc.length() != degree) throw Error("cycle outside its layer");
        v[l.cycles->index_of(cyc)] = c;
    }
    return v;
}

long CycleQuotient::dim_l(int degree) {
    Layer& l = layer(degree);
    return table_->count(degree) - l.span.rank();
}

bool CycleQuotient::ideal_class_member(const NecklaceElement& x) {
    if (x.is_zero()) return true;
    int lo = x.terms().begin()->first.length();
    int hi = x.terms().rbegin()->first.length();
    for (int k = lo; k <= hi; ++k) {
        NecklaceElement part = x.graded_part(k);
        if (part.is_zero()) continue;
        Layer& l = layer(k);
        if (!l.span.contains(coords(l, part, k))) return false;
    }
    return true;
}

void Report::add(int degree, bool ok, std::string expected, std::string actual) {
    lines.push_back(DegreeCheck{degree, ok, std::move(expected), std::move(actual)});
    pass = pass && ok;
}

namespace {

std::string matrix_to_string(const SparseMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (long r = 0; r < m.rows(); ++r) {
        if (r) os << ",";
        os << "[";
        for (long c = 0; c < m.cols(); ++c) {
            if (c) os << ",";
            os << m.get(r, c).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

MatrixSeries koszul_series(const Quiver& q, int max_degree) {
    CartanData cd = cartan_and_tits(q);
    const int n = q.num_vertices();
    MatrixSeries denom(n, max_degree);
    denom.coefficient(0) = SparseMatrix::identity(n);
    if (max_degree >= 1) denom.coefficient(1) = cd.adjacency.scaled(Rational(-1));
    if (max_degree >= 2) denom.coefficient(2) = SparseMatrix::identity(n);
    return series_inverse(denom);
}

}  // namespace

Report hilbert_check(const Quiver& q, int max_degree) {
    if (classify(q) != QuiverClass::Wild)
        throw Precondition("the series identity applies to wild quivers only");
    Report rep;
    rep.name = "hilbert";
    TruncatedQuotient tq = build_quotient(double_quiver(q), {}, max_degree);
    MatrixSeries actual = graded_dims(tq);
    MatrixSeries expect = koszul_series(q, max_degree);
    for (int k = 0; k <= max_degree; ++k)
        rep.add(k, actual.coefficient(k) == expect.coefficient(k),
                matrix_to_string(expect.coefficient(k)), matrix_to_string(actual.coefficient(k)));
    return rep;
}

Report euler_check(const Quiver& q, int max_degree) {
    if (classify(q) != QuiverClass::Wild)
        throw Precondition("the euler identity applies to wild quivers only");
    Report rep;
    rep.name = "euler";
    TruncatedQuotient tq = build_quotient(double_quiver(q), {}, max_degree);
    MatrixSeries p = graded_dims(tq);
    CartanData cd = cartan_and_tits(q);
    const int n = q.num_vertices();
    for (int s = 0; s <= max_degree; ++s) {
        // coefficient of t^s in Tr(P + t^2 P - t P C)
        Rational tr;
        for (int i = 0; i < n; ++i) tr += p.coefficient(s).get(i, i);
        if (s >= 2)
            for (int i = 0; i < n; ++i) tr += p.coefficient(s - 2).get(i, i);
        if (s >= 1) {
            SparseMatrix pc = p.coefficient(s - 1).mul(cd.adjacency);
            for (int i = 0; i < n; ++i) tr -= pc.get(i, i);
        }
        Rational expect = (s == 0) ? Rational(n) : Rational(0);
        rep.add(s, tr == expect, expect.to_string(), tr.to_string());
    }
    return rep;
}

long center_probe(const TruncatedQuotient& tq, int degree) {
    if (tq.deformed()) throw DeformedUnsupported();
    if (degree + 1 > tq.truncation())
        throw TruncationExceeded("center probe needs degree + 1 within the truncation");
    const QuiverPtr& q = tq.quiver();

    // global index of the degree+1 quotient basis
    std::map<Path, long> index;
    for (const Path& p : tq.basis(degree + 1)) index.emplace(p, static_cast<long>(index.size()));
    const long stride = static_cast<long>(index.size());

    std::vector<Path> vars;
    for (int i = 0; i < q->num_vertices(); ++i)
        for (const Path& p : tq.basis(degree, i, i)) vars.push_back(p);

    EchelonBasis columns;
    for (const Path& z : vars) {
        SparseVec col;
        PathAlgebraElement ez(q, z);
        for (int a = 0; a < q->num_edges(); ++a) {
            PathAlgebraElement com =
                tq.normal_form(commutator(ez, PathAlgebraElement::edge(q, a)));
            for (const auto& [p, c] : com.terms()) {
                auto it = index.find(p);
                if (it == index.end()) throw Error("normal form left the quotient basis");
                auto [pos, fresh] = col.emplace(a * stride + it->second, c);
                if (!fresh) {
                    pos->second += c;
                    if (pos->second.is_zero()) col.erase(pos);
                }
            }
        }
        columns.insert(std::move(col));
    }
    return static_cast<long>(vars.size()) - columns.rank();
}

std::vector<long> l_dims(const TruncatedQuotient& tq, int max_degree) {
    if (tq.deformed()) throw DeformedUnsupported();
    CycleQuotient cq(tq.quiver());
    std::vector<long> out;
    for (int k = 0; k <= max_degree; ++k) out.push_back(cq.dim_l(k));
    return out;
}

Report descent_check(const TruncatedQuotient& tq, int max_degree) {
    if (tq.deformed()) throw DeformedUnsupported();
    const QuiverPtr& q = tq.quiver();
    Report rep;
    rep.name = "descent";
    CycleQuotient cq(q);
    PathTable pt(q);
    NecklaceTable nt(q);
    PathAlgebraElement w = moment_element(q);

    for (int m = 2; m <= max_degree; ++m) {
        long checked = 0, failed = 0;
        for (int s = 0; s < q->num_vertices(); ++s) {
            PathAlgebraElement ws = moment_component(q, s);
            if (ws.is_zero()) continue;
            for (int lp = 0; lp + 2 <= m; ++lp) {
                const int lq = m - 2 - lp;
                for (int i = 0; i < q->num_vertices(); ++i)
                    for (int j = 0; j < q->num_vertices(); ++j) {
                        const long np = pt.count(lp, i, s), nq = pt.count(lq, s, j);
                        for (long rp = 0; rp < np; ++rp) {
                            PathAlgebraElement left =
                                pa_mul(PathAlgebraElement(q, pt.path_at(lp, i, s, rp)), ws);
                            for (long rq = 0; rq < nq; ++rq) {
                                PathAlgebraElement r = pa_mul(
                                    left, PathAlgebraElement(q, pt.path_at(lq, s, j, rq)));
                                NecklaceElement cls = necklace_project(r);
                                if (cls.is_zero()) continue;
                                // hamiltonian route: theta of an ideal class kills w
                                if (!hamiltonian_derivation(cls).apply(w).is_zero()) ++failed;
                                for (int len = 1; len <= max_degree; ++len)
                                    for (const Path& cyc : nt.cycles(len)) {
                                        NecklaceElement single(q);
                                        single.add_cycle(cyc, 1);
                                        NecklaceElement b = necklace_bracket(cls, single);
                                        ++checked;
                                        if (!cq.ideal_class_member(b)) ++failed;
                                    }
                            }
                        }
                    }
            }
        }
        rep.add(m, failed == 0, "all brackets in the ideal image",
                std::to_string(checked - failed) + "/" + std::to_string(checked));
    }
    return rep;
}

}  // namespace necklace
