#include "necklace/rep.hpp"

#include <algorithm>

#include "necklace/errors.hpp"
#include "necklace/necklace_lie.hpp"

namespace necklace {

DenseMat DenseMat::identity(long n) {
    DenseMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMat DenseMat::mul(const DenseMat& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    DenseMat out(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

DenseMat& DenseMat::operator+=(const DenseMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

DenseMat& DenseMat::operator-=(const DenseMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

DenseMat DenseMat::scaled(const Rational& c) const {
    DenseMat out = *this;
    for (auto& v : out.a_) v *= c;
    return out;
}

Rational DenseMat::trace() const {
    Rational t;
    for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool DenseMat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

DenseMat DenseMat::inverse() const {
    if (rows_ != cols_) throw ShapeMismatch("inverse of a non-square matrix");
    const long n = rows_;
    DenseMat work = *this, inv = identity(n);
    for (long col = 0; col < n; ++col) {
        long pr = -1;
        for (long r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) throw Error("singular matrix");
        if (pr != col)
            for (long c = 0; c < n; ++c) {
                std::swap(work.at(pr, c), work.at(col, c));
                std::swap(inv.at(pr, c), inv.at(col, c));
            }
        Rational piv = work.at(col, col).inverse();
        for (long c = 0; c < n; ++c) {
            work.at(col, c) *= piv;
            inv.at(col, c) *= piv;
        }
        for (long r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            Rational f = work.at(r, col);
            for (long c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

RepPoint::RepPoint(QuiverPtr q, DimVector d) : q_(std::move(q)), d_(std::move(d)) {
    if (static_cast<int>(d_.size()) != q_->num_vertices())
        throw ShapeMismatch("dimension vector size mismatch");
    for (long x : d_)
        if (x < 0) throw ShapeMismatch("negative dimension");
    for (int e = 0; e < q_->num_edges(); ++e)
        mats_.emplace_back(d_[q_->head(e)], d_[q_->tail(e)]);
}

RepPoint RepPoint::random(const QuiverPtr& q, const DimVector& d, SplitMix64& rng, long bound) {
    RepPoint rho(q, d);
    for (int e = 0; e < q->num_edges(); ++e)
        for (long i = 0; i < rho.matrix(e).rows(); ++i)
            for (long j = 0; j < rho.matrix(e).cols(); ++j)
                rho.matrix(e).at(i, j) = Rational(rng.range(-bound, bound));
    return rho;
}

GroupElementLie::GroupElementLie(QuiverPtr q, DimVector d) : q_(std::move(q)), d_(std::move(d)) {
    if (static_cast<int>(d_.size()) != q_->num_vertices())
        throw ShapeMismatch("dimension vector size mismatch");
    for (long x : d_) blocks_.emplace_back(x, x);
}

GroupElementLie GroupElementLie::random(const QuiverPtr& q, const DimVector& d, SplitMix64& rng,
                                        long bound) {
    GroupElementLie x(q, d);
    Rational total;
    for (size_t v = 0; v < d.size(); ++v)
        for (long i = 0; i < d[v]; ++i)
            for (long j = 0; j < d[v]; ++j) {
                x.block(v).at(i, j) = Rational(rng.range(-bound, bound));
                if (i == j) total += x.block(v).at(i, j);
            }
    // rebalance one diagonal entry to reach total trace zero
    for (size_t v = 0; v < d.size(); ++v)
        if (d[v] > 0) {
            x.block(v).at(0, 0) -= total;
            break;
        }
    x.check_traceless();
    return x;
}

void GroupElementLie::check_traceless() const {
    Rational total;
    for (const auto& b : blocks_) total += b.trace();
    if (!total.is_zero()) throw ShapeMismatch("total trace must vanish");
}

DenseMat evaluate_path(const Path& p, const RepPoint& rho) {
    const DimVector& d = rho.dims();
    DenseMat acc = DenseMat::identity(d[p.tail]);
    for (int e : p.edges) acc = rho.matrix(e).mul(acc);
    return acc;
}

BlockMatrix evaluate(const PathAlgebraElement& x, const RepPoint& rho) {
    check_same_quiver(x.quiver(), rho.quiver());
    BlockMatrix out;
    const DimVector& d = rho.dims();
    for (const auto& [p, c] : x.terms()) {
        auto key = std::make_pair(p.tail, p.head);
        auto it = out.find(key);
        if (it == out.end())
            it = out.emplace(key, DenseMat(d[p.head], d[p.tail])).first;
        it->second += evaluate_path(p, rho).scaled(c);
    }
    return out;
}

void InvariantPolynomial::add_monomial(std::vector<Path> cycles, const Rational& c) {
    if (c.is_zero()) return;
    for (const Path& p : cycles)
        if (p.is_trivial()) throw Error("invariant monomials use nontrivial cycles");
    std::sort(cycles.begin(), cycles.end());
    auto it = terms_.find(cycles);
    if (it == terms_.end()) {
        terms_.emplace(std::move(cycles), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

InvariantPolynomial InvariantPolynomial::from_necklace(const NecklaceElement& x,
                                                       const DimVector& d) {
    InvariantPolynomial out(x.quiver());
    for (const auto& [cyc, c] : x.terms()) {
        if (cyc.is_trivial()) {
            // the class of a trivial path is the scalar d_i
            Rational scaled = c * Rational(d[cyc.tail]);
            if (!scaled.is_zero()) {
                auto it = out.terms_.find({});
                if (it == out.terms_.end()) out.terms_.emplace(std::vector<Path>{}, scaled);
                else {
                    it->second += scaled;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        } else {
            out.add_monomial({cyc}, c);
        }
    }
    return out;
}

int InvariantPolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) {
        (void)c;
        int t = 0;
        for (const Path& p : mono) t += p.length();
        deg = std::max(deg, t);
    }
    return deg;
}

Rational psi(const NecklaceElement& x, const RepPoint& rho) {
    check_same_quiver(x.quiver(), rho.quiver());
    Rational out;
    for (const auto& [cyc, c] : x.terms()) {
        if (cyc.is_trivial()) out += c * Rational(rho.dims()[cyc.tail]);
        else out += c * evaluate_path(cyc, rho).trace();
    }
    return out;
}

Rational psi(const InvariantPolynomial& p, const RepPoint& rho) {
    check_same_quiver(p.quiver(), rho.quiver());
    Rational out;
    for (const auto& [mono, c] : p.terms()) {
        Rational prod = c;
        for (const Path& cyc : mono) prod *= evaluate_path(cyc, rho).trace();
        out += prod;
    }
    return out;
}

GroupElementLie moment(const RepPoint& rho) {
    const QuiverPtr& q = rho.quiver();
    GroupElementLie mu(q, rho.dims());
    for (int b = 0; b < q->num_base_edges(); ++b) {
        const int a = q->base_edge(b);
        const DenseMat& xa = rho.matrix(a);
        const DenseMat& xas = rho.matrix(q->reverse(a));
        mu.block(q->tail(a)) += xas.mul(xa);   // value of the cycle a a*
        mu.block(q->head(a)) -= xa.mul(xas);   // value of the cycle a* a
    }
    return mu;
}

Rational symplectic_pair(const TangentVector& u, const TangentVector& v) {
    check_same_quiver(u.quiver(), v.quiver());
    if (u.dims() != v.dims()) throw ShapeMismatch("tangent vectors of different dimension");
    const QuiverPtr& q = u.quiver();
    Rational out;
    for (int b = 0; b < q->num_base_edges(); ++b) {
        const int a = q->base_edge(b);
        const int as = q->reverse(a);
        out += u.matrix(as).mul(v.matrix(a)).trace();
        out -= v.matrix(as).mul(u.matrix(a)).trace();
    }
    return out;
}

TangentVector group_action_vector(const GroupElementLie& x, const RepPoint& rho) {
    const QuiverPtr& q = rho.quiver();
    TangentVector out(q, rho.dims());
    for (int e = 0; e < q->num_edges(); ++e) {
        out.matrix(e) = x.block(q->head(e)).mul(rho.matrix(e));
        out.matrix(e) -= rho.matrix(e).mul(x.block(q->tail(e)));
    }
    return out;
}

bool moment_identity_check(const RepPoint& rho, const GroupElementLie& x,
                           const TangentVector& v) {
    x.check_traceless();
    Rational lhs = symplectic_pair(group_action_vector(x, rho), v);

    // directional derivative of Tr(x . moment) along v, expanded term by
    // term from the moment word: d/dt [ X_{a*} X_a - X_a X_{a*} ]
    const QuiverPtr& q = rho.quiver();
    Rational rhs;
    for (int b = 0; b < q->num_base_edges(); ++b) {
        const int a = q->base_edge(b);
        const int as = q->reverse(a);
        const DenseMat& xa = rho.matrix(a);
        const DenseMat& xas = rho.matrix(as);
        const DenseMat& va = v.matrix(a);
        const DenseMat& vas = v.matrix(as);
        DenseMat dt = vas.mul(xa);
        dt += xas.mul(va);
        rhs += x.block(q->tail(a)).mul(dt).trace();
        DenseMat dh = va.mul(xas);
        dh += xa.mul(vas);
        rhs -= x.block(q->head(a)).mul(dh).trace();
    }
    return lhs == rhs;
}

Rational gradient_oracle(const InvariantPolynomial& p, const RepPoint& rho, int edge, long i,
                         long j) {
    const int m = p.total_degree();
    if (m == 0) return Rational();
    // values along the coordinate line
    std::vector<Rational> f;
    f.reserve(m + 1);
    RepPoint probe = rho;
    for (int s = 0; s <= m; ++s) {
        probe.matrix(edge).at(i, j) = rho.matrix(edge).at(i, j) + Rational(s);
        f.push_back(psi(p, probe));
    }
    // forward differences; derivative at 0 of the Newton interpolant
    Rational grad;
    for (int k = 1; k <= m; ++k) {
        for (size_t t = 0; t + 1 < f.size(); ++t) f[t] = f[t + 1] - f[t];
        f.pop_back();
        Rational term = f[0] / Rational(k);
        grad += (k % 2 == 1) ? term : -term;
    }
    return grad;
}

bool poisson_check(const NecklaceElement& p, const NecklaceElement& q, const RepPoint& rho) {
    const QuiverPtr& quiv = rho.quiver();
    const DimVector& d = rho.dims();
    InvariantPolynomial ip = InvariantPolynomial::from_necklace(p, d);
    InvariantPolynomial iq = InvariantPolynomial::from_necklace(q, d);

    Rational lhs;
    for (int b = 0; b < quiv->num_base_edges(); ++b) {
        const int a = quiv->base_edge(b);
        const int as = quiv->reverse(a);
        const long dt = d[quiv->tail(a)], dh = d[quiv->head(a)];
        for (long i = 0; i < dt; ++i)
            for (long j = 0; j < dh; ++j)
                lhs += gradient_oracle(ip, rho, as, i, j) * gradient_oracle(iq, rho, a, j, i);
        for (long i = 0; i < dh; ++i)
            for (long j = 0; j < dt; ++j)
                lhs -= gradient_oracle(ip, rho, a, i, j) * gradient_oracle(iq, rho, as, j, i);
    }
    Rational rhs = psi(necklace_bracket(p, q), rho);
    return lhs == rhs;
}

std::vector<std::vector<Path>> invariant_monomials(const QuiverPtr& q, int degree) {
    NecklaceTable nt(q);
    std::vector<Path> cycles;
    for (int len = 1; len <= degree; ++len)
        for (const Path& c : nt.cycles(len)) cycles.push_back(c);

    std::vector<std::vector<Path>> out;
    std::vector<Path> current;
    auto rec = [&](auto&& self, size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (size_t idx = start; idx < cycles.size(); ++idx) {
            if (cycles[idx].length() > remaining) continue;
            current.push_back(cycles[idx]);
            self(self, idx, remaining - cycles[idx].length());
            current.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

bool StabilizationReport::full_rank() const {
    for (const auto& d : degrees)
        if (d.rank != d.monomials) return false;
    return true;
}

StabilizationReport stabilization_rank(const QuiverPtr& q, int max_degree, const DimVector& d,
                                       long samples, uint64_t seed, long bound) {
    StabilizationReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.bound = bound;

    SplitMix64 rng(seed);
    std::vector<RepPoint> points;
    points.reserve(samples);
    for (long s = 0; s < samples; ++s) points.push_back(RepPoint::random(q, d, rng, bound));

    for (int s = 1; s <= max_degree; ++s) {
        auto monos = invariant_monomials(q, s);
        EchelonBasis rows;
        for (const RepPoint& rho : points) {
            SparseVec row;
            for (size_t c = 0; c < monos.size(); ++c) {
                Rational val = 1;
                for (const Path& cyc : monos[c]) val *= evaluate_path(cyc, rho).trace();
                if (!val.is_zero()) row[c] = val;
            }
            rows.insert(std::move(row));
            if (rows.rank() == static_cast<long>(monos.size())) break;
        }
        rep.degrees.push_back({s, static_cast<long>(monos.size()), rows.rank()});
    }
    return rep;
}

}  // namespace necklace
