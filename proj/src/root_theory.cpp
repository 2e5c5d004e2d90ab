#include "necklace/root_theory.hpp"

#include <set>

#include "necklace/errors.hpp"

namespace necklace {

CartanData cartan_and_tits(const Quiver& q) {
    const int n = q.num_vertices();
    SparseMatrix c(n, n);
    for (int e = 0; e < q.num_edges(); ++e) {
        c.add(q.tail(e), q.head(e), 1);
        c.add(q.head(e), q.tail(e), 1);  // the reverse edge of the double
    }
    SparseMatrix a = SparseMatrix::identity(n).scaled(2).add(c.scaled(Rational(-1)));
    return CartanData{std::move(c), std::move(a)};
}

static std::vector<Rational> to_rational(const DimVector& d) {
    std::vector<Rational> v;
    v.reserve(d.size());
    for (long x : d) v.emplace_back(x);
    return v;
}

Rational tits_q(const CartanData& cd, const DimVector& d) {
    if (static_cast<long>(d.size()) != cd.cartan.rows()) throw Error("dimension vector size mismatch");
    auto v = to_rational(d);
    auto av = cd.cartan.apply(v);
    Rational s;
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * av[i];
    return s / Rational(2);
}

Rational tits_p(const CartanData& cd, const DimVector& d) { return Rational(1) - tits_q(cd, d); }

const char* to_string(QuiverClass c) {
    switch (c) {
        case QuiverClass::Dynkin: return "Dynkin";
        case QuiverClass::ExtendedDynkin: return "ExtendedDynkin";
        default: return "Wild";
    }
}

// Symmetric Gaussian elimination (rational LDL^T). For a symmetric matrix, a
// zero diagonal entry with a nonzero residual row certifies indefiniteness.
static QuiverClass definiteness(SparseMatrix a) {
    const long n = a.rows();
    std::vector<bool> done(n, false);
    long pivots_found = 0;
    for (;;) {
        long p = -1;
        for (long i = 0; i < n; ++i)
            if (!done[i] && !a.get(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) break;
        Rational d = a.get(p, p);
        if (d.sign() < 0) return QuiverClass::Wild;
        ++pivots_found;
        done[p] = true;
        // a <- a - (col p)(row p)/d on the remaining block
        SparseVec row = a.row(p);
        for (const auto& [i, ci] : row) {
            if (done[i]) continue;
            for (const auto& [j, cj] : row) {
                if (done[j]) continue;
                a.add(i, j, -(ci * cj) / d);
            }
        }
        for (const auto& [i, ci] : row) {
            (void)ci;
            if (!done[i]) a.set(i, p, 0), a.set(p, i, 0);
        }
    }
    // All remaining diagonal entries are zero; any nonzero off-diagonal entry
    // in the residual block makes the form indefinite.
    for (long i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (const auto& [j, v] : a.row(i)) {
            (void)v;
            if (!done[j]) return QuiverClass::Wild;
        }
    }
    return pivots_found == n ? QuiverClass::Dynkin : QuiverClass::ExtendedDynkin;
}

QuiverClass classify(const Quiver& q) {
    if (!q.connected()) throw Precondition("classify requires a connected quiver");
    return definiteness(cartan_and_tits(q).cartan);
}

std::vector<std::pair<std::vector<int>, QuiverClass>> classify_components(const Quiver& q) {
    std::vector<std::pair<std::vector<int>, QuiverClass>> out;
    for (const auto& comp : q.components()) {
        std::vector<int> vmap(q.num_vertices(), -1);
        std::vector<std::string> vs;
        for (size_t i = 0; i < comp.size(); ++i) {
            vmap[comp[i]] = static_cast<int>(i);
            vs.push_back(q.vertex_name(comp[i]));
        }
        std::vector<Edge> edges;
        for (int e = 0; e < q.num_edges(); ++e)
            if (vmap[q.tail(e)] >= 0 && vmap[q.head(e)] >= 0)
                edges.push_back(Edge{q.edge_name(e), vmap[q.tail(e)], vmap[q.head(e)]});
        out.emplace_back(comp, classify(Quiver(vs, edges)));
    }
    return out;
}

bool sigma0_member(const Quiver& q, const DimVector& d, long long bound) {
    if (static_cast<int>(d.size()) != q.num_vertices()) throw Error("dimension vector size mismatch");
    bool nonzero = false;
    for (long x : d) {
        if (x < 0) throw Precondition("dimension vector must be nonnegative");
        if (x > 0) nonzero = true;
    }
    if (!nonzero) throw Precondition("dimension vector must be nonzero");

    long long total = 1;
    for (long x : d) {
        total *= (x + 1);
        if (total > bound) throw TooLarge("decomposition count exceeds bound");
    }

    CartanData cd = cartan_and_tits(q);
    const int n = q.num_vertices();
    DimVector alpha(n, 0);
    // enumerate alpha in the box [0, d], skipping 0 and d
    for (long long it = 1; it + 1 < total; ++it) {
        long long rest = it;
        for (int i = 0; i < n; ++i) {
            alpha[i] = rest % (d[i] + 1);
            rest /= (d[i] + 1);
        }
        DimVector beta(n);
        for (int i = 0; i < n; ++i) beta[i] = d[i] - alpha[i];
        auto abeta = cd.cartan.apply(to_rational(beta));
        Rational pairing;
        for (int i = 0; i < n; ++i) pairing += Rational(alpha[i]) * abeta[i];
        if (pairing > Rational(-2)) return false;
    }
    return true;
}

bool fundamental_region_test(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.num_vertices()) throw Error("dimension vector size mismatch");
    bool nonzero = false;
    for (long x : d)
        if (x != 0) nonzero = true;
    if (!nonzero) throw Precondition("dimension vector must be nonzero");

    // support connectivity in the underlying graph
    std::set<int> support;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (d[v] > 0) support.insert(v);
    std::set<int> seen{*support.begin()};
    std::vector<int> stack{*support.begin()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < q.num_edges(); ++e) {
            int other = -1;
            if (q.tail(e) == v) other = q.head(e);
            else if (q.head(e) == v) other = q.tail(e);
            if (other >= 0 && support.count(other) && !seen.count(other)) {
                seen.insert(other);
                stack.push_back(other);
            }
        }
    }
    if (seen.size() != support.size()) return false;

    CartanData cd = cartan_and_tits(q);
    auto ad = cd.cartan.apply(to_rational(d));
    for (const Rational& x : ad)
        if (x.sign() > 0) return false;
    return true;
}

}  // namespace necklace
