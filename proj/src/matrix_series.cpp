#include "necklace/matrix_series.hpp"

#include "necklace/errors.hpp"

namespace necklace {

MatrixSeries MatrixSeries::identity(long n, long truncation) {
    MatrixSeries s(n, truncation);
    s.coeff_[0] = SparseMatrix::identity(n);
    return s;
}

MatrixSeries MatrixSeries::mul(const MatrixSeries& o) const {
    if (n_ != o.n_) throw Error("series product size mismatch");
    long trunc = std::min(truncation(), o.truncation());
    MatrixSeries out(n_, trunc);
    for (long k = 0; k <= trunc; ++k)
        for (long j = 0; j <= k; ++j)
            out.coeff_[k] = out.coeff_[k].add(coeff_[j].mul(o.coeff_[k - j]));
    return out;
}

static SparseMatrix dense_inverse(const SparseMatrix& a) {
    const long n = a.rows();
    SparseMatrix aug(n, 2 * n);
    for (long r = 0; r < n; ++r) {
        for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
        aug.set(r, n + r, 1);
    }
    RrefResult res = rref(aug);
    for (long i = 0; i < n; ++i)
        if (i >= res.rank() || res.pivots[i] != i) throw SingularConstantTerm();
    SparseMatrix inv(n, n);
    for (long r = 0; r < n; ++r)
        for (const auto& [c, v] : res.echelon.row(r))
            if (c >= n) inv.set(r, c - n, v);
    return inv;
}

MatrixSeries series_inverse(const MatrixSeries& a) {
    const long n = a.size();
    const long trunc = a.truncation();
    SparseMatrix inv0 = dense_inverse(a.coefficient(0));

    MatrixSeries b(n, trunc);
    b.coefficient(0) = inv0;
    for (long k = 1; k <= trunc; ++k) {
        SparseMatrix acc(n, n);
        for (long j = 1; j <= k; ++j) acc = acc.add(a.coefficient(j).mul(b.coefficient(k - j)));
        b.coefficient(k) = inv0.mul(acc.scaled(Rational(-1)));
    }
    return b;
}

}  // namespace necklace
