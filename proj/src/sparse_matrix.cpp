#include "necklace/sparse_matrix.hpp"

#include "necklace/errors.hpp"

namespace necklace {

void add_scaled(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (c.is_zero()) return;
    for (const auto& [col, val] : src) {
        auto it = dst.find(col);
        if (it == dst.end()) {
            dst.emplace(col, c * val);
        } else {
            it->second += c * val;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

void scale(SparseVec& v, const Rational& c) {
    if (c.is_zero()) {
        v.clear();
        return;
    }
    for (auto& [col, val] : v) val *= c;
}

bool is_zero(const SparseVec& v) { return v.empty(); }

SparseMatrix SparseMatrix::identity(long n) {
    SparseMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Rational SparseMatrix::get(long r, long c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational() : it->second;
}

void SparseMatrix::set(long r, long c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add(long r, long c, const Rational& v) { set(r, c, get(r, c) + v); }

long SparseMatrix::nnz() const {
    long n = 0;
    for (const auto& row : data_) n += static_cast<long>(row.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

SparseMatrix SparseMatrix::mul(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    SparseMatrix out(rows_, o.cols_);
    for (long r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r]) add_scaled(out.data_[r], v, o.data_[k]);
    return out;
}

SparseMatrix SparseMatrix::add(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    SparseMatrix out = *this;
    for (long r = 0; r < rows_; ++r) add_scaled(out.data_[r], 1, o.data_[r]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix out(rows_, cols_);
    if (c.is_zero()) return out;
    for (long r = 0; r < rows_; ++r) {
        out.data_[r] = data_[r];
        scale(out.data_[r], c);
    }
    return out;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
    std::vector<Rational> out(rows_);
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r]) out[r] += val * v[c];
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const SparseMatrix& m) {
    const long nrows = m.rows();
    std::vector<SparseVec> work(nrows);
    for (long r = 0; r < nrows; ++r) work[r] = m.row(r);
    std::vector<bool> used(nrows, false);
    std::vector<long> pivots;
    std::vector<long> pivot_row_of;

    for (long col = 0; col < m.cols(); ++col) {
        long pr = -1;
        for (long r = 0; r < nrows; ++r) {
            if (used[r]) continue;
            auto it = work[r].find(col);
            if (it != work[r].end()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        used[pr] = true;
        scale(work[pr], work[pr][col].inverse());
        for (long r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            auto it = work[r].find(col);
            if (it != work[r].end()) add_scaled(work[r], -it->second, work[pr]);
        }
        pivots.push_back(col);
        pivot_row_of.push_back(pr);
    }

    RrefResult res;
    res.pivots = pivots;
    res.echelon = SparseMatrix(nrows, m.cols());
    for (size_t i = 0; i < pivot_row_of.size(); ++i)
        res.echelon.row_ref(static_cast<long>(i)) = std::move(work[pivot_row_of[i]]);
    return res;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.echelon.get(static_cast<long>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

long rank(const SparseMatrix& m) { return rref(m).rank(); }

bool EchelonBasis::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const long lead = v.begin()->first;
    scale(v, v.begin()->second.inverse());
    rows_.emplace(lead, std::move(v));
    return true;
}

void EchelonBasis::insert_raw(SparseVec v) {
    if (v.empty()) return;
    const long lead = v.begin()->first;
    if (v.begin()->second != Rational(1)) throw Error("insert_raw needs a unit leading entry");
    if (!rows_.emplace(lead, std::move(v)).second) throw Error("insert_raw pivot collision");
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        const long col = it->first;
        auto pivot = rows_.find(col);
        if (pivot == rows_.end()) {
            ++it;
            continue;
        }
        // Eliminating col only introduces entries at larger columns.
        Rational c = -it->second;
        add_scaled(v, c, pivot->second);
        it = v.upper_bound(col);
    }
    return v;
}

}  // namespace necklace
