#pragma once

#include <vector>

#include "necklace/sparse_matrix.hpp"

namespace necklace {

// Truncated formal power series with n x n rational matrix coefficients.
// coefficient(k) is the matrix at t^k; all degrees 0..truncation are stored.
class MatrixSeries {
  public:
    MatrixSeries(long n, long truncation)
        : n_(n), coeff_(truncation + 1, SparseMatrix(n, n)) {}

    static MatrixSeries identity(long n, long truncation);

    long size() const { return n_; }
    long truncation() const { return static_cast<long>(coeff_.size()) - 1; }

    const SparseMatrix& coefficient(long k) const { return coeff_[k]; }
    SparseMatrix& coefficient(long k) { return coeff_[k]; }

    MatrixSeries mul(const MatrixSeries& o) const;

    friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
        return a.n_ == b.n_ && a.coeff_ == b.coeff_;
    }

  private:
    long n_;
    std::vector<SparseMatrix> coeff_;
};

// Exact inverse by recursive convolution; requires the constant term to be
// invertible, else SingularConstantTerm.
MatrixSeries series_inverse(const MatrixSeries& a);

}  // namespace necklace
