#pragma once

#include <map>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

// Sparse vector over column indices; entries are nonzero.
using SparseVec = std::map<long, Rational>;

// dst += c * src, dropping entries that cancel.
void add_scaled(SparseVec& dst, const Rational& c, const SparseVec& src);
void scale(SparseVec& v, const Rational& c);
bool is_zero(const SparseVec& v);

// Row-major sparse matrix over the rationals. No stored zero entries.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {}
    static SparseMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational get(long r, long c) const;
    void set(long r, long c, const Rational& v);
    void add(long r, long c, const Rational& v);
    const SparseVec& row(long r) const { return data_[r]; }
    SparseVec& row_ref(long r) { return data_[r]; }

    long nnz() const;
    SparseMatrix transpose() const;
    SparseMatrix mul(const SparseMatrix& o) const;
    SparseMatrix add(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

struct RrefResult {
    SparseMatrix echelon;       // full reduced row-echelon form
    std::vector<long> pivots;   // pivot columns, strictly increasing
    long rank() const { return static_cast<long>(pivots.size()); }
};

// Row-reduced echelon form. Pivot selection scans columns left to right and
// rows top to bottom, so the result (which is canonical anyway) is produced
// by a fixed arithmetic path.
RrefResult rref(const SparseMatrix& m);

// Exact basis of the right null space {v : m v = 0}; size = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

long rank(const SparseMatrix& m);

// Incremental row-space echelon. Rows are kept in triangular (not fully
// back-substituted) form: each stored row has leading coefficient 1 at its
// pivot column and all other entries at larger columns which may or may not
// be pivots of other rows. reduce() eliminates every pivot column from its
// argument, so residues are supported on non-pivot columns only and agree
// with reduction against the full RREF of the row space.
class EchelonBasis {
  public:
    // Reduces v against the basis and, if a nonzero residue remains,
    // normalizes and stores it. Returns true when the rank grew.
    bool insert(SparseVec v);

    // Stores a row whose leading coefficient is already 1 and whose leading
    // column is not yet a pivot, without reducing it first.
    void insert_raw(SparseVec v);

    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return is_zero(reduce(v)); }
    long rank() const { return static_cast<long>(rows_.size()); }
    bool is_pivot(long col) const { return rows_.count(col) != 0; }
    const std::map<long, SparseVec>& rows() const { return rows_; }

  private:
    std::map<long, SparseVec> rows_;  // pivot column -> row
};

}  // namespace necklace
