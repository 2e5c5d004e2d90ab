#pragma once

#include <vector>

#include "necklace/derivation.hpp"

namespace necklace {

// n x n matrix with entries in P (x) P, the Jacobi matrix of a self-map of
// the free algebra on the base loops of a one-vertex quiver.
class JacobiMatrix {
  public:
    JacobiMatrix(QuiverPtr q, int n);

    int size() const { return n_; }
    const QuiverPtr& quiver() const { return q_; }
    const BiPoly& entry(int i, int j) const { return entries_[i * n_ + j]; }
    BiPoly& entry(int i, int j) { return entries_[i * n_ + j]; }

    friend bool operator==(const JacobiMatrix& a, const JacobiMatrix& b) {
        return a.n_ == b.n_ && same_quiver(a.q_, b.q_) && a.entries_ == b.entries_;
    }

  private:
    QuiverPtr q_;
    int n_;
    std::vector<BiPoly> entries_;
};

// Endomorphism data x_i -> f_i: one image per base loop, star-free.
// Throws NotFreeAlgebra when the quiver has more than one vertex or when an
// element uses reversed edges.
JacobiMatrix jacobi_matrix(const QuiverPtr& q, const std::vector<PathAlgebraElement>& images);

// Multiplication in Mat_n(A^e): (a (x) b) (c (x) d) = ac (x) db.
JacobiMatrix star_mul(const JacobiMatrix& a, const JacobiMatrix& b);

// Applies the endomorphism to both tensor factors of every entry.
JacobiMatrix substitute(const JacobiMatrix& j, const std::vector<PathAlgebraElement>& images);

// Image of an element under the endomorphism, and the composite G after F.
PathAlgebraElement apply_endo(const std::vector<PathAlgebraElement>& images,
                              const PathAlgebraElement& x);
std::vector<PathAlgebraElement> compose_endo(const std::vector<PathAlgebraElement>& outer,
                                             const std::vector<PathAlgebraElement>& inner);

}  // namespace necklace
