#pragma once

#include <map>
#include <vector>

#include "necklace/ncform.hpp"
#include "necklace/sparse_matrix.hpp"

namespace necklace {

// Membership tests in the super-commutator subspace of the form algebra,
// decided blockwise by exact linear algebra per (form degree, path length).
// There is no canonical normal form for the de Rham quotient in degree >= 2,
// so equality of classes is what this provides. Block echelons are cached
// per calculator instance.
class DrCalculator {
  public:
    explicit DrCalculator(QuiverPtr q, int max_path_degree = 8)
        : q_(std::move(q)), bound_(max_path_degree) {}

    bool dr_is_zero(const NCForm& w);
    bool dr_equal(const NCForm& a, const NCForm& b);

    // Canonical residue of the (degree, path length m) block of w after
    // reduction against the super-commutator span.
    NCForm dr_project(const NCForm& w, int m);

    const QuiverPtr& quiver() const { return q_; }
    int bound() const { return bound_; }

  private:
    struct Block {
        std::vector<FormMonomial> monomials;
        std::map<FormMonomial, long> index;
        EchelonBasis span;
    };

    Block& block(int n, int m);
    SparseVec coords(const Block& b, const NCForm& w) const;

    QuiverPtr q_;
    int bound_;
    std::map<std::pair<int, int>, Block> cache_;
};

// The class of a 1-form written in the basis sum_a f_a da with
// f_a in e_{h(a)} P e_{t(a)} (the cyclic-collection isomorphism for the
// degree-1 de Rham quotient). Index = edge.
std::vector<PathAlgebraElement> dr1_coordinates(const NCForm& w);

}  // namespace necklace
