#pragma once

#include "necklace/derivation.hpp"
#include "necklace/ncform.hpp"

namespace necklace {

// Cyclic partial derivative: sums (p_{>i})(p_{<i}) over the occurrences of
// the edge in each cycle. Lands in e_{h(a)} P e_{t(a)}; trivial cycles map
// to zero.
PathAlgebraElement cyclic_partial(int edge, const NecklaceElement& p);

// One-form representative sum_a (cyclic_partial(a, p)) da of the class dp.
NCForm d_necklace(const NecklaceElement& p);

// Hamiltonian derivation of a necklace: theta_p(a) = eps(a) *
// cyclic_partial(a*, p).
Derivation hamiltonian_derivation(const NecklaceElement& p);

// Inverse of contraction against the canonical 2-form on 1-form classes:
// collects alpha as sum_a f_a da and returns the derivation a -> eps(a)
// f_{a*}.
Derivation h_omega(const NCForm& alpha);

// Necklace bracket {p,q} = sum_{a} eps(a*) (d_a p)(d_{a*} q) projected to
// the commutator quotient. Degree -2 on the path-length grading.
NecklaceElement necklace_bracket(const NecklaceElement& p, const NecklaceElement& q);

// The canonical bi-symplectic 2-form sum_{a in Q} da da*.
NCForm canonical_symplectic_form(const QuiverPtr& q);

// The moment element w = sum_{a in Q} [a, a*].
PathAlgebraElement moment_element(const QuiverPtr& q);

// Liouville 1-form sum_{a in Q} a da*; its differential is the canonical
// 2-form up to de Rham equivalence.
NCForm liouville(const QuiverPtr& q);

struct CentralityReport {
    bool central = true;
    Path witness_cycle;            // a basis cycle with nonzero bracket, when found
    NecklaceElement witness_bracket;
};

// Tests {class of e_i w^m, q} = 0 for every basis cycle q of length <= degree_bound.
CentralityReport centrality_check(const QuiverPtr& q, int power, int vertex, int degree_bound);
CentralityReport centrality_check(const QuiverPtr& q, const NecklaceElement& p, int degree_bound);

}  // namespace necklace
