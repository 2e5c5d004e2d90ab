#pragma once

#include <vector>

#include "necklace/quiver.hpp"
#include "necklace/rational.hpp"
#include "necklace/sparse_matrix.hpp"

namespace necklace {

// d_i per vertex, indexed by the quiver's vertex order.
using DimVector = std::vector<long>;

struct CartanData {
    SparseMatrix adjacency;  // C: edges of the double between i and j; loops count twice
    SparseMatrix cartan;     // A = 2 Id - C
};

CartanData cartan_and_tits(const Quiver& q);

// q(d) = (d, A d) / 2 and p(d) = 1 - q(d).
Rational tits_q(const CartanData& cd, const DimVector& d);
Rational tits_p(const CartanData& cd, const DimVector& d);

enum class QuiverClass { Dynkin, ExtendedDynkin, Wild };

const char* to_string(QuiverClass c);

// Tits-form definiteness, decided exactly: positive definite -> Dynkin,
// positive semidefinite with nontrivial radical -> ExtendedDynkin, else Wild.
// Requires a connected quiver.
QuiverClass classify(const Quiver& q);

// Per-component classification for disconnected input.
std::vector<std::pair<std::vector<int>, QuiverClass>> classify_components(const Quiver& q);

// (alpha, A beta) <= -2 for every decomposition d = alpha + beta with both
// parts nonzero, decided by exhaustive enumeration. Throws TooLarge when the
// decomposition count exceeds the bound.
bool sigma0_member(const Quiver& q, const DimVector& d, long long bound = 10'000'000);

// Support of d connected and (A d)_i <= 0 for all i.
bool fundamental_region_test(const Quiver& q, const DimVector& d);

}  // namespace necklace
