#pragma once

#include "necklace/dr.hpp"
#include "necklace/ncform.hpp"

namespace necklace {

// The element mapped to a closed 2-form by contraction with the
// distinguished double derivation: returns the unique commutator-space lift
// w with d(w) = contract_reduced(Delta, omega). Callers add scalars from kI
// themselves (the deformed relation w - c).
//
// Throws NotClosed when d(omega) is nonzero in the de Rham quotient, and
// NoSolution on internal inconsistency (cannot occur for closed input).
PathAlgebraElement mu_nc(const NCForm& omega, DrCalculator& dr);

}  // namespace necklace
