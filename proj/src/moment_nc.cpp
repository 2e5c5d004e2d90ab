#include "necklace/moment_nc.hpp"

#include "necklace/derivation.hpp"
#include "necklace/errors.hpp"

namespace necklace {

PathAlgebraElement mu_nc(const NCForm& omega, DrCalculator& dr) {
    const QuiverPtr& q = omega.quiver() ? omega.quiver() : dr.quiver();
    if (!omega.is_zero() && omega.degree() != 2) throw Error("mu_nc needs a 2-form");

    NCForm dw = d(omega);
    if (!dw.is_zero() && !dr.dr_is_zero(dw)) throw NotClosed();

    DoubleDerivation delta = DoubleDerivation::distinguished(q);
    NCForm eta = omega.is_zero() ? NCForm(q, 1) : contract_reduced(delta, omega);

    // eta is a closed 1-form, i.e. supported on monomials e_{t(p)} dp; the
    // preimage under d is then read off slotwise.
    PathAlgebraElement lift(q);
    for (const auto& [m, c] : eta.terms()) {
        if (!m.slots[0].is_trivial())
            throw NoSolution("contraction of a closed form is not in the image of d");
        lift.add_term(m.slots[1], c);
    }
    if (!necklace_project(lift).is_zero())
        throw NoSolution("solution has a nonzero commutator-quotient class");
    return lift;
}

}  // namespace necklace
