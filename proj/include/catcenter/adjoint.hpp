#pragma once

#include "catcenter/center.hpp"
#include "catcenter/functor2.hpp"

namespace catcenter {

enum class Handedness { Left, Right };

/// u together with (eta, eps) exhibiting it as a left or right adjoint of f.
/// Left: eta: id_A => u.f, eps: f.u => id_B; right: eta: id_B => f.u,
/// eps: u.f => id_A.
struct Adjunction {
    const TwoCat* k = nullptr;
    Handedness hand = Handedness::Left;
    One f, u;
    Two unit, counit;
};

Report check_adjunction(const Adjunction& a);

/// All adjoints of f on the given side, in canonical enumeration order.
std::vector<Adjunction> find_adjoints(const TwoCat& k, const One& f, Handedness hand);

struct Autonomy {
    bool autonomous = true;
    One witness;  // a 1-cell lacking an adjoint, when !autonomous
    std::vector<Adjunction> left, right;  // canonical choice per 1-cell
};

Autonomy is_autonomous(const TwoCat& k);

/// Image of an adjunction under a pseudofunctor, unit and counit conjugated
/// by the structure cells.
Adjunction push_adjunction(const Functor2& F, const Adjunction& a);

/// Upgrades a weak left half-braiding to a strong one when the twisting
/// domain is autonomous and the twists are strong monoidal: the inverse is
/// the adjoint-based pasting through the component at the dual object.
/// Throws on non-strong twists; a failed two-sided-inverse verification
/// reports internal inconsistency (corrupted adjunction data).
HalfBraiding invert_half_braiding_via_adjoints(const HalfBraiding& h);

/// Dual of a strong-center object: half-braiding on the right adjoint of the
/// carrier, twists swapped.
HalfBraiding lift_dual_to_center(const HalfBraiding& h);

/// Dual lifting consistency: the dual passes the half-braiding check and the
/// adjunction unit/counit are morphisms in the relevant center categories.
Report check_dual_lift(const HalfBraiding& h);

}  // namespace catcenter
