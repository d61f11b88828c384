#pragma once

#include <memory>

#include "catcenter/bimodule.hpp"
#include "catcenter/functor2.hpp"

namespace catcenter {

enum class Side { Left, Right };
enum class Strength { Weak, Strong };

/// Half-braiding on an object M of a bimodule category, relative to twist
/// functors F (into the right-acting side) and G (into the left-acting side).
/// Left components run M <| F(X) -> G(X) |> M, right components the reverse.
struct HalfBraiding {
    Side side = Side::Left;
    Strength strength = Strength::Weak;
    const BimoduleCat* bim = nullptr;
    const LaxMonFunctor* F = nullptr;
    const LaxMonFunctor* G = nullptr;
    int M = -1;
    std::vector<int> sigma;      // per object X of the twisting domain
    std::vector<int> sigma_inv;  // inverse components, strong only

    bool operator==(const HalfBraiding& o) const {
        return side == o.side && M == o.M && sigma == o.sigma;
    }
};

Report check_half_braiding(const HalfBraiding& h);

/// (unit object, identity components) relative to (F, F); needs a regular
/// bimodule so the unit is a carrier object.
HalfBraiding unit_center_object(const BimoduleCat& b, const LaxMonFunctor& f, Side side);

/// The twisted center as a finite category: objects are half-braidings, the
/// hom-sets are the carrier morphisms intertwining the braidings.
struct CenterCategory {
    std::vector<HalfBraiding> objects;
    FinCategory cat;
    std::vector<int> mor_carrier;  // underlying carrier morphism per morphism of cat
};

bool is_center_morphism(const HalfBraiding& from, const HalfBraiding& to, int carrier_mor);

/// Exhaustive enumeration over a table substrate: every carrier object paired
/// with every component family passing check_half_braiding; search prunes on
/// the unit constraint and naturality as soon as components are pinned.
CenterCategory enumerate_center(const BimoduleCat& b, const LaxMonFunctor& f,
                                const LaxMonFunctor& g, Side side, Strength strength);

/// Lemma-style inversion: strong left half-braidings and strong right ones
/// exchange by taking component-wise inverses; involutive.
HalfBraiding xi_invert(const HalfBraiding& h);

/// Composition of center objects over composable twists inside a regular
/// bimodule: carrier N (x) M, braiding (id_N o sigma) then (tau o id_M).
HalfBraiding compose_center_objects(const HalfBraiding& n, const HalfBraiding& m);

enum class DeloopShape { OneObject, TwoObject };

/// A half-braiding presented as a (co)lax natural transformation between
/// deloopings of its twist functors, with the supporting 2-categorical data.
struct CenterTransformation {
    std::shared_ptr<TableTwoCat> domain;  // Del(E)
    std::shared_ptr<TableTwoCat> codomain;
    std::shared_ptr<TableFunctor2> F2, G2;
    Transformation2 t;
};

/// Left half-braidings become colax transformations, right ones lax
/// transformations; strong ones carry pseudonatural inverses. Component
/// 2-cells translate verbatim.
CenterTransformation center_to_colax(const HalfBraiding& h, DeloopShape shape);

HalfBraiding colax_to_center(const Transformation2& t, const BimoduleCat& b,
                             const LaxMonFunctor& f, const LaxMonFunctor& g, Side side,
                             Strength strength);

}  // namespace catcenter
