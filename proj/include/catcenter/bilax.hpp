#pragma once

#include "catcenter/bimonad.hpp"

namespace catcenter {

/// A simultaneously lax and colax 2-functor carrying a Yang-Baxter operator
/// nu_{g,f}: F(g)F(f) => F(f)F(g) indexed by 1-endocells of the domain.
/// `d` names the codomain YBO when compatibility (nu = d on images) is
/// claimed; it stays null otherwise.
struct BilaxFunctor {
    std::shared_ptr<const Functor2> owned;  // keep-alive for composites
    const Functor2* F = nullptr;
    const TwoYbo* c = nullptr;  // domain YBO
    std::function<Two(const One&, const One&)> nu;
    const TwoYbo* d = nullptr;

    const TwoCat& src() const { return *F->src; }
    const TwoCat& dst() const { return *F->dst; }
};

/// lambda_{xy,z} of a bilax functor: F(xy)F(z) => F(xz)F(y).
Two bilax_lambda(const BilaxFunctor& f, const One& x, const One& y, const One& z);

/// Every equation family of the definition, reported separately: the
/// Yang-Baxter equation and naturality of nu, four lax and four colax
/// distributive laws with their (co)unit parts, the four bilaxity
/// compatibilities, plus the derived unity-counity, eps-e, lambda-x1 and
/// module-coalgebra/comodule-algebra consequences.
Report check_bilax_functor(const BilaxFunctor& f);

/// Verifies the declared compatibility nu = d pointwise on image pairs.
Report check_bilax_compatibility(const BilaxFunctor& f);

/// Composite of compatible bilax functors, nu_{g,f} := nu^G_{F(g),F(f)}.
BilaxFunctor compose_bilax(const BilaxFunctor& g, const BilaxFunctor& f);

BilaxFunctor bimonad_to_bilax(const Bimonad& b, const TableTwoCat& trivial,
                              const TwoYbo& triv_ybo, const TwoYbo* codomain_ybo = nullptr);
Bimonad bilax_to_bimonad(const BilaxFunctor& t);

/// Constant functor at a bimonad: every 0-cell to the carrier 0-cell, every
/// 1-cell to b, every 2-cell to the identity.
BilaxFunctor constant_bilax_functor(const TwoCat& domain, const TwoYbo& domain_ybo,
                                    const Bimonad& b, const TwoYbo* codomain_ybo);

/// Pushforward of a bimonad along a bilax functor, structures transported
/// through the (co)lax cells and the ybo through nu.
Bimonad push_bimonad(const BilaxFunctor& f, const Bimonad& b);

/// Lax transformation psi and colax transformation phi agreeing on 1-cell
/// components.
struct BilaxTransformation {
    Transformation2 psi;  // kind Lax
    Transformation2 phi;  // kind Colax
};

/// psi/phi validity, the strong Yetter-Drinfel'd relation through lambda,
/// and the derived plain Yetter-Drinfel'd condition (both displayed forms).
Report check_bilax_transformation(const BilaxTransformation& t, const BilaxFunctor& f,
                                  const BilaxFunctor& g);

BilaxTransformation identity_bilax_transformation(const BilaxFunctor& f);

BilaxTransformation vcompose_bilax_transformations(const BilaxTransformation& t2,
                                                   const BilaxTransformation& t1);

struct BilaxModification {
    std::vector<Two> comp;  // per domain 0-cell
};

Report check_bilax_modification(const BilaxModification& a, const BilaxTransformation& s,
                                const BilaxTransformation& t);

/// Classical Yetter-Drinfel'd module as a bilax endo-transformation on the
/// trivial-domain functor of b, components as displayed (j a verified
/// bialgebra isomorphism; identity by default).
BilaxTransformation yd_to_bilax(const Bimonad& b, const YdModule& v, const MatTwoCat& k,
                                const BilaxFunctor& tb, const FpMat* j = nullptr);

Report check_bialgebra_iso(const Bimonad& b0, const Bimonad& b1, const FpMat& j,
                           const MatTwoCat& k);

/// 1-cell of the bimonad 2-category: carrier with monad- and comonad-side
/// distributive laws.
struct BimndOneCell {
    One x;
    Two psi;  // m(b1).x => x.m(b0)
    Two phi;  // x.c(b0) => c(b1).x
};

Report check_bimnd_one_cell(const Bimonad& b0, const Bimonad& b1, const BimndOneCell& c);

/// b1-to-b0 intertwiner on both structures: a 2-cell of Bimnd.
Report check_bimnd_two_cell(const Bimonad& b0, const Bimonad& b1, const BimndOneCell& s,
                            const BimndOneCell& t, const Two& zeta);

/// Trivial-domain bilax transformation <-> Bimnd 1-cell (components at the
/// unique 0-cell, verbatim).
BimndOneCell bilax1_to_bimnd_cell(const BilaxTransformation& t);
BilaxTransformation bimnd_cell_to_bilax1(const BimndOneCell& c, const BilaxFunctor& t0,
                                         const BilaxFunctor& t1);

/// 0-cell of the mixed-distributive-law 2-category.
struct DistCell {
    Monad t;
    Comonad d;
    Two lambda;  // t.d => d.t
};

Report check_dist_cell(const DistCell& c);

DistCell bimonad_to_dist(const Bimonad& b);

/// Dist-side validity of an image 1-cell: both distributive laws plus the
/// psi-lambda-phi compatibility.
Report check_dist_one_cell(const DistCell& c0, const DistCell& c1, const BimndOneCell& m);

}  // namespace catcenter
