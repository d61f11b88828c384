#pragma once

#include <optional>

#include "catcenter/functor2.hpp"

namespace catcenter {

struct Monad {
    const TwoCat* k = nullptr;
    One t;
    Two mu, eta;
};

struct Comonad {
    const TwoCat* k = nullptr;
    One d;
    Two delta, eps;
};

/// Monad + comonad on one carrier whose structures interact through the
/// Yang-Baxter 2-cell at (b, b).
struct Bimonad {
    const TwoCat* k = nullptr;
    One b;
    Two mu, eta, delta, eps;
    Two ybo;  // c_{b,b}: bb => bb

    Monad monad() const { return Monad{k, b, mu, eta}; }
    Comonad comonad() const { return Comonad{k, b, delta, eps}; }
};

Report check_monad(const Monad& m);
Report check_comonad(const Comonad& c);

/// Full bimonad report: underlying monad and comonad, the Yang-Baxter
/// equation of the interacting 2-cell, four distributive laws (left/right,
/// monad/comonad, each with its (co)unit part) and the four compatibilities.
Report check_bimonad(const Bimonad& b);

enum class ActSide { Left, Right };

struct ModuleStructure {
    Monad t;
    One x;
    Two action;  // left: t.x => x, right: x.t => x
    ActSide side = ActSide::Right;
};

struct ComoduleStructure {
    Comonad d;
    One x;
    Two coaction;  // left: x => d.x, right: x => x.d
    ActSide side = ActSide::Right;
};

Report check_module(const ModuleStructure& m);
Report check_comodule(const ComoduleStructure& c);

Monad push_monad(const Functor2& f, const Monad& m);
Comonad push_comonad(const Functor2& f, const Comonad& c);

ModuleStructure induced_module(const Functor2& f, const ModuleStructure& m);
ComoduleStructure induced_comodule(const Functor2& f, const ComoduleStructure& c);

/// Comodule structure on the 1-cell component of a colax transformation over
/// the pushed comonad G(b); both displayed forms of the coaction are
/// evaluated and must agree (internal consistency of the transcription).
ComoduleStructure transformation_comodule(const Transformation2& phi, const Bimonad& b);
ModuleStructure transformation_module(const Transformation2& psi, const Bimonad& b);

Report check_module_comonad(const Comonad& d, const Two& action, const Bimonad& b,
                            const TwoYbo& c);
Report check_comodule_monad(const Monad& t, const Two& coaction, const Bimonad& b,
                            const TwoYbo& c);

/// x a right t-module (action) and right b-comodule (coaction); t a right
/// b-comodule monad via t_coaction.
Report check_relative_module(const One& x, const Two& action, const Two& coaction,
                             const Monad& t, const Two& t_coaction, const Bimonad& b,
                             const TwoYbo& c);

/// Left-handed mirror: x a left t-module and left b-comodule, t a left
/// b-comodule monad.
Report check_left_relative_module(const One& x, const Two& action, const Two& coaction,
                                  const Monad& t, const Two& t_coaction, const Bimonad& b,
                                  const TwoYbo& c);

struct HopfBimodule {
    One x;
    Two left_action, right_action;   // bx => x, xb => x
    Two left_coaction, right_coaction;  // x => bx, x => xb
};

Report check_hopf_bimodule(const HopfBimodule& h, const Bimonad& b, const TwoYbo& c);

/// lambda(nu) = (mu o 1)(1 o nu)(delta o 1): the mixed distributive law of a
/// bimonad-style pair.
Two make_lambda(const Bimonad& b);

/// The four distributive laws of lambda plus the restatement of the first
/// bilaxity compatibility through lambda.
Report check_lambda(const Bimonad& b, const Two& lambda);

/// Classical Yetter-Drinfel'd module data over a bimonad in the matrix
/// backend with the swap Yang-Baxter operator.
struct YdModule {
    int dim = 0;
    FpMat action;    // B (x) V -> V
    FpMat coaction;  // V -> B (x) V
};

Report check_yd_module(const Bimonad& b, const YdModule& v, const MatTwoCat& k);

/// Exhaustive enumeration of YD structures on carriers of dimension
/// 1..dim_bound. Candidate spaces above the cap are rejected; the
/// CATCENTER_MAX_CANDIDATES environment variable overrides the default cap.
std::vector<YdModule> enumerate_yd_modules(const Bimonad& b, const MatTwoCat& k, int dim_bound);

}  // namespace catcenter
