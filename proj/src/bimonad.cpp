#include "catcenter/bimonad.hpp"

#include <cstdlib>
#include <stdexcept>

namespace catcenter {

Report check_monad(const Monad& m) {
    Report r("monad");
    const TwoCat& k = *m.k;
    r.begin("well-formed");
    One bb = k.hcomp1(m.t, m.t);
    r.require(m.t.src == m.t.dst, "carrier not an endocell");
    r.require(m.mu.from == bb && m.mu.to == m.t, "multiplication endpoints");
    r.require(m.eta.from == k.unit_one(m.t.src) && m.eta.to == m.t, "unit endpoints");
    if (!r.ok()) return r;

    r.begin("associativity");
    Two i = k.id2(m.t);
    r.require(k.vcomp(m.mu, hrow(k, {m.mu, i})) == k.vcomp(m.mu, hrow(k, {i, m.mu})), "mu");

    r.begin("unitality");
    r.require(k.vcomp(m.mu, hrow(k, {m.eta, i})) == i &&
                  k.vcomp(m.mu, hrow(k, {i, m.eta})) == i,
              "eta");
    return r;
}

Report check_comonad(const Comonad& c) {
    Report r("comonad");
    const TwoCat& k = *c.k;
    r.begin("well-formed");
    One dd = k.hcomp1(c.d, c.d);
    r.require(c.d.src == c.d.dst, "carrier not an endocell");
    r.require(c.delta.from == c.d && c.delta.to == dd, "comultiplication endpoints");
    r.require(c.eps.from == c.d && c.eps.to == k.unit_one(c.d.src), "counit endpoints");
    if (!r.ok()) return r;

    r.begin("coassociativity");
    Two i = k.id2(c.d);
    r.require(k.vcomp(hrow(k, {c.delta, i}), c.delta) == k.vcomp(hrow(k, {i, c.delta}), c.delta),
              "delta");

    r.begin("counitality");
    r.require(k.vcomp(hrow(k, {c.eps, i}), c.delta) == i &&
                  k.vcomp(hrow(k, {i, c.eps}), c.delta) == i,
              "eps");
    return r;
}

Report check_bimonad(const Bimonad& b) {
    Report r("bimonad");
    r.merge(check_monad(b.monad()));
    r.merge(check_comonad(b.comonad()));
    if (!r.ok()) return r;
    const TwoCat& k = *b.k;
    const Two i = k.id2(b.b);
    const Two& c = b.ybo;
    const Two &mu = b.mu, &eta = b.eta, &dl = b.delta, &ep = b.eps;

    r.begin("ybo-cell");
    One bb = k.hcomp1(b.b, b.b);
    r.require(c.from == bb && c.to == bb, "c_{b,b} endpoints");
    if (!r.ok()) return r;
    r.require(vseq(k, {hrow(k, {c, i}), hrow(k, {i, c}), hrow(k, {c, i})}) ==
                  vseq(k, {hrow(k, {i, c}), hrow(k, {c, i}), hrow(k, {i, c})}),
              "yang-baxter at (b,b,b)");

    r.begin("dl-left-monad");
    r.require(vseq(k, {hrow(k, {mu, i}), c}) ==
                  vseq(k, {hrow(k, {i, c}), hrow(k, {c, i}), hrow(k, {i, mu})}),
              "multiplication");
    r.require(vseq(k, {hrow(k, {eta, i}), c}) == hrow(k, {i, eta}), "unit");

    r.begin("dl-right-monad");
    r.require(vseq(k, {hrow(k, {i, mu}), c}) ==
                  vseq(k, {hrow(k, {c, i}), hrow(k, {i, c}), hrow(k, {mu, i})}),
              "multiplication");
    r.require(vseq(k, {hrow(k, {i, eta}), c}) == hrow(k, {eta, i}), "unit");

    r.begin("dl-left-comonad");
    r.require(vseq(k, {c, hrow(k, {dl, i})}) ==
                  vseq(k, {hrow(k, {i, dl}), hrow(k, {c, i}), hrow(k, {i, c})}),
              "comultiplication");
    r.require(vseq(k, {c, hrow(k, {ep, i})}) == hrow(k, {i, ep}), "counit");

    r.begin("dl-right-comonad");
    r.require(vseq(k, {c, hrow(k, {i, dl})}) ==
                  vseq(k, {hrow(k, {dl, i}), hrow(k, {i, c}), hrow(k, {c, i})}),
              "comultiplication");
    r.require(vseq(k, {c, hrow(k, {i, ep})}) == hrow(k, {ep, i}), "counit");

    r.begin("compat-mult-comult");
    r.require(vseq(k, {hrow(k, {dl, dl}), hrow(k, {i, c, i}), hrow(k, {mu, mu})}) ==
                  vseq(k, {mu, dl}),
              "delta.mu");

    r.begin("compat-counit-mult");
    r.require(vseq(k, {mu, ep}) == hrow(k, {ep, ep}), "eps.mu");

    r.begin("compat-comult-unit");
    r.require(vseq(k, {eta, dl}) == hrow(k, {eta, eta}), "delta.eta");

    r.begin("compat-counit-unit");
    r.require(vseq(k, {eta, ep}) == k.id2(k.unit_one(b.b.src)), "eps.eta");
    return r;
}

Report check_module(const ModuleStructure& m) {
    Report r("module");
    const TwoCat& k = *m.t.k;
    const bool right = m.side == ActSide::Right;
    r.begin("well-formed");
    One xt = right ? k.hcomp1(m.x, m.t.t) : k.hcomp1(m.t.t, m.x);
    r.require(m.action.from == xt && m.action.to == m.x, "action endpoints");
    if (!r.ok()) return r;

    Two ix = k.id2(m.x), it = k.id2(m.t.t);
    r.begin("associativity");
    Two lhs = right ? k.vcomp(m.action, hrow(k, {m.action, it}))
                    : k.vcomp(m.action, hrow(k, {it, m.action}));
    Two rhs = right ? k.vcomp(m.action, hrow(k, {ix, m.t.mu}))
                    : k.vcomp(m.action, hrow(k, {m.t.mu, ix}));
    r.require(lhs == rhs, "action vs mu");

    r.begin("unitality");
    Two u = right ? k.vcomp(m.action, hrow(k, {ix, m.t.eta}))
                  : k.vcomp(m.action, hrow(k, {m.t.eta, ix}));
    r.require(u == ix, "action vs eta");
    return r;
}

Report check_comodule(const ComoduleStructure& c) {
    Report r("comodule");
    const TwoCat& k = *c.d.k;
    const bool right = c.side == ActSide::Right;
    r.begin("well-formed");
    One xd = right ? k.hcomp1(c.x, c.d.d) : k.hcomp1(c.d.d, c.x);
    r.require(c.coaction.from == c.x && c.coaction.to == xd, "coaction endpoints");
    if (!r.ok()) return r;

    Two ix = k.id2(c.x), id = k.id2(c.d.d);
    r.begin("coassociativity");
    Two lhs = right ? k.vcomp(hrow(k, {c.coaction, id}), c.coaction)
                    : k.vcomp(hrow(k, {id, c.coaction}), c.coaction);
    Two rhs = right ? k.vcomp(hrow(k, {ix, c.d.delta}), c.coaction)
                    : k.vcomp(hrow(k, {c.d.delta, ix}), c.coaction);
    r.require(lhs == rhs, "coaction vs delta");

    r.begin("counitality");
    Two u = right ? k.vcomp(hrow(k, {ix, c.d.eps}), c.coaction)
                  : k.vcomp(hrow(k, {c.d.eps, ix}), c.coaction);
    r.require(u == ix, "coaction vs eps");
    return r;
}

Monad push_monad(const Functor2& f, const Monad& m) {
    if (!f.lax) throw std::invalid_argument("push_monad: lax structure required");
    const TwoCat& d = *f.dst;
    Monad r;
    r.k = &d;
    r.t = f.one(m.t);
    r.mu = d.vcomp(f.two(m.mu), f.lax2(m.t, m.t));
    r.eta = d.vcomp(f.two(m.eta), f.lax0(m.t.src));
    return r;
}

Comonad push_comonad(const Functor2& f, const Comonad& c) {
    if (!f.colax) throw std::invalid_argument("push_comonad: colax structure required");
    const TwoCat& d = *f.dst;
    Comonad r;
    r.k = &d;
    r.d = f.one(c.d);
    r.delta = d.vcomp(f.colax2(c.d, c.d), f.two(c.delta));
    r.eps = d.vcomp(f.colax0(c.d.src), f.two(c.eps));
    return r;
}

ModuleStructure induced_module(const Functor2& f, const ModuleStructure& m) {
    if (!f.lax) throw std::invalid_argument("induced_module: lax structure required");
    const TwoCat& d = *f.dst;
    ModuleStructure r;
    r.t = push_monad(f, m.t);
    r.x = f.one(m.x);
    r.side = m.side;
    r.action = m.side == ActSide::Right ? d.vcomp(f.two(m.action), f.lax2(m.x, m.t.t))
                                        : d.vcomp(f.two(m.action), f.lax2(m.t.t, m.x));
    return r;
}

ComoduleStructure induced_comodule(const Functor2& f, const ComoduleStructure& c) {
    if (!f.colax) throw std::invalid_argument("induced_comodule: colax structure required");
    const TwoCat& d = *f.dst;
    ComoduleStructure r;
    r.d = push_comonad(f, c.d);
    r.x = f.one(c.x);
    r.side = c.side;
    r.coaction = c.side == ActSide::Right ? d.vcomp(f.colax2(c.x, c.d.d), f.two(c.coaction))
                                          : d.vcomp(f.colax2(c.d.d, c.x), f.two(c.coaction));
    return r;
}

ComoduleStructure transformation_comodule(const Transformation2& phi, const Bimonad& b) {
    if (phi.kind != Transformation2::Colax)
        throw std::invalid_argument("transformation_comodule: colax transformation expected");
    const Functor2& F = *phi.F;
    const Functor2& G = *phi.G;
    const TwoCat& d = *F.dst;
    const TwoCat& s = *F.src;
    const int a = b.b.src;
    // hypothesis of the construction: the last two bimonad compatibilities
    Report pre("pre");
    {
        const TwoCat& kk = *b.k;
        pre.begin("hypothesis");
        pre.require(vseq(kk, {b.eta, b.delta}) == hrow(kk, {b.eta, b.eta}), "delta.eta");
        pre.require(vseq(kk, {b.eta, b.eps}) == kk.id2(kk.unit_one(a)), "eps.eta");
    }
    if (!pre.ok())
        throw std::invalid_argument("transformation_comodule: bimonad hypothesis violated");

    const One& chi = phi.one[a];
    Two form1 = vseq(d, {hrow(d, {d.id2(chi), F.lax0(a)}), phi.at(s.unit_one(a)),
                         hrow(d, {G.two(b.eta), d.id2(chi)})});
    Two pushed_eta = d.vcomp(F.two(b.eta), F.lax0(a));
    Two form2 = d.vcomp(phi.at(b.b), hrow(d, {d.id2(chi), pushed_eta}));
    if (!(form1 == form2))
        throw std::logic_error("transformation_comodule: displayed forms disagree");

    ComoduleStructure r;
    r.d = push_comonad(G, b.comonad());
    r.x = chi;
    r.side = ActSide::Left;
    r.coaction = form1;
    return r;
}

ModuleStructure transformation_module(const Transformation2& psi, const Bimonad& b) {
    if (psi.kind != Transformation2::Lax)
        throw std::invalid_argument("transformation_module: lax transformation expected");
    const Functor2& F = *psi.F;
    const Functor2& G = *psi.G;
    const TwoCat& d = *F.dst;
    const TwoCat& s = *F.src;
    const int a = b.b.src;
    {
        const TwoCat& kk = *b.k;
        bool hyp = vseq(kk, {b.eta, b.delta}) == hrow(kk, {b.eta, b.eta}) &&
                   vseq(kk, {b.eta, b.eps}) == kk.id2(kk.unit_one(a));
        if (!hyp) throw std::invalid_argument("transformation_module: bimonad hypothesis violated");
    }

    const One& chi = psi.one[a];
    Two form1 = vseq(d, {hrow(d, {G.two(b.eta), d.id2(chi)}), psi.at(s.unit_one(a)),
                         hrow(d, {d.id2(chi), F.colax0(a)})});
    // naturality-reduced form
    Two pushed_eps = d.vcomp(F.colax0(a), F.two(b.eps));
    Two form2 = d.vcomp(hrow(d, {d.id2(chi), pushed_eps}), psi.at(b.b));
    if (!(form1 == form2))
        throw std::logic_error("transformation_module: displayed forms disagree");

    ModuleStructure r;
    r.t = push_monad(G, b.monad());
    r.x = chi;
    r.side = ActSide::Left;
    r.action = form1;
    return r;
}

Report check_module_comonad(const Comonad& d, const Two& action, const Bimonad& b,
                            const TwoYbo& c) {
    Report r("module-comonad");
    const TwoCat& k = *d.k;
    r.merge(check_comonad(d));
    r.merge(check_module(ModuleStructure{b.monad(), d.d, action, ActSide::Right}));
    if (!r.ok()) return r;
    Two id = k.id2(d.d), ib = k.id2(b.b);

    r.begin("comultiplication-linear");
    Two lhs = vseq(k, {hrow(k, {d.delta, b.delta}), hrow(k, {id, c.at(d.d, b.b), ib}),
                       hrow(k, {action, action})});
    Two rhs = vseq(k, {action, d.delta});
    r.require(lhs == rhs, "(d,b)");

    r.begin("counit-linear");
    r.require(vseq(k, {action, d.eps}) == hrow(k, {d.eps, b.eps}), "(d,b)");
    return r;
}

Report check_comodule_monad(const Monad& t, const Two& coaction, const Bimonad& b,
                            const TwoYbo& c) {
    Report r("comodule-monad");
    const TwoCat& k = *t.k;
    r.merge(check_monad(t));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), t.t, coaction, ActSide::Right}));
    if (!r.ok()) return r;
    Two it = k.id2(t.t), ib = k.id2(b.b);

    r.begin("multiplication-colinear");
    Two lhs = vseq(k, {hrow(k, {coaction, coaction}), hrow(k, {it, c.at(b.b, t.t), ib}),
                       hrow(k, {t.mu, b.mu})});
    Two rhs = vseq(k, {t.mu, coaction});
    r.require(lhs == rhs, "(t,b)");

    r.begin("unit-colinear");
    r.require(vseq(k, {t.eta, coaction}) == hrow(k, {t.eta, b.eta}), "(t,b)");
    return r;
}

Report check_relative_module(const One& x, const Two& action, const Two& coaction,
                             const Monad& t, const Two& t_coaction, const Bimonad& b,
                             const TwoYbo& c) {
    Report r("relative-module");
    const TwoCat& k = *t.k;
    r.merge(check_module(ModuleStructure{t, x, action, ActSide::Right}));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), x, coaction, ActSide::Right}));
    if (!r.ok()) return r;

    r.begin("relative-compatibility");
    Two ix = k.id2(x), ib = k.id2(b.b);
    Two lhs = vseq(k, {hrow(k, {coaction, t_coaction}), hrow(k, {ix, c.at(b.b, t.t), ib}),
                       hrow(k, {action, b.mu})});
    Two rhs = vseq(k, {action, coaction});
    r.require(lhs == rhs, "(x,t)");
    return r;
}

Report check_left_relative_module(const One& x, const Two& action, const Two& coaction,
                                  const Monad& t, const Two& t_coaction, const Bimonad& b,
                                  const TwoYbo& c) {
    Report r("left-relative-module");
    const TwoCat& k = *t.k;
    r.merge(check_module(ModuleStructure{t, x, action, ActSide::Left}));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), x, coaction, ActSide::Left}));
    if (!r.ok()) return r;

    r.begin("relative-compatibility");
    Two ix = k.id2(x), ib = k.id2(b.b);
    Two lhs = vseq(k, {hrow(k, {t_coaction, coaction}), hrow(k, {ib, c.at(t.t, b.b), ix}),
                       hrow(k, {b.mu, action})});
    Two rhs = vseq(k, {action, coaction});
    r.require(lhs == rhs, "(t,x)");
    return r;
}

Report check_hopf_bimodule(const HopfBimodule& h, const Bimonad& b, const TwoYbo& c) {
    Report r("hopf-bimodule");
    const TwoCat& k = *b.k;
    r.merge(check_module(ModuleStructure{b.monad(), h.x, h.left_action, ActSide::Left}));
    r.merge(check_module(ModuleStructure{b.monad(), h.x, h.right_action, ActSide::Right}));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), h.x, h.left_coaction, ActSide::Left}));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), h.x, h.right_coaction, ActSide::Right}));
    if (!r.ok()) return r;
    Two ix = k.id2(h.x), ib = k.id2(b.b);

    r.begin("bimodule");
    r.require(k.vcomp(h.right_action, hrow(k, {h.left_action, ib})) ==
                  k.vcomp(h.left_action, hrow(k, {ib, h.right_action})),
              "actions commute");

    r.begin("bicomodule");
    r.require(k.vcomp(hrow(k, {ix, h.right_coaction}), h.left_coaction) ==
                  k.vcomp(hrow(k, {h.left_coaction, ib}), h.right_coaction),
              "coactions commute");

    r.begin("right-coaction-right-linear");
    Two lhs = vseq(k, {hrow(k, {h.right_coaction, b.delta}), hrow(k, {ix, c.at(b.b, b.b), ib}),
                       hrow(k, {h.right_action, b.mu})});
    r.require(lhs == vseq(k, {h.right_action, h.right_coaction}), "(x,b)");

    r.begin("left-coaction-left-linear");
    lhs = vseq(k, {hrow(k, {b.delta, h.left_coaction}), hrow(k, {ib, c.at(b.b, b.b), ix}),
                   hrow(k, {b.mu, h.left_action})});
    r.require(lhs == vseq(k, {h.left_action, h.left_coaction}), "(b,x)");

    r.begin("left-coaction-right-linear");
    lhs = vseq(k, {hrow(k, {h.left_coaction, b.delta}), hrow(k, {ib, c.at(h.x, b.b), ib}),
                   hrow(k, {b.mu, h.right_action})});
    r.require(lhs == vseq(k, {h.right_action, h.left_coaction}), "(x,b)");

    r.begin("right-coaction-left-linear");
    lhs = vseq(k, {hrow(k, {b.delta, h.right_coaction}), hrow(k, {ib, c.at(b.b, h.x), ib}),
                   hrow(k, {h.left_action, b.mu})});
    r.require(lhs == vseq(k, {h.left_action, h.right_coaction}), "(b,x)");
    return r;
}

Two make_lambda(const Bimonad& b) {
    const TwoCat& k = *b.k;
    Two i = k.id2(b.b);
    return vseq(k, {hrow(k, {b.delta, i}), hrow(k, {i, b.ybo}), hrow(k, {b.mu, i})});
}

Report check_lambda(const Bimonad& b, const Two& lambda) {
    Report r("lambda");
    const TwoCat& k = *b.k;
    Two i = k.id2(b.b);

    r.begin("lambda-monad-dl");
    r.require(vseq(k, {hrow(k, {b.mu, i}), lambda}) ==
                  vseq(k, {hrow(k, {i, lambda}), hrow(k, {lambda, i}), hrow(k, {i, b.mu})}),
              "multiplication");
    r.require(vseq(k, {hrow(k, {b.eta, i}), lambda}) == hrow(k, {i, b.eta}), "unit");

    r.begin("lambda-comonad-dl");
    r.require(vseq(k, {hrow(k, {i, b.delta}), hrow(k, {lambda, i}), hrow(k, {i, lambda})}) ==
                  vseq(k, {lambda, hrow(k, {b.delta, i})}),
              "comultiplication");
    r.require(vseq(k, {lambda, hrow(k, {b.eps, i})}) == hrow(k, {i, b.eps}), "counit");

    r.begin("lambda-bilaxity-restatement");
    Two lhs = vseq(k, {hrow(k, {i, b.delta}), hrow(k, {lambda, i}), hrow(k, {i, b.mu})});
    Two rhs = vseq(k, {hrow(k, {b.delta, b.delta}), hrow(k, {i, b.ybo, i}),
                       hrow(k, {b.mu, b.mu})});
    r.require(lhs == rhs, "(b,b)");
    return r;
}

Report check_yd_module(const Bimonad& b, const YdModule& v, const MatTwoCat& k) {
    Report r("yd-module");
    One vx = k.dim(v.dim);
    Two act = Two{k.hcomp1(b.b, vx), vx, 0, v.action};
    Two coact = Two{vx, k.hcomp1(b.b, vx), 0, v.coaction};
    r.merge(check_module(ModuleStructure{b.monad(), vx, act, ActSide::Left}));
    r.merge(check_comodule(ComoduleStructure{b.comonad(), vx, coact, ActSide::Left}));
    if (!r.ok()) return r;

    auto br = [&](const One& x, const One& y) {
        return Two{k.hcomp1(x, y), k.hcomp1(y, x), 0,
                   FpMat::kron_swap(static_cast<int>(x.v), static_cast<int>(y.v), k.p)};
    };
    Two ib = k.id2(b.b), iv = k.id2(vx);

    r.begin("yd-compatibility");
    Two lhs = vseq(k, {hrow(k, {b.delta, iv}), hrow(k, {ib, br(b.b, vx)}),
                       hrow(k, {act, ib}), hrow(k, {coact, ib}), hrow(k, {ib, br(vx, b.b)}),
                       hrow(k, {b.mu, iv})});
    Two rhs = vseq(k, {hrow(k, {b.delta, coact}), hrow(k, {ib, br(b.b, b.b), iv}),
                       hrow(k, {b.mu, act})});
    r.require(lhs == rhs, "dim " + std::to_string(v.dim));
    return r;
}

std::vector<YdModule> enumerate_yd_modules(const Bimonad& b, const MatTwoCat& k, int dim_bound) {
    const int nb = static_cast<int>(b.b.v);
    long long cap = 1LL << 24;
    if (const char* env = std::getenv("CATCENTER_MAX_CANDIDATES")) cap = std::atoll(env);
    std::vector<YdModule> out;
    for (int n = 1; n <= dim_bound; ++n) {
        double space = 1;
        for (int i = 0; i < 2 * n * nb * n; ++i) {
            space *= k.p;
            if (space > static_cast<double>(cap))
                throw std::invalid_argument(
                    "enumerate_yd_modules: candidate space exceeds the cap; raise "
                    "CATCENTER_MAX_CANDIDATES to override");
        }
        FpMat act(n, nb * n, k.p);
        do {
            FpMat coact(nb * n, n, k.p);
            do {
                YdModule v{n, act, coact};
                if (check_yd_module(b, v, k).ok()) out.push_back(v);
            } while (next_matrix(coact));
        } while (next_matrix(act));
    }
    return out;
}

}  // namespace catcenter
