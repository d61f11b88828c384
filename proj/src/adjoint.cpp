#include "catcenter/adjoint.hpp"

#include <stdexcept>

namespace catcenter {

Report check_adjunction(const Adjunction& a) {
    Report r("adjunction");
    const TwoCat& k = *a.k;
    const One &f = a.f, &u = a.u;

    r.begin("well-formed");
    r.require(u.src == f.dst && u.dst == f.src, "adjoint candidate between wrong 0-cells");
    if (!r.ok()) return r;
    if (a.hand == Handedness::Left) {
        r.require(a.unit.from == k.unit_one(f.src) && a.unit.to == k.hcomp1(u, f),
                  "unit endpoints");
        r.require(a.counit.from == k.hcomp1(f, u) && a.counit.to == k.unit_one(f.dst),
                  "counit endpoints");
    } else {
        r.require(a.unit.from == k.unit_one(f.dst) && a.unit.to == k.hcomp1(f, u),
                  "unit endpoints");
        r.require(a.counit.from == k.hcomp1(u, f) && a.counit.to == k.unit_one(f.src),
                  "counit endpoints");
    }
    if (!r.ok()) return r;

    r.begin("snake-identities");
    if (a.hand == Handedness::Left) {
        Two s1 = vseq(k, {hrow(k, {k.id2(f), a.unit}), hrow(k, {a.counit, k.id2(f)})});
        Two s2 = vseq(k, {hrow(k, {a.unit, k.id2(u)}), hrow(k, {k.id2(u), a.counit})});
        r.require(s1 == k.id2(f), "first snake");
        r.require(s2 == k.id2(u), "second snake");
    } else {
        Two s1 = vseq(k, {hrow(k, {a.unit, k.id2(f)}), hrow(k, {k.id2(f), a.counit})});
        Two s2 = vseq(k, {hrow(k, {k.id2(u), a.unit}), hrow(k, {a.counit, k.id2(u)})});
        r.require(s1 == k.id2(f), "first snake");
        r.require(s2 == k.id2(u), "second snake");
    }
    return r;
}

std::vector<Adjunction> find_adjoints(const TwoCat& k, const One& f, Handedness hand) {
    std::vector<Adjunction> out;
    for (const One& u : k.one_cells(f.dst, f.src)) {
        One unit_from = hand == Handedness::Left ? k.unit_one(f.src) : k.unit_one(f.dst);
        One unit_to = hand == Handedness::Left ? k.hcomp1(u, f) : k.hcomp1(f, u);
        One counit_from = hand == Handedness::Left ? k.hcomp1(f, u) : k.hcomp1(u, f);
        One counit_to = hand == Handedness::Left ? k.unit_one(f.dst) : k.unit_one(f.src);
        for (const Two& eta : k.two_cells(unit_from, unit_to)) {
            for (const Two& eps : k.two_cells(counit_from, counit_to)) {
                // first snake prunes before the second is evaluated
                Two s1 = hand == Handedness::Left
                             ? vseq(k, {hrow(k, {k.id2(f), eta}), hrow(k, {eps, k.id2(f)})})
                             : vseq(k, {hrow(k, {eta, k.id2(f)}), hrow(k, {k.id2(f), eps})});
                if (!(s1 == k.id2(f))) continue;
                Two s2 = hand == Handedness::Left
                             ? vseq(k, {hrow(k, {eta, k.id2(u)}), hrow(k, {k.id2(u), eps})})
                             : vseq(k, {hrow(k, {k.id2(u), eta}), hrow(k, {eps, k.id2(u)})});
                if (!(s2 == k.id2(u))) continue;
                out.push_back(Adjunction{&k, hand, f, u, eta, eps});
            }
        }
    }
    return out;
}

Autonomy is_autonomous(const TwoCat& k) {
    Autonomy res;
    for (int a = 0; a < k.zero_cells(); ++a)
        for (int b = 0; b < k.zero_cells(); ++b)
            for (const One& f : k.one_cells(a, b)) {
                auto ls = find_adjoints(k, f, Handedness::Left);
                auto rs = find_adjoints(k, f, Handedness::Right);
                if (ls.empty() || rs.empty()) {
                    res.autonomous = false;
                    res.witness = f;
                    return res;
                }
                res.left.push_back(ls.front());
                res.right.push_back(rs.front());
            }
    return res;
}

Adjunction push_adjunction(const Functor2& F, const Adjunction& a) {
    if (!F.pseudo) throw std::invalid_argument("push_adjunction: needs a pseudofunctor");
    const TwoCat& d = *F.dst;
    Adjunction r;
    r.k = &d;
    r.hand = a.hand;
    r.f = F.one(a.f);
    r.u = F.one(a.u);
    if (a.hand == Handedness::Left) {
        r.unit = vseq(d, {F.lax0(a.f.src), F.two(a.unit), F.colax2(a.u, a.f)});
        r.counit = vseq(d, {F.lax2(a.f, a.u), F.two(a.counit), F.colax0(a.f.dst)});
    } else {
        r.unit = vseq(d, {F.lax0(a.f.dst), F.two(a.unit), F.colax2(a.f, a.u)});
        r.counit = vseq(d, {F.lax2(a.u, a.f), F.two(a.counit), F.colax0(a.f.src)});
    }
    return r;
}

namespace {

// left adjoint data of an object X inside a monoidal category, searched in
// its delooping
struct MonDual {
    int xstar;
    int eta;  // I -> X* (x) X
    int eps;  // X (x) X* -> I
};

MonDual mon_left_adjoint(const MonCat& e, int x) {
    TableTwoCat del = deloop_moncat(e);
    auto adj = find_adjoints(del, One{0, 0, x}, Handedness::Left);
    if (adj.empty())
        throw std::invalid_argument("twisting domain not autonomous at object " +
                                    e.base.object_name(x));
    return MonDual{static_cast<int>(adj.front().u.v), static_cast<int>(adj.front().unit.v),
                   static_cast<int>(adj.front().counit.v)};
}

}  // namespace

HalfBraiding invert_half_braiding_via_adjoints(const HalfBraiding& h) {
    if (h.side != Side::Left)
        throw std::invalid_argument("invert_half_braiding_via_adjoints: left input expected");
    if (!h.F->strong || !h.G->strong)
        throw std::invalid_argument(
            "invert_half_braiding_via_adjoints: hypothesis requires pseudo (strong monoidal) "
            "twists");
    const BimoduleCat& b = *h.bim;
    const MonCat& E = *h.F->src;
    const LaxMonFunctor &F = *h.F, &G = *h.G;
    const FinCategory& M = b.carrier;
    const FinCategory& Dc = b.right->base;
    const FinCategory& Cc = b.left->base;

    HalfBraiding out = h;
    out.strength = Strength::Strong;
    out.sigma_inv.clear();
    for (int x = 0; x < E.base.num_objects(); ++x) {
        MonDual dual = mon_left_adjoint(E, x);
        // coev in D: I -> F(X*) (x) F(X)
        int coev = Dc.compose(F.colax2[dual.xstar][x], Dc.compose(F.mor[dual.eta], F.lax0));
        // ev in C: G(X) (x) G(X*) -> I
        int ev = Cc.compose(G.colax0, Cc.compose(G.mor[dual.eps], G.lax2[x][dual.xstar]));
        int gxm = b.lact_obj[G.obj[x]][h.M];
        int step1 = b.ract_mor[M.identity(gxm)][coev];
        int step2 = b.lact_mor[Cc.identity(G.obj[x])]
                              [b.ract_mor[h.sigma[dual.xstar]][Dc.identity(F.obj[x])]];
        int mfx = b.ract_obj[h.M][F.obj[x]];
        int step3 = b.lact_mor[ev][M.identity(mfx)];
        int gamma = M.compose(step3, M.compose(step2, step1));
        int s = h.sigma[x];
        if (M.compose(gamma, s) != M.identity(M.mor(s).src) ||
            M.compose(s, gamma) != M.identity(M.mor(s).dst))
            throw std::runtime_error(
                "invert_half_braiding_via_adjoints: pasting is not a two-sided inverse "
                "(inconsistent adjunction data)");
        out.sigma_inv.push_back(gamma);
    }
    return out;
}

HalfBraiding lift_dual_to_center(const HalfBraiding& h) {
    if (h.side != Side::Left || h.strength != Strength::Strong)
        throw std::invalid_argument("lift_dual_to_center: needs a strong left half-braiding");
    if (!h.bim->regular())
        throw std::invalid_argument("lift_dual_to_center: needs a regular bimodule");
    const MonCat& C = *h.bim->left;
    const FinCategory& B = C.base;
    TableTwoCat del = deloop_moncat(C);
    auto adj = find_adjoints(del, One{0, 0, h.M}, Handedness::Right);
    if (adj.empty())
        throw std::invalid_argument("lift_dual_to_center: carrier has no right adjoint");
    const int mstar = static_cast<int>(adj.front().u.v);
    const int coev = static_cast<int>(adj.front().unit.v);    // I -> M (x) *M
    const int ev = static_cast<int>(adj.front().counit.v);    // *M (x) M -> I

    HalfBraiding out;
    out.side = Side::Left;
    out.bim = h.bim;
    out.F = h.G;  // twists swap
    out.G = h.F;
    out.M = mstar;
    const int id_star = B.identity(mstar);
    for (std::size_t x = 0; x < h.sigma.size(); ++x) {
        int gx = h.G->obj[x];
        int fx = h.F->obj[x];
        int start = C.tob[mstar][gx];
        int step1 = C.tmor[B.identity(start)][coev];
        int step2 = C.tmor[id_star][C.tmor[h.sigma_inv[x]][id_star]];
        int tail = C.tob[fx][mstar];
        int step3 = C.tmor[ev][B.identity(tail)];
        out.sigma.push_back(B.compose(step3, B.compose(step2, step1)));
    }
    // strength by inverse search; autonomy makes these invertible
    bool all = true;
    std::vector<int> inv;
    for (int s : out.sigma) {
        const auto& mo = B.mor(s);
        int found = -1;
        for (int cand : B.hom(mo.dst, mo.src))
            if (B.compose(cand, s) == B.identity(mo.src) &&
                B.compose(s, cand) == B.identity(mo.dst)) {
                found = cand;
                break;
            }
        if (found < 0) {
            all = false;
            break;
        }
        inv.push_back(found);
    }
    if (all) {
        out.strength = Strength::Strong;
        out.sigma_inv = inv;
    }
    return out;
}

Report check_dual_lift(const HalfBraiding& h) {
    Report r("dual-lift");
    HalfBraiding dual = lift_dual_to_center(h);
    r.merge(check_half_braiding(dual));

    const MonCat& C = *h.bim->left;
    TableTwoCat del = deloop_moncat(C);
    auto adj = find_adjoints(del, One{0, 0, h.M}, Handedness::Right);
    const int coev = static_cast<int>(adj.front().unit.v);
    const int ev = static_cast<int>(adj.front().counit.v);

    r.begin("ev-is-center-morphism");
    HalfBraiding dual_then_h = compose_center_objects(dual, h);
    HalfBraiding unitF = unit_center_object(*h.bim, *h.F, Side::Left);
    r.require(is_center_morphism(dual_then_h, unitF, ev), "ev");

    r.begin("coev-is-center-morphism");
    HalfBraiding h_then_dual = compose_center_objects(h, dual);
    HalfBraiding unitG = unit_center_object(*h.bim, *h.G, Side::Left);
    r.require(is_center_morphism(unitG, h_then_dual, coev), "coev");
    return r;
}

}  // namespace catcenter
