#include "catcenter/center.hpp"

#include <stdexcept>

namespace catcenter {

namespace {

struct Ctx {
    const BimoduleCat& b;
    const LaxMonFunctor& F;
    const LaxMonFunctor& G;
    const FinCategory& M() const { return b.carrier; }
    const MonCat& E() const { return *F.src; }

    // whiskering helpers on carrier morphisms
    int ract_id(int mor, int dobj) const {
        return b.ract_mor[mor][b.right->base.identity(dobj)];
    }
    int lact_id(int cobj, int mor) const {
        return b.lact_mor[b.left->base.identity(cobj)][mor];
    }
};

bool endpoints_left(const Ctx& c, int m_obj, int x, int mor) {
    const auto& mo = c.M().mor(mor);
    return mo.src == c.b.ract_obj[m_obj][c.F.obj[x]] && mo.dst == c.b.lact_obj[c.G.obj[x]][m_obj];
}

bool endpoints_right(const Ctx& c, int m_obj, int x, int mor) {
    const auto& mo = c.M().mor(mor);
    return mo.src == c.b.lact_obj[c.G.obj[x]][m_obj] && mo.dst == c.b.ract_obj[m_obj][c.F.obj[x]];
}

// naturality square for the component pair at (x -> y)
bool natural_at(const Ctx& c, Side side, int m_obj, int u, const std::vector<int>& sig) {
    const auto& mu = c.E().base.mor(u);
    int x = mu.src, y = mu.dst;
    if (side == Side::Left) {
        int lhs = c.M().compose(c.b.lact_mor[c.G.mor[u]][c.M().identity(m_obj)], sig[x]);
        int rhs = c.M().compose(sig[y], c.b.ract_mor[c.M().identity(m_obj)][c.F.mor[u]]);
        return lhs == rhs && lhs >= 0;
    }
    int lhs = c.M().compose(c.b.ract_mor[c.M().identity(m_obj)][c.F.mor[u]], sig[x]);
    int rhs = c.M().compose(sig[y], c.b.lact_mor[c.G.mor[u]][c.M().identity(m_obj)]);
    return lhs == rhs && lhs >= 0;
}

// multiplicativity at the object pair (y, x)
bool mult_at(const Ctx& c, Side side, int m_obj, int y, int x, const std::vector<int>& sig) {
    const FinCategory& M = c.M();
    int id_m = M.identity(m_obj);
    int yx = c.E().tob[y][x];
    if (side == Side::Left) {
        int step1 = c.b.ract_mor[sig[y]][c.b.right->base.identity(c.F.obj[x])];
        int step2 = c.b.lact_mor[c.b.left->base.identity(c.G.obj[y])][sig[x]];
        int step3 = c.b.lact_mor[c.G.lax2[y][x]][id_m];
        int lhs = M.compose(step3, M.compose(step2, step1));
        int rhs = M.compose(sig[yx], c.b.ract_mor[id_m][c.F.lax2[y][x]]);
        return lhs == rhs && lhs >= 0;
    }
    int step1 = c.b.lact_mor[c.b.left->base.identity(c.G.obj[y])][sig[x]];
    int step2 = c.b.ract_mor[sig[y]][c.b.right->base.identity(c.F.obj[x])];
    int step3 = c.b.ract_mor[id_m][c.F.lax2[y][x]];
    int lhs = M.compose(step3, M.compose(step2, step1));
    int rhs = M.compose(sig[yx], c.b.lact_mor[c.G.lax2[y][x]][id_m]);
    return lhs == rhs && lhs >= 0;
}

bool unit_at(const Ctx& c, Side side, int m_obj, const std::vector<int>& sig) {
    const FinCategory& M = c.M();
    int id_m = M.identity(m_obj);
    int i = c.E().unit;
    if (side == Side::Left) {
        int lhs = M.compose(sig[i], c.b.ract_mor[id_m][c.F.lax0]);
        return lhs == c.b.lact_mor[c.G.lax0][id_m] && lhs >= 0;
    }
    int lhs = M.compose(sig[i], c.b.lact_mor[c.G.lax0][id_m]);
    return lhs == c.b.ract_mor[id_m][c.F.lax0] && lhs >= 0;
}

}  // namespace

Report check_half_braiding(const HalfBraiding& h) {
    Report r("half-braiding");
    Ctx c{*h.bim, *h.F, *h.G};
    const FinCategory& M = c.M();
    const MonCat& E = c.E();

    r.begin("well-formed");
    r.require(h.F->src == h.G->src, "twist functors have different sources");
    r.require(&h.F->dst->base == &h.bim->right->base && &h.G->dst->base == &h.bim->left->base,
              "twist functors do not land in the acting categories");
    r.require(h.M >= 0 && h.M < M.num_objects(), "carrier object out of range");
    r.require(static_cast<int>(h.sigma.size()) == E.base.num_objects(),
              "component family not indexed by the twisting domain");
    if (!r.ok()) return r;
    for (int x = 0; x < E.base.num_objects(); ++x) {
        int s = h.sigma[x];
        bool in_range = s >= 0 && s < M.num_morphisms();
        bool ok = in_range && (h.side == Side::Left ? endpoints_left(c, h.M, x, s)
                                                    : endpoints_right(c, h.M, x, s));
        r.require(ok, "component at " + E.base.object_name(x) +
                          (in_range ? " has wrong endpoints" : " is not a morphism"));
    }
    if (!r.ok()) return r;

    r.begin("naturality");
    for (int u = 0; u < E.base.num_morphisms(); ++u)
        r.require(natural_at(c, h.side, h.M, u, h.sigma), E.base.mor(u).name);

    r.begin("multiplicativity");
    for (int y = 0; y < E.base.num_objects(); ++y)
        for (int x = 0; x < E.base.num_objects(); ++x)
            r.require(mult_at(c, h.side, h.M, y, x, h.sigma),
                      "(" + E.base.object_name(y) + "," + E.base.object_name(x) + ")");

    r.begin("unit");
    r.require(unit_at(c, h.side, h.M, h.sigma), E.base.object_name(E.unit));

    if (h.strength == Strength::Strong) {
        r.begin("strong-inverses");
        bool sized = h.sigma_inv.size() == h.sigma.size();
        r.require(sized, "inverse family not total");
        if (sized)
            for (int x = 0; x < E.base.num_objects(); ++x) {
                int s = h.sigma[x], t = h.sigma_inv[x];
                bool ok = t >= 0 && t < M.num_morphisms() &&
                          M.compose(t, s) == M.identity(M.mor(s).src) &&
                          M.compose(s, t) == M.identity(M.mor(s).dst);
                r.require(ok, E.base.object_name(x));
            }
    }
    return r;
}

HalfBraiding unit_center_object(const BimoduleCat& b, const LaxMonFunctor& f, Side side) {
    if (!b.regular()) throw std::invalid_argument("unit_center_object: needs a regular bimodule");
    HalfBraiding h;
    h.side = side;
    h.strength = Strength::Strong;
    h.bim = &b;
    h.F = h.G = &f;
    h.M = b.left->unit;
    const MonCat& e = *f.src;
    for (int x = 0; x < e.base.num_objects(); ++x) {
        h.sigma.push_back(b.carrier.identity(f.obj[x]));
        h.sigma_inv.push_back(b.carrier.identity(f.obj[x]));
    }
    return h;
}

bool is_center_morphism(const HalfBraiding& from, const HalfBraiding& to, int carrier_mor) {
    const Ctx c{*from.bim, *from.F, *from.G};
    const FinCategory& M = c.M();
    if (M.mor(carrier_mor).src != from.M || M.mor(carrier_mor).dst != to.M) return false;
    for (int x = 0; x < c.E().base.num_objects(); ++x) {
        int lhs, rhs;
        if (from.side == Side::Left) {
            lhs = M.compose(c.lact_id(c.G.obj[x], carrier_mor), from.sigma[x]);
            rhs = M.compose(to.sigma[x], c.ract_id(carrier_mor, c.F.obj[x]));
        } else {
            lhs = M.compose(c.ract_id(carrier_mor, c.F.obj[x]), from.sigma[x]);
            rhs = M.compose(to.sigma[x], c.lact_id(c.G.obj[x], carrier_mor));
        }
        if (lhs != rhs || lhs < 0) return false;
    }
    return true;
}

namespace {

void search_components(const Ctx& c, Side side, int m_obj, std::vector<int>& sig, std::size_t x,
                       std::vector<HalfBraiding>& out, const HalfBraiding& proto) {
    const MonCat& E = c.E();
    const int nx = E.base.num_objects();
    if (x == static_cast<std::size_t>(nx)) {
        HalfBraiding h = proto;
        h.M = m_obj;
        h.sigma = sig;
        if (check_half_braiding(h).ok()) out.push_back(std::move(h));
        return;
    }
    int xo = static_cast<int>(x);
    int src, dst;
    if (side == Side::Left) {
        src = c.b.ract_obj[m_obj][c.F.obj[xo]];
        dst = c.b.lact_obj[c.G.obj[xo]][m_obj];
    } else {
        src = c.b.lact_obj[c.G.obj[xo]][m_obj];
        dst = c.b.ract_obj[m_obj][c.F.obj[xo]];
    }
    for (int cand : c.M().hom(src, dst)) {
        sig[xo] = cand;
        // prune: unit constraint, naturality and multiplicativity among the
        // components fixed so far
        if (xo == E.unit && !unit_at(c, side, m_obj, sig)) continue;
        bool ok = true;
        for (int u = 0; u < E.base.num_morphisms() && ok; ++u) {
            const auto& mu = E.base.mor(u);
            if (mu.src <= xo && mu.dst <= xo) ok = natural_at(c, side, m_obj, u, sig);
        }
        for (int y = 0; y <= xo && ok; ++y)
            for (int z = 0; z <= xo && ok; ++z)
                if (E.tob[y][z] <= xo) ok = mult_at(c, side, m_obj, y, z, sig);
        if (!ok) continue;
        search_components(c, side, m_obj, sig, x + 1, out, proto);
    }
    sig[xo] = -1;
}

}  // namespace

CenterCategory enumerate_center(const BimoduleCat& b, const LaxMonFunctor& f,
                                const LaxMonFunctor& g, Side side, Strength strength) {
    Ctx c{b, f, g};
    CenterCategory z;
    HalfBraiding proto;
    proto.side = side;
    proto.strength = Strength::Weak;
    proto.bim = &b;
    proto.F = &f;
    proto.G = &g;

    for (int m = 0; m < b.carrier.num_objects(); ++m) {
        std::vector<int> sig(c.E().base.num_objects(), -1);
        search_components(c, side, m, sig, 0, z.objects, proto);
    }

    if (strength == Strength::Strong) {
        std::vector<HalfBraiding> strong;
        for (HalfBraiding& h : z.objects) {
            std::vector<int> inv;
            bool all = true;
            for (int s : h.sigma) {
                const auto& mo = b.carrier.mor(s);
                int found = -1;
                for (int cand : b.carrier.hom(mo.dst, mo.src))
                    if (b.carrier.compose(cand, s) == b.carrier.identity(mo.src) &&
                        b.carrier.compose(s, cand) == b.carrier.identity(mo.dst)) {
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
                h.strength = Strength::Strong;
                h.sigma_inv = inv;
                strong.push_back(h);
            }
        }
        z.objects = std::move(strong);
    }

    // assemble the category: objects, intertwining morphisms, induced tables
    const FinCategory& M = b.carrier;
    for (std::size_t i = 0; i < z.objects.size(); ++i)
        z.cat.add_object("Z" + std::to_string(i) + "(" + M.object_name(z.objects[i].M) + ")");
    for (std::size_t i = 0; i < z.objects.size(); ++i)
        for (std::size_t j = 0; j < z.objects.size(); ++j)
            for (int cand : M.hom(z.objects[i].M, z.objects[j].M))
                if (is_center_morphism(z.objects[i], z.objects[j], cand)) {
                    z.cat.add_morphism(M.mor(cand).name + ":" + std::to_string(i) + ">" +
                                           std::to_string(j),
                                       static_cast<int>(i), static_cast<int>(j));
                    z.mor_carrier.push_back(cand);
                }
    auto find_mor = [&](int src, int dst, int carrier) {
        for (std::size_t k = 0; k < z.mor_carrier.size(); ++k) {
            // morphism k of z.cat
            if (z.mor_carrier[k] == carrier && z.cat.mor(static_cast<int>(k)).src == src &&
                z.cat.mor(static_cast<int>(k)).dst == dst)
                return static_cast<int>(k);
        }
        return -1;
    };
    for (std::size_t i = 0; i < z.objects.size(); ++i)
        z.cat.set_identity(static_cast<int>(i),
                           find_mor(static_cast<int>(i), static_cast<int>(i),
                                    M.identity(z.objects[i].M)));
    for (int a = 0; a < z.cat.num_morphisms(); ++a)
        for (int bm = 0; bm < z.cat.num_morphisms(); ++bm) {
            if (z.cat.mor(bm).dst != z.cat.mor(a).src) continue;
            int comp = M.compose(z.mor_carrier[a], z.mor_carrier[bm]);
            z.cat.set_compose(a, bm, find_mor(z.cat.mor(bm).src, z.cat.mor(a).dst, comp));
        }
    z.cat.finalize();
    return z;
}

HalfBraiding xi_invert(const HalfBraiding& h) {
    if (h.strength != Strength::Strong)
        throw std::invalid_argument("xi_invert: weak half-braidings have no inverse");
    HalfBraiding r = h;
    r.side = h.side == Side::Left ? Side::Right : Side::Left;
    r.sigma = h.sigma_inv;
    r.sigma_inv = h.sigma;
    return r;
}

HalfBraiding compose_center_objects(const HalfBraiding& n, const HalfBraiding& m) {
    if (n.bim != m.bim || n.side != m.side)
        throw std::invalid_argument("compose_center_objects: mismatched carriers");
    if (n.side != Side::Left)
        throw std::invalid_argument("compose_center_objects: defined for left half-braidings");
    if (!n.bim->regular())
        throw std::invalid_argument("compose_center_objects: needs a regular bimodule");
    if (!same_lax_monoidal(*n.F, *m.G))
        throw std::invalid_argument("compose_center_objects: twists do not match");
    const MonCat& C = *n.bim->left;
    HalfBraiding r;
    r.side = Side::Left;
    r.bim = n.bim;
    r.F = m.F;
    r.G = n.G;
    r.M = C.tob[n.M][m.M];
    const int nm = C.base.identity(n.M), mm = C.base.identity(m.M);
    for (std::size_t x = 0; x < m.sigma.size(); ++x) {
        int step1 = C.tmor[nm][m.sigma[x]];
        int step2 = C.tmor[n.sigma[x]][mm];
        r.sigma.push_back(C.base.compose(step2, step1));
    }
    if (n.strength == Strength::Strong && m.strength == Strength::Strong) {
        r.strength = Strength::Strong;
        for (std::size_t x = 0; x < m.sigma.size(); ++x) {
            int step1 = C.tmor[n.sigma_inv[x]][mm];
            int step2 = C.tmor[nm][m.sigma_inv[x]];
            r.sigma_inv.push_back(C.base.compose(step2, step1));
        }
    }
    return r;
}

CenterTransformation center_to_colax(const HalfBraiding& h, DeloopShape shape) {
    const BimoduleCat& b = *h.bim;
    CenterTransformation out;
    out.domain = std::make_shared<TableTwoCat>(deloop_moncat(*h.F->src));
    int cf = 0, cg = 0;
    if (shape == DeloopShape::OneObject) {
        if (!b.regular())
            throw std::invalid_argument("center_to_colax: one-object shape needs C=D=M");
        out.codomain = std::make_shared<TableTwoCat>(deloop_moncat(*b.left));
    } else {
        out.codomain = std::make_shared<TableTwoCat>(deloop_bimodule(b));
        cf = 0;
        cg = 1;
    }
    out.F2 = std::make_shared<TableFunctor2>(
        deloop_monfunctor(*h.F, *out.domain, *out.codomain, cf));
    out.G2 = std::make_shared<TableFunctor2>(
        deloop_monfunctor(*h.G, *out.domain, *out.codomain, cg));

    Transformation2 t;
    t.kind = h.side == Side::Left ? Transformation2::Colax : Transformation2::Lax;
    t.F = out.F2.get();
    t.G = out.G2.get();
    t.one.push_back(One{cf, cg, h.M});
    t.two.assign(1, std::vector<std::vector<Two>>(1));
    t.two_inv.assign(1, std::vector<std::vector<Two>>(1));
    for (std::size_t x = 0; x < h.sigma.size(); ++x) {
        t.two[0][0].push_back(out.codomain->make2(cf, cg, h.sigma[x]));
        if (h.strength == Strength::Strong)
            t.two_inv[0][0].push_back(out.codomain->make2(cf, cg, h.sigma_inv[x]));
    }
    t.has_inv = h.strength == Strength::Strong;
    out.t = std::move(t);
    return out;
}

HalfBraiding colax_to_center(const Transformation2& t, const BimoduleCat& b,
                             const LaxMonFunctor& f, const LaxMonFunctor& g, Side side,
                             Strength strength) {
    HalfBraiding h;
    h.side = side;
    h.strength = strength;
    h.bim = &b;
    h.F = &f;
    h.G = &g;
    h.M = static_cast<int>(t.one[0].v);
    for (const Two& c : t.two[0][0]) h.sigma.push_back(static_cast<int>(c.v));
    if (strength == Strength::Strong)
        for (const Two& c : t.two_inv[0][0]) h.sigma_inv.push_back(static_cast<int>(c.v));
    return h;
}

}  // namespace catcenter
