// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Oracles are recomputed here independently of the library paths
// they validate.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catcenter/adjoint.hpp"
#include "catcenter/bilax.hpp"
#include "catcenter/cli_run.hpp"
#include "catcenter/suite.hpp"

using namespace catcenter;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body,
               double budget_ms = 0) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (budget_ms > 0 && ms > budget_ms) {
        ok = false;
        note += " (over time budget)";
    }
    std::printf("%s criterion-%d: %s [%.0f ms]%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                ms, note.c_str());
    if (!ok) ++failures;
}

struct Instance {
    std::string name;
    MonCat g;
    std::vector<std::vector<int>> table;
    BimoduleCat bim;
    LaxMonFunctor id;
    Instance(std::string n, MonCat m, std::vector<std::vector<int>> t)
        : name(std::move(n)), g(std::move(m)), table(std::move(t)) {
        bim = regular_bimodule(g);
        id = LaxMonFunctor::identity(g);
    }
};

std::vector<Instance>& instances() {
    // Instance is self-referential (bim points at g), so the storage must
    // never reallocate under the emplaces
    static std::vector<Instance> v = [] {
        std::vector<Instance> r;
        r.reserve(4);
        r.emplace_back("z2", suite::z2(), suite::cyclic_table(2));
        r.emplace_back("z4", suite::z4(), suite::cyclic_table(4));
        r.emplace_back("s3", suite::s3(), suite::s3_table());
        r.emplace_back("d4", suite::d4(), suite::d4_table());
        return r;
    }();
    return v;
}

std::vector<std::vector<int>> klein_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return t;
}

bool same_object_set(const std::vector<HalfBraiding>& a, const std::vector<HalfBraiding>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        bool found = false;
        for (const auto& y : b)
            found = found || (x == y && x.sigma_inv == y.sigma_inv);
        if (!found) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(
        1, "strong center of C(G) = group center for Z/2, Z/4, S3, D4",
        [] {
            std::vector<std::size_t> expected{2, 4, 1, 2};
            for (std::size_t i = 0; i < instances().size(); ++i) {
                Instance& in = instances()[i];
                CenterCategory z =
                    enumerate_center(in.bim, in.id, in.id, Side::Left, Strength::Strong);
                if (z.objects.size() != expected[i]) return false;
                if (z.objects.size() != suite::group_center(in.table).size()) return false;
                for (const auto& h : z.objects) {
                    for (std::size_t x = 0; x < h.sigma.size(); ++x) {
                        int target = in.g.tensor_obj(h.M, static_cast<int>(x));
                        if (h.sigma[x] != in.g.base.identity(target)) return false;
                    }
                }
            }
            return true;
        },
        1000);

    criterion(
        2, "twisted centralizer of a transposition in C(S3) is {t^-1}",
        [] {
            Instance& s3 = instances()[2];
            const int t = 3;
            int tinv = suite::group_inverse(s3.table, t);
            LaxMonFunctor conj = suite::conjugation_functor(s3.g, s3.table, t);
            CenterCategory z =
                enumerate_center(s3.bim, conj, s3.id, Side::Left, Strength::Weak);
            std::vector<int> oracle;
            for (int m = 0; m < 6; ++m) {
                bool all = true;
                for (int x = 0; x < 6; ++x)
                    all = all &&
                          s3.table[m][s3.table[s3.table[t][x]][tinv]] == s3.table[x][m];
                if (all) oracle.push_back(m);
            }
            return z.objects.size() == 1 && oracle == std::vector<int>{tinv} &&
                   z.objects[0].M == tinv;
        },
        1000);

    criterion(3, "center objects <-> colax transformations, mutually inverse, 4 instances", [] {
        struct Case {
            Instance* in;
            LaxMonFunctor twist;
            bool twisted;
        };
        Instance& s3 = instances()[2];
        Instance& z4 = instances()[1];
        Instance& z2 = instances()[0];
        std::vector<Case> cases;
        cases.push_back({&s3, s3.id, false});
        cases.push_back({&z4, z4.id, false});
        cases.push_back({&s3, suite::conjugation_functor(s3.g, s3.table, 3), true});
        for (auto& c : cases) {
            const LaxMonFunctor& F = c.twisted ? c.twist : c.in->id;
            CenterCategory z =
                enumerate_center(c.in->bim, F, c.in->id, Side::Left, Strength::Weak);
            // independent enumeration on the transformation side
            TableTwoCat k = deloop_moncat(c.in->g);
            TableFunctor2 df = deloop_monfunctor(F, k, k, 0);
            TableFunctor2 dg = deloop_monfunctor(c.in->id, k, k, 0);
            auto transf = enumerate_transformations(df, dg, Transformation2::Colax);
            if (transf.size() != z.objects.size()) return false;
            for (const auto& h : z.objects) {
                CenterTransformation ct = center_to_colax(h, DeloopShape::OneObject);
                if (!check_transformation2(ct.t).ok()) return false;
                HalfBraiding back = colax_to_center(ct.t, c.in->bim, F, c.in->id, h.side,
                                                    h.strength);
                if (!(back == h)) return false;
            }
            for (const auto& t : transf) {
                HalfBraiding h =
                    colax_to_center(t, c.in->bim, F, c.in->id, Side::Left, Strength::Weak);
                if (!check_half_braiding(h).ok()) return false;
                CenterTransformation ct = center_to_colax(h, DeloopShape::OneObject);
                if (!(ct.t.one == t.one && ct.t.two == t.two)) return false;
            }
            // modifications correspond to the intertwining carrier morphisms
            std::vector<Transformation2> objs;
            FinCategory tc = transformation_category(df, dg, Transformation2::Colax, &objs);
            if (!validate_category(tc).ok()) return false;
            if (tc.num_morphisms() != z.cat.num_morphisms()) return false;
        }
        // two-object instance via the regular bimodule delooping
        {
            BimoduleCat bim = regular_bimodule(instances()[0].g);
            CenterCategory z = enumerate_center(bim, z2.id, z2.id, Side::Left, Strength::Weak);
            TableTwoCat k2 = deloop_bimodule(bim);
            TableTwoCat dom = deloop_moncat(z2.g);
            TableFunctor2 df = deloop_monfunctor(z2.id, dom, k2, 0);
            TableFunctor2 dg = deloop_monfunctor(z2.id, dom, k2, 1);
            auto transf = enumerate_transformations(df, dg, Transformation2::Colax);
            if (transf.size() != z.objects.size()) return false;
            for (const auto& h : z.objects) {
                CenterTransformation ct = center_to_colax(h, DeloopShape::TwoObject);
                if (!check_transformation2(ct.t).ok()) return false;
                HalfBraiding back =
                    colax_to_center(ct.t, bim, z2.id, z2.id, h.side, h.strength);
                if (!(back == h)) return false;
            }
        }
        return true;
    });

    criterion(4, "Xi is an involution and |Z^s_l| = |Z^s_r| on every instance", [] {
        for (Instance& in : instances()) {
            CenterCategory l =
                enumerate_center(in.bim, in.id, in.id, Side::Left, Strength::Strong);
            CenterCategory r =
                enumerate_center(in.bim, in.id, in.id, Side::Right, Strength::Strong);
            if (l.objects.size() != r.objects.size()) return false;
            for (const auto& h : l.objects) {
                HalfBraiding inv = xi_invert(h);
                if (!check_half_braiding(inv).ok()) return false;
                if (!(xi_invert(inv) == h)) return false;
            }
        }
        return true;
    });

    criterion(5, "center composition is strictly associative and unital on C(Z/4)", [] {
        Instance& z4 = instances()[1];
        CenterCategory z = enumerate_center(z4.bim, z4.id, z4.id, Side::Left, Strength::Strong);
        HalfBraiding unit = unit_center_object(z4.bim, z4.id, Side::Left);
        for (const auto& h : z.objects) {
            if (!(compose_center_objects(unit, h) == h)) return false;
            if (!(compose_center_objects(h, unit) == h)) return false;
        }
        for (const auto& n : z.objects)
            for (const auto& m : z.objects)
                if (!check_half_braiding(compose_center_objects(n, m)).ok()) return false;
        for (const auto& p : z.objects)
            for (const auto& n : z.objects)
                for (const auto& m : z.objects) {
                    HalfBraiding a = compose_center_objects(compose_center_objects(p, n), m);
                    HalfBraiding b = compose_center_objects(p, compose_center_objects(n, m));
                    if (!(a == b)) return false;
                }
        return true;
    });

    criterion(6, "adjoint inversion upgrades every weak object to the strong center", [] {
        for (Instance& in : instances()) {
            CenterCategory weak =
                enumerate_center(in.bim, in.id, in.id, Side::Left, Strength::Weak);
            CenterCategory strong =
                enumerate_center(in.bim, in.id, in.id, Side::Left, Strength::Strong);
            std::vector<HalfBraiding> upgraded;
            for (const auto& h : weak.objects)
                upgraded.push_back(invert_half_braiding_via_adjoints(h));
            if (!same_object_set(upgraded, strong.objects)) return false;
        }
        // twisted pseudo instance
        Instance& s3 = instances()[2];
        LaxMonFunctor conj = suite::conjugation_functor(s3.g, s3.table, 3);
        CenterCategory weak = enumerate_center(s3.bim, conj, s3.id, Side::Left, Strength::Weak);
        CenterCategory strong =
            enumerate_center(s3.bim, conj, s3.id, Side::Left, Strength::Strong);
        std::vector<HalfBraiding> upgraded;
        for (const auto& h : weak.objects)
            upgraded.push_back(invert_half_braiding_via_adjoints(h));
        return same_object_set(upgraded, strong.objects);
    });

    criterion(7, "duals lift to the center of C(Z/4) with ev/coev as center morphisms", [] {
        Instance& z4 = instances()[1];
        CenterCategory z = enumerate_center(z4.bim, z4.id, z4.id, Side::Left, Strength::Strong);
        for (const auto& h : z.objects) {
            HalfBraiding dual = lift_dual_to_center(h);
            if (!check_half_braiding(dual).ok()) return false;
            if (!check_dual_lift(h).ok()) return false;
            if (lift_dual_to_center(dual).M != h.M) return false;
        }
        return true;
    });

    criterion(
        8, "bimonad suite: group algebras pass, every one-cell mutation fails",
        [] {
            MatTwoCat k(2);
            Bimonad kz2 = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
            Bimonad kz2z2 = suite::group_algebra_bimonad(k, klein_table());
            if (!check_bimonad(kz2).ok() || !check_bimonad(kz2z2).ok()) return false;
            auto mutate_all = [](const Bimonad& base) {
                std::vector<Two Bimonad::*> cells{&Bimonad::mu, &Bimonad::eta, &Bimonad::delta,
                                                  &Bimonad::eps, &Bimonad::ybo};
                for (Two Bimonad::*cell : cells) {
                    const FpMat& m = (base.*cell).m;
                    for (int i = 0; i < m.rows(); ++i)
                        for (int j = 0; j < m.cols(); ++j) {
                            Bimonad mut = base;
                            (mut.*cell).m.set(i, j, m.at(i, j) ^ 1);
                            if (check_bimonad(mut).ok()) return false;
                        }
                }
                return true;
            };
            return mutate_all(kz2) && mutate_all(kz2z2);
        },
        1000);

    criterion(9, "bilax correspondences: Bilax(1,K) = Bimnd(K) and the Dist embedding", [] {
        MatTwoCat k(2);
        TableTwoCat triv = trivial_twocat();
        TwoYbo triv_ybo = identity_two_ybo(triv);
        TwoYbo swap = swap_two_ybo(k);
        for (auto table : {suite::cyclic_table(2), klein_table()}) {
            Bimonad b = suite::group_algebra_bimonad(k, table);
            BilaxFunctor tb = bimonad_to_bilax(b, triv, triv_ybo, &swap);
            if (!check_bilax_functor(tb).ok()) return false;
            Bimonad back = bilax_to_bimonad(tb);
            if (!(back.mu == b.mu && back.eta == b.eta && back.delta == b.delta &&
                  back.eps == b.eps && back.ybo == b.ybo))
                return false;
            DistCell cell = bimonad_to_dist(b);
            if (!check_dist_cell(cell).ok()) return false;
            if (!check_lambda(b, cell.lambda).ok()) return false;
        }
        // 1- and 2-cells over F2[Z/2]
        Bimonad kz2 = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
        BilaxFunctor tb = bimonad_to_bilax(kz2, triv, triv_ybo, &swap);
        auto mods = enumerate_yd_modules(kz2, k, 1);
        if (mods.size() != 2) return false;
        DistCell dc = bimonad_to_dist(kz2);
        std::vector<BimndOneCell> cells;
        for (const auto& v : mods) {
            BilaxTransformation t = yd_to_bilax(kz2, v, k, tb);
            if (!check_bilax_transformation(t, tb, tb).ok()) return false;
            BimndOneCell cell = bilax1_to_bimnd_cell(t);
            if (!check_bimnd_one_cell(kz2, kz2, cell).ok()) return false;
            BilaxTransformation rt = bimnd_cell_to_bilax1(cell, tb, tb);
            if (!(rt.psi.two == t.psi.two && rt.phi.two == t.phi.two)) return false;
            if (!check_dist_one_cell(dc, dc, cell).ok()) return false;
            cells.push_back(cell);
        }
        // faithfulness on the suite hom-set
        bool distinct = !(cells[0].psi == cells[1].psi && cells[0].phi == cells[1].phi);
        if (!distinct) return false;
        // 2-cells translate verbatim: the identity is one on both sides
        Two zeta = k.id2(cells[0].x);
        BilaxModification a{{zeta}};
        BilaxTransformation t0 = yd_to_bilax(kz2, mods[0], k, tb);
        if (!check_bilax_modification(a, t0, t0).ok()) return false;
        if (!check_bimnd_two_cell(kz2, kz2, cells[0], cells[0], zeta).ok()) return false;
        return true;
    });

    criterion(10, "bilax functors preserve bimonads, (co)module structures, Hopf bimodules", [] {
        MatTwoCat k(2);
        Bimonad kz2 = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
        MonCat z2 = suite::z2();
        TableTwoCat delz2 = deloop_moncat(z2);
        TwoYbo delz2_ybo = identity_two_ybo(delz2);
        TwoYbo swap = swap_two_ybo(k);
        TableTwoCat triv = trivial_twocat();
        TwoYbo triv_ybo = identity_two_ybo(triv);

        std::vector<BilaxFunctor> functors;
        functors.push_back(bimonad_to_bilax(kz2, triv, triv_ybo, &swap));
        functors.push_back(constant_bilax_functor(delz2, delz2_ybo, kz2, &swap));
        for (const BilaxFunctor& f : functors) {
            // Eqs (25)-(28) and the other derived families are law families
            // of the full functor check
            Report r = check_bilax_functor(f);
            if (!r.ok()) return false;
            for (const char* law :
                 {"derived-mod-coalg-left", "derived-comod-alg-left", "derived-mod-coalg-right",
                  "derived-comod-alg-right", "derived-eps-e", "derived-yb-unity"})
                if (!r.law_passed(law)) return false;

            const TwoCat& dom = *f.F->src;
            Bimonad btriv;
            btriv.k = &dom;
            btriv.b = dom.unit_one(0);
            btriv.mu = btriv.eta = btriv.delta = btriv.eps = dom.id2(btriv.b);
            btriv.ybo = dom.id2(btriv.b);

            Bimonad pushed = push_bimonad(f, btriv);
            if (!check_bimonad(pushed).ok()) return false;

            Two idact = dom.id2(btriv.b);
            ModuleStructure dmod =
                induced_module(*f.F, ModuleStructure{btriv.monad(), btriv.b, idact,
                                                     ActSide::Right});
            Comonad dpush = push_comonad(*f.F, btriv.comonad());
            if (!check_module_comonad(dpush, dmod.action, pushed, swap).ok()) return false;

            ComoduleStructure tco = induced_comodule(
                *f.F, ComoduleStructure{btriv.comonad(), btriv.b, idact, ActSide::Right});
            Monad tpush = push_monad(*f.F, btriv.monad());
            if (!check_comodule_monad(tpush, tco.coaction, pushed, swap).ok()) return false;

            if (!check_relative_module(dmod.x, dmod.action, tco.coaction, tpush, tco.coaction,
                                       pushed, swap)
                     .ok())
                return false;
            ModuleStructure lmod = induced_module(
                *f.F, ModuleStructure{btriv.monad(), btriv.b, idact, ActSide::Left});
            ComoduleStructure lco = induced_comodule(
                *f.F, ComoduleStructure{btriv.comonad(), btriv.b, idact, ActSide::Left});
            if (!check_left_relative_module(lmod.x, lmod.action, lco.coaction, tpush,
                                            lco.coaction, pushed, swap)
                     .ok())
                return false;

            // Hopf bimodule factorization of every 1-endocell image
            for (int a = 0; a < (f.F->src->enumerable() ? f.F->src->zero_cells() : 0); ++a)
                for (const One& x : f.F->src->one_cells(a, a)) {
                    One u = f.F->src->unit_one(a);
                    const Functor2& F = *f.F;
                    Two ix = f.F->dst->id2(F.one(x));
                    HopfBimodule h{F.one(x), f.F->dst->vcomp(ix, F.lax2(u, x)),
                                   f.F->dst->vcomp(ix, F.lax2(x, u)),
                                   f.F->dst->vcomp(F.colax2(u, x), ix),
                                   f.F->dst->vcomp(F.colax2(x, u), ix)};
                    if (!check_hopf_bimodule(h, pushed, swap).ok()) return false;
                }
        }
        return true;
    });

    criterion(
        11, "YD enumeration over F2[Z/2]: exactly 2 dim-1 structures, all bilax-transform",
        [] {
            MatTwoCat k(2);
            Bimonad kz2 = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
            auto found = enumerate_yd_modules(kz2, k, 1);
            if (found.size() != 2) return false;

            // independent brute force with raw matrix formulas
            FpMat i2 = FpMat::identity(2, 2), i1 = FpMat::identity(1, 2);
            FpMat c = FpMat::kron_swap(2, 2, 2);
            const FpMat &mu = kz2.mu.m, &eta = kz2.eta.m, &dl = kz2.delta.m, &ep = kz2.eps.m;
            int count = 0;
            FpMat act(1, 2, 2);
            do {
                FpMat coact(2, 1, 2);
                do {
                    bool module = act * kron(mu, i1) == act * kron(i2, act) &&
                                  act * kron(eta, i1) == i1;
                    bool comodule = kron(dl, i1) * coact == kron(i2, coact) * coact &&
                                    kron(ep, i1) * coact == i1;
                    if (module && comodule) {
                        FpMat sbv = FpMat::kron_swap(2, 1, 2);
                        FpMat svb = FpMat::kron_swap(1, 2, 2);
                        FpMat lhs = kron(mu, i1) * kron(i2, svb) * kron(coact, i2) *
                                    kron(act, i2) * kron(i2, sbv) * kron(dl, i1);
                        FpMat rhs = kron(mu, act) * kron(kron(i2, c), i1) * kron(dl, coact);
                        if (lhs == rhs) ++count;
                    }
                } while (next_matrix(coact));
            } while (next_matrix(act));
            if (count != 2) return false;

            TableTwoCat triv = trivial_twocat();
            TwoYbo triv_ybo = identity_two_ybo(triv);
            TwoYbo swap = swap_two_ybo(k);
            BilaxFunctor tb = bimonad_to_bilax(kz2, triv, triv_ybo, &swap);
            for (const auto& v : found) {
                BilaxTransformation t = yd_to_bilax(kz2, v, k, tb);
                Report r = check_bilax_transformation(t, tb, tb);
                if (!r.law_passed("strong-yd") || !r.law_passed("derived-yd")) return false;
                if (!r.ok()) return false;
            }
            return true;
        },
        5000);

    criterion(12, "lambda of every suite bimonad satisfies the four distributive laws", [] {
        MatTwoCat k(2);
        for (auto table : {suite::cyclic_table(2), klein_table()}) {
            Bimonad b = suite::group_algebra_bimonad(k, table);
            Report r = check_lambda(b, make_lambda(b));
            if (!r.law_passed("lambda-monad-dl") || !r.law_passed("lambda-comonad-dl"))
                return false;
            if (!r.ok()) return false;
        }
        return true;
    });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
