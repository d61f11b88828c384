#include "catcenter/twocat.hpp"

#include <stdexcept>

namespace catcenter {

std::vector<One> TwoCat::one_cells(int, int) const {
    throw std::logic_error("one_cells: substrate not enumerable");
}

std::vector<Two> TwoCat::two_cells(const One&, const One&) const {
    throw std::logic_error("two_cells: substrate not enumerable");
}

std::string TwoCat::one_name(const One& f) const {
    return std::to_string(f.src) + "->" + std::to_string(f.dst) + "#" + std::to_string(f.v);
}

std::string TwoCat::two_name(const Two& a) const {
    return one_name(a.from) + "=>" + one_name(a.to);
}

Two vseq(const TwoCat& k, std::initializer_list<Two> cells) {
    const Two* it = cells.begin();
    Two acc = *it++;
    for (; it != cells.end(); ++it) acc = k.vcomp(*it, acc);
    return acc;
}

Two hrow(const TwoCat& k, std::initializer_list<Two> cells) {
    const Two* it = cells.begin();
    Two acc = *it++;
    for (; it != cells.end(); ++it) acc = k.hcomp2(acc, *it);
    return acc;
}

One hpath(const TwoCat& k, std::initializer_list<One> cells) {
    const One* it = cells.begin();
    One acc = *it++;
    for (; it != cells.end(); ++it) acc = k.hcomp1(acc, *it);
    return acc;
}

std::vector<One> endo_one_cells(const TwoCat& k, int a) { return k.one_cells(a, a); }

void TableTwoCat::allocate(int zero_cell_count) {
    n0 = zero_cell_count;
    homs.assign(n0, std::vector<FinCategory>(n0));
    unit1.assign(n0, -1);
    hobj.assign(n0, {});
    hmor.assign(n0, {});
    for (int a = 0; a < n0; ++a) {
        hobj[a].assign(n0, {});
        hmor[a].assign(n0, {});
        for (int b = 0; b < n0; ++b) {
            hobj[a][b].assign(n0, {});
            hmor[a][b].assign(n0, {});
        }
    }
}

One TableTwoCat::hcomp1(const One& l, const One& r) const {
    if (l.src != r.dst) throw std::invalid_argument("hcomp1: not composable");
    return One{r.src, l.dst, hobj[r.src][r.dst][l.dst][l.v][r.v]};
}

Two TableTwoCat::id2(const One& f) const {
    return Two{f, f, homs[f.src][f.dst].identity(static_cast<int>(f.v)), {}};
}

Two TableTwoCat::vcomp(const Two& later, const Two& first) const {
    if (!(first.to == later.from)) throw std::invalid_argument("vcomp: not composable");
    const FinCategory& h = homs[first.from.src][first.from.dst];
    int v = h.compose(static_cast<int>(later.v), static_cast<int>(first.v));
    if (v < 0) throw std::invalid_argument("vcomp: table gap");
    return Two{first.from, later.to, v, {}};
}

Two TableTwoCat::hcomp2(const Two& l, const Two& r) const {
    if (l.from.src != r.from.dst) throw std::invalid_argument("hcomp2: not composable");
    int v = hmor[r.from.src][r.from.dst][l.from.dst][l.v][r.v];
    return Two{hcomp1(l.from, r.from), hcomp1(l.to, r.to), v, {}};
}

std::vector<One> TableTwoCat::one_cells(int a, int b) const {
    std::vector<One> out;
    for (int i = 0; i < homs[a][b].num_objects(); ++i) out.push_back(One{a, b, i});
    return out;
}

std::vector<Two> TableTwoCat::two_cells(const One& f, const One& g) const {
    std::vector<Two> out;
    const FinCategory& h = homs[f.src][f.dst];
    if (!(f.src == g.src && f.dst == g.dst)) return out;
    for (int m = 0; m < h.num_morphisms(); ++m)
        if (h.mor(m).src == f.v && h.mor(m).dst == g.v) out.push_back(Two{f, g, m, {}});
    return out;
}

std::string TableTwoCat::one_name(const One& f) const {
    return homs[f.src][f.dst].object_name(static_cast<int>(f.v));
}

std::string TableTwoCat::two_name(const Two& a) const {
    return homs[a.from.src][a.from.dst].mor(static_cast<int>(a.v)).name;
}

Two TableTwoCat::make2(int a, int b, int mor_index) const {
    const FinCategory& h = homs[a][b];
    const auto& m = h.mor(mor_index);
    return Two{One{a, b, m.src}, One{a, b, m.dst}, mor_index, {}};
}

Report validate_twocat(const TableTwoCat& k) {
    Report r("twocat");
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b) {
            // empty hom-categories between distinct 0-cells are legal
            if (a != b && k.hom(a, b).num_objects() == 0) continue;
            Report sub = validate_category(k.hom(a, b));
            if (!sub.ok()) {
                r.merge(sub);
                return r;
            }
        }

    r.begin("hcomp-well-formed");
    for (int a = 0; a < k.n0; ++a) {
        bool u = k.unit1[a] >= 0 && k.unit1[a] < k.hom(a, a).num_objects();
        r.require(u, "unit 1-cell of " + std::to_string(a));
    }
    if (!r.ok()) return r;
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (int c = 0; c < k.n0; ++c) {
                const auto& t = k.hobj[a][b][c];
                const auto& tm = k.hmor[a][b][c];
                bool sized = static_cast<int>(t.size()) == k.hom(b, c).num_objects() &&
                             static_cast<int>(tm.size()) == k.hom(b, c).num_morphisms();
                r.require(sized, "hcomp table shape at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
                if (!sized) continue;
                for (const auto& row : t)
                    for (int v : row)
                        r.require(v >= 0 && v < k.hom(a, c).num_objects(), "hobj entry");
                for (std::size_t g = 0; g < tm.size(); ++g)
                    for (std::size_t f = 0; f < tm[g].size(); ++f) {
                        int v = tm[g][f];
                        const auto& mg = k.hom(b, c).mor(static_cast<int>(g));
                        const auto& mf = k.hom(a, b).mor(static_cast<int>(f));
                        bool ok = v >= 0 && v < k.hom(a, c).num_morphisms() &&
                                  k.hom(a, c).mor(v).src == t[mg.src][mf.src] &&
                                  k.hom(a, c).mor(v).dst == t[mg.dst][mf.dst];
                        r.require(ok, "hmor entry endpoints");
                    }
            }
    if (!r.ok()) return r;

    r.begin("hcomp-functorial");
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (int c = 0; c < k.n0; ++c) {
                const FinCategory &ab = k.hom(a, b), &bc = k.hom(b, c);
                for (int g = 0; g < bc.num_objects(); ++g)
                    for (int f = 0; f < ab.num_objects(); ++f) {
                        Two lhs = k.hcomp2(k.id2(One{b, c, g}), k.id2(One{a, b, f}));
                        Two rhs = k.id2(k.hcomp1(One{b, c, g}, One{a, b, f}));
                        r.require(lhs == rhs, "id preservation");
                    }
                // interchange
                for (int g2 = 0; g2 < bc.num_morphisms(); ++g2)
                    for (int g1 = 0; g1 < bc.num_morphisms(); ++g1) {
                        if (!bc.composable(g2, g1)) continue;
                        for (int f2 = 0; f2 < ab.num_morphisms(); ++f2)
                            for (int f1 = 0; f1 < ab.num_morphisms(); ++f1) {
                                if (!ab.composable(f2, f1)) continue;
                                Two bg1 = k.make2(b, c, g1), bg2 = k.make2(b, c, g2);
                                Two af1 = k.make2(a, b, f1), af2 = k.make2(a, b, f2);
                                Two lhs = k.vcomp(k.hcomp2(bg2, af2), k.hcomp2(bg1, af1));
                                Two rhs = k.hcomp2(k.vcomp(bg2, bg1), k.vcomp(af2, af1));
                                r.require(lhs == rhs, "interchange");
                            }
                    }
            }

    r.begin("hcomp-strict-associative");
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (int c = 0; c < k.n0; ++c)
                for (int d = 0; d < k.n0; ++d)
                    for (const One& h : k.one_cells(c, d))
                        for (const One& g : k.one_cells(b, c))
                            for (const One& f : k.one_cells(a, b))
                                r.require(k.hcomp1(k.hcomp1(h, g), f) ==
                                              k.hcomp1(h, k.hcomp1(g, f)),
                                          "1-cell associativity");
    // and on 2-cells
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (int c = 0; c < k.n0; ++c)
                for (int d = 0; d < k.n0; ++d)
                    for (int h = 0; h < k.hom(c, d).num_morphisms(); ++h)
                        for (int g = 0; g < k.hom(b, c).num_morphisms(); ++g)
                            for (int f = 0; f < k.hom(a, b).num_morphisms(); ++f) {
                                Two th = k.make2(c, d, h), tg = k.make2(b, c, g),
                                    tf = k.make2(a, b, f);
                                r.require(k.hcomp2(k.hcomp2(th, tg), tf) ==
                                              k.hcomp2(th, k.hcomp2(tg, tf)),
                                          "2-cell associativity");
                            }

    r.begin("hcomp-strict-unital");
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (const One& f : k.one_cells(a, b)) {
                r.require(k.hcomp1(f, k.unit_one(a)) == f && k.hcomp1(k.unit_one(b), f) == f,
                          "1-cell unit");
            }
    for (int a = 0; a < k.n0; ++a)
        for (int b = 0; b < k.n0; ++b)
            for (int m = 0; m < k.hom(a, b).num_morphisms(); ++m) {
                Two t = k.make2(a, b, m);
                Two ia = k.id2(k.unit_one(a)), ib = k.id2(k.unit_one(b));
                r.require(k.hcomp2(t, ia) == t && k.hcomp2(ib, t) == t, "2-cell unit");
            }
    return r;
}

TableTwoCat deloop_moncat(const MonCat& c) {
    TableTwoCat k;
    k.allocate(1);
    k.homs[0][0] = c.base;
    k.unit1[0] = c.unit;
    k.hobj[0][0][0] = c.tob;
    k.hmor[0][0][0] = c.tmor;
    return k;
}

MonCat endocat(const TableTwoCat& k, int a) {
    MonCat m;
    m.base = k.hom(a, a);
    m.unit = k.unit1[a];
    m.tob = k.hobj[a][a][a];
    m.tmor = k.hmor[a][a][a];
    m.reversed = true;
    return m;
}

namespace {

FinCategory trivial_category(const std::string& obj_name) {
    FinCategory c;
    c.add_object(obj_name);
    c.set_identity(0, c.add_morphism("id_" + obj_name, 0, 0));
    c.finalize();
    return c;
}

FinCategory empty_category_shell() {
    // no objects: a legal degenerate hom-category
    FinCategory c;
    c.finalize();
    return c;
}

}  // namespace

TableTwoCat deloop_bimodule(const BimoduleCat& b) {
    const MonCat& C = *b.left;
    const MonCat& D = *b.right;
    const FinCategory& M = b.carrier;
    TableTwoCat k;
    k.allocate(2);
    k.homs[0][0] = D.base;
    k.homs[1][1] = C.base;
    k.homs[0][1] = M;
    // hom(1,0) = 1 only survives strict associativity when every other hom
    // is trivial: for any d the triple (d, z, m) forces d (x) (z.m) = z.m.
    const bool reg = C.base.num_morphisms() == 1 && D.base.num_morphisms() == 1 &&
                     M.num_morphisms() == 1;
    k.homs[1][0] = reg ? trivial_category("z") : empty_category_shell();
    k.unit1[0] = D.unit;
    k.unit1[1] = C.unit;

    auto table = [&](int a, int bb, int c, auto obj_fn, auto mor_fn) {
        auto& t = k.hobj[a][bb][c];
        auto& tm = k.hmor[a][bb][c];
        const FinCategory &lhs = k.homs[bb][c], &rhs = k.homs[a][bb];
        t.assign(lhs.num_objects(), std::vector<int>(rhs.num_objects()));
        for (int g = 0; g < lhs.num_objects(); ++g)
            for (int f = 0; f < rhs.num_objects(); ++f) t[g][f] = obj_fn(g, f);
        tm.assign(lhs.num_morphisms(), std::vector<int>(rhs.num_morphisms()));
        for (int g = 0; g < lhs.num_morphisms(); ++g)
            for (int f = 0; f < rhs.num_morphisms(); ++f) tm[g][f] = mor_fn(g, f);
    };

    table(0, 0, 0, [&](int g, int f) { return D.tob[g][f]; },
          [&](int g, int f) { return D.tmor[g][f]; });
    table(1, 1, 1, [&](int g, int f) { return C.tob[g][f]; },
          [&](int g, int f) { return C.tmor[g][f]; });
    table(0, 0, 1, [&](int m, int d) { return b.ract_obj[m][d]; },
          [&](int m, int d) { return b.ract_mor[m][d]; });
    table(0, 1, 1, [&](int c, int m) { return b.lact_obj[c][m]; },
          [&](int c, int m) { return b.lact_mor[c][m]; });
    if (reg) {
        table(1, 0, 0, [&](int, int) { return 0; }, [&](int, int) { return 0; });
        table(1, 1, 0, [&](int, int) { return 0; }, [&](int, int) { return 0; });
        table(1, 0, 1, [&](int, int) { return C.unit; },
              [&](int, int) { return C.base.identity(C.unit); });
        table(0, 1, 0, [&](int, int) { return D.unit; },
              [&](int, int) { return D.base.identity(D.unit); });
    } else {
        table(1, 0, 0, [&](int, int) { return -1; }, [&](int, int) { return -1; });
        table(1, 1, 0, [&](int, int) { return -1; }, [&](int, int) { return -1; });
        table(1, 0, 1, [&](int, int) { return -1; }, [&](int, int) { return -1; });
        table(0, 1, 0, [&](int, int) { return -1; }, [&](int, int) { return -1; });
    }
    return k;
}

TableTwoCat trivial_twocat() {
    return deloop_moncat(group_moncat({"*"}, {{0}}));
}

Two MatTwoCat::id2(const One& f) const {
    FpMat m = FpMat::identity(static_cast<int>(f.v), p);
    return Two{f, f, 0, m};
}

Two MatTwoCat::vcomp(const Two& later, const Two& first) const {
    if (!(first.to == later.from)) throw std::invalid_argument("vcomp: not composable");
    return Two{first.from, later.to, 0, later.m * first.m};
}

Two MatTwoCat::hcomp2(const Two& l, const Two& r) const {
    return Two{hcomp1(l.from, r.from), hcomp1(l.to, r.to), 0, kron(l.m, r.m)};
}

std::string MatTwoCat::one_name(const One& f) const { return "dim" + std::to_string(f.v); }

std::string MatTwoCat::two_name(const Two& a) const { return a.m.to_string(); }

Two MatTwoCat::make2(const FpMat& m) const {
    return Two{dim(m.cols()), dim(m.rows()), 0, m};
}

TwoYbo identity_two_ybo(const TwoCat& k) {
    TwoYbo c;
    c.k = &k;
    c.name = "identity";
    c.at = [&k](const One& g, const One& f) { return k.id2(k.hcomp1(g, f)); };
    return c;
}

TwoYbo swap_two_ybo(const MatTwoCat& k) {
    TwoYbo c;
    c.k = &k;
    c.name = "swap";
    c.at = [&k](const One& g, const One& f) {
        FpMat s = FpMat::kron_swap(static_cast<int>(g.v), static_cast<int>(f.v), k.p);
        return Two{k.hcomp1(g, f), k.hcomp1(f, g), 0, s};
    };
    return c;
}

TwoYbo ybo1_on_deloop(const TableTwoCat& deloop, const Ybo1& y) {
    TwoYbo c;
    c.k = &deloop;
    c.name = "braiding";
    c.at = [&deloop, &y](const One& g, const One& f) {
        return deloop.make2(0, 0, y.comp[g.v][f.v]);
    };
    return c;
}

Report check_two_ybo(const TwoYbo& c, const std::vector<One>& probe) {
    Report r("two-ybo");
    const TwoCat& k = *c.k;

    r.begin("endpoints");
    for (const One& g : probe)
        for (const One& f : probe) {
            if (g.src != g.dst || f.src != f.dst || g.src != f.src) continue;
            Two t = c.at(g, f);
            r.require(t.from == k.hcomp1(g, f) && t.to == k.hcomp1(f, g),
                      "c(" + k.one_name(g) + "," + k.one_name(f) + ")");
        }
    if (!r.ok()) return r;

    r.begin("yang-baxter");
    for (const One& h : probe)
        for (const One& g : probe)
            for (const One& f : probe) {
                if (h.src != h.dst || g.src != g.dst || f.src != f.dst) continue;
                if (h.src != g.src || g.src != f.src) continue;
                Two lhs = vseq(k, {hrow(k, {c.at(h, g), k.id2(f)}),
                                   hrow(k, {k.id2(g), c.at(h, f)}),
                                   hrow(k, {c.at(g, f), k.id2(h)})});
                Two rhs = vseq(k, {hrow(k, {k.id2(h), c.at(g, f)}),
                                   hrow(k, {c.at(h, f), k.id2(g)}),
                                   hrow(k, {k.id2(f), c.at(h, g)})});
                r.require(lhs == rhs, "(" + k.one_name(h) + "," + k.one_name(g) + "," +
                                          k.one_name(f) + ")");
            }

    r.begin("unit-normalized");
    for (const One& f : probe) {
        if (f.src != f.dst) continue;
        One u = k.unit_one(f.src);
        r.require(c.at(u, f) == k.id2(f) && c.at(f, u) == k.id2(f), k.one_name(f));
    }
    return r;
}

bool ybo_equal_on(const TwoYbo& a, const TwoYbo& b, const std::vector<One>& probe) {
    for (const One& g : probe)
        for (const One& f : probe) {
            if (g.src != g.dst || f.src != f.dst || g.src != f.src) continue;
            if (!(a.at(g, f) == b.at(g, f))) return false;
        }
    return true;
}

}  // namespace catcenter
