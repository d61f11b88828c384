#include "catcenter/functor2.hpp"

#include <stdexcept>

namespace catcenter {

namespace {

struct OnePair {
    One g, f;  // composable: g after f
};

std::vector<OnePair> composable_pairs(const TwoCat& k) {
    std::vector<OnePair> out;
    for (int a = 0; a < k.zero_cells(); ++a)
        for (int b = 0; b < k.zero_cells(); ++b)
            for (int c = 0; c < k.zero_cells(); ++c)
                for (const One& g : k.one_cells(b, c))
                    for (const One& f : k.one_cells(a, b)) out.push_back(OnePair{g, f});
    return out;
}

std::vector<One> all_one_cells(const TwoCat& k) {
    std::vector<One> out;
    for (int a = 0; a < k.zero_cells(); ++a)
        for (int b = 0; b < k.zero_cells(); ++b)
            for (const One& f : k.one_cells(a, b)) out.push_back(f);
    return out;
}

std::vector<Two> all_two_cells(const TwoCat& k, int a, int b) {
    std::vector<Two> out;
    for (const One& f : k.one_cells(a, b))
        for (const One& g : k.one_cells(a, b))
            for (const Two& t : k.two_cells(f, g)) out.push_back(t);
    return out;
}

}  // namespace

Two Functor2::lax2(const One&, const One&) const {
    throw std::logic_error("functor has no lax structure");
}
Two Functor2::lax0(int) const { throw std::logic_error("functor has no lax structure"); }
Two Functor2::colax2(const One&, const One&) const {
    throw std::logic_error("functor has no colax structure");
}
Two Functor2::colax0(int) const { throw std::logic_error("functor has no colax structure"); }

Two TableFunctor2::lax2(const One& g, const One& f) const {
    if (!lax) return Functor2::lax2(g, f);
    return lax2_map[f.src][f.dst][g.dst][g.v][f.v];
}
Two TableFunctor2::lax0(int a) const {
    if (!lax) return Functor2::lax0(a);
    return lax0_map[a];
}
Two TableFunctor2::colax2(const One& g, const One& f) const {
    if (!colax) return Functor2::colax2(g, f);
    return colax2_map[f.src][f.dst][g.dst][g.v][f.v];
}
Two TableFunctor2::colax0(int a) const {
    if (!colax) return Functor2::colax0(a);
    return colax0_map[a];
}

TableFunctor2 materialize_functor2(
    const TwoCat& src, const TwoCat& dst, bool lax, bool colax, bool pseudo,
    const std::function<int(int)>& obj, const std::function<One(const One&)>& one,
    const std::function<Two(const Two&)>& two,
    const std::function<Two(const One&, const One&)>& lax2, const std::function<Two(int)>& lax0,
    const std::function<Two(const One&, const One&)>& colax2,
    const std::function<Two(int)>& colax0) {
    TableFunctor2 F;
    F.src = &src;
    F.dst = &dst;
    F.lax = lax;
    F.colax = colax;
    F.pseudo = pseudo;
    const int n0 = src.zero_cells();
    for (int a = 0; a < n0; ++a) F.obj_map.push_back(obj(a));
    F.one_map.assign(n0, std::vector<std::vector<One>>(n0));
    F.two_map.assign(n0, std::vector<std::vector<Two>>(n0));
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b) {
            for (const One& f : src.one_cells(a, b)) F.one_map[a][b].push_back(one(f));
            for (const One& f : src.one_cells(a, b))
                for (const One& g : src.one_cells(a, b))
                    for (const Two& t : src.two_cells(f, g)) {
                        auto& v = F.two_map[a][b];
                        if (static_cast<long long>(v.size()) <= t.v) v.resize(t.v + 1);
                        v[t.v] = two(t);
                    }
        }
    if (lax || colax) {
        auto shape = [&](auto& m) {
            m.assign(n0, {});
            for (int a = 0; a < n0; ++a) {
                m[a].assign(n0, {});
                for (int b = 0; b < n0; ++b) m[a][b].assign(n0, {});
            }
        };
        shape(F.lax2_map);
        shape(F.colax2_map);
        for (int a = 0; a < n0; ++a)
            for (int b = 0; b < n0; ++b)
                for (int c = 0; c < n0; ++c) {
                    auto gs = src.one_cells(b, c);
                    auto fs = src.one_cells(a, b);
                    auto& l = F.lax2_map[a][b][c];
                    auto& cl = F.colax2_map[a][b][c];
                    l.assign(gs.size(), std::vector<Two>(fs.size()));
                    cl.assign(gs.size(), std::vector<Two>(fs.size()));
                    for (std::size_t g = 0; g < gs.size(); ++g)
                        for (std::size_t f = 0; f < fs.size(); ++f) {
                            if (lax) l[g][f] = lax2(gs[g], fs[f]);
                            if (colax) cl[g][f] = colax2(gs[g], fs[f]);
                        }
                }
        for (int a = 0; a < n0; ++a) {
            if (lax) F.lax0_map.push_back(lax0(a));
            if (colax) F.colax0_map.push_back(colax0(a));
        }
    }
    return F;
}

TableFunctor2 identity_functor2(const TwoCat& k) {
    return materialize_functor2(
        k, k, true, true, true, [](int a) { return a; }, [](const One& f) { return f; },
        [](const Two& t) { return t; },
        [&k](const One& g, const One& f) { return k.id2(k.hcomp1(g, f)); },
        [&k](int a) { return k.id2(k.unit_one(a)); },
        [&k](const One& g, const One& f) { return k.id2(k.hcomp1(g, f)); },
        [&k](int a) { return k.id2(k.unit_one(a)); });
}

TableFunctor2 deloop_monfunctor(const LaxMonFunctor& f, const TableTwoCat& src_deloop,
                                const TableTwoCat& dst_twocat, int dst_cell) {
    const int d = dst_cell;
    auto mk2 = [&](int mor) { return dst_twocat.make2(d, d, mor); };
    return materialize_functor2(
        src_deloop, dst_twocat, true, f.strong, f.strong, [d](int) { return d; },
        [&, d](const One& x) { return One{d, d, f.obj[x.v]}; },
        [&](const Two& u) { return mk2(f.mor[u.v]); },
        [&](const One& g, const One& x) { return mk2(f.lax2[g.v][x.v]); },
        [&](int) { return mk2(f.lax0); },
        [&](const One& g, const One& x) {
            return f.strong ? mk2(f.colax2[g.v][x.v]) : Two{};
        },
        [&](int) { return f.strong ? mk2(f.colax0) : Two{}; });
}

FnFunctor2 compose_functor2(const Functor2& g, const Functor2& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose_functor2: not composable");
    FnFunctor2 r;
    r.src = f.src;
    r.dst = g.dst;
    r.lax = f.lax && g.lax;
    r.colax = f.colax && g.colax;
    r.pseudo = f.pseudo && g.pseudo;
    const Functor2 *pf = &f, *pg = &g;
    const TwoCat* dk = g.dst;
    r.obj_fn = [pf, pg](int a) { return pg->obj(pf->obj(a)); };
    r.one_fn = [pf, pg](const One& x) { return pg->one(pf->one(x)); };
    r.two_fn = [pf, pg](const Two& t) { return pg->two(pf->two(t)); };
    r.lax2_fn = [pf, pg, dk](const One& x, const One& y) {
        return dk->vcomp(pg->two(pf->lax2(x, y)), pg->lax2(pf->one(x), pf->one(y)));
    };
    r.lax0_fn = [pf, pg, dk](int a) {
        return dk->vcomp(pg->two(pf->lax0(a)), pg->lax0(pf->obj(a)));
    };
    r.colax2_fn = [pf, pg, dk](const One& x, const One& y) {
        return dk->vcomp(pg->colax2(pf->one(x), pf->one(y)), pg->two(pf->colax2(x, y)));
    };
    r.colax0_fn = [pf, pg, dk](int a) {
        return dk->vcomp(pg->colax0(pf->obj(a)), pg->two(pf->colax0(a)));
    };
    return r;
}

bool functor2_equal_on_domain(const Functor2& a, const Functor2& b) {
    if (a.src != b.src) return false;
    const TwoCat& k = *a.src;
    for (int z = 0; z < k.zero_cells(); ++z)
        if (a.obj(z) != b.obj(z)) return false;
    for (const One& f : all_one_cells(k))
        if (!(a.one(f) == b.one(f))) return false;
    for (int x = 0; x < k.zero_cells(); ++x)
        for (int y = 0; y < k.zero_cells(); ++y)
            for (const Two& t : all_two_cells(k, x, y))
                if (!(a.two(t) == b.two(t))) return false;
    if (a.lax && b.lax) {
        for (const auto& p : composable_pairs(k))
            if (!(a.lax2(p.g, p.f) == b.lax2(p.g, p.f))) return false;
        for (int z = 0; z < k.zero_cells(); ++z)
            if (!(a.lax0(z) == b.lax0(z))) return false;
    } else if (a.lax != b.lax) {
        return false;
    }
    if (a.colax && b.colax) {
        for (const auto& p : composable_pairs(k))
            if (!(a.colax2(p.g, p.f) == b.colax2(p.g, p.f))) return false;
        for (int z = 0; z < k.zero_cells(); ++z)
            if (!(a.colax0(z) == b.colax0(z))) return false;
    } else if (a.colax != b.colax) {
        return false;
    }
    return true;
}

Report check_functor2(const Functor2& F) {
    Report r("functor2");
    const TwoCat& s = *F.src;
    const TwoCat& d = *F.dst;

    r.begin("local-functoriality");
    for (int a = 0; a < s.zero_cells(); ++a)
        for (int b = 0; b < s.zero_cells(); ++b) {
            for (const One& f : s.one_cells(a, b)) {
                One im = F.one(f);
                r.require(im.src == F.obj(a) && im.dst == F.obj(b),
                          "image of " + s.one_name(f) + " between wrong 0-cells");
                r.require(F.two(s.id2(f)) == d.id2(im), "id2 at " + s.one_name(f));
            }
            auto twos = all_two_cells(s, a, b);
            for (const Two& t : twos)
                r.require(F.two(t).from == F.one(t.from) && F.two(t).to == F.one(t.to),
                          "2-cell image endpoints at " + s.two_name(t));
            for (const Two& u : twos)
                for (const Two& t : twos) {
                    if (!(t.to == u.from)) continue;
                    r.require(F.two(s.vcomp(u, t)) == d.vcomp(F.two(u), F.two(t)),
                              "vertical composition at " + s.two_name(u) + "." + s.two_name(t));
                }
        }

    auto pairs = composable_pairs(s);

    if (F.lax) {
        r.begin("lax-cell-endpoints");
        for (const auto& p : pairs) {
            Two c = F.lax2(p.g, p.f);
            r.require(c.from == d.hcomp1(F.one(p.g), F.one(p.f)) &&
                          c.to == F.one(s.hcomp1(p.g, p.f)),
                      "F2(" + s.one_name(p.g) + "," + s.one_name(p.f) + ")");
        }
        for (int a = 0; a < s.zero_cells(); ++a) {
            Two c = F.lax0(a);
            r.require(c.from == d.unit_one(F.obj(a)) && c.to == F.one(s.unit_one(a)),
                      "F0(" + std::to_string(a) + ")");
        }
        if (!r.ok()) return r;

        r.begin("lax-naturality");
        for (int a = 0; a < s.zero_cells(); ++a)
            for (int b = 0; b < s.zero_cells(); ++b)
                for (int c = 0; c < s.zero_cells(); ++c)
                    for (const Two& be : all_two_cells(s, b, c))
                        for (const Two& al : all_two_cells(s, a, b)) {
                            Two lhs = d.vcomp(F.lax2(be.to, al.to),
                                              hrow(d, {F.two(be), F.two(al)}));
                            Two rhs = d.vcomp(F.two(s.hcomp2(be, al)), F.lax2(be.from, al.from));
                            r.require(lhs == rhs, s.two_name(be) + "," + s.two_name(al));
                        }

        r.begin("lax-associativity");
        for (int a = 0; a < s.zero_cells(); ++a)
            for (int b = 0; b < s.zero_cells(); ++b)
                for (int c = 0; c < s.zero_cells(); ++c)
                    for (int e = 0; e < s.zero_cells(); ++e)
                        for (const One& h : s.one_cells(c, e))
                            for (const One& g : s.one_cells(b, c))
                                for (const One& f : s.one_cells(a, b)) {
                                    Two lhs = d.vcomp(F.lax2(s.hcomp1(h, g), f),
                                                      hrow(d, {F.lax2(h, g), d.id2(F.one(f))}));
                                    Two rhs = d.vcomp(F.lax2(h, s.hcomp1(g, f)),
                                                      hrow(d, {d.id2(F.one(h)), F.lax2(g, f)}));
                                    r.require(lhs == rhs, s.one_name(h) + "," + s.one_name(g) +
                                                              "," + s.one_name(f));
                                }

        r.begin("lax-unitality");
        for (const One& f : all_one_cells(s)) {
            Two idf = d.id2(F.one(f));
            Two right = d.vcomp(F.lax2(f, s.unit_one(f.src)), hrow(d, {idf, F.lax0(f.src)}));
            Two left = d.vcomp(F.lax2(s.unit_one(f.dst), f), hrow(d, {F.lax0(f.dst), idf}));
            r.require(right == idf && left == idf, s.one_name(f));
        }
    }

    if (F.colax) {
        r.begin("colax-cell-endpoints");
        for (const auto& p : pairs) {
            Two c = F.colax2(p.g, p.f);
            r.require(c.from == F.one(s.hcomp1(p.g, p.f)) &&
                          c.to == d.hcomp1(F.one(p.g), F.one(p.f)),
                      "F2c(" + s.one_name(p.g) + "," + s.one_name(p.f) + ")");
        }
        for (int a = 0; a < s.zero_cells(); ++a) {
            Two c = F.colax0(a);
            r.require(c.from == F.one(s.unit_one(a)) && c.to == d.unit_one(F.obj(a)),
                      "F0c(" + std::to_string(a) + ")");
        }
        if (!r.ok()) return r;

        r.begin("colax-naturality");
        for (int a = 0; a < s.zero_cells(); ++a)
            for (int b = 0; b < s.zero_cells(); ++b)
                for (int c = 0; c < s.zero_cells(); ++c)
                    for (const Two& be : all_two_cells(s, b, c))
                        for (const Two& al : all_two_cells(s, a, b)) {
                            Two lhs = d.vcomp(hrow(d, {F.two(be), F.two(al)}),
                                              F.colax2(be.from, al.from));
                            Two rhs = d.vcomp(F.colax2(be.to, al.to), F.two(s.hcomp2(be, al)));
                            r.require(lhs == rhs, s.two_name(be) + "," + s.two_name(al));
                        }

        r.begin("colax-coassociativity");
        for (int a = 0; a < s.zero_cells(); ++a)
            for (int b = 0; b < s.zero_cells(); ++b)
                for (int c = 0; c < s.zero_cells(); ++c)
                    for (int e = 0; e < s.zero_cells(); ++e)
                        for (const One& h : s.one_cells(c, e))
                            for (const One& g : s.one_cells(b, c))
                                for (const One& f : s.one_cells(a, b)) {
                                    Two lhs = d.vcomp(hrow(d, {F.colax2(h, g), d.id2(F.one(f))}),
                                                      F.colax2(s.hcomp1(h, g), f));
                                    Two rhs = d.vcomp(hrow(d, {d.id2(F.one(h)), F.colax2(g, f)}),
                                                      F.colax2(h, s.hcomp1(g, f)));
                                    r.require(lhs == rhs, s.one_name(h) + "," + s.one_name(g) +
                                                              "," + s.one_name(f));
                                }

        r.begin("colax-counitality");
        for (const One& f : all_one_cells(s)) {
            Two idf = d.id2(F.one(f));
            Two right = d.vcomp(hrow(d, {idf, F.colax0(f.src)}), F.colax2(f, s.unit_one(f.src)));
            Two left = d.vcomp(hrow(d, {F.colax0(f.dst), idf}), F.colax2(s.unit_one(f.dst), f));
            r.require(right == idf && left == idf, s.one_name(f));
        }
    }

    if (F.pseudo) {
        r.begin("pseudo-invertibility");
        for (const auto& p : pairs) {
            Two fw = F.lax2(p.g, p.f), bw = F.colax2(p.g, p.f);
            r.require(d.vcomp(fw, bw) == d.id2(fw.to) && d.vcomp(bw, fw) == d.id2(fw.from),
                      "F2 at (" + s.one_name(p.g) + "," + s.one_name(p.f) + ")");
        }
        for (int a = 0; a < s.zero_cells(); ++a) {
            Two fw = F.lax0(a), bw = F.colax0(a);
            r.require(d.vcomp(fw, bw) == d.id2(fw.to) && d.vcomp(bw, fw) == d.id2(fw.from),
                      "F0 at " + std::to_string(a));
        }
    }
    return r;
}

Transformation2 identity_transformation2(const Functor2& f, Transformation2::Kind kind) {
    Transformation2 t;
    t.kind = kind;
    t.F = t.G = &f;
    const TwoCat& s = *f.src;
    const TwoCat& d = *f.dst;
    const int n0 = s.zero_cells();
    for (int a = 0; a < n0; ++a) t.one.push_back(d.unit_one(f.obj(a)));
    t.two.assign(n0, std::vector<std::vector<Two>>(n0));
    t.two_inv.assign(n0, std::vector<std::vector<Two>>(n0));
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
            for (const One& x : s.one_cells(a, b)) {
                t.two[a][b].push_back(d.id2(f.one(x)));
                t.two_inv[a][b].push_back(d.id2(f.one(x)));
            }
    t.has_inv = true;
    return t;
}

Report check_transformation2(const Transformation2& t) {
    Report r("transformation2");
    const Functor2& F = *t.F;
    const Functor2& G = *t.G;
    const TwoCat& s = *F.src;
    const TwoCat& d = *F.dst;
    const bool colax = t.kind == Transformation2::Colax;

    r.begin("well-formed");
    r.require(F.src == G.src && F.dst == G.dst, "functors not parallel");
    if (!r.ok()) return r;
    for (int a = 0; a < s.zero_cells(); ++a)
        r.require(t.one[a].src == F.obj(a) && t.one[a].dst == G.obj(a),
                  "1-cell component at " + std::to_string(a));
    for (const One& f : all_one_cells(s)) {
        const Two& c = t.at(f);
        One lhs = colax ? d.hcomp1(t.one[f.dst], F.one(f)) : d.hcomp1(G.one(f), t.one[f.src]);
        One rhs = colax ? d.hcomp1(G.one(f), t.one[f.src]) : d.hcomp1(t.one[f.dst], F.one(f));
        r.require(c.from == lhs && c.to == rhs, "2-cell component at " + s.one_name(f));
    }
    if (!r.ok()) return r;

    r.begin("naturality");
    for (int a = 0; a < s.zero_cells(); ++a)
        for (int b = 0; b < s.zero_cells(); ++b)
            for (const One& f : s.one_cells(a, b))
                for (const One& g : s.one_cells(a, b))
                    for (const Two& al : s.two_cells(f, g)) {
                        Two lhs, rhs;
                        if (colax) {
                            lhs = d.vcomp(t.at(g), hrow(d, {d.id2(t.one[b]), F.two(al)}));
                            rhs = d.vcomp(hrow(d, {G.two(al), d.id2(t.one[a])}), t.at(f));
                        } else {
                            lhs = d.vcomp(hrow(d, {d.id2(t.one[b]), F.two(al)}), t.at(f));
                            rhs = d.vcomp(t.at(g), hrow(d, {G.two(al), d.id2(t.one[a])}));
                        }
                        r.require(lhs == rhs, s.two_name(al));
                    }

    auto pairs = composable_pairs(s);

    if (F.lax && G.lax && t.wrt_lax) {
        if (colax) {
            r.begin("colax-multiplicativity");
            for (const auto& p : pairs) {
                const One &g = p.g, &f = p.f;
                int A = f.src, C = g.dst;
                Two lhs = vseq(d, {hrow(d, {t.at(g), d.id2(F.one(f))}),
                                   hrow(d, {d.id2(G.one(g)), t.at(f)}),
                                   hrow(d, {G.lax2(g, f), d.id2(t.one[A])})});
                Two rhs = vseq(d, {hrow(d, {d.id2(t.one[C]), F.lax2(g, f)}),
                                   t.at(s.hcomp1(g, f))});
                r.require(lhs == rhs, "(" + s.one_name(g) + "," + s.one_name(f) + ")");
            }
            r.begin("colax-unitality");
            for (int a = 0; a < s.zero_cells(); ++a) {
                Two lhs = vseq(d, {hrow(d, {d.id2(t.one[a]), F.lax0(a)}), t.at(s.unit_one(a))});
                Two rhs = hrow(d, {G.lax0(a), d.id2(t.one[a])});
                r.require(lhs == rhs, std::to_string(a));
            }
        } else {
            r.begin("lax-multiplicativity");
            for (const auto& p : pairs) {
                const One &g = p.g, &f = p.f;
                int A = f.src, C = g.dst;
                Two lhs = vseq(d, {hrow(d, {d.id2(G.one(g)), t.at(f)}),
                                   hrow(d, {t.at(g), d.id2(F.one(f))}),
                                   hrow(d, {d.id2(t.one[C]), F.lax2(g, f)})});
                Two rhs = vseq(d, {hrow(d, {G.lax2(g, f), d.id2(t.one[A])}),
                                   t.at(s.hcomp1(g, f))});
                r.require(lhs == rhs, "(" + s.one_name(g) + "," + s.one_name(f) + ")");
            }
            r.begin("lax-unitality");
            for (int a = 0; a < s.zero_cells(); ++a) {
                Two lhs = vseq(d, {hrow(d, {G.lax0(a), d.id2(t.one[a])}), t.at(s.unit_one(a))});
                Two rhs = hrow(d, {d.id2(t.one[a]), F.lax0(a)});
                r.require(lhs == rhs, std::to_string(a));
            }
        }
    }

    if (F.colax && G.colax && t.wrt_colax) {
        if (colax) {
            r.begin("colax-distributivity");
            for (const auto& p : pairs) {
                const One &g = p.g, &f = p.f;
                int A = f.src, C = g.dst;
                Two lhs = vseq(d, {hrow(d, {d.id2(t.one[C]), F.colax2(g, f)}),
                                   hrow(d, {t.at(g), d.id2(F.one(f))}),
                                   hrow(d, {d.id2(G.one(g)), t.at(f)})});
                Two rhs = vseq(d, {t.at(s.hcomp1(g, f)),
                                   hrow(d, {G.colax2(g, f), d.id2(t.one[A])})});
                r.require(lhs == rhs, "(" + s.one_name(g) + "," + s.one_name(f) + ")");
            }
            r.begin("colax-counit");
            for (int a = 0; a < s.zero_cells(); ++a) {
                Two lhs = vseq(d, {t.at(s.unit_one(a)), hrow(d, {G.colax0(a), d.id2(t.one[a])})});
                Two rhs = hrow(d, {d.id2(t.one[a]), F.colax0(a)});
                r.require(lhs == rhs, std::to_string(a));
            }
        } else {
            r.begin("lax-distributivity");
            for (const auto& p : pairs) {
                const One &g = p.g, &f = p.f;
                int A = f.src, C = g.dst;
                Two lhs = vseq(d, {hrow(d, {G.colax2(g, f), d.id2(t.one[A])}),
                                   hrow(d, {d.id2(G.one(g)), t.at(f)}),
                                   hrow(d, {t.at(g), d.id2(F.one(f))})});
                Two rhs = vseq(d, {t.at(s.hcomp1(g, f)),
                                   hrow(d, {d.id2(t.one[C]), F.colax2(g, f)})});
                r.require(lhs == rhs, "(" + s.one_name(g) + "," + s.one_name(f) + ")");
            }
            r.begin("lax-counit");
            for (int a = 0; a < s.zero_cells(); ++a) {
                Two lhs = vseq(d, {t.at(s.unit_one(a)), hrow(d, {d.id2(t.one[a]), F.colax0(a)})});
                Two rhs = hrow(d, {G.colax0(a), d.id2(t.one[a])});
                r.require(lhs == rhs, std::to_string(a));
            }
        }
    }

    if (t.has_inv) {
        r.begin("pseudonatural-inverses");
        for (const One& f : all_one_cells(s)) {
            const Two &fw = t.at(f), &bw = t.inv_at(f);
            r.require(d.vcomp(fw, bw) == d.id2(fw.to) && d.vcomp(bw, fw) == d.id2(fw.from),
                      s.one_name(f));
        }
    }
    return r;
}

Transformation2 vcompose_transformations(const Transformation2& t2, const Transformation2& t1) {
    if (t1.kind != t2.kind || t1.G != t2.F)
        throw std::invalid_argument("vcompose_transformations: not composable");
    const TwoCat& s = *t1.F->src;
    const TwoCat& d = *t1.F->dst;
    Transformation2 r;
    r.kind = t1.kind;
    r.F = t1.F;
    r.G = t2.G;
    r.wrt_lax = t1.wrt_lax && t2.wrt_lax;
    r.wrt_colax = t1.wrt_colax && t2.wrt_colax;
    const int n0 = s.zero_cells();
    for (int a = 0; a < n0; ++a) r.one.push_back(d.hcomp1(t2.one[a], t1.one[a]));
    r.two.assign(n0, std::vector<std::vector<Two>>(n0));
    const bool colax = t1.kind == Transformation2::Colax;
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
            for (const One& f : s.one_cells(a, b)) {
                Two c;
                if (colax)
                    c = vseq(d, {hrow(d, {d.id2(t2.one[b]), t1.at(f)}),
                                 hrow(d, {t2.at(f), d.id2(t1.one[a])})});
                else
                    c = vseq(d, {hrow(d, {t2.at(f), d.id2(t1.one[a])}),
                                 hrow(d, {d.id2(t2.one[b]), t1.at(f)})});
                r.two[a][b].push_back(c);
            }
    if (t1.has_inv && t2.has_inv) {
        r.two_inv.assign(n0, std::vector<std::vector<Two>>(n0));
        for (int a = 0; a < n0; ++a)
            for (int b = 0; b < n0; ++b)
                for (const One& f : s.one_cells(a, b)) {
                    Two c;
                    if (colax)
                        c = vseq(d, {hrow(d, {t2.inv_at(f), d.id2(t1.one[a])}),
                                     hrow(d, {d.id2(t2.one[b]), t1.inv_at(f)})});
                    else
                        c = vseq(d, {hrow(d, {d.id2(t2.one[b]), t1.inv_at(f)}),
                                     hrow(d, {t2.inv_at(f), d.id2(t1.one[a])})});
                    r.two_inv[a][b].push_back(c);
                }
        r.has_inv = true;
    }
    return r;
}

Transformation2 hcompose_transformations(const Transformation2& t2, const Transformation2& t1) {
    // t1: F => G : K -> K', t2: F' => G' : K' -> K''
    const Functor2& F1 = *t1.F;
    const Functor2& G1 = *t1.G;
    const Functor2& Fp = *t2.F;
    if (t1.kind != t2.kind) throw std::invalid_argument("hcompose: kind mismatch");
    if (!(F1.pseudo && G1.pseudo && Fp.pseudo && t2.G->pseudo))
        throw std::invalid_argument(
            "hcompose: requires pseudofunctors (the pasting uses both the lax structure and "
            "its inverse)");
    const TwoCat& s = *F1.src;
    const TwoCat& dd = *Fp.dst;
    Transformation2 r;
    r.kind = t1.kind;
    r.F = nullptr;  // composite functors are owned by the caller
    r.G = nullptr;
    const int n0 = s.zero_cells();
    const bool colax = t1.kind == Transformation2::Colax;
    for (int a = 0; a < n0; ++a)
        r.one.push_back(dd.hcomp1(t2.one[G1.obj(a)], Fp.one(t1.one[a])));
    r.two.assign(n0, std::vector<std::vector<Two>>(n0));
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
            for (const One& f : s.one_cells(a, b)) {
                One Gf = G1.one(f);
                Two c;
                if (colax) {
                    c = vseq(dd, {hrow(dd, {dd.id2(t2.one[G1.obj(b)]),
                                            Fp.lax2(t1.one[b], F1.one(f))}),
                                  hrow(dd, {dd.id2(t2.one[G1.obj(b)]), Fp.two(t1.at(f))}),
                                  hrow(dd, {dd.id2(t2.one[G1.obj(b)]),
                                            Fp.colax2(Gf, t1.one[a])}),
                                  hrow(dd, {t2.at(Gf), dd.id2(Fp.one(t1.one[a]))})});
                } else {
                    c = vseq(dd, {hrow(dd, {t2.at(Gf), dd.id2(Fp.one(t1.one[a]))}),
                                  hrow(dd, {dd.id2(t2.one[G1.obj(b)]),
                                            Fp.lax2(Gf, t1.one[a])}),
                                  hrow(dd, {dd.id2(t2.one[G1.obj(b)]), Fp.two(t1.at(f))}),
                                  hrow(dd, {dd.id2(t2.one[G1.obj(b)]),
                                            Fp.colax2(t1.one[b], F1.one(f))})});
                }
                r.two[a][b].push_back(c);
            }
    return r;
}

std::vector<Transformation2> enumerate_transformations(const Functor2& f, const Functor2& g,
                                                       Transformation2::Kind kind) {
    const TwoCat& s = *f.src;
    const TwoCat& d = *f.dst;
    const int n0 = s.zero_cells();
    std::vector<Transformation2> out;

    std::vector<std::vector<One>> one_choices(n0);
    for (int a = 0; a < n0; ++a) one_choices[a] = d.one_cells(f.obj(a), g.obj(a));

    std::vector<One> ones(n0);
    std::vector<int> pick(n0, 0);
    // odometer over 1-cell components, then over 2-cell components
    std::function<void(int)> choose_ones = [&](int a) {
        if (a == n0) {
            std::vector<One> flat;
            std::vector<std::vector<Two>> cand;
            for (int x = 0; x < n0; ++x)
                for (int y = 0; y < n0; ++y)
                    for (const One& h : s.one_cells(x, y)) {
                        flat.push_back(h);
                        One from = kind == Transformation2::Colax
                                       ? d.hcomp1(ones[y], f.one(h))
                                       : d.hcomp1(g.one(h), ones[x]);
                        One to = kind == Transformation2::Colax
                                     ? d.hcomp1(g.one(h), ones[x])
                                     : d.hcomp1(ones[y], f.one(h));
                        cand.push_back(d.two_cells(from, to));
                    }
            std::vector<std::size_t> idx(flat.size(), 0);
            bool feasible = true;
            for (const auto& c : cand) feasible = feasible && !c.empty();
            if (!feasible) return;
            while (true) {
                Transformation2 t;
                t.kind = kind;
                t.F = &f;
                t.G = &g;
                t.one = ones;
                t.two.assign(n0, std::vector<std::vector<Two>>(n0));
                for (std::size_t i = 0; i < flat.size(); ++i) {
                    const One& h = flat[i];
                    t.two[h.src][h.dst].push_back(cand[i][idx[i]]);
                }
                if (check_transformation2(t).ok()) out.push_back(std::move(t));
                std::size_t k = 0;
                for (; k < idx.size(); ++k) {
                    if (++idx[k] < cand[k].size()) break;
                    idx[k] = 0;
                }
                if (k == idx.size()) break;
            }
            return;
        }
        for (const One& c : one_choices[a]) {
            ones[a] = c;
            choose_ones(a + 1);
        }
    };
    choose_ones(0);
    return out;
}

Report check_modification2(const Modification2& m) {
    Report r("modification2");
    const Transformation2& s = *m.src;
    const Transformation2& t = *m.dst;
    const Functor2& F = *s.F;
    const Functor2& G = *s.G;
    const TwoCat& dom = *F.src;
    const TwoCat& d = *F.dst;

    r.begin("well-formed");
    r.require(s.kind == t.kind && s.F == t.F && s.G == t.G, "transformations not parallel");
    if (!r.ok()) return r;
    for (int a = 0; a < dom.zero_cells(); ++a)
        r.require(m.comp[a].from == s.one[a] && m.comp[a].to == t.one[a],
                  "component at " + std::to_string(a));
    if (!r.ok()) return r;

    r.begin("modification-condition");
    for (int a = 0; a < dom.zero_cells(); ++a)
        for (int b = 0; b < dom.zero_cells(); ++b)
            for (const One& f : dom.one_cells(a, b)) {
                Two lhs, rhs;
                if (s.kind == Transformation2::Colax) {
                    lhs = d.vcomp(hrow(d, {d.id2(G.one(f)), m.comp[a]}), s.at(f));
                    rhs = d.vcomp(t.at(f), hrow(d, {m.comp[b], d.id2(F.one(f))}));
                } else {
                    lhs = d.vcomp(hrow(d, {m.comp[b], d.id2(F.one(f))}), s.at(f));
                    rhs = d.vcomp(t.at(f), hrow(d, {d.id2(G.one(f)), m.comp[a]}));
                }
                r.require(lhs == rhs, dom.one_name(f));
            }
    return r;
}

std::vector<Modification2> enumerate_modifications2(const Transformation2& s,
                                                    const Transformation2& t) {
    const TwoCat& dom = *s.F->src;
    const TwoCat& d = *s.F->dst;
    const int n0 = dom.zero_cells();
    std::vector<std::vector<Two>> cand(n0);
    for (int a = 0; a < n0; ++a) cand[a] = d.two_cells(s.one[a], t.one[a]);
    std::vector<Modification2> out;
    for (const auto& c : cand)
        if (c.empty()) return out;
    std::vector<std::size_t> idx(n0, 0);
    while (true) {
        Modification2 m;
        m.src = &s;
        m.dst = &t;
        for (int a = 0; a < n0; ++a) m.comp.push_back(cand[a][idx[a]]);
        if (check_modification2(m).ok()) out.push_back(std::move(m));
        int k = 0;
        for (; k < n0; ++k) {
            if (++idx[k] < cand[k].size()) break;
            idx[k] = 0;
        }
        if (k == n0) break;
    }
    return out;
}

FinCategory transformation_category(const Functor2& f, const Functor2& g,
                                    Transformation2::Kind kind,
                                    std::vector<Transformation2>* objects_out) {
    auto objs = enumerate_transformations(f, g, kind);
    const TwoCat& d = *f.dst;
    FinCategory c;
    for (std::size_t i = 0; i < objs.size(); ++i) c.add_object("t" + std::to_string(i));
    struct MorRec {
        int src, dst;
        std::vector<Two> comp;
    };
    std::vector<MorRec> mors;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            for (const auto& m : enumerate_modifications2(objs[i], objs[j])) {
                mors.push_back(MorRec{static_cast<int>(i), static_cast<int>(j), m.comp});
                c.add_morphism("m" + std::to_string(mors.size() - 1), static_cast<int>(i),
                               static_cast<int>(j));
            }
    auto find_mor = [&](int src, int dst, const std::vector<Two>& comp) {
        for (std::size_t k = 0; k < mors.size(); ++k)
            if (mors[k].src == src && mors[k].dst == dst && mors[k].comp == comp)
                return static_cast<int>(k);
        return -1;
    };
    for (std::size_t i = 0; i < objs.size(); ++i) {
        std::vector<Two> idc;
        for (const One& o : objs[i].one) idc.push_back(d.id2(o));
        c.set_identity(static_cast<int>(i), find_mor(static_cast<int>(i), static_cast<int>(i), idc));
    }
    for (std::size_t a = 0; a < mors.size(); ++a)
        for (std::size_t b = 0; b < mors.size(); ++b) {
            if (mors[b].dst != mors[a].src) continue;  // a after b
            std::vector<Two> comp;
            for (std::size_t o = 0; o < mors[a].comp.size(); ++o)
                comp.push_back(d.vcomp(mors[a].comp[o], mors[b].comp[o]));
            c.set_compose(static_cast<int>(a), static_cast<int>(b),
                          find_mor(mors[b].src, mors[a].dst, comp));
        }
    c.finalize();
    if (objects_out) *objects_out = std::move(objs);
    return c;
}

}  // namespace catcenter
