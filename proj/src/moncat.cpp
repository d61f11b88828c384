#include "catcenter/moncat.hpp"

#include <stdexcept>

namespace catcenter {

namespace {
std::string oname(const MonCat& m, int o) { return m.base.object_name(o); }
std::string mname(const MonCat& m, int f) { return m.base.mor(f).name; }
}  // namespace

MonCat group_moncat(const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& mult) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw std::invalid_argument("group_moncat: empty element set");
    if (static_cast<int>(mult.size()) != n)
        throw std::invalid_argument("group_moncat: table size mismatch");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group_moncat: table size mismatch");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group_moncat: dangling entry");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw std::invalid_argument("group_moncat: table not associative");
    int unit = -1;
    for (int e = 0; e < n; ++e) {
        bool is_unit = true;
        for (int a = 0; a < n; ++a) is_unit = is_unit && mult[e][a] == a && mult[a][e] == a;
        if (is_unit) {
            unit = e;
            break;
        }
    }
    if (unit < 0) throw std::invalid_argument("group_moncat: table has no unit");

    MonCat m;
    m.base = discrete_category(elements);
    m.unit = unit;
    m.tob = mult;
    m.tmor.assign(n, std::vector<int>(n));
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) m.tmor[f][g] = m.base.identity(mult[f][g]);
    return m;
}

MonCat poset_max_moncat() {
    MonCat m;
    m.base.add_object("0");
    m.base.add_object("1");
    int i0 = m.base.add_morphism("id_0", 0, 0);
    int i1 = m.base.add_morphism("id_1", 1, 1);
    int le = m.base.add_morphism("le", 0, 1);
    m.base.set_identity(0, i0);
    m.base.set_identity(1, i1);
    m.base.set_compose(le, i0, le);
    m.base.set_compose(i1, le, le);
    m.base.finalize();
    m.unit = 0;
    m.tob = {{0, 1}, {1, 1}};
    auto uniq = [&](int a, int b) {
        // thin category: the morphism a -> b, when it exists
        if (a == b) return m.base.identity(a);
        return le;
    };
    m.tmor.assign(3, std::vector<int>(3));
    for (int f = 0; f < 3; ++f)
        for (int g = 0; g < 3; ++g) {
            const auto &mf = m.base.mor(f), &mg = m.base.mor(g);
            m.tmor[f][g] = uniq(m.tob[mf.src][mg.src], m.tob[mf.dst][mg.dst]);
        }
    return m;
}

Report validate_moncat(const MonCat& m) {
    Report r("moncat");
    r.merge(validate_category(m.base));
    if (!r.ok()) return r;
    const int no = m.base.num_objects();
    const int nm = m.base.num_morphisms();

    r.begin("tensor-well-formed");
    bool shape = static_cast<int>(m.tob.size()) == no && static_cast<int>(m.tmor.size()) == nm &&
                 m.unit >= 0 && m.unit < no;
    r.require(shape, "tensor tables not total");
    if (shape) {
        for (const auto& row : m.tob) {
            r.require(static_cast<int>(row.size()) == no, "tensor_obj row not total");
            for (int v : row) r.require(v >= 0 && v < no, "tensor_obj dangling entry");
        }
        for (int f = 0; f < nm && r.ok(); ++f) {
            r.require(static_cast<int>(m.tmor[f].size()) == nm, "tensor_mor row not total");
            for (int g = 0; g < nm && r.ok(); ++g) {
                int fg = m.tmor[f][g];
                const auto &mf = m.base.mor(f), &mg = m.base.mor(g);
                bool ok = fg >= 0 && fg < nm && m.base.mor(fg).src == m.tob[mf.src][mg.src] &&
                          m.base.mor(fg).dst == m.tob[mf.dst][mg.dst];
                r.require(ok, "tensor_mor(" + mname(m, f) + "," + mname(m, g) + ") endpoints");
            }
        }
    }
    if (!r.ok()) return r;

    r.begin("strict-associativity");
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                r.require(m.tob[m.tob[a][b]][c] == m.tob[a][m.tob[b][c]],
                          "(" + oname(m, a) + "," + oname(m, b) + "," + oname(m, c) + ")");
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g)
            for (int h = 0; h < nm; ++h)
                r.require(m.tmor[m.tmor[f][g]][h] == m.tmor[f][m.tmor[g][h]],
                          "(" + mname(m, f) + "," + mname(m, g) + "," + mname(m, h) + ")");

    r.begin("strict-unit");
    for (int a = 0; a < no; ++a)
        r.require(m.tob[m.unit][a] == a && m.tob[a][m.unit] == a, oname(m, a));
    int idI = m.base.identity(m.unit);
    for (int f = 0; f < nm; ++f)
        r.require(m.tmor[idI][f] == f && m.tmor[f][idI] == f, mname(m, f));

    r.begin("tensor-functorial");
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            r.require(m.tmor[m.base.identity(a)][m.base.identity(b)] ==
                          m.base.identity(m.tob[a][b]),
                      "id(x)id at (" + oname(m, a) + "," + oname(m, b) + ")");
    // interchange: (g (x) g') . (f (x) f') = (g.f) (x) (g'.f')
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (!m.base.composable(g, f)) continue;
            for (int g2 = 0; g2 < nm; ++g2)
                for (int f2 = 0; f2 < nm; ++f2) {
                    if (!m.base.composable(g2, f2)) continue;
                    int lhs = m.base.compose(m.tmor[g][g2], m.tmor[f][f2]);
                    int rhs = m.tmor[m.base.compose(g, f)][m.base.compose(g2, f2)];
                    r.require(lhs == rhs && lhs >= 0, "(" + mname(m, g) + "," + mname(m, g2) +
                                                          ";" + mname(m, f) + "," + mname(m, f2) + ")");
                }
        }
    return r;
}

LaxMonFunctor LaxMonFunctor::identity(const MonCat& c) {
    LaxMonFunctor f;
    f.src = f.dst = &c;
    CatFunctor u = CatFunctor::identity(c.base);
    f.obj = u.obj;
    f.mor = u.mor;
    const int no = c.base.num_objects();
    f.lax2.assign(no, std::vector<int>(no));
    f.colax2.assign(no, std::vector<int>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) f.lax2[a][b] = f.colax2[a][b] = c.base.identity(c.tob[a][b]);
    f.lax0 = f.colax0 = c.base.identity(c.unit);
    f.strong = true;
    return f;
}

Report check_lax_monoidal(const LaxMonFunctor& f) {
    Report r("laxmon");
    const MonCat& s = *f.src;
    const MonCat& d = *f.dst;
    r.merge(check_functor(f.underlying()));
    if (!r.ok()) return r;
    const int no = s.base.num_objects();
    const FinCategory& db = d.base;

    auto endpoint_ok = [&](int cell, int src_obj, int dst_obj) {
        return cell >= 0 && cell < db.num_morphisms() && db.mor(cell).src == src_obj &&
               db.mor(cell).dst == dst_obj;
    };

    r.begin("structure-cells");
    bool shaped = static_cast<int>(f.lax2.size()) == no;
    r.require(shaped, "F2 table not total");
    if (shaped)
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b)
                r.require(endpoint_ok(f.lax2[a][b], d.tob[f.obj[a]][f.obj[b]], f.obj[s.tob[a][b]]),
                          "F2(" + oname(s, a) + "," + oname(s, b) + ") endpoints");
    r.require(endpoint_ok(f.lax0, d.unit, f.obj[s.unit]), "F0 endpoints");
    if (!r.ok()) return r;

    r.begin("F2-naturality");
    const int nm = s.base.num_morphisms();
    for (int u = 0; u < nm; ++u)
        for (int v = 0; v < nm; ++v) {
            const auto &mu = s.base.mor(u), &mv = s.base.mor(v);
            int lhs = db.compose(f.lax2[mu.dst][mv.dst], d.tmor[f.mor[u]][f.mor[v]]);
            int rhs = db.compose(f.mor[s.tmor[u][v]], f.lax2[mu.src][mv.src]);
            r.require(lhs == rhs && lhs >= 0, "(" + mname(s, u) + "," + mname(s, v) + ")");
        }

    r.begin("lax-associativity");
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c) {
                int lhs = db.compose(f.lax2[s.tob[a][b]][c],
                                     d.tmor[f.lax2[a][b]][db.identity(f.obj[c])]);
                int rhs = db.compose(f.lax2[a][s.tob[b][c]],
                                     d.tmor[db.identity(f.obj[a])][f.lax2[b][c]]);
                r.require(lhs == rhs && lhs >= 0,
                          "(" + oname(s, a) + "," + oname(s, b) + "," + oname(s, c) + ")");
            }

    r.begin("lax-unitality");
    for (int a = 0; a < no; ++a) {
        int fa = db.identity(f.obj[a]);
        int left = db.compose(f.lax2[s.unit][a], d.tmor[f.lax0][fa]);
        int right = db.compose(f.lax2[a][s.unit], d.tmor[fa][f.lax0]);
        r.require(left == fa && right == fa, oname(s, a));
    }

    if (f.strong) {
        r.begin("strong-inverses");
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b) {
                int fw = f.lax2[a][b], bw = f.colax2[a][b];
                bool ok = db.compose(fw, bw) == db.identity(db.mor(fw).dst) &&
                          db.compose(bw, fw) == db.identity(db.mor(fw).src);
                r.require(ok, "F2(" + oname(s, a) + "," + oname(s, b) + ") not invertible");
            }
        bool ok0 = db.compose(f.lax0, f.colax0) == db.identity(db.mor(f.lax0).dst) &&
                   db.compose(f.colax0, f.lax0) == db.identity(db.mor(f.lax0).src);
        r.require(ok0, "F0 not invertible");
    }
    return r;
}

LaxMonFunctor compose_lax_monoidal(const LaxMonFunctor& g, const LaxMonFunctor& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose_lax_monoidal: not composable");
    const MonCat& d = *g.dst;
    LaxMonFunctor r;
    r.src = f.src;
    r.dst = g.dst;
    for (int o : f.obj) r.obj.push_back(g.obj[o]);
    for (int m : f.mor) r.mor.push_back(g.mor[m]);
    const int no = f.src->base.num_objects();
    r.lax2.assign(no, std::vector<int>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            r.lax2[a][b] = d.base.compose(g.mor[f.lax2[a][b]], g.lax2[f.obj[a]][f.obj[b]]);
    r.lax0 = d.base.compose(g.mor[f.lax0], g.lax0);
    r.strong = f.strong && g.strong;
    if (r.strong) {
        r.colax2.assign(no, std::vector<int>(no));
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b)
                r.colax2[a][b] = d.base.compose(g.colax2[f.obj[a]][f.obj[b]], g.mor[f.colax2[a][b]]);
        r.colax0 = d.base.compose(g.colax0, g.mor[f.colax0]);
    }
    return r;
}

bool same_lax_monoidal(const LaxMonFunctor& a, const LaxMonFunctor& b) {
    return a.src == b.src && a.dst == b.dst && a.obj == b.obj && a.mor == b.mor &&
           a.lax2 == b.lax2 && a.lax0 == b.lax0;
}

LaxMonFunctor group_endomorphism_functor(const MonCat& c, const std::vector<int>& obj_map) {
    LaxMonFunctor f;
    f.src = f.dst = &c;
    f.obj = obj_map;
    f.mor.resize(c.base.num_morphisms());
    for (int o = 0; o < c.base.num_objects(); ++o)
        f.mor[c.base.identity(o)] = c.base.identity(obj_map[o]);
    const int no = c.base.num_objects();
    f.lax2.assign(no, std::vector<int>(no));
    f.colax2.assign(no, std::vector<int>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            f.lax2[a][b] = f.colax2[a][b] = c.base.identity(c.tob[obj_map[a]][obj_map[b]]);
    f.lax0 = f.colax0 = c.base.identity(c.unit);
    f.strong = true;
    return f;
}

Ybo1 identity_ybo1(const MonCat& c) {
    Ybo1 y;
    y.carrier = &c;
    const int no = c.base.num_objects();
    y.comp.assign(no, std::vector<int>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) y.comp[a][b] = c.base.identity(c.tob[a][b]);
    return y;
}

Report check_ybo1(const Ybo1& y) {
    Report r("ybo1");
    const MonCat& m = *y.carrier;
    const FinCategory& b = m.base;
    const int no = b.num_objects();

    r.begin("endpoints");
    for (int a = 0; a < no; ++a)
        for (int c = 0; c < no; ++c) {
            int cell = y.comp[a][c];
            bool ok = cell >= 0 && cell < b.num_morphisms() && b.mor(cell).src == m.tob[a][c] &&
                      b.mor(cell).dst == m.tob[c][a];
            r.require(ok, "c(" + oname(m, a) + "," + oname(m, c) + ")");
        }
    if (!r.ok()) return r;

    r.begin("naturality");
    for (int u = 0; u < b.num_morphisms(); ++u)
        for (int v = 0; v < b.num_morphisms(); ++v) {
            const auto &mu = b.mor(u), &mv = b.mor(v);
            int lhs = b.compose(y.comp[mu.dst][mv.dst], m.tmor[u][v]);
            int rhs = b.compose(m.tmor[v][u], y.comp[mu.src][mv.src]);
            r.require(lhs == rhs && lhs >= 0, "(" + mname(m, u) + "," + mname(m, v) + ")");
        }

    r.begin("yang-baxter");
    for (int h = 0; h < no; ++h)
        for (int g = 0; g < no; ++g)
            for (int f = 0; f < no; ++f) {
                auto idm = [&](int o) { return b.identity(o); };
                int lhs = b.compose(m.tmor[y.comp[g][f]][idm(h)],
                                    b.compose(m.tmor[idm(g)][y.comp[h][f]],
                                              m.tmor[y.comp[h][g]][idm(f)]));
                int rhs = b.compose(m.tmor[idm(f)][y.comp[h][g]],
                                    b.compose(m.tmor[y.comp[h][f]][idm(g)],
                                              m.tmor[idm(h)][y.comp[g][f]]));
                r.require(lhs == rhs && lhs >= 0,
                          "(" + oname(m, h) + "," + oname(m, g) + "," + oname(m, f) + ")");
            }

    r.begin("unit-normalized");
    for (int a = 0; a < no; ++a)
        r.require(y.comp[m.unit][a] == b.identity(a) && y.comp[a][m.unit] == b.identity(a),
                  oname(m, a));
    return r;
}

MatBackend::MatBackend(int prime, bool allow_large) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("MatBackend: p must be prime");
    if (prime > 7 && !allow_large)
        throw std::invalid_argument("MatBackend: p > 7 needs allow_large");
}

Report validate_matbackend(const MatBackend& m, const std::vector<FpMat>& pool) {
    Report r("matbackend");
    r.begin("pool-well-formed");
    for (std::size_t i = 0; i < pool.size(); ++i)
        r.require(pool[i].prime() == m.p, "pool[" + std::to_string(i) + "] wrong prime");
    if (!r.ok()) return r;

    r.begin("kron-associative");
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                r.require(kron(kron(a, b), c) == kron(a, kron(b, c)), "pool triple");

    r.begin("kron-functorial");
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                for (const auto& d : pool) {
                    if (a.cols() != c.rows() || b.cols() != d.rows()) continue;
                    r.require(kron(a, b) * kron(c, d) == kron(a * c, b * d), "pool quadruple");
                }

    r.begin("kron-unital");
    for (const auto& a : pool) {
        r.require(kron(FpMat::identity(1, m.p), a) == a && kron(a, FpMat::identity(1, m.p)) == a,
                  "unit");
        r.require(kron(FpMat::identity(a.rows(), m.p), FpMat::identity(a.cols(), m.p)) ==
                      FpMat::identity(a.rows() * a.cols(), m.p),
                  "id (x) id");
    }
    return r;
}

}  // namespace catcenter
