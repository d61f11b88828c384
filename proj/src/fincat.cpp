#include "catcenter/fincat.hpp"

#include <stdexcept>

namespace catcenter {

namespace {
std::string mor_str(const FinCategory& c, int m) {
    if (m < 0 || m >= c.num_morphisms()) return "#" + std::to_string(m);
    return c.mor(m).name;
}
}  // namespace

int FinCategory::add_object(const std::string& name) {
    objects_.push_back(name);
    identity_.push_back(-1);
    return num_objects() - 1;
}

int FinCategory::add_morphism(const std::string& name, int src, int dst) {
    mors_.push_back(Mor{name, src, dst});
    return num_morphisms() - 1;
}

void FinCategory::set_identity(int obj, int mor) { identity_[obj] = mor; }

void FinCategory::set_compose(int g, int f, int gf) {
    if (compose_.empty()) compose_.assign(mors_.size(), std::vector<int>(mors_.size(), -1));
    compose_[g][f] = gf;
}

void FinCategory::finalize() {
    if (compose_.empty()) compose_.assign(mors_.size(), std::vector<int>(mors_.size(), -1));
    for (auto& row : compose_) row.resize(mors_.size(), -1);
    compose_.resize(mors_.size(), std::vector<int>(mors_.size(), -1));
    hom_.assign(objects_.size(), std::vector<std::vector<int>>(objects_.size()));
    for (int m = 0; m < num_morphisms(); ++m) {
        const Mor& mo = mors_[m];
        if (mo.src >= 0 && mo.src < num_objects() && mo.dst >= 0 && mo.dst < num_objects())
            hom_[mo.src][mo.dst].push_back(m);
    }
    // identities compose trivially even when the table left them implicit
    for (int o = 0; o < num_objects(); ++o) {
        int id = identity_[o];
        if (id < 0 || id >= num_morphisms()) continue;
        for (int m = 0; m < num_morphisms(); ++m) {
            if (mors_[m].src == o && compose_[m][id] < 0) compose_[m][id] = m;
            if (mors_[m].dst == o && compose_[id][m] < 0) compose_[id][m] = m;
        }
    }
}

const std::vector<int>& FinCategory::hom(int src, int dst) const { return hom_[src][dst]; }

int FinCategory::object_index(const std::string& name) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects_[i] == name) return i;
    return -1;
}

int FinCategory::morphism_index(const std::string& name) const {
    for (int i = 0; i < num_morphisms(); ++i)
        if (mors_[i].name == name) return i;
    return -1;
}

FinCategory discrete_category(const std::vector<std::string>& elements) {
    if (elements.empty()) throw std::invalid_argument("discrete_category: empty object set");
    FinCategory c;
    for (const auto& e : elements) c.add_object(e);
    for (int i = 0; i < c.num_objects(); ++i)
        c.set_identity(i, c.add_morphism("id_" + elements[i], i, i));
    c.finalize();
    return c;
}

Report validate_category(const FinCategory& c) {
    Report r("category");
    const int nm = c.num_morphisms();

    r.begin("well-formed");
    if (c.num_objects() == 0) r.fail("empty object set");
    for (int m = 0; m < nm; ++m) {
        const auto& mo = c.mor(m);
        r.require(mo.src >= 0 && mo.src < c.num_objects() && mo.dst >= 0 && mo.dst < c.num_objects(),
                  "morphism " + mor_str(c, m) + " has dangling endpoint");
    }
    for (int o = 0; o < c.num_objects(); ++o) {
        int id = c.identity(o);
        bool ok = id >= 0 && id < nm && c.mor(id).src == o && c.mor(id).dst == o;
        r.require(ok, "identity of " + c.object_name(o) + " missing or not an endomorphism");
    }
    if (!r.ok()) return r;  // law checks assume indices are in range

    r.begin("compose-total");
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            int gf = c.compose(g, f);
            if (c.composable(g, f)) {
                bool ok = gf >= 0 && gf < nm && c.mor(gf).src == c.mor(f).src &&
                          c.mor(gf).dst == c.mor(g).dst;
                r.require(ok, "compose(" + mor_str(c, g) + "," + mor_str(c, f) +
                                  ") missing or with wrong endpoints");
            } else {
                r.require(gf < 0, "compose(" + mor_str(c, g) + "," + mor_str(c, f) +
                                      ") defined on a non-composable pair");
            }
        }
    if (!r.ok()) return r;

    r.begin("associativity");
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < nm; ++f) {
                if (!c.composable(g, f)) continue;
                r.require(c.compose(c.compose(h, g), f) == c.compose(h, c.compose(g, f)),
                          "(" + mor_str(c, h) + "," + mor_str(c, g) + "," + mor_str(c, f) + ")");
            }
        }

    r.begin("unit");
    for (int m = 0; m < nm; ++m) {
        const auto& mo = c.mor(m);
        r.require(c.compose(m, c.identity(mo.src)) == m && c.compose(c.identity(mo.dst), m) == m,
                  "identity not neutral at " + mor_str(c, m));
    }
    return r;
}

CatFunctor CatFunctor::identity(const FinCategory& c) {
    CatFunctor f{&c, &c, {}, {}};
    for (int o = 0; o < c.num_objects(); ++o) f.obj.push_back(o);
    for (int m = 0; m < c.num_morphisms(); ++m) f.mor.push_back(m);
    return f;
}

Report check_functor(const CatFunctor& f) {
    Report r("functor");
    const FinCategory& s = *f.src;
    const FinCategory& d = *f.dst;

    r.begin("well-formed");
    r.require(static_cast<int>(f.obj.size()) == s.num_objects() &&
                  static_cast<int>(f.mor.size()) == s.num_morphisms(),
              "map tables not total");
    if (!r.ok()) return r;
    for (int o = 0; o < s.num_objects(); ++o)
        r.require(f.obj[o] >= 0 && f.obj[o] < d.num_objects(), "object map out of range");
    for (int m = 0; m < s.num_morphisms(); ++m)
        r.require(f.mor[m] >= 0 && f.mor[m] < d.num_morphisms(), "morphism map out of range");
    if (!r.ok()) return r;

    r.begin("endpoints");
    for (int m = 0; m < s.num_morphisms(); ++m) {
        const auto& mo = s.mor(m);
        const auto& im = d.mor(f.mor[m]);
        r.require(im.src == f.obj[mo.src] && im.dst == f.obj[mo.dst], mor_str(s, m));
    }
    if (!r.ok()) return r;

    r.begin("identities");
    for (int o = 0; o < s.num_objects(); ++o)
        r.require(f.mor[s.identity(o)] == d.identity(f.obj[o]), s.object_name(o));

    r.begin("composition");
    for (int g = 0; g < s.num_morphisms(); ++g)
        for (int fm = 0; fm < s.num_morphisms(); ++fm) {
            if (!s.composable(g, fm)) continue;
            r.require(f.mor[s.compose(g, fm)] == d.compose(f.mor[g], f.mor[fm]),
                      "(" + mor_str(s, g) + "," + mor_str(s, fm) + ")");
        }
    return r;
}

CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose_functors: not composable");
    CatFunctor r{f.src, g.dst, {}, {}};
    for (int o : f.obj) r.obj.push_back(g.obj[o]);
    for (int m : f.mor) r.mor.push_back(g.mor[m]);
    return r;
}

Report check_nat(const NatTransf& a) {
    Report r("nat");
    r.begin("parallel");
    bool parallel = a.src && a.dst && a.src->src == a.dst->src && a.src->dst == a.dst->dst;
    r.require(parallel, "functors not parallel");
    if (!parallel) return r;
    const FinCategory& s = *a.src->src;
    const FinCategory& d = *a.src->dst;

    r.begin("well-formed");
    r.require(static_cast<int>(a.comp.size()) == s.num_objects(), "component table not total");
    if (!r.ok()) return r;
    for (int o = 0; o < s.num_objects(); ++o) {
        int m = a.comp[o];
        bool ok = m >= 0 && m < d.num_morphisms() && d.mor(m).src == a.src->obj[o] &&
                  d.mor(m).dst == a.dst->obj[o];
        r.require(ok, "component at " + s.object_name(o) + " has wrong endpoints");
    }
    if (!r.ok()) return r;

    r.begin("naturality");
    for (int m = 0; m < s.num_morphisms(); ++m) {
        const auto& mo = s.mor(m);
        int lhs = d.compose(a.comp[mo.dst], a.src->mor[m]);
        int rhs = d.compose(a.dst->mor[m], a.comp[mo.src]);
        r.require(lhs == rhs && lhs >= 0, mor_str(s, m));
    }
    return r;
}

NatTransf vcompose_nat(const NatTransf& b, const NatTransf& a) {
    if (a.dst != b.src) throw std::invalid_argument("vcompose_nat: not composable");
    NatTransf r{a.src, b.dst, {}};
    const FinCategory& d = *a.src->dst;
    for (std::size_t o = 0; o < a.comp.size(); ++o) r.comp.push_back(d.compose(b.comp[o], a.comp[o]));
    return r;
}

}  // namespace catcenter
