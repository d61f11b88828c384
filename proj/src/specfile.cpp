#include "catcenter/specfile.hpp"

#include <fstream>
#include <sstream>

namespace catcenter {

namespace {

struct Line {
    int no = 0;
    std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string s = raw.substr(0, raw.find('#'));
        for (char c : std::string{"[];{}="}) {
            std::string from(1, c), to = " " + from + " ";
            std::size_t pos = 0;
            while ((pos = s.find(from, pos)) != std::string::npos) {
                s.replace(pos, 1, to);
                pos += to.size();
            }
        }
        std::istringstream ls(s);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        // braces end logical lines, so one-line blocks parse too
        Line l{no, {}};
        for (auto& tk : toks) {
            if (tk == "{") {
                l.tok.push_back(tk);
                out.push_back(std::move(l));
                l = Line{no, {}};
            } else if (tk == "}") {
                if (!l.tok.empty()) out.push_back(std::move(l));
                out.push_back(Line{no, {"}"}});
                l = Line{no, {}};
            } else {
                l.tok.push_back(tk);
            }
        }
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

struct Cursor {
    const std::vector<Line>& lines;
    std::size_t i = 0;
    std::string file;
    bool done() const { return i >= lines.size(); }
    const Line& cur() const { return lines[i]; }
    [[noreturn]] void err(const std::string& what) const {
        throw SpecError(file, done() ? (lines.empty() ? 0 : lines.back().no) : cur().no, what);
    }
};

int find_or_err(const Cursor& c, const FinCategory& cat, const std::string& name, bool obj) {
    int idx = obj ? cat.object_index(name) : cat.morphism_index(name);
    if (idx < 0) c.err("unresolved name '" + name + "'");
    return idx;
}

FpMat parse_matrix(Cursor& c, std::size_t& t, int p) {
    const auto& tok = c.cur().tok;
    if (t >= tok.size() || tok[t] != "[") c.err("expected matrix literal");
    ++t;
    std::vector<std::vector<int>> rows(1);
    for (; t < tok.size(); ++t) {
        if (tok[t] == "]") {
            ++t;
            if (rows.back().empty() && rows.size() > 1) rows.pop_back();
            int r = static_cast<int>(rows.size());
            int cols = rows.empty() || rows[0].empty() ? 0 : static_cast<int>(rows[0].size());
            FpMat m(r, cols, p);
            for (int i = 0; i < r; ++i) {
                if (static_cast<int>(rows[i].size()) != cols) c.err("ragged matrix literal");
                for (int j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
            }
            return m;
        }
        if (tok[t] == ";") {
            rows.emplace_back();
            continue;
        }
        try {
            rows.back().push_back(std::stoi(tok[t]));
        } catch (...) {
            c.err("bad matrix entry '" + tok[t] + "'");
        }
    }
    c.err("unterminated matrix literal");
}

bool block_open(const Line& l) { return l.tok.size() >= 3 && l.tok[2] == "{"; }

void expect_close(Cursor& c) {
    if (c.done() || c.cur().tok != std::vector<std::string>{"}"}) c.err("expected '}'");
    ++c.i;
}

void parse_category(Cursor& c, Workspace& ws, const std::string& name) {
    auto cat = std::make_unique<FinCategory>();
    struct Pending {
        int line;
        std::string g, f, gf;
    };
    std::vector<Pending> compose;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> idents;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "objects") {
            for (std::size_t k = 1; k < t.size(); ++k) cat->add_object(t[k]);
        } else if (t[0] == "hom") {
            if (t.size() < 4 || t[3] != ":") c.err("hom syntax: hom SRC DST : names...");
            int s = find_or_err(c, *cat, t[1], true);
            int d = find_or_err(c, *cat, t[2], true);
            for (std::size_t k = 4; k < t.size(); ++k) cat->add_morphism(t[k], s, d);
        } else if (t[0] == "identity") {
            if (t.size() != 4 || t[2] != "=") c.err("identity syntax: identity OBJ = MOR");
            idents.push_back({c.cur().no, {t[1], t[3]}});
        } else if (t[0] == "compose") {
            if (t.size() != 5 || t[3] != "=") c.err("compose syntax: compose G F = GF");
            compose.push_back({c.cur().no, t[1], t[2], t[4]});
        } else {
            c.err("unknown category entry '" + t[0] + "'");
        }
    }
    for (const auto& [line, kv] : idents) {
        int o = cat->object_index(kv.first), m = cat->morphism_index(kv.second);
        if (o < 0 || m < 0) throw SpecError(c.file, line, "unresolved name in identity");
        cat->set_identity(o, m);
    }
    for (const auto& p : compose) {
        int g = cat->morphism_index(p.g), f = cat->morphism_index(p.f),
            gf = cat->morphism_index(p.gf);
        if (g < 0 || f < 0 || gf < 0) throw SpecError(c.file, p.line, "unresolved name in compose");
        cat->set_compose(g, f, gf);
    }
    cat->finalize();
    expect_close(c);
    ws.categories[name] = std::move(cat);
}

void parse_moncat(Cursor& c, Workspace& ws, const std::string& name) {
    auto m = std::make_unique<MonCat>();
    const FinCategory* base = nullptr;
    std::string base_name;
    std::vector<std::vector<int>>* braiding = nullptr;
    std::vector<std::vector<int>> braid;
    std::string unit_name;
    struct Entry {
        int line;
        std::string a, b, r;
    };
    std::vector<Entry> tob, tmor, braids;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "base") {
            auto it = ws.categories.find(t.at(1));
            if (it == ws.categories.end()) c.err("unresolved category '" + t.at(1) + "'");
            base = it->second.get();
            base_name = t.at(1);
            m->base = *base;
        } else if (t[0] == "unit") {
            unit_name = t.at(1);
        } else if (t[0] == "tensor") {
            if (t.size() != 5 || t[3] != "=") c.err("tensor syntax: tensor A B = C");
            tob.push_back({c.cur().no, t[1], t[2], t[4]});
        } else if (t[0] == "tensor_mor") {
            if (t.size() != 5 || t[3] != "=") c.err("tensor_mor syntax: tensor_mor F G = H");
            tmor.push_back({c.cur().no, t[1], t[2], t[4]});
        } else if (t[0] == "braiding") {
            if (t.size() != 5 || t[3] != "=") c.err("braiding syntax: braiding A B = F");
            braids.push_back({c.cur().no, t[1], t[2], t[4]});
        } else {
            c.err("unknown moncat entry '" + t[0] + "'");
        }
    }
    if (!base) c.err("moncat needs a base category");
    const int no = m->base.num_objects(), nm = m->base.num_morphisms();
    m->unit = m->base.object_index(unit_name);
    if (m->unit < 0) c.err("unresolved unit object '" + unit_name + "'");
    m->tob.assign(no, std::vector<int>(no, -1));
    m->tmor.assign(nm, std::vector<int>(nm, -1));
    for (const auto& e : tob) {
        int a = m->base.object_index(e.a), b = m->base.object_index(e.b),
            r = m->base.object_index(e.r);
        if (a < 0 || b < 0 || r < 0) throw SpecError(c.file, e.line, "unresolved name in tensor");
        m->tob[a][b] = r;
    }
    for (const auto& e : tmor) {
        int a = m->base.morphism_index(e.a), b = m->base.morphism_index(e.b),
            r = m->base.morphism_index(e.r);
        if (a < 0 || b < 0 || r < 0)
            throw SpecError(c.file, e.line, "unresolved name in tensor_mor");
        m->tmor[a][b] = r;
    }
    for (auto& row : m->tob)
        for (int v : row)
            if (v < 0) c.err("tensor table not total");
    for (auto& row : m->tmor)
        for (int v : row)
            if (v < 0) c.err("tensor_mor table not total");
    if (!braids.empty()) {
        braid.assign(no, std::vector<int>(no, -1));
        for (const auto& e : braids) {
            int a = m->base.object_index(e.a), b = m->base.object_index(e.b),
                r = m->base.morphism_index(e.r);
            if (a < 0 || b < 0 || r < 0)
                throw SpecError(c.file, e.line, "unresolved name in braiding");
            braid[a][b] = r;
        }
        for (auto& row : braid)
            for (int v : row)
                if (v < 0) c.err("braiding table not total");
        braiding = &braid;
    }
    expect_close(c);
    ws.moncats[name] = std::move(m);
    ws.moncat_base[name] = base_name;
    if (braiding) ws.moncat_braidings[name] = braid;
}

void parse_matcat(Cursor& c, Workspace& ws, const std::string& name) {
    int p = -1;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "prime")
            p = std::stoi(t.at(1));
        else
            c.err("unknown matcat entry '" + t[0] + "'");
    }
    if (!is_prime(p) || p > 7) c.err("matcat prime must be a prime <= 7");
    expect_close(c);
    ws.matcats[name] = std::make_unique<MatTwoCat>(p);
}

void parse_monfunctor(Cursor& c, Workspace& ws, const std::string& name) {
    auto f = std::make_unique<LaxMonFunctor>();
    const MonCat *src = nullptr, *dst = nullptr;
    struct Entry {
        int line;
        std::vector<std::string> v;
    };
    std::vector<Entry> objs, mors, lax2s, colax2s;
    std::string lax0name, colax0name;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "from") {
            if (t.size() != 4 || t[2] != "to") c.err("syntax: from M to N");
            auto a = ws.moncats.find(t[1]), b = ws.moncats.find(t[3]);
            if (a == ws.moncats.end() || b == ws.moncats.end())
                c.err("unresolved moncat in functor");
            src = a->second.get();
            dst = b->second.get();
        } else if (t[0] == "strong") {
            f->strong = true;
        } else if (t[0] == "obj" && t.size() == 4 && t[2] == "=") {
            objs.push_back({c.cur().no, {t[1], t[3]}});
        } else if (t[0] == "mor" && t.size() == 4 && t[2] == "=") {
            mors.push_back({c.cur().no, {t[1], t[3]}});
        } else if (t[0] == "lax2" && t.size() == 5 && t[3] == "=") {
            lax2s.push_back({c.cur().no, {t[1], t[2], t[4]}});
        } else if (t[0] == "lax0" && t.size() == 3 && t[1] == "=") {
            lax0name = t[2];
        } else if (t[0] == "colax2" && t.size() == 5 && t[3] == "=") {
            colax2s.push_back({c.cur().no, {t[1], t[2], t[4]}});
        } else if (t[0] == "colax0" && t.size() == 3 && t[1] == "=") {
            colax0name = t[2];
        } else {
            c.err("unknown monfunctor entry '" + t[0] + "'");
        }
    }
    if (!src || !dst) c.err("monfunctor needs from/to");
    f->src = src;
    f->dst = dst;
    f->obj.assign(src->base.num_objects(), -1);
    f->mor.assign(src->base.num_morphisms(), -1);
    for (const auto& e : objs) {
        int a = src->base.object_index(e.v[0]), b = dst->base.object_index(e.v[1]);
        if (a < 0 || b < 0) throw SpecError(c.file, e.line, "unresolved name in obj");
        f->obj[a] = b;
    }
    for (const auto& e : mors) {
        int a = src->base.morphism_index(e.v[0]), b = dst->base.morphism_index(e.v[1]);
        if (a < 0 || b < 0) throw SpecError(c.file, e.line, "unresolved name in mor");
        f->mor[a] = b;
    }
    for (int v : f->obj)
        if (v < 0) c.err("object map not total");
    // identities map to identities when left implicit
    for (int o = 0; o < src->base.num_objects(); ++o)
        if (f->mor[src->base.identity(o)] < 0)
            f->mor[src->base.identity(o)] = dst->base.identity(f->obj[o]);
    for (int v : f->mor)
        if (v < 0) c.err("morphism map not total");
    const int no = src->base.num_objects();
    f->lax2.assign(no, std::vector<int>(no, -1));
    for (const auto& e : lax2s) {
        int a = src->base.object_index(e.v[0]), b = src->base.object_index(e.v[1]),
            r = dst->base.morphism_index(e.v[2]);
        if (a < 0 || b < 0 || r < 0) throw SpecError(c.file, e.line, "unresolved name in lax2");
        f->lax2[a][b] = r;
    }
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            if (f->lax2[a][b] < 0)
                f->lax2[a][b] = dst->base.identity(dst->tob[f->obj[a]][f->obj[b]]);
    f->lax0 = lax0name.empty() ? dst->base.identity(dst->unit)
                               : dst->base.morphism_index(lax0name);
    if (f->lax0 < 0) c.err("unresolved lax0 morphism");
    if (f->strong) {
        f->colax2.assign(no, std::vector<int>(no, -1));
        for (const auto& e : colax2s) {
            int a = src->base.object_index(e.v[0]), b = src->base.object_index(e.v[1]),
                r = dst->base.morphism_index(e.v[2]);
            if (a < 0 || b < 0 || r < 0)
                throw SpecError(c.file, e.line, "unresolved name in colax2");
            f->colax2[a][b] = r;
        }
        for (int a = 0; a < no; ++a)
            for (int b = 0; b < no; ++b)
                if (f->colax2[a][b] < 0)
                    f->colax2[a][b] = dst->base.identity(dst->tob[f->obj[a]][f->obj[b]]);
        f->colax0 = colax0name.empty() ? dst->base.identity(dst->unit)
                                       : dst->base.morphism_index(colax0name);
        if (f->colax0 < 0) c.err("unresolved colax0 morphism");
    }
    expect_close(c);
    ws.monfunctors[name] = std::move(f);
}

void parse_bimonad(Cursor& c, Workspace& ws, const std::string& name) {
    std::string backend;
    int dim = -1;
    std::map<std::string, FpMat> cells;
    const MatTwoCat* k = nullptr;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "matcat") {
            backend = t.at(1);
            auto it = ws.matcats.find(backend);
            if (it == ws.matcats.end()) c.err("unresolved matcat '" + backend + "'");
            k = it->second.get();
        } else if (t[0] == "dim") {
            dim = std::stoi(t.at(1));
        } else if (t[0] == "mu" || t[0] == "eta" || t[0] == "delta" || t[0] == "eps" ||
                   t[0] == "ybo") {
            if (!k) c.err("declare matcat before structure cells");
            std::size_t pos = 1;
            Cursor local = c;
            cells.emplace(t[0], parse_matrix(local, pos, k->p));
        } else {
            c.err("unknown bimonad entry '" + t[0] + "'");
        }
    }
    if (!k || dim <= 0) c.err("bimonad needs matcat and dim");
    for (const char* cell : {"mu", "eta", "delta", "eps", "ybo"})
        if (!cells.count(cell)) c.err(std::string("missing cell '") + cell + "'");
    auto b = std::make_unique<Bimonad>();
    b->k = k;
    b->b = k->dim(dim);
    One bb = k->hcomp1(b->b, b->b);
    auto shaped = [&](const char* cell, int r, int cc) {
        const FpMat& m = cells.at(cell);
        if (m.rows() != r || m.cols() != cc)
            c.err(std::string("cell '") + cell + "' has shape " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" +
                  std::to_string(cc));
        return m;
    };
    b->mu = Two{bb, b->b, 0, shaped("mu", dim, dim * dim)};
    b->eta = Two{k->unit_one(0), b->b, 0, shaped("eta", dim, 1)};
    b->delta = Two{b->b, bb, 0, shaped("delta", dim * dim, dim)};
    b->eps = Two{b->b, k->unit_one(0), 0, shaped("eps", 1, dim)};
    b->ybo = Two{bb, bb, 0, shaped("ybo", dim * dim, dim * dim)};
    expect_close(c);
    ws.bimonads[name] = std::move(b);
    ws.bimonad_backend[name] = backend;
}

void parse_ydmodule(Cursor& c, Workspace& ws, const std::string& name) {
    std::string over;
    int dim = -1;
    std::map<std::string, FpMat> cells;
    const Bimonad* b = nullptr;
    const MatTwoCat* k = nullptr;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "over") {
            over = t.at(1);
            auto it = ws.bimonads.find(over);
            if (it == ws.bimonads.end()) c.err("unresolved bimonad '" + over + "'");
            b = it->second.get();
            k = ws.matcats.at(ws.bimonad_backend.at(over)).get();
        } else if (t[0] == "dim") {
            dim = std::stoi(t.at(1));
        } else if (t[0] == "action" || t[0] == "coaction") {
            if (!k) c.err("declare over before structure cells");
            std::size_t pos = 1;
            Cursor local = c;
            cells.emplace(t[0], parse_matrix(local, pos, k->p));
        } else {
            c.err("unknown ydmodule entry '" + t[0] + "'");
        }
    }
    if (!b || dim <= 0) c.err("ydmodule needs over and dim");
    if (!cells.count("action") || !cells.count("coaction")) c.err("missing action/coaction");
    const int nb = static_cast<int>(b->b.v);
    auto v = std::make_unique<YdModule>();
    v->dim = dim;
    v->action = cells.at("action");
    v->coaction = cells.at("coaction");
    if (v->action.rows() != dim || v->action.cols() != nb * dim)
        c.err("action has wrong shape");
    if (v->coaction.rows() != nb * dim || v->coaction.cols() != dim)
        c.err("coaction has wrong shape");
    expect_close(c);
    ws.ydmodules[name] = std::move(v);
    ws.yd_over[name] = over;
}

void parse_twocat(Cursor& c, Workspace& ws, const std::string& name) {
    // deloop shorthand or explicit tables
    std::vector<std::string> cells;
    std::map<std::pair<int, int>, std::string> hom_names;
    std::vector<Line> body;
    std::string deloop_of, deloop_bim;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "deloop")
            deloop_of = t.at(1);
        else if (t[0] == "deloop_bimodule")
            deloop_bim = t.at(1);
        else
            body.push_back(c.cur());
    }
    expect_close(c);
    if (!deloop_of.empty()) {
        auto it = ws.moncats.find(deloop_of);
        if (it == ws.moncats.end()) c.err("unresolved moncat '" + deloop_of + "'");
        ws.twocats[name] = std::make_unique<TableTwoCat>(deloop_moncat(*it->second));
        return;
    }
    if (!deloop_bim.empty()) {
        auto it = ws.moncats.find(deloop_bim);
        if (it == ws.moncats.end()) c.err("unresolved moncat '" + deloop_bim + "'");
        auto& holder = ws.regular_bimodules[deloop_bim];
        if (!holder) holder = std::make_unique<BimoduleCat>(regular_bimodule(*it->second));
        ws.twocats[name] = std::make_unique<TableTwoCat>(deloop_bimodule(*holder));
        return;
    }

    auto k = std::make_unique<TableTwoCat>();
    std::vector<Line> tables;
    for (const Line& l : body) {
        const auto& t = l.tok;
        if (t[0] == "zero_cells") {
            cells.assign(t.begin() + 1, t.end());
            k->allocate(static_cast<int>(cells.size()));
        } else {
            tables.push_back(l);
        }
    }
    auto cell_index = [&](const std::string& s) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == s) return static_cast<int>(i);
        throw SpecError(c.file, 0, "unresolved 0-cell '" + s + "'");
    };
    for (const Line& l : tables) {
        const auto& t = l.tok;
        if (t[0] == "hom" && t.size() == 5 && t[3] == "=") {
            auto it = ws.categories.find(t[4]);
            if (it == ws.categories.end())
                throw SpecError(c.file, l.no, "unresolved category '" + t[4] + "'");
            k->homs[cell_index(t[1])][cell_index(t[2])] = *it->second;
        }
    }
    // allocate hcomp tables after homs are known
    for (int a = 0; a < k->n0; ++a)
        for (int b = 0; b < k->n0; ++b)
            for (int d = 0; d < k->n0; ++d) {
                k->hobj[a][b][d].assign(k->homs[b][d].num_objects(),
                                        std::vector<int>(k->homs[a][b].num_objects(), -1));
                k->hmor[a][b][d].assign(k->homs[b][d].num_morphisms(),
                                        std::vector<int>(k->homs[a][b].num_morphisms(), -1));
            }
    for (const Line& l : tables) {
        const auto& t = l.tok;
        if (t[0] == "hom") continue;
        if (t[0] == "unit" && t.size() == 4 && t[2] == "=") {
            int a = cell_index(t[1]);
            int o = k->homs[a][a].object_index(t[3]);
            if (o < 0) throw SpecError(c.file, l.no, "unresolved unit 1-cell");
            k->unit1[a] = o;
        } else if ((t[0] == "hcomp" || t[0] == "hcomp2") && t.size() == 8 && t[4] == ":" &&
                   t[6] == "=") {
            // hcomp A B C : G F = H    (we accept "G F = H" after ':')
            throw SpecError(c.file, l.no, "hcomp syntax: hcomp A B C : g f = h");
        } else if ((t[0] == "hcomp" || t[0] == "hcomp2") && t.size() == 9 && t[4] == ":" &&
                   t[7] == "=") {
            int a = cell_index(t[1]), b = cell_index(t[2]), d = cell_index(t[3]);
            bool obj = t[0] == "hcomp";
            const FinCategory &bc = k->homs[b][d], &ab = k->homs[a][b], &ac = k->homs[a][d];
            int g = obj ? bc.object_index(t[5]) : bc.morphism_index(t[5]);
            int f = obj ? ab.object_index(t[6]) : ab.morphism_index(t[6]);
            int h = obj ? ac.object_index(t[8]) : ac.morphism_index(t[8]);
            if (g < 0 || f < 0 || h < 0)
                throw SpecError(c.file, l.no, "unresolved cell in " + t[0]);
            (obj ? k->hobj : k->hmor)[a][b][d][g][f] = h;
        } else {
            throw SpecError(c.file, l.no, "unknown twocat entry '" + t[0] + "'");
        }
    }
    for (int a = 0; a < k->n0; ++a)
        if (k->unit1[a] < 0) c.err("missing unit 1-cell");
    ws.twocats[name] = std::move(k);
}

void parse_bilax(Cursor& c, Workspace& ws, const std::string& name) {
    std::string bimonad_name, domain_name;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "bimonad")
            bimonad_name = t.at(1);
        else if (t[0] == "domain")
            domain_name = t.at(1);
        else
            c.err("unknown bilax entry '" + t[0] + "'");
    }
    expect_close(c);
    auto bit = ws.bimonads.find(bimonad_name);
    if (bit == ws.bimonads.end()) c.err("unresolved bimonad '" + bimonad_name + "'");
    const Bimonad& b = *bit->second;
    const MatTwoCat& k = *ws.matcats.at(ws.bimonad_backend.at(bimonad_name));

    BilaxEntry e;
    if (domain_name.empty()) {
        e.domain = std::make_shared<TableTwoCat>(trivial_twocat());
    } else {
        auto it = ws.moncats.find(domain_name);
        if (it == ws.moncats.end()) c.err("unresolved moncat '" + domain_name + "'");
        e.domain = std::make_shared<TableTwoCat>(deloop_moncat(*it->second));
    }
    e.domain_ybo = std::make_shared<TwoYbo>(identity_two_ybo(*e.domain));
    e.codomain_ybo = std::make_shared<TwoYbo>(swap_two_ybo(k));
    e.f = constant_bilax_functor(*e.domain, *e.domain_ybo, b, e.codomain_ybo.get());
    ws.bilaxen[name] = std::move(e);
}

// Strict 2-functors given by named cell maps: structure cells are identities.
void parse_functor2(Cursor& c, Workspace& ws, const std::string& name) {
    const TableTwoCat *src = nullptr, *dst = nullptr;
    std::map<std::string, std::string> one_map, two_map;
    std::vector<int> obj_map;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "from" && t.size() == 4 && t[2] == "to") {
            auto a = ws.twocats.find(t[1]), b = ws.twocats.find(t[3]);
            if (a == ws.twocats.end() || b == ws.twocats.end())
                c.err("unresolved twocat in functor2");
            src = a->second.get();
            dst = b->second.get();
            obj_map.assign(src->n0, -1);
        } else if (t[0] == "obj" && t.size() == 4 && t[2] == "=") {
            if (!src) c.err("declare from/to first");
            obj_map.at(std::stoul(t[1])) = std::stoi(t[3]);
        } else if (t[0] == "one" && t.size() == 4 && t[2] == "=") {
            one_map[t[1]] = t[3];
        } else if (t[0] == "two" && t.size() == 4 && t[2] == "=") {
            two_map[t[1]] = t[3];
        } else {
            c.err("unknown functor2 entry '" + t[0] + "'");
        }
    }
    expect_close(c);
    if (!src || !dst) c.err("functor2 needs from/to");
    for (int v : obj_map)
        if (v < 0 || v >= dst->n0) c.err("functor2 object map not total");

    auto find_one = [&](const TableTwoCat& k, const std::string& s) {
        One found{-1, -1, -1};
        int hits = 0;
        for (int a = 0; a < k.n0; ++a)
            for (int b = 0; b < k.n0; ++b) {
                int idx = k.homs[a][b].object_index(s);
                if (idx >= 0) {
                    found = One{a, b, idx};
                    ++hits;
                }
            }
        if (hits != 1) c.err("1-cell name '" + s + "' not unique or missing");
        return found;
    };
    auto find_two = [&](const TableTwoCat& k, const std::string& s) {
        Two found;
        int hits = 0;
        for (int a = 0; a < k.n0; ++a)
            for (int b = 0; b < k.n0; ++b) {
                int idx = k.homs[a][b].morphism_index(s);
                if (idx >= 0) {
                    found = k.make2(a, b, idx);
                    ++hits;
                }
            }
        if (hits != 1) c.err("2-cell name '" + s + "' not unique or missing");
        return found;
    };
    auto one_of = [&](const One& f) {
        auto it = one_map.find(src->one_name(f));
        if (it == one_map.end()) c.err("1-cell image missing for " + src->one_name(f));
        return find_one(*dst, it->second);
    };
    auto two_of = [&](const Two& t) {
        auto it = two_map.find(src->two_name(t));
        if (it == two_map.end()) c.err("2-cell image missing for " + src->two_name(t));
        return find_two(*dst, it->second);
    };

    auto F = std::make_shared<TableFunctor2>(materialize_functor2(
        *src, *dst, true, true, true, [obj_map](int a) { return obj_map[a]; }, one_of, two_of,
        [&](const One& g, const One& f) { return dst->id2(dst->hcomp1(one_of(g), one_of(f))); },
        [&](int a) { return dst->id2(dst->unit_one(obj_map[a])); },
        [&](const One& g, const One& f) { return dst->id2(dst->hcomp1(one_of(g), one_of(f))); },
        [&](int a) { return dst->id2(dst->unit_one(obj_map[a])); }));
    ws.functor2s[name] = Functor2Entry{F};
}

void parse_transformation2(Cursor& c, Workspace& ws, const std::string& name) {
    std::string from, to, kind = "colax";
    std::map<std::string, std::string> one_map, two_map;
    for (; !c.done() && c.cur().tok[0] != "}"; ++c.i) {
        const auto& t = c.cur().tok;
        if (t[0] == "from" && t.size() == 4 && t[2] == "to") {
            from = t[1];
            to = t[3];
        } else if (t[0] == "kind" && t.size() == 2) {
            kind = t[1];
        } else if (t[0] == "one" && t.size() == 4 && t[2] == "=") {
            one_map[t[1]] = t[3];
        } else if (t[0] == "two" && t.size() == 4 && t[2] == "=") {
            two_map[t[1]] = t[3];
        } else {
            c.err("unknown transformation2 entry '" + t[0] + "'");
        }
    }
    expect_close(c);
    auto fa = ws.functor2s.find(from), fb = ws.functor2s.find(to);
    if (fa == ws.functor2s.end() || fb == ws.functor2s.end())
        c.err("unresolved functor2 in transformation2");
    const Functor2& F = *fa->second.f;
    const Functor2& G = *fb->second.f;
    const TableTwoCat& s = *static_cast<const TableTwoCat*>(F.src);
    const TableTwoCat& d = *static_cast<const TableTwoCat*>(F.dst);
    Transformation2 t;
    t.kind = kind == "lax" ? Transformation2::Lax : Transformation2::Colax;
    t.F = &F;
    t.G = &G;
    for (int a = 0; a < s.n0; ++a) {
        auto it = one_map.find(std::to_string(a));
        if (it == one_map.end()) c.err("missing 1-cell component for 0-cell " + std::to_string(a));
        int idx = d.homs[F.obj(a)][G.obj(a)].object_index(it->second);
        if (idx < 0) c.err("unresolved 1-cell '" + it->second + "'");
        t.one.push_back(One{F.obj(a), G.obj(a), idx});
    }
    t.two.assign(s.n0, std::vector<std::vector<Two>>(s.n0));
    for (int a = 0; a < s.n0; ++a)
        for (int b = 0; b < s.n0; ++b)
            for (const One& f : s.one_cells(a, b)) {
                auto it = two_map.find(s.one_name(f));
                if (it == two_map.end())
                    c.err("missing 2-cell component at " + s.one_name(f));
                // the component lives in hom(F(a), G(b))
                int ha = F.obj(a), hb = G.obj(b);
                int m = d.homs[ha][hb].morphism_index(it->second);
                if (m < 0) c.err("unresolved 2-cell '" + it->second + "'");
                t.two[a][b].push_back(d.make2(ha, hb, m));
            }
    ws.transformation2s[name] = Transformation2Entry{from, to, std::move(t)};
}

}  // namespace

bool Workspace::has(const std::string& name) const {
    return categories.count(name) || moncats.count(name) || matcats.count(name) ||
           monfunctors.count(name) || bimonads.count(name) || ydmodules.count(name) ||
           twocats.count(name) || bilaxen.count(name) || functor2s.count(name) ||
           transformation2s.count(name);
}

void Workspace::note(const std::string& name, const std::string& file, int line) {
    provenance[name] = file + ":" + std::to_string(line);
}

void parse_spec_text(const std::string& text, const std::string& filename, Workspace& ws) {
    auto lines = tokenize(text);
    Cursor c{lines, 0, filename};
    while (!c.done()) {
        const Line& l = c.cur();
        if (!block_open(l)) c.err("expected a block header 'KIND NAME {'");
        const std::string kind = l.tok[0], name = l.tok[1];
        if (ws.has(name)) c.err("duplicate name '" + name + "'");
        ws.note(name, filename, l.no);
        ++c.i;
        if (kind == "category")
            parse_category(c, ws, name);
        else if (kind == "moncat")
            parse_moncat(c, ws, name);
        else if (kind == "matcat")
            parse_matcat(c, ws, name);
        else if (kind == "monfunctor")
            parse_monfunctor(c, ws, name);
        else if (kind == "bimonad")
            parse_bimonad(c, ws, name);
        else if (kind == "ydmodule")
            parse_ydmodule(c, ws, name);
        else if (kind == "twocat")
            parse_twocat(c, ws, name);
        else if (kind == "bilax")
            parse_bilax(c, ws, name);
        else if (kind == "functor2")
            parse_functor2(c, ws, name);
        else if (kind == "transformation2")
            parse_transformation2(c, ws, name);
        else
            c.err("unknown block kind '" + kind + "'");
    }
}

void parse_spec_file(const std::string& path, Workspace& ws) {
    std::ifstream in(path);
    if (!in) throw SpecError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    parse_spec_text(buf.str(), path, ws);
}

std::string serialize_category(const FinCategory& c, const std::string& name) {
    std::ostringstream os;
    os << "category " << name << " {\n";
    os << "  objects";
    for (int o = 0; o < c.num_objects(); ++o) os << " " << c.object_name(o);
    os << "\n";
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b) {
            if (c.hom(a, b).empty()) continue;
            os << "  hom " << c.object_name(a) << " " << c.object_name(b) << " :";
            for (int m : c.hom(a, b)) os << " " << c.mor(m).name;
            os << "\n";
        }
    for (int o = 0; o < c.num_objects(); ++o)
        os << "  identity " << c.object_name(o) << " = " << c.mor(c.identity(o)).name << "\n";
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f)
            if (c.composable(g, f))
                os << "  compose " << c.mor(g).name << " " << c.mor(f).name << " = "
                   << c.mor(c.compose(g, f)).name << "\n";
    os << "}\n";
    return os.str();
}

std::string serialize_moncat(const MonCat& m, const std::string& name,
                             const std::string& base_name) {
    std::ostringstream os;
    os << serialize_category(m.base, base_name);
    os << "moncat " << name << " {\n";
    os << "  base " << base_name << "\n";
    os << "  unit " << m.base.object_name(m.unit) << "\n";
    for (int a = 0; a < m.base.num_objects(); ++a)
        for (int b = 0; b < m.base.num_objects(); ++b)
            os << "  tensor " << m.base.object_name(a) << " " << m.base.object_name(b) << " = "
               << m.base.object_name(m.tob[a][b]) << "\n";
    for (int f = 0; f < m.base.num_morphisms(); ++f)
        for (int g = 0; g < m.base.num_morphisms(); ++g)
            os << "  tensor_mor " << m.base.mor(f).name << " " << m.base.mor(g).name << " = "
               << m.base.mor(m.tmor[f][g]).name << "\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string serialize_matrix(const FpMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << " ;";
        for (int j = 0; j < m.cols(); ++j) os << " " << int(m.at(i, j));
    }
    os << " ]";
    return os.str();
}

}  // namespace

std::string serialize_workspace(const Workspace& ws) {
    std::ostringstream os;
    for (const auto& [name, c] : ws.categories) os << serialize_category(*c, name);
    for (const auto& [name, m] : ws.moncats) {
        os << "moncat " << name << " {\n  base " << ws.moncat_base.at(name) << "\n  unit "
           << m->base.object_name(m->unit) << "\n";
        for (int a = 0; a < m->base.num_objects(); ++a)
            for (int b = 0; b < m->base.num_objects(); ++b)
                os << "  tensor " << m->base.object_name(a) << " " << m->base.object_name(b)
                   << " = " << m->base.object_name(m->tob[a][b]) << "\n";
        for (int f = 0; f < m->base.num_morphisms(); ++f)
            for (int g = 0; g < m->base.num_morphisms(); ++g)
                os << "  tensor_mor " << m->base.mor(f).name << " " << m->base.mor(g).name
                   << " = " << m->base.mor(m->tmor[f][g]).name << "\n";
        if (auto it = ws.moncat_braidings.find(name); it != ws.moncat_braidings.end())
            for (int a = 0; a < m->base.num_objects(); ++a)
                for (int b = 0; b < m->base.num_objects(); ++b)
                    os << "  braiding " << m->base.object_name(a) << " "
                       << m->base.object_name(b) << " = "
                       << m->base.mor(it->second[a][b]).name << "\n";
        os << "}\n";
    }
    for (const auto& [name, k] : ws.matcats)
        os << "matcat " << name << " {\n  prime " << k->p << "\n}\n";
    auto moncat_name = [&](const MonCat* m) {
        for (const auto& [n, mc] : ws.moncats)
            if (mc.get() == m) return n;
        return std::string("?");
    };
    for (const auto& [name, f] : ws.monfunctors) {
        os << "monfunctor " << name << " {\n";
        os << "  from " << moncat_name(f->src) << " to " << moncat_name(f->dst) << "\n";
        if (f->strong) os << "  strong\n";
        const FinCategory &sb = f->src->base, &db = f->dst->base;
        for (int o = 0; o < sb.num_objects(); ++o)
            os << "  obj " << sb.object_name(o) << " = " << db.object_name(f->obj[o]) << "\n";
        for (int m = 0; m < sb.num_morphisms(); ++m)
            os << "  mor " << sb.mor(m).name << " = " << db.mor(f->mor[m]).name << "\n";
        for (int a = 0; a < sb.num_objects(); ++a)
            for (int b = 0; b < sb.num_objects(); ++b)
                os << "  lax2 " << sb.object_name(a) << " " << sb.object_name(b) << " = "
                   << db.mor(f->lax2[a][b]).name << "\n";
        os << "  lax0 = " << db.mor(f->lax0).name << "\n";
        if (f->strong) {
            for (int a = 0; a < sb.num_objects(); ++a)
                for (int b = 0; b < sb.num_objects(); ++b)
                    os << "  colax2 " << sb.object_name(a) << " " << sb.object_name(b) << " = "
                       << db.mor(f->colax2[a][b]).name << "\n";
            os << "  colax0 = " << db.mor(f->colax0).name << "\n";
        }
        os << "}\n";
    }
    for (const auto& [name, b] : ws.bimonads) {
        os << "bimonad " << name << " {\n";
        os << "  matcat " << ws.bimonad_backend.at(name) << "\n";
        os << "  dim " << b->b.v << "\n";
        os << "  mu " << serialize_matrix(b->mu.m) << "\n";
        os << "  eta " << serialize_matrix(b->eta.m) << "\n";
        os << "  delta " << serialize_matrix(b->delta.m) << "\n";
        os << "  eps " << serialize_matrix(b->eps.m) << "\n";
        os << "  ybo " << serialize_matrix(b->ybo.m) << "\n";
        os << "}\n";
    }
    for (const auto& [name, v] : ws.ydmodules) {
        os << "ydmodule " << name << " {\n";
        os << "  over " << ws.yd_over.at(name) << "\n";
        os << "  dim " << v->dim << "\n";
        os << "  action " << serialize_matrix(v->action) << "\n";
        os << "  coaction " << serialize_matrix(v->coaction) << "\n";
        os << "}\n";
    }
    return os.str();
}

std::map<std::string, std::string> seed_suite_files() {
    std::map<std::string, std::string> files;
    auto group_spec = [](const std::string& name, const std::vector<std::string>& names,
                         const std::vector<std::vector<int>>& table) {
        return serialize_moncat(group_moncat(names, table), name, name + "_base");
    };
    files["z2.spec"] = group_spec("z2", suite::cyclic_names(2), suite::cyclic_table(2));
    files["z4.spec"] = group_spec("z4", suite::cyclic_names(4), suite::cyclic_table(4));
    files["s3.spec"] = group_spec("s3", suite::s3_names(), suite::s3_table());
    files["d4.spec"] = group_spec("d4", suite::d4_names(), suite::d4_table());
    files["posetmax.spec"] = serialize_moncat(poset_max_moncat(), "posetmax", "posetmax_base");
    {
        std::ostringstream os;
        os << "matcat f2 {\n  prime 2\n}\n";
        MatTwoCat k(2);
        Bimonad kz2 = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
        os << "bimonad kz2 {\n  matcat f2\n  dim 2\n";
        os << "  mu " << serialize_matrix(kz2.mu.m) << "\n";
        os << "  eta " << serialize_matrix(kz2.eta.m) << "\n";
        os << "  delta " << serialize_matrix(kz2.delta.m) << "\n";
        os << "  eps " << serialize_matrix(kz2.eps.m) << "\n";
        os << "  ybo " << serialize_matrix(kz2.ybo.m) << "\n}\n";

        auto klein = [] {
            // Z/2 x Z/2: bitwise xor table
            std::vector<std::vector<int>> t(4, std::vector<int>(4));
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
            return t;
        }();
        Bimonad kz2z2 = suite::group_algebra_bimonad(k, klein);
        os << "bimonad kz2z2 {\n  matcat f2\n  dim 4\n";
        os << "  mu " << serialize_matrix(kz2z2.mu.m) << "\n";
        os << "  eta " << serialize_matrix(kz2z2.eta.m) << "\n";
        os << "  delta " << serialize_matrix(kz2z2.delta.m) << "\n";
        os << "  eps " << serialize_matrix(kz2z2.eps.m) << "\n";
        os << "  ybo " << serialize_matrix(kz2z2.ybo.m) << "\n}\n";

        os << "ydmodule yd1e {\n  over kz2\n  dim 1\n  action [ 1 1 ]\n  coaction [ 1 ; 0 ]\n}\n";
        os << "ydmodule yd1g {\n  over kz2\n  dim 1\n  action [ 1 1 ]\n  coaction [ 0 ; 1 ]\n}\n";
        os << "bilax tkz2 {\n  bimonad kz2\n}\n";
        os << "bilax fbkz2 {\n  bimonad kz2\n  domain z2\n}\n";
        files["kz2.spec"] = os.str();
    }
    {
        std::ostringstream os;
        os << "monfunctor conj_s {\n  from s3 to s3\n  strong\n";
        auto table = suite::s3_table();
        auto names = suite::s3_names();
        int t = 3;  // the transposition s
        int tinv = suite::group_inverse(table, t);
        for (int x = 0; x < 6; ++x)
            os << "  obj " << names[x] << " = " << names[table[table[t][x]][tinv]] << "\n";
        os << "}\n";
        files["conj_s3.spec"] = os.str();
    }
    return files;
}

}  // namespace catcenter
