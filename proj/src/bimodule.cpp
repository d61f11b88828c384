#include "catcenter/bimodule.hpp"

namespace catcenter {

bool BimoduleCat::regular() const {
    return left == right && lact_obj == left->tob && ract_obj == left->tob &&
           lact_mor == left->tmor && ract_mor == left->tmor &&
           carrier.num_objects() == left->base.num_objects() &&
           carrier.num_morphisms() == left->base.num_morphisms();
}

BimoduleCat regular_bimodule(const MonCat& c) {
    BimoduleCat b;
    b.left = b.right = &c;
    b.carrier = c.base;
    b.lact_obj = b.ract_obj = c.tob;
    b.lact_mor = b.ract_mor = c.tmor;
    return b;
}

Report validate_bimodule(const BimoduleCat& b) {
    Report r("bimodule");
    r.merge(validate_category(b.carrier));
    if (!r.ok()) return r;
    const MonCat& C = *b.left;
    const MonCat& D = *b.right;
    const FinCategory& M = b.carrier;
    const int nc = C.base.num_objects(), nd = D.base.num_objects(), nm = M.num_objects();

    r.begin("action-well-formed");
    bool shape = static_cast<int>(b.lact_obj.size()) == nc &&
                 static_cast<int>(b.ract_obj.size()) == nm &&
                 static_cast<int>(b.lact_mor.size()) == C.base.num_morphisms() &&
                 static_cast<int>(b.ract_mor.size()) == M.num_morphisms();
    r.require(shape, "action tables not total");
    if (!shape) return r;
    for (int f = 0; f < C.base.num_morphisms(); ++f)
        for (int u = 0; u < M.num_morphisms(); ++u) {
            int fu = b.lact_mor[f][u];
            const auto &mf = C.base.mor(f), &mu = M.mor(u);
            bool ok = fu >= 0 && fu < M.num_morphisms() &&
                      M.mor(fu).src == b.lact_obj[mf.src][mu.src] &&
                      M.mor(fu).dst == b.lact_obj[mf.dst][mu.dst];
            r.require(ok, "lact_mor endpoints");
        }
    for (int u = 0; u < M.num_morphisms(); ++u)
        for (int f = 0; f < D.base.num_morphisms(); ++f) {
            int uf = b.ract_mor[u][f];
            const auto &mu = M.mor(u), &mf = D.base.mor(f);
            bool ok = uf >= 0 && uf < M.num_morphisms() &&
                      M.mor(uf).src == b.ract_obj[mu.src][mf.src] &&
                      M.mor(uf).dst == b.ract_obj[mu.dst][mf.dst];
            r.require(ok, "ract_mor endpoints");
        }
    if (!r.ok()) return r;

    r.begin("action-functorial");
    for (int a = 0; a < nc; ++a)
        for (int m = 0; m < nm; ++m)
            r.require(b.lact_mor[C.base.identity(a)][M.identity(m)] ==
                          M.identity(b.lact_obj[a][m]),
                      "id left-acts as id");
    for (int m = 0; m < nm; ++m)
        for (int a = 0; a < nd; ++a)
            r.require(b.ract_mor[M.identity(m)][D.base.identity(a)] ==
                          M.identity(b.ract_obj[m][a]),
                      "id right-acts as id");
    for (int g = 0; g < C.base.num_morphisms(); ++g)
        for (int f = 0; f < C.base.num_morphisms(); ++f) {
            if (!C.base.composable(g, f)) continue;
            for (int v = 0; v < M.num_morphisms(); ++v)
                for (int u = 0; u < M.num_morphisms(); ++u) {
                    if (!M.composable(v, u)) continue;
                    int lhs = M.compose(b.lact_mor[g][v], b.lact_mor[f][u]);
                    int rhs = b.lact_mor[C.base.compose(g, f)][M.compose(v, u)];
                    r.require(lhs == rhs && lhs >= 0, "left interchange");
                }
        }
    for (int v = 0; v < M.num_morphisms(); ++v)
        for (int u = 0; u < M.num_morphisms(); ++u) {
            if (!M.composable(v, u)) continue;
            for (int g = 0; g < D.base.num_morphisms(); ++g)
                for (int f = 0; f < D.base.num_morphisms(); ++f) {
                    if (!D.base.composable(g, f)) continue;
                    int lhs = M.compose(b.ract_mor[v][g], b.ract_mor[u][f]);
                    int rhs = b.ract_mor[M.compose(v, u)][D.base.compose(g, f)];
                    r.require(lhs == rhs && lhs >= 0, "right interchange");
                }
        }

    r.begin("strict-action-laws");
    for (int a = 0; a < nc; ++a)
        for (int a2 = 0; a2 < nc; ++a2)
            for (int m = 0; m < nm; ++m)
                r.require(b.lact_obj[a][b.lact_obj[a2][m]] == b.lact_obj[C.tob[a][a2]][m],
                          "left associativity");
    for (int m = 0; m < nm; ++m)
        for (int a = 0; a < nd; ++a)
            for (int a2 = 0; a2 < nd; ++a2)
                r.require(b.ract_obj[b.ract_obj[m][a]][a2] == b.ract_obj[m][D.tob[a][a2]],
                          "right associativity");
    for (int m = 0; m < nm; ++m)
        r.require(b.lact_obj[C.unit][m] == m && b.ract_obj[m][D.unit] == m, "unit acts trivially");
    for (int a = 0; a < nc; ++a)
        for (int m = 0; m < nm; ++m)
            for (int d = 0; d < nd; ++d)
                r.require(b.lact_obj[a][b.ract_obj[m][d]] == b.ract_obj[b.lact_obj[a][m]][d],
                          "mixed associativity");
    return r;
}

}  // namespace catcenter
