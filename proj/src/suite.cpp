#include "catcenter/suite.hpp"

namespace catcenter {
namespace suite {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

std::vector<std::string> cyclic_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    return names;
}

// elements: e, r, rr, s, rs, rrs with r^3 = s^2 = e, s r = r^2 s
std::vector<std::vector<int>> s3_table() {
    auto enc = [](int i, int j) { return i + 3 * j; };  // r^i s^j
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i1 = 0; i1 < 3; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 3; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? (i1 + i2) % 3 : (i1 - i2 + 3) % 3;
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
                }
    return t;
}

std::vector<std::string> s3_names() { return {"e", "r", "rr", "s", "rs", "rrs"}; }

// elements: r^i s^j, i mod 4, j mod 2, with s r = r^3 s
std::vector<std::vector<int>> d4_table() {
    auto enc = [](int i, int j) { return i + 4 * j; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? (i1 + i2) % 4 : (i1 - i2 + 4) % 4;
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
                }
    return t;
}

std::vector<std::string> d4_names() {
    return {"e", "r", "rr", "rrr", "s", "rs", "rrs", "rrrs"};
}

MonCat z2() { return group_moncat(cyclic_names(2), cyclic_table(2)); }
MonCat z4() { return group_moncat(cyclic_names(4), cyclic_table(4)); }
MonCat s3() { return group_moncat(s3_names(), s3_table()); }
MonCat d4() { return group_moncat(d4_names(), d4_table()); }

int group_inverse(const std::vector<std::vector<int>>& table, int g) {
    for (int h = 0; h < static_cast<int>(table.size()); ++h)
        if (table[g][h] == 0 && table[h][g] == 0) return h;
    return -1;
}

std::vector<int> group_center(const std::vector<std::vector<int>>& table) {
    std::vector<int> z;
    const int n = static_cast<int>(table.size());
    for (int g = 0; g < n; ++g) {
        bool central = true;
        for (int x = 0; x < n && central; ++x) central = table[g][x] == table[x][g];
        if (central) z.push_back(g);
    }
    return z;
}

LaxMonFunctor conjugation_functor(const MonCat& g, const std::vector<std::vector<int>>& table,
                                  int t) {
    int tinv = group_inverse(table, t);
    std::vector<int> obj;
    for (int x = 0; x < static_cast<int>(table.size()); ++x)
        obj.push_back(table[table[t][x]][tinv]);
    return group_endomorphism_functor(g, obj);
}

Bimonad group_algebra_bimonad(const MatTwoCat& k, const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    Bimonad b;
    b.k = &k;
    b.b = k.dim(n);
    FpMat mu(n, n * n, k.p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu.set(table[i][j], i * n + j, 1);
    FpMat eta(n, 1, k.p);
    eta.set(0, 0, 1);
    FpMat delta(n * n, n, k.p);
    for (int i = 0; i < n; ++i) delta.set(i * n + i, i, 1);
    FpMat eps(1, n, k.p);
    for (int i = 0; i < n; ++i) eps.set(0, i, 1);
    One bb = k.hcomp1(b.b, b.b);
    b.mu = Two{bb, b.b, 0, mu};
    b.eta = Two{k.unit_one(0), b.b, 0, eta};
    b.delta = Two{b.b, bb, 0, delta};
    b.eps = Two{b.b, k.unit_one(0), 0, eps};
    b.ybo = Two{bb, bb, 0, FpMat::kron_swap(n, n, k.p)};
    return b;
}

}  // namespace suite
}  // namespace catcenter
