#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catcenter/bimonad.hpp"
#include "catcenter/suite.hpp"

using namespace catcenter;

namespace {

struct MatFixture {
    MatTwoCat k{2};
    Bimonad kz2;
    MatFixture() : kz2(suite::group_algebra_bimonad(k, suite::cyclic_table(2))) {}
};

Bimonad trivial_mat_bimonad(const MatTwoCat& k) {
    Bimonad b;
    b.k = &k;
    b.b = k.dim(1);
    b.mu = k.id2(b.b);
    b.eta = k.id2(b.b);
    b.delta = k.id2(b.b);
    b.eps = k.id2(b.b);
    b.ybo = k.id2(b.b);
    return b;
}

}  // namespace

TEST_CASE("the identity 1-cell with identity structures is a bimonad") {
    MatTwoCat k(2);
    CHECK(check_bimonad(trivial_mat_bimonad(k)).ok());
}

TEST_CASE("group algebras pass every bimonad law") {
    MatFixture f;
    CHECK(check_bimonad(f.kz2).ok());
    auto klein = [] {
        std::vector<std::vector<int>> t(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
        return t;
    }();
    CHECK(check_bimonad(suite::group_algebra_bimonad(f.k, klein)).ok());
}

TEST_CASE("checker agrees with direct classical-formula evaluation") {
    MatFixture f;
    const FpMat &mu = f.kz2.mu.m, &eta = f.kz2.eta.m, &dl = f.kz2.delta.m, &ep = f.kz2.eps.m;
    FpMat c = FpMat::kron_swap(2, 2, 2);
    FpMat i2 = FpMat::identity(2, 2);
    // bialgebra compatibility evaluated with raw kron/mul, no TwoCat involved
    CHECK(dl * mu == kron(mu, mu) * kron(kron(i2, c), i2) * kron(dl, dl));
    CHECK(ep * mu == kron(ep, ep));
    CHECK(dl * eta == kron(eta, eta));
    CHECK((ep * eta) == FpMat::identity(1, 2));
    // the four distributive laws of the swap
    CHECK(c * kron(mu, i2) == kron(i2, mu) * kron(c, i2) * kron(i2, c));
    CHECK(c * kron(i2, mu) == kron(mu, i2) * kron(i2, c) * kron(c, i2));
    CHECK(kron(dl, i2) * c == kron(i2, c) * kron(c, i2) * kron(i2, dl));
    CHECK(kron(i2, dl) * c == kron(c, i2) * kron(i2, c) * kron(dl, i2));
}

TEST_CASE("function-algebra coproduct against the group product fails the first compatibility") {
    MatFixture f;
    Bimonad bad = f.kz2;
    FpMat dual_delta(4, 2, 2);  // delta(d_h) = sum над ab=h of d_a (x) d_b
    auto t = suite::cyclic_table(2);
    for (int h = 0; h < 2; ++h)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (t[a][b] == h) dual_delta.set(a * 2 + b, h, 1);
    bad.delta = Two{bad.b, f.k.hcomp1(bad.b, bad.b), 0, dual_delta};
    Report r = check_bimonad(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.law_passed("compat-mult-comult"));
}

TEST_CASE("single-cell mutations of any structure matrix break at least one law") {
    MatFixture f;
    auto mutate_and_check = [&](auto set_cell, int rows, int cols) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Bimonad m = f.kz2;
                set_cell(m, i, j);
                CHECK_FALSE(check_bimonad(m).ok());
            }
    };
    mutate_and_check([](Bimonad& m, int i, int j) { m.mu.m.set(i, j, m.mu.m.at(i, j) ^ 1); }, 2,
                     4);
    mutate_and_check(
        [](Bimonad& m, int i, int j) { m.delta.m.set(i, j, m.delta.m.at(i, j) ^ 1); }, 4, 2);
    mutate_and_check([](Bimonad& m, int i, int j) { m.eta.m.set(i, j, m.eta.m.at(i, j) ^ 1); },
                     2, 1);
    mutate_and_check([](Bimonad& m, int i, int j) { m.eps.m.set(i, j, m.eps.m.at(i, j) ^ 1); },
                     1, 2);
    mutate_and_check([](Bimonad& m, int i, int j) { m.ybo.m.set(i, j, m.ybo.m.at(i, j) ^ 1); },
                     4, 4);
}

TEST_CASE("b acting on itself by multiplication is a module comonad") {
    MatFixture f;
    TwoYbo swap = swap_two_ybo(f.k);
    CHECK(check_module_comonad(f.kz2.comonad(), f.kz2.mu, f.kz2, swap).ok());

    Bimonad triv = trivial_mat_bimonad(f.k);
    TwoYbo swap1 = swap_two_ybo(f.k);
    CHECK(check_module_comonad(triv.comonad(), triv.mu, triv, swap1).ok());

    // corrupted action: swap two columns of mu
    Two bad_action = f.kz2.mu;
    for (int r = 0; r < 2; ++r) {
        int a = bad_action.m.at(r, 0), b = bad_action.m.at(r, 1);
        bad_action.m.set(r, 0, b);
        bad_action.m.set(r, 1, a);
    }
    Report r = check_module_comonad(f.kz2.comonad(), bad_action, f.kz2, swap);
    CHECK_FALSE(r.ok());
}

TEST_CASE("b coacting on itself by comultiplication is a comodule monad") {
    MatFixture f;
    TwoYbo swap = swap_two_ybo(f.k);
    CHECK(check_comodule_monad(f.kz2.monad(), f.kz2.delta, f.kz2, swap).ok());
}

TEST_CASE("b is a relative bimonad module over itself, on both sides") {
    MatFixture f;
    TwoYbo swap = swap_two_ybo(f.k);
    CHECK(check_relative_module(f.kz2.b, f.kz2.mu, f.kz2.delta, f.kz2.monad(), f.kz2.delta,
                                f.kz2, swap)
              .ok());
    CHECK(check_left_relative_module(f.kz2.b, f.kz2.mu, f.kz2.delta, f.kz2.monad(),
                                     f.kz2.delta, f.kz2, swap)
              .ok());
}

TEST_CASE("comodule structure on a transformation built from a center object") {
    // colax transformations between the identity pseudofunctors of
    // Del(C(Z/2)) are the weak center objects; each 1-cell component gets a
    // comodule structure over the (trivial) bimonad on the unit 1-cell
    MonCat z2 = suite::z2();
    TableTwoCat k = deloop_moncat(z2);
    TableFunctor2 idf = identity_functor2(k);
    Bimonad btriv;
    btriv.k = &k;
    btriv.b = k.unit_one(0);
    btriv.mu = btriv.eta = btriv.delta = btriv.eps = btriv.ybo = k.id2(btriv.b);

    auto transf = enumerate_transformations(idf, idf, Transformation2::Colax);
    REQUIRE(transf.size() == 2);
    for (const auto& phi : transf) {
        ComoduleStructure co = transformation_comodule(phi, btriv);
        CHECK(check_comodule(co).ok());
        // trivial coaction through the pushed unit
        CHECK(co.coaction == k.id2(phi.one[0]));
    }
    auto lax = enumerate_transformations(idf, idf, Transformation2::Lax);
    for (const auto& psi : lax) {
        ModuleStructure mo = transformation_module(psi, btriv);
        CHECK(check_module(mo).ok());
    }
}

TEST_CASE("b is a Hopf bimodule over itself") {
    MatFixture f;
    TwoYbo swap = swap_two_ybo(f.k);
    HopfBimodule h{f.kz2.b, f.kz2.mu, f.kz2.mu, f.kz2.delta, f.kz2.delta};
    CHECK(check_hopf_bimodule(h, f.kz2, swap).ok());
}

TEST_CASE("lambda of every suite bimonad satisfies the four distributive laws") {
    MatFixture f;
    CHECK(check_lambda(f.kz2, make_lambda(f.kz2)).ok());
    auto klein = [] {
        std::vector<std::vector<int>> t(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
        return t;
    }();
    Bimonad big = suite::group_algebra_bimonad(f.k, klein);
    CHECK(check_lambda(big, make_lambda(big)).ok());
    CHECK(check_lambda(trivial_mat_bimonad(f.k), make_lambda(trivial_mat_bimonad(f.k))).ok());
}

TEST_CASE("lambda built from a broken ybo fails the matching law") {
    MatFixture f;
    // find a ybo mutation that breaks the left monad distributive law
    bool exercised = false;
    for (int i = 0; i < 4 && !exercised; ++i)
        for (int j = 0; j < 4 && !exercised; ++j) {
            Bimonad m = f.kz2;
            m.ybo.m.set(i, j, m.ybo.m.at(i, j) ^ 1);
            Report br = check_bimonad(m);
            if (br.law_passed("monad.associativity") && !br.law_passed("dl-left-monad")) {
                Report lr = check_lambda(m, make_lambda(m));
                CHECK_FALSE(lr.law_passed("lambda-monad-dl"));
                exercised = true;
            }
        }
    CHECK(exercised);
}

TEST_CASE("yd structures on dim-1 carriers over F2[Z/2]") {
    MatFixture f;
    auto found = enumerate_yd_modules(f.kz2, f.k, 1);
    REQUIRE(found.size() == 2);  // trivial action; coaction by d_e or d_g
    for (const auto& v : found) {
        CHECK(v.action == FpMat(2, {{1, 1}}));
        CHECK(check_yd_module(f.kz2, v, f.k).ok());
    }
    CHECK(found[0].coaction == FpMat(2, {{1}, {0}}));
    CHECK(found[1].coaction == FpMat(2, {{0}, {1}}));

    // independent brute force with the classical formulas, no TwoCat involved
    FpMat i2 = FpMat::identity(2, 2), i1 = FpMat::identity(1, 2);
    FpMat c = FpMat::kron_swap(2, 2, 2);
    const FpMat &mu = f.kz2.mu.m, &eta = f.kz2.eta.m, &dl = f.kz2.delta.m, &ep = f.kz2.eps.m;
    int count = 0;
    FpMat act(1, 2, 2);
    do {
        FpMat coact(2, 1, 2);
        do {
            bool module = act * kron(mu, i1) == act * kron(i2, act) &&
                          act * kron(eta, i1) == i1;
            bool comodule = kron(dl, i1) * coact == kron(i2, coact) * coact &&
                            kron(ep, i1) * coact == i1;
            FpMat swap_bv = FpMat::kron_swap(2, 1, 2);
            FpMat swap_vb = FpMat::kron_swap(1, 2, 2);
            FpMat lhs = kron(mu, i1) * kron(i2, swap_vb) * kron(coact, i2) * kron(act, i2) *
                        kron(i2, swap_bv) * kron(dl, i1);
            FpMat rhs = kron(mu, act) * kron(kron(i2, c), i1) * kron(dl, coact);
            if (module && comodule && lhs == rhs) ++count;
        } while (next_matrix(coact));
    } while (next_matrix(act));
    CHECK(count == 2);
}

TEST_CASE("trivial action and coaction on the unit carrier pass the YD law") {
    MatFixture f;
    YdModule v{1, FpMat(2, {{1, 1}}), FpMat(2, {{1}, {0}})};
    CHECK(check_yd_module(f.kz2, v, f.k).ok());
}

TEST_CASE("dim-2 YD structures: checker matches the raw brute force") {
    // The regular pair (mu, delta) is NOT one of them: evaluating the YD
    // diagram on g(x)e gives e(x)g on one side and g(x)g on the other.
    // (Classically B acts on itself adjointly, which needs the antipode.)
    MatFixture f;
    YdModule regular{2, f.kz2.mu.m, f.kz2.delta.m};
    CHECK_FALSE(check_yd_module(f.kz2, regular, f.k).ok());

    auto found = enumerate_yd_modules(f.kz2, f.k, 2);
    int dim2 = 0;
    for (const auto& v : found) dim2 += v.dim == 2;
    CHECK(dim2 == 14);  // frozen from the independent classical-formula search
    CHECK(found.size() == 16);
}

TEST_CASE("yd enumeration respects the candidate cap") {
    MatFixture f;
    auto klein = [] {
        std::vector<std::vector<int>> t(16, std::vector<int>(16));
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b) t[a][b] = a ^ b;
        return t;
    }();
    Bimonad big = suite::group_algebra_bimonad(f.k, klein);
    CHECK_THROWS_WITH_AS(enumerate_yd_modules(big, f.k, 2),
                         doctest::Contains("CATCENTER_MAX_CANDIDATES"), std::invalid_argument);
}

TEST_CASE("the backend is not tied to F2: F3[Z/3] works end to end") {
    MatTwoCat k3(3);
    Bimonad kz3 = suite::group_algebra_bimonad(k3, suite::cyclic_table(3));
    CHECK(check_bimonad(kz3).ok());
    CHECK(check_lambda(kz3, make_lambda(kz3)).ok());
    TwoYbo swap = swap_two_ybo(k3);
    CHECK(check_relative_module(kz3.b, kz3.mu, kz3.delta, kz3.monad(), kz3.delta, kz3, swap)
              .ok());
    auto found = enumerate_yd_modules(kz3, k3, 1);
    CHECK(found.size() == 3);  // one coaction per group-like of Z/3
}

TEST_CASE("pushing structures through the identity functor changes nothing") {
    MatTwoCat k(2);
    Bimonad b = suite::group_algebra_bimonad(k, suite::cyclic_table(2));
    // identity on the matrix delooping as a lambda-backed functor
    FnFunctor2 idf;
    idf.src = idf.dst = &k;
    idf.lax = idf.colax = idf.pseudo = true;
    idf.obj_fn = [](int a) { return a; };
    idf.one_fn = [](const One& f) { return f; };
    idf.two_fn = [](const Two& t) { return t; };
    idf.lax2_fn = [&k](const One& g, const One& f) { return k.id2(k.hcomp1(g, f)); };
    idf.lax0_fn = [&k](int a) { return k.id2(k.unit_one(a)); };
    idf.colax2_fn = idf.lax2_fn;
    idf.colax0_fn = idf.lax0_fn;

    Monad m = push_monad(idf, b.monad());
    CHECK(m.mu == b.mu);
    CHECK(check_monad(m).ok());
    Comonad c = push_comonad(idf, b.comonad());
    CHECK(c.delta == b.delta);

    ModuleStructure reg{b.monad(), b.b, b.mu, ActSide::Right};
    REQUIRE(check_module(reg).ok());
    ModuleStructure pushed = induced_module(idf, reg);
    CHECK(pushed.action == reg.action);
    CHECK(check_module(pushed).ok());

    ComoduleStructure coreg{b.comonad(), b.b, b.delta, ActSide::Right};
    REQUIRE(check_comodule(coreg).ok());
    ComoduleStructure copushed = induced_comodule(idf, coreg);
    CHECK(copushed.coaction == coreg.coaction);
    CHECK(check_comodule(copushed).ok());
}

TEST_CASE("transformation structure builders reject the wrong kind") {
    MonCat z2 = suite::z2();
    TableTwoCat k = deloop_moncat(z2);
    TableFunctor2 idf = identity_functor2(k);
    Bimonad btriv;
    btriv.k = &k;
    btriv.b = k.unit_one(0);
    btriv.mu = btriv.eta = btriv.delta = btriv.eps = btriv.ybo = k.id2(btriv.b);
    Transformation2 lax = identity_transformation2(idf, Transformation2::Lax);
    CHECK_THROWS_AS(transformation_comodule(lax, btriv), std::invalid_argument);
    Transformation2 colax = identity_transformation2(idf, Transformation2::Colax);
    CHECK_THROWS_AS(transformation_module(colax, btriv), std::invalid_argument);
}
