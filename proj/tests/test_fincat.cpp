#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "catcenter/fincat.hpp"
#include "catcenter/suite.hpp"

using namespace catcenter;

TEST_CASE("trivial and discrete categories validate") {
    CHECK(validate_category(discrete_category({"x"})).ok());
    FinCategory two = discrete_category({"e", "g"});
    CHECK(validate_category(two).ok());
    CHECK(two.num_morphisms() == 2);  // no composable non-identity pairs
}

TEST_CASE("discrete category on S3 elements has |Mor| = |Ob|") {
    FinCategory c = discrete_category(suite::s3_names());
    CHECK(validate_category(c).ok());
    CHECK(c.num_morphisms() == c.num_objects());
}

TEST_CASE("empty object set is rejected") {
    CHECK_THROWS_AS(discrete_category({}), std::invalid_argument);
}

TEST_CASE("compose entry with wrong endpoints is a malformed-table error") {
    FinCategory c;
    c.add_object("a");
    c.add_object("b");
    int ia = c.add_morphism("id_a", 0, 0);
    int ib = c.add_morphism("id_b", 1, 1);
    int f = c.add_morphism("f", 0, 1);
    c.set_identity(0, ia);
    c.set_identity(1, ib);
    c.set_compose(f, ia, f);
    c.set_compose(ib, f, ia);  // wrong: id_a is not a morphism a -> b
    c.finalize();
    Report r = validate_category(c);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.law_passed("compose-total"));
    CHECK(r.law_passed("well-formed"));  // distinct from dangling identifiers
}

TEST_CASE("dangling identifier reported distinctly from law violations") {
    FinCategory c;
    c.add_object("a");
    int ia = c.add_morphism("id_a", 0, 5);  // dangling target
    c.set_identity(0, ia);
    c.finalize();
    Report r = validate_category(c);
    CHECK_FALSE(r.law_passed("well-formed"));
}

namespace {

// a non-discrete valid category to mutate: the monoid Z/4 as one object
FinCategory z4_monoid_category() {
    FinCategory c;
    c.add_object("*");
    for (int i = 0; i < 4; ++i) c.add_morphism("m" + std::to_string(i), 0, 0);
    c.set_identity(0, 0);
    for (int g = 0; g < 4; ++g)
        for (int f = 0; f < 4; ++f) c.set_compose(g, f, (g + f) % 4);
    c.finalize();
    return c;
}

}  // namespace

TEST_CASE("every single-cell corruption of a valid compose table is caught") {
    FinCategory base = z4_monoid_category();
    REQUIRE(validate_category(base).ok());
    for (int g = 0; g < 4; ++g)
        for (int f = 0; f < 4; ++f)
            for (int wrong = 0; wrong < 4; ++wrong) {
                if (wrong == (g + f) % 4) continue;
                FinCategory c = base;
                c.set_compose(g, f, wrong);
                CHECK_FALSE(validate_category(c).ok());
            }
}

TEST_CASE("identity functor and identity transformation check out") {
    FinCategory c = z4_monoid_category();
    CatFunctor id = CatFunctor::identity(c);
    CHECK(check_functor(id).ok());
    NatTransf nat{&id, &id, {c.identity(0)}};
    CHECK(check_nat(nat).ok());
}

TEST_CASE("swapping identities breaks identity preservation") {
    FinCategory c = discrete_category({"e", "g"});
    CatFunctor f = CatFunctor::identity(c);
    std::swap(f.mor[0], f.mor[1]);  // object map still the identity
    Report r = check_functor(f);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.law_passed("endpoints"));  // swapped identities land at the wrong objects
}

TEST_CASE("functor composition of valid functors is valid") {
    FinCategory c = z4_monoid_category();
    CatFunctor dbl{&c, &c, {0}, {0, 2, 0, 2}};  // m |-> m+m
    REQUIRE(check_functor(dbl).ok());
    CatFunctor comp = compose_functors(dbl, dbl);
    CHECK(check_functor(comp).ok());
}

TEST_CASE("vertical composite of natural transformations is valid") {
    // source: free-living arrow; functors into Z/4 monoid
    FinCategory c = z4_monoid_category();
    CatFunctor id = CatFunctor::identity(c);
    // components must be central for naturality; Z/4 is commutative
    NatTransf a{&id, &id, {1}};
    NatTransf b{&id, &id, {2}};
    REQUIRE(check_nat(a).ok());
    REQUIRE(check_nat(b).ok());
    NatTransf ba = vcompose_nat(b, a);
    CHECK(check_nat(ba).ok());
    CHECK(ba.comp[0] == 3);
}

TEST_CASE("validate_category passes on randomly generated group tables") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        // random relabeling of Z/5
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        FinCategory c;
        c.add_object("*");
        for (int i = 0; i < 5; ++i) c.add_morphism("m" + std::to_string(i), 0, 0);
        c.set_identity(0, perm[0]);
        std::vector<int> inv(5);
        for (int i = 0; i < 5; ++i) inv[perm[i]] = i;
        for (int g = 0; g < 5; ++g)
            for (int f = 0; f < 5; ++f) c.set_compose(g, f, perm[(inv[g] + inv[f]) % 5]);
        c.finalize();
        CHECK(validate_category(c).ok());
    }
}
