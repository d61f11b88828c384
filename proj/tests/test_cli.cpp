#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "catcenter/cli_run.hpp"

using namespace catcenter;

namespace {

Workspace seeds() {
    // later files reference names from earlier ones, so load in this order
    Workspace ws;
    auto files = seed_suite_files();
    for (const char* name : {"z2.spec", "z4.spec", "s3.spec", "d4.spec", "posetmax.spec",
                             "kz2.spec", "conj_s3.spec"})
        parse_spec_text(files.at(name), name, ws);
    return ws;
}

}  // namespace

TEST_CASE("empty file parses to an empty workspace") {
    Workspace ws;
    parse_spec_text("", "empty.spec", ws);
    CHECK(ws.categories.empty());
    CHECK(ws.moncats.empty());
}

TEST_CASE("the bundled s3 spec yields a six-object moncat") {
    Workspace ws;
    parse_spec_text(seed_suite_files().at("s3.spec"), "s3.spec", ws);
    REQUIRE(ws.moncats.count("s3"));
    CHECK(ws.moncats.at("s3")->base.num_objects() == 6);
    CHECK(validate_moncat(*ws.moncats.at("s3")).ok());
}

TEST_CASE("unresolved names carry file and line") {
    Workspace ws;
    std::string text = "category c {\n  objects a\n  identity a = id_a\n}\n";
    // id_a was never declared as a morphism
    try {
        parse_spec_text(text, "bad.spec", ws);
        FAIL("expected a SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("bad.spec:3") != std::string::npos);
        CHECK(std::string(e.what()).find("unresolved") != std::string::npos);
    }
}

TEST_CASE("syntax errors and shape mismatches are diagnosed") {
    Workspace ws;
    CHECK_THROWS_AS(parse_spec_text("moncat m {\n  base nowhere\n}\n", "x.spec", ws), SpecError);
    CHECK_THROWS_AS(parse_spec_text("gibberish\n", "x.spec", ws), SpecError);
    std::string bad_shape =
        "matcat f2 { prime 2 }\n"
        "bimonad b {\n  matcat f2\n  dim 2\n  mu [ 1 0 ; 0 1 ]\n  eta [ 1 ; 0 ]\n"
        "  delta [ 1 0 ; 0 0 ; 0 0 ; 0 1 ]\n  eps [ 1 1 ]\n  ybo [ 1 ]\n}\n";
    try {
        Workspace ws2;
        parse_spec_text(bad_shape, "shape.spec", ws2);
        FAIL("expected a SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("shape") != std::string::npos);
    }
}

TEST_CASE("duplicate names are rejected") {
    Workspace ws;
    std::string text = "matcat f2 { prime 2 }\nmatcat f2 { prime 2 }\n";
    CHECK_THROWS_WITH_AS(parse_spec_text(text, "dup.spec", ws),
                         doctest::Contains("duplicate"), SpecError);
}

TEST_CASE("serialization round-trips bit-exactly through the serializer") {
    Workspace ws = seeds();
    std::string first = serialize_workspace(ws);
    Workspace ws2;
    parse_spec_text(first, "roundtrip.spec", ws2);
    std::string second = serialize_workspace(ws2);
    CHECK(first == second);
}

TEST_CASE("category serializer round-trips on its own") {
    FinCategory c = discrete_category({"e", "g"});
    std::string s1 = serialize_category(c, "two");
    Workspace ws;
    parse_spec_text(s1, "two.spec", ws);
    CHECK(serialize_category(*ws.categories.at("two"), "two") == s1);
}

TEST_CASE("check commands pass on the bundled suite") {
    Workspace ws = seeds();
    CHECK(run_command({"check", "category", "s3_base"}, ws).ok());
    CHECK(run_command({"check", "moncat", "s3"}, ws).ok());
    CHECK(run_command({"check", "moncat", "posetmax"}, ws).ok());
    CHECK(run_command({"check", "matcat", "f2"}, ws).ok());
    CHECK(run_command({"check", "functor", "conj_s"}, ws).ok());
    CHECK(run_command({"check", "yd", "yd1e"}, ws).ok());
    CHECK(run_command({"check", "bilax", "tkz2"}, ws).ok());
    CHECK(run_command({"check", "bilax", "fbkz2"}, ws).ok());
    CHECK(run_command({"check", "bilax-transformation", "yd1g"}, ws).ok());
}

TEST_CASE("check bimonad reports the eight bimonad law families") {
    Workspace ws = seeds();
    RunResult r = run_command({"check", "bimonad", "kz2"}, ws);
    CHECK(r.ok());
    const char* families[] = {"dl-left-monad",      "dl-right-monad",  "dl-left-comonad",
                              "dl-right-comonad",   "compat-mult-comult", "compat-counit-mult",
                              "compat-comult-unit", "compat-counit-unit"};
    for (const char* f : families) CHECK(r.report.law_passed(f));
    CHECK(run_command({"check", "bimonad", "kz2z2"}, ws).ok());
}

TEST_CASE("center command enumerates and emits a category spec") {
    Workspace ws = seeds();
    RunResult r = run_command({"center", "s3", "--side", "left", "--strength", "strong"}, ws);
    CHECK(r.ok());
    CHECK(r.human.find("center objects: 1") != std::string::npos);
    // the artifact reparses as a valid category
    Workspace out;
    parse_spec_text(r.artifact, "center.spec", out);
    CHECK(validate_category(*out.categories.at("s3_center")).ok());

    RunResult z4r = run_command({"center", "z4", "--strength", "weak", "--dualize"}, ws);
    CHECK(z4r.ok());
    CHECK(z4r.human.find("center objects: 4") != std::string::npos);

    RunResult right = run_command({"center", "z4", "--side", "right"}, ws);
    CHECK(right.ok());
    CHECK(right.human.find("center objects: 4") != std::string::npos);
}

TEST_CASE("twisted center through the cli") {
    Workspace ws = seeds();
    RunResult r = run_command(
        {"center", "s3", "--strength", "weak", "--twist", "conj_s", "conj_s"}, ws);
    CHECK(r.ok());
}

TEST_CASE("adjoints listing") {
    Workspace ws = seeds();
    RunResult r = run_command({"adjoints", "posetmax"}, ws);
    CHECK(r.ok());
    CHECK(r.human.find("autonomous: no") != std::string::npos);
    RunResult s3r = run_command({"adjoints", "s3"}, ws);
    CHECK(s3r.human.find("autonomous: yes") != std::string::npos);
}

TEST_CASE("enumerate yd and map-to-dist") {
    Workspace ws = seeds();
    RunResult r = run_command({"enumerate", "yd", "kz2", "--dim-bound", "1"}, ws);
    CHECK(r.ok());
    CHECK(r.human.find("yd structures up to dim 1: 2") != std::string::npos);
    CHECK(run_command({"map-to-dist", "kz2"}, ws).ok());
}

TEST_CASE("failing laws drive the report status") {
    Workspace ws;
    std::string text =
        "matcat f2 { prime 2 }\n"
        "bimonad broken {\n  matcat f2\n  dim 2\n"
        "  mu [ 1 0 0 1 ; 0 1 1 0 ]\n  eta [ 1 ; 0 ]\n"
        "  delta [ 1 0 ; 0 0 ; 0 0 ; 0 1 ]\n  eps [ 1 0 ]\n"  // eps not an algebra map
        "  ybo [ 1 0 0 0 ; 0 0 1 0 ; 0 1 0 0 ; 0 0 0 1 ]\n}\n";
    parse_spec_text(text, "broken.spec", ws);
    RunResult r = run_command({"check", "bimonad", "broken"}, ws);
    CHECK_FALSE(r.ok());
}

TEST_CASE("unknown commands and names are usage errors") {
    Workspace ws;
    CHECK_THROWS_AS(run_command({"frobnicate"}, ws), std::invalid_argument);
    CHECK_THROWS_AS(run_command({"check", "bimonad", "nope"}, ws), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from the timing field") {
    Workspace ws = seeds();
    RunResult a = run_command({"check", "bimonad", "kz2"}, ws);
    RunResult b = run_command({"check", "bimonad", "kz2"}, ws);
    CHECK(report_json(a.report, "check bimonad kz2", 0.0) ==
          report_json(b.report, "check bimonad kz2", 0.0));
    CHECK(report_json(a.report, "check bimonad kz2", 0.0).find("\"schema_version\": 1") !=
          std::string::npos);
}

TEST_CASE("report serialization round-trips") {
    Workspace ws = seeds();
    RunResult a = run_command({"check", "moncat", "z2"}, ws);
    std::string dumped = report_json(a.report, "check moncat z2", 0.0);
    auto parsed = nlohmann::json::parse(dumped);
    CHECK(parsed["pass"] == true);
    CHECK(parsed.dump(2) + "\n" == dumped);
}

TEST_CASE("braiding entries ride along with moncat blocks") {
    Workspace ws;
    std::string text =
        "category c2 {\n  objects e g\n  hom e e : id_e\n  hom g g : id_g\n"
        "  identity e = id_e\n  identity g = id_g\n}\n"
        "moncat b2 {\n  base c2\n  unit e\n"
        "  tensor e e = e\n  tensor e g = g\n  tensor g e = g\n  tensor g g = e\n"
        "  tensor_mor id_e id_e = id_e\n  tensor_mor id_e id_g = id_g\n"
        "  tensor_mor id_g id_e = id_g\n  tensor_mor id_g id_g = id_e\n"
        "  braiding e e = id_e\n  braiding e g = id_g\n"
        "  braiding g e = id_g\n  braiding g g = id_e\n}\n";
    parse_spec_text(text, "braid.spec", ws);
    RunResult r = run_command({"check", "moncat", "b2"}, ws);
    CHECK(r.ok());
    CHECK(r.report.law_passed("ybo1.yang-baxter"));
    // serialization keeps the braiding and round-trips
    std::string s1 = serialize_workspace(ws);
    Workspace ws2;
    parse_spec_text(s1, "braid2.spec", ws2);
    CHECK(serialize_workspace(ws2) == s1);
}

TEST_CASE("twocat blocks: deloop shorthand and explicit tables") {
    Workspace ws = seeds();
    std::string text =
        "twocat delz2 {\n  deloop z2\n}\n"
        "twocat delbim {\n  deloop_bimodule z2\n}\n";
    parse_spec_text(text, "k.spec", ws);
    CHECK(run_command({"check", "twocat", "delz2"}, ws).ok());
    CHECK(run_command({"check", "twocat", "delbim"}, ws).ok());

    std::string explicit_text =
        "category homcat {\n  objects u\n  hom u u : id_u\n  identity u = id_u\n}\n"
        "twocat tiny {\n  zero_cells X\n  hom X X = homcat\n  unit X = u\n"
        "  hcomp X X X : u u = u\n  hcomp2 X X X : id_u id_u = id_u\n}\n";
    parse_spec_text(explicit_text, "tiny.spec", ws);
    CHECK(run_command({"check", "twocat", "tiny"}, ws).ok());
}

TEST_CASE("functor2 and transformation2 blocks") {
    Workspace ws = seeds();
    std::string text =
        "twocat delz2 {\n  deloop z2\n}\n"
        "functor2 idf {\n  from delz2 to delz2\n  obj 0 = 0\n"
        "  one e = e\n  one g1 = g1\n  two id_e = id_e\n  two id_g1 = id_g1\n}\n"
        "transformation2 idt {\n  kind colax\n  from idf to idf\n  one 0 = e\n"
        "  two e = id_e\n  two g1 = id_g1\n}\n";
    parse_spec_text(text, "f2.spec", ws);
    CHECK(run_command({"check", "functor2", "idf"}, ws).ok());
    CHECK(run_command({"check", "transformation2", "idt"}, ws).ok());
}
