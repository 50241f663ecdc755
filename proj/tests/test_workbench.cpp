#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/field.hpp>
#include <catalg/workbench.hpp>

#include <regex>

#include "fixtures.hpp"

using namespace catalg;

namespace {
bool gfp_ready = [] { GFp::set_modulus(101); return true; }();

std::string strip_timing(const std::string& report) {
    static const std::regex timing("time_ms: [0-9]+\n");
    return std::regex_replace(report, timing, "");
}
} // namespace

TEST_CASE("bundled fixture texts parse to the oracle structures") {
    auto wb = parse_spec<Rational>(bundled_fixture_text("example43b"));
    auto oracle = fx::example43b<Rational>();

    const auto& d = wb.category("D");
    CHECK(d.objects == oracle.F.source.objects);
    REQUIRE(d.morphisms.size() == oracle.F.source.morphisms.size());
    for (std::size_t f = 0; f < d.morphisms.size(); ++f) {
        CHECK(d.morphisms[f].id == oracle.F.source.morphisms[f].id);
        CHECK(d.morphisms[f].dom == oracle.F.source.morphisms[f].dom);
        CHECK(d.morphisms[f].cod == oracle.F.source.morphisms[f].cod);
    }
    CHECK(d.comp == oracle.F.source.comp);

    const auto& f = wb.functor("F");
    CHECK(f.obj_map == oracle.F.obj_map);
    CHECK(f.mor_map == oracle.F.mor_map);

    const auto& s = wb.precosheaf("S");
    REQUIRE(s.mor_map.size() == oracle.S.mor_map.size());
    for (std::size_t m = 0; m < s.mor_map.size(); ++m) CHECK(s.mor_map[m] == oracle.S.mor_map[m]);
    for (std::size_t x = 0; x < s.obj_alg.size(); ++x)
        CHECK(s.obj_alg[x].struct_consts == oracle.S.obj_alg[x].struct_consts);
}

TEST_CASE("all bundled fixtures parse and validate") {
    for (const auto& name : bundled_fixture_names()) {
        CAPTURE(name);
        auto wb = parse_spec<Rational>(bundled_fixture_text(name));
        for (const auto& [n, c] : wb.categories) CHECK(validate_category(c).empty());
        for (const auto& [n, fun] : wb.functors) CHECK(validate_functor(fun).empty());
        for (const auto& [n, s] : wb.precosheaves) CHECK(validate_precosheaf(s).empty());
        CHECK_FALSE(wb.tasks.empty());
    }
}

TEST_CASE("parse errors carry line and column") {
    auto expect_error = [](const std::string& text, std::size_t line,
                           const std::string& fragment) {
        try {
            parse_spec<Rational>(text);
            FAIL_CHECK("expected a parse error containing '" << fragment << "'");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("bogus D\n", 1, "unknown declaration");
    expect_error("category D\n  objects x\n  identity x 1x\nend\n"
                 "category D\n  objects y\n  identity y 1y\nend\n",
                 5, "duplicate id");
    expect_error("precosheaf S D\nend\n", 1, "unknown category: D");
    expect_error("category D\n  objects x\n  identity x 1x\nend\n"
                 "algebra A field\n"
                 "precosheaf S D\n  at x A\n  map 1x = 1 2\nend\n",
                 8, "trailing tokens");
    expect_error("category D\n  objects x\n  identity x 1x\n  morphism f y x\nend\n", 4,
                 "unknown object: y");
    expect_error("field gf x\n", 1, "bad modulus");
    expect_error("category D\n  objects x\n", 1, "unterminated");
}

TEST_CASE("empty task list is a valid no-op run") {
    auto wb = parse_spec<Rational>("category D\n  objects x\n  identity x 1x\nend\n");
    CHECK(wb.tasks.empty());
    auto report = run(wb);
    CHECK(report.tasks.empty());
    CHECK(report.exit_code() == 0);
}

TEST_CASE("explicit algebra blocks parse into valid algebras") {
    auto wb = parse_spec<Rational>(
        "algebra E explicit\n"
        "  basis u v\n"
        "  unit 1 0\n"
        "  mult u u = 1 0\n"
        "  mult u v = 0 1\n"
        "  mult v u = 0 1\n"
        "end\n");
    const auto& e = wb.algebra("E");
    CHECK(e.dim() == 2);
    CHECK(validate_algebra(e).empty()); // k[v]/(v^2)
}

TEST_CASE("a task naming an undeclared object errors without stopping the run") {
    auto wb = parse_spec<Rational>(
        "category D\n  objects x\n  identity x 1x\nend\n"
        "task verify weakbialg NOPE\n"
        "task check\n");
    auto report = run(wb);
    REQUIRE(report.tasks.size() == 2);
    CHECK(report.tasks[0].status == "error");
    CHECK(report.tasks[1].status == "pass");
    CHECK(report.exit_code() == 2);
}

TEST_CASE("failed verification yields exit code 1 and a witness") {
    auto wb = parse_spec<Rational>(bundled_fixture_text("parallel_collapse"));
    auto report = run(wb);
    CHECK(report.exit_code() == 1);
    bool saw_witness = false;
    for (const auto& t : report.tasks)
        if (t.status == "fail")
            for (const auto& d : t.detail)
                if (d.find("witness") != std::string::npos) saw_witness = true;
    CHECK(saw_witness);
}

TEST_CASE("reports are byte-identical across runs modulo timing") {
    auto wb = parse_spec<Rational>(bundled_fixture_text("example43b"));
    auto a = strip_timing(run(wb).render());
    auto b = strip_timing(run(wb).render());
    CHECK(a == b);
    CHECK(a.find("summary: tasks=11 pass=11 fail=0 error=0") != std::string::npos);

    auto c = strip_timing(run(wb, /*parallel=*/true).render());
    CHECK(a == c);
}

TEST_CASE("field declarations are peeked without a full parse") {
    CHECK(peek_field("field rationals\n").first == "rationals");
    auto gf = peek_field("# comment\nfield gf 101\ncategory D\nend\n");
    CHECK(gf.first == "gf");
    CHECK(gf.second == 101);
    CHECK(peek_field("category D\n  objects x\n  identity x 1x\nend\n").first == "rationals");
}

TEST_CASE("the full fixture task lists run over GF(101) as well") {
    for (const auto& name : bundled_fixture_names()) {
        CAPTURE(name);
        auto wb = parse_spec<GFp>(bundled_fixture_text(name));
        auto report = run(wb);
        int expected = (name == "parallel_collapse") ? 1 : 0;
        CHECK(report.exit_code() == expected);
    }
}
