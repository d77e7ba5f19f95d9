#include <doctest.h>

#include <map>

#include "codemine/metrics.hpp"
#include "support/java_fixtures.hpp"

using namespace codemine;
using namespace codemine::java;
using testsupport::java_fixtures;

namespace {

std::map<std::string, const Declaration*> declarations_by_id(const CompilationUnit& unit) {
    std::map<std::string, const Declaration*> out;
    for (const Declaration* decl : enumerate_class_declarations(unit))
        out[decl->qualified_id] = decl;
    return out;
}

CompilationUnit parse_fixture(const testsupport::JavaFixture& fixture) {
    ParseOutcome outcome = parse_compilation_unit(fixture.source, fixture.file_name);
    REQUIRE_MESSAGE(outcome.ok(), fixture.file_name << ": "
                                                    << (outcome.error ? outcome.error->message
                                                                      : std::string()));
    return std::move(*outcome.unit);
}

// Independent recursion for the cumulative metrics: collect direct inner
// declarations by hand (not through for_each_direct_inner) and sum.
void collect_inner(const Statement& st, std::vector<const Declaration*>& out);

void collect_inner(const std::vector<Expression>& exprs, std::vector<const Declaration*>& out) {
    for (const Expression& expr : exprs) {
        if (expr.anonymous_declaration) out.push_back(expr.anonymous_declaration.get());
        collect_inner(expr.children, out);
    }
}

void collect_inner(const Statement& st, std::vector<const Declaration*>& out) {
    if (st.local_declaration) out.push_back(st.local_declaration.get());
    collect_inner(st.expressions, out);
    for (const Statement& child : st.children) collect_inner(child, out);
}

std::vector<const Declaration*> direct_inner(const Declaration& decl) {
    std::vector<const Declaration*> out;
    for (const Declaration& nested : decl.nested_declarations) out.push_back(&nested);
    for (const auto& field : decl.fields) collect_inner(field.initializer_expressions, out);
    for (const Statement& block : decl.initializer_blocks) collect_inner(block, out);
    for (const Method& method : decl.methods)
        if (method.has_body) collect_inner(method.body, out);
    return out;
}

struct OracleCumulative {
    long cnom = 0, cnof = 0, cnosim = 0, cnoad = 0, cnond = 0;
};

OracleCumulative oracle_cumulative(const Declaration& decl) {
    OracleCumulative total{compute_nom(decl), compute_nof(decl), compute_nosim(decl),
                           compute_noad(decl), compute_nond(decl)};
    for (const Declaration* inner : direct_inner(decl)) {
        OracleCumulative c = oracle_cumulative(*inner);
        total.cnom += c.cnom;
        total.cnof += c.cnof;
        total.cnosim += c.cnosim;
        total.cnoad += c.cnoad;
        total.cnond += c.cnond;
    }
    return total;
}

} // namespace

TEST_CASE("all twelve metrics match the hand-computed fixtures") {
    for (const auto& fixture : java_fixtures()) {
        CompilationUnit unit = parse_fixture(fixture);
        auto decls = declarations_by_id(unit);
        REQUIRE_MESSAGE(decls.size() == fixture.classes.size(), fixture.file_name);

        for (const auto& expected : fixture.classes) {
            INFO(fixture.file_name << " / " << expected.qualified_id);
            REQUIRE(decls.count(expected.qualified_id) == 1);
            MetricVector m = compute_metrics(*decls.at(expected.qualified_id));
            CHECK(m.nom == expected.nom);
            CHECK(m.nof == expected.nof);
            CHECK(m.nond == expected.nond);
            CHECK(m.nosim == expected.nosim);
            CHECK(m.mdodn == expected.mdodn);
            CHECK(m.noad == expected.noad);
            CHECK(m.rfc == expected.rfc);
            CHECK(m.cnom == expected.cnom);
            CHECK(m.cnof == expected.cnof);
            CHECK(m.cnosim == expected.cnosim);
            CHECK(m.cnoad == expected.cnoad);
            CHECK(m.cnond == expected.cnond);
        }
    }
}

TEST_CASE("a heavy inner class never leaks into the container's counts") {
    const auto& light = testsupport::fixture_by_name("StackLeakLight.java");
    const auto& heavy = testsupport::fixture_by_name("StackLeakHeavy.java");
    CompilationUnit light_unit = parse_fixture(light);
    CompilationUnit heavy_unit = parse_fixture(heavy);

    MetricVector l = compute_metrics(light_unit.declarations[0]);
    MetricVector h = compute_metrics(heavy_unit.declarations[0]);
    CHECK(l.nosim == h.nosim);
    CHECK(l.nom == h.nom);
    CHECK(l.rfc == h.rfc);
    CHECK(l.noad == h.noad);
    CHECK(l.nond == h.nond);
    CHECK(l.cnosim != h.cnosim); // only the cumulative view sees the inner body
}

TEST_CASE("cumulative metrics satisfy the recursion on every declaration") {
    for (const auto& fixture : java_fixtures()) {
        CompilationUnit unit = parse_fixture(fixture);
        for (const Declaration* decl : enumerate_class_declarations(unit)) {
            INFO(fixture.file_name << " / " << decl->qualified_id);
            CumulativeCounts got = compute_cumulative(*decl);
            OracleCumulative want = oracle_cumulative(*decl);
            CHECK(got.cnom == want.cnom);
            CHECK(got.cnof == want.cnof);
            CHECK(got.cnosim == want.cnosim);
            CHECK(got.cnoad == want.cnoad);
            CHECK(got.cnond == want.cnond);

            MetricVector m = compute_metrics(*decl);
            CHECK(m.cnom >= m.nom);
            CHECK(m.cnof >= m.nof);
            CHECK(m.cnosim >= m.nosim);
            CHECK(m.cnoad >= m.noad);
            CHECK(m.cnond >= m.nond);
            CHECK(m.rfc >= m.nom);
        }
    }
}

TEST_CASE("mdodn is positive exactly when a top-level class has nested declarations") {
    for (const auto& fixture : java_fixtures()) {
        CompilationUnit unit = parse_fixture(fixture);
        for (const Declaration& decl : unit.declarations) {
            INFO(fixture.file_name << " / " << decl.qualified_id);
            CHECK((compute_mdodn(decl) >= 1) == (compute_nond(decl) >= 1));
        }
    }
}

TEST_CASE("statement counting rules on the spec anchors") {
    auto nosim_of = [](const std::string& body) {
        std::string source = "class T { void f()" + body + " }";
        ParseOutcome outcome = parse_compilation_unit(source, "T.java");
        REQUIRE(outcome.ok());
        return compute_nosim(outcome.unit->declarations[0]);
    };
    CHECK(nosim_of("{}") == 1);                  // the body block itself
    CHECK(nosim_of("{int x=1; g();}") == 3);     // block + two statements
    CHECK(nosim_of("{;}") == 2);                 // empty statement counts
    CHECK(nosim_of("{{}}") == 2);                // nested block counts

    ParseOutcome no_methods = parse_compilation_unit("class T { int x; }", "T.java");
    REQUIRE(no_methods.ok());
    CHECK(compute_nosim(no_methods.unit->declarations[0]) == 0);
}

TEST_CASE("metric dumps are sorted and share one key set") {
    std::vector<MetricsRow> rows;
    MetricsRow r1{"p2", "b.java#B", DeclKind::Class, {}, std::nullopt};
    MetricsRow r2{"p1", "a.java#A", DeclKind::Class, {}, std::nullopt};
    r1.metrics.nom = 4;
    r2.metrics.nom = 7;
    rows.push_back(r1);
    rows.push_back(r2);

    std::string nom = format_metric_dump(rows, "NOM");
    CHECK(nom == "p1\ta.java#A\t7\np2\tb.java#B\t4\n");

    for (std::string_view name : kMetricNames) {
        std::string dump = format_metric_dump(rows, name);
        // identical key columns in every dump
        CHECK(dump.find("p1\ta.java#A\t") != std::string::npos);
        CHECK(dump.find("p2\tb.java#B\t") != std::string::npos);
    }
}
