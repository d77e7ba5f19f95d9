#include <doctest.h>

#include <fstream>

#include "codemine/errors.hpp"
#include "codemine/manifest.hpp"
#include "support/temp_dir.hpp"

using namespace codemine;
using testsupport::TempDir;

namespace {

std::filesystem::path write_manifest(const TempDir& dir, const std::string& text) {
    auto path = dir / "manifest.tsv";
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("manifest entries keep file order") {
    TempDir dir;
    auto path = write_manifest(dir, "p1\t/tmp/a\np2\t/tmp/b\np3\t/tmp/c\n");
    auto specs = load_manifest(path);
    REQUIRE(specs.size() == 3);
    CHECK(specs[0].id == "p1");
    CHECK(specs[1].id == "p2");
    CHECK(specs[2].id == "p3");
    CHECK(specs[1].source == "/tmp/b");
    CHECK(specs[0].name == "p1");
}

TEST_CASE("empty manifest yields an empty list") {
    TempDir dir;
    CHECK(load_manifest(write_manifest(dir, "")).empty());
}

TEST_CASE("comments and blank lines are skipped") {
    TempDir dir;
    auto specs = load_manifest(write_manifest(dir, "# heading\n\np1\t/tmp/a\n\n# tail\n"));
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].id == "p1");
}

TEST_CASE("duplicate ids are rejected by name") {
    TempDir dir;
    auto path = write_manifest(dir, "p1\t/tmp/a\np1\t/tmp/b\n");
    CHECK_THROWS_WITH_AS(load_manifest(path), doctest::Contains("p1"), DuplicateKey);
}

TEST_CASE("malformed entries report the line number") {
    TempDir dir;
    auto path = write_manifest(dir, "p1\t/tmp/a\nno-tab-here\n");
    CHECK_THROWS_WITH_AS(load_manifest(path), doctest::Contains("line 2"), FormatError);
}

TEST_CASE("unreadable manifest raises IoError") {
    CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.tsv"), IoError);
}
