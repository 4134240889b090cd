#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "genbound/group_io.hpp"

using namespace genbound;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& body) : path("/tmp/genbound_io_test.grp") {
        std::ofstream out(path);
        out << body;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("group files parse degree, comments and generators") {
    TempFile f("# a comment\n\ndegree 4\n(1 2)\n# interior comment\n(1 2 3 4)\n");
    auto gf = perm::read_group_file(f.path);
    CHECK(gf.degree == 4);
    REQUIRE(gf.generators.size() == 2);
    CHECK(gf.generators[0].to_cycle_string() == "(1 2)");

    auto g = perm::load_group(f.path);
    CHECK(g.order() == 24);
}

TEST_CASE("a file with no generator lines is the trivial group") {
    TempFile f("degree 3\n");
    auto g = perm::load_group(f.path);
    CHECK(g.is_trivial());
    CHECK(g.degree() == 3);
}

TEST_CASE("missing or malformed degree line is a parse error") {
    TempFile f("(1 2)\n");
    CHECK_THROWS_AS(perm::read_group_file(f.path), parse_error);

    TempFile g("degree zero\n");
    CHECK_THROWS_AS(perm::read_group_file(g.path), parse_error);
}

TEST_CASE("parse errors carry the file position") {
    TempFile f("degree 4\n(1 2)\n(5 6)\n");
    try {
        perm::read_group_file(f.path);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        std::string msg = e.what();
        CHECK(msg.find(f.path) != std::string::npos);
        CHECK(msg.find(":3") != std::string::npos);
    }
}

TEST_CASE("a missing file is a parse error") {
    CHECK_THROWS_AS(perm::read_group_file("/tmp/genbound_does_not_exist.grp"), parse_error);
}

TEST_CASE("bundled catalog entries load") {
    auto s4 = perm::load_group(GENBOUND_CATALOG_DIR "/s4.grp");
    CHECK(s4.order() == 24);
    auto a5 = perm::load_group(GENBOUND_CATALOG_DIR "/a5.grp");
    CHECK(a5.order() == 60);
    auto sl25 = perm::load_group(GENBOUND_CATALOG_DIR "/sl25.grp");
    CHECK(sl25.order() == 120);
    CHECK(sl25.degree() == 24);
}
