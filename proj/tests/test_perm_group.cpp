#include <stdexcept>

#include "doctest.h"
#include "genbound/perm_group.hpp"

using namespace genbound;
using perm::Permutation;
using perm::PermGroup;
using perm::parse_permutation;

namespace {

PermGroup sym(uint32_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(parse_permutation("(1 2)", n));
    if (n >= 3) {
        std::string cyc = "(1";
        for (uint32_t i = 2; i <= n; ++i) cyc += " " + std::to_string(i);
        cyc += ")";
        gens.push_back(parse_permutation(cyc, n));
    }
    return PermGroup::closure(n, std::move(gens));
}

} // namespace

TEST_CASE("closure builds the expected orders") {
    CHECK(sym(3).order() == 6);
    CHECK(sym(4).order() == 24);
    CHECK(sym(5).order() == 120);

    auto a4 = PermGroup::closure(4, {parse_permutation("(1 2 3)", 4), parse_permutation("(2 3 4)", 4)});
    CHECK(a4.order() == 12);

    auto c6 = PermGroup::closure(6, {parse_permutation("(1 2 3 4 5 6)", 6)});
    CHECK(c6.order() == 6);

    // no generators means the trivial group
    auto triv = PermGroup::closure(3, {});
    CHECK(triv.is_trivial());
    CHECK(triv.degree() == 3);
}

TEST_CASE("closure stops at the element budget") {
    perm::ClosureBudget tiny{50};
    std::vector<Permutation> gens = {parse_permutation("(1 2)", 5), parse_permutation("(1 2 3 4 5)", 5)};
    CHECK_THROWS_AS(PermGroup::closure(5, gens, tiny), budget_error);
}

TEST_CASE("from_elements checks closure and re-derives generators") {
    auto s3 = sym(3);
    auto rebuilt = PermGroup::from_elements(s3.elements());
    CHECK(rebuilt.order() == 6);
    CHECK(rebuilt.elements() == s3.elements());
    // the greedy generator pick still generates
    CHECK(PermGroup::closure(3, rebuilt.generators()).order() == 6);

    std::vector<Permutation> open = {Permutation(3), parse_permutation("(1 2 3)", 3)};
    CHECK_THROWS_AS(PermGroup::from_elements(open), std::invalid_argument);
}

TEST_CASE("canonical element order starts at the identity") {
    auto s4 = sym(4);
    CHECK(s4.elements()[0].is_identity());
    CHECK(s4.identity() == Permutation(4));
    CHECK(s4.index_of(s4.identity()) == 0);

    auto t = parse_permutation("(1 2)", 4);
    REQUIRE(s4.contains(t));
    auto idx = s4.index_of(t);
    REQUIRE(idx.has_value());
    CHECK(s4.elements()[*idx] == t);

    CHECK_FALSE(s4.index_of(parse_permutation("(1 2 3 4 5)", 5)).has_value());
}

TEST_CASE("orbits partition the domain") {
    auto gens = std::vector<Permutation>{parse_permutation("(1 2)", 4)};
    auto os = perm::orbits(gens, 4);
    REQUIRE(os.size() == 3);
    CHECK(os[0] == std::vector<perm::Point>{0, 1});
    CHECK(os[1] == std::vector<perm::Point>{2});
    CHECK(os[2] == std::vector<perm::Point>{3});

    CHECK(perm::orbits(sym(4)).size() == 1);
}

TEST_CASE("point stabiliser of Sym(4) is Sym(3) on the rest") {
    auto s4 = sym(4);
    auto stab = perm::point_stabilizer(s4, 0);
    CHECK(stab.order() == 6);
    for (const auto& e : stab.elements()) CHECK(e(0) == 0);
    CHECK_THROWS_AS(perm::point_stabilizer(s4, 7), std::invalid_argument);
}

TEST_CASE("transitivity") {
    CHECK(perm::is_transitive(sym(4)));
    CHECK_FALSE(perm::is_transitive(perm::point_stabilizer(sym(4), 0)));
    CHECK_FALSE(perm::is_transitive(PermGroup::closure(2, {})));
}
