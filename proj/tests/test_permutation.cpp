#include <stdexcept>
#include <unordered_set>

#include "doctest.h"
#include "genbound/permutation.hpp"

using namespace genbound;
using perm::Permutation;
using perm::parse_permutation;

TEST_CASE("identity and image-vector construction") {
    Permutation id(4);
    CHECK(id.degree() == 4);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.to_cycle_string() == "()");

    Permutation p(std::vector<perm::Point>{1, 0, 2});
    CHECK(p(0) == 1);
    CHECK(p(1) == 0);
    CHECK(p(2) == 2);
    CHECK_FALSE(p.is_identity());

    CHECK_THROWS_AS(Permutation(std::vector<perm::Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle notation parses one-based and round-trips") {
    auto p = parse_permutation("(1 2 3)(4 5)", 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
    CHECK(parse_permutation(p.to_cycle_string(), 5) == p);

    // commas work as separators, fixed points may be omitted
    CHECK(parse_permutation("(1,2,3)", 5) == parse_permutation("(1 2 3)", 5));
    CHECK(parse_permutation("()", 3).is_identity());
}

TEST_CASE("malformed cycle text is rejected") {
    CHECK_THROWS_AS(parse_permutation("(1 2", 4), parse_error);
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), parse_error); // repeated point
    CHECK_THROWS_AS(parse_permutation("(1 9)", 4), parse_error);      // out of range
    CHECK_THROWS_AS(parse_permutation("(0 1)", 4), parse_error);      // points are 1-based
    CHECK_THROWS_AS(parse_permutation("(1 x)", 4), parse_error);
}

TEST_CASE("composition follows the right-action convention") {
    auto p = parse_permutation("(1 2)", 3);
    auto q = parse_permutation("(2 3)", 3);
    auto pq = p.then(q);
    for (perm::Point i = 0; i < 3; ++i) CHECK(pq(i) == q(p(i)));
    // 1 -> 2 under p, then 2 -> 3 under q
    CHECK(pq(0) == 2);
    CHECK(pq.to_cycle_string() == "(1 3 2)");
}

TEST_CASE("inverse and conjugation") {
    auto p = parse_permutation("(1 2 3 4)", 4);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse().to_cycle_string() == "(1 4 3 2)");

    // conjugation relabels: (1 2 3)^(1 4) = (4 2 3)
    auto c = parse_permutation("(1 2 3)", 4).conjugated_by(parse_permutation("(1 4)", 4));
    CHECK(c == parse_permutation("(2 3 4)", 4));
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(parse_permutation("(1 2 3)(4 5)", 5).order() == 6);
    CHECK(parse_permutation("(1 2 3 4 5 6)", 6).order() == 6);
    CHECK(parse_permutation("(1 2)(3 4)", 4).order() == 2);
}

TEST_CASE("cycles come least-point first") {
    auto p = parse_permutation("(4 5)(1 2 3)", 5);
    auto cs = p.cycles();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<perm::Point>{0, 1, 2});
    CHECK(cs[1] == std::vector<perm::Point>{3, 4});
}

TEST_CASE("ordering is lexicographic on image vectors") {
    Permutation id(3);
    auto p = parse_permutation("(2 3)", 3);
    auto q = parse_permutation("(1 2)", 3);
    CHECK(id < p);
    CHECK(p < q);
}

TEST_CASE("hash is consistent with equality") {
    auto p = parse_permutation("(1 2 3)", 5);
    auto q = parse_permutation("(2 3 1)", 5);
    CHECK(p == q);
    CHECK(perm::PermHash{}(p) == perm::PermHash{}(q));

    std::unordered_set<Permutation, perm::PermHash> set;
    set.insert(p);
    set.insert(q);
    set.insert(Permutation(5));
    CHECK(set.size() == 2);
}
