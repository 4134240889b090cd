#include <stdexcept>

#include "doctest.h"
#include "genbound/group_io.hpp"
#include "genbound/wreath.hpp"

using namespace genbound;
using perm::PermGroup;
using perm::parse_permutation;

namespace {

PermGroup from_cycles(uint32_t degree, std::initializer_list<const char*> cycs) {
    std::vector<perm::Permutation> gens;
    for (const char* c : cycs) gens.push_back(parse_permutation(c, degree));
    return PermGroup::closure(degree, std::move(gens));
}

PermGroup c2() { return from_cycles(2, {"(1 2)"}); }
PermGroup c3() { return from_cycles(3, {"(1 2 3)"}); }

} // namespace

TEST_CASE("wreath product orders and the fiber layout") {
    auto w = wreath::wreath_product(c2(), c2());
    CHECK(w.order() == 8); // 2^2 * 2
    CHECK(w.degree() == 4);
    // fiber copies act inside their block, the top generator swaps blocks
    CHECK(w.contains(parse_permutation("(1 2)", 4)));
    CHECK(w.contains(parse_permutation("(3 4)", 4)));
    CHECK(w.contains(parse_permutation("(1 3)(2 4)", 4)));
    CHECK_FALSE(w.contains(parse_permutation("(1 3)", 4)));

    auto trivial2 = PermGroup::closure(2, {});
    CHECK(wreath::wreath_product(c2(), trivial2).order() == 4);
    CHECK(wreath::wreath_product(c3(), c3()).order() == 81);
    CHECK(wreath::wreath_product(c2(), c3()).order() == 24);
}

TEST_CASE("wreath construction refuses oversized products") {
    auto s4 = from_cycles(4, {"(1 2)", "(1 2 3 4)"});
    CHECK_THROWS_AS(wreath::wreath_product(s4, s4), budget_error);
}

TEST_CASE("rank formula rows with trivial, regular and fixed-point tops") {
    auto trivial2 = PermGroup::closure(2, {});
    auto r1 = wreath::verify_wreath_rank(c2(), trivial2);
    CHECK(r1.order == 4);
    CHECK(r1.d_top == 0);
    CHECK(r1.orbits_top == 2);
    CHECK(r1.expected == 2);
    CHECK(r1.match);

    auto r2 = wreath::verify_wreath_rank(c2(), c2());
    CHECK(r2.order == 8);
    CHECK(r2.expected == 2); // 1 + 1*1, the dihedral group of order 8
    CHECK(r2.match);

    // a fixed point adds an orbit: d = 1 + 2*2 over three points
    auto v4 = from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    auto r3 = wreath::verify_wreath_rank(v4, from_cycles(3, {"(1 2)"}));
    CHECK(r3.order == 128);
    CHECK(r3.d_top == 1);
    CHECK(r3.orbits_top == 2);
    CHECK(r3.d_base == 2);
    CHECK(r3.expected == 5);
    CHECK(r3.match);

    auto c9 = from_cycles(9, {"(1 2 3 4 5 6 7 8 9)"});
    auto r4 = wreath::verify_wreath_rank(c9, from_cycles(4, {"(1 2 3)"}));
    CHECK(r4.order == 19683);
    CHECK(r4.expected == 3);
    CHECK(r4.match);
}

TEST_CASE("rank formula rejects factors over different primes") {
    CHECK_THROWS_AS(wreath::verify_wreath_rank(c2(), c3()), std::invalid_argument);
    auto c6 = from_cycles(6, {"(1 2 3 4 5 6)"});
    CHECK_THROWS_AS(wreath::verify_wreath_rank(c6, c2()), std::invalid_argument);
}

TEST_CASE("independent stabiliser families of small transitive groups") {
    // a maximal point stabiliser leaves only the singleton family
    auto s3 = from_cycles(3, {"(1 2)", "(1 2 3)"});
    auto r = wreath::t_omega(s3);
    CHECK(r.t == 1);
    REQUIRE(r.families.size() == 1);
    CHECK(r.families[0].count() == 2);

    CHECK(wreath::t_omega(c3()).t == 1);
    CHECK(wreath::t_omega(from_cycles(4, {"(1 2)", "(1 2 3 4)"})).t == 1);
    CHECK(wreath::t_omega(from_cycles(4, {"(1 2 3)", "(2 3 4)"})).t == 1);

    // regular Klein four group: two distinct lines meet in the identity
    auto v4 = from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    auto rv = wreath::t_omega(v4);
    CHECK(rv.t == 2);
    REQUIRE(rv.families.size() == 2);

    // regular cyclic six: the two Sylow lines are independent
    auto c6 = from_cycles(6, {"(1 2 3 4 5 6)"});
    CHECK(wreath::t_omega(c6).t == 2);
}

TEST_CASE("three hyperplanes of a regular elementary abelian 8 are independent") {
    auto e8 = from_cycles(8, {"(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)", "(1 5)(2 6)(3 7)(4 8)"});
    auto r = wreath::t_omega(e8);
    CHECK(r.t == 3);
    for (const auto& fam : r.families) CHECK(fam.count() == 4);
}

TEST_CASE("t_omega requires a transitive group on at least two points") {
    CHECK_THROWS_AS(wreath::t_omega(from_cycles(4, {"(1 2)"})), std::invalid_argument);
    CHECK_THROWS_AS(wreath::t_omega(PermGroup::closure(1, {})), std::invalid_argument);
}

TEST_CASE("certificates revalidate and tampering is caught") {
    auto v4 = from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    auto r = wreath::t_omega(v4);
    perm::GroupTable t(v4);
    CHECK(wreath::revalidate_certificate(t, r.omega, r.families));

    // duplicating a member makes the full intersection too large
    std::vector<perm::IndexSet> dup = {r.families[0], r.families[0]};
    CHECK_FALSE(wreath::revalidate_certificate(t, r.omega, dup));

    // adding the stabiliser itself breaks the proper-subfamily condition
    auto s3 = from_cycles(3, {"(1 2)", "(1 2 3)"});
    perm::GroupTable t3(s3);
    auto r3 = wreath::t_omega(s3);
    std::vector<perm::IndexSet> padded = {r3.families[0], subgroup_closure(t3, {})};
    // the trivial subgroup intersects everything down to itself, not the stabiliser
    CHECK_FALSE(wreath::revalidate_certificate(t3, r3.omega, padded));
}

TEST_CASE("Sylow rank sums clear the family bound for the smallest simple group") {
    auto a5 = from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"});
    std::vector<uint32_t> pis = {3, 5};

    auto rep = wreath::sylow_sum_check(a5, pis, c2());
    CHECK(rep.t == 1);
    CHECK(rep.sum == 4);
    CHECK(rep.strict);
    REQUIRE(rep.terms.size() == 2);
    for (const auto& term : rep.terms) {
        CHECK(term.d_p == 2);
        REQUIRE(term.cross_check.has_value());
        CHECK(*term.cross_check == term.d_p);
    }

    auto v4 = from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    auto rep4 = wreath::sylow_sum_check(a5, pis, v4);
    CHECK(rep4.t == 2);
    CHECK(rep4.sum == 8);
    CHECK(rep4.strict);
}

TEST_CASE("Sylow sum preconditions") {
    auto a5 = from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"});
    auto s5 = from_cycles(5, {"(1 2)", "(1 2 3 4 5)"});
    // not perfect
    CHECK_THROWS_AS(wreath::sylow_sum_check(s5, {3, 5}, c2()), std::invalid_argument);
    // too small to stand in for a simple group
    auto s4 = from_cycles(4, {"(1 2)", "(1 2 3 4)"});
    CHECK_THROWS_AS(wreath::sylow_sum_check(s4, {3}, c2()), std::invalid_argument);
    // listed prime must divide the order
    CHECK_THROWS_AS(wreath::sylow_sum_check(a5, {7}, c2()), std::invalid_argument);
    // K must be transitive
    CHECK_THROWS_AS(wreath::sylow_sum_check(a5, {3, 5}, from_cycles(4, {"(1 2)"})), std::invalid_argument);
}
