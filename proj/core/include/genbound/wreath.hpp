#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genbound/invariants.hpp"

namespace genbound::wreath {

using perm::GroupTable;
using perm::IndexSet;
using perm::PermGroup;

// Q wr P in its imprimitive action on degree(Q) * degree(P) points. Fibers
// are contiguous blocks: point (gamma, delta) lives at delta*degree(Q) +
// gamma. Generators are a copy of each Q-generator per fiber plus each
// P-generator permuting whole fibers. Throws budget_error when the order
// |Q|^degree(P) * |P| exceeds the element budget; the constructed order is
// checked against that product exactly.
PermGroup wreath_product(const PermGroup& q, const PermGroup& p, const perm::ClosureBudget& b = {});

struct WreathRankRecord {
    uint64_t order = 0;
    uint32_t d_top = 0;      // d(P)
    uint32_t orbits_top = 0; // orbit count of P on its domain
    uint32_t d_base = 0;     // d(Q)
    uint32_t expected = 0;   // d(P) + orbits * d(Q)
    uint32_t actual = 0;     // rank of the constructed product
    bool match = false;
};

// Rank formula d(Q wr P) = d(P) + n(P) d(Q) for p-groups Q, P over one
// prime (trivial factors are permitted on either side).
WreathRankRecord verify_wreath_rank(const PermGroup& q, const PermGroup& p,
                                    const inv::Budgets& b = {});

// Largest t admitting subgroups U_1..U_t of K with (1) their intersection
// equal to the stabiliser K_omega and (2) every proper subfamily
// intersecting strictly above it. For t >= 2 no U_i can be K or K_omega, so
// the search runs over the open interval (K_omega, K) in the lattice; the
// family {K_omega} always realises t = 1 on at least 2 points.
struct TOmegaResult {
    uint32_t t = 0;
    perm::Point omega = 0;
    std::vector<IndexSet> families; // element index sets over K's table order
};

TOmegaResult t_omega(const PermGroup& k, perm::Point omega = 0, const inv::Budgets& b = {});

// Recomputes conditions (1) and (2) for a claimed family.
bool revalidate_certificate(const GroupTable& tk, perm::Point omega,
                            const std::vector<IndexSet>& families);

// One prime's contribution to the Sylow-rank sum for S wr K: d_p of the
// product equals d(P_K) + n(P_K) d(Pi_p) with P_K, Pi_p Sylow p-subgroups
// of K and S (rank formula applied to Pi_p wr P_K, a Sylow p-subgroup of
// the product). When that wreath product itself fits the budget its
// brute-force rank is recorded as a cross-check.
struct SylowSumTerm {
    uint32_t p = 0;
    uint32_t d_top = 0;
    uint32_t orbit_count = 0;
    uint32_t d_base = 0;
    uint32_t d_p = 0;
    std::optional<uint32_t> cross_check;
};

struct SylowSumReport {
    std::vector<SylowSumTerm> terms;
    uint64_t sum = 0;
    uint32_t t = 0; // t_omega of K
    bool strict = false; // sum > t
};

// S must be perfect (it stands in for a non-abelian simple group); pi_star
// lists the primes to sum over; K must be transitive on at least 2 points.
SylowSumReport sylow_sum_check(const PermGroup& s, const std::vector<uint32_t>& pi_star,
                               const PermGroup& k, const inv::Budgets& b = {});

} // namespace genbound::wreath
