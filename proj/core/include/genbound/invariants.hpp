#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genbound/group_table.hpp"

namespace genbound::inv {

using perm::GroupTable;
using perm::IndexSet;
using perm::Lattice;
using perm::PermGroup;

struct Budgets {
    perm::ClosureBudget closure{};
    perm::TableBudget table{};
    perm::LatticeBudget lattice{};
};

// ---------------------------------------------------------------- rank d(G)

// d(G), the least size of a generating set. Prime-power groups use the
// Frattini-quotient rank (valid by the Burnside basis theorem and feasible
// at wreath-product scale); all other groups run the increasing-k search.
uint32_t min_generators(const PermGroup& g, const Budgets& b = {});

// The plain increasing-k DFS over canonical element order, first element
// restricted to conjugacy class representatives (generation is invariant
// under conjugation, so some witness always survives the restriction).
// Kept separate so the p-group shortcut can be cross-checked against it.
uint32_t min_generators_search(const GroupTable& t);

// Frattini subgroup of a p-group as <all generator p-th powers and
// commutators>^G; no lattice needed.
PermGroup pgroup_frattini(const PermGroup& g);

// log_p [P : Phi(P)] via pgroup_frattini. Throws unless |g| is a prime power.
uint32_t pgroup_rank(const PermGroup& g);

// Same rank through the generic lattice route: Phi = intersection of
// maximal subgroups. Used to cross-examine the direct path.
uint32_t pgroup_rank_lattice(const GroupTable& t, const Lattice& l);

// ------------------------------------------------------------------- m(G)

struct MaxIndependent {
    uint32_t m = 0;
    std::vector<perm::Permutation> witness;
};

// Largest independent generating set: exhaustive DFS in canonical element
// order (ascending indices, first element a class representative), pruned
// by the doubling bound |<H,g>| >= 2|H|. Witnesses are re-verified.
MaxIndependent max_independent_set(const PermGroup& g, const Budgets& b = {});

// set generates G and no member lies in the subgroup of the others
bool is_independent_generating(const GroupTable& t, const std::vector<uint16_t>& set);

// ------------------------------------------------------------------ Sylow

// Deterministic Sylow p-subgroup by normaliser extension (no lattice):
// grow a p-subgroup by adjoining p-elements of its normaliser, smallest
// candidates first. Returns the trivial group when p does not divide |G|.
PermGroup sylow_subgroup_direct(const PermGroup& g, uint32_t p, const Budgets& b = {});

struct DeltaOfGroup {
    std::vector<std::pair<uint32_t, uint32_t>> d_p; // (p, rank of a Sylow p-subgroup)
    uint64_t delta = 0;
};

// d_p for every prime p | |G| and their sum. When a lattice is supplied the
// Sylow subgroups are the canonical lattice picks; otherwise the direct
// construction is used (the rank does not depend on the choice).
DeltaOfGroup delta_of_group(const PermGroup& g, const GroupTable* t = nullptr,
                            const Lattice* l = nullptr, const Budgets& b = {});

// --------------------------------------------------- chief series / alpha

struct ChiefFactor {
    uint64_t order = 0;
    uint32_t prime = 0; // p when the factor order is a p-power, else 0
    bool complemented = false;
};

enum class SeriesVariant { first_minimal, last_minimal };

struct ChiefSeries {
    std::vector<ChiefFactor> factors;                 // bottom-up
    std::vector<std::pair<uint32_t, uint32_t>> alpha; // p -> complemented p-power factor count
};

// Chief series by repeatedly factoring out a minimal normal subgroup of the
// running quotient (canonically first or last, for independence checks).
// A factor M of Q is complemented iff some H <= Q has H meet M = 1 and
// |H||M| = |Q|.
ChiefSeries chief_series_alpha(const PermGroup& g, SeriesVariant v = SeriesVariant::first_minimal,
                               const Budgets& b = {});

// ------------------------------------------------------- derived checks

// m(G) - m(G/N) for a normal subgroup N given as an index set of t.
int64_t m_relative(const GroupTable& t, const IndexSet& n_sub, const Budgets& b = {});

struct GroupProfile {
    std::string label;
    uint32_t degree = 0;
    uint64_t order = 0;
    bool soluble = false;
    bool nilpotent = false;
    uint32_t d = 0;
    uint32_t m = 0;
    uint64_t delta = 0;
    std::vector<std::pair<uint32_t, uint32_t>> d_p;
    std::optional<std::vector<std::pair<uint32_t, uint32_t>>> alpha_p; // soluble only
    bool m_le_delta = false;
    std::optional<bool> m_eq_alpha_sum; // soluble only
};

GroupProfile profile_group(const PermGroup& g, const std::string& label, const Budgets& b = {});

// delta(G) >= delta(G/N) + |pi(N)| for each minimal normal N outside Phi(G)
struct QuotientDeltaCheck {
    uint64_t n_order = 0;
    uint64_t delta_g = 0;
    uint64_t delta_q = 0;
    uint32_t pi_n = 0;
    bool holds = false;
};
std::vector<QuotientDeltaCheck> check_quotient_delta(const PermGroup& g, const Budgets& b = {});

// abelian minimal normal N: m(G) - m(G/N) is 0 or 1, 0 exactly when N <= Phi(G)
struct DichotomyCheck {
    uint64_t n_order = 0;
    bool in_frattini = false;
    int64_t m_drop = 0;
    bool holds = false;
};
std::vector<DichotomyCheck> check_abelian_minimal_dichotomy(const PermGroup& g, const Budgets& b = {});

} // namespace genbound::inv
