#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genbound/perm_group.hpp"

namespace genbound::perm {

struct TableBudget {
    uint32_t max_order = 2000;
};

// Subset of element indices of one fixed group, as a bitset with a cached
// popcount. All subgroup-level work (lattice, searches, series) runs on
// these instead of raw permutations.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(uint32_t universe);

    uint32_t universe() const { return n_; }
    uint32_t count() const { return count_; }
    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i);

    bool operator==(const IndexSet& o) const { return w_ == o.w_; }
    bool subset_of(const IndexSet& o) const;
    IndexSet intersect(const IndexSet& o) const;
    std::vector<uint32_t> to_indices() const;
    uint64_t hash() const;

    // Orders sets of equal size by their ascending index lists; the set
    // containing the lowest differing index comes first.
    bool lex_less(const IndexSet& o) const;

private:
    std::vector<uint64_t> w_;
    uint32_t n_ = 0;
    uint32_t count_ = 0;
};

// Dense multiplication table over the canonical element order of a group.
// mul(i,j) is the index of elements[i].then(elements[j]).
class GroupTable {
public:
    explicit GroupTable(const PermGroup& g, TableBudget budget = {});

    const PermGroup& group() const { return group_; }
    uint32_t order() const { return n_; }
    uint16_t mul(uint32_t i, uint32_t j) const { return mul_[static_cast<size_t>(i) * n_ + j]; }
    uint16_t inv(uint32_t i) const { return inv_[i]; }
    uint16_t identity_index() const { return id_; }
    uint16_t conj(uint32_t x, uint32_t g) const { return mul(mul(inv_[g], x), g); }
    uint32_t element_order(uint32_t i) const { return elt_order_[i]; }
    const std::vector<uint16_t>& generator_indices() const { return gen_idx_; }

    // Conjugacy data: class id per element plus the least element of each
    // class, ascending (so reps are canonical).
    uint16_t class_of(uint32_t i) const { return class_of_[i]; }
    const std::vector<uint16_t>& class_reps() const { return class_reps_; }

private:
    PermGroup group_;
    uint32_t n_ = 0;
    uint16_t id_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<uint32_t> elt_order_;
    std::vector<uint16_t> gen_idx_;
    std::vector<uint16_t> class_of_;
    std::vector<uint16_t> class_reps_;
};

// <gens> as an index set: breadth-first right-multiplication closure from
// the identity. An optional seed set (must be a subgroup or the identity
// alone) speeds up joins.
IndexSet subgroup_closure(const GroupTable& t, const std::vector<uint16_t>& gens);
IndexSet subgroup_closure_seeded(const GroupTable& t, const IndexSet& seed,
                                 const std::vector<uint16_t>& gens);

// Smallest subgroup containing the seeds that is closed under conjugation
// by conj_gens (pass the group's generators for a normal closure in G).
IndexSet normal_closure(const GroupTable& t, const std::vector<uint16_t>& seeds,
                        const std::vector<uint16_t>& conj_gens);

// Greedy small generating list for a subgroup given as an index set.
std::vector<uint16_t> reduce_generators(const GroupTable& t, const IndexSet& sub);

bool is_normal(const GroupTable& t, const IndexSet& sub, const std::vector<uint16_t>& sub_gens);
bool is_abelian(const GroupTable& t, const IndexSet& sub);
bool is_soluble(const GroupTable& t);
bool is_nilpotent(const GroupTable& t);

struct LatticeBudget {
    size_t max_subgroups = 100'000;
};

// Every subgroup, found as the pairwise-join closure of the cyclic
// subgroups. Canonical order: by order, then by element list.
struct Lattice {
    std::vector<IndexSet> subgroups;
    std::vector<std::vector<uint16_t>> gens; // parallel to subgroups
};

Lattice build_lattice(const GroupTable& t, LatticeBudget budget = {});

std::vector<size_t> normal_subgroup_indices(const GroupTable& t, const Lattice& l);
std::vector<size_t> minimal_normal_indices(const GroupTable& t, const Lattice& l);
std::vector<size_t> maximal_subgroup_indices(const Lattice& l);

// Intersection of the maximal subgroups (the whole group when it is trivial).
IndexSet frattini_subgroup(const GroupTable& t, const Lattice& l);

// Canonically first subgroup whose order is the full p-part of |G|.
size_t sylow_index(const GroupTable& t, const Lattice& l, uint32_t p);

PermGroup subgroup_to_group(const GroupTable& t, const IndexSet& sub);

// G/N on the right cosets of N, numbered by least member. Checks normality.
PermGroup quotient_group(const GroupTable& t, const IndexSet& n_sub);

std::vector<uint32_t> primes_dividing(uint64_t x);

} // namespace genbound::perm
