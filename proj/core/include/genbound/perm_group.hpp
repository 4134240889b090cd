#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genbound/permutation.hpp"

namespace genbound::perm {

struct ClosureBudget {
    uint64_t max_elements = 200'000;
};

// A finite permutation group with its element set fully materialised and
// kept in canonical order (lexicographic on image vectors). Construction
// goes through closure() or from_elements(), so the invariants
// (closed set, identity present, sorted) always hold.
class PermGroup {
public:
    // Breadth-first product closure of the generators, deterministic for a
    // fixed generator order. Throws budget_error past budget.max_elements.
    static PermGroup closure(uint32_t degree, std::vector<Permutation> generators,
                             ClosureBudget budget = {});

    // Wraps an already-closed element set (checked), choosing a small
    // generating subset greedily in canonical order.
    static PermGroup from_elements(std::vector<Permutation> elements);

    uint32_t degree() const { return degree_; }
    uint64_t order() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elements_; }

    bool contains(const Permutation& p) const;
    // Position in the canonical element order; nullopt when absent.
    std::optional<uint32_t> index_of(const Permutation& p) const;
    const Permutation& identity() const;

private:
    PermGroup() = default;
    uint32_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_; // sorted
};

// Orbit partition on {0..degree-1}; orbits sorted by least point, points
// ascending inside each orbit.
std::vector<std::vector<Point>> orbits(const std::vector<Permutation>& generators, uint32_t degree);
std::vector<std::vector<Point>> orbits(const PermGroup& g);

// Stabiliser of one point, as a subgroup (element filter at this scale).
PermGroup point_stabilizer(const PermGroup& g, Point omega);

// True when the group moves every point of one single orbit of full size.
bool is_transitive(const PermGroup& g);

} // namespace genbound::perm
