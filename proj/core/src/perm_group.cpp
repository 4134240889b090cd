#include "genbound/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace genbound::perm {

PermGroup PermGroup::closure(uint32_t degree, std::vector<Permutation> generators,
                             ClosureBudget budget) {
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("closure: generator degree mismatch");
    // drop identities and duplicates but keep the caller's order otherwise
    std::vector<Permutation> gens;
    for (auto& g : generators)
        if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(std::move(g));

    std::unordered_set<Permutation, PermHash> seen;
    std::deque<Permutation> todo;
    Permutation id(degree);
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        Permutation x = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            Permutation y = x.then(g);
            if (seen.insert(y).second) {
                if (seen.size() > budget.max_elements)
                    throw budget_error("closure: element budget " +
                                       std::to_string(budget.max_elements) + " exceeded");
                todo.push_back(std::move(y));
            }
        }
    }
    PermGroup out;
    out.degree_ = degree;
    out.gens_ = std::move(gens);
    out.elements_.assign(seen.begin(), seen.end());
    std::sort(out.elements_.begin(), out.elements_.end());
    return out;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) throw std::invalid_argument("from_elements: empty set");
    uint32_t degree = elements.front().degree();
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::unordered_set<Permutation, PermHash> have;
    std::vector<Permutation> gens;
    Permutation id(degree);
    have.insert(id);
    for (const auto& e : elements) {
        if (e.degree() != degree) throw std::invalid_argument("from_elements: degree mismatch");
        if (have.count(e)) continue;
        gens.push_back(e);
        // grow the closure of the generators picked so far
        std::deque<Permutation> todo(have.begin(), have.end());
        while (!todo.empty()) {
            Permutation x = std::move(todo.front());
            todo.pop_front();
            for (const auto& g : gens) {
                Permutation y = x.then(g);
                if (have.insert(y).second) todo.push_back(std::move(y));
            }
        }
    }
    if (have.size() != elements.size())
        throw std::invalid_argument("from_elements: set is not closed under products");
    PermGroup out;
    out.degree_ = degree;
    out.gens_ = std::move(gens);
    out.elements_ = std::move(elements);
    return out;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<uint32_t> PermGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return std::nullopt;
    return static_cast<uint32_t>(it - elements_.begin());
}

const Permutation& PermGroup::identity() const {
    // the identity is lexicographically least, hence always at the front
    return elements_.front();
}

std::vector<std::vector<Point>> orbits(const std::vector<Permutation>& generators, uint32_t degree) {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree, false);
    for (uint32_t s = 0; s < degree; ++s) {
        if (seen[s]) continue;
        std::vector<Point> orbit{static_cast<Point>(s)};
        seen[s] = true;
        for (size_t head = 0; head < orbit.size(); ++head) {
            Point x = orbit[head];
            for (const auto& g : generators) {
                Point y = g(x);
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
    return orbits(g.generators(), g.degree());
}

PermGroup point_stabilizer(const PermGroup& g, Point omega) {
    if (omega >= g.degree()) throw std::invalid_argument("point_stabilizer: point out of range");
    std::vector<Permutation> stab;
    for (const auto& e : g.elements())
        if (e(omega) == omega) stab.push_back(e);
    return PermGroup::from_elements(std::move(stab));
}

bool is_transitive(const PermGroup& g) {
    return orbits(g).size() == 1;
}

} // namespace genbound::perm
