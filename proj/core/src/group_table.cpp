#include "genbound/group_table.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "genbound/errors.hpp"

namespace genbound::perm {

IndexSet::IndexSet(uint32_t universe) : w_((universe + 63) / 64, 0), n_(universe) {}

void IndexSet::set(uint32_t i) {
    uint64_t& w = w_[i >> 6];
    uint64_t bit = 1ull << (i & 63);
    if (!(w & bit)) {
        w |= bit;
        ++count_;
    }
}

bool IndexSet::subset_of(const IndexSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
    IndexSet r(n_);
    uint32_t c = 0;
    for (size_t k = 0; k < w_.size(); ++k) {
        r.w_[k] = w_[k] & o.w_[k];
        c += static_cast<uint32_t>(std::popcount(r.w_[k]));
    }
    r.count_ = c;
    return r;
}

std::vector<uint32_t> IndexSet::to_indices() const {
    std::vector<uint32_t> out;
    out.reserve(count_);
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t w = w_[k];
        while (w) {
            out.push_back(static_cast<uint32_t>(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

uint64_t IndexSet::hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

bool IndexSet::lex_less(const IndexSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t diff = w_[k] ^ o.w_[k];
        if (diff) {
            uint64_t low = diff & ~(diff - 1);
            return w_[k] & low; // owning the lowest differing index sorts first
        }
    }
    return false;
}

GroupTable::GroupTable(const PermGroup& g, TableBudget budget) : group_(g) {
    if (g.order() > budget.max_order)
        throw budget_error("group table: order " + std::to_string(g.order()) +
                           " exceeds budget " + std::to_string(budget.max_order));
    n_ = static_cast<uint32_t>(g.order());
    const auto& elts = group_.elements();

    std::unordered_map<Permutation, uint16_t, PermHash> index;
    index.reserve(n_ * 2);
    for (uint32_t i = 0; i < n_; ++i) index.emplace(elts[i], static_cast<uint16_t>(i));

    mul_.resize(static_cast<size_t>(n_) * n_);
    for (uint32_t i = 0; i < n_; ++i)
        for (uint32_t j = 0; j < n_; ++j)
            mul_[static_cast<size_t>(i) * n_ + j] = index.at(elts[i].then(elts[j]));

    id_ = index.at(Permutation(group_.degree()));
    inv_.resize(n_);
    elt_order_.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        inv_[i] = index.at(elts[i].inverse());
        elt_order_[i] = static_cast<uint32_t>(elts[i].order());
    }
    for (const auto& gen : group_.generators()) gen_idx_.push_back(index.at(gen));

    // conjugacy classes: orbit of each unseen element under generator conjugation
    class_of_.assign(n_, 0xffff);
    for (uint32_t i = 0; i < n_; ++i) {
        if (class_of_[i] != 0xffff) continue;
        uint16_t cls = static_cast<uint16_t>(class_reps_.size());
        class_reps_.push_back(static_cast<uint16_t>(i));
        std::vector<uint16_t> todo{static_cast<uint16_t>(i)};
        class_of_[i] = cls;
        while (!todo.empty()) {
            uint16_t x = todo.back();
            todo.pop_back();
            for (uint16_t g : gen_idx_) {
                uint16_t y = conj(x, g);
                if (class_of_[y] == 0xffff) {
                    class_of_[y] = cls;
                    todo.push_back(y);
                }
            }
        }
    }
}

IndexSet subgroup_closure_seeded(const GroupTable& t, const IndexSet& seed,
                                 const std::vector<uint16_t>& gens) {
    IndexSet have = seed;
    std::vector<uint32_t> todo = seed.to_indices();
    for (uint16_t g : gens)
        if (!have.test(g)) {
            have.set(g);
            todo.push_back(g);
        }
    while (!todo.empty()) {
        uint32_t x = todo.back();
        todo.pop_back();
        for (uint16_t g : gens) {
            uint16_t y = t.mul(x, g);
            if (!have.test(y)) {
                have.set(y);
                todo.push_back(y);
            }
        }
    }
    return have;
}

IndexSet subgroup_closure(const GroupTable& t, const std::vector<uint16_t>& gens) {
    IndexSet id_only(t.order());
    id_only.set(t.identity_index());
    return subgroup_closure_seeded(t, id_only, gens);
}

IndexSet normal_closure(const GroupTable& t, const std::vector<uint16_t>& seeds,
                        const std::vector<uint16_t>& conj_gens) {
    // all conjugates of the seeds first, then the subgroup they generate
    IndexSet conj_set(t.order());
    std::vector<uint16_t> todo;
    for (uint16_t s : seeds)
        if (!conj_set.test(s)) {
            conj_set.set(s);
            todo.push_back(s);
        }
    std::vector<uint16_t> all;
    while (!todo.empty()) {
        uint16_t x = todo.back();
        todo.pop_back();
        all.push_back(x);
        for (uint16_t g : conj_gens) {
            uint16_t y = t.conj(x, g);
            if (!conj_set.test(y)) {
                conj_set.set(y);
                todo.push_back(y);
            }
        }
    }
    return subgroup_closure(t, all);
}

std::vector<uint16_t> reduce_generators(const GroupTable& t, const IndexSet& sub) {
    std::vector<uint16_t> gens;
    IndexSet have(t.order());
    have.set(t.identity_index());
    for (uint32_t i : sub.to_indices()) {
        if (have.test(i)) continue;
        gens.push_back(static_cast<uint16_t>(i));
        have = subgroup_closure_seeded(t, have, {static_cast<uint16_t>(i)});
    }
    return gens;
}

bool is_normal(const GroupTable& t, const IndexSet& sub, const std::vector<uint16_t>& sub_gens) {
    for (uint16_t s : sub_gens)
        for (uint16_t g : t.generator_indices())
            if (!sub.test(t.conj(s, g))) return false;
    return true;
}

bool is_abelian(const GroupTable& t, const IndexSet& sub) {
    auto idx = sub.to_indices();
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (t.mul(idx[a], idx[b]) != t.mul(idx[b], idx[a])) return false;
    return true;
}

static std::vector<uint16_t> commutator_seeds(const GroupTable& t, const std::vector<uint16_t>& gens) {
    std::vector<uint16_t> seeds;
    for (uint16_t a : gens)
        for (uint16_t b : gens) {
            // [a,b] = a^-1 b^-1 a b
            uint16_t c = t.mul(t.mul(t.mul(t.inv(a), t.inv(b)), a), b);
            if (c != t.identity_index()) seeds.push_back(c);
        }
    return seeds;
}

bool is_soluble(const GroupTable& t) {
    std::vector<uint16_t> gens = t.generator_indices();
    uint32_t prev = t.order();
    while (true) {
        IndexSet derived = normal_closure(t, commutator_seeds(t, gens), gens);
        if (derived.count() == 1) return true;
        if (derived.count() == prev) return false; // perfect tail
        prev = derived.count();
        gens = reduce_generators(t, derived);
    }
}

bool is_nilpotent(const GroupTable& t) {
    const std::vector<uint16_t>& ggens = t.generator_indices();
    std::vector<uint16_t> layer = ggens; // generators of gamma_i
    uint32_t prev = t.order();
    while (true) {
        std::vector<uint16_t> seeds;
        for (uint16_t x : layer)
            for (uint16_t g : ggens) {
                uint16_t c = t.mul(t.mul(t.mul(t.inv(x), t.inv(g)), x), g);
                if (c != t.identity_index()) seeds.push_back(c);
            }
        IndexSet next = normal_closure(t, seeds, ggens);
        if (next.count() == 1) return true;
        if (next.count() >= prev) return false; // series stalled
        prev = next.count();
        layer = reduce_generators(t, next);
    }
}

Lattice build_lattice(const GroupTable& t, LatticeBudget budget) {
    Lattice lat;
    std::unordered_map<uint64_t, std::vector<size_t>> by_hash;

    auto add = [&](IndexSet s, std::vector<uint16_t> g) -> bool {
        auto& bucket = by_hash[s.hash()];
        for (size_t i : bucket)
            if (lat.subgroups[i] == s) return false;
        bucket.push_back(lat.subgroups.size());
        lat.subgroups.push_back(std::move(s));
        lat.gens.push_back(std::move(g));
        if (lat.subgroups.size() > budget.max_subgroups)
            throw budget_error("lattice: subgroup budget " + std::to_string(budget.max_subgroups) +
                               " exceeded");
        return true;
    };

    // cyclic seeds, including the trivial subgroup from the identity
    for (uint32_t i = 0; i < t.order(); ++i) {
        IndexSet cyc(t.order());
        uint32_t x = t.identity_index();
        cyc.set(x);
        do {
            x = t.mul(x, i);
            cyc.set(x);
        } while (x != t.identity_index());
        if (i == t.identity_index())
            add(std::move(cyc), {});
        else
            add(std::move(cyc), {static_cast<uint16_t>(i)});
    }

    // pairwise join closure; every pair is processed exactly once
    for (size_t b = 1; b < lat.subgroups.size(); ++b) {
        for (size_t a = 0; a < b; ++a) {
            if (lat.subgroups[a].subset_of(lat.subgroups[b]) ||
                lat.subgroups[b].subset_of(lat.subgroups[a]))
                continue;
            const IndexSet& big = lat.subgroups[a].count() >= lat.subgroups[b].count()
                                      ? lat.subgroups[a]
                                      : lat.subgroups[b];
            std::vector<uint16_t> jg = lat.gens[a];
            jg.insert(jg.end(), lat.gens[b].begin(), lat.gens[b].end());
            std::sort(jg.begin(), jg.end());
            jg.erase(std::unique(jg.begin(), jg.end()), jg.end());
            IndexSet join = subgroup_closure_seeded(t, big, jg);
            if (join.count() == t.order())
                add(std::move(join), t.generator_indices());
            else {
                if (jg.size() > 8) jg = reduce_generators(t, join); // keep join gens short
                add(std::move(join), std::move(jg));
            }
        }
    }

    // make sure the whole group is present even if no join produced it
    {
        IndexSet whole(t.order());
        for (uint32_t i = 0; i < t.order(); ++i) whole.set(i);
        add(std::move(whole), t.generator_indices());
    }

    // canonical order: by order then by element list
    std::vector<size_t> perm(lat.subgroups.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t x, size_t y) {
        if (lat.subgroups[x].count() != lat.subgroups[y].count())
            return lat.subgroups[x].count() < lat.subgroups[y].count();
        return lat.subgroups[x].lex_less(lat.subgroups[y]);
    });
    Lattice sorted;
    sorted.subgroups.reserve(perm.size());
    sorted.gens.reserve(perm.size());
    for (size_t i : perm) {
        sorted.subgroups.push_back(std::move(lat.subgroups[i]));
        sorted.gens.push_back(std::move(lat.gens[i]));
    }
    return sorted;
}

std::vector<size_t> normal_subgroup_indices(const GroupTable& t, const Lattice& l) {
    std::vector<size_t> out;
    for (size_t i = 0; i < l.subgroups.size(); ++i)
        if (is_normal(t, l.subgroups[i], l.gens[i])) out.push_back(i);
    return out;
}

std::vector<size_t> minimal_normal_indices(const GroupTable& t, const Lattice& l) {
    std::vector<size_t> normals = normal_subgroup_indices(t, l);
    std::vector<size_t> out;
    for (size_t i : normals) {
        if (l.subgroups[i].count() == 1) continue;
        bool minimal = true;
        for (size_t j : normals) {
            if (j == i || l.subgroups[j].count() == 1) continue;
            if (l.subgroups[j].count() < l.subgroups[i].count() &&
                l.subgroups[j].subset_of(l.subgroups[i])) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<size_t> maximal_subgroup_indices(const Lattice& l) {
    std::vector<size_t> out;
    const uint32_t full = l.subgroups.back().universe();
    for (size_t i = 0; i < l.subgroups.size(); ++i) {
        if (l.subgroups[i].count() == full) continue;
        bool maximal = true;
        for (size_t j = 0; j < l.subgroups.size(); ++j) {
            if (j == i || l.subgroups[j].count() == full) continue;
            if (l.subgroups[i].count() < l.subgroups[j].count() &&
                l.subgroups[i].subset_of(l.subgroups[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

IndexSet frattini_subgroup(const GroupTable& t, const Lattice& l) {
    std::vector<size_t> maximals = maximal_subgroup_indices(l);
    if (maximals.empty()) {
        IndexSet whole(t.order());
        for (uint32_t i = 0; i < t.order(); ++i) whole.set(i);
        return whole; // trivial group: no maximal subgroups, Phi = G
    }
    IndexSet phi = l.subgroups[maximals.front()];
    for (size_t k = 1; k < maximals.size(); ++k) phi = phi.intersect(l.subgroups[maximals[k]]);
    return phi;
}

size_t sylow_index(const GroupTable& t, const Lattice& l, uint32_t p) {
    uint64_t part = 1;
    uint64_t n = t.order();
    while (n % p == 0) {
        part *= p;
        n /= p;
    }
    for (size_t i = 0; i < l.subgroups.size(); ++i)
        if (l.subgroups[i].count() == part) return i;
    throw std::logic_error("sylow_index: no subgroup of the p-part order found");
}

PermGroup subgroup_to_group(const GroupTable& t, const IndexSet& sub) {
    std::vector<Permutation> elems;
    elems.reserve(sub.count());
    for (uint32_t i : sub.to_indices()) elems.push_back(t.group().elements()[i]);
    return PermGroup::from_elements(std::move(elems));
}

PermGroup quotient_group(const GroupTable& t, const IndexSet& n_sub) {
    if (!is_normal(t, n_sub, reduce_generators(t, n_sub)))
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    const uint32_t n = t.order();
    std::vector<uint32_t> n_idx = n_sub.to_indices();
    std::vector<uint16_t> coset_of(n, 0xffff);
    std::vector<uint16_t> reps;
    for (uint32_t i = 0; i < n; ++i) {
        if (coset_of[i] != 0xffff) continue;
        uint16_t c = static_cast<uint16_t>(reps.size());
        reps.push_back(static_cast<uint16_t>(i)); // least member names the coset
        for (uint32_t s : n_idx) coset_of[t.mul(s, i)] = c;
    }
    uint32_t m = static_cast<uint32_t>(reps.size());
    std::vector<Permutation> qgens;
    for (uint16_t g : t.generator_indices()) {
        std::vector<Point> img(m);
        for (uint32_t c = 0; c < m; ++c) img[c] = coset_of[t.mul(reps[c], g)];
        qgens.emplace_back(std::move(img));
    }
    PermGroup q = PermGroup::closure(m, std::move(qgens));
    if (q.order() * n_sub.count() != t.order())
        throw std::logic_error("quotient_group: order bookkeeping failed");
    return q;
}

std::vector<uint32_t> primes_dividing(uint64_t x) {
    std::vector<uint32_t> out;
    for (uint64_t p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            out.push_back(static_cast<uint32_t>(p));
            while (x % p == 0) x /= p;
        }
    if (x > 1) out.push_back(static_cast<uint32_t>(x));
    return out;
}

} // namespace genbound::perm
