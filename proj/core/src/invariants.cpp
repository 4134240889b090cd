#include "genbound/invariants.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "genbound/permutation.hpp"

namespace genbound::inv {

using perm::Permutation;

namespace {

uint32_t log2_floor(uint64_t x) {
    uint32_t k = 0;
    while (x >>= 1) ++k;
    return k;
}

// p when |G| = p^k (k >= 1), otherwise 0
uint32_t prime_power_base(uint64_t order) {
    if (order < 2) return 0;
    auto ps = perm::primes_dividing(order);
    return ps.size() == 1 ? ps[0] : 0;
}

} // namespace

// ---------------------------------------------------------------- rank d(G)

PermGroup pgroup_frattini(const PermGroup& g) {
    if (g.order() == 1) return g;
    const uint32_t p = prime_power_base(g.order());
    if (p == 0) throw std::invalid_argument("pgroup_frattini: order is not a prime power");

    // For a p-group Phi(P) = P^p [P,P], and that subgroup is already the
    // normal closure of the p-th powers and commutators of any generating
    // set. Collect those seeds, close them under conjugation by the
    // generators (a conjugation-closed set generates a normal subgroup),
    // then take the product closure.
    const auto& gens = g.generators();
    std::vector<Permutation> seeds;
    for (const auto& x : gens) {
        Permutation xp(g.degree());
        for (uint32_t i = 0; i < p; ++i) xp = xp.then(x);
        seeds.push_back(std::move(xp));
    }
    for (const auto& x : gens)
        for (const auto& y : gens)
            seeds.push_back(x.inverse().then(y.inverse()).then(x).then(y));

    std::unordered_set<Permutation, perm::PermHash> seen;
    std::deque<Permutation> queue;
    for (auto& s : seeds)
        if (seen.insert(s).second) queue.push_back(s);
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& x : gens) {
            Permutation c = cur.conjugated_by(x);
            if (seen.insert(c).second) queue.push_back(std::move(c));
        }
    }
    std::vector<Permutation> closed(seen.begin(), seen.end());
    return PermGroup::closure(g.degree(), std::move(closed), {});
}

uint32_t pgroup_rank(const PermGroup& g) {
    const uint32_t p = prime_power_base(g.order());
    if (p == 0) throw std::invalid_argument("pgroup_rank: order is not a nontrivial prime power");
    const uint64_t index = g.order() / pgroup_frattini(g).order();
    uint32_t d = 0;
    uint64_t v = 1;
    while (v < index) {
        v *= p;
        ++d;
    }
    if (v != index) throw std::logic_error("pgroup_rank: Frattini index is not a p-power");
    return d;
}

uint32_t pgroup_rank_lattice(const GroupTable& t, const Lattice& l) {
    const uint32_t p = prime_power_base(t.order());
    if (p == 0) throw std::invalid_argument("pgroup_rank_lattice: order is not a nontrivial prime power");
    const uint64_t index = t.order() / frattini_subgroup(t, l).count();
    uint32_t d = 0;
    uint64_t v = 1;
    while (v < index) {
        v *= p;
        ++d;
    }
    if (v != index) throw std::logic_error("pgroup_rank_lattice: Frattini index is not a p-power");
    return d;
}

namespace {

// Extend a generating prefix by ascending element indices. `cur` is exactly
// <prefix>, so seeding the closure with it and multiplying by the extended
// prefix yields <prefix, next> (the seed is absorbed by the generated
// subgroup).
bool dfs_generates(const GroupTable& t, const IndexSet& cur, std::vector<uint16_t>& prefix,
                   uint32_t remaining) {
    if (cur.count() == t.order()) return true;
    if (remaining == 0) return false;
    const uint32_t start = prefix.back() + 1u;
    for (uint32_t g = start; g < t.order(); ++g) {
        if (cur.test(g)) continue;
        prefix.push_back(static_cast<uint16_t>(g));
        IndexSet next = subgroup_closure_seeded(t, cur, prefix);
        const bool hit = dfs_generates(t, next, prefix, remaining - 1);
        prefix.pop_back();
        if (hit) return true;
    }
    return false;
}

} // namespace

uint32_t min_generators_search(const GroupTable& t) {
    if (t.order() == 1) return 0;
    for (uint32_t i = 0; i < t.order(); ++i)
        if (t.element_order(i) == t.order()) return 1;
    for (uint32_t k = 2; k <= 1 + log2_floor(t.order()); ++k) {
        // Some witness set, conjugated so that its least element is minimal
        // in its class, starts at a class representative; later elements
        // ascend freely.
        for (uint16_t rep : t.class_reps()) {
            if (rep == t.identity_index()) continue;
            std::vector<uint16_t> prefix{rep};
            IndexSet cur = subgroup_closure(t, prefix);
            if (dfs_generates(t, cur, prefix, k - 1)) return k;
        }
    }
    throw std::logic_error("min_generators_search: no generating set found");
}

uint32_t min_generators(const PermGroup& g, const Budgets& b) {
    if (g.order() == 1) return 0;
    if (prime_power_base(g.order()) != 0) return pgroup_rank(g);
    GroupTable t(g, b.table);
    return min_generators_search(t);
}

// ------------------------------------------------------------------- m(G)

bool is_independent_generating(const GroupTable& t, const std::vector<uint16_t>& set) {
    if (subgroup_closure(t, set).count() != t.order()) return false;
    for (size_t i = 0; i < set.size(); ++i) {
        std::vector<uint16_t> others;
        others.reserve(set.size() - 1);
        for (size_t j = 0; j < set.size(); ++j)
            if (j != i) others.push_back(set[j]);
        if (subgroup_closure(t, others).test(set[i])) return false;
    }
    return true;
}

namespace {

struct IndependentSearch {
    const GroupTable& t;
    uint32_t best = 0;
    std::vector<uint16_t> best_set;

    void dfs(std::vector<uint16_t>& picked, const IndexSet& cur) {
        if (cur.count() == t.order()) {
            // Prefix-independence (each pick outside the running subgroup)
            // does not rule out an early pick becoming redundant later, so
            // candidates are re-verified in full.
            if (picked.size() > best && is_independent_generating(t, picked)) {
                best = static_cast<uint32_t>(picked.size());
                best_set = picked;
            }
            return;
        }
        // each further pick at least doubles the subgroup
        if (picked.size() + log2_floor(t.order() / cur.count()) <= best) return;
        const uint32_t start = picked.back() + 1u;
        for (uint32_t g = start; g < t.order(); ++g) {
            if (cur.test(g)) continue;
            picked.push_back(static_cast<uint16_t>(g));
            IndexSet next = subgroup_closure_seeded(t, cur, picked);
            dfs(picked, next);
            picked.pop_back();
        }
    }
};

} // namespace

MaxIndependent max_independent_set(const PermGroup& g, const Budgets& b) {
    MaxIndependent out;
    if (g.order() == 1) return out;
    GroupTable t(g, b.table);
    IndependentSearch search{t};
    for (uint16_t rep : t.class_reps()) {
        if (rep == t.identity_index()) continue;
        std::vector<uint16_t> picked{rep};
        IndexSet cur = subgroup_closure(t, picked);
        search.dfs(picked, cur);
    }
    out.m = search.best;
    out.witness.reserve(search.best_set.size());
    for (uint16_t i : search.best_set) out.witness.push_back(t.group().elements()[i]);
    return out;
}

// ------------------------------------------------------------------ Sylow

PermGroup sylow_subgroup_direct(const PermGroup& g, uint32_t p, const Budgets& b) {
    uint64_t p_part = 1;
    for (uint64_t rest = g.order(); rest % p == 0; rest /= p) p_part *= p;

    std::vector<Permutation> gens;
    PermGroup sub = PermGroup::closure(g.degree(), {}, b.closure);
    while (sub.order() < p_part) {
        bool grew = false;
        for (const auto& h : g.elements()) {
            if (sub.contains(h)) continue;
            bool normalises = true;
            for (const auto& x : gens)
                if (!sub.contains(x.conjugated_by(h))) {
                    normalises = false;
                    break;
                }
            if (!normalises) continue;
            // order of the coset of h over the current subgroup
            uint32_t m = 1;
            Permutation pow = h;
            while (!sub.contains(pow)) {
                pow = pow.then(h);
                ++m;
            }
            if (m % p != 0) continue;
            Permutation y(g.degree());
            for (uint32_t i = 0; i < m / p; ++i) y = y.then(h);
            gens.push_back(std::move(y));
            sub = PermGroup::closure(g.degree(), gens, b.closure);
            grew = true;
            break;
        }
        // Cauchy in N_G(sub)/sub guarantees a p-coset while |sub| < p_part
        if (!grew) throw std::logic_error("sylow_subgroup_direct: growth stalled");
    }
    return sub;
}

DeltaOfGroup delta_of_group(const PermGroup& g, const GroupTable* t, const Lattice* l,
                            const Budgets& b) {
    DeltaOfGroup out;
    for (uint32_t p : perm::primes_dividing(g.order())) {
        PermGroup syl = (t != nullptr && l != nullptr)
                            ? subgroup_to_group(*t, l->subgroups[sylow_index(*t, *l, p)])
                            : sylow_subgroup_direct(g, p, b);
        const uint32_t dp = pgroup_rank(syl);
        out.d_p.emplace_back(p, dp);
        out.delta += dp;
    }
    return out;
}

// --------------------------------------------------- chief series / alpha

ChiefSeries chief_series_alpha(const PermGroup& g, SeriesVariant v, const Budgets& b) {
    ChiefSeries out;
    PermGroup q = g;
    while (q.order() > 1) {
        GroupTable t(q, b.table);
        Lattice lat = build_lattice(t, b.lattice);
        auto minimals = minimal_normal_indices(t, lat);
        const size_t pick = (v == SeriesVariant::first_minimal) ? minimals.front() : minimals.back();
        const IndexSet& m = lat.subgroups[pick];

        ChiefFactor f;
        f.order = m.count();
        auto ps = perm::primes_dividing(f.order);
        f.prime = (ps.size() == 1) ? ps[0] : 0;
        for (const IndexSet& h : lat.subgroups) {
            if (static_cast<uint64_t>(h.count()) * f.order == t.order() &&
                h.intersect(m).count() == 1) {
                f.complemented = true;
                break;
            }
        }
        out.factors.push_back(f);
        q = quotient_group(t, m);
    }
    for (const auto& f : out.factors) {
        if (f.prime == 0 || !f.complemented) continue;
        auto it = std::find_if(out.alpha.begin(), out.alpha.end(),
                               [&](const auto& pr) { return pr.first == f.prime; });
        if (it == out.alpha.end())
            out.alpha.emplace_back(f.prime, 1);
        else
            ++it->second;
    }
    std::sort(out.alpha.begin(), out.alpha.end());
    return out;
}

// ------------------------------------------------------- derived checks

int64_t m_relative(const GroupTable& t, const IndexSet& n_sub, const Budgets& b) {
    const uint32_t whole = max_independent_set(t.group(), b).m;
    const uint32_t quo = max_independent_set(quotient_group(t, n_sub), b).m;
    return static_cast<int64_t>(whole) - static_cast<int64_t>(quo);
}

GroupProfile profile_group(const PermGroup& g, const std::string& label, const Budgets& b) {
    GroupProfile pr;
    pr.label = label;
    pr.degree = g.degree();
    pr.order = g.order();
    if (g.order() == 1) {
        pr.soluble = pr.nilpotent = true;
        pr.m_le_delta = true;
        pr.alpha_p = std::vector<std::pair<uint32_t, uint32_t>>{};
        pr.m_eq_alpha_sum = true;
        return pr;
    }
    GroupTable t(g, b.table);
    pr.soluble = is_soluble(t);
    pr.nilpotent = is_nilpotent(t);
    pr.d = min_generators(g, b);
    pr.m = max_independent_set(g, b).m;
    Lattice lat = build_lattice(t, b.lattice);
    DeltaOfGroup dd = delta_of_group(g, &t, &lat, b);
    pr.delta = dd.delta;
    pr.d_p = std::move(dd.d_p);
    pr.m_le_delta = pr.m <= pr.delta;
    if (pr.soluble) {
        ChiefSeries cs = chief_series_alpha(g, SeriesVariant::first_minimal, b);
        uint64_t sum = 0;
        for (const auto& [p, a] : cs.alpha) sum += a;
        pr.alpha_p = std::move(cs.alpha);
        pr.m_eq_alpha_sum = (sum == pr.m);
    }
    return pr;
}

std::vector<QuotientDeltaCheck> check_quotient_delta(const PermGroup& g, const Budgets& b) {
    std::vector<QuotientDeltaCheck> out;
    if (g.order() == 1) return out;
    GroupTable t(g, b.table);
    Lattice lat = build_lattice(t, b.lattice);
    IndexSet phi = frattini_subgroup(t, lat);
    const uint64_t dg = delta_of_group(g, &t, &lat, b).delta;
    for (size_t idx : minimal_normal_indices(t, lat)) {
        const IndexSet& n = lat.subgroups[idx];
        if (n.subset_of(phi)) continue;
        QuotientDeltaCheck c;
        c.n_order = n.count();
        c.delta_g = dg;
        c.delta_q = delta_of_group(quotient_group(t, n), nullptr, nullptr, b).delta;
        c.pi_n = static_cast<uint32_t>(perm::primes_dividing(c.n_order).size());
        c.holds = dg >= c.delta_q + c.pi_n;
        out.push_back(c);
    }
    return out;
}

std::vector<DichotomyCheck> check_abelian_minimal_dichotomy(const PermGroup& g, const Budgets& b) {
    std::vector<DichotomyCheck> out;
    if (g.order() == 1) return out;
    GroupTable t(g, b.table);
    Lattice lat = build_lattice(t, b.lattice);
    std::vector<size_t> abelian_minimals;
    for (size_t idx : minimal_normal_indices(t, lat))
        if (is_abelian(t, lat.subgroups[idx])) abelian_minimals.push_back(idx);
    if (abelian_minimals.empty()) return out;
    IndexSet phi = frattini_subgroup(t, lat);
    const uint32_t mg = max_independent_set(g, b).m;
    for (size_t idx : abelian_minimals) {
        const IndexSet& n = lat.subgroups[idx];
        DichotomyCheck c;
        c.n_order = n.count();
        c.in_frattini = n.subset_of(phi);
        c.m_drop = static_cast<int64_t>(mg) -
                   static_cast<int64_t>(max_independent_set(quotient_group(t, n), b).m);
        c.holds = (c.m_drop == 0 || c.m_drop == 1) && ((c.m_drop == 0) == c.in_frattini);
        out.push_back(c);
    }
    return out;
}

} // namespace genbound::inv
