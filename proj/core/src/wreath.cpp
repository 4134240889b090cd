#include "genbound/wreath.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "genbound/errors.hpp"

namespace genbound::wreath {

using perm::Permutation;
using perm::Point;

namespace {

uint32_t prime_power_base(uint64_t order) {
    if (order < 2) return 0;
    auto ps = perm::primes_dividing(order);
    return ps.size() == 1 ? ps[0] : 0;
}

// |Q|^fibers * |P| without overflow; 0 means "past the cap"
uint64_t capped_order(uint64_t q_order, uint32_t fibers, uint64_t p_order, uint64_t cap) {
    uint64_t v = p_order;
    for (uint32_t i = 0; i < fibers; ++i) {
        if (v > cap / q_order) return 0;
        v *= q_order;
    }
    return v <= cap ? v : 0;
}

uint32_t rank_or_zero(const PermGroup& g) {
    return g.order() == 1 ? 0 : inv::pgroup_rank(g);
}

// derived subgroup equals the whole group
bool is_perfect(const GroupTable& t) {
    const auto& gens = t.generator_indices();
    std::vector<uint16_t> comms;
    for (uint16_t a : gens)
        for (uint16_t b : gens)
            comms.push_back(t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b)));
    return normal_closure(t, comms, gens).count() == t.order();
}

} // namespace

PermGroup wreath_product(const PermGroup& q, const PermGroup& p, const perm::ClosureBudget& b) {
    const uint32_t gamma = q.degree();
    const uint32_t delta = p.degree();
    if (gamma == 0 || delta == 0)
        throw std::invalid_argument("wreath_product: both factors need positive degree");
    const uint64_t n = static_cast<uint64_t>(gamma) * delta;
    if (n > std::numeric_limits<Point>::max())
        throw std::invalid_argument("wreath_product: composite degree exceeds the point type");
    const uint64_t expected = capped_order(q.order(), delta, p.order(), b.max_elements);
    if (expected == 0) throw budget_error("wreath_product: order exceeds the element budget");

    std::vector<Permutation> gens;
    std::vector<Point> img(n);
    for (uint32_t f = 0; f < delta; ++f)
        for (const auto& x : q.generators()) {
            std::iota(img.begin(), img.end(), Point{0});
            for (uint32_t g = 0; g < gamma; ++g)
                img[f * gamma + g] = static_cast<Point>(f * gamma + x(static_cast<Point>(g)));
            gens.emplace_back(img);
        }
    for (const auto& y : p.generators()) {
        for (uint32_t f = 0; f < delta; ++f)
            for (uint32_t g = 0; g < gamma; ++g)
                img[f * gamma + g] = static_cast<Point>(y(static_cast<Point>(f)) * gamma + g);
        gens.emplace_back(img);
    }

    PermGroup w = PermGroup::closure(static_cast<uint32_t>(n), std::move(gens), b);
    if (w.order() != expected)
        throw std::logic_error("wreath_product: closure order differs from |Q|^|D|*|P|");
    return w;
}

WreathRankRecord verify_wreath_rank(const PermGroup& q, const PermGroup& p,
                                    const inv::Budgets& b) {
    const uint32_t pq = prime_power_base(q.order());
    const uint32_t pp = prime_power_base(p.order());
    if ((q.order() > 1 && pq == 0) || (p.order() > 1 && pp == 0) ||
        (pq != 0 && pp != 0 && pq != pp))
        throw std::invalid_argument("verify_wreath_rank: factors must be p-groups over one prime");

    WreathRankRecord r;
    r.d_top = rank_or_zero(p);
    r.d_base = rank_or_zero(q);
    r.orbits_top = static_cast<uint32_t>(orbits(p).size());
    PermGroup w = wreath_product(q, p, b.closure);
    r.order = w.order();
    r.expected = r.d_top + r.orbits_top * r.d_base;
    r.actual = inv::min_generators(w, b);
    r.match = (r.expected == r.actual);
    return r;
}

namespace {

struct FamilySearch {
    const std::vector<const IndexSet*>& interval;
    const IndexSet& stab;
    std::vector<const IndexSet*> cur;
    uint32_t best_t = 1;
    std::vector<IndexSet> best_family;

    bool drop_one_holds() const {
        for (size_t skip = 0; skip < cur.size(); ++skip) {
            IndexSet inter = *cur[skip == 0 ? 1 : 0];
            for (size_t j = (skip == 0 ? 2 : 1); j < cur.size(); ++j)
                if (j != skip) inter = inter.intersect(*cur[j]);
            if (inter.count() == stab.count()) return false;
        }
        return true;
    }

    void rec(size_t start, const IndexSet& inter) {
        for (size_t i = start; i < interval.size(); ++i) {
            IndexSet next = inter.intersect(*interval[i]);
            // a member that fails to shrink the intersection would always
            // violate condition (2) at the leaf
            if (next.count() == inter.count()) continue;
            cur.push_back(interval[i]);
            if (next.count() == stab.count()) {
                if (cur.size() > best_t && drop_one_holds()) {
                    best_t = static_cast<uint32_t>(cur.size());
                    best_family.clear();
                    for (const IndexSet* u : cur) best_family.push_back(*u);
                }
            } else {
                rec(i + 1, next);
            }
            cur.pop_back();
        }
    }
};

} // namespace

TOmegaResult t_omega(const PermGroup& k, Point omega, const inv::Budgets& b) {
    if (k.degree() < 2 || !is_transitive(k))
        throw std::invalid_argument("t_omega: K must be transitive on at least 2 points");
    GroupTable t(k, b.table);
    IndexSet stab(t.order());
    for (uint32_t i = 0; i < t.order(); ++i)
        if (t.group().elements()[i](omega) == omega) stab.set(i);

    perm::Lattice lat = build_lattice(t, b.lattice);
    std::vector<const IndexSet*> interval;
    for (const auto& u : lat.subgroups)
        if (stab.subset_of(u) && u.count() != stab.count() && u.count() != t.order())
            interval.push_back(&u);

    IndexSet whole(t.order());
    for (uint32_t i = 0; i < t.order(); ++i) whole.set(i);
    FamilySearch search{interval, stab, {}, 1, {stab}};
    search.rec(0, whole);

    TOmegaResult out;
    out.t = search.best_t;
    out.omega = omega;
    out.families = std::move(search.best_family);
    return out;
}

bool revalidate_certificate(const GroupTable& tk, Point omega,
                            const std::vector<IndexSet>& families) {
    if (families.empty()) return false;
    IndexSet stab(tk.order());
    for (uint32_t i = 0; i < tk.order(); ++i)
        if (tk.group().elements()[i](omega) == omega) stab.set(i);

    IndexSet inter = families.front();
    for (const auto& u : families) {
        if (!stab.subset_of(u)) return false;
        inter = inter.intersect(u);
    }
    if (!(inter == stab)) return false;
    if (families.size() == 1) return stab.count() != tk.order();
    for (size_t skip = 0; skip < families.size(); ++skip) {
        IndexSet part = families[skip == 0 ? 1 : 0];
        for (size_t j = 0; j < families.size(); ++j)
            if (j != skip) part = part.intersect(families[j]);
        if (part.count() == stab.count()) return false;
    }
    return true;
}

SylowSumReport sylow_sum_check(const PermGroup& s, const std::vector<uint32_t>& pi_star,
                               const PermGroup& k, const inv::Budgets& b) {
    if (s.order() < 60)
        throw std::invalid_argument("sylow_sum_check: |S| is below every non-abelian simple order");
    {
        GroupTable ts(s, b.table);
        if (!is_perfect(ts)) throw std::invalid_argument("sylow_sum_check: S is not perfect");
    }

    SylowSumReport rep;
    rep.t = t_omega(k, 0, b).t;
    for (uint32_t p : pi_star) {
        PermGroup pk = inv::sylow_subgroup_direct(k, p, b);
        PermGroup pip = inv::sylow_subgroup_direct(s, p, b);
        if (pip.order() == 1)
            throw std::invalid_argument("sylow_sum_check: listed prime does not divide |S|");
        SylowSumTerm term;
        term.p = p;
        term.d_top = rank_or_zero(pk);
        term.orbit_count = static_cast<uint32_t>(orbits(pk.generators(), k.degree()).size());
        term.d_base = inv::pgroup_rank(pip);
        term.d_p = term.d_top + term.orbit_count * term.d_base;
        if (capped_order(pip.order(), k.degree(), pk.order(), b.closure.max_elements) != 0)
            term.cross_check = inv::min_generators(wreath_product(pip, pk, b.closure), b);
        rep.sum += term.d_p;
        rep.terms.push_back(term);
    }
    rep.strict = rep.sum > rep.t;
    return rep;
}

} // namespace genbound::wreath
