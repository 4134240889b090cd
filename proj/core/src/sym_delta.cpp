#include "genbound/sym_delta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace genbound::symdelta {

std::vector<uint32_t> padic_digits(uint64_t n, uint64_t p) {
    if (p < 2) throw std::invalid_argument("padic_digits: base must be >= 2");
    std::vector<uint32_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<uint32_t>(n % p));
        n /= p;
    }
    return digits;
}

static bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t sylow_rank_sym(uint64_t n, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("sylow_rank_sym: p must be prime");
    uint64_t rank = 0, i = 0;
    for (uint32_t digit : padic_digits(n, p)) {
        rank += digit * i;
        ++i;
    }
    return rank;
}

SymDeltaRecord delta_sym(uint64_t n, const primes::PrimeSieve& sieve) {
    if (n > sieve.limit) throw std::out_of_range("delta_sym: n beyond sieve limit");
    SymDeltaRecord rec;
    rec.n = n;
    for (uint32_t p : sieve.prime_list) {
        if (p > n) break;
        rec.contributions.emplace_back(p, sylow_rank_sym(n, p));
        rec.delta += rec.contributions.back().second;
    }
    rec.offset = static_cast<int64_t>(rec.delta) - static_cast<int64_t>(n == 0 ? 0 : n - 1);
    return rec;
}

std::vector<int64_t> delta_sym_range(uint64_t n_max) {
    if (n_max == 0) return {0};
    // smallest prime factor table for fast factorisation of every n
    std::vector<uint32_t> spf(n_max + 1, 0);
    for (uint64_t i = 2; i <= n_max; ++i) {
        if (spf[i] == 0)
            for (uint64_t j = i; j <= n_max; j += i)
                if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
    }
    std::vector<int64_t> d(n_max + 1, 0);
    for (uint64_t n = 2; n <= n_max; ++n) {
        int64_t step = 0;
        uint64_t m = n;
        while (m > 1) {
            uint64_t p = spf[m];
            int64_t v = 0;
            while (m % p == 0) {
                m /= p;
                ++v;
            }
            // carry effect on the base-p digit sum when stepping n-1 -> n
            step += v - static_cast<int64_t>(p - 1) * v * (v - 1) / 2;
        }
        d[n] = d[n - 1] + step;
    }
    return d;
}

ClassificationTable classify_range(uint64_t n_max) {
    ClassificationTable table;
    table.n_max = n_max;
    std::vector<int64_t> d = delta_sym_range(n_max);
    for (uint64_t n = 1; n <= n_max; ++n) {
        int64_t offset = d[n] - static_cast<int64_t>(n - 1);
        if (offset < 0)
            ++table.residual_count;
        else if (offset <= 3)
            table.lists[static_cast<size_t>(offset)].push_back(n);
        else
            table.offenders.push_back(n);
    }
    return table;
}

SplitRecord split_d(uint64_t n, const primes::PrimeSieve& sieve) {
    if (n > sieve.limit) throw std::out_of_range("split_d: n beyond sieve limit");
    SplitRecord rec;
    rec.n = n;
    for (uint32_t p : sieve.prime_list) {
        if (p > n) break;
        uint64_t r = sylow_rank_sym(n, p);
        if (static_cast<uint64_t>(p) * p <= n)
            rec.d_small += r;
        else
            rec.d_large += r;
    }
    return rec;
}

static uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

DmIdentityRecord verify_dm2_identity(uint64_t n, const primes::PrimeSieve& sieve) {
    if (n > sieve.limit) throw std::out_of_range("verify_dm2_identity: n beyond sieve limit");
    DmIdentityRecord rec;
    rec.n = n;
    rec.digit_side = split_d(n, sieve).d_large;
    uint64_t r = isqrt_u64(n);
    uint64_t sum = 0;
    for (uint64_t i = 1; i <= r; ++i)
        sum += prime_count(sieve, static_cast<double>(n / i));
    rec.counting_side = sum - r * prime_count(sieve, static_cast<double>(r));
    rec.equal = rec.digit_side == rec.counting_side;
    return rec;
}

StopBoundRecord stop_bound_record(uint64_t n, int64_t d) {
    if (n < 2) throw std::invalid_argument("stop_bound_record: n must be >= 2");
    StopBoundRecord rec;
    rec.n = n;
    rec.d = d;
    double nn = static_cast<double>(n);
    double ln = std::log(nn);
    double sq = std::sqrt(nn);
    double base = nn * std::numbers::ln2;
    rec.lower = base - 12.0 * nn / ln;
    rec.upper_tight = base + 19.0 * nn / (2.0 * ln) + 137.0 * nn / (2.0 * ln * ln) +
                      4.0 * sq / ln + 1.5 * sq * ln;
    rec.upper_loose = base + 112.0 * nn / ln;
    double dd = static_cast<double>(d);
    rec.lower_ok = !primes::violates(rec.lower, dd);
    rec.tight_ok = !primes::violates(dd, rec.upper_tight);
    rec.chain_ok = !primes::violates(rec.upper_tight, rec.upper_loose);
    return rec;
}

StopBoundReport verify_stop_bounds(uint64_t n_from, uint64_t n_to) {
    StopBoundReport rep;
    rep.n_from = n_from < 2 ? 2 : n_from;
    rep.n_to = n_to;
    if (rep.n_from > n_to) {
        rep.pass = true;
        return rep;
    }
    std::vector<int64_t> d = delta_sym_range(n_to);
    for (uint64_t n = rep.n_from; n <= n_to; ++n) {
        StopBoundRecord rec = stop_bound_record(n, d[n]);
        if (!rec.lower_ok || !rec.tight_ok || !rec.chain_ok) rep.violations.push_back(rec);
    }
    rep.pass = rep.violations.empty();
    return rep;
}

} // namespace genbound::symdelta
