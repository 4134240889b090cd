#include "genbound/primes.hpp"

#include <algorithm>
#include <cmath>

namespace genbound::primes {

PrimeSieve build_sieve(uint64_t limit, uint64_t memory_budget) {
    // bit array + prime list; the list length is bounded crudely from above
    uint64_t est_primes = limit < 17 ? 8 : static_cast<uint64_t>(1.3 * limit / std::log(static_cast<double>(limit)));
    uint64_t est_bytes = (limit + 8) / 8 + 4 * est_primes;
    if (est_bytes > memory_budget)
        throw budget_error("sieve limit " + std::to_string(limit) + " needs ~" + std::to_string(est_bytes) +
                           " bytes, budget is " + std::to_string(memory_budget));

    PrimeSieve s;
    s.limit = limit;
    s.is_prime.assign(limit + 1, true);
    if (limit >= 0) s.is_prime[0] = false;
    if (limit >= 1) s.is_prime[1] = false;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (s.is_prime[i])
            for (uint64_t j = i * i; j <= limit; j += i) s.is_prime[j] = false;
    for (uint64_t i = 2; i <= limit; ++i)
        if (s.is_prime[i]) s.prime_list.push_back(static_cast<uint32_t>(i));
    return s;
}

uint64_t prime_count(const PrimeSieve& sieve, double x) {
    if (x < 2.0) return 0;
    uint64_t n = static_cast<uint64_t>(std::floor(x));
    if (n > sieve.limit)
        throw std::out_of_range("prime_count(" + std::to_string(n) + ") beyond sieve limit " +
                                std::to_string(sieve.limit));
    auto it = std::upper_bound(sieve.prime_list.begin(), sieve.prime_list.end(), n);
    return static_cast<uint64_t>(it - sieve.prime_list.begin());
}

uint64_t nth_prime(const PrimeSieve& sieve, uint64_t k) {
    if (k == 0 || k > sieve.prime_list.size())
        throw std::out_of_range("nth_prime(" + std::to_string(k) + "): sieve holds " +
                                std::to_string(sieve.prime_list.size()) + " primes");
    return sieve.prime_list[k - 1];
}

bool violates(double lhs, double rhs) {
    return lhs > rhs + 1e-9 * std::abs(rhs);
}

BoundReport verify_count_bounds(const PrimeSieve& sieve, uint64_t x_max) {
    if (x_max > sieve.limit) throw std::out_of_range("x_max beyond sieve limit");
    BoundReport rep{"prime count bounds", x_max, {}, false};
    uint64_t pi = 0;
    for (uint64_t x = 2; x <= x_max; ++x) {
        if (sieve.is_prime[x]) ++pi;
        double lx = std::log(static_cast<double>(x));
        double upper = (x / lx) * (1.0 + 1.5 / lx);
        if (violates(static_cast<double>(pi), upper))
            rep.violations.push_back({"pi(x) <= (x/log x)(1+3/(2 log x))", x, static_cast<double>(pi), upper});
        if (x >= 67) {
            double lower = x / (lx - 0.5);
            if (violates(lower, static_cast<double>(pi)))
                rep.violations.push_back({"pi(x) >= x/(log x - 1/2)", x, lower, static_cast<double>(pi)});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

BoundReport verify_nth_prime_bounds(const PrimeSieve& sieve, uint64_t k_max) {
    if (k_max > sieve.prime_list.size())
        throw std::out_of_range("k_max beyond sieved prime count");
    BoundReport rep{"nth prime bounds", k_max, {}, false};
    for (uint64_t k = 1; k <= k_max; ++k) {
        double p = static_cast<double>(sieve.prime_list[k - 1]);
        double lk = std::log(static_cast<double>(k)); // log 1 = 0, fine for k=1
        if (violates(k * lk, p))
            rep.violations.push_back({"k log k < p_k", k, k * lk, p});
        if (k >= 6) {
            double rhs = k * (lk + std::log(lk));
            if (violates(p, rhs))
                rep.violations.push_back({"p_k < k(log k + log log k)", k, p, rhs});
        }
        if (k >= 2) {
            double lp = std::log(p);
            if (violates((p - 1.0) / lp, static_cast<double>(k)))
                rep.violations.push_back({"(p_k-1)/log p_k <= k", k, (p - 1.0) / lp, static_cast<double>(k)});
            double denom = lk + std::log(lk); // k >= 2 so log k > 0; at k=2 log log k < 0 but denom > 0
            double rhs = k / denom;
            if (violates((p - 1.0) / (lp * lp), rhs))
                rep.violations.push_back({"(p_k-1)/log^2 p_k <= k/(log k + log log k)", k,
                                          (p - 1.0) / (lp * lp), rhs});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

RatioConstant ratio_constant(const PrimeSieve& sieve, double eta, uint64_t n_max) {
    if (eta <= 0.0) throw std::invalid_argument("ratio_constant: eta must be positive");
    if (n_max > sieve.limit) throw std::out_of_range("n_max beyond sieve limit");
    if (n_max < 2) throw std::invalid_argument("ratio_constant: n_max must be >= 2");
    RatioConstant best;
    uint64_t pi = 0;
    for (uint64_t n = 2; n <= n_max; ++n) {
        if (sieve.is_prime[n]) ++pi;
        double r = n / std::pow(static_cast<double>(pi), eta);
        if (r > best.value) {
            best.value = r;
            best.argmax = n;
        }
    }
    return best;
}

} // namespace genbound::primes
