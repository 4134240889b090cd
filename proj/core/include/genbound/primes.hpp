#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genbound/errors.hpp"

namespace genbound::primes {

// Eratosthenes sieve up to an inclusive limit. The sorted prime list doubles
// as the counting table: pi(x) is the number of entries <= x.
struct PrimeSieve {
    uint64_t limit = 0;
    std::vector<bool> is_prime;       // index i true iff i prime, size limit+1
    std::vector<uint32_t> prime_list; // ascending
};

// Builds the sieve. Throws budget_error if the estimated working set exceeds
// memory_budget bytes (default 1e8).
PrimeSieve build_sieve(uint64_t limit, uint64_t memory_budget = 100'000'000);

// pi(floor(x)) for real x; 0 for x < 2. Throws std::out_of_range when
// floor(x) exceeds the sieve limit.
uint64_t prime_count(const PrimeSieve& sieve, double x);

// k-th prime, 1-indexed (nth_prime(1) == 2). Throws std::out_of_range when
// the sieve holds fewer than k primes.
uint64_t nth_prime(const PrimeSieve& sieve, uint64_t k);

struct BoundViolation {
    std::string inequality; // short label of the failing inequality
    uint64_t x = 0;         // the witness point (x or k)
    double lhs = 0.0;
    double rhs = 0.0;
};

struct BoundReport {
    std::string name;
    uint64_t x_max = 0;
    std::vector<BoundViolation> violations;
    bool pass = false;
};

// All floating-point inequality checks share one guard: a violation is
// recorded only when lhs > rhs + 1e-9*|rhs|, so ties never flip on rounding.
bool violates(double lhs, double rhs);

// Explicit prime counting bounds, checked pointwise at every integer:
//   pi(x) <= (x/log x)(1 + 3/(2 log x))   for 2 <= x <= x_max
//   pi(x) >= x/(log x - 1/2)              for 67 <= x <= x_max
BoundReport verify_count_bounds(const PrimeSieve& sieve, uint64_t x_max);

// Explicit k-th prime bounds, checked for every k in range:
//   k log k < p_k                          k >= 1
//   p_k < k(log k + log log k)             k >= 6
//   (p_k - 1)/log p_k <= k                 k >= 2
//   (p_k - 1)/log^2 p_k <= k/(log k + log log k)   k >= 2
BoundReport verify_nth_prime_bounds(const PrimeSieve& sieve, uint64_t k_max);

struct RatioConstant {
    double value = 0.0;  // max over 2 <= n <= n_max of n / pi(n)^eta
    uint64_t argmax = 0; // smallest n attaining it
};

// Scans n/pi(n)^eta over 2..n_max. eta > 0 required.
RatioConstant ratio_constant(const PrimeSieve& sieve, double eta, uint64_t n_max);

} // namespace genbound::primes
