#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "genbound/primes.hpp"

namespace genbound::symdelta {

// Base-p digits of n, little-endian (digits[i] is the coefficient of p^i).
// Empty for n = 0. Throws std::invalid_argument for p < 2.
std::vector<uint32_t> padic_digits(uint64_t n, uint64_t p);

// Minimal generator count of a Sylow p-subgroup of Sym(n): with
// n = sum a_i p^i the rank is sum_{i>=1} a_i * i (Kaluzhnin).
// Throws std::invalid_argument unless p is prime.
uint64_t sylow_rank_sym(uint64_t n, uint64_t p);

// delta(n) = sum over primes p <= n of the Sylow p-rank of Sym(n),
// with the per-prime contributions kept sparse.
struct SymDeltaRecord {
    uint64_t n = 0;
    std::vector<std::pair<uint32_t, uint64_t>> contributions; // (p, d_p), ascending p
    uint64_t delta = 0;
    int64_t offset = 0; // delta - (n-1); n=1 gives 0 - 0 = 0
};

// Requires sieve.limit >= n.
SymDeltaRecord delta_sym(uint64_t n, const primes::PrimeSieve& sieve);

// delta(n) for every n in [1, n_max] in one incremental pass: moving n-1 -> n
// changes only the base-p digits for p | n, by v - (p-1)v(v-1)/2 where
// v = v_p(n). Cross-checked against the digit formula in the tests.
std::vector<int64_t> delta_sym_range(uint64_t n_max);

// Partition of [1, n_max] by offset = delta(n) - (n-1). Offsets above 3
// would contradict the classification, so they are collected separately
// as offenders instead of being silently dropped.
struct ClassificationTable {
    uint64_t n_max = 0;
    std::array<std::vector<uint64_t>, 4> lists; // offset 0,1,2,3
    uint64_t residual_count = 0;                // how many n have offset < 0
    std::vector<uint64_t> offenders;            // any n with offset > 3
};

ClassificationTable classify_range(uint64_t n_max);

// delta(n) split at sqrt(n): d_small sums d_p over p with p*p <= n,
// d_large over the rest. d_small + d_large == delta(n).
struct SplitRecord {
    uint64_t n = 0;
    uint64_t d_small = 0;
    uint64_t d_large = 0;
};

SplitRecord split_d(uint64_t n, const primes::PrimeSieve& sieve);

// Exact identity for the large-prime part: with r = floor(sqrt(n)),
//   d_large(n) == sum_{i=1..r} pi(floor(n/i)) - r*pi(r).
// Both sides evaluated independently in integer arithmetic.
struct DmIdentityRecord {
    uint64_t n = 0;
    uint64_t digit_side = 0;   // from the digit formula
    uint64_t counting_side = 0; // from the prime-counting sum
    bool equal = false;
};

DmIdentityRecord verify_dm2_identity(uint64_t n, const primes::PrimeSieve& sieve);

// Explicit asymptotic envelope for delta(n), natural logarithms:
//   lower       = n log 2 - 12 n / log n
//   upper_tight = n log 2 + 19n/(2 log n) + 137n/(2 log^2 n)
//                 + 4 sqrt(n)/log n + (3/2) sqrt(n) log n
//   upper_loose = n log 2 + 112 n / log n
struct StopBoundRecord {
    uint64_t n = 0;
    int64_t d = 0;
    double lower = 0.0;
    double upper_tight = 0.0;
    double upper_loose = 0.0;
    bool lower_ok = false; // lower <= d
    bool tight_ok = false; // d <= upper_tight
    bool chain_ok = false; // upper_tight <= upper_loose
};

// Requires n >= 2 (the bounds divide by log n).
StopBoundRecord stop_bound_record(uint64_t n, int64_t d);

struct StopBoundReport {
    uint64_t n_from = 0;
    uint64_t n_to = 0;
    std::vector<StopBoundRecord> violations; // records with any flag false
    bool pass = false;
};

// Sweeps [max(n_from,2), n_to] using the incremental evaluator.
StopBoundReport verify_stop_bounds(uint64_t n_from, uint64_t n_to);

} // namespace genbound::symdelta
