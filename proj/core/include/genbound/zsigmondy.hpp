#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genbound/primes.hpp"

namespace genbound::zsig {

using BigInt = boost::multiprecision::cpp_int;

// a^n with a hard size cap (default: result must stay below 2^128).
// Throws budget_error when the cap would be exceeded.
BigInt pow_checked(uint64_t a, uint32_t n, uint32_t max_bits = 128);

// Full factorisation as (prime, exponent) pairs, ascending primes.
// Trial division by the sieved primes first, then Brent-cycle splitting on
// the cofactor with Miller-Rabin primality tests. A cofactor that cannot be
// split within rho_budget iterations is a hard error, never a silent guess.
std::vector<std::pair<BigInt, uint32_t>> factorize(BigInt v, const primes::PrimeSieve& sieve,
                                                   uint64_t rho_budget = 20'000'000);

// True iff v is prime. Deterministic for v < 3.3e24 (fixed Miller-Rabin
// base set); the same bases act as a strong probabilistic test above that.
bool is_probable_prime(const BigInt& v);

enum class ZsigException {
    none,
    mersenne_case,  // n = 2 and a+1 a power of two (a = 2^s - 1, s >= 2)
    binary_six_case // n = 6, a = 2
};

struct PrimitiveDivisorRecord {
    uint64_t a = 0;
    uint32_t n = 0;
    BigInt value;                                          // a^n - 1
    std::vector<std::pair<BigInt, uint32_t>> factorization; // of a^n - 1
    std::vector<BigInt> primitive;                          // primes with ord_p(a) = n
    ZsigException exception = ZsigException::none;
};

// Primitive prime divisors of a^n - 1: prime p | a^n - 1 is primitive iff
// the multiplicative order of a mod p is exactly n, i.e. p divides no
// a^e - 1 with 1 <= e < n. Preconditions: a >= 2, n >= 1.
PrimitiveDivisorRecord primitive_prime_divisors(uint64_t a, uint32_t n,
                                                const primes::PrimeSieve& sieve,
                                                uint32_t max_bits = 128);

// Every primitive prime divisor of a^n - 1 is congruent to 1 mod n.
bool verify_primitive_residues(const PrimitiveDivisorRecord& rec);

struct SweepViolation {
    uint64_t a = 0;
    uint32_t n = 0;
    std::string reason;
};

struct SweepReport {
    uint64_t a_max = 0;
    uint32_t n_max = 0;
    uint64_t checked = 0;
    std::vector<SweepViolation> violations;
    std::vector<std::pair<uint64_t, uint32_t>> exceptions; // (a, n) pairs hit
    bool pass = false;
};

// For every 2 <= a <= a_max, 2 <= n <= n_max: primitive set nonempty unless
// (a, n) matches a known exception, and all primitive primes are 1 mod n.
SweepReport sweep_primitive(uint64_t a_max, uint32_t n_max, const primes::PrimeSieve& sieve);

// Value of the m-th cyclotomic polynomial at q >= 2, via the exact divisor
// recursion Phi_m(q) = (q^m - 1) / prod_{d | m, d < m} Phi_d(q).
BigInt cyclotomic_value(uint32_t m, uint64_t q, uint32_t max_bits = 128);

struct SimpleGroupDatum {
    std::string label;
    BigInt order;
    uint64_t out_order = 0;         // order of the outer automorphism group
    std::vector<BigInt> pi;         // primes dividing order
    std::vector<BigInt> pi_star;    // primes dividing order but not out_order
};

// pi and pi_star for one (order, |Out|) pair.
SimpleGroupDatum pi_star(const std::string& label, const BigInt& order, uint64_t out_order,
                         const primes::PrimeSieve& sieve);

// Reads a whitespace-separated table of `label order out_order` rows
// ('#' starts a comment). Throws parse_error on malformed rows.
std::vector<SimpleGroupDatum> load_simple_groups(const std::string& path,
                                                 const primes::PrimeSieve& sieve);

} // namespace genbound::zsig
