#include "genbound/zsigmondy.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace genbound::zsig {

namespace mp = boost::multiprecision;

BigInt pow_checked(uint64_t a, uint32_t n, uint32_t max_bits) {
    if (a < 2) throw std::invalid_argument("pow_checked: base must be >= 2");
    // quick reject before doing any large multiplication
    if (static_cast<uint64_t>(mp::msb(BigInt(a)) + 1) * n > max_bits + 64)
        throw budget_error("pow_checked: " + std::to_string(a) + "^" + std::to_string(n) +
                           " exceeds " + std::to_string(max_bits) + " bits");
    BigInt v = mp::pow(BigInt(a), n);
    if (mp::msb(v) + 1 > max_bits)
        throw budget_error("pow_checked: " + std::to_string(a) + "^" + std::to_string(n) +
                           " exceeds " + std::to_string(max_bits) + " bits");
    return v;
}

bool is_probable_prime(const BigInt& v) {
    if (v < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    BigInt d = v - 1;
    uint32_t r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic below 3.317e24 (Sorenson-Webster); strong test above
    for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        BigInt x = mp::powm(BigInt(a), d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (uint32_t i = 1; i < r; ++i) {
            x = (x * x) % v;
            if (x == v - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's variant of the rho cycle finder; returns a nontrivial factor of v
// (composite, odd, no factor <= trial-division floor) or 0 on budget.
static BigInt rho_split(const BigInt& v, uint64_t budget) {
    for (uint64_t c = 1;; ++c) {
        BigInt x = 2, y = 2, q = 1, g = 1, ys = 0;
        uint64_t spent = 0;
        const uint64_t batch = 128;
        uint64_t r = 1;
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % v;
            for (uint64_t k = 0; k < r && g == 1; k += batch) {
                ys = y;
                uint64_t lim = std::min(batch, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % v;
                    q = (q * mp::abs(x - y)) % v;
                }
                g = mp::gcd(q, v);
                spent += lim;
                if (spent > budget) return 0;
            }
            r <<= 1;
        }
        if (g == v) {
            // backtrack one step at a time to pick up the factor
            do {
                ys = (ys * ys + c) % v;
                g = mp::gcd(mp::abs(x - ys), v);
            } while (g == 1);
        }
        if (g != v) return g;
        // cycle degenerated for this c, try the next polynomial
        if (c > 64) return 0;
    }
}

static void factor_rec(BigInt v, std::map<BigInt, uint32_t>& out, uint64_t budget) {
    if (v == 1) return;
    if (is_probable_prime(v)) {
        ++out[v];
        return;
    }
    BigInt g = rho_split(v, budget);
    if (g == 0 || g == 1 || g == v)
        throw budget_error("factorize: unresolved composite cofactor " + v.str());
    factor_rec(g, out, budget);
    factor_rec(v / g, out, budget);
}

std::vector<std::pair<BigInt, uint32_t>> factorize(BigInt v, const primes::PrimeSieve& sieve,
                                                   uint64_t rho_budget) {
    if (v < 1) throw std::invalid_argument("factorize: value must be >= 1");
    std::map<BigInt, uint32_t> acc;
    for (uint32_t p : sieve.prime_list) {
        if (BigInt(p) * p > v) break;
        while (v % p == 0) {
            ++acc[BigInt(p)];
            v /= p;
        }
    }
    factor_rec(v, acc, rho_budget);
    return {acc.begin(), acc.end()};
}

static bool power_of_two(uint64_t x) {
    return x != 0 && (x & (x - 1)) == 0;
}

static ZsigException classify_exception(uint64_t a, uint32_t n) {
    // literal patterns: n=2 with a+1 a power of two, and (a,n) = (2,6)
    if (n == 2 && a >= 3 && power_of_two(a + 1)) return ZsigException::mersenne_case;
    if (n == 6 && a == 2) return ZsigException::binary_six_case;
    return ZsigException::none;
}

PrimitiveDivisorRecord primitive_prime_divisors(uint64_t a, uint32_t n,
                                                const primes::PrimeSieve& sieve,
                                                uint32_t max_bits) {
    if (a < 2) throw std::invalid_argument("primitive_prime_divisors: a must be >= 2");
    if (n < 1) throw std::invalid_argument("primitive_prime_divisors: n must be >= 1");
    PrimitiveDivisorRecord rec;
    rec.a = a;
    rec.n = n;
    rec.value = pow_checked(a, n, max_bits) - 1;
    rec.exception = classify_exception(a, n);
    if (rec.value == 0) return rec; // a^1 - 1 = 1 cannot happen for a >= 2
    rec.factorization = factorize(rec.value, sieve);

    // prime divisors of n, for the order test
    std::vector<uint32_t> n_primes;
    uint32_t m = n;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= m; ++d)
        while (m % d == 0) {
            if (n_primes.empty() || n_primes.back() != d) n_primes.push_back(d);
            m /= d;
        }
    if (m > 1) n_primes.push_back(m);

    for (const auto& [p, e] : rec.factorization) {
        // ord_p(a) divides n here; it equals n iff no a^(n/r) == 1 (mod p)
        bool primitive = true;
        for (uint32_t r : n_primes)
            if (mp::powm(BigInt(a), n / r, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) rec.primitive.push_back(p);
    }
    return rec;
}

bool verify_primitive_residues(const PrimitiveDivisorRecord& rec) {
    for (const BigInt& p : rec.primitive)
        if (p % rec.n != 1) return false;
    return true;
}

SweepReport sweep_primitive(uint64_t a_max, uint32_t n_max, const primes::PrimeSieve& sieve) {
    SweepReport rep;
    rep.a_max = a_max;
    rep.n_max = n_max;
    for (uint64_t a = 2; a <= a_max; ++a)
        for (uint32_t n = 2; n <= n_max; ++n) {
            PrimitiveDivisorRecord rec = primitive_prime_divisors(a, n, sieve);
            ++rep.checked;
            if (rec.primitive.empty()) {
                if (rec.exception == ZsigException::none)
                    rep.violations.push_back({a, n, "no primitive prime and no exception applies"});
                else
                    rep.exceptions.emplace_back(a, n);
            } else if (rec.exception != ZsigException::none) {
                rep.violations.push_back({a, n, "exception pattern but primitive primes exist"});
            }
            if (!verify_primitive_residues(rec))
                rep.violations.push_back({a, n, "primitive prime not congruent to 1 mod n"});
        }
    rep.pass = rep.violations.empty();
    return rep;
}

static BigInt cyclotomic_rec(uint32_t m, uint64_t q, uint32_t max_bits,
                             std::map<uint32_t, BigInt>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    BigInt v = pow_checked(q, m, max_bits) - 1;
    for (uint32_t d = 1; d < m; ++d)
        if (m % d == 0) v /= cyclotomic_rec(d, q, max_bits, memo);
    memo.emplace(m, v);
    return v;
}

BigInt cyclotomic_value(uint32_t m, uint64_t q, uint32_t max_bits) {
    if (m < 1) throw std::invalid_argument("cyclotomic_value: m must be >= 1");
    if (q < 2) throw std::invalid_argument("cyclotomic_value: q must be >= 2");
    std::map<uint32_t, BigInt> memo;
    return cyclotomic_rec(m, q, max_bits, memo);
}

SimpleGroupDatum pi_star(const std::string& label, const BigInt& order, uint64_t out_order,
                         const primes::PrimeSieve& sieve) {
    if (order < 1) throw std::invalid_argument("pi_star: order must be positive");
    if (out_order < 1) throw std::invalid_argument("pi_star: out_order must be positive");
    SimpleGroupDatum d;
    d.label = label;
    d.order = order;
    d.out_order = out_order;
    for (const auto& [p, e] : factorize(order, sieve)) {
        d.pi.push_back(p);
        if (BigInt(out_order) % p != 0) d.pi_star.push_back(p);
    }
    return d;
}

std::vector<SimpleGroupDatum> load_simple_groups(const std::string& path,
                                                 const primes::PrimeSieve& sieve) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open simple group table: " + path);
    std::vector<SimpleGroupDatum> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string label, order_s;
        uint64_t out = 0;
        if (!(ss >> label)) continue; // blank line
        if (!(ss >> order_s >> out))
            throw parse_error(path + ":" + std::to_string(lineno) + ": expected `label order out_order`");
        std::string extra;
        if (ss >> extra)
            throw parse_error(path + ":" + std::to_string(lineno) + ": trailing tokens");
        BigInt order;
        try {
            order = BigInt(order_s);
        } catch (const std::exception&) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": bad order " + order_s);
        }
        rows.push_back(pi_star(label, order, out, sieve));
    }
    return rows;
}

} // namespace genbound::zsig
