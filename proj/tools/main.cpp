// Command-line driver. Exit codes: 0 all checks pass, 1 open-conjecture
// anomaly (a non-soluble group with m > delta), 2 input error, 3 budget
// exhausted, 4 a paper-backed identity failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genbound/group_io.hpp"
#include "genbound/invariants.hpp"
#include "genbound/primes.hpp"
#include "genbound/sym_delta.hpp"
#include "genbound/wreath.hpp"
#include "genbound/zsigmondy.hpp"

namespace {

using namespace genbound;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolation = 4;

perm::PermGroup from_cycles(uint32_t degree, const std::vector<std::string>& words) {
    std::vector<perm::Permutation> gens;
    for (const auto& w : words) gens.push_back(perm::parse_permutation(w, degree));
    return perm::PermGroup::closure(degree, std::move(gens), {});
}

// ------------------------------------------------------------------- sym

int run_sym_delta(uint64_t from, uint64_t to) {
    if (from < 1 || to < from) {
        std::fprintf(stderr, "sym delta: need 1 <= from <= to\n");
        return kExitInput;
    }
    auto deltas = symdelta::delta_sym_range(to);
    std::printf("n,delta,offset,lower_ok,upper_ok,chain_ok\n");
    for (uint64_t n = from; n <= to; ++n) {
        int64_t d = deltas[n];
        int64_t offset = d - static_cast<int64_t>(n - 1);
        int lo = 1, hi = 1, chain = 1;
        if (n >= 2) {
            auto rec = symdelta::stop_bound_record(n, d);
            lo = rec.lower_ok;
            hi = rec.tight_ok;
            chain = rec.chain_ok;
        }
        std::printf("%llu,%lld,%lld,%d,%d,%d\n", static_cast<unsigned long long>(n),
                    static_cast<long long>(d), static_cast<long long>(offset), lo, hi, chain);
    }
    return kExitOk;
}

int run_sym_classify(uint64_t max_n) {
    if (max_n < 1) {
        std::fprintf(stderr, "sym classify: --max must be at least 1\n");
        return kExitInput;
    }
    auto table = symdelta::classify_range(max_n);
    for (int off = 0; off < 4; ++off) {
        std::printf("offset %d:", off);
        for (uint64_t n : table.lists[off]) std::printf(" %llu", static_cast<unsigned long long>(n));
        std::printf("\n");
    }
    std::printf("residual negative: %llu\n", static_cast<unsigned long long>(table.residual_count));
    if (!table.offenders.empty()) {
        std::fprintf(stderr, "offset above 3 at:");
        for (uint64_t n : table.offenders)
            std::fprintf(stderr, " %llu", static_cast<unsigned long long>(n));
        std::fprintf(stderr, "\n");
        return kExitViolation;
    }
    return kExitOk;
}

int run_sym_verify_stop(uint64_t max_n) {
    if (max_n < 2) {
        std::fprintf(stderr, "sym verify-stop: --max must be at least 2\n");
        return kExitInput;
    }
    auto report = symdelta::verify_stop_bounds(2, max_n);
    if (report.pass) {
        std::printf("all bounds hold for 2 <= n <= %llu\n",
                    static_cast<unsigned long long>(max_n));
        return kExitOk;
    }
    for (const auto& v : report.violations)
        std::printf("n=%llu d=%lld lower=%.6f upper=%.6f lower_ok=%d upper_ok=%d chain_ok=%d\n",
                    static_cast<unsigned long long>(v.n), static_cast<long long>(v.d), v.lower,
                    v.upper_tight, v.lower_ok, v.tight_ok, v.chain_ok);
    return kExitViolation;
}

// ----------------------------------------------------------------- primes

int print_bound_report(const primes::BoundReport& report) {
    if (report.pass) {
        std::printf("%s: all inequalities hold up to %llu\n", report.name.c_str(),
                    static_cast<unsigned long long>(report.x_max));
        return kExitOk;
    }
    for (const auto& v : report.violations)
        std::printf("%s violated at %llu: %.9f vs %.9f\n", v.inequality.c_str(),
                    static_cast<unsigned long long>(v.x), v.lhs, v.rhs);
    return kExitViolation;
}

int run_primes_rs(uint64_t max_x) {
    auto sieve = primes::build_sieve(std::max<uint64_t>(max_x, 100));
    return print_bound_report(primes::verify_count_bounds(sieve, max_x));
}

int run_primes_pk(uint64_t max_k) {
    // p_k < k(log k + log log k) for k >= 6, so this limit reaches p_{max_k}
    double est = 100.0;
    if (max_k >= 6) {
        double lk = std::log(static_cast<double>(max_k));
        est = 1.2 * static_cast<double>(max_k) * (lk + std::log(lk)) + 100.0;
    }
    auto sieve = primes::build_sieve(static_cast<uint64_t>(est));
    return print_bound_report(primes::verify_nth_prime_bounds(sieve, max_k));
}

int run_primes_stup(double eta, uint64_t max_n) {
    if (eta <= 0.0 || max_n < 2) {
        std::fprintf(stderr, "primes stup: need --eta > 0 and --max >= 2\n");
        return kExitInput;
    }
    auto sieve = primes::build_sieve(std::max<uint64_t>(max_n, 100));
    auto rc = primes::ratio_constant(sieve, eta, max_n);
    std::printf("c_%g = %.6f at n = %llu\n", eta, rc.value,
                static_cast<unsigned long long>(rc.argmax));
    return kExitOk;
}

// -------------------------------------------------------------- zsigmondy

const char* exception_text(zsig::ZsigException e) {
    switch (e) {
        case zsig::ZsigException::mersenne_case: return "n=2, a+1 a power of two";
        case zsig::ZsigException::binary_six_case: return "a=2, n=6";
        default: return "";
    }
}

int run_zsig_single(uint64_t a, uint32_t n) {
    auto sieve = primes::build_sieve(1'000'000);
    auto rec = zsig::primitive_prime_divisors(a, n, sieve);
    if (rec.primitive.empty()) {
        if (rec.exception == zsig::ZsigException::none) {
            std::printf("none (no exception applies)\n");
            return kExitViolation;
        }
        std::printf("none (exception: %s)\n", exception_text(rec.exception));
        return kExitOk;
    }
    std::string line;
    for (const auto& p : rec.primitive) {
        if (!line.empty()) line += ' ';
        line += p.str();
    }
    std::printf("%s\n", line.c_str());
    if (!zsig::verify_primitive_residues(rec)) {
        std::printf("residue violation\n");
        return kExitViolation;
    }
    std::printf("residues ok\n");
    return kExitOk;
}

int run_zsig_sweep(uint64_t a_max, uint32_t n_max) {
    auto sieve = primes::build_sieve(1'000'000);
    auto report = zsig::sweep_primitive(a_max, n_max, sieve);
    std::printf("checked %llu pairs, %zu exceptions\n",
                static_cast<unsigned long long>(report.checked), report.exceptions.size());
    if (report.pass) return kExitOk;
    for (const auto& v : report.violations)
        std::printf("violation at a=%llu n=%u: %s\n", static_cast<unsigned long long>(v.a), v.n,
                    v.reason.c_str());
    return kExitViolation;
}

// ------------------------------------------------------------------ group

std::string label_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

ordered_json profile_to_json(const inv::GroupProfile& pr) {
    ordered_json j;
    j["label"] = pr.label;
    j["degree"] = pr.degree;
    j["order"] = pr.order;
    j["soluble"] = pr.soluble;
    j["nilpotent"] = pr.nilpotent;
    j["d"] = pr.d;
    j["m"] = pr.m;
    j["delta"] = pr.delta;
    ordered_json dp;
    for (const auto& [p, d] : pr.d_p) dp[std::to_string(p)] = d;
    j["d_p"] = dp;
    if (pr.alpha_p) {
        ordered_json ap;
        for (const auto& [p, a] : *pr.alpha_p) ap[std::to_string(p)] = a;
        j["alpha_p"] = ap;
    } else {
        j["alpha_p"] = nullptr;
    }
    j["m_le_delta"] = pr.m_le_delta;
    if (pr.m_eq_alpha_sum)
        j["m_eq_alpha_sum"] = *pr.m_eq_alpha_sum;
    else
        j["m_eq_alpha_sum"] = nullptr;
    return j;
}

int run_group_profile(const std::string& path, const inv::Budgets& budgets) {
    auto g = perm::load_group(path, budgets.closure);
    auto pr = inv::profile_group(g, label_from_path(path), budgets);
    std::printf("%s\n", profile_to_json(pr).dump(2).c_str());
    if (pr.soluble && (!pr.m_le_delta || (pr.m_eq_alpha_sum && !*pr.m_eq_alpha_sum)))
        return kExitViolation;
    if (!pr.m_le_delta) return kExitAnomaly;
    return kExitOk;
}

int run_group_m(const std::string& path, const inv::Budgets& budgets) {
    auto g = perm::load_group(path, budgets.closure);
    std::printf("%u\n", inv::max_independent_set(g, budgets).m);
    return kExitOk;
}

struct SweepOutcome {
    bool soluble_violation = false;
    bool anomaly = false;
};

int run_group_sweep(const std::string& dir, double sigma, double eta, const inv::Budgets& budgets,
                    std::optional<int64_t> time_budget_ms) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        std::fprintf(stderr, "group sweep: %s is not a directory\n", dir.c_str());
        return kExitInput;
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grp")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end(),
              [](const std::string& a, const std::string& b) {
                  return label_from_path(a) < label_from_path(b);
              });
    if (paths.empty()) {
        std::fprintf(stderr, "group sweep: no .grp files under %s\n", dir.c_str());
        return kExitInput;
    }

    const auto start = std::chrono::steady_clock::now();
    SweepOutcome outcome;
    double max_ratio1 = 0.0, max_ratio2 = 0.0, max_ratio_eta = 0.0;
    std::string arg1, arg2, arg_eta;

    std::printf(
        "label,degree,order,soluble,nilpotent,d,m,delta,m_le_delta,alpha_sum,m_eq_alpha_sum,"
        "alpha_series_agree,quotient_delta_ok,dichotomy_ok\n");
    for (const auto& path : paths) {
        if (time_budget_ms) {
            auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
            if (spent > *time_budget_ms) {
                std::fprintf(stderr, "time budget exhausted after %lld ms\n",
                             static_cast<long long>(spent));
                return kExitBudget;
            }
        }
        const std::string label = label_from_path(path);
        try {
            auto g = perm::load_group(path, budgets.closure);
            auto pr = inv::profile_group(g, label, budgets);

            bool series_agree = true;
            std::string alpha_sum_s, m_eq_s, agree_s;
            if (pr.alpha_p) {
                auto first = inv::chief_series_alpha(g, inv::SeriesVariant::first_minimal, budgets);
                auto last = inv::chief_series_alpha(g, inv::SeriesVariant::last_minimal, budgets);
                series_agree = (first.alpha == last.alpha);
                uint64_t asum = 0;
                for (const auto& [p, a] : *pr.alpha_p) asum += a;
                alpha_sum_s = std::to_string(asum);
                m_eq_s = *pr.m_eq_alpha_sum ? "1" : "0";
                agree_s = series_agree ? "1" : "0";
            }

            bool quotient_ok = true;
            for (const auto& c : inv::check_quotient_delta(g, budgets))
                quotient_ok = quotient_ok && c.holds;
            bool dichotomy_ok = true;
            for (const auto& c : inv::check_abelian_minimal_dichotomy(g, budgets))
                dichotomy_ok = dichotomy_ok && c.holds;

            std::printf("%s,%u,%llu,%d,%d,%u,%u,%llu,%d,%s,%s,%s,%d,%d\n", pr.label.c_str(),
                        pr.degree, static_cast<unsigned long long>(pr.order), pr.soluble,
                        pr.nilpotent, pr.d, pr.m, static_cast<unsigned long long>(pr.delta),
                        pr.m_le_delta, alpha_sum_s.c_str(), m_eq_s.c_str(), agree_s.c_str(),
                        quotient_ok, dichotomy_ok);

            if (pr.delta > 0) {
                double del = static_cast<double>(pr.delta);
                double r1 = pr.m / del;
                double r2 = pr.m / (del * del);
                double re = pr.m / std::pow(del, eta);
                if (r1 > max_ratio1) { max_ratio1 = r1; arg1 = pr.label; }
                if (r2 > max_ratio2) { max_ratio2 = r2; arg2 = pr.label; }
                if (re > max_ratio_eta) { max_ratio_eta = re; arg_eta = pr.label; }
            }
            if (pr.soluble) {
                if (!pr.m_le_delta || !*pr.m_eq_alpha_sum || !series_agree)
                    outcome.soluble_violation = true;
            } else if (!pr.m_le_delta) {
                outcome.anomaly = true;
            }
            if (!quotient_ok || !dichotomy_ok) outcome.soluble_violation = true;
        } catch (const parse_error& e) {
            std::fprintf(stderr, "skipped %s: %s\n", label.c_str(), e.what());
        } catch (const budget_error& e) {
            std::fprintf(stderr, "skipped %s: %s\n", label.c_str(), e.what());
        }
    }

    std::printf("max m/delta = %.6f (%s)\n", max_ratio1, arg1.c_str());
    std::printf("max m/delta^2 = %.6f (%s)\n", max_ratio2, arg2.c_str());
    std::printf("max m/delta^%g = %.6f (%s), sigma bound %.6f: %s\n", eta, max_ratio_eta,
                arg_eta.c_str(), sigma, max_ratio_eta <= sigma ? "holds" : "exceeded");

    if (outcome.soluble_violation) return kExitViolation;
    if (outcome.anomaly) return kExitAnomaly;
    return kExitOk;
}

// ----------------------------------------------------------------- wreath

struct MatrixFactor {
    std::string label;
    uint32_t prime; // 0 = trivial, matches every prime
    perm::PermGroup group;
};

int run_wreath_verify(const inv::Budgets& budgets) {
    std::vector<MatrixFactor> qs;
    qs.push_back({"C2", 2, from_cycles(2, {"(1 2)"})});
    qs.push_back({"C3", 3, from_cycles(3, {"(1 2 3)"})});
    qs.push_back({"C4", 2, from_cycles(4, {"(1 2 3 4)"})});
    qs.push_back({"C2xC2", 2, from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"})});
    qs.push_back({"D8", 2, from_cycles(4, {"(1 2 3 4)", "(1 3)"})});
    qs.push_back({"C9", 3, from_cycles(9, {"(1 2 3 4 5 6 7 8 9)"})});

    auto tops_for = [](uint32_t p) {
        std::vector<MatrixFactor> out;
        out.push_back({"trivial2", 0, perm::PermGroup::closure(2, {}, {})});
        if (p == 2) {
            out.push_back({"C2", 2, from_cycles(2, {"(1 2)"})});
            out.push_back({"C2+fix", 2, from_cycles(3, {"(1 2)"})});
        } else {
            out.push_back({"C3", 3, from_cycles(3, {"(1 2 3)"})});
            out.push_back({"C3+fix", 3, from_cycles(4, {"(1 2 3)"})});
        }
        return out;
    };

    bool all_ok = true;
    for (const auto& q : qs) {
        for (const auto& p : tops_for(q.prime)) {
            auto rec = wreath::verify_wreath_rank(q.group, p.group, budgets);
            std::printf("Q=%s P=%s order=%llu d(P)=%u orbits=%u d(Q)=%u expected=%u actual=%u %s\n",
                        q.label.c_str(), p.label.c_str(),
                        static_cast<unsigned long long>(rec.order), rec.d_top, rec.orbits_top,
                        rec.d_base, rec.expected, rec.actual, rec.match ? "ok" : "MISMATCH");
            all_ok = all_ok && rec.match;
        }
    }
    return all_ok ? kExitOk : kExitViolation;
}

int run_wreath_sylow_sum(const inv::Budgets& budgets) {
    auto sieve = primes::build_sieve(1000);
    auto a5 = from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"});
    auto datum = zsig::pi_star("A5", zsig::BigInt(60), 2, sieve);
    std::vector<uint32_t> pis;
    for (const auto& p : datum.pi_star) pis.push_back(p.convert_to<uint32_t>());

    struct Case {
        std::string label;
        perm::PermGroup k;
    };
    std::vector<Case> cases;
    cases.push_back({"Sym(2)", from_cycles(2, {"(1 2)"})});
    cases.push_back({"C3", from_cycles(3, {"(1 2 3)"})});
    cases.push_back({"Sym(3)", from_cycles(3, {"(1 2)", "(1 2 3)"})});
    cases.push_back({"C2xC2", from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"})});

    bool all_ok = true;
    for (const auto& c : cases) {
        auto rep = wreath::sylow_sum_check(a5, pis, c.k, budgets);
        std::printf("S=A5 K=%s:", c.label.c_str());
        bool cross_ok = true;
        for (const auto& term : rep.terms) {
            std::printf(" d_%u=%u", term.p, term.d_p);
            if (term.cross_check) {
                std::printf(" (brute %u)", *term.cross_check);
                cross_ok = cross_ok && (*term.cross_check == term.d_p);
            }
        }
        std::printf(" sum=%llu t=%u %s\n", static_cast<unsigned long long>(rep.sum), rep.t,
                    rep.strict && cross_ok ? "ok" : "VIOLATION");
        all_ok = all_ok && rep.strict && cross_ok;
    }
    return all_ok ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generating-set invariants workbench"};
    app.require_subcommand(1);

    inv::Budgets budgets;
    std::optional<int64_t> time_budget_ms;
    app.add_option("--max-order", budgets.table.max_order,
                   "largest group order for multiplication-table searches")
        ->capture_default_str();
    app.add_option("--max-elements", budgets.closure.max_elements,
                   "largest element count for permutation closures")
        ->capture_default_str();
    app.add_option("--max-subgroups", budgets.lattice.max_subgroups,
                   "largest subgroup count for lattice enumeration")
        ->capture_default_str();
    app.add_option("--time-budget-ms", time_budget_ms,
                   "wall-clock budget for catalog sweeps, checked between entries");

    // sym
    auto* sym = app.add_subcommand("sym", "symmetric group Sylow-rank sums");
    sym->require_subcommand(1);
    uint64_t sym_from = 1, sym_to = 1, sym_max = 50;
    auto* sym_delta = sym->add_subcommand("delta", "CSV of delta(Sym(n)) over a range");
    sym_delta->add_option("--from", sym_from, "first n")->required();
    sym_delta->add_option("--to", sym_to, "last n")->required();
    auto* sym_classify = sym->add_subcommand("classify", "offset classification lists");
    sym_classify->add_option("--max", sym_max, "largest n")->required();
    uint64_t stop_max = 1000;
    auto* sym_stop = sym->add_subcommand("verify-stop", "asymptotic envelope sweep");
    sym_stop->add_option("--max", stop_max, "largest n")->required();

    // primes
    auto* pr = app.add_subcommand("primes", "explicit prime bounds");
    pr->require_subcommand(1);
    uint64_t rs_max = 1000, pk_max = 100, stup_max = 1000;
    double stup_eta = 2.0;
    pr->add_subcommand("rs", "prime counting inequalities")
        ->add_option("--max", rs_max, "largest x")
        ->required();
    pr->add_subcommand("pk", "k-th prime inequalities")
        ->add_option("--max", pk_max, "largest k")
        ->required();
    auto* stup = pr->add_subcommand("stup", "empirical constant max n/pi(n)^eta");
    stup->add_option("--eta", stup_eta, "exponent")->required();
    stup->add_option("--max", stup_max, "largest n")->required();

    // zsigmondy
    auto* zs = app.add_subcommand("zsigmondy", "primitive prime divisors of a^n - 1");
    uint64_t zs_a = 0;
    uint32_t zs_n = 0;
    std::vector<uint64_t> zs_sweep;
    zs->add_option("a", zs_a, "base");
    zs->add_option("n", zs_n, "exponent");
    zs->add_option("--sweep", zs_sweep, "check all 2<=a<=AMAX, 2<=n<=NMAX")->expected(2);

    // group
    auto* gr = app.add_subcommand("group", "invariants of catalog groups");
    gr->require_subcommand(1);
    std::string profile_path, m_path, sweep_dir;
    double sweep_sigma = 1.0, sweep_eta = 1.0;
    gr->add_subcommand("profile", "full invariant profile as JSON")
        ->add_option("file", profile_path, "group file")
        ->required();
    gr->add_subcommand("m", "largest independent generating set size")
        ->add_option("file", m_path, "group file")
        ->required();
    auto* sweep = gr->add_subcommand("sweep", "identity checks over a catalog directory");
    sweep->add_option("dir", sweep_dir, "directory of .grp files")->required();
    sweep->add_option("--sigma", sweep_sigma, "conjectured constant")->capture_default_str();
    sweep->add_option("--eta", sweep_eta, "conjectured exponent")->capture_default_str();

    // wreath
    auto* wr = app.add_subcommand("wreath", "wreath product rank checks");
    wr->require_subcommand(1);
    wr->add_subcommand("verify", "rank formula over the built-in factor matrix");
    wr->add_subcommand("sylow-sum", "Sylow rank sum vs t_omega for A5 wreath cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sym_delta->parsed()) return run_sym_delta(sym_from, sym_to);
        if (sym_classify->parsed()) return run_sym_classify(sym_max);
        if (sym_stop->parsed()) return run_sym_verify_stop(stop_max);
        if (pr->got_subcommand("rs")) return run_primes_rs(rs_max);
        if (pr->got_subcommand("pk")) return run_primes_pk(pk_max);
        if (stup->parsed()) return run_primes_stup(stup_eta, stup_max);
        if (zs->parsed()) {
            if (!zs_sweep.empty())
                return run_zsig_sweep(zs_sweep[0], static_cast<uint32_t>(zs_sweep[1]));
            if (zs_a < 2 || zs_n < 1) {
                std::fprintf(stderr, "zsigmondy: need a >= 2 and n >= 1, or --sweep\n");
                return kExitInput;
            }
            return run_zsig_single(zs_a, zs_n);
        }
        if (gr->got_subcommand("profile")) return run_group_profile(profile_path, budgets);
        if (gr->got_subcommand("m")) return run_group_m(m_path, budgets);
        if (sweep->parsed())
            return run_group_sweep(sweep_dir, sweep_sigma, sweep_eta, budgets, time_budget_ms);
        if (wr->got_subcommand("verify")) return run_wreath_verify(budgets);
        if (wr->got_subcommand("sylow-sum")) return run_wreath_sylow_sum(budgets);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const budget_error& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    }
    std::fprintf(stderr, "no subcommand handled\n");
    return kExitInput;
}
