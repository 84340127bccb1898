// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "kcr/families.hpp"
#include "kcr/homology.hpp"
#include "kcr/spectral.hpp"
#include "kcr/sweep.hpp"
#include "support.hpp"

using namespace kcr;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

struct Invariants {
    long g, h, k;
};

Invariants gcds(const GraphSpec& s) {
    long g = 0, h = 0, k = 0;
    for (std::size_t i = 0; i < s.colors.size(); ++i) {
        const auto& c = s.colors[i];
        if (c.kind == ColorKind::Diagonal) {
            const long t = std::labs(1 - 2 * c.size);
            g = std::gcd(g, t);
            h = std::gcd(h, t);
            k = std::gcd(k, t);
            continue;
        }
        h = std::gcd(h, std::labs(1 - 2 * c.size));
        k = std::gcd(k, 1 + 2 * c.size);
        for (std::size_t j = i; j < s.colors.size(); ++j)
            if (s.colors[j].kind == ColorKind::OffDiagonal) g = std::gcd(g, std::labs(1 - 4 * c.size * s.colors[j].size));
    }
    return {g, h, k};
}

// KO_0..KO_7 multiplicities of Z_h (or Z_g) and Z_k, and the KU power of Z_g.
struct Pattern {
    int ko_first[8];
    int ko_second[8];
    int ku;
};

// rank 3, trivial: Z_g, Z_g^2, Z_g, 0 (twice); KU_n = Z_g^2
constexpr Pattern kRank3Trivial{{1, 2, 1, 0, 1, 2, 1, 0}, {}, 2};
// rank 3, swap: Z_h+Z_k, Z_h^2, Z_h+Z_k, Z_k^2 (twice); KU_n = Z_g^2
constexpr Pattern kRank3Swap{{1, 2, 1, 0, 1, 2, 1, 0}, {1, 0, 1, 2, 1, 0, 1, 2}, 2};
// rank 4, trivial: Z_g, Z_g^3, Z_g^3, Z_g (twice); KU_n = Z_g^4
constexpr Pattern kRank4Trivial{{1, 3, 3, 1, 1, 3, 3, 1}, {}, 4};
// rank 4, swap: Z_h+Z_k^3, Z_h^3+Z_k, Z_h^3+Z_k, Z_h+Z_k^3 (twice); KU_n = Z_g^4
constexpr Pattern kRank4Swap{{1, 3, 3, 1, 1, 3, 3, 1}, {3, 1, 1, 3, 3, 1, 1, 3}, 4};

bool matches_pattern(const KTheoryTable& t, const GraphSpec& s, const Pattern& pat) {
    const auto inv = gcds(s);
    const bool swap = s.involution == Involution::Swap;
    for (int n = 0; n < 8; ++n) {
        const FinAbGroup want_ko =
            swap ? direct_sum(FinAbGroup::power(inv.h, pat.ko_first[n]), FinAbGroup::power(inv.k, pat.ko_second[n]))
                 : FinAbGroup::power(inv.g, pat.ko_first[n]);
        if (!t.ko[n].resolved() || *t.ko[n].group != want_ko) return false;
        if (!t.ku[n].resolved() || *t.ku[n].group != FinAbGroup::power(inv.g, pat.ku)) return false;
    }
    return true;
}

std::vector<GraphSpec> case_grid(int rank, Involution inv, long lo, long hi) {
    std::vector<GraphSpec> out;
    for (int t = 1; t <= rank; ++t) {
        const auto g = sweep::family_grid(rank, t, inv, lo, hi);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& check) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%s; %.2fs)\n", number, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome reproduce(const std::vector<GraphSpec>& specs, const Pattern& pat, double limit_secs) {
    const auto start = Clock::now();
    std::size_t ok = 0;
    std::string first_bad;
    for (const auto& s : specs) {
        const auto res = compute_k_theory(s);
        if (res.table && matches_pattern(*res.table, s, pat)) ++ok;
        else if (first_bad.empty()) first_bad = s.to_string();
    }
    const double secs = seconds_since(start);
    std::string detail = std::to_string(ok) + "/" + std::to_string(specs.size()) + " instances match";
    if (!first_bad.empty()) detail += ", first mismatch " + first_bad;
    if (limit_secs > 0 && secs >= limit_secs) detail += ", over the time limit";
    return {ok == specs.size() && (limit_secs <= 0 || secs < limit_secs), detail};
}

bool shadow_at_column_three(const Convergence& conv) {
    for (const auto& c : conv.certificates)
        if (c.part == Part::Complex && c.r == 3 && c.p == 3 && c.kind == DifferentialCertificate::RealShadowC)
            return true;
    return false;
}

bool is_zero_table(const KTheoryTable& t) {
    for (int n = 0; n < 8; ++n)
        if (!t.ko[n].resolved() || !t.ko[n].group->is_zero() || !t.ku[n].resolved() || !t.ku[n].group->is_zero())
            return false;
    return true;
}

}  // namespace

int main() {
    report(1, "rank-3 trivial involution tables", [] {
        return reproduce(case_grid(3, Involution::Trivial, 2, 6), kRank3Trivial, 30.0);
    });

    report(2, "rank-3 swap involution tables", [] {
        return reproduce(case_grid(3, Involution::Swap, 2, 6), kRank3Swap, 0);
    });

    report(3, "rank-4 tables with the shadow certificate", [] {
        std::size_t total = 0, ok = 0, shadow_needed = 0, shadow_seen = 0;
        std::string first_bad;
        for (auto inv : {Involution::Trivial, Involution::Swap}) {
            const Pattern& pat = inv == Involution::Trivial ? kRank4Trivial : kRank4Swap;
            for (const auto& s : case_grid(4, inv, 2, 4)) {
                ++total;
                const auto res = compute_k_theory(s);
                const bool table_ok = res.table && matches_pattern(*res.table, s, pat);
                bool shadow_ok = true;
                if (gcds(s).g >= 3) {
                    ++shadow_needed;
                    shadow_ok = shadow_at_column_three(res.convergence);
                    shadow_seen += shadow_ok;
                }
                if (table_ok && shadow_ok) ++ok;
                else if (first_bad.empty()) first_bad = s.to_string();
            }
        }
        std::string detail = std::to_string(ok) + "/" + std::to_string(total) + " instances match, RealShadowC in " +
                             std::to_string(shadow_seen) + "/" + std::to_string(shadow_needed) + " with g >= 3";
        if (!first_bad.empty()) detail += ", first failure " + first_bad;
        return Outcome{ok == total, detail};
    });

    report(4, "SNF shapes of the rank-3 boundary maps", [] {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<long> size(2, 60);
        std::size_t ok = 0, total = 0;
        for (int t = 1; t <= 3; ++t)
            for (int i = 0; i < 100; ++i) {
                std::string kinds = std::string(t, 'T') + std::string(3 - t, 'D');
                const auto s = spec(kinds, {size(rng), size(rng), size(rng)});
                const Integer g = gcds(s).g;
                const auto c = koszul_complex(adjacency_matrices(s), CoefficientRow::Integer);
                const bool d1 = snf(c.differential(1)).diagonal == std::vector<Integer>{1, g};
                const bool d2 = snf(c.differential(2)).diagonal == std::vector<Integer>{1, 1, g, g, 0, 0};
                ++total;
                ok += d1 && d2;
            }
        return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) + " sampled specs"};
    });

    report(5, "SNF against determinantal divisors", [] {
        std::mt19937 rng(5);
        std::uniform_int_distribution<std::size_t> rows(1, 5), cols(1, 7);
        std::size_t ok = 0;
        for (int t = 0; t < 1000; ++t) {
            const IntMatrix a = random_matrix(rng, rows(rng), cols(rng), -9, 9);
            const auto s = snf(a);
            bool good = true;
            for (std::size_t i = 1; i <= s.diagonal.size(); ++i)
                good = good && s.leading_product(i) == determinantal_divisor(a, i);
            ok += good;
        }
        return Outcome{ok == 1000, std::to_string(ok) + "/1000 random matrices"};
    });

    report(6, "boundary squares to zero", [] {
        std::mt19937 rng(6);
        std::uniform_int_distribution<long> size(2, 1000);
        std::bernoulli_distribution coin(0.5);
        std::size_t ok = 0, total = 0;
        for (int k = 1; k <= 6; ++k)
            for (int t = 0; t < 40; ++t) {
                std::string kinds;
                std::vector<long> sizes;
                for (int i = 0; i < k; ++i) {
                    kinds += coin(rng) ? 'T' : 'D';
                    sizes.push_back(size(rng));
                }
                const auto ms = adjacency_matrices(spec(kinds, sizes));
                for (auto row : {CoefficientRow::Integer, CoefficientRow::Mod2, CoefficientRow::ScalarSum,
                                 CoefficientRow::ScalarDiff}) {
                    ++total;
                    ok += squares_to_zero(koszul_complex(ms, row));
                }
            }
        return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) + " complexes, k = 1..6"};
    });

    report(7, "gcd lemmas by exhaustion", [] {
        const auto start = Clock::now();
        const auto pairs = sweep::verify_lemmas(2, 2, 40, 0);
        const auto triples = sweep::verify_lemmas(3, 2, 20, 0);
        const auto quads = sweep::verify_lemmas(4, 2, 20, 0);
        const double secs = seconds_since(start);
        const bool ok = pairs.holds() && triples.holds() && quads.holds() && secs < 60.0;
        return Outcome{ok, std::to_string(pairs.tuples) + " pairs, " + std::to_string(triples.tuples) + " triples, " +
                               std::to_string(quads.tuples) + " quadruples" + (secs < 60.0 ? "" : ", over the time limit")};
    });

    report(8, "degenerate g = 1 instances and mod-2 rows", [] {
        std::size_t g1 = 0, g1_ok = 0, mod2 = 0, mod2_ok = 0;
        std::vector<GraphSpec> specs = case_grid(3, Involution::Trivial, 2, 6);
        const auto r3s = case_grid(3, Involution::Swap, 2, 6);
        const auto r4t = case_grid(4, Involution::Trivial, 2, 4);
        const auto r4s = case_grid(4, Involution::Swap, 2, 4);
        for (const auto* v : {&r3s, &r4t, &r4s}) specs.insert(specs.end(), v->begin(), v->end());
        for (const auto& s : specs) {
            if (gcds(s).g == 1) {
                ++g1;
                const auto res = compute_k_theory(s);
                g1_ok += res.table && is_zero_table(*res.table) && is_zero_table(expected_table(s));
            }
            if (s.involution == Involution::Trivial) {
                ++mod2;
                bool zero = true;
                for (const auto& h : homology_all(koszul_complex(adjacency_matrices(s), CoefficientRow::Mod2)))
                    zero = zero && h.is_zero();
                mod2_ok += zero;
            }
        }
        return Outcome{g1 > 0 && g1_ok == g1 && mod2_ok == mod2,
                       std::to_string(g1_ok) + "/" + std::to_string(g1) + " g = 1 instances zero by both paths, " +
                           std::to_string(mod2_ok) + "/" + std::to_string(mod2) + " mod-2 complexes exact"};
    });

    // The congruence statements are checked as written (modulo gcd(m2, m3))
    // and then, for information, modulo gcd(1 - 2 m2, 1 - 2 m3).
    auto iso_check = [](bool corrected) {
        std::size_t same_total = 0, same_ok = 0, neg_total = 0, neg_ok = 0;
        std::string first_bad;
        for (long m2 = 2; m2 <= 8; ++m2)
            for (long m3 = m2; m3 <= 8; ++m3) {
                const long mod = corrected ? std::gcd(2 * m2 - 1, 2 * m3 - 1) : std::gcd(m2, m3);
                for (long n = 2; n <= 12; ++n)
                    for (long n2 = n + 1; n2 <= 24; ++n2) {
                        const auto a = spec("TDD", {n, m2, m3}, Involution::Swap);
                        const auto b = spec("TDD", {n2, m2, m3}, Involution::Swap);
                        if ((n2 - n) % mod == 0) {
                            ++same_total;
                            const bool ok = iso_equal(iso_class(a), iso_class(b)) == IsoVerdict::Equal;
                            same_ok += ok;
                            if (!ok && first_bad.empty()) first_bad = a.to_string() + " vs " + b.to_string();
                        }
                        const auto la = iso_class(a);
                        if ((n + n2) % mod == 0 && la.values[0] != la.values[1]) {
                            ++neg_total;
                            const bool ok = iso_equal(la, iso_class(b)) == IsoVerdict::Different &&
                                            closed_form(a).g == closed_form(b).g;
                            neg_ok += ok;
                            if (!ok && first_bad.empty()) first_bad = a.to_string() + " vs " + b.to_string();
                        }
                    }
            }
        std::string detail = "congruent pairs " + std::to_string(same_ok) + "/" + std::to_string(same_total) +
                             ", negated pairs " + std::to_string(neg_ok) + "/" + std::to_string(neg_total);
        if (!first_bad.empty()) detail += ", first counterexample " + first_bad;
        return Outcome{same_total + neg_total >= 20 && same_ok == same_total && neg_ok == neg_total, detail};
    };
    report(9, "isomorphism-class congruences modulo gcd(m2, m3)", [&] { return iso_check(false); });
    {
        const auto info = iso_check(true);
        std::printf("   (info) same congruences modulo gcd(1 - 2 m2, 1 - 2 m3): %s, %s\n",
                    info.pass ? "hold" : "fail", info.detail.c_str());
    }

    report(10, "exhaustive cross-check of every color arrangement", [] {
        std::vector<GraphSpec> specs;
        for (int rank : {3, 4})
            for (int mask = 1; mask < (1 << rank); ++mask)
                for (auto inv : {Involution::Trivial, Involution::Swap}) {
                    const long hi = rank == 3 ? 5 : 4;
                    std::string kinds;
                    for (int i = 0; i < rank; ++i) kinds += (mask >> i) & 1 ? 'T' : 'D';
                    std::vector<long> sizes(static_cast<std::size_t>(rank), 2);
                    for (;;) {
                        specs.push_back(spec(kinds, sizes, inv));
                        int i = rank - 1;
                        while (i >= 0 && sizes[static_cast<std::size_t>(i)] == hi) sizes[static_cast<std::size_t>(i--)] = 2;
                        if (i < 0) break;
                        ++sizes[static_cast<std::size_t>(i)];
                    }
                }
        const auto par = sweep::verify_instances(specs, 0);
        const auto ser = sweep::verify_instances_serial(specs);
        std::size_t match = 0, closed_ok = 0;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            match += par[i].verdict == sweep::Verdict::Match;
            const auto inv = closed_form(specs[i]);
            closed_ok += inv.g == inv.h * inv.k && gcd(inv.h, inv.k) == 1 && inv.g == gcds(specs[i]).g;
        }
        return Outcome{match == specs.size() && closed_ok == specs.size() && par == ser,
                       std::to_string(match) + "/" + std::to_string(specs.size()) + " match, parallel " +
                           (par == ser ? "equals" : "differs from") + " serial"};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
