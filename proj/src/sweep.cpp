#include "kcr/sweep.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "kcr/families.hpp"
#include "kcr/numtheory.hpp"
#include "kcr/spectral.hpp"

namespace kcr::sweep {

namespace {

constexpr std::size_t kMaxCounterexamples = 16;

std::vector<std::int64_t> decode(std::uint64_t index, int arity, std::int64_t lo, std::uint64_t base) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = lo + static_cast<std::int64_t>(index % base);
        index /= base;
    }
    return t;
}

std::uint64_t tuple_count(int arity, std::int64_t lo, std::int64_t hi) {
    if (arity < 2) throw std::invalid_argument("verify_lemmas: arity must be at least 2");
    if (lo < 2 || hi > numtheory::kMaxEntry || lo > hi)
        throw std::invalid_argument("verify_lemmas: range must satisfy 2 <= lo <= hi <= 1e9");
    const auto base = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < arity; ++i) {
        if (total > (std::uint64_t{1} << 40) / base) throw std::invalid_argument("verify_lemmas: grid too large");
        total *= base;
    }
    return total;
}

// Failure bits: 1 for the equal-gcd lemma, 2 for the h/k split.
int check_tuple(const std::vector<std::int64_t>& t) {
    int bits = 0;
    if (!numtheory::lemma_equal_gcds(t).equal()) bits |= 1;
    if (!numtheory::lemma_hk_coprime(t).holds()) bits |= 2;
    return bits;
}

void record(LemmaReport& rep, std::uint64_t index, int bits, std::vector<std::uint64_t>& bad) {
    if (bits & 1) ++rep.equal_gcd_failures;
    if (bits & 2) ++rep.hk_failures;
    if (bits && bad.size() < kMaxCounterexamples) bad.push_back(index);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::Unknown: return "unknown";
        case Verdict::Error: return "error";
    }
    return "error";
}

InstanceVerdict verify_instance(const GraphSpec& spec) {
    InstanceVerdict out{spec, Verdict::Error, {}};
    try {
        const PipelineResult res = compute_k_theory(spec);
        if (!res.table) {
            out.verdict = Verdict::Unknown;
            const auto u = res.convergence.unknowns();
            out.detail = u.empty() ? "not converged" : u.front().to_string();
            return out;
        }
        const KTheoryTable want = expected_table(spec);
        if (same_groups(*res.table, want)) {
            out.verdict = Verdict::Match;
            return out;
        }
        out.verdict = Verdict::Mismatch;
        for (int n = 0; n < 8; ++n) {
            if (!(res.table->ko[n] == want.ko[n])) {
                out.detail = "KO_" + std::to_string(n) + ": " + res.table->ko[n].to_string() + " vs " +
                             want.ko[n].to_string();
                break;
            }
            if (!(res.table->ku[n] == want.ku[n])) {
                out.detail = "KU_" + std::to_string(n) + ": " + res.table->ku[n].to_string() + " vs " +
                             want.ku[n].to_string();
                break;
            }
        }
    } catch (const std::exception& e) {
        out.verdict = Verdict::Error;
        out.detail = e.what();
    }
    return out;
}

std::vector<InstanceVerdict> verify_instances_serial(std::span<const GraphSpec> specs) {
    std::vector<InstanceVerdict> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(verify_instance(s));
    return out;
}

std::vector<InstanceVerdict> verify_instances(std::span<const GraphSpec> specs, int jobs) {
    std::vector<InstanceVerdict> out(specs.size());
    const auto n = static_cast<std::int64_t>(specs.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = verify_instance(specs[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<GraphSpec> family_grid(int rank, int off_diagonal, Involution inv, long lo, long hi) {
    if (rank < 1 || off_diagonal < 0 || off_diagonal > rank || lo > hi)
        throw std::invalid_argument("family_grid: bad parameters");
    std::vector<GraphSpec> out;
    std::vector<long> sizes(static_cast<std::size_t>(rank), lo);
    for (;;) {
        GraphSpec s;
        s.involution = inv;
        for (int i = 0; i < rank; ++i)
            s.colors.push_back({i < off_diagonal ? ColorKind::OffDiagonal : ColorKind::Diagonal,
                                sizes[static_cast<std::size_t>(i)]});
        out.push_back(std::move(s));
        int i = rank - 1;
        while (i >= 0 && sizes[static_cast<std::size_t>(i)] == hi) sizes[static_cast<std::size_t>(i--)] = lo;
        if (i < 0) break;
        ++sizes[static_cast<std::size_t>(i)];
    }
    return out;
}

LemmaReport verify_lemmas_serial(int arity, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t total = tuple_count(arity, lo, hi);
    const auto base = static_cast<std::uint64_t>(hi - lo + 1);
    LemmaReport rep{arity, lo, hi, total, 0, 0, {}};
    std::vector<std::uint64_t> bad;
    for (std::uint64_t i = 0; i < total; ++i) record(rep, i, check_tuple(decode(i, arity, lo, base)), bad);
    for (auto i : bad) rep.counterexamples.push_back(decode(i, arity, lo, base));
    return rep;
}

LemmaReport verify_lemmas(int arity, std::int64_t lo, std::int64_t hi, int jobs) {
    const std::uint64_t total = tuple_count(arity, lo, hi);
    const auto base = static_cast<std::uint64_t>(hi - lo + 1);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    LemmaReport rep{arity, lo, hi, total, 0, 0, {}};
    std::vector<std::uint64_t> bad;
    std::uint64_t eq_fail = 0, hk_fail = 0;
#pragma omp parallel num_threads(threads)
    {
        LemmaReport local;
        std::vector<std::uint64_t> local_bad;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i)
            record(local, static_cast<std::uint64_t>(i),
                   check_tuple(decode(static_cast<std::uint64_t>(i), arity, lo, base)), local_bad);
#pragma omp critical
        {
            eq_fail += local.equal_gcd_failures;
            hk_fail += local.hk_failures;
            bad.insert(bad.end(), local_bad.begin(), local_bad.end());
        }
    }
    // Each thread keeps its own lowest indices, so the global lowest ones
    // are all present after merging.
    std::sort(bad.begin(), bad.end());
    if (bad.size() > kMaxCounterexamples) bad.resize(kMaxCounterexamples);
    rep.equal_gcd_failures = eq_fail;
    rep.hk_failures = hk_fail;
    for (auto i : bad) rep.counterexamples.push_back(decode(i, arity, lo, base));
    return rep;
}

}  // namespace kcr::sweep
