#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kcr/kgraph.hpp"

// Batch kernels over independent instances. Each has an OpenMP version and
// a serial reference with identical, deterministically ordered output.
namespace kcr::sweep {

enum class Verdict { Match, Mismatch, Unknown, Error };

std::string to_string(Verdict v);

struct InstanceVerdict {
    GraphSpec spec;
    Verdict verdict = Verdict::Error;
    std::string detail;

    friend bool operator==(const InstanceVerdict&, const InstanceVerdict&) = default;
};

// Spectral pipeline against the closed form for one spec.
InstanceVerdict verify_instance(const GraphSpec& spec);

std::vector<InstanceVerdict> verify_instances_serial(std::span<const GraphSpec> specs);
std::vector<InstanceVerdict> verify_instances(std::span<const GraphSpec> specs, int jobs);

// Every spec of the given rank with `off_diagonal` off-diagonal colors
// (placed first) and all sizes in [lo, hi], sorted by size tuple.
std::vector<GraphSpec> family_grid(int rank, int off_diagonal, Involution inv, long lo, long hi);

struct LemmaReport {
    int arity = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint64_t tuples = 0;
    std::uint64_t equal_gcd_failures = 0;
    std::uint64_t hk_failures = 0;
    std::vector<std::vector<std::int64_t>> counterexamples;  // lowest few, in order

    bool holds() const { return equal_gcd_failures == 0 && hk_failures == 0; }
    friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

// Exhaustive check of the equal-gcd and h/k-coprimality lemmas over all
// ordered tuples in [lo, hi]^arity.
LemmaReport verify_lemmas_serial(int arity, std::int64_t lo, std::int64_t hi);
LemmaReport verify_lemmas(int arity, std::int64_t lo, std::int64_t hi, int jobs);

}  // namespace kcr::sweep
