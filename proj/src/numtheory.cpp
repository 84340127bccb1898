#include "kcr/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kcr::numtheory {

void GcdAccumulator::add(std::int64_t v) { g_ = std::gcd(g_, v < 0 ? -v : v); }

namespace {

void check_entries(std::span<const std::int64_t> ns) {
    if (ns.size() < 2) throw std::invalid_argument("lemma checks need at least two entries");
    for (auto n : ns)
        if (n < 2 || n > kMaxEntry)
            throw std::invalid_argument("lemma entry " + std::to_string(n) + " outside [2, " +
                                        std::to_string(kMaxEntry) + "]");
}

}  // namespace

EqualGcds lemma_equal_gcds(std::span<const std::int64_t> ns) {
    check_entries(ns);
    GcdAccumulator a1, a2, a3;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const std::int64_t sq = 1 - 4 * ns[i] * ns[i];
        a1.add(sq);
        a2.add(sq);
        a3.add(sq);
        for (std::size_t j = 0; j < ns.size(); ++j) {
            if (i == j) continue;
            const std::int64_t mixed = 1 - 4 * ns[i] * ns[j];
            const std::int64_t diff = 2 * ns[i] - 2 * ns[j];
            a1.add(mixed);
            a2.add(diff);
            a3.add(mixed);
            a3.add(diff);
        }
    }
    return {a1.value(), a2.value(), a3.value()};
}

HkSplit lemma_hk_coprime(std::span<const std::int64_t> ns) {
    check_entries(ns);
    GcdAccumulator g, h, k;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        h.add(1 - 2 * ns[i]);
        k.add(1 + 2 * ns[i]);
        for (std::size_t j = 0; j < ns.size(); ++j) g.add(1 - 4 * ns[i] * ns[j]);
    }
    HkSplit out{g.value(), h.value(), k.value(), false, false};
    out.coprime = std::gcd(out.h, out.k) == 1;
    out.product = out.g == out.h * out.k;
    return out;
}

}  // namespace kcr::numtheory
