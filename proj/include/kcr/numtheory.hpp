#pragma once

#include <cstdint>
#include <span>

namespace kcr::numtheory {

// Nonnegative gcd of a value set; gcd(a, 0) = |a|, gcd of nothing is 0.
class GcdAccumulator {
public:
    void add(std::int64_t v);
    std::int64_t value() const { return g_; }

private:
    std::int64_t g_ = 0;
};

struct EqualGcds {
    std::int64_t g1 = 0;  // gcd{1 - 4 n_i^2, 1 - 4 n_i n_j}
    std::int64_t g2 = 0;  // gcd{1 - 4 n_i^2, 2 n_i - 2 n_j}
    std::int64_t g3 = 0;  // gcd of the union
    bool equal() const { return g1 == g2 && g2 == g3; }
};

struct HkSplit {
    std::int64_t g = 0;  // gcd{1 - 4 n_i^2, 1 - 4 n_i n_j}
    std::int64_t h = 0;  // gcd{1 - 2 n_i}
    std::int64_t k = 0;  // gcd{1 + 2 n_i}
    bool coprime = false;  // gcd(h, k) == 1
    bool product = false;  // g == h k
    bool holds() const { return coprime && product; }
};

// Largest admissible entry; keeps 4 n_i n_j inside int64.
inline constexpr std::int64_t kMaxEntry = 1'000'000'000;

// Both throw std::invalid_argument for fewer than two entries or entries
// outside [2, kMaxEntry].
EqualGcds lemma_equal_gcds(std::span<const std::int64_t> ns);
HkSplit lemma_hk_coprime(std::span<const std::int64_t> ns);

}  // namespace kcr::numtheory
