#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kcr/intmat.hpp"

namespace kcr {

// Finitely generated abelian group Z^free_rank + Z_{t_1} + ... + Z_{t_m},
// kept in invariant-factor form: every t_i >= 2 and t_i | t_{i+1}.
class FinAbGroup {
public:
    FinAbGroup() = default;

    // Canonicalizes an arbitrary list of cyclic orders. Entries equal to 1
    // (or -1) vanish, 0 contributes a free summand, signs are dropped.
    static FinAbGroup from_cyclic(std::size_t free_rank, std::vector<Integer> orders);
    static FinAbGroup cyclic(const Integer& n) { return from_cyclic(0, {n}); }
    static FinAbGroup free(std::size_t rank) { return from_cyclic(rank, {}); }
    // Z_n^copies
    static FinAbGroup power(const Integer& n, std::size_t copies);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    // Group order; nullopt for infinite groups.
    std::optional<Integer> order() const;
    // Smallest positive integer annihilating the torsion part (1 if none).
    Integer exponent() const;
    // |{x : m x = 0}| for finite groups; counts torsion only.
    Integer count_killed_by(const Integer& m) const;

    // "0", "Z", "Z_3", "Z_3^2 + Z_15 + Z^2"
    std::string to_string() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
inline bool equal_groups(const FinAbGroup& a, const FinAbGroup& b) { return a == b; }

// Cokernel of a map into Z^target_dim whose SNF diagonal is `d`. Throws
// std::invalid_argument when d has more nonzero entries than target_dim.
FinAbGroup group_from_cokernel(const std::vector<Integer>& d, std::size_t target_dim);

enum class ExtensionCertificate { CoprimeOrders, TrivialSide, CMapSplitting, Unresolved };

std::string to_string(ExtensionCertificate c);
std::optional<ExtensionCertificate> extension_certificate_from_string(const std::string& s);

// Certificates the caller can vouch for beyond what the groups themselves
// imply. Only the complexification splitting is external knowledge.
struct ExtensionEvidence {
    bool cmap_splitting = false;
};

// Middle term of 0 -> sub -> ? -> quotient -> 0 when it is determined.
struct ExtensionOutcome {
    bool resolved = false;
    std::optional<FinAbGroup> group;
    FinAbGroup sub;
    FinAbGroup quotient;
    ExtensionCertificate certificate = ExtensionCertificate::Unresolved;

    friend bool operator==(const ExtensionOutcome&, const ExtensionOutcome&) = default;
};

ExtensionOutcome resolve_extension(const FinAbGroup& sub, const FinAbGroup& quotient,
                                   ExtensionEvidence evidence = {});

}  // namespace kcr
