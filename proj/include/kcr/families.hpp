#pragma once

#include <string>
#include <vector>

#include "kcr/kgraph.hpp"
#include "kcr/spectral.hpp"

namespace kcr {

// gcd invariants of a rank-3 or rank-4 family instance. With n_i the
// off-diagonal sizes and m_j the diagonal ones:
//   g = gcd{1 - 4 n_i^2, 1 - 4 n_i n_j, 1 - 2 m_j}
//   h = gcd{1 - 2 n_i, 1 - 2 m_j}
//   k = gcd{1 + 2 n_i, 1 - 2 m_j}
struct FamilyInvariants {
    Integer g = 1;
    Integer h = 1;
    Integer k = 1;
    FamilyCase family_case;
};

// Throws UnsupportedRank outside {3, 4} and InvalidSpec for invalid specs.
FamilyInvariants closed_form(const GraphSpec& spec);

// The K-theory tables in closed form; all groups zero when g = 1.
KTheoryTable expected_table(const GraphSpec& spec);

// One summand Sigma^shift K^CR(O_{n+1}) with n one of g, h, k.
struct CuntzSummand {
    char parameter = 'g';
    Integer cuntz_index;  // n + 1
    int shift = 0;
    int multiplicity = 1;

    std::string to_string() const;
    friend bool operator==(const CuntzSummand&, const CuntzSummand&) = default;
};

// Throws std::domain_error when g = 1.
std::vector<CuntzSummand> cuntz_decomposition(const GraphSpec& spec);

// Isomorphism label: (g) for the trivial involution, the ordered pair (h, k)
// for the swap involution.
struct IsoLabel {
    Involution involution = Involution::Trivial;
    std::vector<Integer> values;

    std::string to_string() const;
    friend bool operator==(const IsoLabel&, const IsoLabel&) = default;
};

enum class IsoVerdict { Equal, Different, Incomparable };

IsoLabel iso_class(const GraphSpec& spec);
IsoVerdict iso_equal(const IsoLabel& a, const IsoLabel& b);

}  // namespace kcr
