#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcr/intmat.hpp"

namespace kcr {

// Lift type of one color of the double cover. Diagonal colors lift to loops
// (adjacency 2m I), off-diagonal colors cross between the two vertices
// (adjacency with 2n off the diagonal).
enum class ColorKind { Diagonal, OffDiagonal };

struct ColorSpec {
    ColorKind kind = ColorKind::OffDiagonal;
    long size = 2;  // m_i for Diagonal, n_i for OffDiagonal

    friend bool operator==(const ColorSpec&, const ColorSpec&) = default;
};

enum class Involution { Trivial, Swap };

struct GraphSpec {
    std::vector<ColorSpec> colors;
    Involution involution = Involution::Trivial;

    int rank() const { return static_cast<int>(colors.size()); }
    std::string to_string() const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

std::string to_string(ColorKind k);
std::string to_string(Involution inv);

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedRank : public std::domain_error {
public:
    explicit UnsupportedRank(int rank)
        : std::domain_error("no closed form for rank " + std::to_string(rank)) {}
};

// M_i for each color, in color order.
std::vector<IntMatrix> adjacency_matrices(const GraphSpec& spec);

struct ValidationReport {
    bool nonempty = true;
    bool sizes_in_range = true;
    bool has_off_diagonal = true;
    bool pairwise_commute = true;
    std::vector<std::string> problems;

    bool ok() const { return nonempty && sizes_in_range && has_off_diagonal && pairwise_commute; }
};

ValidationReport validate(const GraphSpec& spec);
// Throws InvalidSpec listing every failed check.
void require_valid(const GraphSpec& spec);

// Coefficient row of the Koszul complex. Integer and Mod2 rows use the 2x2
// blocks I - M_i^T; the scalar rows collapse each block to 1x1 by summing or
// differencing the first row of M_i, as the vertex swap dictates.
enum class CoefficientRow { Integer, Mod2, ScalarSum, ScalarDiff };

std::string to_string(CoefficientRow row);

struct ChainComplex {
    // dims[p] = rank of C_p, p = 0..k
    std::vector<std::size_t> dims;
    // differentials[p - 1] = d_p : C_p -> C_{p-1}, a dims[p-1] x dims[p] matrix
    std::vector<IntMatrix> differentials;
    CoefficientRow row = CoefficientRow::Integer;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    // d_p for any integer p; zero maps (with the right shape) outside 1..k.
    IntMatrix differential(int p) const;
};

// The Koszul block for one color in the given row.
IntMatrix koszul_block(const IntMatrix& adjacency, CoefficientRow row);

// C_p has basis (p-subsets of colors, lexicographic) x (block basis); the
// block for deleting the j-th smallest color of a subset carries sign
// (-1)^(j-1). Throws std::invalid_argument on non-commuting input.
ChainComplex koszul_complex(std::span<const IntMatrix> matrices, CoefficientRow row);

// d_p d_{p+1} == 0 for all p (mod 2 for Mod2 rows).
bool squares_to_zero(const ChainComplex& complex);

// Which numbered case of the rank-3/rank-4 families a spec falls in, after
// moving off-diagonal colors first. The permutation lists, for each sorted
// position, the original color index.
struct FamilyCase {
    int rank = 0;
    int number = 0;  // number of off-diagonal colors
    std::vector<std::size_t> permutation;

    std::string label() const;
};

// Throws UnsupportedRank outside {3, 4}.
FamilyCase enumerate_family_case(const GraphSpec& spec);

// The spec with off-diagonal colors first, stable otherwise.
GraphSpec canonical_order(const GraphSpec& spec);

// Coefficient row carried by the real part at row q, or nullopt when the
// row is zero.
std::optional<CoefficientRow> real_row(Involution inv, int q);
std::optional<CoefficientRow> complex_row(int q);

}  // namespace kcr
