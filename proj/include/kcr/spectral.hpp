#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kcr/abgroup.hpp"
#include "kcr/kgraph.hpp"

namespace kcr {

enum class Part { Real, Complex };

std::string to_string(Part part);

// One part of a spectral page: entries (p, q) with 0 <= p <= k and q taken
// modulo the period (8 for the real part, 2 for the complex part). Entries
// outside the column range read as zero.
class E2Page {
public:
    E2Page() = default;
    E2Page(Part part, int rank);

    Part part() const { return part_; }
    int rank() const { return rank_; }
    int period() const { return part_ == Part::Real ? 8 : 2; }

    const FinAbGroup& at(int p, int q) const;
    void set(int p, int q, FinAbGroup g);

    friend bool operator==(const E2Page&, const E2Page&) = default;

private:
    std::size_t index(int p, int q) const;

    Part part_ = Part::Real;
    int rank_ = 0;
    std::vector<FinAbGroup> cells_;
};

struct PagePair {
    E2Page real;
    E2Page complex;
};

// Entry (p, q) is H_p of the Koszul complex in the coefficient row that the
// row schedule assigns to q. Throws InvalidSpec for invalid specs.
PagePair build_e2(const GraphSpec& spec);

// Real part only, for an arbitrary involution (used for the real shadow).
E2Page build_real_page(const GraphSpec& spec, Involution involution);

// Why a differential d_r : E_{p,q} -> E_{p-r, q+r-1} vanishes.
//  ZeroSourceOrTarget  one end is the zero group
//  CoprimeOrders       both ends finite of coprime order, so Hom vanishes
//  RealShadowC         complex differential forced to zero by the
//                      complexification map from the trivial-involution
//                      real page, whose matching differential vanishes and
//                      which maps isomorphically onto the source
//  Unknown             none of the above applies
enum class DifferentialCertificate { ZeroSourceOrTarget, CoprimeOrders, RealShadowC, Unknown };

std::string to_string(DifferentialCertificate c);
std::optional<DifferentialCertificate> differential_certificate_from_string(const std::string& s);

struct ConvergenceCertificate {
    DifferentialCertificate kind = DifferentialCertificate::Unknown;
    int r = 0;
    int p = 0;
    int q = 0;
    Part part = Part::Real;

    std::string to_string() const;
    friend bool operator==(const ConvergenceCertificate&, const ConvergenceCertificate&) = default;
};

// Static knowledge of where the complexification map c : real -> complex is
// an isomorphism on E2. The only recorded fact is the bottom row (q = 0 mod
// 8) of the trivial-involution real page, where the real and complex
// coefficient complexes coincide.
bool complexification_iso_known(Involution involution, int q, Part source);

struct Convergence {
    bool converged = false;
    // Equal to E2 when converged: every certified differential is zero.
    PagePair infinity;
    // Trivial-involution real E-infinity, the shadow used for the complex part.
    E2Page real_shadow;
    bool shadow_converged = false;
    std::vector<ConvergenceCertificate> certificates;

    std::vector<ConvergenceCertificate> unknowns() const;
};

// Certifies every differential d_r, r >= 2, page by page. Stops in a part at
// the first page holding an uncertified differential.
Convergence converge(const PagePair& pages, const GraphSpec& spec);

// Certifies the differentials of a single page part without shadow help.
// Returns the certificates and whether all of them are nonzero-free.
std::vector<ConvergenceCertificate> certify_part(const E2Page& page, bool& all_certified);

struct KGroup {
    std::optional<FinAbGroup> group;   // absent when an extension is unresolved
    std::vector<FinAbGroup> subfactors;  // nonzero E-infinity terms, ascending p

    bool resolved() const { return group.has_value(); }
    std::string to_string() const;
    friend bool operator==(const KGroup&, const KGroup&) = default;
};

struct DegreeResolution {
    Part part = Part::Real;
    int degree = 0;
    std::vector<ExtensionOutcome> steps;  // quotient end first
    bool resolved = true;

    friend bool operator==(const DegreeResolution&, const DegreeResolution&) = default;
};

struct KTheoryTable {
    std::array<KGroup, 8> ko;
    std::array<KGroup, 8> ku;
    std::vector<DegreeResolution> extensions;
    std::vector<ConvergenceCertificate> certificates;

    bool resolved() const;
    friend bool operator==(const KTheoryTable&, const KTheoryTable&) = default;
};

// Compares the KO and KU groups only (provenance ignored).
bool same_groups(const KTheoryTable& a, const KTheoryTable& b);

// Reads K-groups off the E-infinity diagonals. Throws std::logic_error if
// `conv` did not converge.
KTheoryTable assemble(const Convergence& conv, const GraphSpec& spec);

struct PipelineResult {
    PagePair e2;
    Convergence convergence;
    std::optional<KTheoryTable> table;  // present iff converged
};

PipelineResult compute_k_theory(const GraphSpec& spec);

}  // namespace kcr
