#include "kcr/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kcr/homology.hpp"

namespace kcr {

std::string to_string(Part part) { return part == Part::Real ? "real" : "complex"; }

E2Page::E2Page(Part part, int rank) : part_(part), rank_(rank) {
    cells_.resize(static_cast<std::size_t>(rank + 1) * period());
}

std::size_t E2Page::index(int p, int q) const {
    const int per = period();
    const int qr = ((q % per) + per) % per;
    return static_cast<std::size_t>(p) * per + qr;
}

const FinAbGroup& E2Page::at(int p, int q) const {
    static const FinAbGroup zero;
    if (p < 0 || p > rank_) return zero;
    return cells_[index(p, q)];
}

void E2Page::set(int p, int q, FinAbGroup g) {
    if (p < 0 || p > rank_) throw std::out_of_range("E2Page::set: column out of range");
    cells_[index(p, q)] = std::move(g);
}

namespace {

using RowHomology = std::map<CoefficientRow, std::vector<FinAbGroup>>;

const std::vector<FinAbGroup>& row_homology(RowHomology& cache, const std::vector<IntMatrix>& ms,
                                            CoefficientRow row) {
    auto it = cache.find(row);
    if (it == cache.end()) it = cache.emplace(row, homology_all(koszul_complex(ms, row))).first;
    return it->second;
}

E2Page fill_real(const GraphSpec& spec, Involution inv, const std::vector<IntMatrix>& ms, RowHomology& cache) {
    E2Page page(Part::Real, spec.rank());
    for (int q = 0; q < 8; ++q) {
        const auto row = real_row(inv, q);
        if (!row) continue;
        const auto& h = row_homology(cache, ms, *row);
        for (int p = 0; p <= spec.rank(); ++p) page.set(p, q, h[p]);
    }
    return page;
}

}  // namespace

E2Page build_real_page(const GraphSpec& spec, Involution involution) {
    require_valid(spec);
    RowHomology cache;
    return fill_real(spec, involution, adjacency_matrices(spec), cache);
}

PagePair build_e2(const GraphSpec& spec) {
    require_valid(spec);
    const auto ms = adjacency_matrices(spec);
    RowHomology cache;
    PagePair out{fill_real(spec, spec.involution, ms, cache), E2Page(Part::Complex, spec.rank())};
    for (int q = 0; q < 2; ++q) {
        const auto row = complex_row(q);
        if (!row) continue;
        const auto& h = row_homology(cache, ms, *row);
        for (int p = 0; p <= spec.rank(); ++p) out.complex.set(p, q, h[p]);
    }
    return out;
}

std::string to_string(DifferentialCertificate c) {
    switch (c) {
        case DifferentialCertificate::ZeroSourceOrTarget: return "ZeroSourceOrTarget";
        case DifferentialCertificate::CoprimeOrders: return "CoprimeOrders";
        case DifferentialCertificate::RealShadowC: return "RealShadowC";
        case DifferentialCertificate::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<DifferentialCertificate> differential_certificate_from_string(const std::string& s) {
    for (auto c : {DifferentialCertificate::ZeroSourceOrTarget, DifferentialCertificate::CoprimeOrders,
                   DifferentialCertificate::RealShadowC, DifferentialCertificate::Unknown})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

std::string ConvergenceCertificate::to_string() const {
    return kcr::to_string(kind) + " d_" + std::to_string(r) + " at (" + std::to_string(p) + "," +
           std::to_string(q) + ") " + kcr::to_string(part);
}

bool complexification_iso_known(Involution involution, int q, Part source) {
    return involution == Involution::Trivial && source == Part::Real && ((q % 8) + 8) % 8 == 0;
}

std::vector<ConvergenceCertificate> Convergence::unknowns() const {
    std::vector<ConvergenceCertificate> out;
    for (const auto& c : certificates)
        if (c.kind == DifferentialCertificate::Unknown) out.push_back(c);
    return out;
}

namespace {

// Certificate available from the groups alone.
std::optional<DifferentialCertificate> intrinsic_certificate(const FinAbGroup& src, const FinAbGroup& tgt) {
    if (src.is_zero() || tgt.is_zero()) return DifferentialCertificate::ZeroSourceOrTarget;
    const auto os = src.order(), ot = tgt.order();
    if (os && ot) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), os->get_mpz_t(), ot->get_mpz_t());
        if (g == 1) return DifferentialCertificate::CoprimeOrders;
    }
    return std::nullopt;
}

// Highest page r through which every differential of `page` is certified
// intrinsically; rank + 1 when the whole part converges.
int certified_through(const E2Page& page) {
    const int k = page.rank();
    for (int r = 2; r <= k; ++r)
        for (int p = r; p <= k; ++p)
            for (int q = 0; q < page.period(); ++q)
                if (!intrinsic_certificate(page.at(p, q), page.at(p - r, q + r - 1))) return r - 1;
    return k + 1;
}

// Complex d_r at (p, q) vanishes when the real shadow differential at the
// Bott-shifted location (p, 0) vanishes and c maps the shadow source onto
// the complex source.
bool shadow_forces_zero(const E2Page& shadow, int shadow_ok_through, const E2Page& complex, int r, int p, int q) {
    if (((q % 2) + 2) % 2 != 0) return false;
    if (r > shadow_ok_through + 1) return false;
    if (!complexification_iso_known(Involution::Trivial, 0, Part::Real)) return false;
    if (!(shadow.at(p, 0) == complex.at(p, q))) return false;
    return intrinsic_certificate(shadow.at(p, 0), shadow.at(p - r, r - 1)).has_value();
}

}  // namespace

std::vector<ConvergenceCertificate> certify_part(const E2Page& page, bool& all_certified) {
    std::vector<ConvergenceCertificate> out;
    all_certified = true;
    const int k = page.rank();
    for (int r = 2; r <= k && all_certified; ++r)
        for (int p = r; p <= k; ++p)
            for (int q = 0; q < page.period(); ++q) {
                const auto c = intrinsic_certificate(page.at(p, q), page.at(p - r, q + r - 1));
                out.push_back({c.value_or(DifferentialCertificate::Unknown), r, p, q, page.part()});
                if (!c) all_certified = false;
            }
    return out;
}

Convergence converge(const PagePair& pages, const GraphSpec& spec) {
    Convergence conv;
    conv.infinity = pages;
    conv.real_shadow = spec.involution == Involution::Trivial ? pages.real
                                                               : build_real_page(spec, Involution::Trivial);
    const int shadow_ok = certified_through(conv.real_shadow);
    conv.shadow_converged = shadow_ok > spec.rank();

    bool real_ok = false;
    conv.certificates = certify_part(pages.real, real_ok);

    bool complex_ok = true;
    const E2Page& cx = pages.complex;
    const int k = cx.rank();
    for (int r = 2; r <= k && complex_ok; ++r)
        for (int p = r; p <= k; ++p)
            for (int q = 0; q < cx.period(); ++q) {
                auto c = intrinsic_certificate(cx.at(p, q), cx.at(p - r, q + r - 1));
                if (!c && shadow_forces_zero(conv.real_shadow, shadow_ok, cx, r, p, q))
                    c = DifferentialCertificate::RealShadowC;
                conv.certificates.push_back({c.value_or(DifferentialCertificate::Unknown), r, p, q, Part::Complex});
                if (!c) complex_ok = false;
            }
    conv.converged = real_ok && complex_ok;
    return conv;
}

std::string KGroup::to_string() const {
    if (group) return group->to_string();
    std::string s = "ext{";
    for (std::size_t i = 0; i < subfactors.size(); ++i) s += (i ? " | " : "") + subfactors[i].to_string();
    return s + "}";
}

bool KTheoryTable::resolved() const {
    return std::all_of(ko.begin(), ko.end(), [](const KGroup& g) { return g.resolved(); }) &&
           std::all_of(ku.begin(), ku.end(), [](const KGroup& g) { return g.resolved(); });
}

bool same_groups(const KTheoryTable& a, const KTheoryTable& b) {
    auto same = [](const KGroup& x, const KGroup& y) {
        if (x.group || y.group) return x.group == y.group;
        return x.subfactors == y.subfactors;
    };
    for (int n = 0; n < 8; ++n)
        if (!same(a.ko[n], b.ko[n]) || !same(a.ku[n], b.ku[n])) return false;
    return true;
}

namespace {

struct DiagonalEntry {
    int p;
    FinAbGroup group;
};

std::vector<DiagonalEntry> diagonal(const E2Page& page, int n) {
    std::vector<DiagonalEntry> out;
    for (int p = 0; p <= page.rank(); ++p) {
        const auto& g = page.at(p, n - p);
        if (!g.is_zero()) out.push_back({p, g});
    }
    return out;
}

// The complexification splitting applies to a complex diagonal whose top
// quotient E_{p,q} can be moved by Bott periodicity to the bottom row, where
// c is an isomorphism from the real shadow, and where the real shadow
// diagonal through (p, 0) has nothing else on it: then KO_p maps onto the
// quotient through c and provides a section.
bool cmap_splitting_applies(const E2Page& shadow, const E2Page& complex, int top_p) {
    if (!complexification_iso_known(Involution::Trivial, 0, Part::Real)) return false;
    if (!(shadow.at(top_p, 0) == complex.at(top_p, 0))) return false;
    for (int p = 0; p <= shadow.rank(); ++p)
        if (p != top_p && !shadow.at(p, top_p - p).is_zero()) return false;
    return true;
}

KGroup resolve_diagonal(const std::vector<DiagonalEntry>& entries, bool cmap_for_top, DegreeResolution& note) {
    KGroup out;
    for (const auto& e : entries) out.subfactors.push_back(e.group);
    if (entries.empty()) {
        out.group = FinAbGroup{};
        return out;
    }
    FinAbGroup acc = entries.back().group;
    for (std::size_t i = entries.size() - 1; i-- > 0;) {
        ExtensionEvidence ev;
        ev.cmap_splitting = cmap_for_top && i + 2 == entries.size();
        ExtensionOutcome step = resolve_extension(entries[i].group, acc, ev);
        note.steps.push_back(step);
        if (!step.resolved) {
            note.resolved = false;
            return out;
        }
        acc = *step.group;
    }
    out.group = acc;
    return out;
}

}  // namespace

KTheoryTable assemble(const Convergence& conv, const GraphSpec& spec) {
    if (!conv.converged) throw std::logic_error("assemble: spectral sequence did not converge");
    if (conv.infinity.real.rank() != spec.rank())
        throw std::invalid_argument("assemble: pages were built for a different rank");
    KTheoryTable t;
    t.certificates = conv.certificates;
    for (int n = 0; n < 8; ++n) {
        {
            DegreeResolution note{Part::Real, n, {}, true};
            t.ko[n] = resolve_diagonal(diagonal(conv.infinity.real, n), false, note);
            if (!note.steps.empty()) t.extensions.push_back(std::move(note));
        }
        {
            DegreeResolution note{Part::Complex, n, {}, true};
            const auto entries = diagonal(conv.infinity.complex, n);
            const bool cmap = conv.shadow_converged && !entries.empty() &&
                              cmap_splitting_applies(conv.real_shadow, conv.infinity.complex, entries.back().p);
            t.ku[n] = resolve_diagonal(entries, cmap, note);
            if (!note.steps.empty()) t.extensions.push_back(std::move(note));
        }
    }
    return t;
}

PipelineResult compute_k_theory(const GraphSpec& spec) {
    PipelineResult out;
    out.e2 = build_e2(spec);
    out.convergence = converge(out.e2, spec);
    if (out.convergence.converged) out.table = assemble(out.convergence, spec);
    return out;
}

}  // namespace kcr
