#include "kcr/families.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace kcr {

namespace {

void gcd_in(Integer& acc, const Integer& v) { mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t()); }

// Multiplicities of Z_g (trivial involution) or of Z_h / Z_k (swap) in
// KO_0..KO_7, and of Z_g in every KU_n.
struct TablePattern {
    std::array<int, 8> ko_first;   // g or h
    std::array<int, 8> ko_second;  // k (swap only)
    int ku;
};

const TablePattern& pattern(int rank, Involution inv) {
    static const TablePattern rank3_trivial{{1, 2, 1, 0, 1, 2, 1, 0}, {}, 2};
    static const TablePattern rank4_trivial{{1, 3, 3, 1, 1, 3, 3, 1}, {}, 4};
    static const TablePattern rank3_swap{{1, 2, 1, 0, 1, 2, 1, 0}, {1, 0, 1, 2, 1, 0, 1, 2}, 2};
    static const TablePattern rank4_swap{{1, 3, 3, 1, 1, 3, 3, 1}, {3, 1, 1, 3, 3, 1, 1, 3}, 4};
    if (rank == 3) return inv == Involution::Trivial ? rank3_trivial : rank3_swap;
    return inv == Involution::Trivial ? rank4_trivial : rank4_swap;
}

KGroup resolved(FinAbGroup g) { return KGroup{std::move(g), {}}; }

}  // namespace

FamilyInvariants closed_form(const GraphSpec& spec) {
    FamilyInvariants out;
    out.family_case = enumerate_family_case(spec);
    require_valid(spec);
    std::vector<Integer> ns, ms;
    for (const auto& c : spec.colors) (c.kind == ColorKind::OffDiagonal ? ns : ms).emplace_back(c.size);

    Integer g = 0, h = 0, k = 0;
    for (const auto& m : ms) {
        const Integer t = 1 - 2 * m;
        gcd_in(g, t);
        gcd_in(h, t);
        gcd_in(k, t);
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        gcd_in(h, 1 - 2 * ns[i]);
        gcd_in(k, 1 + 2 * ns[i]);
        for (std::size_t j = i; j < ns.size(); ++j) gcd_in(g, 1 - 4 * ns[i] * ns[j]);
    }
    out.g = g;
    out.h = h;
    out.k = k;
    assert(out.g == out.h * out.k);
    return out;
}

KTheoryTable expected_table(const GraphSpec& spec) {
    const FamilyInvariants inv = closed_form(spec);
    const TablePattern& pat = pattern(spec.rank(), spec.involution);
    KTheoryTable t;
    for (int n = 0; n < 8; ++n) {
        if (spec.involution == Involution::Trivial) {
            t.ko[n] = resolved(FinAbGroup::power(inv.g, pat.ko_first[n]));
        } else {
            t.ko[n] = resolved(direct_sum(FinAbGroup::power(inv.h, pat.ko_first[n]),
                                          FinAbGroup::power(inv.k, pat.ko_second[n])));
        }
        t.ku[n] = resolved(FinAbGroup::power(inv.g, pat.ku));
    }
    return t;
}

std::string CuntzSummand::to_string() const {
    std::string s = multiplicity > 1 ? std::to_string(multiplicity) + "*" : "";
    if (shift != 0) s += "S^" + std::to_string(shift) + " ";
    return s + "O_" + cuntz_index.get_str() + " (" + parameter + ")";
}

std::vector<CuntzSummand> cuntz_decomposition(const GraphSpec& spec) {
    const FamilyInvariants inv = closed_form(spec);
    if (inv.g == 1) throw std::domain_error("cuntz_decomposition: g = 1 gives the zero module");
    const std::vector<int> mult = spec.rank() == 3 ? std::vector<int>{1, 2, 1} : std::vector<int>{1, 3, 3, 1};
    std::vector<CuntzSummand> out;
    auto block = [&](char param, const Integer& n, int first_shift) {
        if (n == 1) return;
        for (std::size_t j = 0; j < mult.size(); ++j)
            out.push_back({param, n + 1, first_shift - static_cast<int>(j), mult[j]});
    };
    if (spec.involution == Involution::Trivial) {
        block('g', inv.g, 0);
    } else {
        block('h', inv.h, 0);
        block('k', inv.k, -4);
    }
    return out;
}

std::string IsoLabel::to_string() const {
    std::string s = kcr::to_string(involution) + "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].get_str();
    return s + ")";
}

IsoLabel iso_class(const GraphSpec& spec) {
    const FamilyInvariants inv = closed_form(spec);
    if (spec.involution == Involution::Trivial) return {Involution::Trivial, {inv.g}};
    return {Involution::Swap, {inv.h, inv.k}};
}

IsoVerdict iso_equal(const IsoLabel& a, const IsoLabel& b) {
    if (a.involution != b.involution) return IsoVerdict::Incomparable;
    return a.values == b.values ? IsoVerdict::Equal : IsoVerdict::Different;
}

}  // namespace kcr
