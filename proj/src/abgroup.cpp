#include "kcr/abgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcr {

FinAbGroup FinAbGroup::from_cyclic(std::size_t free_rank, std::vector<Integer> orders) {
    FinAbGroup g;
    g.free_rank_ = free_rank;
    for (auto& o : orders) {
        o = abs(o);
        if (sgn(o) == 0) ++g.free_rank_;
    }
    std::erase_if(orders, [](const Integer& o) { return o <= 1; });
    // Pairwise (gcd, lcm) exchange: after pass i, orders[i] divides every
    // later entry, which yields the invariant-factor chain.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            Integer g_ij, l_ij;
            mpz_gcd(g_ij.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            mpz_lcm(l_ij.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            orders[i] = g_ij;
            orders[j] = l_ij;
        }
    std::erase_if(orders, [](const Integer& o) { return o <= 1; });
    g.torsion_ = std::move(orders);
    return g;
}

FinAbGroup FinAbGroup::power(const Integer& n, std::size_t copies) {
    return from_cyclic(0, std::vector<Integer>(copies, n));
}

std::optional<Integer> FinAbGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Integer o = 1;
    for (const auto& t : torsion_) o *= t;
    return o;
}

Integer FinAbGroup::exponent() const { return torsion_.empty() ? Integer(1) : torsion_.back(); }

Integer FinAbGroup::count_killed_by(const Integer& m) const {
    Integer n = 1;
    for (const auto& t : torsion_) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        n *= g;
    }
    return n;
}

std::string FinAbGroup::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    auto append = [&s](const std::string& term) {
        if (!s.empty()) s += " + ";
        s += term;
    };
    for (std::size_t i = 0; i < torsion_.size();) {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
        std::string term = "Z_" + torsion_[i].get_str();
        if (j - i > 1) term += "^" + std::to_string(j - i);
        append(term);
        i = j;
    }
    if (free_rank_ == 1) append("Z");
    else if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
    return s;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Integer> orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return FinAbGroup::from_cyclic(a.free_rank() + b.free_rank(), std::move(orders));
}

FinAbGroup group_from_cokernel(const std::vector<Integer>& d, std::size_t target_dim) {
    std::vector<Integer> nonzero;
    for (const auto& x : d)
        if (sgn(x) != 0) nonzero.push_back(x);
    if (nonzero.size() > target_dim)
        throw std::invalid_argument("group_from_cokernel: " + std::to_string(nonzero.size()) +
                                    " nonzero invariant factors exceed target dimension " +
                                    std::to_string(target_dim));
    const std::size_t free_rank = target_dim - nonzero.size();
    return FinAbGroup::from_cyclic(free_rank, std::move(nonzero));
}

std::string to_string(ExtensionCertificate c) {
    switch (c) {
        case ExtensionCertificate::CoprimeOrders: return "CoprimeOrders";
        case ExtensionCertificate::TrivialSide: return "TrivialSide";
        case ExtensionCertificate::CMapSplitting: return "CMapSplitting";
        case ExtensionCertificate::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

std::optional<ExtensionCertificate> extension_certificate_from_string(const std::string& s) {
    for (auto c : {ExtensionCertificate::CoprimeOrders, ExtensionCertificate::TrivialSide,
                   ExtensionCertificate::CMapSplitting, ExtensionCertificate::Unresolved})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

ExtensionOutcome resolve_extension(const FinAbGroup& sub, const FinAbGroup& quotient,
                                   ExtensionEvidence evidence) {
    ExtensionOutcome out;
    out.sub = sub;
    out.quotient = quotient;
    auto settle = [&](ExtensionCertificate c) {
        out.resolved = true;
        out.certificate = c;
        out.group = direct_sum(sub, quotient);
        return out;
    };
    if (sub.is_zero() || quotient.is_zero()) return settle(ExtensionCertificate::TrivialSide);
    const auto os = sub.order(), oq = quotient.order();
    if (os && oq) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), os->get_mpz_t(), oq->get_mpz_t());
        if (g == 1) return settle(ExtensionCertificate::CoprimeOrders);
    }
    if (evidence.cmap_splitting) return settle(ExtensionCertificate::CMapSplitting);
    return out;
}

}  // namespace kcr
