#include "kcr/kgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kcr {

std::string to_string(ColorKind k) { return k == ColorKind::Diagonal ? "D" : "T"; }
std::string to_string(Involution inv) { return inv == Involution::Trivial ? "trivial" : "swap"; }

std::string to_string(CoefficientRow row) {
    switch (row) {
        case CoefficientRow::Integer: return "IntegerRow";
        case CoefficientRow::Mod2: return "Mod2Row";
        case CoefficientRow::ScalarSum: return "ScalarSumRow";
        case CoefficientRow::ScalarDiff: return "ScalarDiffRow";
    }
    return "IntegerRow";
}

std::string GraphSpec::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) s += ",";
        s += kcr::to_string(colors[i].kind) + std::to_string(colors[i].size);
    }
    return s + ")/" + kcr::to_string(involution);
}

std::vector<IntMatrix> adjacency_matrices(const GraphSpec& spec) {
    std::vector<IntMatrix> out;
    out.reserve(spec.colors.size());
    for (const auto& c : spec.colors) {
        IntMatrix m(2, 2);
        const Integer twice = Integer(2) * c.size;
        if (c.kind == ColorKind::Diagonal) {
            m(0, 0) = twice;
            m(1, 1) = twice;
        } else {
            m(0, 1) = twice;
            m(1, 0) = twice;
        }
        out.push_back(std::move(m));
    }
    return out;
}

ValidationReport validate(const GraphSpec& spec) {
    ValidationReport r;
    if (spec.colors.empty()) {
        r.nonempty = false;
        r.problems.emplace_back("rank must be at least 1");
    }
    for (std::size_t i = 0; i < spec.colors.size(); ++i)
        if (spec.colors[i].size < 2) {
            r.sizes_in_range = false;
            r.problems.push_back("color " + std::to_string(i) + " has size " +
                                 std::to_string(spec.colors[i].size) + " < 2");
        }
    if (std::none_of(spec.colors.begin(), spec.colors.end(),
                     [](const ColorSpec& c) { return c.kind == ColorKind::OffDiagonal; })) {
        r.has_off_diagonal = false;
        r.problems.emplace_back("no off-diagonal (type two) color; the graph would be disconnected");
    }
    const auto ms = adjacency_matrices(spec);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!(ms[i] * ms[j] == ms[j] * ms[i])) {
                r.pairwise_commute = false;
                r.problems.push_back("M_" + std::to_string(i + 1) + " and M_" + std::to_string(j + 1) +
                                     " do not commute");
            }
    return r;
}

void require_valid(const GraphSpec& spec) {
    const auto r = validate(spec);
    if (r.ok()) return;
    std::string msg = "invalid graph spec " + spec.to_string() + ":";
    for (const auto& p : r.problems) msg += " " + p + ";";
    throw InvalidSpec(msg);
}

IntMatrix ChainComplex::differential(int p) const {
    const int k = top_degree();
    if (p >= 1 && p <= k) return differentials[p - 1];
    // d_0 : C_0 -> 0 and d_{k+1} : 0 -> C_k
    if (p == 0) return IntMatrix(0, dims.empty() ? 0 : dims[0]);
    if (p == k + 1) return IntMatrix(dims.empty() ? 0 : dims[k], 0);
    return {};
}

IntMatrix koszul_block(const IntMatrix& adjacency, CoefficientRow row) {
    const std::size_t n = adjacency.rows();
    switch (row) {
        case CoefficientRow::Integer:
            return IntMatrix::identity(n) - adjacency.transpose();
        case CoefficientRow::Mod2: {
            IntMatrix b = IntMatrix::identity(n) - adjacency.transpose();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) b(i, j) = mpz_odd_p(b(i, j).get_mpz_t()) ? 1 : 0;
            return b;
        }
        case CoefficientRow::ScalarSum:
        case CoefficientRow::ScalarDiff: {
            if (adjacency.rows() != 2 || adjacency.cols() != 2)
                throw std::invalid_argument("scalar coefficient rows need 2x2 adjacency matrices");
            const Integer folded = row == CoefficientRow::ScalarSum ? Integer(adjacency(0, 0) + adjacency(0, 1))
                                                                    : Integer(adjacency(0, 0) - adjacency(0, 1));
            IntMatrix b(1, 1);
            b(0, 0) = 1 - folded;
            return b;
        }
    }
    return {};
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int k, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(p);
    std::iota(cur.begin(), cur.end(), 0);
    if (p > k) return out;
    for (;;) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[i] == k - p + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

ChainComplex koszul_complex(std::span<const IntMatrix> matrices, CoefficientRow row) {
    const int k = static_cast<int>(matrices.size());
    for (int i = 0; i < k; ++i) {
        if (matrices[i].rows() != matrices[i].cols() || matrices[i].rows() != matrices[0].rows())
            throw std::invalid_argument("koszul_complex: matrices must be square and equal-sized");
        for (int j = i + 1; j < k; ++j)
            if (!(matrices[i] * matrices[j] == matrices[j] * matrices[i]))
                throw std::invalid_argument("koszul_complex: M_" + std::to_string(i + 1) + " and M_" +
                                            std::to_string(j + 1) + " do not commute");
    }

    std::vector<IntMatrix> blocks;
    for (const auto& m : matrices) blocks.push_back(koszul_block(m, row));
    const std::size_t v = blocks.empty() ? (row == CoefficientRow::Integer || row == CoefficientRow::Mod2 ? 2 : 1)
                                         : blocks.front().rows();

    ChainComplex cx;
    cx.row = row;
    std::vector<std::vector<std::vector<int>>> bases(k + 1);
    for (int p = 0; p <= k; ++p) {
        bases[p] = subsets_of_size(k, p);
        cx.dims.push_back(bases[p].size() * v);
    }
    for (int p = 1; p <= k; ++p) {
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < bases[p - 1].size(); ++i) index[bases[p - 1][i]] = i;
        IntMatrix d(cx.dims[p - 1], cx.dims[p]);
        for (std::size_t col = 0; col < bases[p].size(); ++col) {
            const auto& s = bases[p][col];
            for (int j = 0; j < p; ++j) {
                std::vector<int> face = s;
                face.erase(face.begin() + j);
                const std::size_t r = index.at(face);
                const IntMatrix& b = blocks[s[j]];
                const int sign = (j % 2 == 0) ? 1 : -1;
                for (std::size_t a = 0; a < v; ++a)
                    for (std::size_t c = 0; c < v; ++c) d(r * v + a, col * v + c) = sign * b(a, c);
            }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

bool squares_to_zero(const ChainComplex& complex) {
    for (std::size_t p = 0; p + 1 < complex.differentials.size(); ++p) {
        const IntMatrix prod = complex.differentials[p] * complex.differentials[p + 1];
        for (const auto& x : prod.entries()) {
            if (complex.row == CoefficientRow::Mod2 ? mpz_odd_p(x.get_mpz_t()) : sgn(x) != 0) return false;
        }
    }
    return true;
}

std::string FamilyCase::label() const {
    return "rank-" + std::to_string(rank) + " case (" + std::to_string(number) + ")";
}

GraphSpec canonical_order(const GraphSpec& spec) {
    GraphSpec out = spec;
    std::stable_partition(out.colors.begin(), out.colors.end(),
                          [](const ColorSpec& c) { return c.kind == ColorKind::OffDiagonal; });
    return out;
}

FamilyCase enumerate_family_case(const GraphSpec& spec) {
    const int k = spec.rank();
    if (k != 3 && k != 4) throw UnsupportedRank(k);
    FamilyCase fc;
    fc.rank = k;
    for (std::size_t i = 0; i < spec.colors.size(); ++i)
        if (spec.colors[i].kind == ColorKind::OffDiagonal) fc.permutation.push_back(i);
    fc.number = static_cast<int>(fc.permutation.size());
    for (std::size_t i = 0; i < spec.colors.size(); ++i)
        if (spec.colors[i].kind == ColorKind::Diagonal) fc.permutation.push_back(i);
    if (fc.number == 0) throw InvalidSpec("spec " + spec.to_string() + " has no off-diagonal color");
    return fc;
}

std::optional<CoefficientRow> real_row(Involution inv, int q) {
    const int r = ((q % 8) + 8) % 8;
    if (inv == Involution::Trivial) {
        if (r == 0 || r == 4) return CoefficientRow::Integer;
        if (r == 1 || r == 2) return CoefficientRow::Mod2;
        return std::nullopt;
    }
    if (r == 0 || r == 4) return CoefficientRow::ScalarSum;
    if (r == 2 || r == 6) return CoefficientRow::ScalarDiff;
    return std::nullopt;
}

std::optional<CoefficientRow> complex_row(int q) {
    if (((q % 2) + 2) % 2 == 0) return CoefficientRow::Integer;
    return std::nullopt;
}

}  // namespace kcr
