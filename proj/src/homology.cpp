#include "kcr/homology.hpp"

#include <stdexcept>

namespace kcr {

namespace {

bool composite_vanishes(const IntMatrix& d_p, const IntMatrix& d_next, bool mod2) {
    if (d_p.empty() || d_next.empty()) return true;
    const IntMatrix prod = d_p * d_next;
    for (const auto& x : prod.entries())
        if (mod2 ? mpz_odd_p(x.get_mpz_t()) : sgn(x) != 0) return false;
    return true;
}

}  // namespace

FinAbGroup homology_at(const ChainComplex& complex, int p) {
    const int k = complex.top_degree();
    if (p < 0 || p > k)
        throw std::out_of_range("homology_at: degree " + std::to_string(p) + " outside [0, " +
                                std::to_string(k) + "]");
    const IntMatrix d_p = complex.differential(p);
    const IntMatrix d_next = complex.differential(p + 1);
    const bool mod2 = complex.row == CoefficientRow::Mod2;
    if (!composite_vanishes(d_p, d_next, mod2))
        throw std::invalid_argument("homology_at: d_" + std::to_string(p) + " d_" + std::to_string(p + 1) +
                                    " is nonzero");
    const std::size_t dim = complex.dims[p];

    if (mod2) {
        const std::size_t kernel = dim - rank_mod2(d_p);
        const std::size_t image = rank_mod2(d_next);
        return FinAbGroup::from_cyclic(0, std::vector<Integer>(kernel - image, Integer(2)));
    }

    // d_p = L^-1 D R^-1, so ker d_p is spanned by the columns of R past the
    // rank, and a vector x lies in the kernel iff the leading `rank`
    // coordinates of R^-1 x vanish.
    const SnfDecomposition s = snf(d_p, true);
    const std::size_t kernel_dim = dim - s.rank;
    if (kernel_dim == 0) return {};
    const IntMatrix coords = *s.right_inverse * d_next;
    std::vector<std::size_t> kernel_rows, cols(coords.cols());
    for (std::size_t i = s.rank; i < dim; ++i) kernel_rows.push_back(i);
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    const IntMatrix image_in_kernel = coords.submatrix(kernel_rows, cols);
    return group_from_cokernel(snf(image_in_kernel).diagonal, kernel_dim);
}

std::vector<FinAbGroup> homology_all(const ChainComplex& complex) {
    std::vector<FinAbGroup> out;
    for (int p = 0; p <= complex.top_degree(); ++p) out.push_back(homology_at(complex, p));
    return out;
}

}  // namespace kcr
