#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcr/kgraph.hpp"
#include "support.hpp"

using namespace kcr;
using namespace testing_support;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// d_p d_{p+1} computed here rather than through squares_to_zero.
bool composites_vanish(const ChainComplex& c) {
    for (int p = 1; p < c.top_degree(); ++p) {
        const IntMatrix prod = c.differential(p) * c.differential(p + 1);
        for (const auto& x : prod.entries())
            if (c.row == CoefficientRow::Mod2 ? mpz_odd_p(x.get_mpz_t()) != 0 : x != 0) return false;
    }
    return true;
}

GraphSpec random_spec(std::mt19937& rng, int k) {
    std::uniform_int_distribution<long> size(2, 30);
    std::bernoulli_distribution off(0.5);
    std::string kinds;
    std::vector<long> sizes;
    for (int i = 0; i < k; ++i) {
        kinds += (i == 0 || off(rng)) ? 'T' : 'D';
        sizes.push_back(size(rng));
    }
    std::shuffle(kinds.begin(), kinds.end(), rng);
    return spec(kinds, sizes, off(rng) ? Involution::Swap : Involution::Trivial);
}

}  // namespace

TEST_CASE("adjacency matrices") {
    const auto ms = adjacency_matrices(spec("DT", {2, 3}));
    CHECK(ms[0] == IntMatrix{{4, 0}, {0, 4}});
    CHECK(ms[1] == IntMatrix{{0, 6}, {6, 0}});
}

TEST_CASE("validation") {
    CHECK(validate(spec("TDD", {2, 5, 8})).ok());
    const auto all_d = validate(spec("DDD", {2, 5, 8}));
    CHECK_FALSE(all_d.has_off_diagonal);
    CHECK_FALSE(all_d.ok());
    const auto small = validate(spec("TD", {2, 1}));
    CHECK_FALSE(small.sizes_in_range);
    CHECK(small.problems.size() == 1);
    CHECK_FALSE(validate(GraphSpec{}).nonempty);
    CHECK(validate(spec("TTTTTT", {2, 3, 4, 5, 6, 7})).pairwise_commute);
    CHECK_THROWS_AS(require_valid(spec("DD", {2, 3})), InvalidSpec);
    CHECK_NOTHROW(require_valid(spec("T", {2})));
}

TEST_CASE("printed boundary maps of the rank-3 case (2) example") {
    // (n1, n2, m3) = (2, 2, 8): 1 - 2 m3 = -15 and -2 n = -4.
    const auto ms = adjacency_matrices(spec("TTD", {2, 2, 8}));
    const auto c = koszul_complex(ms, CoefficientRow::Integer);
    CHECK(c.dims == std::vector<std::size_t>{2, 6, 6, 2});
    CHECK(c.differential(1) == IntMatrix{{1, -4, 1, -4, -15, 0}, {-4, 1, -4, 1, 0, -15}});
    CHECK(c.differential(2) == IntMatrix{{-1, 4, 15, 0, 0, 0},
                                         {4, -1, 0, 15, 0, 0},
                                         {1, -4, 0, 0, 15, 0},
                                         {-4, 1, 0, 0, 0, 15},
                                         {0, 0, 1, -4, 1, -4},
                                         {0, 0, -4, 1, -4, 1}});
    CHECK(squares_to_zero(c));
}

TEST_CASE("all off-diagonal rank-3 first boundary") {
    const auto c = koszul_complex(adjacency_matrices(spec("TTT", {2, 3, 4})), CoefficientRow::Integer);
    CHECK(c.differential(1) == IntMatrix{{1, -4, 1, -6, 1, -8}, {-4, 1, -6, 1, -8, 1}});
}

TEST_CASE("scalar rows collapse the blocks") {
    const auto ms = adjacency_matrices(spec("TDD", {3, 5, 7}));
    const auto sum = koszul_complex(ms, CoefficientRow::ScalarSum);
    CHECK(sum.dims == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(sum.differential(1) == IntMatrix{{1 - 6, 1 - 10, 1 - 14}});
    // Same entries as d_1 in reverse order, middle one negated.
    CHECK(sum.differential(3) == IntMatrix{{1 - 14}, {-(1 - 10)}, {1 - 6}});
    const auto diff = koszul_complex(ms, CoefficientRow::ScalarDiff);
    CHECK(diff.differential(1) == IntMatrix{{1 + 6, 1 - 10, 1 - 14}});
    CHECK(koszul_block(ms[0], CoefficientRow::Mod2) == IntMatrix{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(koszul_block(IntMatrix::identity(3), CoefficientRow::ScalarSum), std::invalid_argument);
}

TEST_CASE("differentials outside the complex are zero maps of the right shape") {
    const auto c = koszul_complex(adjacency_matrices(spec("TD", {2, 3})), CoefficientRow::Integer);
    CHECK(c.top_degree() == 2);
    CHECK(c.differential(0).rows() == 0);
    CHECK(c.differential(0).cols() == 2);
    CHECK(c.differential(3).rows() == 2);
    CHECK(c.differential(3).cols() == 0);
}

TEST_CASE("boundary squares to zero for every row and rank") {
    std::mt19937 rng(7);
    for (int k = 1; k <= 6; ++k)
        for (int t = 0; t < 8; ++t) {
            const auto s = random_spec(rng, k);
            const auto ms = adjacency_matrices(s);
            for (auto row : {CoefficientRow::Integer, CoefficientRow::Mod2, CoefficientRow::ScalarSum,
                             CoefficientRow::ScalarDiff}) {
                const auto c = koszul_complex(ms, row);
                const std::size_t v = (row == CoefficientRow::ScalarSum || row == CoefficientRow::ScalarDiff) ? 1 : 2;
                REQUIRE(c.dims.size() == static_cast<std::size_t>(k + 1));
                for (int p = 0; p <= k; ++p) CHECK(c.dims[p] == binomial(k, p) * v);
                CHECK(composites_vanish(c));
                CHECK(squares_to_zero(c));
            }
        }
}

TEST_CASE("koszul complex of arbitrary commuting matrices") {
    // Polynomials in one matrix commute.
    const IntMatrix a{{1, 2, 0}, {0, 3, 1}, {4, 0, 2}};
    const IntMatrix id = IntMatrix::identity(3);
    const std::vector<IntMatrix> ms{a, a * a, a + id, a * a * a - a};
    const auto c = koszul_complex(ms, CoefficientRow::Integer);
    CHECK(c.dims == std::vector<std::size_t>{3, 12, 18, 12, 3});
    CHECK(composites_vanish(c));
}

TEST_CASE("non-commuting input is rejected") {
    const std::vector<IntMatrix> ms{IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}}};
    CHECK_THROWS_AS(koszul_complex(ms, CoefficientRow::Integer), std::invalid_argument);
    const std::vector<IntMatrix> shapes{IntMatrix::identity(2), IntMatrix::identity(3)};
    CHECK_THROWS_AS(koszul_complex(shapes, CoefficientRow::Integer), std::invalid_argument);
}

TEST_CASE("family cases") {
    CHECK(enumerate_family_case(spec("TDD", {2, 5, 8})).label() == "rank-3 case (1)");
    CHECK(enumerate_family_case(spec("TTTD", {2, 2, 2, 2})).label() == "rank-4 case (3)");
    const auto fc = enumerate_family_case(spec("DTD", {5, 2, 8}));
    CHECK(fc.number == 1);
    CHECK(fc.permutation == std::vector<std::size_t>{1, 0, 2});
    CHECK(canonical_order(spec("DTD", {5, 2, 8})) == spec("TDD", {2, 5, 8}));
    CHECK_THROWS_AS(enumerate_family_case(spec("DDD", {2, 2, 2})), InvalidSpec);
    try {
        enumerate_family_case(spec("TDDDD", {2, 2, 2, 2, 2}));
        FAIL("expected UnsupportedRank");
    } catch (const UnsupportedRank& e) {
        CHECK(std::string(e.what()) == "no closed form for rank 5");
    }
}

TEST_CASE("row schedule") {
    const std::optional<CoefficientRow> none;
    const std::vector<std::optional<CoefficientRow>> trivial{CoefficientRow::Integer, CoefficientRow::Mod2,
                                                             CoefficientRow::Mod2,    none,
                                                             CoefficientRow::Integer, none,
                                                             none,                    none};
    const std::vector<std::optional<CoefficientRow>> swap{CoefficientRow::ScalarSum,  none,
                                                          CoefficientRow::ScalarDiff, none,
                                                          CoefficientRow::ScalarSum,  none,
                                                          CoefficientRow::ScalarDiff, none};
    for (int q = 0; q < 16; ++q) {
        CHECK(real_row(Involution::Trivial, q) == trivial[q % 8]);
        CHECK(real_row(Involution::Swap, q) == swap[q % 8]);
        CHECK(complex_row(q) == (q % 2 == 0 ? std::optional<CoefficientRow>(CoefficientRow::Integer) : none));
    }
    CHECK(real_row(Involution::Trivial, -4) == CoefficientRow::Integer);
}

TEST_CASE("names") {
    CHECK(spec("TD", {2, 5}, Involution::Swap).to_string() == "(T2,D5)/swap");
    CHECK(to_string(CoefficientRow::Mod2) == "Mod2Row");
}
