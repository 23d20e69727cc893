#include "doctest.h"

#include "hilbsq/normal_form.hpp"
#include "hilbsq/verify/oracles.hpp"

#include <random>

using namespace hilbsq;

namespace {

IntMatrix diag(std::initializer_list<long long> entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    IntMatrix d = IntMatrix::Zero(n, n);
    Eigen::Index i = 0;
    for (long long e : entries) {
        d(i, i) = e;
        ++i;
    }
    return d;
}

bool is_unimodular(const IntMatrix& m) {
    const Integer det = determinant(m);
    return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
    const IntMatrix a = int_matrix({{2, -1, 0, 3}, {1, 4, -2, 0}, {0, 5, 1, -1}, {3, 0, 2, 2}});
    CHECK(Rational(determinant(a)) == oracle::cofactor_determinant(a.cast<Rational>()));
    CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Smith normal form examples") {
    SUBCASE("diag(2, -2) normalizes signs") {
        const auto sf = smith_normal_form(int_matrix({{2, 0}, {0, -2}}));
        CHECK(sf.d == diag({2, 2}));
    }
    SUBCASE("identity") {
        const auto sf = smith_normal_form(identity_matrix(4));
        CHECK(sf.d == identity_matrix(4));
        CHECK(sf.rank == 4);
    }
    SUBCASE("Q_1 Gram") {
        const IntMatrix a = int_matrix({{4, 8}, {8, 2}});
        const auto sf = smith_normal_form(a);
        CHECK(sf.d == diag({2, 28}));
        CHECK(IntMatrix(sf.p * a * sf.q) == sf.d);
        CHECK(IntMatrix(sf.p * sf.p_inv) == identity_matrix(2));
        CHECK(is_unimodular(sf.p));
        CHECK(is_unimodular(sf.q));
    }
    SUBCASE("rank deficient rectangular") {
        const IntMatrix a = int_matrix({{2, 4, 6}, {1, 2, 3}});
        const auto sf = smith_normal_form(a);
        CHECK(sf.rank == 1);
        CHECK(sf.invariant_factors() == std::vector<Integer>{1});
        CHECK(IntMatrix(sf.p * a * sf.q) == sf.d);
    }
    SUBCASE("zero matrix") {
        const auto sf = smith_normal_form(IntMatrix(IntMatrix::Zero(2, 3)));
        CHECK(sf.rank == 0);
        CHECK(sf.invariant_factors().empty());
    }
}

TEST_CASE("Smith normal form agrees with gcd of minors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> entry(-9, 9), dim(1, 5);
    for (int c = 0; c < 40; ++c) {
        IntMatrix a(dim(rng), dim(rng));
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            for (Eigen::Index k = 0; k < a.cols(); ++k) a(r, k) = entry(rng);
        }
        const auto sf = smith_normal_form(a);
        CHECK(sf.invariant_factors() == oracle::invariant_factors_by_minors(a));
        CHECK(IntMatrix(sf.p * a * sf.q) == sf.d);
    }
}

TEST_CASE("normal forms run on machine integers") {
    Matrix<long long> a(2, 2);
    a << 4, 8, 8, 2;
    const auto sf = smith_normal_form(a);
    CHECK(sf.d(0, 0) == 2);
    CHECK(sf.d(1, 1) == 28);
    const auto hf = hermite_normal_form(a);
    CHECK(Matrix<long long>(hf.u * a) == hf.h);
}

TEST_CASE("Hermite normal form") {
    const IntMatrix a = int_matrix({{2, 3, 6}, {4, 1, 2}, {6, 4, 8}});
    const auto hf = hermite_normal_form(a);
    CHECK(IntMatrix(hf.u * a) == hf.h);
    CHECK(is_unimodular(hf.u));
    CHECK(hf.rank == 2);
    CHECK(hf.h.row(2).isZero());
    CHECK(hf.h(0, 0) > 0);
    CHECK(hf.h(1, 0) == 0);
}

TEST_CASE("kernel, saturation and spans") {
    const IntMatrix a = int_matrix({{1, 2, 3}, {2, 4, 6}});
    const IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == 2);
    CHECK(IntMatrix(a * k).isZero());
    CHECK(is_primitive_basis(k));

    const IntMatrix doubled = int_matrix({{2}, {4}});
    CHECK_FALSE(is_primitive_basis(doubled));
    CHECK(same_span(saturate(doubled), int_matrix({{1}, {2}})));

    CHECK(same_span(int_matrix({{1, 0}, {0, 1}}), int_matrix({{1, 1}, {0, 1}})));
    CHECK_FALSE(same_span(int_matrix({{1, 0}, {0, 2}}), identity_matrix(2)));
    CHECK(matrix_rank(a) == 1);
}

TEST_CASE("reduce_basis keeps the span and shortens vectors") {
    const IntMatrix basis = int_matrix({{8, 154}, {-8, -156}, {-3, -58}, {-3, -58}, {0, 1}});
    const IntMatrix reduced = reduce_basis(basis);
    CHECK(same_span(basis, reduced));
    CHECK(reduced.col(1).squaredNorm() < basis.col(1).squaredNorm());
}
