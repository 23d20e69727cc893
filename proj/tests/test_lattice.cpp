#include "doctest.h"

#include "hilbsq/hilb2.hpp"
#include "hilbsq/k3pic.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/verify/oracles.hpp"

#include <random>

using namespace hilbsq;

namespace {

IntMatrix column(std::initializer_list<long long> entries) { return IntMatrix(int_vector(entries)); }

IntLattice random_lattice(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> entry(-3, 3), dim(1, 4);
    for (;;) {
        const Eigen::Index n = dim(rng);
        IntMatrix g(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
        }
        if (discriminant(IntLattice(g)) != 0) return IntLattice(g);
    }
}

}  // namespace

TEST_CASE("make_lattice") {
    CHECK(make_lattice(int_matrix({{0, 1}, {1, 0}})) == hyperbolic_u());
    CHECK(make_lattice(int_matrix({{2}})) == rank_one(2));
    CHECK_THROWS_AS(make_lattice(int_matrix({{0, 1}, {2, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("standard lattices") {
    CHECK(discriminant(hyperbolic_u()) == -1);
    CHECK(discriminant(e8()) == 1);
    CHECK(discriminant(e7()) == 2);
    CHECK(discriminant(direct_sum(hyperbolic_u(), rank_one(-2))) == 2);
    CHECK(signature(e8()) == Signature{8, 0, 0});
    CHECK(is_even(e8()));
    CHECK(is_unimodular(e8()));
    CHECK(signature(rescale(e8(), -1)) == Signature{0, 8, 0});
    CHECK(e8().rank() == 8);
    CHECK(Rational(discriminant(e8())) == oracle::cofactor_determinant(e8().gram().cast<Rational>()));
}

TEST_CASE("inner and norm") {
    const IntLattice u = hyperbolic_u();
    CHECK(inner(u, int_vector({1, 0}), int_vector({0, 1})) == 1);
    CHECK(norm(u, int_vector({1, 0})) == 0);
    const IntLattice q1(int_matrix({{4, 8}, {8, 2}}));
    CHECK(norm(q1, int_vector({1, 1})) == 22);
    CHECK(norm(q1, int_vector({0, 0})) == 0);
    CHECK_THROWS_AS(norm(q1, int_vector({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("discriminant and signature") {
    const IntLattice q1(int_matrix({{4, 8}, {8, 2}}));
    CHECK(discriminant(q1) == -56);
    CHECK(signature(q1) == Signature{1, 1, 0});
    const IntLattice t = direct_sum(rank_one(2), rank_one(-2));
    CHECK(discriminant(t) == -4);
    CHECK(signature(t) == Signature{1, 1, 0});
    CHECK(is_even(t));
    const IntLattice l23 = hilb2::L23::build().lattice;
    CHECK(discriminant(l23) == 2);
    CHECK(signature(l23) == Signature{3, 20, 0});
    CHECK(signature(IntLattice(int_matrix({{0, 0}, {0, 1}}))) == Signature{1, 0, 1});
    CHECK(signature(hyperbolic_u()) == Signature{1, 1, 0});
    CHECK_FALSE(is_even(rank_one(1)));
}

TEST_CASE("discriminant groups") {
    const DiscriminantGroup t = discriminant_group(direct_sum(rank_one(2), rank_one(-2)));
    CHECK(t.invariant_factors == std::vector<Integer>{2, 2});
    CHECK(t.order() == 4);
    CHECK(is_p_elementary(direct_sum(rank_one(2), rank_one(-2)), 2));
    CHECK(discriminant_group(hyperbolic_u()).length() == 0);
    CHECK(discriminant_group(rank_one(-2)).invariant_factors == std::vector<Integer>{2});
    CHECK_FALSE(is_p_elementary(rank_one(4), 2));
    CHECK_THROWS_AS(discriminant_group(IntLattice(int_matrix({{0, 0}, {0, 1}}))), std::invalid_argument);
}

TEST_CASE("isometries") {
    const IntLattice u = hyperbolic_u();
    CHECK_NOTHROW(make_isometry(u, identity_matrix(2)));
    CHECK_NOTHROW(make_isometry(u, IntMatrix(-identity_matrix(2))));
    CHECK_NOTHROW(make_isometry(u, int_matrix({{0, 1}, {1, 0}})));
    CHECK_THROWS_AS(make_isometry(u, int_matrix({{1, 1}, {0, 1}})), std::invalid_argument);
    const Isometry swap = make_isometry(u, int_matrix({{0, 1}, {1, 0}}));
    CHECK(swap.is_involution());
    CHECK(compose(swap, swap).matrix() == identity_matrix(2));
}

TEST_CASE("reflections") {
    const IntLattice a = direct_sum({hyperbolic_u(), rank_one(-2), rank_one(2)});
    const IntVector d = int_vector({1, 1, 1, 0});  // norm 0, not allowed
    CHECK_THROWS_AS(reflection(a, d), std::invalid_argument);
    CHECK_THROWS_AS(reflection(hyperbolic_u(), int_vector({1, 0})), std::invalid_argument);
    // (1, -1, 0, 0) has norm -2 in U.
    const IntVector root = int_vector({1, -1, 0, 0});
    const Isometry r = reflection(a, root);
    CHECK(r.apply(root) == IntVector(-root));
    CHECK(r.is_involution());
    const Isometry s = anti_reflection(a, root);
    CHECK(s.apply(root) == root);
    CHECK(s.is_involution());
    // 2 (e2, e1) / (e1, e1) = 1/2 is not an integer.
    CHECK_THROWS_AS(reflection(IntLattice(int_matrix({{4, 1}, {1, 2}})), int_vector({1, 0})), std::invalid_argument);
}

TEST_CASE("reflections preserve norms on random vectors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> c(-5, 5);
    const IntLattice l = direct_sum({hyperbolic_u(), rank_one(-2), rank_one(1)});
    for (const IntVector& d : {int_vector({1, -1, 0, 0}), int_vector({0, 0, 1, 0}), int_vector({0, 0, 0, 1}),
                               int_vector({1, 1, 0, 0})}) {
        const Isometry r = reflection(l, d);
        CHECK(r.matrix() * r.matrix() == identity_matrix(4));
        for (int k = 0; k < 20; ++k) {
            const IntVector v = int_vector({c(rng), c(rng), c(rng), c(rng)});
            CHECK(norm(l, r.apply(v)) == norm(l, v));
        }
    }
}

TEST_CASE("invariant sublattices") {
    const IntLattice ns = hilb2::ns_hilb2(k3::qn(1)).lattice;
    CHECK(invariant_sublattice(identity_isometry(ns)).basis.cols() == 3);
    CHECK(invariant_sublattice(make_isometry(ns, IntMatrix(-identity_matrix(3)))).basis.cols() == 0);
    const IntVector d = int_vector({1, 0, -1});
    const Sublattice inv = invariant_sublattice(anti_reflection(ns, d));
    CHECK(inv.basis.cols() == 1);
    CHECK(same_span(inv.basis, IntMatrix(d)));
    CHECK(inv.lattice.gram() == int_matrix({{2}}));
}

TEST_CASE("orthogonal complements") {
    const IntLattice u = hyperbolic_u();
    const Sublattice perp = orthogonal_complement(u, column({1, 1}));
    CHECK(same_span(perp.basis, column({1, -1})));
    CHECK(perp.lattice.gram() == int_matrix({{-2}}));
    CHECK(orthogonal_complement(u, IntMatrix(2, 0)).basis.cols() == 2);

    const hilb2::L23 l23 = hilb2::L23::build();
    IntMatrix span = IntMatrix::Zero(23, 2);
    span(l23.e(1), 0) = 1;
    span(l23.f(1), 0) = 1;
    span(l23.g(), 1) = 1;
    const Sublattice c = orthogonal_complement(l23.lattice, span);
    CHECK(c.basis.cols() == 21);
    CHECK(signature(c.lattice) == Signature{2, 19, 0});
    CHECK(discriminant_group(c.lattice).invariant_factors == std::vector<Integer>{2});
    CHECK(IntMatrix(span.transpose() * l23.lattice.gram() * c.basis).isZero());
    CHECK_THROWS_AS(orthogonal_complement(IntLattice(int_matrix({{0, 0}, {0, 1}})), column({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("conjugation") {
    const IntLattice ns = hilb2::ns_hilb2(k3::qn(2)).lattice;
    const Isometry i1 = anti_reflection(ns, int_vector({1, 0, -1}));
    const Isometry i2 = anti_reflection(ns, int_vector({-1, 16, -1}));
    const Isometry id = identity_isometry(ns);
    CHECK(conjugate(i2, id).matrix() == i2.matrix());
    CHECK(conjugate(id, i1).matrix() == identity_matrix(3));
    const Isometry k2 = conjugate(i2, i1);
    CHECK(invariant_sublattice(k2).basis.cols() == 1);
    CHECK_THROWS_AS(conjugate(i1, compose(i1, i2)), std::invalid_argument);
}

TEST_CASE("lattice properties on random inputs") {
    std::mt19937_64 rng(11);
    for (int c = 0; c < 40; ++c) {
        const IntLattice a = random_lattice(rng);
        const IntLattice b = random_lattice(rng);
        CHECK(discriminant(direct_sum(a, b)) == discriminant(a) * discriminant(b));
        const auto [plus, minus] = oracle::numeric_signature(a.gram());
        CHECK(signature(a) == Signature{plus, minus, 0});
        CHECK(Rational(discriminant(a)) == oracle::cofactor_determinant(a.gram().cast<Rational>()));
    }
}

TEST_CASE("involution eigenspaces fill the lattice") {
    const IntLattice l23 = hilb2::L23::build().lattice;
    for (long long n = 1; n <= 3; ++n) {
        const Isometry iota = hilb2::verify_involution(n).iota_l23;
        const Sublattice plus = invariant_sublattice(iota);
        const Sublattice minus = anti_invariant_sublattice(iota);
        CHECK(plus.basis.cols() + minus.basis.cols() == 23);
        CHECK(is_primitive_basis(plus.basis));
        CHECK(is_primitive_basis(minus.basis));
    }
    CHECK(l23.rank() == 23);
}

TEST_CASE("rank-two base change search") {
    const IntLattice l(int_matrix({{-110, -68}, {-68, -42}}));
    const auto p = find_rank_two_base_change(l, int_matrix({{2, 0}, {0, -2}}));
    REQUIRE(p.has_value());
    CHECK(IntMatrix(p->transpose() * l.gram() * *p) == int_matrix({{2, 0}, {0, -2}}));
    CHECK_FALSE(find_rank_two_base_change(direct_sum(rank_one(2), rank_one(2)), int_matrix({{2, 0}, {0, -2}})));
}

TEST_CASE("format_class") {
    const IntLattice ns = hilb2::ns_hilb2(k3::qn(1)).lattice;
    CHECK(format_class(ns, int_vector({59, -8, -57})) == "59H - 8W - 57δ");
    CHECK(format_class(ns, int_vector({-1, 1, 0})) == "-H + W");
    CHECK(format_class(ns, int_vector({0, 0, 0})) == "0");
    CHECK(format_class(hyperbolic_u(), int_vector({2, 1})) == "2e + f");
}
