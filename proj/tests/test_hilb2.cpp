#include "doctest.h"

#include "hilbsq/hilb2.hpp"

using namespace hilbsq;
using namespace hilbsq::hilb2;

namespace {

IntVector hwd(long long h, long long w, long long d) { return int_vector({h, w, d}); }

}  // namespace

TEST_CASE("ns_hilb2") {
    const NsHilb2 ns = ns_hilb2(k3::qn(1));
    CHECK(ns.lattice.rank() == 3);
    CHECK(ns.lattice.label(2) == "δ");
    CHECK(discriminant(ns.lattice) == 112);
    CHECK(norm(ns.lattice, ns.delta()) == -2);
    CHECK(ns.lift(int_vector({1, 0})) == hwd(1, 0, 0));
    const NsHilb2 rank_two = ns_hilb2(rank_one(2 * 5));
    CHECK(rank_two.lattice.rank() == 2);
    CHECK(rank_two.lattice.gram() == int_matrix({{10, 0}, {0, -2}}));
}

TEST_CASE("automorphism_check") {
    const AutomorphismVerdict four = automorphism_check(4);
    CHECK_FALSE(four.exists());
    CHECK(four.reason() == "t is a square");
    const AutomorphismVerdict five = automorphism_check(5);
    CHECK_FALSE(five.exists());
    CHECK(five.p4t5_solvable);
    CHECK(five.reason() == "P_{20}(5) solvable");
    const AutomorphismVerdict two = automorphism_check(2);
    CHECK(two.exists());
    CHECK(two.minimal_solution == pell::PellSolution{1, 1});
    CHECK(two.d_class->coords == int_vector({1, -1}));
    CHECK(two.p4t5_certificate == Integer(8));
    const AutomorphismVerdict fam = automorphism_check(3250);
    CHECK(fam.exists());
    CHECK(fam.minimal_solution == pell::PellSolution{57, 1});
    CHECK(automorphism_check(3).reason() == "P_{3}(-1) unsolvable");
    CHECK_THROWS_AS(automorphism_check(1), std::invalid_argument);
}

TEST_CASE("D has square 2 whenever an automorphism exists") {
    for (long long t = 2; t <= 400; ++t) {
        const AutomorphismVerdict v = automorphism_check(t);
        if (!v.exists()) continue;
        const IntLattice l = direct_sum(rank_one(2 * t), rank_one(-2));
        CHECK(norm(l, v.d_class->coords) == 2);
    }
}

TEST_CASE("Beauville involutions") {
    for (long long n = 1; n <= 4; ++n) {
        const Isometry i1 = beauville_action(n, 1);
        CHECK(i1.matrix() == int_matrix({{3, 8 * n, 2}, {0, -1, 0}, {-4, -8 * n, -3}}));
        CHECK(i1.apply(hwd(0, 0, 1)) == hwd(2, 0, -3));
        const NsHilb2 ns = ns_hilb2(k3::qn(n));
        CHECK(norm(ns.lattice, beauville_class(n, 2)) == 2);
        CHECK(beauville_action(n, 2).is_involution());
    }
    CHECK_THROWS_AS(beauville_class(1, 3), std::invalid_argument);
}

TEST_CASE("natural involution") {
    for (long long n = 1; n <= 8; ++n) {
        const NsHilb2 ns = ns_hilb2(k3::qn(n));
        const Isometry phi = natural_involution_action(n);
        CHECK(phi.apply(hwd(1, 0, 0)) == hwd(-1, 8 * n, 0));
        CHECK(phi.apply(hwd(0, 0, 1)) == hwd(0, 0, 1));
        CHECK(phi.is_involution());
        CHECK(is_natural(phi, ns));
        CHECK_FALSE(is_natural(beauville_action(n, 1), ns));
        CHECK_FALSE(is_natural(beauville_action(n, 2), ns));
        CHECK(is_natural(identity_isometry(ns.lattice), ns));
    }
}

TEST_CASE("kappa invariants") {
    const NsHilb2 ns = ns_hilb2(k3::qn(1));
    const auto inv = kappa_invariants(1);
    REQUIRE(inv.size() == 2);
    for (const auto& k : inv) {
        CHECK(k.invariant.basis.cols() == 1);
        CHECK(k.routes_agree);
        CHECK(norm(ns.lattice, k.generator) == 2);
        const IntVector expected = k.name == "kappa1" ? hwd(-59, 464, -57) : hwd(59, -8, -57);
        CHECK(k.generator == expected);
    }
    CHECK(kappa2_generator_formula(1) == hwd(59, -8, -57));
    CHECK(kappa1_generator_formula(1) == hwd(-59, 464, -57));
    CHECK(norm(ns.lattice, kappa1_printed_formula(1)) == 876034);
}

TEST_CASE("conjugation identity on the Beauville pair") {
    for (long long n = 1; n <= 5; ++n) {
        const Isometry i1 = beauville_action(n, 1);
        const Isometry i2 = beauville_action(n, 2);
        const IntMatrix image1 = i2.matrix() * invariant_sublattice(i1).basis;
        CHECK(same_span(image1, invariant_sublattice(conjugate(i1, i2)).basis));
        const IntMatrix image2 = i1.matrix() * invariant_sublattice(i2).basis;
        CHECK(same_span(image2, invariant_sublattice(conjugate(i2, i1)).basis));
    }
}

TEST_CASE("t families") {
    CHECK(family_a_t(1) == 3250);
    CHECK(family_a_t(2) == 62002);
    CHECK(family_b_t(1) == 101506);
    CHECK(family_b_printed_t(1) == 102178);
    const FamilyRow a2 = family_row(Family::A, 2);
    CHECK(a2.t == 62002);
    CHECK(a2.verdict.minimal_solution == pell::PellSolution{249, 1});
    CHECK(a2.minimal_matches);
    const FamilyRow b1 = family_row(Family::B, 1);
    CHECK(b1.n == 5);
    CHECK(b1.verdict.minimal_solution == pell::PellSolution{1593, 5});
    CHECK(b1.l1_norm == 2 * b1.t);
    CHECK(b1.printed_t == Integer(102178));
    for (const FamilyRow& row : automorphism_families(4, 2)) {
        CHECK_FALSE(row.verdict.square);
        CHECK_FALSE(row.verdict.p4t5_solvable);
        CHECK(row.verdict.p4t5_certificate.has_value());
        CHECK(row.minimal_matches);
        CHECK(row.t % 2 == 0);
    }
    CHECK_THROWS_AS(family_row(Family::A, 0), std::invalid_argument);
    CHECK(divisibility_gcd(1) == 1);
}

TEST_CASE("verify_involution") {
    const InvolutionCheck r = verify_involution(1);
    CHECK(r.iota_ns.is_involution());
    CHECK_FALSE(r.natural);
    CHECK(r.invariant_matches_expected);
    const IntMatrix& b = r.expected_basis;
    CHECK(IntVector(b.col(0)) == hwd(8, -1, -8));
    CHECK(IntVector(b.col(1)) == hwd(2, 0, -3));
    const IntMatrix gram = b.transpose() * r.iota_ns.lattice().gram() * b;
    CHECK(gram == int_matrix({{2, 0}, {0, -2}}));
    CHECK(r.complement_group.invariant_factors == std::vector<Integer>{2});
    CHECK(r.complement_signature == Signature{2, 19, 0});
    CHECK(r.restriction_agrees);
    CHECK(r.orthogonal);
    CHECK(r.diag_base_change_l23.has_value());
    // i1*(W) = 8nH - W - 8nδ.
    CHECK(beauville_action(1, 1).apply(hwd(0, 1, 0)) == hwd(8, -1, -8));
    CHECK_THROWS_AS(verify_involution(0), std::invalid_argument);
}

TEST_CASE("involution structure for n <= 8") {
    for (long long n = 1; n <= 8; ++n) {
        const InvolutionCheck r = verify_involution(n);
        CHECK(r.invariant_l23.basis.cols() + r.complement.basis.cols() == 23);
        CHECK(r.orthogonal);
        CHECK(r.iota_l23.is_involution());
        const IntMatrix embedded_gram = r.embedding.transpose() * L23::build().lattice.gram() * r.embedding;
        CHECK(embedded_gram == ns_hilb2(k3::qn(n)).lattice.gram());
        CHECK(is_primitive_basis(r.embedding));
    }
}

TEST_CASE("candidate complements") {
    CHECK(discriminant_group(expected_complement()).invariant_factors == std::vector<Integer>{2});
    CHECK(discriminant_group(alternative_complement()).invariant_factors == std::vector<Integer>{2, 2, 2});
    CHECK(signature(expected_complement()) == Signature{2, 19, 0});
    CHECK(signature(alternative_complement()) == Signature{2, 19, 0});
}
