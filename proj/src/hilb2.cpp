#include "hilbsq/hilb2.hpp"

#include <stdexcept>

namespace hilbsq::hilb2 {

namespace {

Integer sq(long long n) { return Integer(n) * n; }

IntVector ns_vector(const Integer& h, const Integer& w, const Integer& delta) {
    IntVector v(3);
    v << h, w, delta;
    return v;
}

// Coefficient vector of a class in {H, W} divided by b, when exact.
IntVector divide_exact(const IntVector& v, const Integer& b) {
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) % b != 0) throw std::logic_error("polarization coordinates not divisible by b");
        out(i) = v(i) / b;
    }
    return out;
}

}  // namespace

IntVector NsHilb2::delta() const {
    IntVector v = IntVector::Zero(lattice.rank());
    v(delta_index) = 1;
    return v;
}

IntVector NsHilb2::lift(const IntVector& base_vector) const {
    if (base_vector.size() != base.rank()) throw std::invalid_argument("lift: vector does not match base rank");
    IntVector v = IntVector::Zero(lattice.rank());
    v.head(base.rank()) = base_vector;
    return v;
}

NsHilb2 ns_hilb2(const IntLattice& base) {
    if (discriminant(base) == 0) throw std::invalid_argument("NS(S) must be non-degenerate");
    std::vector<std::string> labels;
    for (Eigen::Index i = 0; i < base.rank(); ++i) labels.push_back(base.label(i));
    labels.push_back("δ");
    IntLattice delta_part(int_matrix({{-2}}));
    IntLattice sum = direct_sum(IntLattice(base.gram()), delta_part);
    return NsHilb2{base, IntLattice(sum.gram(), std::move(labels)), base.rank()};
}

NsHilb2 ns_hilb2(const k3::SnFamily& family) { return ns_hilb2(family.lattice()); }

std::string AutomorphismVerdict::reason() const {
    const std::string t_str = to_string(t);
    if (square) return "t is a square";
    if (p4t5_solvable) return "P_{" + to_string(4 * t) + "}(5) solvable";
    if (!pt_neg1_solvable) return "P_{" + t_str + "}(-1) unsolvable";
    return "all conditions hold";
}

AutomorphismVerdict automorphism_check(const Integer& t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    AutomorphismVerdict v;
    v.t = t;
    v.square = pell::is_perfect_square(t).has_value();
    if (v.square) return v;

    const pell::PellProblem p4t5(4 * t, 5);
    v.p4t5_certificate = pell::find_certificate(p4t5);
    v.p4t5_solvable = !v.p4t5_certificate && pell::has_solution(p4t5);

    v.minimal_solution = pell::minimal_negative_solution(t);
    v.pt_neg1_solvable = v.minimal_solution.has_value();
    if (v.exists()) {
        const auto& [a, b] = *v.minimal_solution;
        DivisorClass d{IntVector(2)};
        d.coords << b, Integer(-a);
        v.d_class = std::move(d);
    }
    return v;
}

IntVector beauville_class(long long n, int which) {
    if (which == 1) return ns_vector(1, 0, -1);
    if (which == 2) return ns_vector(-1, 8 * n, -1);
    throw std::invalid_argument("Beauville involution index must be 1 or 2");
}

Isometry beauville_action(long long n, int which) {
    const NsHilb2 ns = ns_hilb2(k3::qn(n));
    const IntVector d = beauville_class(n, which);
    if (norm(ns.lattice, d) != 2) throw std::logic_error("Beauville class must have square 2");
    return anti_reflection(ns.lattice, d);
}

namespace {

// v -> <v, W> W - <v, δ> δ - v on any lattice containing W (W^2 = 2) and δ (δ^2 = -2), W ⊥ δ.
Isometry natural_from_classes(const IntLattice& lattice, const IntVector& w, const IntVector& delta) {
    if (norm(lattice, w) != 2 || norm(lattice, delta) != -2 || inner(lattice, w, delta) != 0) {
        throw std::logic_error("natural involution needs W^2 = 2, δ^2 = -2, W ⊥ δ");
    }
    const IntVector gw = lattice.gram() * w;
    const IntVector gd = lattice.gram() * delta;
    IntMatrix m = w * gw.transpose() - delta * gd.transpose() - identity_matrix(lattice.rank());
    return Isometry(lattice, std::move(m));
}

}  // namespace

Isometry natural_involution_action(long long n) {
    const NsHilb2 ns = ns_hilb2(k3::qn(n));
    return natural_from_classes(ns.lattice, ns_vector(0, 1, 0), ns.delta());
}

bool is_natural(const Isometry& f, const NsHilb2& ns) {
    const IntVector d = ns.delta();
    return IntVector(f.apply(d)) == d;
}

IntVector kappa2_generator_formula(long long n) {
    return ns_vector(64 * sq(n) - 5, Integer(-8 * n), -(64 * sq(n) - 7));
}

IntVector kappa1_generator_formula(long long n) {
    return ns_vector(-(64 * sq(n) - 5), 8 * n * (64 * sq(n) - 6), -(64 * sq(n) - 7));
}

IntVector kappa1_printed_formula(long long n) {
    return ns_vector(64 * sq(n) - 5, 8 * n * (64 * sq(n) - 6), -(64 * sq(n) - 7));
}

std::vector<KappaInvariant> kappa_invariants(long long n) {
    const Isometry i1 = beauville_action(n, 1);
    const Isometry i2 = beauville_action(n, 2);
    struct Generator {
        std::string name;
        const Isometry* outer;
        const Isometry* inner;
        int inner_index;
    };
    const Generator generators[] = {{"kappa1", &i2, &i1, 1}, {"kappa2", &i1, &i2, 2}};
    std::vector<KappaInvariant> out;
    for (const auto& s : generators) {
        // κ = outer ∘ inner ∘ outer; its invariant line is outer*(invariant line of inner).
        const Isometry kappa = conjugate(*s.inner, *s.outer);
        KappaInvariant k{s.name, invariant_sublattice(kappa), {}, {}, false};
        k.image_route = s.outer->apply(beauville_class(n, s.inner_index));
        IntMatrix image(3, 1);
        image.col(0) = k.image_route;
        k.routes_agree = k.invariant.basis.cols() == 1 && same_span(k.invariant.basis, image);
        k.generator = k.invariant.basis.col(0);
        if (k.routes_agree && k.generator != k.image_route) k.generator = -k.generator;
        out.push_back(std::move(k));
    }
    return out;
}

Integer family_a_t(long long n) {
    const Integer a = 64 * sq(n) - 7;
    return a * a + 1;
}

Integer family_b_t(long long k) {
    const Integer a = 1600 * sq(k) - 7;
    const Integer num = 1 + a * a;
    if (num % 25 != 0) throw std::logic_error("1 + a^2 not divisible by 25");
    return num / 25;
}

Integer family_b_printed_t(long long k) {
    const Integer k2 = sq(k);
    return Integer(4096) * 25 * k2 * k2 - Integer(32) * 7 * k2 + 2;
}

Integer divisibility_gcd(long long n) {
    return boost::multiprecision::gcd(64 * sq(n) - 5, Integer(8 * n));
}

FamilyRow family_row(Family family, long long parameter) {
    if (parameter < 1) throw std::invalid_argument("family parameter must be at least 1");
    FamilyRow row{};
    row.family = family;
    row.parameter = parameter;
    row.n = family == Family::A ? parameter : 5 * parameter;
    const Integer a = 64 * sq(row.n) - 7;
    const Integer b = family == Family::A ? 1 : 5;
    row.t = family == Family::A ? family_a_t(parameter) : family_b_t(parameter);
    if (family == Family::B) row.printed_t = family_b_printed_t(parameter);
    row.expected = {a, b};
    row.verdict = automorphism_check(row.t);
    row.minimal_matches = row.verdict.minimal_solution && *row.verdict.minimal_solution == row.expected;

    // D = b L - a δ, so L is the {H, W} part of D divided by b.
    const IntVector d1 = kappa1_generator_formula(row.n);
    const IntVector d2 = kappa2_generator_formula(row.n);
    row.l1 = divide_exact(d1.head(2), b);
    row.l2 = divide_exact(d2.head(2), b);
    const IntLattice base = k3::qn(row.n).lattice();
    row.l1_norm = norm(base, row.l1);
    row.l2_norm = norm(base, row.l2);
    return row;
}

std::vector<FamilyRow> automorphism_families(long long n_max, long long k_max) {
    if (n_max < 1 || k_max < 1) throw std::invalid_argument("family bounds must be at least 1");
    std::vector<FamilyRow> rows;
    for (long long n = 1; n <= n_max; ++n) rows.push_back(family_row(Family::A, n));
    for (long long k = 1; k <= k_max; ++k) rows.push_back(family_row(Family::B, k));
    return rows;
}

L23 L23::build() {
    const IntLattice u = hyperbolic_u();
    const IntLattice e8m = rescale(e8(), -1);
    IntLattice lattice = direct_sum({u, u, u, e8m, e8m, rank_one(-2)});
    std::vector<std::string> labels = {"e1", "f1", "e2", "f2", "e3", "f3"};
    for (int block = 1; block <= 2; ++block) {
        for (int i = 1; i <= 8; ++i) labels.push_back("a" + std::to_string(block) + "_" + std::to_string(i));
    }
    labels.push_back("g");
    return L23{IntLattice(lattice.gram(), std::move(labels))};
}

IntVector L23::basis_vector(Eigen::Index i) const {
    IntVector v = IntVector::Zero(lattice.rank());
    v(i) = 1;
    return v;
}

IntLattice alternative_complement() {
    const IntLattice u = hyperbolic_u();
    return direct_sum({u, u, rescale(e8(), -1), rescale(e7(), -1), rank_one(-2), rank_one(-2)});
}

IntLattice expected_complement() {
    const IntLattice u = hyperbolic_u();
    return direct_sum({u, u, rescale(e8(), -1), rescale(e8(), -1), rank_one(-2)});
}

InvolutionCheck verify_involution(long long n) {
    const k3::SnFamily family = k3::qn(n);
    const NsHilb2 ns = ns_hilb2(family);
    const Isometry i1 = beauville_action(n, 1);
    const Isometry phi = natural_involution_action(n);
    const Isometry iota = conjugate(phi, i1);
    Sublattice inv_ns = invariant_sublattice(iota);

    IntMatrix expected(3, 2);
    expected.col(0) = ns_vector(8 * n, -1, Integer(-8 * n));
    expected.col(1) = ns_vector(2, 0, -3);

    // H = e1 + 2 f1, W = 8n f1 + e2 + f2, δ = g.
    const L23 l23 = L23::build();
    IntMatrix embedding = IntMatrix::Zero(23, 3);
    embedding(l23.e(1), 0) = 1;
    embedding(l23.f(1), 0) = 2;
    embedding(l23.f(1), 1) = 8 * n;
    embedding(l23.e(2), 1) = 1;
    embedding(l23.f(2), 1) = 1;
    embedding(l23.g(), 2) = 1;
    if (IntMatrix(embedding.transpose() * l23.lattice.gram() * embedding) != ns.lattice.gram()) {
        throw std::logic_error("embedding does not reproduce the NS Gram matrix");
    }
    if (!is_primitive_basis(embedding)) throw std::logic_error("embedding is not primitive");

    const IntVector big_h = embedding.col(0);
    const IntVector big_w = embedding.col(1);
    const IntVector big_delta = embedding.col(2);
    const Isometry i1_l23 = anti_reflection(l23.lattice, IntVector(big_h - big_delta));
    const Isometry phi_l23 = natural_from_classes(l23.lattice, big_w, big_delta);
    const Isometry iota_l23 = conjugate(phi_l23, i1_l23);
    Sublattice inv_l23 = invariant_sublattice(iota_l23);
    Sublattice complement = orthogonal_complement(l23.lattice, inv_l23.basis);

    const IntMatrix diag = int_matrix({{2, 0}, {0, -2}});
    InvolutionCheck result{
        .n = n,
        .iota_ns = iota,
        .invariant_ns = inv_ns,
        .expected_basis = expected,
        .embedding = embedding,
        .iota_l23 = iota_l23,
        .invariant_l23 = inv_l23,
        .complement = complement,
    };
    result.invariant_matches_expected = same_span(inv_ns.basis, expected);
    result.natural = is_natural(iota, ns);
    result.diag_base_change_ns =
        inv_ns.basis.cols() == 2 ? find_rank_two_base_change(inv_ns.lattice, diag) : std::nullopt;
    result.diag_base_change_l23 =
        inv_l23.basis.cols() == 2 ? find_rank_two_base_change(inv_l23.lattice, diag) : std::nullopt;
    result.complement_signature = signature(complement.lattice);
    result.complement_group = discriminant_group(complement.lattice);
    result.restriction_agrees =
        IntMatrix(iota_l23.matrix() * embedding) == IntMatrix(embedding * iota.matrix());
    result.orthogonal = IntMatrix(inv_l23.basis.transpose() * l23.lattice.gram() * complement.basis).isZero();
    return result;
}

}  // namespace hilbsq::hilb2
