#pragma once

// Néron–Severi lattices of Hilbert squares of K3 surfaces and the involutions
// acting on them.

#include "hilbsq/k3pic.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/pell.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbsq::hilb2 {

/// base ⊕ <-2>, with δ as the last basis vector.
struct NsHilb2 {
    IntLattice base;
    IntLattice lattice;
    Eigen::Index delta_index;

    IntVector delta() const;
    /// The class [v] of a base vector v.
    IntVector lift(const IntVector& base_vector) const;
};

NsHilb2 ns_hilb2(const IntLattice& base);
/// NS of S_n^[2] in the basis {H, W, δ}.
NsHilb2 ns_hilb2(const k3::SnFamily& family);

struct AutomorphismVerdict {
    Integer t;
    bool square = false;          ///< t is a perfect square
    bool p4t5_solvable = false;   ///< x^2 - 4t y^2 = 5 has a solution
    bool pt_neg1_solvable = false;///< x^2 - t y^2 = -1 has a solution
    std::optional<pell::PellSolution> minimal_solution;  ///< (a, b) for x^2 - t y^2 = -1
    std::optional<DivisorClass> d_class;  ///< b[L] - aδ in the basis {L, δ}
    std::optional<Integer> p4t5_certificate;

    bool exists() const { return !square && !p4t5_solvable && pt_neg1_solvable; }
    std::string reason() const;
};

/// Decides whether S^[2] has a non-trivial automorphism for Pic(S) = ZL, L^2 = 2t.
AutomorphismVerdict automorphism_check(const Integer& t);

/// Anti-reflection in [H] - δ (which = 1) or [8nW - H] - δ (which = 2).
Isometry beauville_action(long long n, int which);

/// The class [H] - δ or [8nW - H] - δ.
IntVector beauville_class(long long n, int which);

/// v -> <v, W> W - <v, δ> δ - v, fixing exactly span{W, δ}.
Isometry natural_involution_action(long long n);

/// True iff f fixes δ.
bool is_natural(const Isometry& f, const NsHilb2& ns);

struct KappaInvariant {
    std::string name;           ///< "kappa1" or "kappa2"
    Sublattice invariant;       ///< kernel of M - I for the conjugated involution
    IntVector generator;        ///< normalized to the image of the Beauville class
    IntVector image_route;      ///< i_j^*([d_k] - δ)
    bool routes_agree = false;  ///< kernel and image span the same line
};

/// Invariant lattices of κ1 = i2 i1 i2 and κ2 = i1 i2 i1.
std::vector<KappaInvariant> kappa_invariants(long long n);

/// Closed forms for the κ generators.
IntVector kappa2_generator_formula(long long n);  ///< (64n²-5)H - 8nW - (64n²-7)δ
IntVector kappa1_generator_formula(long long n);  ///< -(64n²-5)H + 8n(64n²-6)W - (64n²-7)δ
IntVector kappa1_printed_formula(long long n);    ///< (64n²-5)H + 8n(64n²-6)W - (64n²-7)δ as printed

enum class Family { A, B };

struct FamilyRow {
    Family family;
    long long parameter;       ///< n for family A, k for family B
    long long n;               ///< the S_n index (n = 5k for family B)
    Integer t;
    pell::PellSolution expected;  ///< (64n²-7, 1) or (1600k²-7, 5)
    AutomorphismVerdict verdict;
    bool minimal_matches = false;
    IntVector l1;              ///< L with b*L + aδ = derived D1, coordinates in {H, W}
    IntVector l2;              ///< L with b*L + aδ = D2
    Integer l1_norm;
    Integer l2_norm;
    std::optional<Integer> printed_t;  ///< family B: the printed coefficient's value
};

/// t = (64n²-7)² + 1.
Integer family_a_t(long long n);
/// t = (1 + (1600k²-7)²) / 25 = 102400k⁴ - 896k² + 2.
Integer family_b_t(long long k);
/// 2¹²·5²k⁴ - 2⁵·7k² + 2, the printed form of the family-B polynomial.
Integer family_b_printed_t(long long k);

std::vector<FamilyRow> automorphism_families(long long n_max, long long k_max);
FamilyRow family_row(Family family, long long parameter);

/// gcd(64n² - 5, 8n).
Integer divisibility_gcd(long long n);

/// U³ ⊕ E8(-1)² ⊕ <-2> with generators e1, f1, e2, f2, e3, f3, the two E8
/// blocks, and g.
struct L23 {
    IntLattice lattice;

    static L23 build();
    Eigen::Index e(int i) const { return 2 * (i - 1); }
    Eigen::Index f(int i) const { return 2 * (i - 1) + 1; }
    Eigen::Index g() const { return 22; }
    IntVector basis_vector(Eigen::Index i) const;
};

/// Alternative complement U² ⊕ E8(-1) ⊕ E7(-1) ⊕ <-2>².
IntLattice alternative_complement();
/// U² ⊕ E8(-1)² ⊕ <-2>.
IntLattice expected_complement();

struct InvolutionCheck {
    long long n;
    Isometry iota_ns;                 ///< ι* = i1* φ* i1* on NS, basis {H, W, δ}
    Sublattice invariant_ns;
    IntMatrix expected_basis;         ///< columns 8nH - W - 8nδ, 2H - 3δ
    bool invariant_matches_expected = false;
    bool natural = true;              ///< is_natural(ι*)
    IntMatrix embedding;              ///< 23 x 3, images of H, W, δ in L23
    Isometry iota_l23;
    Sublattice invariant_l23;
    std::optional<IntMatrix> diag_base_change_ns{}; ///< P with P^T G P = diag(2, -2)
    std::optional<IntMatrix> diag_base_change_l23{};
    Sublattice complement;
    Signature complement_signature{};
    DiscriminantGroup complement_group{};
    bool restriction_agrees = false;  ///< ι* on L23 restricts to ι* on NS
    bool orthogonal = false;          ///< invariant ⊥ complement
};

/// Builds ι* on NS(S_n^[2]) and on L23 and computes its invariant lattice and
/// the orthogonal complement.
InvolutionCheck verify_involution(long long n);

}  // namespace hilbsq::hilb2
