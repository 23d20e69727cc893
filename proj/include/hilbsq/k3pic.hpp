#pragma once

// Rank-two K3 Picard lattices with Gram [[4, b], [b, 2c]].

#include "hilbsq/lattice.hpp"

#include <string>
#include <vector>

namespace hilbsq::k3 {

inline constexpr long long kDefaultCoeffBound = 500;

/// Reads HILBSQ_COEFF_BOUND, falling back to kDefaultCoeffBound.
long long default_coeff_bound();

struct RankTwoForm {
    Integer b;
    Integer c;

    IntMatrix gram() const;
    /// -disc = b^2 - 8c.
    Integer r() const { return b * b - 8 * c; }
    IntLattice lattice(std::string first = "h1", std::string second = "h2") const;
};

struct SnFamily {
    long long n;
    RankTwoForm form;

    IntLattice lattice() const { return form.lattice("H", "W"); }
    IntVector h() const { return int_vector({1, 0}); }
    IntVector w() const { return int_vector({0, 1}); }
    /// 8nW - H.
    IntVector second_polarization() const { return int_vector({-1, 8 * n}); }
};

/// Q_n = [[4, 8n], [8n, 2]]; throws for n < 1.
SnFamily qn(long long n);

/// 4 v^2 == (v . h1)^2 - r * beta^2 for v = (alpha, beta).
bool norm_identity_check(const RankTwoForm& form, const IntVector& v);

/// Nonzero vectors of norm 0 exist iff r is a perfect square.
bool has_isotropic_class(const RankTwoForm& form);

enum class SearchMethod { Pell, Definite, Isotropic };

struct ClassSearch {
    Integer target;                      ///< the norm 2k searched for
    bool exists = false;                 ///< exact answer: some class of that norm exists
    SearchMethod method = SearchMethod::Pell;
    bool pell_solvable = false;          ///< x^2 - r y^2 = 8k has integer solutions (Pell method only)
    bool enumeration_found = false;      ///< the bounded enumeration found a class
    std::vector<DivisorClass> classes;   ///< witnesses: reconstructed plus enumerated, deduplicated
};

/// Decides whether classes v with v^2 = two_k exist, and collects witnesses.
///
/// Indefinite non-square forms go through x^2 - r y^2 = 8k: when the
/// equation has no solution the answer is empty; otherwise each solution
/// class is followed under the fundamental unit until (x mod 4, y mod 4)
/// repeats, and residues with x = b*y (mod 4) give v = ((x - b y)/4, y).
/// Definite and isotropic forms are decided by finite enumeration. Every
/// method also merges a box enumeration with |coords| <= coeff_bound.
ClassSearch classes_of_square(const RankTwoForm& form, const Integer& two_k,
                              long long coeff_bound = kDefaultCoeffBound);

/// Primitive generators of the isotropic lines (empty unless r is a nonzero square).
std::vector<IntVector> isotropic_directions(const RankTwoForm& form);

/// Ampleness on a form without (-2) or isotropic classes, where the ample cone
/// is the component of the positive cone containing the reference class.
/// Throws std::invalid_argument when the form has such classes.
bool is_ample(const RankTwoForm& form, const IntVector& v, const IntVector& reference);
bool is_ample(const SnFamily& family, const IntVector& v);

struct VeryAmpleReport {
    bool very_ample = true;
    std::vector<std::string> violations;
    std::vector<DivisorClass> witnesses;
};

/// Lattice-level test of the three numerical conditions for very ampleness of
/// a class with square >= 4. Conservative: any lattice class meeting a
/// condition counts as a violation.
VeryAmpleReport very_ample_check(const RankTwoForm& form, const IntVector& polarization,
                                 long long coeff_bound = kDefaultCoeffBound);

}  // namespace hilbsq::k3
