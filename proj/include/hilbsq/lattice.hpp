#pragma once

// Integral lattices given by symmetric Gram matrices, their invariants and
// isometries. Isometry matrices store the images of basis vectors as columns,
// so composing g after f is the product M_g * M_f.

#include "hilbsq/integer.hpp"
#include "hilbsq/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbsq {

struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct DiscriminantGroup {
    std::vector<Integer> invariant_factors;  ///< d_1 | d_2 | ..., each > 1

    std::size_t length() const { return invariant_factors.size(); }
    Integer order() const;
};

class IntLattice {
public:
    IntLattice() = default;
    /// Throws std::invalid_argument unless gram is square and symmetric.
    explicit IntLattice(IntMatrix gram, std::vector<std::string> labels = {});

    Eigen::Index rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of basis vector i, or "b<i>" when unlabeled.
    std::string label(Eigen::Index i) const;

    friend bool operator==(const IntLattice& a, const IntLattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
    std::vector<std::string> labels_;
};

/// Integer coordinate vector in the basis of an owning lattice.
struct DivisorClass {
    IntVector coords;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coords.size() == b.coords.size() && a.coords == b.coords;
    }
};

/// Renders a class as e.g. "59H - 8W - 57δ" using the lattice labels.
std::string format_class(const IntLattice& lattice, const IntVector& coords);

IntLattice make_lattice(const IntMatrix& gram);

IntLattice hyperbolic_u();
IntLattice e8();
IntLattice e7();
IntLattice rank_one(const Integer& k);
IntLattice rescale(const IntLattice& lattice, const Integer& factor);
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);
IntLattice direct_sum(std::initializer_list<IntLattice> parts);

Integer inner(const IntLattice& lattice, const IntVector& v, const IntVector& w);
Integer norm(const IntLattice& lattice, const IntVector& v);

Integer discriminant(const IntLattice& lattice);
Signature signature(const IntLattice& lattice);
bool is_even(const IntLattice& lattice);
bool is_unimodular(const IntLattice& lattice);

/// Invariant factors of L^dual / L. Throws for degenerate lattices.
DiscriminantGroup discriminant_group(const IntLattice& lattice);
bool is_p_elementary(const IntLattice& lattice, const Integer& p);

class Isometry {
public:
    /// Throws std::invalid_argument unless M^T G M = G and det M = +-1.
    Isometry(IntLattice lattice, IntMatrix matrix);

    const IntLattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& v) const { return matrix_ * v; }
    bool is_involution() const;

private:
    IntLattice lattice_;
    IntMatrix matrix_;
};

Isometry make_isometry(const IntLattice& lattice, const IntMatrix& matrix);
Isometry identity_isometry(const IntLattice& lattice);
Isometry compose(const Isometry& outer, const Isometry& inner);

/// l -> l - 2 (l, D) / (D, D) D. Requires (D, D) != 0 and integrality on every
/// basis vector.
Isometry reflection(const IntLattice& lattice, const IntVector& d);
/// The negative of reflection(lattice, d): fixes D and negates its complement.
Isometry anti_reflection(const IntLattice& lattice, const IntVector& d);

/// A primitive sublattice: basis columns in ambient coordinates, plus the
/// lattice structure induced on that basis.
struct Sublattice {
    IntMatrix basis;
    IntLattice lattice;
};

/// Lattice structure restricted to the column span of basis.
Sublattice induced_sublattice(const IntLattice& ambient, const IntMatrix& basis);

/// Fixed vectors of f: primitive basis of ker(M - I).
Sublattice invariant_sublattice(const Isometry& f);
/// Vectors sent to their negatives: primitive basis of ker(M + I).
Sublattice anti_invariant_sublattice(const Isometry& f);

/// {v : (v, s) = 0 for every basis column s}. Throws for degenerate lattices.
Sublattice orthogonal_complement(const IntLattice& lattice, const IntMatrix& basis);

/// Pullback of g o f o g: M_g * M_f * M_g. Requires g to be an involution.
Isometry conjugate(const Isometry& f, const Isometry& g);

/// Searches for an integer base change P (entries bounded by box) with
/// P^T G P = target and det P = +-1. Only rank-2 lattices are supported.
std::optional<IntMatrix> find_rank_two_base_change(const IntLattice& lattice, const IntMatrix& target,
                                                   long long box = 64);

}  // namespace hilbsq
