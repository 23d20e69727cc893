#include "hilbsq/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hilbsq {

namespace {

void require_same_rank(const IntLattice& lattice, const IntVector& v) {
    if (v.size() != lattice.rank()) {
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                    " does not match lattice rank " + std::to_string(lattice.rank()));
    }
}

long long to_small(const Integer& v) {
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
        throw std::invalid_argument("entry too large for bounded search");
    }
    return v.convert_to<long long>();
}

}  // namespace

Integer DiscriminantGroup::order() const {
    Integer out = 1;
    for (const auto& f : invariant_factors) out *= f;
    return out;
}

IntLattice::IntLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
    if (gram_ != gram_.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");
    if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != gram_.rows()) {
        throw std::invalid_argument("label count does not match rank");
    }
}

std::string IntLattice::label(Eigen::Index i) const {
    if (!labels_.empty()) return labels_[static_cast<std::size_t>(i)];
    return "b" + std::to_string(i + 1);
}

std::string format_class(const IntLattice& lattice, const IntVector& coords) {
    std::string out;
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        const Integer& c = coords(i);
        if (c == 0) continue;
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag);
        out += lattice.label(i);
    }
    return out.empty() ? "0" : out;
}

IntLattice make_lattice(const IntMatrix& gram) { return IntLattice(gram); }

IntLattice hyperbolic_u() { return IntLattice(int_matrix({{0, 1}, {1, 0}}), {"e", "f"}); }

IntLattice e8() {
    // Dynkin tree with branch node 3: arms {2, 1}, {4}, {5, 6, 7, 8}.
    return IntLattice(int_matrix({
        {2, -1, 0, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0, 0},
        {0, -1, 2, -1, -1, 0, 0, 0},
        {0, 0, -1, 2, 0, 0, 0, 0},
        {0, 0, -1, 0, 2, -1, 0, 0},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, -1},
        {0, 0, 0, 0, 0, 0, -1, 2},
    }));
}

IntLattice e7() {
    // Chain 1..6 with node 7 attached to node 3: arms of lengths 2, 3, 1.
    return IntLattice(int_matrix({
        {2, -1, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0},
        {0, -1, 2, -1, 0, 0, -1},
        {0, 0, -1, 2, -1, 0, 0},
        {0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, -1, 2, 0},
        {0, 0, -1, 0, 0, 0, 2},
    }));
}

IntLattice rank_one(const Integer& k) {
    IntMatrix g(1, 1);
    g(0, 0) = k;
    return IntLattice(g);
}

IntLattice rescale(const IntLattice& lattice, const Integer& factor) {
    if (factor == 0) throw std::invalid_argument("rescale: factor must be nonzero");
    return IntLattice(IntMatrix(lattice.gram() * factor), lattice.labels());
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
    const Eigen::Index n = a.rank() + b.rank();
    IntMatrix g = IntMatrix::Zero(n, n);
    g.topLeftCorner(a.rank(), a.rank()) = a.gram();
    g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        for (Eigen::Index i = 0; i < a.rank(); ++i) labels.push_back(a.label(i));
        for (Eigen::Index i = 0; i < b.rank(); ++i) labels.push_back(b.label(i));
    }
    return IntLattice(std::move(g), std::move(labels));
}

IntLattice direct_sum(std::initializer_list<IntLattice> parts) {
    IntLattice out;
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

Integer inner(const IntLattice& lattice, const IntVector& v, const IntVector& w) {
    require_same_rank(lattice, v);
    require_same_rank(lattice, w);
    return v.dot(lattice.gram() * w);
}

Integer norm(const IntLattice& lattice, const IntVector& v) { return inner(lattice, v, v); }

Integer discriminant(const IntLattice& lattice) { return determinant(lattice.gram()); }

Signature signature(const IntLattice& lattice) {
    // Symmetric Gaussian elimination over Q. A zero diagonal with a nonzero
    // off-diagonal entry a_ij is fixed by the hyperbolic change e_i += e_j.
    Matrix<Rational> a = lattice.gram().cast<Rational>();
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < a.rows(); ++i) active.push_back(i);
    Signature sig;
    while (!active.empty()) {
        auto pivot = std::find_if(active.begin(), active.end(), [&](Eigen::Index i) { return a(i, i) != 0; });
        if (pivot == active.end()) {
            Eigen::Index pi = -1, pj = -1;
            for (auto i : active) {
                for (auto j : active) {
                    if (i != j && a(i, j) != 0) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) {
                sig.n_zero += static_cast<int>(active.size());
                break;
            }
            for (auto k : active) a(pi, k) += a(pj, k);
            for (auto k : active) a(k, pi) += a(k, pj);
            pivot = std::find(active.begin(), active.end(), pi);
        }
        const Eigen::Index p = *pivot;
        const Rational piv = a(p, p);
        (piv > 0 ? sig.n_plus : sig.n_minus) += 1;
        active.erase(pivot);
        for (auto i : active) {
            if (a(i, p) == 0) continue;
            const Rational factor = a(i, p) / piv;
            for (auto j : active) a(i, j) -= factor * a(p, j);
        }
    }
    return sig;
}

bool is_even(const IntLattice& lattice) {
    for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
        if (lattice.gram()(i, i) % 2 != 0) return false;
    }
    return true;
}

bool is_unimodular(const IntLattice& lattice) {
    const Integer d = discriminant(lattice);
    return d == 1 || d == -1;
}

DiscriminantGroup discriminant_group(const IntLattice& lattice) {
    if (discriminant(lattice) == 0) throw std::invalid_argument("discriminant group of a degenerate lattice");
    DiscriminantGroup group;
    for (const auto& f : smith_normal_form(lattice.gram()).invariant_factors()) {
        if (f > 1) group.invariant_factors.push_back(f);
    }
    return group;
}

bool is_p_elementary(const IntLattice& lattice, const Integer& p) {
    const DiscriminantGroup group = discriminant_group(lattice);
    if (group.invariant_factors.empty()) return false;
    for (const auto& f : group.invariant_factors) {
        if (f != p) return false;
    }
    return true;
}

Isometry::Isometry(IntLattice lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != lattice_.rank() || matrix_.cols() != lattice_.rank()) {
        throw std::invalid_argument("isometry matrix does not match lattice rank");
    }
    if (IntMatrix(matrix_.transpose() * lattice_.gram() * matrix_) != lattice_.gram()) {
        throw std::invalid_argument("matrix does not preserve the Gram matrix");
    }
    const Integer det = determinant(matrix_);
    if (det != 1 && det != -1) throw std::invalid_argument("isometry matrix is not unimodular");
}

bool Isometry::is_involution() const {
    return IntMatrix(matrix_ * matrix_) == identity_matrix(matrix_.rows());
}

Isometry make_isometry(const IntLattice& lattice, const IntMatrix& matrix) { return Isometry(lattice, matrix); }

Isometry identity_isometry(const IntLattice& lattice) { return Isometry(lattice, identity_matrix(lattice.rank())); }

Isometry compose(const Isometry& outer, const Isometry& inner_map) {
    if (!(outer.lattice() == inner_map.lattice())) throw std::invalid_argument("compose: different lattices");
    return Isometry(outer.lattice(), outer.matrix() * inner_map.matrix());
}

Isometry reflection(const IntLattice& lattice, const IntVector& d) {
    require_same_rank(lattice, d);
    const Integer dd = norm(lattice, d);
    if (dd == 0) throw std::invalid_argument("reflection in an isotropic vector");
    const IntVector pairing = lattice.gram() * d;
    IntMatrix m = identity_matrix(lattice.rank());
    for (Eigen::Index j = 0; j < lattice.rank(); ++j) {
        const Integer twice = 2 * pairing(j);
        if (twice % dd != 0) {
            throw std::invalid_argument("reflection is not integral: 2(b" + std::to_string(j + 1) +
                                        ", D) not divisible by (D, D) = " + to_string(dd));
        }
        m.col(j) -= (twice / dd) * d;
    }
    return Isometry(lattice, std::move(m));
}

Isometry anti_reflection(const IntLattice& lattice, const IntVector& d) {
    const Isometry r = reflection(lattice, d);
    return Isometry(lattice, IntMatrix(-r.matrix()));
}

Sublattice induced_sublattice(const IntLattice& ambient, const IntMatrix& basis) {
    return {basis, IntLattice(IntMatrix(basis.transpose() * ambient.gram() * basis))};
}

Sublattice invariant_sublattice(const Isometry& f) {
    const IntMatrix shifted = f.matrix() - identity_matrix(f.matrix().rows());
    return induced_sublattice(f.lattice(), integer_kernel(shifted));
}

Sublattice anti_invariant_sublattice(const Isometry& f) {
    const IntMatrix shifted = f.matrix() + identity_matrix(f.matrix().rows());
    return induced_sublattice(f.lattice(), integer_kernel(shifted));
}

Sublattice orthogonal_complement(const IntLattice& lattice, const IntMatrix& basis) {
    if (discriminant(lattice) == 0) throw std::invalid_argument("orthogonal complement in a degenerate lattice");
    if (basis.rows() != lattice.rank()) throw std::invalid_argument("basis does not match lattice rank");
    if (basis.cols() == 0) return induced_sublattice(lattice, identity_matrix(lattice.rank()));
    const IntMatrix pairing = basis.transpose() * lattice.gram();
    return induced_sublattice(lattice, integer_kernel(pairing));
}

Isometry conjugate(const Isometry& f, const Isometry& g) {
    if (!(f.lattice() == g.lattice())) throw std::invalid_argument("conjugate: isometries act on different lattices");
    if (!g.is_involution()) throw std::invalid_argument("conjugate: g must be an involution");
    return Isometry(f.lattice(), g.matrix() * f.matrix() * g.matrix());
}

std::optional<IntMatrix> find_rank_two_base_change(const IntLattice& lattice, const IntMatrix& target,
                                                   long long box) {
    if (lattice.rank() != 2 || target.rows() != 2 || target.cols() != 2) {
        throw std::invalid_argument("rank-two base change search needs 2x2 Gram matrices");
    }
    const long long g00 = to_small(lattice.gram()(0, 0));
    const long long g01 = to_small(lattice.gram()(0, 1));
    const long long g11 = to_small(lattice.gram()(1, 1));
    const long long t00 = to_small(target(0, 0));
    const long long t01 = to_small(target(0, 1));
    const long long t11 = to_small(target(1, 1));
    auto form = [&](long long a, long long b, long long c, long long d) {
        return a * c * g00 + (a * d + b * c) * g01 + b * d * g11;
    };
    std::vector<std::pair<long long, long long>> first, second;
    for (long long a = -box; a <= box; ++a) {
        for (long long b = -box; b <= box; ++b) {
            const long long n = form(a, b, a, b);
            if (n == t00) first.emplace_back(a, b);
            if (n == t11) second.emplace_back(a, b);
        }
    }
    for (const auto& [a, b] : first) {
        for (const auto& [c, d] : second) {
            const long long det = a * d - b * c;
            if ((det == 1 || det == -1) && form(a, b, c, d) == t01) {
                return int_matrix({{a, c}, {b, d}});
            }
        }
    }
    return std::nullopt;
}

}  // namespace hilbsq
