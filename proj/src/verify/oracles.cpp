#include "hilbsq/verify/oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hilbsq::oracle {

std::optional<std::int64_t> square_root_if_square(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) return static_cast<std::int64_t>(r);
    return std::nullopt;
}

namespace {

// Squares modulo 64, as a bit mask over the residue.
constexpr std::uint64_t kSquaresMod64 = [] {
    std::uint64_t mask = 0;
    for (std::uint64_t x = 0; x < 64; ++x) mask |= std::uint64_t{1} << (x * x % 64);
    return mask;
}();

// Squares modulo 63 * 65 * 11 * 17, packed into bits.
constexpr std::uint32_t kFilterModulus = 63 * 65 * 11 * 17;

const std::vector<std::uint64_t>& square_residues() {
    static const std::vector<std::uint64_t> bits = [] {
        std::vector<std::uint64_t> out(kFilterModulus / 64 + 1, 0);
        for (std::uint64_t x = 0; x < kFilterModulus; ++x) {
            const std::uint64_t r = x * x % kFilterModulus;
            out[r / 64] |= std::uint64_t{1} << (r % 64);
        }
        return out;
    }();
    return bits;
}

}  // namespace

std::optional<IntPair> brute_force_fundamental(std::int64_t d, std::int64_t y_limit) {
    if (d < 2) throw std::invalid_argument("brute_force_fundamental: d must be at least 2");
    const std::vector<std::uint64_t>& residues = square_residues();
    const auto ud = static_cast<std::uint64_t>(d);
    const std::uint32_t m = kFilterModulus;
    const auto two_d_mod = static_cast<std::uint32_t>(2 * ud % m);
    // v = d*y^2 + 1 and its increment d*(2y + 1), both modulo 2^64 and modulo m.
    std::uint64_t low = ud + 1;
    std::uint64_t low_step = 3 * ud;
    auto res = static_cast<std::uint32_t>((ud + 1) % m);
    auto res_step = static_cast<std::uint32_t>(3 * ud % m);
    for (std::int64_t y = 1; y <= y_limit; ++y) {
        if (((kSquaresMod64 >> (low & 63)) & 1) && ((residues[res / 64] >> (res % 64)) & 1)) {
            const unsigned __int128 v =
                static_cast<unsigned __int128>(ud) * static_cast<unsigned __int128>(y) * static_cast<unsigned __int128>(y) + 1;
            if (v >> 64) {
                const Integer big = Integer(d) * Integer(y) * Integer(y) + 1;
                const Integer root = boost::multiprecision::sqrt(big);
                if (root * root == big) {
                    if (root > Integer(std::numeric_limits<std::int64_t>::max())) {
                        throw std::overflow_error("brute_force_fundamental: x exceeds 64 bits");
                    }
                    return IntPair{root.convert_to<std::int64_t>(), y};
                }
            } else if (auto x = square_root_if_square(static_cast<std::uint64_t>(v))) {
                return IntPair{*x, y};
            }
        }
        low += low_step;
        low_step += 2 * ud;
        res += res_step;
        if (res >= m) res -= m;
        res_step += two_d_mod;
        if (res_step >= m) res_step -= m;
    }
    return std::nullopt;
}

std::pair<Integer, Integer> chakravala(const Integer& d) {
    Integer a = boost::multiprecision::sqrt(d);
    if (a * a == d) throw std::invalid_argument("chakravala: square d");
    if ((a + 1) * (a + 1) - d < d - a * a) a += 1;
    Integer b = 1;
    Integer k = a * a - d;
    const Integer root = boost::multiprecision::sqrt(d);
    while (k != 1) {
        const Integer abs_k = k < 0 ? Integer(-k) : k;
        // Smallest positive m with a + b*m divisible by |k|.
        Integer m0 = 1;
        while ((a + b * m0) % abs_k != 0) ++m0;
        // Among m = m0 + j|k|, pick the one with |m^2 - d| smallest.
        Integer j = (root - m0) / abs_k;
        if (j < 0) j = 0;
        Integer best = m0 + j * abs_k;
        for (Integer cand = best; cand <= root + 2 * abs_k; cand += abs_k) {
            const Integer e_c = cand * cand - d;
            const Integer e_b = best * best - d;
            if ((e_c < 0 ? Integer(-e_c) : e_c) < (e_b < 0 ? Integer(-e_b) : e_b)) best = cand;
        }
        const Integer m = best;
        const Integer next_a = (a * m + d * b) / abs_k;
        const Integer next_b = (a + b * m) / abs_k;
        const Integer next_k = (m * m - d) / k;
        a = next_a < 0 ? Integer(-next_a) : next_a;
        b = next_b < 0 ? Integer(-next_b) : next_b;
        k = next_k;
    }
    return {a, b};
}

std::vector<IntPair> brute_force_pell(std::int64_t d, std::int64_t m, std::int64_t y_limit) {
    std::vector<IntPair> out;
    for (std::int64_t y = -y_limit; y <= y_limit; ++y) {
        const std::int64_t v = m + d * y * y;
        if (v < 0) continue;
        if (auto x = square_root_if_square(static_cast<std::uint64_t>(v))) {
            out.push_back({*x, y});
            if (*x != 0) out.push_back({-*x, y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool congruent_solutions(std::int64_t d, std::int64_t m, const IntPair& a, const IntPair& b) {
    const std::int64_t mod = m < 0 ? -m : m;
    return (a.x * b.x - d * a.y * b.y) % mod == 0 && (a.x * b.y - b.x * a.y) % mod == 0;
}

bool brute_force_diagonal_has_solution(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t y_limit) {
    for (std::int64_t y = 0; y <= y_limit; ++y) {
        const std::int64_t rest = c - b * y * y;
        if (rest % a != 0) continue;
        const std::int64_t x2 = rest / a;
        if (x2 < 0) continue;
        if (square_root_if_square(static_cast<std::uint64_t>(x2))) return true;
    }
    return false;
}

std::vector<IntPair> brute_force_rank_two(std::int64_t b, std::int64_t c, std::int64_t target, std::int64_t bound) {
    std::vector<IntPair> out;
    for (std::int64_t alpha = -bound; alpha <= bound; ++alpha) {
        for (std::int64_t beta = -bound; beta <= bound; ++beta) {
            if (4 * alpha * alpha + 2 * b * alpha * beta + 2 * c * beta * beta == target) out.push_back({alpha, beta});
        }
    }
    return out;
}

Rational cofactor_determinant(const Matrix<Rational>& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Rational> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(0, j) * cofactor_determinant(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

std::pair<int, int> numeric_signature(const IntMatrix& gram) {
    Eigen::MatrixXd g(gram.rows(), gram.cols());
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) g(i, j) = gram(i, j).convert_to<double>();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
    int plus = 0, minus = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        const double ev = solver.eigenvalues()(i);
        if (ev > 1e-9) ++plus;
        if (ev < -1e-9) ++minus;
    }
    return {plus, minus};
}

namespace {

void choose(Eigen::Index n, Eigen::Index k, Eigen::Index start, std::vector<Eigen::Index>& cur,
            std::vector<std::vector<Eigen::Index>>& out) {
    if (static_cast<Eigen::Index>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (Eigen::Index i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Integer> factors;
    Integer prev = 1;
    const Eigen::Index max_k = std::min(m.rows(), m.cols());
    for (Eigen::Index k = 1; k <= max_k; ++k) {
        std::vector<std::vector<Eigen::Index>> rows, cols;
        std::vector<Eigen::Index> cur;
        choose(m.rows(), k, 0, cur, rows);
        choose(m.cols(), k, 0, cur, cols);
        Integer g = 0;
        for (const auto& rs : rows) {
            for (const auto& cs : cols) {
                Matrix<Rational> sub(k, k);
                for (Eigen::Index i = 0; i < k; ++i) {
                    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = Rational(m(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]));
                }
                const Rational det = cofactor_determinant(sub);
                const Integer v = boost::multiprecision::numerator(det);
                g = boost::multiprecision::gcd(g, v < 0 ? Integer(-v) : v);
            }
        }
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

}  // namespace hilbsq::oracle
