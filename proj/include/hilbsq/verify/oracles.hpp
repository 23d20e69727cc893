#pragma once

// Independent brute-force oracles. Nothing here calls into the continued
// fraction, normal form or class-search code it is used to check.

#include "hilbsq/integer.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hilbsq::oracle {

struct IntPair {
    std::int64_t x;
    std::int64_t y;

    friend bool operator==(const IntPair&, const IntPair&) = default;
    friend auto operator<=>(const IntPair&, const IntPair&) = default;
};

/// Exact integer square root test on 64-bit values.
std::optional<std::int64_t> square_root_if_square(std::uint64_t v);

/// Smallest y in [1, y_limit] with d*y^2 + 1 a square, by exhaustive search.
std::optional<IntPair> brute_force_fundamental(std::int64_t d, std::int64_t y_limit);

/// Fundamental solution of x^2 - d*y^2 = 1 by the chakravala (cyclic) method.
std::pair<Integer, Integer> chakravala(const Integer& d);

/// All (x, y) with x^2 - d*y^2 = m and |y| <= y_limit, by exhaustive search.
std::vector<IntPair> brute_force_pell(std::int64_t d, std::int64_t m, std::int64_t y_limit);

/// Class test for two solutions of x^2 - d*y^2 = m by the congruences
/// x1*x2 - d*y1*y2 = 0 and x1*y2 - x2*y1 = 0 (mod |m|).
bool congruent_solutions(std::int64_t d, std::int64_t m, const IntPair& a, const IntPair& b);

/// Whether a*x^2 + b*y^2 = c has a solution with |y| <= y_limit (|x| solved exactly).
bool brute_force_diagonal_has_solution(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t y_limit);

/// All (alpha, beta) with |alpha|, |beta| <= bound and 4a^2 + 2b*a*beta + 2c*beta^2 = target.
std::vector<IntPair> brute_force_rank_two(std::int64_t b, std::int64_t c, std::int64_t target, std::int64_t bound);

/// Exact determinant by cofactor expansion over the rationals (small sizes only).
Rational cofactor_determinant(const Matrix<Rational>& m);

/// Signature by counting signs of eigenvalues of a double-precision copy;
/// only trusted for small, well-conditioned integer matrices.
std::pair<int, int> numeric_signature(const IntMatrix& gram);

/// Invariant factors via gcds of k x k minors (small matrices only).
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

}  // namespace hilbsq::oracle
