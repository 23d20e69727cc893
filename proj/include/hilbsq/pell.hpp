#pragma once

// Standard and generalized Pell equations x^2 - d*y^2 = m.

#include "hilbsq/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbsq::pell {

/// The equation x^2 - d*y^2 = m with d >= 2 non-square and m != 0.
class PellProblem {
public:
    PellProblem(Integer d, Integer m);

    const Integer& d() const { return d_; }
    const Integer& m() const { return m_; }

    /// Value of x^2 - d*y^2.
    Integer evaluate(const Integer& x, const Integer& y) const;
    bool satisfied_by(const Integer& x, const Integer& y) const { return evaluate(x, y) == m_; }

    std::string describe() const;

private:
    Integer d_;
    Integer m_;
};

struct PellSolution {
    Integer x;
    Integer y;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Continued fraction of sqrt(d): [a0; period...] with the minimal period.
struct CfExpansion {
    Integer a0;
    std::vector<Integer> period;
};

/// a*x^2 + b*y^2 = c. Used for reduced forms that are not monic in x.
struct DiagonalEquation {
    Integer a;
    Integer b;
    Integer c;

    std::string describe() const;
};

std::optional<Integer> is_perfect_square(const Integer& t);

CfExpansion cf_sqrt(const Integer& d);

/// Minimal positive solution of x^2 - d*y^2 = 1.
PellSolution fundamental_solution(const Integer& d);

/// Minimal positive solution of x^2 - d*y^2 = -1, present iff the period of
/// sqrt(d) has odd length.
std::optional<PellSolution> minimal_negative_solution(const Integer& d);

/// (x*a + y*b*d, y*a + x*b) for s = (x, y) and the unit u = (a, b).
/// Throws when u does not solve x^2 - d*y^2 = 1.
PellSolution compose(const Integer& d, const PellSolution& s, const PellSolution& unit);

/// Returns the modulus when a*x^2 + b*y^2 = c has no solution modulo it.
std::optional<Integer> unsolvable_mod(const DiagonalEquation& eq, const Integer& modulus);
std::optional<Integer> unsolvable_mod(const PellProblem& p, const Integer& modulus);

/// The equation 2x'^2 - (d/8)y^2 = -1 equivalent to x^2 - d*y^2 = -8 when 8 | d.
DiagonalEquation reduce_minus_eight(const PellProblem& p);

/// Moduli tried before any search: 4, 8, 16 and the primes up to 37.
const std::vector<Integer>& certificate_moduli();

/// First modulus from certificate_moduli() that rules the equation out.
std::optional<Integer> find_certificate(const PellProblem& p);

/// Upper bound on |y| of a class representative:
/// ceil(sqrt(|m| * (x1 + 1) / (2d))) + 1.
Integer class_search_bound(const PellProblem& p);

/// One representative per solution class, y >= 0 and |y| minimal in its class.
/// Empty iff the equation has no integer solutions.
std::vector<PellSolution> solve_generalized(const PellProblem& p);

bool has_solution(const PellProblem& p);

/// True when (x1, y1) and (x2, y2) lie in the same class, i.e. differ by a
/// unit of norm 1 (up to overall sign).
bool same_class(const PellProblem& p, const PellSolution& s1, const PellSolution& s2);

}  // namespace hilbsq::pell
