#include "doctest.h"

#include "hilbsq/pell.hpp"
#include "hilbsq/verify/oracles.hpp"

#include <set>

using namespace hilbsq;
using namespace hilbsq::pell;

namespace {

bool is_square_ll(long long d) { return oracle::square_root_if_square(static_cast<std::uint64_t>(d)).has_value(); }

bool contains(const std::vector<PellSolution>& v, long long x, long long y) {
    return std::find(v.begin(), v.end(), PellSolution{x, y}) != v.end();
}

}  // namespace

TEST_CASE("PellProblem validation") {
    CHECK_THROWS_WITH_AS(PellProblem(4, 1), "d must be non-square and at least 2", std::invalid_argument);
    CHECK_THROWS_AS(PellProblem(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PellProblem(2, 0), std::invalid_argument);
    const PellProblem p(61, 1);
    CHECK(p.describe() == "x^2 - 61*y^2 = 1");
    CHECK(p.satisfied_by(1766319049, 226153980));
}

TEST_CASE("is_perfect_square") {
    CHECK(is_perfect_square(4) == Integer(2));
    CHECK_FALSE(is_perfect_square(62002).has_value());
    CHECK(is_perfect_square(0) == Integer(0));
}

TEST_CASE("cf_sqrt") {
    const CfExpansion two = cf_sqrt(2);
    CHECK(two.a0 == 1);
    CHECK(two.period == std::vector<Integer>{2});
    const CfExpansion three = cf_sqrt(3);
    CHECK(three.a0 == 1);
    CHECK(three.period == std::vector<Integer>{1, 2});
    CHECK_THROWS_AS(cf_sqrt(4), std::invalid_argument);
}

TEST_CASE("fundamental_solution") {
    CHECK(fundamental_solution(2) == PellSolution{3, 2});
    CHECK(fundamental_solution(3) == PellSolution{2, 1});
    CHECK(fundamental_solution(61) == PellSolution{1766319049, 226153980});
}

TEST_CASE("fundamental_solution is minimal for d <= 200 with small y") {
    for (long long d = 2; d <= 200; ++d) {
        if (is_square_ll(d)) continue;
        const PellSolution s = fundamental_solution(d);
        CHECK(s.x * s.x - d * s.y * s.y == 1);
        if (s.y > 1'000'000) continue;
        const auto brute = oracle::brute_force_fundamental(d, 1'000'000);
        REQUIRE(brute.has_value());
        CHECK(Integer(brute->x) == s.x);
        CHECK(Integer(brute->y) == s.y);
    }
}

TEST_CASE("minimal_negative_solution") {
    CHECK(minimal_negative_solution(5) == PellSolution{2, 1});
    CHECK_FALSE(minimal_negative_solution(3).has_value());
    CHECK(minimal_negative_solution(62002) == PellSolution{249, 1});
}

TEST_CASE("negative solutions exist exactly for odd periods, d <= 200") {
    for (long long d = 2; d <= 200; ++d) {
        if (is_square_ll(d)) continue;
        const auto neg = minimal_negative_solution(d);
        const bool odd = cf_sqrt(d).period.size() % 2 == 1;
        CHECK(neg.has_value() == odd);
        if (neg) {
            CHECK(neg->x * neg->x - d * neg->y * neg->y == -1);
            // Its square is the fundamental unit.
            const PellSolution square{neg->x * neg->x + d * neg->y * neg->y, 2 * neg->x * neg->y};
            CHECK(square == fundamental_solution(d));
        } else {
            CHECK(oracle::brute_force_pell(d, -1, 10'000).empty());
        }
    }
}

TEST_CASE("solve_generalized examples") {
    CHECK(contains(solve_generalized(PellProblem(20, 5)), 5, 1));
    CHECK(solve_generalized(PellProblem(56, -8)).empty());
    // (3, 2) lies in the class of the trivial solution.
    const PellProblem unit(2, 1);
    const auto reps = solve_generalized(unit);
    REQUIRE(reps.size() == 1);
    CHECK(same_class(unit, reps[0], PellSolution{3, 2}));
}

TEST_CASE("has_solution") {
    CHECK_FALSE(has_solution(PellProblem(248008, 5)));
    CHECK(has_solution(PellProblem(5, -1)));
    CHECK(has_solution(PellProblem(20, 5)));
}

TEST_CASE("compose") {
    CHECK(compose(2, {1, 1}, {3, 2}) == PellSolution{7, 5});
    CHECK(compose(20, {5, 1}, {9, 2}) == PellSolution{85, 19});
    CHECK(compose(7, {3, 1}, {1, 0}) == PellSolution{3, 1});
    CHECK_THROWS_AS(compose(2, {1, 1}, {2, 1}), std::invalid_argument);
    // The right-hand side is preserved.
    const PellSolution unit = fundamental_solution(13);
    PellSolution s{6, 1};  // 36 - 13 = 23
    for (int i = 0; i < 4; ++i) {
        s = compose(13, s, unit);
        CHECK(s.x * s.x - 13 * s.y * s.y == 23);
    }
}

TEST_CASE("unsolvable_mod") {
    CHECK(unsolvable_mod(PellProblem(248008, 5), Integer(8)) == Integer(8));
    CHECK_FALSE(unsolvable_mod(PellProblem(2, 1), Integer(8)).has_value());
    CHECK_FALSE(unsolvable_mod(PellProblem(56, -8), Integer(8)).has_value());
    const DiagonalEquation reduced = reduce_minus_eight(PellProblem(56, -8));
    CHECK(unsolvable_mod(reduced, Integer(8)) == Integer(8));
}

TEST_CASE("reduce_minus_eight") {
    const DiagonalEquation r56 = reduce_minus_eight(PellProblem(56, -8));
    CHECK(r56.a == 2);
    CHECK(r56.b == -7);
    CHECK(r56.c == -1);
    const DiagonalEquation r504 = reduce_minus_eight(PellProblem(504, -8));
    CHECK(r504.b == -63);
    const DiagonalEquation r8 = reduce_minus_eight(PellProblem(8, -8));
    CHECK(r8.b == -1);
    CHECK(2 * 2 * 2 - 3 * 3 == -1);
    CHECK(oracle::brute_force_diagonal_has_solution(2, -1, -1, 10));
    CHECK_THROWS_AS(reduce_minus_eight(PellProblem(56, 5)), std::invalid_argument);
    CHECK_THROWS_AS(reduce_minus_eight(PellProblem(12, -8)), std::invalid_argument);
}

TEST_CASE("class_search_bound") {
    // x1 = 9 for d = 20: ceil(sqrt(5 * 10 / 40)) + 1 = 3.
    CHECK(class_search_bound(PellProblem(20, 5)) == 3);
}

TEST_CASE("certificates are sound on the small grid") {
    for (long long d = 2; d <= 50; ++d) {
        if (is_square_ll(d)) continue;
        for (long long m = -30; m <= 30; ++m) {
            if (m == 0) continue;
            const PellProblem p(d, m);
            if (find_certificate(p)) CHECK(oracle::brute_force_pell(d, m, 10'000).empty());
        }
    }
}

TEST_CASE("class representatives generate every small solution") {
    constexpr long long kY = 10'000;
    for (long long d = 2; d <= 50; ++d) {
        if (is_square_ll(d)) continue;
        const PellSolution unit = fundamental_solution(d);
        const PellSolution inverse{unit.x, -unit.y};
        for (long long m = -30; m <= 30; ++m) {
            if (m == 0) continue;
            const auto reps = solve_generalized(PellProblem(d, m));
            std::set<oracle::IntPair> generated;
            for (const auto& rep : reps) {
                CHECK(rep.x * rep.x - d * rep.y * rep.y == m);
                CHECK(rep.y >= 0);
                for (const PellSolution& step : {unit, inverse}) {
                    PellSolution s = rep;
                    while (boost::multiprecision::abs(s.y) <= kY) {
                        const long long x = s.x.convert_to<long long>(), y = s.y.convert_to<long long>();
                        for (const oracle::IntPair& v : {oracle::IntPair{x, y}, oracle::IntPair{-x, -y}, oracle::IntPair{-x, y},
                                                         oracle::IntPair{x, -y}}) {
                            generated.insert(v);
                        }
                        s = compose(d, s, step);
                    }
                }
            }
            const auto brute = oracle::brute_force_pell(d, m, kY);
            CHECK(std::set<oracle::IntPair>(brute.begin(), brute.end()) == generated);
        }
    }
}

TEST_CASE("solutions beyond 64 bits") {
    const PellSolution s = fundamental_solution(181);
    CHECK(to_string(s.x) == "2469645423824185801");
    CHECK(s.x * s.x - 181 * s.y * s.y == 1);
    const auto [x, y] = oracle::chakravala(Integer(181));
    CHECK(x == s.x);
    CHECK(y == s.y);
}
