#include "hilbsq/pell.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbsq::pell {

namespace {

// Convergents p_k/q_k of sqrt(d), k = 0, 1, ..., count - 1.
std::vector<PellSolution> convergents(const CfExpansion& cf, std::size_t count) {
    std::vector<PellSolution> out;
    out.reserve(count);
    Integer p_prev = 1, p = cf.a0;
    Integer q_prev = 0, q = 1;
    if (count == 0) return out;
    out.push_back({p, q});
    for (std::size_t k = 1; k < count; ++k) {
        const Integer& a = cf.period[(k - 1) % cf.period.size()];
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.push_back({p, q});
    }
    return out;
}

// Number of convergents before the fundamental unit repeats.
std::size_t unit_period(const CfExpansion& cf) {
    const std::size_t len = cf.period.size();
    return len % 2 == 0 ? len : 2 * len;
}

void require_nonsquare(const Integer& d) {
    if (d < 2 || exact_sqrt(d)) throw std::invalid_argument("d must be non-square and at least 2");
}

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

PellSolution normalized(PellSolution s) {
    if (s.y < 0 || (s.y == 0 && s.x < 0)) {
        s.x = -s.x;
        s.y = -s.y;
    }
    return s;
}

// Walks the class of s towards its member of smallest |y|; ties prefer larger x.
PellSolution reduce_in_class(const Integer& d, PellSolution s, const PellSolution& unit) {
    const PellSolution inverse{unit.x, -unit.y};
    s = normalized(std::move(s));
    for (;;) {
        PellSolution best = s;
        for (const PellSolution* u : {&unit, &inverse}) {
            PellSolution c = normalized(compose(d, s, *u));
            if (c.y < best.y || (c.y == best.y && c.x > best.x)) best = std::move(c);
        }
        if (best == s) return s;
        s = std::move(best);
    }
}

std::vector<PellSolution> distinct_classes(const PellProblem& p, std::vector<PellSolution> found) {
    const PellSolution unit = fundamental_solution(p.d());
    for (auto& s : found) s = reduce_in_class(p.d(), s, unit);
    std::sort(found.begin(), found.end(), [](const PellSolution& a, const PellSolution& b) {
        return a.y != b.y ? a.y < b.y : a.x > b.x;
    });
    std::vector<PellSolution> reps;
    for (auto& s : found) {
        bool seen = std::any_of(reps.begin(), reps.end(),
                                [&](const PellSolution& r) { return same_class(p, r, s); });
        if (!seen) reps.push_back(std::move(s));
    }
    return reps;
}

// Primitive positive solutions of x^2 - d y^2 = m with |m| < sqrt(d) are
// convergents of sqrt(d); square factors of m cover the imprimitive ones.
std::vector<PellSolution> solve_small_rhs(const PellProblem& p) {
    const CfExpansion cf = cf_sqrt(p.d());
    const auto conv = convergents(cf, unit_period(cf));
    const Integer abs_m = abs_int(p.m());
    std::vector<PellSolution> found;
    for (Integer f = 1; f * f <= abs_m; ++f) {
        if (p.m() % (f * f) != 0) continue;
        const Integer reduced = p.m() / (f * f);
        if (reduced == 1) found.push_back({f, 0});
        for (const auto& c : conv) {
            if (c.x * c.x - p.d() * c.y * c.y == reduced) found.push_back({f * c.x, f * c.y});
        }
    }
    return found;
}

std::vector<PellSolution> solve_by_search(const PellProblem& p) {
    const Integer bound = class_search_bound(p);
    if (bound > 50'000'000) {
        throw std::runtime_error("generalized Pell search bound too large for " + p.describe());
    }
    std::vector<PellSolution> found;
    for (Integer y = 0; y <= bound; ++y) {
        const Integer v = p.m() + p.d() * y * y;
        if (auto x = exact_sqrt(v)) {
            found.push_back({*x, y});
            if (*x != 0) found.push_back({-*x, y});
        }
    }
    return found;
}

}  // namespace

PellProblem::PellProblem(Integer d, Integer m) : d_(std::move(d)), m_(std::move(m)) {
    require_nonsquare(d_);
    if (m_ == 0) throw std::invalid_argument("m must be nonzero");
}

Integer PellProblem::evaluate(const Integer& x, const Integer& y) const { return x * x - d_ * y * y; }

std::string PellProblem::describe() const {
    return "x^2 - " + to_string(d_) + "*y^2 = " + to_string(m_);
}

std::string DiagonalEquation::describe() const {
    return to_string(a) + "*x^2 + " + (b < 0 ? "(" + to_string(b) + ")" : to_string(b)) +
           "*y^2 = " + to_string(c);
}

std::optional<Integer> is_perfect_square(const Integer& t) {
    if (t < 0) throw std::invalid_argument("is_perfect_square: negative argument");
    return exact_sqrt(t);
}

CfExpansion cf_sqrt(const Integer& d) {
    require_nonsquare(d);
    CfExpansion cf;
    cf.a0 = isqrt(d);
    Integer m = 0, q = 1, a = cf.a0;
    const Integer stop = 2 * cf.a0;
    do {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
    } while (a != stop);
    return cf;
}

PellSolution fundamental_solution(const Integer& d) {
    const CfExpansion cf = cf_sqrt(d);
    return convergents(cf, unit_period(cf)).back();
}

std::optional<PellSolution> minimal_negative_solution(const Integer& d) {
    const CfExpansion cf = cf_sqrt(d);
    if (cf.period.size() % 2 == 0) return std::nullopt;
    return convergents(cf, cf.period.size()).back();
}

PellSolution compose(const Integer& d, const PellSolution& s, const PellSolution& unit) {
    if (unit.x * unit.x - d * unit.y * unit.y != 1) {
        throw std::invalid_argument("compose: unit does not solve x^2 - " + to_string(d) + "*y^2 = 1");
    }
    return {s.x * unit.x + s.y * unit.y * d, s.y * unit.x + s.x * unit.y};
}

std::optional<Integer> unsolvable_mod(const DiagonalEquation& eq, const Integer& modulus) {
    if (modulus < 2) throw std::invalid_argument("unsolvable_mod: modulus must be at least 2");
    if (modulus > (1 << 16)) throw std::invalid_argument("unsolvable_mod: modulus too large");
    const long long mod = modulus.convert_to<long long>();
    const long long a = mod_floor(eq.a, modulus).convert_to<long long>();
    const long long b = mod_floor(eq.b, modulus).convert_to<long long>();
    const long long c = mod_floor(eq.c, modulus).convert_to<long long>();
    std::vector<char> first(static_cast<std::size_t>(mod), 0);
    std::vector<char> second(static_cast<std::size_t>(mod), 0);
    for (long long x = 0; x < mod; ++x) {
        first[static_cast<std::size_t>(a * (x * x % mod) % mod)] = 1;
        second[static_cast<std::size_t>(b * (x * x % mod) % mod)] = 1;
    }
    for (long long u = 0; u < mod; ++u) {
        if (!first[static_cast<std::size_t>(u)]) continue;
        if (second[static_cast<std::size_t>(((c - u) % mod + mod) % mod)]) return std::nullopt;
    }
    return modulus;
}

std::optional<Integer> unsolvable_mod(const PellProblem& p, const Integer& modulus) {
    return unsolvable_mod(DiagonalEquation{1, -p.d(), p.m()}, modulus);
}

DiagonalEquation reduce_minus_eight(const PellProblem& p) {
    if (p.m() != -8) throw std::invalid_argument("reduction requires m = -8");
    if (p.d() % 8 != 0) throw std::invalid_argument("reduction requires 8 | d");
    return DiagonalEquation{2, -(p.d() / 8), -1};
}

const std::vector<Integer>& certificate_moduli() {
    static const std::vector<Integer> moduli = {4, 8, 16, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    return moduli;
}

std::optional<Integer> find_certificate(const PellProblem& p) {
    for (const auto& modulus : certificate_moduli()) {
        if (auto cert = unsolvable_mod(p, modulus)) return cert;
    }
    return std::nullopt;
}

Integer class_search_bound(const PellProblem& p) {
    const PellSolution unit = fundamental_solution(p.d());
    const Integer num = abs_int(p.m()) * (unit.x + 1);
    const Integer den = 2 * p.d();
    const Integer ratio_ceil = (num + den - 1) / den;
    Integer root = isqrt(ratio_ceil);
    if (root * root < ratio_ceil) root += 1;
    return root + 1;
}

std::vector<PellSolution> solve_generalized(const PellProblem& p) {
    if (find_certificate(p)) return {};
    const bool small_rhs = p.m() * p.m() < p.d();
    return distinct_classes(p, small_rhs ? solve_small_rhs(p) : solve_by_search(p));
}

bool has_solution(const PellProblem& p) {
    if (find_certificate(p)) return false;
    return !solve_generalized(p).empty();
}

bool same_class(const PellProblem& p, const PellSolution& s1, const PellSolution& s2) {
    const Integer modulus = abs_int(p.m());
    return (s1.x * s2.x - p.d() * s1.y * s2.y) % modulus == 0 &&
           (s1.x * s2.y - s1.y * s2.x) % modulus == 0;
}

}  // namespace hilbsq::pell
