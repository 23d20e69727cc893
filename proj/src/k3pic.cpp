#include "hilbsq/k3pic.hpp"

#include "hilbsq/pell.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace hilbsq::k3 {

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

void add_class(std::vector<DivisorClass>& out, const Integer& alpha, const Integer& beta) {
    DivisorClass cls{IntVector(2)};
    cls.coords << alpha, beta;
    if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(std::move(cls));
}

// v = ((x - b*y)/4, y) when the division is exact.
bool reconstruct(const RankTwoForm& form, const Integer& x, const Integer& y, std::vector<DivisorClass>& out) {
    const Integer num = x - form.b * y;
    if (num % 4 != 0) return false;
    add_class(out, num / 4, y);
    return true;
}

// All v with |alpha|, |beta| <= bound and v^2 = two_k, solving for alpha.
std::vector<DivisorClass> enumerate_box(const RankTwoForm& form, const Integer& two_k, long long bound) {
    std::vector<DivisorClass> out;
    const Integer eight_k = 4 * two_k;
    const Integer r = form.r();
    for (long long b = -bound; b <= bound; ++b) {
        const Integer beta(b);
        const Integer disc = r * beta * beta + eight_k;
        auto root = exact_sqrt(disc);
        if (!root) continue;
        for (const Integer& x : {*root, Integer(-*root)}) {
            const Integer num = x - form.b * beta;
            if (num % 4 != 0) continue;
            const Integer alpha = num / 4;
            if (abs_int(alpha) <= bound) add_class(out, alpha, beta);
        }
    }
    return out;
}

bool orbit_hits(const RankTwoForm& form, const pell::PellSolution& start, const pell::PellSolution& unit,
                std::vector<DivisorClass>& out) {
    const Integer r = form.r();
    std::set<std::pair<int, int>> seen;
    pell::PellSolution s = start;
    bool hit = false;
    for (;;) {
        const std::pair<int, int> state{mod_floor(s.x, 4).convert_to<int>(), mod_floor(s.y, 4).convert_to<int>()};
        if (!seen.insert(state).second) break;
        hit = reconstruct(form, s.x, s.y, out) || hit;
        s = pell::compose(r, s, unit);
    }
    return hit;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out;
    const Integer m = abs_int(n);
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.push_back(d);
        if (d * d != m) out.push_back(m / d);
    }
    return out;
}

}  // namespace

long long default_coeff_bound() {
    if (const char* env = std::getenv("HILBSQ_COEFF_BOUND")) {
        const long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return kDefaultCoeffBound;
}

IntMatrix RankTwoForm::gram() const {
    IntMatrix g(2, 2);
    g << Integer(4), b, b, Integer(2 * c);
    return g;
}

IntLattice RankTwoForm::lattice(std::string first, std::string second) const {
    return IntLattice(gram(), {std::move(first), std::move(second)});
}

SnFamily qn(long long n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return SnFamily{n, RankTwoForm{Integer(8 * n), Integer(1)}};
}

bool norm_identity_check(const RankTwoForm& form, const IntVector& v) {
    const IntLattice lattice = form.lattice();
    const Integer with_h1 = inner(lattice, v, int_vector({1, 0}));
    return 4 * norm(lattice, v) == with_h1 * with_h1 - form.r() * v(1) * v(1);
}

bool has_isotropic_class(const RankTwoForm& form) {
    const Integer r = form.r();
    if (r == 0) throw std::invalid_argument("degenerate rank-two form");
    return r > 0 && exact_sqrt(r).has_value();
}

std::vector<IntVector> isotropic_directions(const RankTwoForm& form) {
    std::vector<IntVector> out;
    if (!has_isotropic_class(form)) return out;
    const Integer s = *exact_sqrt(form.r());
    // 4 alpha + b beta = +-s beta, so (alpha, beta) is proportional to (+-s - b, 4).
    for (const Integer& sign_s : {s, Integer(-s)}) {
        Integer alpha = sign_s - form.b;
        Integer beta = 4;
        const Integer g = boost::multiprecision::gcd(abs_int(alpha), beta);
        IntVector v(2);
        v << alpha / g, beta / g;
        if (std::none_of(out.begin(), out.end(), [&](const IntVector& w) { return w == v; })) out.push_back(v);
    }
    return out;
}

ClassSearch classes_of_square(const RankTwoForm& form, const Integer& two_k, long long coeff_bound) {
    const Integer r = form.r();
    if (r == 0) throw std::invalid_argument("degenerate rank-two form");
    ClassSearch result;
    result.target = two_k;
    std::vector<DivisorClass> found;
    if (two_k % 2 != 0) {
        // The lattice is even.
        result.method = r < 0 ? SearchMethod::Definite : (exact_sqrt(r) ? SearchMethod::Isotropic : SearchMethod::Pell);
        return result;
    }
    const Integer k = two_k / 2;

    if (r < 0) {
        result.method = SearchMethod::Definite;
        // (4 alpha + b beta)^2 = 8k + r beta^2 >= 0 bounds beta.
        if (k >= 0) {
            const Integer beta_max = isqrt((8 * k) / (-r));
            const Integer alpha_max = (isqrt(8 * k) + abs_int(form.b) * beta_max) / 4 + 1;
            const Integer box = beta_max > alpha_max ? beta_max : alpha_max;
            found = enumerate_box(form, two_k, std::max(coeff_bound, box.convert_to<long long>()));
        }
        result.exists = !found.empty();
    } else if (auto s = exact_sqrt(r)) {
        result.method = SearchMethod::Isotropic;
        if (k == 0) {
            result.exists = true;
        } else {
            // 8k = (x - s y)(x + s y) has finitely many factorizations.
            for (const Integer& d : divisors(8 * k)) {
                for (const Integer& e : {d, Integer(-d)}) {
                    const Integer f = (8 * k) / e;
                    if ((e + f) % 2 != 0 || (f - e) % (2 * *s) != 0) continue;
                    const Integer x = (e + f) / 2;
                    const Integer y = (f - e) / (2 * *s);
                    reconstruct(form, x, y, found);
                }
            }
            result.exists = !found.empty();
        }
    } else {
        result.method = SearchMethod::Pell;
        if (k != 0) {
            const pell::PellProblem problem(r, 8 * k);
            const auto reps = pell::solve_generalized(problem);
            result.pell_solvable = !reps.empty();
            if (result.pell_solvable) {
                const pell::PellSolution unit = pell::fundamental_solution(r);
                for (const auto& rep : reps) {
                    for (int sx : {1, -1}) {
                        for (int sy : {1, -1}) {
                            pell::PellSolution start{sx * rep.x, sy * rep.y};
                            result.exists = orbit_hits(form, start, unit, found) || result.exists;
                        }
                    }
                }
            }
        }
    }

    auto boxed = enumerate_box(form, two_k, coeff_bound);
    const bool zero_target = two_k == 0;
    boxed.erase(std::remove_if(boxed.begin(), boxed.end(),
                               [&](const DivisorClass& c) { return zero_target && c.coords.isZero(); }),
                boxed.end());
    result.enumeration_found = !boxed.empty();
    for (auto& c : boxed) {
        if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(std::move(c));
    }
    if (result.enumeration_found && !result.exists) {
        throw std::logic_error("class search: enumeration found a class the exact route ruled out");
    }
    for (const auto& c : found) {
        if (norm(form.lattice(), c.coords) != two_k) throw std::logic_error("class search: wrong norm");
    }
    result.classes = std::move(found);
    return result;
}

bool is_ample(const RankTwoForm& form, const IntVector& v, const IntVector& reference) {
    if (has_isotropic_class(form)) throw std::invalid_argument("ample test needs a form without isotropic classes");
    if (classes_of_square(form, -2).exists) throw std::invalid_argument("ample test needs a form without (-2)-classes");
    const IntLattice lattice = form.lattice();
    if (norm(lattice, reference) <= 0) throw std::invalid_argument("reference class must have positive square");
    return norm(lattice, v) > 0 && inner(lattice, v, reference) > 0;
}

bool is_ample(const SnFamily& family, const IntVector& v) { return is_ample(family.form, v, family.h()); }

VeryAmpleReport very_ample_check(const RankTwoForm& form, const IntVector& polarization, long long coeff_bound) {
    const IntLattice lattice = form.lattice();
    if (norm(lattice, polarization) < 4) throw std::invalid_argument("very ampleness test needs square >= 4");
    VeryAmpleReport report;

    // Square 0 with intersection 1 or 2: multiples of the isotropic directions.
    for (const IntVector& dir : isotropic_directions(form)) {
        Integer t = inner(lattice, polarization, dir);
        const IntVector oriented = t < 0 ? IntVector(-dir) : dir;
        t = t < 0 ? Integer(-t) : t;
        for (long long m = 1; t != 0 && m * t <= 2; ++m) {
            report.very_ample = false;
            report.violations.push_back("square-0 class E with H.E = " + to_string(m * t));
            report.witnesses.push_back(DivisorClass{IntVector(Integer(m) * oriented)});
        }
    }

    // H = 2E with E^2 = 2.
    if (polarization(0) % 2 == 0 && polarization(1) % 2 == 0) {
        const IntVector half = polarization / Integer(2);
        if (norm(lattice, half) == 2) {
            report.very_ample = false;
            report.violations.push_back("H = 2E with E^2 = 2");
            report.witnesses.push_back(DivisorClass{half});
        }
    }

    // E^2 = -2 with E.H = 0: E spans the orthogonal line of H.
    if (classes_of_square(form, -2, coeff_bound).exists) {
        const IntVector pairing = lattice.gram() * polarization;
        IntVector perp(2);
        perp << pairing(1), -pairing(0);
        const Integer g = boost::multiprecision::gcd(abs_int(perp(0)), abs_int(perp(1)));
        if (g != 0) {
            perp /= g;
            if (norm(lattice, perp) == -2) {
                report.very_ample = false;
                report.violations.push_back("(-2)-class E with E.H = 0");
                report.witnesses.push_back(DivisorClass{perp});
            }
        }
    }
    return report;
}

}  // namespace hilbsq::k3
