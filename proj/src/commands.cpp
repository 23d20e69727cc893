#include "hilbsq/commands.hpp"

#include "hilbsq/hilb2.hpp"
#include "hilbsq/k3pic.hpp"
#include "hilbsq/pell.hpp"
#include "hilbsq/verify/acceptance.hpp"

#include <fstream>
#include <limits>

namespace hilbsq::cli {

namespace {

Integer integer_arg(const std::string& name, const std::string& text) {
    try {
        return parse_integer(text);
    } catch (const std::exception&) {
        throw UsageError(name + " must be an integer, got '" + text + "'");
    }
}

long long small_arg(const std::string& name, const std::string& text, long long min) {
    const Integer v = integer_arg(name, text);
    if (v < min) throw UsageError(name + " must be at least " + std::to_string(min));
    if (v > Integer(1'000'000)) throw UsageError(name + " is too large");
    return v.convert_to<long long>();
}

Json solution_json(const pell::PellSolution& s) { return Json{{"x", to_string(s.x)}, {"y", to_string(s.y)}}; }

Json class_json(const IntLattice& lattice, const IntVector& v) {
    return Json{{"coords", json_vector(v)}, {"text", format_class(lattice, v)}};
}

Json signature_json(const Signature& s) {
    return Json{{"plus", std::to_string(s.n_plus)}, {"minus", std::to_string(s.n_minus)}, {"zero", std::to_string(s.n_zero)}};
}

Json factors_json(const std::vector<Integer>& factors) {
    Json out = Json::array();
    for (const auto& f : factors) out.push_back(to_string(f));
    return out;
}

IntLattice automorphism_lattice(const Integer& t) { return IntLattice(direct_sum(rank_one(2 * t), rank_one(-2)).gram(), {"L", "δ"}); }

}  // namespace

int exit_code(const Report& report) { return report.passed() ? kExitOk : kExitCheckFailure; }

Report cmd_pell(const std::string& d_text, const std::string& m_text) {
    const Integer d = integer_arg("d", d_text);
    const Integer m = integer_arg("m", m_text);
    std::optional<pell::PellProblem> parsed;
    try {
        parsed.emplace(d, m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const pell::PellProblem& problem = *parsed;
    Report report;
    report.command = "pell";
    report.inputs = {{"d", to_string(d)}, {"m", to_string(m)}};
    report.results["equation"] = problem.describe();

    const pell::CfExpansion cf = pell::cf_sqrt(d);
    report.results["continued_fraction"] = Json{{"a0", to_string(cf.a0)}, {"period", factors_json(cf.period)}};
    const pell::PellSolution unit = pell::fundamental_solution(d);
    report.results["fundamental_solution"] = solution_json(unit);
    report.check("fundamental solution satisfies x^2 - dy^2 = 1", unit.x * unit.x - d * unit.y * unit.y == 1);
    const auto negative = pell::minimal_negative_solution(d);
    report.results["negative_solution"] = negative ? solution_json(*negative) : Json(nullptr);
    report.results["period_length"] = std::to_string(cf.period.size());

    const auto certificate = pell::find_certificate(problem);
    report.results["certificate_modulus"] = certificate ? Json(to_string(*certificate)) : Json(nullptr);
    if (m == -8 && d % 8 == 0) {
        const pell::DiagonalEquation reduced = pell::reduce_minus_eight(problem);
        const auto mod8 = pell::unsolvable_mod(reduced, Integer(8));
        report.results["reduced_equation"] =
            Json{{"equation", reduced.describe()}, {"unsolvable_mod_8", mod8.has_value()}};
    }
    try {
        report.results["search_bound"] = to_string(pell::class_search_bound(problem));
        const auto classes = pell::solve_generalized(problem);
        Json reps = Json::array();
        bool all_solve = true;
        for (const auto& s : classes) {
            reps.push_back(solution_json(s));
            all_solve = all_solve && problem.satisfied_by(s.x, s.y);
        }
        report.results["solvable"] = !classes.empty();
        report.results["classes"] = reps;
        report.check("class representatives satisfy the equation", all_solve,
                     std::to_string(classes.size()) + " classes");
        if (certificate) report.check("certificate agrees with the class search", classes.empty());
    } catch (const std::exception& e) {
        report.check("class search", false, e.what());
    }
    return report;
}

Report cmd_automorphism(const std::string& t_text) {
    const Integer t = integer_arg("t", t_text);
    if (t < 2) throw UsageError("t must be at least 2");
    const hilb2::AutomorphismVerdict v = hilb2::automorphism_check(t);
    Report report;
    report.command = "bcns";
    report.inputs = {{"t", to_string(t)}};
    report.results["exists"] = v.exists();
    report.results["reason"] = v.reason();
    report.results["conditions"] = Json{{"t_square", v.square},
                                        {"p4t_5_solvable", v.p4t5_solvable},
                                        {"pt_minus1_solvable", v.pt_neg1_solvable}};
    report.results["p4t_5_certificate_modulus"] = v.p4t5_certificate ? Json(to_string(*v.p4t5_certificate)) : Json(nullptr);
    report.results["minimal_solution"] = v.minimal_solution ? solution_json(*v.minimal_solution) : Json(nullptr);
    if (v.minimal_solution) {
        const auto& s = *v.minimal_solution;
        report.check("minimal solution satisfies x^2 - ty^2 = -1", s.x * s.x - t * s.y * s.y == -1);
    }
    if (v.d_class) {
        const IntLattice lattice = automorphism_lattice(t);
        report.results["d_class"] = class_json(lattice, v.d_class->coords);
        report.check("D^2 = 2", norm(lattice, v.d_class->coords) == 2);
    } else {
        report.results["d_class"] = nullptr;
    }
    return report;
}

Report cmd_family(const std::string& name, const std::string& bound_text) {
    hilb2::Family family;
    if (name == "A") {
        family = hilb2::Family::A;
    } else if (name == "B") {
        family = hilb2::Family::B;
    } else {
        throw UsageError("family must be A or B, got '" + name + "'");
    }
    const long long bound = small_arg("bound", bound_text, 1);
    if (bound > 1000) throw UsageError("bound must be at most 1000");
    Report report;
    report.command = "family";
    report.inputs = {{"family", name}, {"bound", std::to_string(bound)}};
    Json rows = Json::array();
    for (long long p = 1; p <= bound; ++p) {
        const hilb2::FamilyRow row = hilb2::family_row(family, p);
        const IntLattice base = k3::qn(row.n).lattice();
        Json j{{family == hilb2::Family::A ? "n" : "k", std::to_string(p)},
               {"surface_index", std::to_string(row.n)},
               {"t", to_string(row.t)},
               {"exists", row.verdict.exists()},
               {"reason", row.verdict.reason()},
               {"expected_solution", solution_json(row.expected)},
               {"minimal_solution",
                row.verdict.minimal_solution ? solution_json(*row.verdict.minimal_solution) : Json(nullptr)},
               {"l1", class_json(base, row.l1)},
               {"l2", class_json(base, row.l2)}};
        if (row.printed_t) j["printed_t"] = to_string(*row.printed_t);
        rows.push_back(std::move(j));
        const std::string tag = name + " " + std::to_string(p) + ": ";
        report.check(tag + "all conditions hold", row.verdict.exists(), row.verdict.reason());
        report.check(tag + "minimal solution (" + to_string(row.expected.x) + ", " + to_string(row.expected.y) + ")",
                     row.minimal_matches);
        report.check(tag + "L1 and L2 have square 2t", row.l1_norm == 2 * row.t && row.l2_norm == 2 * row.t);
        if (row.printed_t && *row.printed_t != row.t) {
            report.discrepancy(tag + "printed coefficient 2^5*7",
                               "printed polynomial gives " + to_string(*row.printed_t) + ", derived t = " +
                                   to_string(row.t));
        }
    }
    report.results["rows"] = rows;
    return report;
}

Report cmd_beauville(const std::string& n_text) {
    const long long n = small_arg("n", n_text, 1);
    const hilb2::NsHilb2 ns = hilb2::ns_hilb2(k3::qn(n));
    Report report;
    report.command = "beauville";
    report.inputs = {{"n", std::to_string(n)}};
    report.results["gram"] = json_matrix(ns.lattice.gram());
    for (int which : {1, 2}) {
        const IntVector d = hilb2::beauville_class(n, which);
        const Isometry action = hilb2::beauville_action(n, which);
        const Sublattice inv = invariant_sublattice(action);
        const std::string key = "i" + std::to_string(which);
        report.results[key] = Json{{"class", class_json(ns.lattice, d)},
                                   {"matrix", json_matrix(action.matrix())},
                                   {"invariant_rank", std::to_string(inv.basis.cols())},
                                   {"natural", hilb2::is_natural(action, ns)}};
        report.check(key + ": involution", action.is_involution());
        report.check(key + ": class has square 2", norm(ns.lattice, d) == 2);
        report.check(key + ": invariant lattice spanned by the class",
                     inv.basis.cols() == 1 && same_span(inv.basis, IntMatrix(d)));
    }
    for (const auto& k : hilb2::kappa_invariants(n)) {
        report.results[k.name] = Json{{"generator", class_json(ns.lattice, k.generator)},
                                      {"square", to_string(norm(ns.lattice, k.generator))},
                                      {"routes_agree", k.routes_agree}};
        const IntVector formula =
            k.name == "kappa2" ? hilb2::kappa2_generator_formula(n) : hilb2::kappa1_generator_formula(n);
        report.check(k.name + ": generator " + format_class(ns.lattice, formula),
                     k.generator == formula && k.routes_agree && norm(ns.lattice, k.generator) == 2);
    }
    const IntVector printed = hilb2::kappa1_printed_formula(n);
    const Integer printed_norm = norm(ns.lattice, printed);
    if (printed_norm != 2) {
        report.discrepancy("printed D1 " + format_class(ns.lattice, printed), "square " + to_string(printed_norm));
    }
    report.results["gcd_64n2_minus_5_and_8n"] = to_string(hilb2::divisibility_gcd(n));
    return report;
}

Report cmd_involution(const std::string& n_text) {
    const long long n = small_arg("n", n_text, 1);
    const hilb2::InvolutionCheck r = hilb2::verify_involution(n);
    const hilb2::NsHilb2 ns = hilb2::ns_hilb2(k3::qn(n));
    Report report;
    report.command = "theorem2";
    report.inputs = {{"n", std::to_string(n)}};
    Json basis = Json::array();
    for (Eigen::Index c = 0; c < r.invariant_ns.basis.cols(); ++c) {
        basis.push_back(format_class(ns.lattice, r.invariant_ns.basis.col(c)));
    }
    const IntMatrix expected_gram = r.expected_basis.transpose() * ns.lattice.gram() * r.expected_basis;
    report.results["ns_action"] = json_matrix(r.iota_ns.matrix());
    report.results["ns_invariant_basis"] = basis;
    report.results["invariant_gram"] = json_matrix(expected_gram);
    report.results["natural"] = r.natural;
    report.results["l23_invariant_rank"] = std::to_string(r.invariant_l23.basis.cols());
    report.results["l23_invariant_gram"] = json_matrix(r.invariant_l23.lattice.gram());
    report.results["complement_rank"] = std::to_string(r.complement.basis.cols());
    report.results["complement_signature"] = signature_json(r.complement_signature);
    report.results["complement_factors"] = factors_json(r.complement_group.invariant_factors);
    report.results["alternative_factors"] =
        factors_json(discriminant_group(hilb2::alternative_complement()).invariant_factors);

    report.check("NS invariant lattice matches {8nH - W - 8nδ, 2H - 3δ}", r.invariant_matches_expected);
    report.check("invariant Gram is diag(2, -2)", expected_gram == int_matrix({{2, 0}, {0, -2}}) &&
                                                      r.diag_base_change_ns.has_value());
    report.check("involution does not fix δ", !r.natural);
    report.check("L23 action restricts to the NS action", r.restriction_agrees);
    report.check("L23 invariant lattice is diag(2, -2)",
                 r.invariant_l23.basis.cols() == 2 && r.diag_base_change_l23.has_value());
    report.check("complement has rank 21 and signature (2, 19)",
                 r.complement.basis.cols() == 21 && r.complement_signature == Signature{2, 19, 0});
    report.check("complement discriminant factors (2)", r.complement_group.invariant_factors == std::vector<Integer>{2});
    report.check("invariant lattice orthogonal to complement", r.orthogonal);
    return report;
}

namespace {

IntLattice named_lattice(const std::string& name) {
    const IntLattice u = hyperbolic_u();
    if (name == "U") return u;
    if (name == "E8") return e8();
    if (name == "E7") return e7();
    if (name == "E8(-1)") return rescale(e8(), -1);
    if (name == "E7(-1)") return rescale(e7(), -1);
    if (name == "K3") return direct_sum({u, u, u, rescale(e8(), -1), rescale(e8(), -1)});
    if (name == "L23") return hilb2::L23::build().lattice;
    if (name.size() > 1 && name[0] == 'Q') return k3::qn(small_arg("n", name.substr(1), 1)).lattice();
    if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
        const Integer k = integer_arg("k", name.substr(1, name.size() - 2));
        if (k == 0) throw UsageError("<0> is degenerate");
        return rank_one(k);
    }
    return {};
}

IntLattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("unknown lattice name or unreadable file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("gram file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_array() || j.empty()) throw UsageError("gram file must hold a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    IntMatrix g(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw UsageError("gram matrix must be square");
        for (Eigen::Index c = 0; c < n; ++c) {
            const Json& e = row[static_cast<std::size_t>(c)];
            if (e.is_number_integer()) {
                g(r, c) = Integer(e.get<long long>());
            } else if (e.is_string()) {
                g(r, c) = integer_arg("gram entry", e.get<std::string>());
            } else {
                throw UsageError("gram entries must be integers");
            }
        }
    }
    try {
        return IntLattice(g);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

Report cmd_lattice_info(const std::string& source) {
    IntLattice lattice = named_lattice(source);
    if (lattice.rank() == 0) lattice = lattice_from_file(source);
    Report report;
    report.command = "lattice-info";
    report.inputs = {{"lattice", source}};
    const Integer disc = discriminant(lattice);
    report.results["rank"] = std::to_string(lattice.rank());
    report.results["gram"] = json_matrix(lattice.gram());
    report.results["determinant"] = to_string(disc);
    report.results["signature"] = signature_json(signature(lattice));
    report.results["even"] = is_even(lattice);
    report.results["unimodular"] = is_unimodular(lattice);
    report.results["discriminant_factors"] =
        disc == 0 ? Json(nullptr) : factors_json(discriminant_group(lattice).invariant_factors);
    if (disc != 0) {
        const DiscriminantGroup group = discriminant_group(lattice);
        const Integer abs_disc = disc < 0 ? Integer(-disc) : disc;
        report.check("discriminant group order equals |det|", group.order() == abs_disc);
    }
    return report;
}

Report cmd_verify_all() {
    Report report;
    report.command = "verify-all";
    Json criteria = Json::array();
    for (const auto& o : verify::run_acceptance()) {
        criteria.push_back(Json{{"number", std::to_string(o.number)}, {"name", o.name}, {"passed", o.passed()}, {"seconds", o.seconds}});
        for (const auto& c : o.checks) {
            report.checks.push_back({"[" + std::to_string(o.number) + "] " + c.name, c.status, c.detail});
        }
    }
    report.results["criteria"] = criteria;
    return report;
}

}  // namespace hilbsq::cli
