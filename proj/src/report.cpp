#include "hilbsq/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hilbsq {

std::string status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Discrepancy: return "discrepancy";
    }
    return "fail";
}

CheckStatus parse_status(std::string_view name) {
    if (name == "pass") return CheckStatus::Pass;
    if (name == "fail") return CheckStatus::Fail;
    if (name == "discrepancy") return CheckStatus::Discrepancy;
    throw std::invalid_argument("unknown check status: " + std::string(name));
}

void Report::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::discrepancy(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::Discrepancy, std::move(detail)});
}

std::size_t Report::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

void to_json(Json& j, const Check& check) {
    j = Json{{"name", check.name}, {"status", status_name(check.status)}, {"detail", check.detail}};
}

void from_json(const Json& j, Check& check) {
    check.name = j.at("name").get<std::string>();
    check.status = parse_status(j.at("status").get<std::string>());
    check.detail = j.value("detail", "");
}

void to_json(Json& j, const Report& report) {
    j = Json::object();
    j["command"] = report.command;
    j["inputs"] = Json(report.inputs);
    j["results"] = report.results;
    j["checks"] = Json(report.checks);
    j["summary"] = Json{{"pass", std::to_string(report.count(CheckStatus::Pass))},
                        {"fail", std::to_string(report.count(CheckStatus::Fail))},
                        {"discrepancy", std::to_string(report.count(CheckStatus::Discrepancy))}};
}

void from_json(const Json& j, Report& report) {
    report.command = j.at("command").get<std::string>();
    report.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    report.results = j.at("results");
    report.checks = j.at("checks").get<std::vector<Check>>();
}

namespace {

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat_array(const Json& j) {
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (is_flat_array(j)) {
        std::string text = "[";
        for (std::size_t i = 0; i < j.size(); ++i) text += (i ? ", " : "") + scalar_text(j[i]);
        out.emplace_back(prefix, text + "]");
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, scalar_text(j));
    }
}

void aligned(std::ostringstream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [key, value] : rows) os << "  " << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

}  // namespace

std::string render_text(const Report& report) {
    std::ostringstream os;
    os << report.command << '\n';
    if (!report.inputs.empty()) {
        os << "inputs\n";
        aligned(os, {report.inputs.begin(), report.inputs.end()});
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report.results, "", rows);
    if (!rows.empty()) {
        os << "results\n";
        aligned(os, rows);
    }
    if (!report.checks.empty()) {
        os << "checks\n";
        std::size_t width = 0;
        for (const auto& c : report.checks) width = std::max(width, c.name.size());
        for (const auto& c : report.checks) {
            std::string tag = status_name(c.status);
            for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            os << "  " << tag << std::string(12 - tag.size(), ' ') << c.name;
            if (!c.detail.empty()) os << std::string(width - c.name.size() + 2, ' ') << c.detail;
            os << '\n';
        }
    }
    os << report.count(CheckStatus::Pass) << " pass, " << report.count(CheckStatus::Fail) << " fail, "
       << report.count(CheckStatus::Discrepancy) << " discrepancy\n";
    return os.str();
}

Json json_integer(const Integer& value) { return to_string(value); }

Json json_vector(const IntVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
    return out;
}

Json json_matrix(const IntMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hilbsq
