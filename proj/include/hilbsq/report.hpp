#pragma once

// Structured command output: inputs, a JSON payload and named checks.
// Integers travel as decimal strings since many exceed 64 bits.

#include "hilbsq/integer.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsq {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Discrepancy };

std::string status_name(CheckStatus status);
/// Inverse of status_name; throws std::invalid_argument on unknown names.
CheckStatus parse_status(std::string_view name);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    Json results = Json::object();
    std::vector<Check> checks;

    /// Records a pass or a fail.
    void check(std::string name, bool ok, std::string detail = {});
    /// Records a known mismatch with printed material; not a failure.
    void discrepancy(std::string name, std::string detail);

    std::size_t count(CheckStatus status) const;
    bool passed() const { return count(CheckStatus::Fail) == 0; }

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(Json& j, const Check& check);
void from_json(const Json& j, Check& check);
void to_json(Json& j, const Report& report);
void from_json(const Json& j, Report& report);

/// Aligned plain-text rendering.
std::string render_text(const Report& report);

Json json_integer(const Integer& value);
Json json_vector(const IntVector& v);
Json json_matrix(const IntMatrix& m);

}  // namespace hilbsq
