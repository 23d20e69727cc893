#pragma once

// Command implementations behind the hilbsq executable. Arguments arrive as
// text; malformed or out-of-range input raises UsageError.

#include "hilbsq/report.hpp"

#include <stdexcept>
#include <string>

namespace hilbsq::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailure = 2;

Report cmd_pell(const std::string& d, const std::string& m);
Report cmd_automorphism(const std::string& t);
Report cmd_family(const std::string& name, const std::string& bound);
Report cmd_beauville(const std::string& n);
Report cmd_involution(const std::string& n);
/// A lattice name (U, E8, E7, E8(-1), E7(-1), K3, L23, Q<n>, <k>) or a JSON
/// file holding a row-major integer Gram matrix.
Report cmd_lattice_info(const std::string& source);
Report cmd_verify_all();

/// kExitOk unless a check failed.
int exit_code(const Report& report);

}  // namespace hilbsq::cli
