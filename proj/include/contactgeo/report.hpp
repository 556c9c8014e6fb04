#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace contactgeo {

/// One machine-readable verification result. `pass` is derived:
/// every residual strictly below `tolerance`.
struct CheckReport {
    std::string check_name;
    std::map<std::string, double> params;
    std::map<std::string, double> residuals;
    double tolerance = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;

    double max_residual() const;

    bool operator==(const CheckReport&) const = default;
};

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

std::string csv_header();
std::string to_csv_row(const CheckReport& r);

/// Unknown suite name or malformed invocation (CLI exit code 2).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteParams {
    std::optional<int> n;
    std::optional<double> r;
    std::optional<int> case_id;
    std::optional<double> h;
    std::optional<int> grid;
    std::uint64_t seed = 0;
    std::optional<double> tol; ///< overrides every report tolerance when set
};

const std::vector<std::string>& suite_names();

/**
 * Runs one named verification suite over its parameter grid and returns the
 * reports in canonical order (check_name, then serialized params). Throws
 * UsageError for unknown names; parameter violations surface as the
 * GeometryError family.
 */
std::vector<CheckReport> run_suite(const std::string& name, const SuiteParams& params);

} // namespace contactgeo
