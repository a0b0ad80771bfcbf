#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace univ::cli
{

using Json = nlohmann::ordered_json;

enum class Format
{
    json,
    csv,
};

enum ExitCode : int
{
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
};

/// Structured result of one command. Rationals are serialized as "n/d"
/// strings ("n" for integers).
struct OutputDocument
{
    std::string command;
    Json parameters = Json::object();
    std::optional<std::size_t> order;
    Json payload = Json::object();
    // Flat table for CSV output: header row followed by data rows.
    std::vector<std::vector<std::string>> table;
    bool mismatch = false;

    [[nodiscard]] Json to_json() const;
    [[nodiscard]] std::string render(Format format) const;
    [[nodiscard]] int exit_code() const { return mismatch ? exit_mismatch : exit_ok; }
};

OutputDocument cmd_node_polys(std::size_t max_delta);
OutputDocument cmd_count(const std::string &surface_spec, std::size_t delta);
OutputDocument cmd_yau_zaslow(std::size_t max_delta);
OutputDocument cmd_blowup_check(const std::string &surface_spec);
OutputDocument cmd_rr_solve();
OutputDocument cmd_factorize(std::size_t max_delta);
/// `input` is a JSON array of integer arrays.
OutputDocument cmd_inclexcl(const std::string &input, std::size_t max_sets);
/// Names: G2, DG2, D2G2, DELTA, PARTITION (with `power`), B1, B2.
OutputDocument cmd_series(const std::string &name, std::size_t order, std::int64_t power);

/// Full command-line dispatch. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace univ::cli
