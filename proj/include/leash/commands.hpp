#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "leash/action.hpp"

namespace leash {

// One resolved invocation. Optional fields that a command needs but that were
// not supplied fall back to the defaults documented per command.
struct RunConfig {
  std::string command;  // dist | mixing | verify | approx | net
  std::vector<std::string> files;
  std::string metric = "m";  // d | a | d_G | a_G | m | w | s
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::string> gamma;
  std::optional<unsigned> radius;  // truncation / ball radius; absent = exact mode
  unsigned r1 = 0;                 // inner annulus bound (mixing)
  std::optional<std::string> eps;  // dyadic rational text
  std::optional<std::uint64_t> seed;
  std::string format = "json";  // json | text
  std::vector<std::string> suites;
};

// Reads a config from its JSON form; absent keys keep their defaults.
// Malformed documents or mistyped fields throw ParseError.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

// Per-command result objects. Parameter validation throws InvalidParams.
nlohmann::json dist_results(const Action& t, const Action& s, const RunConfig& config);
nlohmann::json mixing_results(const Action& t, const RunConfig& config);
nlohmann::json verify_results(const RunConfig& config);
nlohmann::json approx_results(std::span<const Action> actions, const RunConfig& config);
nlohmann::json net_results(std::span<const Action> actions, const RunConfig& config);

// Report envelope: command, config echo, results, tool version.
nlohmann::json make_report(const RunConfig& config, nlohmann::json results);

// Loads config.files and dispatches to the command's results function.
nlohmann::json run_command(const RunConfig& config);

// Renders per config.format ("json" or "text").
std::string render_report(const nlohmann::json& report, const std::string& format);

// True unless the report is a verify report with a failing suite.
bool report_all_passed(const nlohmann::json& report);

}  // namespace leash
