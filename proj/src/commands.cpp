#include "leash/commands.hpp"

#include <utility>

#include "leash/error.hpp"
#include "leash/io.hpp"
#include "leash/leash_metrics.hpp"
#include "leash/report.hpp"
#include "leash/verify.hpp"
#include "leash/version.hpp"

namespace leash {

namespace {

std::string type_message(const char* key, const char* expected) {
  return std::string("config field \"") + key + "\" must be " + expected;
}

std::string read_string(const nlohmann::json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  const nlohmann::json& v = j.at(key);
  if (!v.is_string()) fail(ErrorCode::ParseError, type_message(key, "a string"));
  return v.get<std::string>();
}

template <typename T>
std::optional<T> read_unsigned(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const nlohmann::json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(ErrorCode::ParseError, type_message(key, "a nonnegative integer"));
  }
  return static_cast<T>(v.get<std::uint64_t>());
}

std::vector<std::string> read_string_list(const nlohmann::json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key) || j.at(key).is_null()) return out;
  const nlohmann::json& v = j.at(key);
  if (!v.is_array()) fail(ErrorCode::ParseError, type_message(key, "an array of strings"));
  for (const nlohmann::json& item : v) {
    if (!item.is_string()) fail(ErrorCode::ParseError, type_message(key, "an array of strings"));
    out.push_back(item.get<std::string>());
  }
  return out;
}

nlohmann::json optional_number(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json distance_result_json(const DistanceResult& result) {
  nlohmann::json out;
  out["metric"] = result.metric;
  out["value"] = value_to_json(result.value);
  out["exactness"] = exactness_name(result.exactness);
  if (result.n) out["n"] = *result.n;
  if (result.k) out["k"] = *result.k;
  if (result.radius) out["radius"] = *result.radius;
  if (result.certified_bound) out["certified_bound"] = value_to_json(*result.certified_bound);
  if (result.pair_period) out["pair_period"] = *result.pair_period;
  return out;
}

GammaSpec parse_gamma(const Action& t, const RunConfig& config) {
  return GammaSpec::parse(t.model(), config.gamma.value_or("whole"));
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "config must be a JSON object");
  RunConfig config;
  config.command = read_string(j, "command", "");
  config.files = read_string_list(j, "files");
  config.metric = read_string(j, "metric", config.metric);
  config.n = read_unsigned<std::size_t>(j, "n");
  config.k = read_unsigned<std::size_t>(j, "k");
  if (j.contains("gamma") && !j.at("gamma").is_null()) config.gamma = read_string(j, "gamma", "");
  config.radius = read_unsigned<unsigned>(j, "radius");
  config.r1 = read_unsigned<unsigned>(j, "r1").value_or(0);
  if (j.contains("eps") && !j.at("eps").is_null()) config.eps = read_string(j, "eps", "");
  config.seed = read_unsigned<std::uint64_t>(j, "seed");
  config.format = read_string(j, "format", config.format);
  config.suites = read_string_list(j, "suites");
  return config;
}

nlohmann::json config_to_json(const RunConfig& config) {
  nlohmann::json j;
  j["command"] = config.command;
  j["files"] = config.files;
  j["metric"] = config.metric;
  j["n"] = optional_number(config.n);
  j["k"] = optional_number(config.k);
  j["gamma"] = config.gamma ? nlohmann::json(*config.gamma) : nlohmann::json(nullptr);
  j["radius"] = config.radius ? nlohmann::json(*config.radius) : nlohmann::json(nullptr);
  j["r1"] = config.r1;
  j["eps"] = config.eps ? nlohmann::json(*config.eps) : nlohmann::json(nullptr);
  j["seed"] = config.seed ? nlohmann::json(*config.seed) : nlohmann::json(nullptr);
  j["format"] = config.format;
  j["suites"] = config.suites;
  return j;
}

nlohmann::json dist_results(const Action& t, const Action& s, const RunConfig& config) {
  const std::string& metric = config.metric;
  SupMode mode = config.radius ? SupMode::Truncated : SupMode::Exact;
  unsigned radius = config.radius.value_or(0);
  if (metric == "d" || metric == "a") {
    if (t.model().generator_count() != 1 || s.model().generator_count() != 1) {
      fail(ErrorCode::InvalidParams,
           "metric " + metric + " compares single transformations; use " + metric +
               "_G for multi-generator models");
    }
    GeneratingFamily family = GeneratingFamily::canonical(t.space());
    DyadicRational value =
        metric == "d" ? metric_d(t.generator_image(0), s.generator_image(0), family, config.k)
                      : metric_a(t.generator_image(0), s.generator_image(0), family, config.k);
    nlohmann::json out;
    out["metric"] = metric;
    out["value"] = value_to_json(value);
    out["exactness"] = exactness_name(Exactness::Exact);
    if (config.k) out["k"] = *config.k;
    return out;
  }
  if (metric == "d_G" || metric == "a_G") {
    DyadicRational value = metric == "d_G" ? action_metric_d(t, s, config.n)
                                           : action_metric_a(t, s, config.n, config.k);
    nlohmann::json out;
    out["metric"] = metric;
    out["value"] = value_to_json(value);
    out["exactness"] = exactness_name(Exactness::Exact);
    if (config.n) out["n"] = *config.n;
    if (config.k) out["k"] = *config.k;
    return out;
  }
  if (metric == "m" || metric == "w" || metric == "s") {
    GammaSpec gamma = parse_gamma(t, config);
    DistanceResult result = [&] {
      if (metric == "m") return leash_m(t, s, gamma, config.k, mode, radius);
      std::size_t n = config.n.value_or(t.model().cover_count());
      std::size_t k = config.k.value_or(GeneratingFamily::canonical(t.space()).size());
      if (metric == "w") return leash_w(t, s, gamma, n, k, mode, radius);
      return leash_s(t, s, gamma, n, k, mode, radius);
    }();
    nlohmann::json out = distance_result_json(result);
    out["gamma"] = gamma.describe(t.model());
    return out;
  }
  fail(ErrorCode::InvalidParams, "unknown metric \"" + metric + "\"");
}

nlohmann::json mixing_results(const Action& t, const RunConfig& config) {
  GammaSpec gamma = parse_gamma(t, config);
  unsigned r2 = config.radius.value_or(8);
  MixingProfile profile = mixing_profile(t, gamma, config.r1, r2, config.k);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < profile.elements.size(); ++i) {
    nlohmann::json row;
    row["element"] = t.model().format(profile.elements[i]);
    row["value"] = value_to_json(profile.values[i]);
    rows.push_back(std::move(row));
  }
  nlohmann::json out;
  out["gamma"] = gamma.describe(t.model());
  out["annulus"] = {{"r1", config.r1}, {"r2", r2}};
  out["profile"] = std::move(rows);
  out["deficiency"] = value_to_json(profile.deficiency);
  if (config.k) out["k"] = *config.k;
  return out;
}

nlohmann::json verify_results(const RunConfig& config) {
  if (!config.seed) fail(ErrorCode::InvalidParams, "verify needs an explicit seed");
  VerifyOptions options;
  options.seed = *config.seed;
  options.suites = config.suites;
  VerifyReport report = run_verify(options);
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& suite : report.suites) {
    nlohmann::json row;
    row["name"] = suite.name;
    row["checks"] = suite.checks;
    row["failures"] = suite.failures;
    row["passed"] = suite.passed();
    if (!suite.passed()) row["first_counterexample"] = suite.first_counterexample;
    suites.push_back(std::move(row));
  }
  nlohmann::json out;
  out["seed"] = *config.seed;
  out["all_passed"] = report.all_passed;
  out["suites"] = std::move(suites);
  return out;
}

nlohmann::json approx_results(std::span<const Action> actions, const RunConfig& config) {
  if (actions.size() < 2) fail(ErrorCode::InvalidParams, "approx needs at least two actions");
  std::size_t k = config.k.value_or(6);
  unsigned radius = config.radius.value_or(6);
  RokhlinReport report = rokhlin_experiment(actions, k, radius);
  nlohmann::json values = nlohmann::json::array();
  for (const DyadicRational& value : report.witness_values) values.push_back(value_to_json(value));
  nlohmann::json out;
  out["k"] = k;
  out["ball_radius"] = radius;
  out["witness_values"] = std::move(values);
  out["max_value"] = value_to_json(report.max_value);
  out["all_zero"] = report.max_value.is_zero();
  return out;
}

nlohmann::json net_results(std::span<const Action> actions, const RunConfig& config) {
  if (actions.empty()) fail(ErrorCode::InvalidParams, "net needs at least one action");
  if (!config.eps) fail(ErrorCode::InvalidParams, "net needs an epsilon");
  DyadicRational eps = DyadicRational::parse(*config.eps);
  SupMode mode = config.radius ? SupMode::Truncated : SupMode::Exact;
  unsigned radius = config.radius.value_or(0);
  const std::string& metric = config.metric;
  ActionDistance dist;
  std::optional<GammaSpec> gamma;
  if (metric == "m") {
    gamma = parse_gamma(actions.front(), config);
    dist = [&gamma, &config, mode, radius](const Action& a, const Action& b) {
      return leash_m(a, b, *gamma, config.k, mode, radius).value;
    };
  } else if (metric == "d_G") {
    dist = [&config](const Action& a, const Action& b) {
      return action_metric_d(a, b, config.n);
    };
  } else if (metric == "a_G") {
    dist = [&config](const Action& a, const Action& b) {
      return action_metric_a(a, b, config.n, config.k);
    };
  } else {
    fail(ErrorCode::InvalidParams, "net supports metrics m, d_G, a_G");
  }
  NetResult net = greedy_eps_net(actions, eps, dist);
  nlohmann::json distances = nlohmann::json::array();
  for (const DyadicRational& value : net.distances) distances.push_back(value_to_json(value));
  nlohmann::json out;
  out["eps"] = value_to_json(eps);
  out["metric"] = metric;
  if (gamma) out["gamma"] = gamma->describe(actions.front().model());
  out["center_indices"] = net.center_indices;
  out["assignment"] = net.assignment;
  out["distances"] = std::move(distances);
  out["center_count"] = net.center_indices.size();
  return out;
}

nlohmann::json make_report(const RunConfig& config, nlohmann::json results) {
  nlohmann::json report;
  report["command"] = config.command;
  report["config"] = config_to_json(config);
  report["results"] = std::move(results);
  report["version"] = kVersion;
  return report;
}

nlohmann::json run_command(const RunConfig& config) {
  const std::string& command = config.command;
  auto expect_files = [&](std::size_t lo, std::size_t hi) {
    if (config.files.size() < lo || config.files.size() > hi) {
      std::string expected = lo == hi ? std::to_string(lo)
                                      : (hi == SIZE_MAX ? "at least " + std::to_string(lo)
                                                        : std::to_string(lo) + ".." + std::to_string(hi));
      fail(ErrorCode::InvalidParams,
           command + " takes " + expected + " action file(s), got " +
               std::to_string(config.files.size()));
    }
  };
  nlohmann::json results;
  if (command == "verify") {
    expect_files(0, 0);
    results = verify_results(config);
  } else {
    std::vector<Action> actions;
    actions.reserve(config.files.size());
    if (command == "dist") {
      expect_files(2, 2);
    } else if (command == "mixing") {
      expect_files(1, 1);
    } else if (command == "approx") {
      expect_files(2, SIZE_MAX);
    } else if (command == "net") {
      expect_files(1, SIZE_MAX);
    } else {
      fail(ErrorCode::InvalidParams, "unknown command \"" + command + "\"");
    }
    for (const std::string& path : config.files) actions.push_back(load_action(path));
    if (command == "dist") {
      results = dist_results(actions[0], actions[1], config);
    } else if (command == "mixing") {
      results = mixing_results(actions[0], config);
    } else if (command == "approx") {
      results = approx_results(actions, config);
    } else {
      results = net_results(actions, config);
    }
  }
  return make_report(config, std::move(results));
}

std::string render_report(const nlohmann::json& report, const std::string& format) {
  if (format == "json") return render_json(report);
  if (format == "text") return render_text(report);
  fail(ErrorCode::InvalidParams, "unknown format \"" + format + "\" (expected json or text)");
}

bool report_all_passed(const nlohmann::json& report) {
  if (!report.contains("results")) return true;
  const nlohmann::json& results = report.at("results");
  if (!results.is_object() || !results.contains("all_passed")) return true;
  return results.at("all_passed").get<bool>();
}

}  // namespace leash
