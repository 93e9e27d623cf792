#include "leash/leash.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "leash/commands.hpp"
#include "leash/error.hpp"
#include "leash/io.hpp"
#include "leash/report.hpp"
#include "leash/version.hpp"

struct leash_action {
  leash::Action action;
};

namespace {

thread_local std::string g_last_error;

leash_status status_from(const leash::Error& e) {
  switch (e.code()) {
    case leash::ErrorCode::IoError:
      return LEASH_ERR_IO;
    case leash::ErrorCode::ParseError:
      return LEASH_ERR_PARSE;
    case leash::ErrorCode::RelatorViolated:
      return LEASH_ERR_RELATOR;
    default:
      return LEASH_ERR_DOMAIN;
  }
}

template <typename Fn>
leash_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LEASH_OK;
  } catch (const leash::Error& e) {
    g_last_error = e.what();
    return status_from(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LEASH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LEASH_ERR_INTERNAL;
  }
}

leash_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return LEASH_ERR_DOMAIN;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_document(const char* text, const char* what) {
  if (!text || !*text) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    leash::fail(leash::ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

leash::RunConfig options_config(const char* options_json, const char* command) {
  leash::RunConfig config = leash::config_from_json(parse_document(options_json, "options"));
  config.command = command;
  return config;
}

void emit(const leash::RunConfig& config, nlohmann::json results, char** out_report) {
  nlohmann::json report = leash::make_report(config, std::move(results));
  *out_report = dup_string(leash::render_report(report, config.format));
}

}  // namespace

extern "C" {

const char* leash_version(void) { return leash::kVersion; }

const char* leash_last_error(void) { return g_last_error.c_str(); }

void leash_string_free(char* s) { std::free(s); }

leash_status leash_action_load(const char* path, leash_action** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new leash_action{leash::load_action(path)}; });
}

leash_status leash_action_parse(const char* json_text, leash_action** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new leash_action{leash::parse_action_text(json_text)}; });
}

leash_status leash_action_info(const leash_action* action, char** out_json) {
  if (!action) return null_argument("action");
  if (!out_json) return null_argument("out_json");
  return guarded([&] {
    nlohmann::json info;
    info["group"] = action->action.model().describe();
    info["resolution"] = action->action.resolution();
    info["generators"] = action->action.model().generator_count();
    *out_json = dup_string(leash::render_json(info));
  });
}

void leash_action_free(leash_action* action) { delete action; }

leash_status leash_distance(const leash_action* t, const leash_action* s,
                            const char* options_json, char** out_report) {
  if (!t || !s) return null_argument("action");
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    leash::RunConfig config = options_config(options_json, "dist");
    emit(config, leash::dist_results(t->action, s->action, config), out_report);
  });
}

leash_status leash_mixing(const leash_action* t, const char* options_json, char** out_report) {
  if (!t) return null_argument("action");
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    leash::RunConfig config = options_config(options_json, "mixing");
    emit(config, leash::mixing_results(t->action, config), out_report);
  });
}

leash_status leash_verify(const char* options_json, int* all_passed, char** out_report) {
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    leash::RunConfig config = options_config(options_json, "verify");
    nlohmann::json results = leash::verify_results(config);
    if (all_passed) *all_passed = results.at("all_passed").get<bool>() ? 1 : 0;
    emit(config, std::move(results), out_report);
  });
}

leash_status leash_approx(const leash_action* const* actions, size_t count,
                          const char* options_json, char** out_report) {
  if (!actions) return null_argument("actions");
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    std::vector<leash::Action> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!actions[i]) leash::fail(leash::ErrorCode::InvalidParams, "null action handle");
      list.push_back(actions[i]->action);
    }
    leash::RunConfig config = options_config(options_json, "approx");
    emit(config, leash::approx_results(list, config), out_report);
  });
}

leash_status leash_net(const leash_action* const* actions, size_t count, const char* options_json,
                       char** out_report) {
  if (!actions) return null_argument("actions");
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    std::vector<leash::Action> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!actions[i]) leash::fail(leash::ErrorCode::InvalidParams, "null action handle");
      list.push_back(actions[i]->action);
    }
    leash::RunConfig config = options_config(options_json, "net");
    emit(config, leash::net_results(list, config), out_report);
  });
}

leash_status leash_run(const char* config_json, int* all_passed, char** out_report) {
  if (!config_json) return null_argument("config_json");
  if (!out_report) return null_argument("out_report");
  return guarded([&] {
    leash::RunConfig config =
        leash::config_from_json(parse_document(config_json, "config"));
    nlohmann::json report = leash::run_command(config);
    if (all_passed) *all_passed = leash::report_all_passed(report) ? 1 : 0;
    *out_report = dup_string(leash::render_report(report, config.format));
  });
}

}  // extern "C"
