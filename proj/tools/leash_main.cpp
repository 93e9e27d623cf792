#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "leash/leash.h"

namespace {

int status_exit(leash_status status) {
  switch (status) {
    case LEASH_OK:
      return 0;
    case LEASH_ERR_IO:
      return 2;
    case LEASH_ERR_PARSE:
      return 3;
    case LEASH_ERR_RELATOR:
      return 4;
    case LEASH_ERR_DOMAIN:
      return 5;
    case LEASH_ERR_INTERNAL:
    default:
      return 70;
  }
}

struct Args {
  std::string metric = "m";
  std::string gamma;
  std::string eps;
  std::string format = "json";
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t radius = 0;
  std::uint64_t r1 = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> files;
  std::vector<std::string> suites;
};

void add_format(CLI::App* sub, Args& args) {
  sub->add_option("--format", args.format, "Output format: json or text")
      ->capture_default_str();
}

void add_files(CLI::App* sub, Args& args, const char* description) {
  sub->add_option("files", args.files, description);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metrics and verification for measure-preserving group actions"};
  app.set_version_flag("--version", leash_version());
  app.require_subcommand(1);

  Args args;

  CLI::App* dist = app.add_subcommand("dist", "Distance between two actions");
  dist->add_option("--metric", args.metric, "d | a | d_G | a_G | m | w | s")
      ->capture_default_str();
  dist->add_option("--n", args.n, "Cover depth (d_G, a_G, w, s)");
  dist->add_option("--k", args.k, "Family depth");
  dist->add_option("--gamma", args.gamma, "Subgroup: whole, mZ, or <element>");
  dist->add_option("--radius", args.radius, "Truncate the Gamma sup to 0 < |gamma| <= radius");
  add_format(dist, args);
  add_files(dist, args, "Two action files");

  CLI::App* mixing = app.add_subcommand("mixing", "Mixing profile over a Gamma annulus");
  mixing->add_option("--k", args.k, "Family depth");
  mixing->add_option("--gamma", args.gamma, "Subgroup: whole, mZ, or <element>");
  mixing->add_option("--r1", args.r1, "Inner annulus bound (default 0)");
  mixing->add_option("--radius", args.radius, "Outer annulus bound (default 8)");
  add_format(mixing, args);
  add_files(mixing, args, "One action file");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--seed", args.seed, "Seed for the randomized suites")->required();
  verify->add_option("--suite", args.suites, "Run only the named suites (repeatable)");
  add_format(verify, args);

  CLI::App* approx = app.add_subcommand("approx", "Product approximation experiment");
  approx->add_option("--k", args.k, "Family depth (default 6)");
  approx->add_option("--radius", args.radius, "Ball radius (default 6)");
  add_format(approx, args);
  add_files(approx, args, "Two or more factor action files");

  CLI::App* net = app.add_subcommand("net", "Greedy epsilon-net over a list of actions");
  net->add_option("--eps", args.eps, "Net radius, as p/2^q or p/q")->required();
  net->add_option("--metric", args.metric, "m | d_G | a_G")->capture_default_str();
  net->add_option("--n", args.n, "Cover depth");
  net->add_option("--k", args.k, "Family depth");
  net->add_option("--gamma", args.gamma, "Subgroup for metric m");
  net->add_option("--radius", args.radius, "Truncate the Gamma sup");
  add_format(net, args);
  add_files(net, args, "Action files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  CLI::App* sub = app.get_subcommands().at(0);
  nlohmann::json config;
  config["command"] = sub->get_name();
  config["files"] = args.files;
  config["format"] = args.format;
  if (sub->get_name() == "dist" || sub->get_name() == "net") config["metric"] = args.metric;
  if (sub->get_option_no_throw("--n") && sub->count("--n")) config["n"] = args.n;
  if (sub->get_option_no_throw("--k") && sub->count("--k")) config["k"] = args.k;
  if (sub->get_option_no_throw("--gamma") && sub->count("--gamma")) config["gamma"] = args.gamma;
  if (sub->get_option_no_throw("--radius") && sub->count("--radius")) {
    config["radius"] = args.radius;
  }
  if (sub->get_option_no_throw("--r1") && sub->count("--r1")) config["r1"] = args.r1;
  if (sub->get_option_no_throw("--eps") && sub->count("--eps")) config["eps"] = args.eps;
  if (sub->get_option_no_throw("--seed") && sub->count("--seed")) config["seed"] = args.seed;
  if (!args.suites.empty()) config["suites"] = args.suites;

  int all_passed = 1;
  char* report = nullptr;
  leash_status status = leash_run(config.dump().c_str(), &all_passed, &report);
  if (status != LEASH_OK) {
    std::fprintf(stderr, "leash: %s\n", leash_last_error());
    return status_exit(status);
  }
  std::fputs(report, stdout);
  leash_string_free(report);
  if (sub->get_name() == "verify" && all_passed == 0) return 1;
  return 0;
}
