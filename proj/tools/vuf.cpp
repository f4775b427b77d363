#include "vuf/acceptance.hpp"
#include "vuf/commands.hpp"
#include "vuf/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

// Comma-separated list flag, tolerant of bracketed roots such as "[0,-1,0,0]".
// A leading '=' comes from the short form -J="-b:1".
CLI::Option* add_list(CLI::App* app, const std::string& name, std::vector<std::string>& target,
                      const std::string& help) {
  return app->add_option_function<std::vector<std::string>>(
      name,
      [&target](const std::vector<std::string>& values) {
        for (const auto& v : values)
          for (auto& item : vuf::split_list(!v.empty() && v[0] == '=' ? v.substr(1) : v))
            target.push_back(std::move(item));
      },
      help);
}

void add_datum_options(CLI::App* app, vuf::RunConfig& c) {
  app->add_option("--system,-s", c.system, "root system, e.g. A4");
  add_list(app, "-J,--J", c.J, "infinitesimal roots root:exponent, e.g. -b:1");
  app->add_option_function<std::vector<std::string>>(
      "--profile",
      [&c](const std::vector<std::string>& values) {
        for (const auto& v : values)
          for (const auto& item : vuf::split_list(v)) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--profile", "expected name:exponent");
            try {
              c.profile[item.substr(0, colon)] = std::stoi(item.substr(colon + 1));
            } catch (const std::exception&) {
              throw CLI::ValidationError("--profile", "bad exponent in '" + item + "'");
            }
          }
      },
      "simple-root exponents, e.g. -b:1,-c:2");
  add_list(app, "--levi", c.levi, "simple roots generating P_red (default: Borel)");
  app->add_option("-p,--p", c.p, "characteristic");
  app->add_flag("--strict", c.strict, "reject data failing the closure rule");
}

void add_word_option(CLI::App* app, vuf::RunConfig& c) { add_list(app, "--word", c.word, "entries, e.g. \"sa*sb,sd\""); }

}  // namespace

int main(int argc, char** argv) {
  vuf::RunConfig cfg;
  std::string config_path;

  CLI::App app{"vuf: combinatorics and algebra of varieties of unseparated flags"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", config_path, "JSON or TOML file whose keys override the flags");
  app.add_option("--output,-o", cfg.output, "write the JSON report to this file");
  app.add_flag("--table", cfg.table, "human-readable output");
  app.add_option("--budget", cfg.budget, "point-count evaluation budget");

  auto* root = app.add_subcommand("root", "root system data");
  root->add_option("--system,-s", cfg.system, "root system");

  auto* weyl = app.add_subcommand("weyl", "Weyl group element");
  weyl->add_option("--system,-s", cfg.system, "root system");
  weyl->add_option("--element,-w", cfg.element, "element, e.g. sa*sb")->required();
  weyl->add_option("--compare", cfg.compare, "second element for Bruhat and Demazure products");

  auto* parabolic = app.add_subcommand("parabolic", "Wenzel datum and its closure check");
  add_datum_options(parabolic, cfg);

  auto* chow = app.add_subcommand("chow", "Chow transfer matrices on the Schubert basis");
  add_datum_options(chow, cfg);

  auto* fiber = app.add_subcommand("fiber", "fibers of the BSDH projections");
  fiber->add_option("mode", cfg.mode, "first | last | cell")->required()->check(CLI::IsMember({"first", "last", "cell"}));
  add_datum_options(fiber, cfg);
  add_word_option(fiber, cfg);
  fiber->add_option("--at", cfg.at, "fixed point v (first projection)");
  fiber->add_option("--element,-w", cfg.element, "Schubert cell element (cell mode)");

  auto* star = app.add_subcommand("star", "geometric Demazure product of a word");
  add_datum_options(star, cfg);
  add_word_option(star, cfg);

  auto* qtype = app.add_subcommand("qtype", "Q-type test and convolution targets");
  add_datum_options(qtype, cfg);
  add_word_option(qtype, cfg);
  add_list(qtype, "--q-levi", cfg.q_levi, "simple roots generating the Levi of Q");
  qtype->add_option("--element,-w", cfg.element, "element to test");
  qtype->add_option("--theta", cfg.theta, "cut points, e.g. --theta 1 3")->expected(0, -1);

  auto* variety = app.add_subcommand("variety", "explicit varieties and their certificates");
  variety->add_option("name", cfg.mode, "incidence | twisted-incidence | schubert | nonnormal-schubert | bsdh-sl3")
      ->required();
  variety->add_option("-n,--n", cfg.n, "projective dimension");
  variety->add_option("-p,--p", cfg.p, "characteristic");
  variety->add_option("-i,--i", cfg.i, "Schubert index i");
  variety->add_option("-j,--j", cfg.j, "Schubert index j");
  variety->add_flag("--untwisted", cfg.untwisted, "untwisted Schubert ideal");
  variety->add_flag("--certify-normality", cfg.certify_normality, "scan charts for a codimension-1 singular locus");
  add_list(variety, "--chart", cfg.chart, "chart variables, one per block, e.g. x,c");
  variety->add_option_function<std::vector<std::string>>(
      "--count-points",
      [&cfg](const std::vector<std::string>& values) {
        for (const auto& v : values)
          for (auto item : vuf::split_list(v)) {
            if (item.rfind("q=", 0) == 0) item = item.substr(2);
            try {
              cfg.count_points.push_back(std::stoll(item));
            } catch (const std::exception&) {
              throw CLI::ValidationError("--count-points", "bad field order '" + item + "'");
            }
          }
      },
      "field orders, e.g. q=2,4");

  auto* count = app.add_subcommand("count", "brute-force point count");
  count->add_option("--poly", cfg.polys, "polynomial (repeatable)")->required();
  count->add_option("--block", cfg.blocks, "projective block, e.g. x1,x2,x3 (repeatable); none: affine");
  count->add_option("-q,--q", cfg.q, "field order")->required();

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (accept->parsed()) {
      const auto results = vuf::run_acceptance();
      return vuf::print_acceptance(results, std::cout) ? 0 : 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) cfg = vuf::merge_config(cfg, vuf::read_config_file(config_path));

    const auto report = vuf::run_command(cfg);
    const std::string text = cfg.table ? vuf::render_table(report) : report.dump(2) + "\n";
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw vuf::InputError("cannot write " + cfg.output);
      out << text;
    }
    return 0;
  } catch (const vuf::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vuf::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const vuf::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
