// godeaux: command-line front end.
//
// Exit codes: 0 all executed checks PASS or SKIPPED, 1 some check FAILs,
// 2 usage error (bad flag, unknown suite, unreadable or malformed input).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "godeaux/error.hpp"
#include "godeaux/germ.hpp"
#include "godeaux/lattice_dsl.hpp"
#include "godeaux/quintic.hpp"
#include "godeaux/scenarios.hpp"

namespace {

using namespace godeaux;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyConfig {
  std::vector<std::string> suites;
  std::string format = "text";
  std::string output_dir;
  bool perturb = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (auto t = trim(item); !t.empty()) out.push_back(t);
  return out;
}

// key = value per line, '#' comments. Keys: suite, format, output-dir, perturb.
void apply_config_file(const std::string& path, VerifyConfig& cfg) {
  std::istringstream in(read_file(path));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "suite") {
      cfg.suites = split_list(value);
    } else if (key == "format") {
      cfg.format = value;
    } else if (key == "output-dir") {
      cfg.output_dir = value;
    } else if (key == "perturb") {
      if (value != "true" && value != "false") throw UsageError(path + ": perturb must be true or false");
      cfg.perturb = value == "true";
    } else {
      throw UsageError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
}

void validate(VerifyConfig& cfg) {
  const auto& known = suite_names();
  if (cfg.suites.empty() || cfg.suites == std::vector<std::string>{"all"}) cfg.suites = known;
  for (const auto& s : cfg.suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
  if (cfg.format != "json" && cfg.format != "markdown" && cfg.format != "text") {
    throw UsageError("unknown format '" + cfg.format + "'");
  }
}

int run_verify(VerifyConfig cfg) {
  validate(cfg);
  std::vector<VerificationReport> reports;
  for (const auto& s : cfg.suites) {
    if (s == "quintic" && cfg.perturb) {
      QuinticSuiteConfig c;
      c.perturb_a = true;
      reports.push_back(run_quintic_suite(c));
    } else {
      reports.push_back(run_suite(s));
    }
  }
  const auto report = reports.size() == 1 ? reports.front() : merge_reports(reports);
  std::string text, extension;
  if (cfg.format == "json") {
    text = to_json(report);
    extension = "json";
  } else if (cfg.format == "markdown") {
    text = to_markdown(report);
    extension = "md";
  } else {
    text = to_text(report);
    extension = "txt";
  }
  if (cfg.output_dir.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(cfg.output_dir);
    const auto path = std::filesystem::path(cfg.output_dir) / ("report." + extension);
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path.string() + "'");
    out << text;
    std::cerr << "wrote " << path.string() << "\n";
  }
  return report.ok() ? kOk : kFailed;
}

int run_certify(const std::string& point, const std::string& input, bool verbose) {
  Germ germ = [&] {
    if (!input.empty()) return parse_germ(read_file(input));
    if (point.size() != 2 || point[0] != 'a' || point[1] < '1' || point[1] > '4') {
      throw UsageError("--point must be one of a1, a2, a3, a4");
    }
    return localize(build_quintic(build_parameters()), point[1] - '0');
  }();
  const auto outcome = certify(germ);
  if (verbose) {
    std::cout << describe(outcome);
  } else if (outcome.passed) {
    std::cout << "PASS\n";
  } else {
    std::cout << "FAIL at " << outcome.stage << ": " << outcome.message << "\n";
  }
  return outcome.passed ? kOk : kFailed;
}

int run_lattice_eval(const std::string& expr, const std::string& decls) {
  const auto env = parse_lattice_declarations(decls.empty() ? std::string(v_lattice_declarations()) : read_file(decls));
  std::cout << to_string(evaluate_lattice_expression(env, expr)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of a sigma-invariant quintic and its divisor-class arithmetic"};
  app.require_subcommand(1);

  VerifyConfig flags;
  std::vector<std::string> suite_flags;
  std::string config_path;
  auto* verify = app.add_subcommand("verify", "run verification suites and print a report");
  verify->add_option("--suite", suite_flags, "quintic, v-lattice, cover, fibre or all (repeatable, comma lists ok)");
  auto* format_opt = verify->add_option("--format", flags.format, "json, markdown or text");
  verify->add_option("--config", config_path, "key = value file (suite, format, output-dir, perturb)");
  auto* outdir_opt = verify->add_option("--output-dir", flags.output_dir, "write report.<ext> here (env GODEAUX_OUTPUT_DIR)");
  auto* perturb_flag = verify->add_flag("--perturb", flags.perturb, "run the quintic suite with a = u in place of u^2");

  int real_digits = 0;
  auto* dump = app.add_subcommand("dump-quintic", "print the parameters and F5");
  auto* real_opt = dump->add_option("--real", real_digits, "append decimal enclosures with N digits")->check(CLI::Range(1, 1000));

  std::string point, input;
  bool verbose = false;
  auto* cert = app.add_subcommand("certify-germ", "run the tilde-E8 certificate");
  auto* point_opt = cert->add_option("--point", point, "a1, a2, a3 or a4");
  auto* input_opt = cert->add_option("--input", input, "germ file (optional 'vars:' line, '#' comments)");
  point_opt->excludes(input_opt);
  cert->add_flag("--verbose", verbose, "print the stage trace");

  std::string expr, decls;
  auto* lattice = app.add_subcommand("lattice", "divisor-class arithmetic");
  lattice->require_subcommand(1);
  auto* eval = lattice->add_subcommand("eval", "evaluate a class expression");
  eval->add_option("expr", expr, "expression, e.g. \"(3K-R).(3K-R)\"")->required();
  eval->add_option("--decls", decls, "lattice declaration file (default: built-in V lattice)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      VerifyConfig cfg;
      if (const char* env = std::getenv("GODEAUX_OUTPUT_DIR")) cfg.output_dir = env;
      if (!config_path.empty()) apply_config_file(config_path, cfg);
      for (const auto& s : suite_flags)
        for (auto& item : split_list(s)) flags.suites.push_back(item);
      if (!flags.suites.empty()) cfg.suites = flags.suites;
      if (*format_opt) cfg.format = flags.format;
      if (*outdir_opt) cfg.output_dir = flags.output_dir;
      if (*perturb_flag) cfg.perturb = flags.perturb;
      return run_verify(cfg);
    }
    if (*dump) {
      const auto s = build_quintic(build_parameters());
      std::cout << dump_quintic(s, *real_opt ? std::optional<int>(real_digits) : std::nullopt);
      return kOk;
    }
    if (*cert) {
      if (point.empty() && input.empty()) throw UsageError("certify-germ needs --point or --input");
      return run_certify(point, input, verbose);
    }
    if (*eval) return run_lattice_eval(expr, decls);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
