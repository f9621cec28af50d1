// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ehalg/ehalg.h"

namespace {

struct SystemDeleter {
  void operator()(ehalg_system* p) const { ehalg_system_free(p); }
};
struct GroupoidDeleter {
  void operator()(ehalg_groupoid* p) const { ehalg_groupoid_free(p); }
};
struct ReportDeleter {
  void operator()(ehalg_report* p) const { ehalg_report_free(p); }
};
using SystemHandle = std::unique_ptr<ehalg_system, SystemDeleter>;
using GroupoidHandle = std::unique_ptr<ehalg_groupoid, GroupoidDeleter>;
using ReportHandle = std::unique_ptr<ehalg_report, ReportDeleter>;

// Thrown to unwind with a library status already reported on stderr.
struct Failed {
  ehalg_status status;
};

int exit_code(ehalg_status s) {
  switch (s) {
    case EHALG_OK: return 0;
    case EHALG_ERR_VALIDATION:
    case EHALG_ERR_VERIFICATION: return 1;
    case EHALG_ERR_INVALID_ARGUMENT:
    case EHALG_ERR_PARSE: return 2;
    case EHALG_ERR_GUARD: return 3;
    case EHALG_ERR_IO: return 4;
    default: return 70;
  }
}

const char* status_name(ehalg_status s) {
  switch (s) {
    case EHALG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EHALG_ERR_PARSE: return "parse error";
    case EHALG_ERR_VALIDATION: return "validation failed";
    case EHALG_ERR_GUARD: return "guard exceeded";
    case EHALG_ERR_VERIFICATION: return "verification failed";
    case EHALG_ERR_IO: return "i/o error";
    default: return "internal error";
  }
}

void check(ehalg_status s, const std::string& context) {
  if (s == EHALG_OK) return;
  std::cerr << "ehalg: " << status_name(s) << ": " << context << (context.empty() ? "" : ": ") << ehalg_last_error()
            << "\n";
  throw Failed{s};
}

struct Options {
  std::string field;
  ehalg_limits limits = ehalg_default_limits();
  std::string json_out;
};

SystemHandle load_system(const std::string& path, const Options& opt) {
  ehalg_system* raw = nullptr;
  check(ehalg_system_load(path.c_str(), &raw), path);
  SystemHandle sys(raw);
  if (!opt.field.empty()) check(ehalg_system_set_field(sys.get(), opt.field.c_str()), "--field");
  return sys;
}

GroupoidHandle load_groupoid(const std::string& path, const Options& opt) {
  ehalg_groupoid* raw = nullptr;
  check(ehalg_groupoid_load(path.c_str(), &raw), path);
  GroupoidHandle g(raw);
  if (!opt.field.empty()) check(ehalg_groupoid_set_field(g.get(), opt.field.c_str()), "--field");
  return g;
}

// Runs a command that fills in a report, then prints it.
template <class F>
int emit(F&& command, const Options& opt) {
  ehalg_report* raw = nullptr;
  check(command(&raw), "");
  ReportHandle report(raw);
  const char* json = ehalg_report_json(report.get());
  if (opt.json_out == "-") {
    std::cout << json;
  } else {
    std::cout << ehalg_report_text(report.get());
    if (!opt.json_out.empty()) {
      std::ofstream out(opt.json_out, std::ios::binary);
      if (!out) {
        std::cerr << "ehalg: i/o error: cannot write '" << opt.json_out << "'\n";
        return exit_code(EHALG_ERR_IO);
      }
      out << json;
    }
  }
  return ehalg_report_ok(report.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed products of inverse semigroup actions, Steinberg algebras and ideal decompositions"};
  app.require_subcommand(0, 1);
  Options opt;
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "Run the built-in fixture suite");
  app.add_option("--field", opt.field, "Field override: 'F p' (p prime) or 'Q'");
  app.add_option("--guard-dim", opt.limits.guard_dim, "Largest crossed product dimension")->capture_default_str();
  app.add_option("--bisect-guard", opt.limits.bisect_guard, "Largest groupoid for bisection enumeration")
      ->capture_default_str();
  app.add_option("--oracle-guard", opt.limits.oracle_guard, "Largest algebra for exhaustive ideal enumeration")
      ->capture_default_str();
  app.add_option("--json-out", opt.json_out, "Write the JSON report to this path ('-' prints it instead of text)");
  app.set_version_flag("--version", std::string(ehalg_version()));

  std::string path;
  std::vector<std::string> gens;
  auto add_verb = [&](const char* name, const char* help, const char* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", path, what)->required();
    return sub;
  };
  auto* validate = add_verb("validate", "Check the axioms of a system or groupoid file", "system or groupoid file");
  auto* build = add_verb("build", "Build the crossed product and print its structure constants", "system file");
  auto* germs = add_verb("germs", "Print the groupoid of germs, orbits and isotropy groups", "system file");
  auto* decompose = add_verb("decompose", "Certify an ideal as an intersection of induced ideals", "system file");
  decompose->add_option("--gen", gens, "Ideal generator such as '1*x:1 + 1*x:g' (repeatable)")->required();
  auto* isocheck = add_verb("isocheck", "Verify the crossed product is the Steinberg algebra of the germs",
                            "system file");
  auto* bisect = add_verb("bisect", "Realize a groupoid algebra as a crossed product by bisections", "groupoid file");
  auto* oracle = add_verb("oracle", "Enumerate all ideals and audit each decomposition", "system file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures) return emit([&](ehalg_report** r) { return ehalg_cmd_fixtures(&opt.limits, r); }, opt);
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return 2;
    }
    if (validate->parsed()) {
      int is_groupoid = 0;
      check(ehalg_path_is_groupoid(path.c_str(), &is_groupoid), path);
      if (is_groupoid) {
        auto g = load_groupoid(path, opt);
        return emit([&](ehalg_report** r) { return ehalg_cmd_validate_groupoid(g.get(), r); }, opt);
      }
      auto sys = load_system(path, opt);
      return emit([&](ehalg_report** r) { return ehalg_cmd_validate(sys.get(), r); }, opt);
    }
    if (bisect->parsed()) {
      auto g = load_groupoid(path, opt);
      return emit([&](ehalg_report** r) { return ehalg_cmd_bisect(g.get(), &opt.limits, r); }, opt);
    }
    auto sys = load_system(path, opt);
    using Command = ehalg_status (*)(const ehalg_system*, const ehalg_limits*, ehalg_report**);
    auto run = [&](Command cmd) { return emit([&](ehalg_report** r) { return cmd(sys.get(), &opt.limits, r); }, opt); };
    if (build->parsed()) return run(ehalg_cmd_build);
    if (germs->parsed()) return run(ehalg_cmd_germs);
    if (isocheck->parsed()) return run(ehalg_cmd_isocheck);
    if (oracle->parsed()) return run(ehalg_cmd_oracle);
    if (decompose->parsed()) {
      std::vector<const char*> ptrs;
      for (const auto& g : gens) ptrs.push_back(g.c_str());
      return emit(
          [&](ehalg_report** r) { return ehalg_cmd_decompose(sys.get(), ptrs.data(), ptrs.size(), &opt.limits, r); },
          opt);
    }
  } catch (const Failed& f) {
    return exit_code(f.status);
  }
  return 2;
}
