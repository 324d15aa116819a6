// pgt: command-line front end over the libpgt C API.
//
// Exit status: 0 success, 1 check failure, 2 usage error, 3 capacity error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgt/pgt.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3 };

struct GroupDeleter {
  void operator()(pgt_group* g) const { pgt_group_free(g); }
};
using GroupPtr = std::unique_ptr<pgt_group, GroupDeleter>;

struct StringDeleter {
  void operator()(char* s) const { pgt_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int exit_for(pgt_status status) {
  switch (status) {
    case PGT_OK: return kOk;
    case PGT_ERR_CAPACITY: return kCapacity;
    case PGT_ERR_INTERNAL: return kCheckFailed;
    default: return kUsage;
  }
}

int report_error(pgt_status status, const std::string& input = {}) {
  std::cerr << "pgt: " << pgt_status_string(status) << ": " << pgt_last_error() << "\n";
  const std::size_t offset = pgt_last_error_offset();
  if (offset != SIZE_MAX && !input.empty()) {
    std::cerr << "  " << input << "\n  " << std::string(offset, ' ') << "^\n";
  }
  return exit_for(status);
}

struct Settings {
  bool json = false;
  std::optional<std::uint64_t> cap;
  std::string spec;
  std::string gens_file;
};

// --cap wins over PGT_ENUM_CAP, which wins over the built-in default.
int apply_cap(const Settings& s) {
  std::optional<std::uint64_t> cap = s.cap;
  if (!cap) {
    if (const char* env = std::getenv("PGT_ENUM_CAP")) {
      try {
        std::size_t used = 0;
        cap = std::stoull(env, &used);
        if (used != std::strlen(env)) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        std::cerr << "pgt: PGT_ENUM_CAP must be a positive integer, got '" << env << "'\n";
        return kUsage;
      }
    }
  }
  if (cap) {
    if (pgt_status st = pgt_set_enumeration_cap(*cap); st != PGT_OK) return report_error(st);
  }
  return kOk;
}

int load_group(const Settings& s, GroupPtr& out, std::string& label) {
  pgt_group* g = nullptr;
  if (!s.gens_file.empty()) {
    std::ifstream in(s.gens_file);
    if (!in) {
      std::cerr << "pgt: cannot read " << s.gens_file << "\n";
      return kUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (pgt_status st = pgt_group_from_perm_list(buffer.str().c_str(), &g); st != PGT_OK) {
      return report_error(st);
    }
    label = s.gens_file;
  } else {
    char* canonical = nullptr;
    if (pgt_status st = pgt_spec_canonical(s.spec.c_str(), &canonical); st != PGT_OK) {
      return report_error(st, s.spec);
    }
    label = CString(canonical).get();
    char* warnings = nullptr;
    if (pgt_spec_warnings(s.spec.c_str(), &warnings) == PGT_OK) {
      std::istringstream lines(CString(warnings).get());
      for (std::string line; std::getline(lines, line);) std::cerr << "warning: " << line << "\n";
    }
    if (pgt_status st = pgt_group_from_spec(s.spec.c_str(), &g); st != PGT_OK) {
      return report_error(st, s.spec);
    }
  }
  out.reset(g);
  return kOk;
}

int run_report(const Settings& s, pgt_scope scope, std::size_t max_steps, bool elements) {
  GroupPtr group;
  std::string label;
  if (int rc = load_group(s, group, label); rc != kOk) return rc;
  pgt_report_options opts;
  pgt_report_options_init(&opts);
  opts.scope = scope;
  opts.max_steps = max_steps;
  opts.include_elements = elements ? 1 : 0;
  opts.json = s.json ? 1 : 0;
  opts.indent = 2;
  char* text = nullptr;
  if (pgt_status st = pgt_report(group.get(), label.c_str(), &opts, &text); st != PGT_OK) {
    return report_error(st);
  }
  std::cout << CString(text).get();
  return kOk;
}

int run_verify(const Settings& s, const std::string& suite) {
  char* text = nullptr;
  int all_passed = 0;
  if (pgt_status st = pgt_verify(suite.c_str(), 1, s.json ? 1 : 0, nullptr, nullptr, &text,
                                 &all_passed);
      st != PGT_OK) {
    return report_error(st);
  }
  std::cout << CString(text).get();
  return all_passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudocentres of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_option("--cap", s.cap, "Enumeration cap (overrides PGT_ENUM_CAP)")
      ->check(CLI::PositiveNumber);

  auto add_group_input = [&](CLI::App* sub) {
    auto* spec = sub->add_option("spec", s.spec, "Group spec, e.g. \"Wr(C(2), A(5))\"");
    auto* gens = sub->add_option("--gens", s.gens_file, "File with generators, one image list per line")
                     ->check(CLI::ExistingFile);
    spec->excludes(gens);
    gens->excludes(spec);
  };

  CLI::App* info = app.add_subcommand("info", "Order, centre and derived subgroup");
  add_group_input(info);

  bool elements = false;
  CLI::App* pc = app.add_subcommand("pseudocentre", "Order of P(G) and the flags");
  add_group_input(pc);
  pc->add_flag("--elements", elements, "List the elements of P(G)");

  std::size_t max_steps = 30;
  CLI::App* series = app.add_subcommand("series", "Upper pseudocentral series");
  add_group_input(series);
  series->add_option("--max-steps", max_steps, "Step limit")->check(CLI::PositiveNumber);

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, std::string("One of: ") + pgt_suite_names())->required();

  CLI::App* fib = app.add_subcommand("fib", "Fibonacci and Pisano computations");
  fib->require_subcommand(1);
  std::uint64_t bound = 10000;
  CLI::App* scan = fib->add_subcommand("scan", "Scan primes for f(p^2) = 1, f(p^2-1) = 0 mod p^2");
  scan->add_option("--bound", bound, "Largest prime to test");
  std::uint64_t p = 0;
  CLI::App* condition = fib->add_subcommand("condition", "Test a single prime");
  condition->add_option("p", p, "Prime")->required();
  std::uint64_t t = 0, u = 0;
  CLI::App* dq = fib->add_subcommand("D", "D(U) = d1 d2 - c1^2 for a given T");
  dq->add_option("T", t, "T >= 2")->required();
  dq->add_option("U", u, "U >= 1")->required();
  std::uint64_t m = 0;
  CLI::App* pisano = fib->add_subcommand("pisano", "Pisano period of m");
  pisano->add_option("m", m, "Modulus >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  for (CLI::App* sub : {info, pc, series}) {
    if (sub->parsed() && s.spec.empty() && s.gens_file.empty()) {
      std::cerr << "pgt " << sub->get_name() << ": a group spec or --gens FILE is required\n";
      return kUsage;
    }
  }
  if (int rc = apply_cap(s); rc != kOk) return rc;

  if (info->parsed()) return run_report(s, PGT_SCOPE_INFO, max_steps, false);
  if (pc->parsed()) return run_report(s, PGT_SCOPE_PSEUDOCENTRE, max_steps, elements);
  if (series->parsed()) return run_report(s, PGT_SCOPE_SERIES, max_steps, false);
  if (verify->parsed()) return run_verify(s, suite);

  char* text = nullptr;
  const int json = s.json ? 1 : 0;
  pgt_status st = PGT_OK;
  if (scan->parsed()) st = pgt_fib_scan_report(bound, 1, json, &text);
  if (condition->parsed()) st = pgt_fib_condition_report(p, json, &text);
  if (dq->parsed()) st = pgt_fib_d_report(t, u, json, &text);
  if (pisano->parsed()) st = pgt_fib_pisano_report(m, json, &text);
  if (st != PGT_OK) return report_error(st);
  if (text == nullptr) return kUsage;
  std::cout << CString(text).get();
  return kOk;
}
