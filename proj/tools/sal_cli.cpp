// Command-line front end. Talks to the library exclusively through the C
// interface in sal/sal.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sal/sal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StsDeleter {
  void operator()(sal_sts* s) const { sal_sts_free(s); }
};
using StsHandle = std::unique_ptr<sal_sts, StsDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sal_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

int exit_code_for(sal_status st) {
  switch (st) {
    case SAL_ERR_PARSE:
    case SAL_ERR_IO:
    case SAL_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitCheckFailed;
  }
}

void check(sal_status st) {
  if (st != SAL_OK) die(exit_code_for(st), sal_last_error());
}

StsHandle load(const std::string& path) {
  sal_sts* raw = nullptr;
  check(sal_sts_read_file(path.c_str(), &raw));
  return StsHandle(raw);
}

void emit(const std::string& text, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(json_path);
  if (!f) die(kExitUsage, "cannot open " + json_path + " for writing");
  f << text << "\n";
}

uint64_t closure_cap_from(uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("SAL_CLOSURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
    die(kExitUsage, "SAL_CLOSURE_CAP must be a positive integer");
  }
  return 0;  // library default
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner triple systems, their exact commutative algebras, and the verification battery"};
  app.require_subcommand(1);

  // construct
  std::string c_kind, c_out;
  int c_order = 0;
  auto* construct = app.add_subcommand("construct", "construct a triple system and write its file");
  construct->add_option("kind", c_kind, "ag | fano | bose | skolem")->required();
  construct->add_option("order", c_order, "m for ag, n for bose/skolem");
  construct->add_option("-o,--output", c_out, "output file (default stdout)");

  // validate
  std::string v_file, v_json;
  auto* validate = app.add_subcommand("validate", "validate an STS file and report its profile");
  validate->add_option("file", v_file)->required();
  validate->add_option("--json", v_json, "write the report to this path");

  // analyze
  std::string a_file, a_json, a_checks;
  std::vector<std::string> a_betas;
  uint64_t a_cap = 0;
  bool a_timings = false;
  auto* analyze = app.add_subcommand("analyze", "run the verification battery per beta");
  analyze->add_option("file", a_file)->required();
  analyze->add_option("--beta", a_betas, "exact rational, repeatable")->required();
  analyze->add_option("--checks", a_checks, "comma-separated subset of checks");
  analyze->add_option("--json", a_json, "write report(s) to this path");
  analyze->add_option("--closure-cap", a_cap, "group closure cap (default 10^6)");
  analyze->add_flag("--timings", a_timings, "include timings (breaks byte-determinism)");

  // sweep
  std::string s_file, s_json;
  std::vector<std::string> s_betas;
  auto* sweep = app.add_subcommand("sweep", "parameter sweep; transitional betas always included");
  sweep->add_option("file", s_file)->required();
  sweep->add_option("--beta", s_betas, "exact rational, repeatable");
  sweep->add_option("--json", s_json);

  // catalog
  std::string k_file, k_json, k_beta;
  auto* catalog = app.add_subcommand("catalog", "block idempotent catalogs");
  catalog->add_option("file", k_file)->required();
  catalog->add_option("--beta", k_beta)->required();
  catalog->add_option("--json", k_json);

  // group
  std::string g_file, g_json;
  uint64_t g_cap = 0;
  auto* group = app.add_subcommand("group", "Miyamoto group closure and 3-transposition checks");
  group->add_option("file", g_file)->required();
  group->add_option("--closure-cap", g_cap);
  group->add_option("--json", g_json);

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) {
    sal_sts* raw = nullptr;
    sal_status st = SAL_OK;
    if (c_kind != "fano" && c_order == 0)
      die(kExitUsage, c_kind + " needs an order argument");
    if (c_kind == "ag")
      st = sal_sts_construct_ag(c_order, &raw);
    else if (c_kind == "fano")
      st = sal_sts_construct_fano(&raw);
    else if (c_kind == "bose")
      st = sal_sts_construct_bose(c_order, &raw);
    else if (c_kind == "skolem")
      st = sal_sts_construct_skolem(c_order, &raw);
    else
      die(kExitUsage, "unknown construction: " + c_kind);
    check(st);
    StsHandle h(raw);
    if (c_out.empty()) {
      char* text = nullptr;
      check(sal_sts_to_string(h.get(), &text));
      CString guard(text);
      std::cout << text;
    } else {
      check(sal_sts_write_file(h.get(), c_out.c_str()));
      std::cerr << "wrote " << c_out << " (n=" << sal_sts_point_count(h.get())
                << ", b=" << sal_sts_block_count(h.get()) << ")\n";
    }
    return kExitOk;
  }

  if (validate->parsed()) {
    StsHandle h = load(v_file);
    char* json = nullptr;
    check(sal_sts_validate_json(h.get(), &json));
    CString guard(json);
    emit(json, v_json);
    return kExitOk;
  }

  if (analyze->parsed()) {
    StsHandle h = load(a_file);
    int total_failed = 0, total_undecided = 0;
    std::string combined;
    for (std::size_t i = 0; i < a_betas.size(); ++i) {
      char* json = nullptr;
      int failed = 0, undecided = 0;
      check(sal_analyze_json(h.get(), a_betas[i].c_str(),
                             a_checks.empty() ? nullptr : a_checks.c_str(),
                             closure_cap_from(a_cap), a_timings ? 1 : 0, &json, &failed,
                             &undecided));
      CString guard(json);
      total_failed += failed;
      total_undecided += undecided;
      std::cerr << "beta=" << a_betas[i] << ": " << failed << " failed, " << undecided
                << " undecided\n";
      if (a_betas.size() == 1) {
        combined = json;
      } else {
        combined += (i == 0 ? "[\n" : ",\n");
        combined += json;
        if (i + 1 == a_betas.size()) combined += "\n]";
      }
    }
    emit(combined, a_json);
    if (total_failed > 0) return kExitCheckFailed;
    if (total_undecided > 0) return kExitCheckFailed;
    return kExitOk;
  }

  if (sweep->parsed()) {
    StsHandle h = load(s_file);
    std::vector<const char*> betas;
    for (const auto& b : s_betas) betas.push_back(b.c_str());
    char* json = nullptr;
    check(sal_sweep_json(h.get(), betas.data(), betas.size(), &json));
    CString guard(json);
    emit(json, s_json);
    return kExitOk;
  }

  if (catalog->parsed()) {
    StsHandle h = load(k_file);
    char* json = nullptr;
    check(sal_catalog_json(h.get(), k_beta.c_str(), &json));
    CString guard(json);
    emit(json, k_json);
    return kExitOk;
  }

  if (group->parsed()) {
    StsHandle h = load(g_file);
    char* json = nullptr;
    check(sal_group_json(h.get(), closure_cap_from(g_cap), &json));
    CString guard(json);
    emit(json, g_json);
    return kExitOk;
  }

  return kExitUsage;
}
