#include "sal/sal.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "sal/axial.hpp"
#include "sal/error.hpp"
#include "sal/idempotents.hpp"
#include "sal/report.hpp"

struct sal_sts {
  sal::BlockSet base;
  std::optional<sal::SteinerTripleSystem> sts;  // absent when pairs are uncovered
};

namespace {

thread_local std::string g_last_error;

sal_status status_of(const sal::Error& e) {
  switch (e.code()) {
    case sal::ErrorCode::ParseError: return SAL_ERR_PARSE;
    case sal::ErrorCode::IoError: return SAL_ERR_IO;
    case sal::ErrorCode::ExcludedBeta: return SAL_ERR_EXCLUDED_BETA;
    case sal::ErrorCode::ClosureCapExceeded: return SAL_ERR_CAP_EXCEEDED;
    case sal::ErrorCode::UncoveredPair: return SAL_ERR_NOT_STS;
    case sal::ErrorCode::MalformedBlock:
    case sal::ErrorCode::DuplicatePairInTwoBlocks:
    case sal::ErrorCode::NotAPermutation:
    case sal::ErrorCode::InvalidOrder:
    case sal::ErrorCode::InvalidDimension: return SAL_ERR_VALIDATION;
    default: return SAL_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
sal_status guarded(F&& f) {
  try {
    return f();
  } catch (const sal::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SAL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SAL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sal_status wrap_blockset(sal::BlockSet b, sal_sts** out) {
  auto* h = new sal_sts{std::move(b), std::nullopt};
  try {
    h->sts = sal::as_sts(h->base);
  } catch (const sal::Error&) {
    // a valid PSTS that is not an STS is still a usable handle
  }
  *out = h;
  return SAL_OK;
}

const sal::SteinerTripleSystem& need_sts(const sal_sts* s) {
  if (s == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null handle");
  if (!s->sts)
    throw sal::Error(sal::ErrorCode::UncoveredPair, "block set is not a Steiner triple system");
  return *s->sts;
}

sal::Rational parse_beta(const char* beta) {
  if (beta == nullptr) throw sal::Error(sal::ErrorCode::ParseError, "beta is null");
  return sal::Rational::parse(beta);
}

constexpr uint64_t kDefaultCap = 1000000;

}  // namespace

extern "C" {

const char* sal_version(void) { return "0.1.0"; }

const char* sal_last_error(void) { return g_last_error.c_str(); }

void sal_string_free(char* s) { std::free(s); }

sal_status sal_sts_construct_ag(int m, sal_sts** out) {
  return guarded([&] { return wrap_blockset(sal::construct_ag(m).base(), out); });
}

sal_status sal_sts_construct_fano(sal_sts** out) {
  return guarded([&] { return wrap_blockset(sal::construct_fano().base(), out); });
}

sal_status sal_sts_construct_bose(int n, sal_sts** out) {
  return guarded([&] { return wrap_blockset(sal::construct_bose(n).base(), out); });
}

sal_status sal_sts_construct_skolem(int n, sal_sts** out) {
  return guarded([&] { return wrap_blockset(sal::construct_skolem(n).base(), out); });
}

sal_status sal_sts_read_file(const char* path, sal_sts** out) {
  return guarded([&] {
    if (path == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null path");
    return wrap_blockset(sal::read_sts_file(path), out);
  });
}

sal_status sal_sts_read_string(const char* text, sal_sts** out) {
  return guarded([&] {
    if (text == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null text");
    return wrap_blockset(sal::read_sts_string(text), out);
  });
}

void sal_sts_free(sal_sts* s) { delete s; }

sal_status sal_sts_write_file(const sal_sts* s, const char* path) {
  return guarded([&] {
    if (s == nullptr || path == nullptr)
      throw sal::Error(sal::ErrorCode::InvalidArgument, "null argument");
    sal::write_sts_file(s->base, path);
    return SAL_OK;
  });
}

sal_status sal_sts_to_string(const sal_sts* s, char** out) {
  return guarded([&] {
    if (s == nullptr || out == nullptr)
      throw sal::Error(sal::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(sal::write_sts(s->base));
    return SAL_OK;
  });
}

int sal_sts_point_count(const sal_sts* s) { return s ? s->base.n : -1; }

int sal_sts_block_count(const sal_sts* s) {
  return s ? static_cast<int>(s->base.blocks.size()) : -1;
}

int sal_sts_replication(const sal_sts* s) {
  if (s == nullptr) return -1;
  sal::ReplicationProfile p = sal::validate_psts(s->base);
  return p.regular ? p.r : 0;
}

sal_status sal_sts_is_hall(const sal_sts* s, int* hall_out) {
  return guarded([&] {
    if (hall_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    *hall_out = sal::is_hall(need_sts(s)).hall ? 1 : 0;
    return SAL_OK;
  });
}

sal_status sal_sts_join(const sal_sts* s, int i, int j, int* out) {
  return guarded([&] {
    if (out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    *out = need_sts(s).join(i, j);
    return SAL_OK;
  });
}

sal_status sal_sts_validate_json(const sal_sts* s, char** json_out) {
  return guarded([&] {
    if (s == nullptr || json_out == nullptr)
      throw sal::Error(sal::ErrorCode::InvalidArgument, "null argument");
    *json_out = dup_string(sal::validate_json(s->base));
    return SAL_OK;
  });
}

sal_status sal_analyze_json(const sal_sts* s, const char* beta, const char* checks_csv,
                            uint64_t closure_cap, int with_timings, char** json_out, int* failed,
                            int* undecided) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    sal::AnalyzeOptions opts;
    if (checks_csv != nullptr && checks_csv[0] != '\0') {
      std::string csv = checks_csv;
      std::size_t pos = 0;
      while (pos != std::string::npos) {
        std::size_t comma = csv.find(',', pos);
        std::string name = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!name.empty()) {
          const auto& known = sal::all_check_names();
          if (std::find(known.begin(), known.end(), name) == known.end())
            throw sal::Error(sal::ErrorCode::InvalidArgument, "unknown check: " + name);
          opts.checks.push_back(name);
        }
        pos = comma == std::string::npos ? comma : comma + 1;
      }
    }
    opts.closure_cap = closure_cap == 0 ? kDefaultCap : closure_cap;
    opts.include_timings = with_timings != 0;
    sal::AnalyzeOutcome out = sal::analyze(need_sts(s), parse_beta(beta), opts);
    *json_out = dup_string(out.json);
    if (failed != nullptr) *failed = out.failed;
    if (undecided != nullptr) *undecided = out.undecided;
    return SAL_OK;
  });
}

sal_status sal_sweep_json(const sal_sts* s, const char* const* betas, size_t n_betas,
                          char** json_out) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    std::vector<sal::Rational> bs;
    for (size_t i = 0; i < n_betas; ++i) bs.push_back(parse_beta(betas[i]));
    *json_out = dup_string(sal::sweep_json(need_sts(s), bs));
    return SAL_OK;
  });
}

sal_status sal_catalog_json(const sal_sts* s, const char* beta, char** json_out) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    *json_out = dup_string(sal::catalog_json(need_sts(s), parse_beta(beta)));
    return SAL_OK;
  });
}

sal_status sal_group_json(const sal_sts* s, uint64_t cap, char** json_out) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    *json_out = dup_string(sal::group_json(need_sts(s), cap == 0 ? kDefaultCap : cap));
    return SAL_OK;
  });
}

sal_status sal_algebra_json(const sal_sts* s, const char* beta, char** json_out) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    sal::Algebra a = sal::build_t_beta(need_sts(s), parse_beta(beta));
    *json_out = dup_string(sal::algebra_to_json(a));
    return SAL_OK;
  });
}

sal_status sal_fusion_verdict_json(const sal_sts* s, const char* beta, int axis, char** json_out) {
  return guarded([&] {
    if (json_out == nullptr) throw sal::Error(sal::ErrorCode::InvalidArgument, "null out");
    const sal::SteinerTripleSystem& sys = need_sts(s);
    sal::Rational b = parse_beta(beta);
    sal::Algebra a = sal::build_t_beta(sys, b);
    sal::FusionLaw law = sal::fusion_table_for(sys.n(), b);
    *json_out = dup_string(sal::fusion_verdict_json(a, axis, law));
    return SAL_OK;
  });
}

}  // extern "C"
