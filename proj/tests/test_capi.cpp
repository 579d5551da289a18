// Exercises the shared-library C interface the way an external client would:
// through sal/sal.h only.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "sal/sal.h"

#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                         \
    }                                                                   \
  } while (0)

static int failures = 0;
#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static std::string take(char* s) {
  std::string out = s ? s : "";
  sal_string_free(s);
  return out;
}

int main() {
  REQUIRE(std::strcmp(sal_version(), "0.1.0") == 0);

  // constructions and queries
  sal_sts* ag2 = nullptr;
  REQUIRE(sal_sts_construct_ag(2, &ag2) == SAL_OK);
  CHECK(sal_sts_point_count(ag2) == 9);
  CHECK(sal_sts_block_count(ag2) == 12);
  CHECK(sal_sts_replication(ag2) == 4);
  int hall = 0, third = 0;
  CHECK(sal_sts_is_hall(ag2, &hall) == SAL_OK);
  CHECK(hall == 1);
  CHECK(sal_sts_join(ag2, 1, 5, &third) == SAL_OK);
  CHECK(third == 9);

  // error paths set a message and a specific status
  sal_sts* bad = nullptr;
  CHECK(sal_sts_construct_bose(8, &bad) == SAL_ERR_VALIDATION);
  CHECK(std::strlen(sal_last_error()) > 0);
  CHECK(sal_sts_read_file("/nonexistent/file.sts", &bad) == SAL_ERR_IO);
  CHECK(sal_sts_read_string("4\n1 2 3\n1 2 4\n", &bad) == SAL_ERR_VALIDATION);
  CHECK(sal_sts_read_string("not a number\n", &bad) == SAL_ERR_PARSE);

  // a valid partial system parses but join-level calls refuse it
  sal_sts* partial = nullptr;
  REQUIRE(sal_sts_read_string("7\n1 2 3\n", &partial) == SAL_OK);
  CHECK(sal_sts_join(partial, 4, 5, &third) == SAL_ERR_NOT_STS);
  char* vj = nullptr;
  CHECK(sal_sts_validate_json(partial, &vj) == SAL_OK);
  CHECK(take(vj).find("\"sts\": false") != std::string::npos);
  sal_sts_free(partial);

  // round trip through the canonical text form
  char* text = nullptr;
  REQUIRE(sal_sts_to_string(ag2, &text) == SAL_OK);
  std::string form = take(text);
  sal_sts* again = nullptr;
  REQUIRE(sal_sts_read_string(form.c_str(), &again) == SAL_OK);
  char* text2 = nullptr;
  REQUIRE(sal_sts_to_string(again, &text2) == SAL_OK);
  CHECK(take(text2) == form);
  sal_sts_free(again);

  // analyze: all checks pass at a generic beta, and the report is stable
  char* json1 = nullptr;
  char* json2 = nullptr;
  int failed = -1, undecided = -1;
  REQUIRE(sal_analyze_json(ag2, "2", nullptr, 0, 0, &json1, &failed, &undecided) == SAL_OK);
  CHECK(failed == 0);
  CHECK(undecided == 0);
  REQUIRE(sal_analyze_json(ag2, "2", nullptr, 0, 0, &json2, nullptr, nullptr) == SAL_OK);
  std::string r1 = take(json1), r2 = take(json2);
  CHECK(r1 == r2);
  CHECK(r1.find("\"schema\": \"1\"") != std::string::npos);

  // check subsetting and bad names
  char* jsub = nullptr;
  REQUIRE(sal_analyze_json(ag2, "1/3", "exactness,killing_gram", 0, 0, &jsub, &failed,
                           &undecided) == SAL_OK);
  std::string sub = take(jsub);
  CHECK(sub.find("exactness") != std::string::npos);
  CHECK(sub.find("tight_frame") == std::string::npos);
  CHECK(sal_analyze_json(ag2, "1/3", "nonsense", 0, 0, &jsub, nullptr, nullptr) ==
        SAL_ERR_INVALID_ARGUMENT);

  // beta parsing is exact-only
  CHECK(sal_analyze_json(ag2, "0.5", nullptr, 0, 0, &jsub, nullptr, nullptr) == SAL_ERR_PARSE);

  // sweep / catalog / group / algebra / fusion endpoints
  const char* betas[] = {"1", "-4/3"};
  char* out = nullptr;
  REQUIRE(sal_sweep_json(ag2, betas, 2, &out) == SAL_OK);
  CHECK(take(out).find("\"rows\"") != std::string::npos);

  REQUIRE(sal_catalog_json(ag2, "1", &out) == SAL_OK);
  CHECK(take(out).find("e0_B") != std::string::npos);

  REQUIRE(sal_group_json(ag2, 0, &out) == SAL_OK);
  std::string g = take(out);
  CHECK(g.find("\"order\": 18") != std::string::npos);
  CHECK(g.find("\"commutator_order\": 9") != std::string::npos);

  CHECK(sal_group_json(ag2, 5, &out) == SAL_ERR_CAP_EXCEEDED);

  REQUIRE(sal_algebra_json(ag2, "1/8", &out) == SAL_OK);
  CHECK(take(out).find("\"kind\": \"steiner_t\"") != std::string::npos);

  REQUIRE(sal_fusion_verdict_json(ag2, "1/8", 1, &out) == SAL_OK);
  std::string f = take(out);
  CHECK(f.find("\"law\": \"jordan\"") != std::string::npos);
  CHECK(f.find("\"ok\": true") != std::string::npos);
  CHECK(sal_fusion_verdict_json(ag2, "0", 1, &out) == SAL_ERR_EXCLUDED_BETA);

  sal_sts_free(ag2);
  sal_sts_free(nullptr);  // must be a no-op

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
