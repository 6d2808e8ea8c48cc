#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "scld/scld.h"

namespace {

struct Str {
  char* text = nullptr;
  ~Str() { scld_string_free(text); }
  std::string s() const { return text ? text : ""; }
};

}  // namespace

TEST_CASE("complex lifecycle through the C api") {
  const int32_t verts[] = {0, 1, 2};
  const int32_t sizes[] = {3};
  scld_complex* K = nullptr;
  REQUIRE(scld_complex_from_facets(3, verts, sizes, 1, &K) == SCLD_OK);
  CHECK(scld_complex_vertex_count(K) == 3);
  CHECK(scld_complex_dimension(K) == 2);
  int64_t counts[4] = {0};
  int32_t written = 0;
  CHECK(scld_complex_counts(K, counts, 4, &written) == SCLD_OK);
  CHECK(written == 3);
  CHECK(counts[0] == 3);
  CHECK(counts[2] == 1);

  uint64_t aut = 0;
  CHECK(scld_automorphism_count(K, &aut) == SCLD_OK);
  CHECK(aut == 6);

  scld_complex* skel = nullptr;
  CHECK(scld_complex_skeleton(K, 1, &skel) == SCLD_OK);
  CHECK(scld_complex_dimension(skel) == 1);

  scld_complex* hollow = nullptr;
  REQUIRE(scld_complex_from_json(R"({"n":3,"facets":[[0,1],[1,2],[0,2]]})",
                                 &hollow) == SCLD_OK);
  int32_t iso = -1;
  CHECK(scld_are_isomorphic(skel, hollow, &iso) == SCLD_OK);
  CHECK(iso == 1);

  Str json;
  CHECK(scld_complex_to_json(K, &json.text) == SCLD_OK);
  CHECK(json.s().find("\"n\":3") != std::string::npos);

  scld_complex_free(K);
  scld_complex_free(skel);
  scld_complex_free(hollow);
}

TEST_CASE("error codes and messages") {
  scld_complex* K = nullptr;
  CHECK(scld_complex_from_json("{\"n\":2,\"facets\":[[0,5]]}", &K) ==
        SCLD_ERROR_INVALID_INPUT);
  CHECK(std::strlen(scld_last_error()) > 0);
  CHECK(scld_complex_from_json("not json", &K) == SCLD_ERROR_INVALID_INPUT);
  CHECK(scld_complex_read_file("/no/such/file.json", &K) == SCLD_ERROR_IO);

  // oracle guard
  REQUIRE(scld_complex_from_json(R"({"n":2,"facets":[[0,1]]})", &K) == SCLD_OK);
  const int64_t bounds[] = {9, 3};
  int64_t value = 0;
  CHECK(scld_oracle_n(K, bounds, 2, &value) == SCLD_ERROR_GUARD);
  const int64_t ok_bounds[] = {3, 3};
  CHECK(scld_oracle_n(K, ok_bounds, 2, &value) == SCLD_OK);
  CHECK(value == 3);
  scld_complex_free(K);
  CHECK(std::string(scld_status_name(SCLD_ERROR_GUARD)) == "guard-exceeded");
}

TEST_CASE("model, sampling and counting through the C api") {
  const char* alphas[] = {"0.5"};
  scld_model* model = nullptr;
  REQUIRE(scld_model_from_alphas(12, alphas, 1, 2, &model) == SCLD_OK);
  scld_complex* K1 = nullptr;
  scld_complex* K2 = nullptr;
  REQUIRE(scld_sample(model, 42, &K1) == SCLD_OK);
  REQUIRE(scld_sample(model, 42, &K2) == SCLD_OK);
  Str j1, j2;
  CHECK(scld_complex_to_json(K1, &j1.text) == SCLD_OK);
  CHECK(scld_complex_to_json(K2, &j2.text) == SCLD_OK);
  CHECK(j1.s() == j2.s());

  scld_complex* edge = nullptr;
  REQUIRE(scld_complex_from_json(R"({"n":2,"facets":[[0,1]]})", &edge) == SCLD_OK);
  uint64_t ordered = 0;
  CHECK(scld_count_ordered(K1, edge, &ordered) == SCLD_OK);
  int64_t counts[3] = {0};
  int32_t written = 0;
  CHECK(scld_complex_counts(K1, counts, 3, &written) == SCLD_OK);
  if (written > 1) CHECK(ordered == 2 * static_cast<uint64_t>(counts[1]));

  Str mean;
  CHECK(scld_mean_json(model, edge, &mean.text) == SCLD_OK);
  CHECK(mean.s().find("psi_exponent") != std::string::npos);

  scld_model_free(model);
  scld_complex_free(K1);
  scld_complex_free(K2);
  scld_complex_free(edge);
}

TEST_CASE("gamma json surfaces") {
  scld_complex* edge = nullptr;
  REQUIRE(scld_complex_from_json(R"({"n":2,"facets":[[0,1]]})", &edge) == SCLD_OK);
  const double bounds[] = {10.0, 4.0};
  Str flt;
  CHECK(scld_gamma_json(edge, bounds, 2, &flt.text) == SCLD_OK);
  CHECK(flt.s().find("\"gamma\":1.386294") != std::string::npos);
  CHECK(flt.s().find("nhat_upper") != std::string::npos);

  const char* betas[] = {"3/2", "1"};
  Str exact;
  CHECK(scld_gamma_exponent_json(edge, 10, betas, 2, &exact.text) == SCLD_OK);
  CHECK(exact.s().find("\"gamma_exponent\":\"1\"") != std::string::npos);
  scld_complex_free(edge);
}

TEST_CASE("mstar and sweep through the C api") {
  const char* alphas[] = {"0.5"};
  scld_model* model = nullptr;
  REQUIRE(scld_model_from_alphas(100, alphas, 1, 1, &model) == SCLD_OK);
  scld_complex* edge = nullptr;
  REQUIRE(scld_complex_from_json(R"({"n":2,"facets":[[0,1]]})", &edge) == SCLD_OK);
  Str mstar;
  CHECK(scld_mstar_json(model, edge, 0, 2, &mstar.text) == SCLD_OK);
  CHECK(mstar.s().find("\"value\":1000") != std::string::npos);

  const int32_t grid[] = {50, 100};
  Str csv;
  CHECK(scld_sweep_csv(edge, alphas, 1, grid, 2, 2, &csv.text) == SCLD_OK);
  CHECK(csv.s().rfind("# scld-sweep-v1", 0) == 0);
  scld_model_free(model);
  scld_complex_free(edge);
}

TEST_CASE("betti and free counts through the C api") {
  scld_complex* sphere = nullptr;
  REQUIRE(scld_complex_from_json(
              R"({"n":4,"facets":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})", &sphere) ==
          SCLD_OK);
  int64_t betti[3] = {0};
  int32_t written = 0;
  CHECK(scld_betti(sphere, 2, betti, 3, &written) == SCLD_OK);
  CHECK(written == 3);
  CHECK(betti[0] == 1);
  CHECK(betti[1] == 0);
  CHECK(betti[2] == 1);
  CHECK(scld_betti(sphere, 6, betti, 3, &written) == SCLD_ERROR_INVALID_INPUT);
  int64_t free_faces = 0;
  CHECK(scld_free_count(sphere, 2, &free_faces) == SCLD_OK);
  CHECK(free_faces == 4);
  scld_complex_free(sphere);
}

TEST_CASE("tail runs are byte-identical across repeats and thread counts") {
  const char* config = R"({"n":8,"p":[0.3],"pattern":{"n":2,"facets":[[0,1]]},
    "epsilon":0.5,"trials":4000,"seed":123,"target":"ordered-count"})";
  Str csv1, sum1, csv2, sum2;
  REQUIRE(scld_tail_mc(config, 1, &csv1.text, &sum1.text) == SCLD_OK);
  REQUIRE(scld_tail_mc(config, 4, &csv2.text, &sum2.text) == SCLD_OK);
  CHECK(csv1.s() == csv2.s());
  CHECK(sum1.s() == sum2.s());
  CHECK(scld_tail_mc("{}", 1, nullptr, nullptr) == SCLD_ERROR_INVALID_INPUT);
}

TEST_CASE("exponent report through the C api") {
  scld_complex* edge = nullptr;
  REQUIRE(scld_complex_from_json(R"({"n":2,"facets":[[0,1]]})", &edge) == SCLD_OK);
  const char* alphas[] = {"0.4"};
  const int32_t grid[] = {100, 1000};
  Str csv, json;
  CHECK(scld_exponent_report(edge, alphas, 1, grid, 2, 0.5, 0, 1, 1, &csv.text) ==
        SCLD_OK);
  CHECK(csv.s().rfind("# scld-exponent-report-v1", 0) == 0);
  CHECK(scld_exponent_report(edge, alphas, 1, grid, 2, 0.5, 0, 1, 0, &json.text) ==
        SCLD_OK);
  CHECK(json.s().find("\"subcritical_ok\":true") != std::string::npos);
  scld_complex_free(edge);
}
