#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "plifs.h"

namespace {

struct Str {
  char *p = nullptr;
  ~Str() { plifs_string_free(p); }
  std::string get() const { return p ? std::string(p) : std::string(); }
};

const char *kLam1 =
    R"({"ambient":"interval","lo":"0/1","hi":"1/1","arcs":[{"lo":"0/1","hi":"1/3","wraps":false},{"lo":"2/3","hi":"1/1","wraps":false}]})";
const char *kFull = R"({"ambient":"interval","lo":"0/1","hi":"1/1","arcs":[{"lo":"0/1","hi":"1/1","wraps":false}]})";

} // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(plifs_version()) == "1.0.0");
  CHECK(std::string(plifs_status_name(PLIFS_OK)) == "ok");
  CHECK(std::string(plifs_status_name(PLIFS_ERR_OVERFLOW)) == "Overflow");
}

TEST_CASE("arcset round trip and algebra") {
  plifs_arcset *a = nullptr;
  REQUIRE(plifs_arcset_from_json(kLam1, &a) == PLIFS_OK);
  Str json;
  REQUIRE(plifs_arcset_to_json(a, &json.p) == PLIFS_OK);
  CHECK(json.get() == std::string(kLam1)); // canonical form is stable

  plifs_arcset *full = nullptr, *inter = nullptr;
  REQUIRE(plifs_arcset_from_json(kFull, &full) == PLIFS_OK);
  REQUIRE(plifs_arcset_intersect(a, full, &inter) == PLIFS_OK);
  CHECK(plifs_arcset_equal(inter, a) == 1);

  Str dist;
  REQUIRE(plifs_arcset_hausdorff(a, full, &dist.p) == PLIFS_OK);
  CHECK(dist.get() == "1/6");

  Str stats;
  REQUIRE(plifs_arcset_stats(a, &stats.p) == PLIFS_OK);
  CHECK(stats.get() ==
        R"({"count":2,"min_len":"1/3","max_len":"1/3","total_len":"2/3"})");

  plifs_arcset *comp = nullptr;
  REQUIRE(plifs_arcset_complement(a, &comp) == PLIFS_OK);
  Str comp_json;
  REQUIRE(plifs_arcset_to_json(comp, &comp_json.p) == PLIFS_OK);
  CHECK(comp_json.get().find("\"lo\":\"1/3\",\"hi\":\"2/3\"") != std::string::npos);

  plifs_arcset_free(a);
  plifs_arcset_free(full);
  plifs_arcset_free(inter);
  plifs_arcset_free(comp);
}

TEST_CASE("error reporting") {
  plifs_arcset *a = nullptr;
  CHECK(plifs_arcset_from_json("not json", &a) == PLIFS_ERR_PARSE);
  CHECK(std::string(plifs_last_error()).size() > 0);
  CHECK(plifs_arcset_from_json(nullptr, &a) == PLIFS_ERR_INVALID_ARGUMENT);
  // ambient mismatch
  plifs_arcset *interval = nullptr, *circle = nullptr, *out = nullptr;
  REQUIRE(plifs_arcset_from_json(kLam1, &interval) == PLIFS_OK);
  REQUIRE(plifs_arcset_from_json(
              R"({"ambient":"circle","lo":"0/1","hi":"1/1","arcs":[]})", &circle) == PLIFS_OK);
  CHECK(plifs_arcset_union(interval, circle, &out) == PLIFS_ERR_AMBIENT_MISMATCH);
  plifs_arcset_free(interval);
  plifs_arcset_free(circle);
}

TEST_CASE("plmap evaluation through the C surface") {
  plifs_bundle *b = nullptr;
  REQUIRE(plifs_example_build(1, 0, 0, &b) == PLIFS_OK);
  Str bundle_json;
  REQUIRE(plifs_bundle_to_json(b, &bundle_json.p) == PLIFS_OK);
  // pull the first generator's map out of the bundle text
  std::string text = bundle_json.get();
  size_t map_pos = text.find("\"map\":");
  REQUIRE(map_pos != std::string::npos);
  size_t start = map_pos + 6;
  int depth = 0;
  size_t end = start;
  do {
    if (text[end] == '{') depth++;
    if (text[end] == '}') depth--;
    end++;
  } while (depth > 0);
  std::string map_json = text.substr(start, end - start);

  plifs_plmap *f = nullptr;
  REQUIRE(plifs_plmap_from_json(map_json.c_str(), &f) == PLIFS_OK);
  Str y;
  REQUIRE(plifs_plmap_eval(f, "1/2", &y.p) == PLIFS_OK);
  CHECK(y.get() == "1/3");

  plifs_plmap *finv = nullptr, *ident = nullptr;
  REQUIRE(plifs_plmap_invert(f, &finv) == PLIFS_OK);
  REQUIRE(plifs_plmap_compose(finv, f, &ident) == PLIFS_OK);
  Str idy;
  REQUIRE(plifs_plmap_eval(ident, "17/23", &idy.p) == PLIFS_OK);
  CHECK(idy.get() == "17/23");

  plifs_plmap_free(f);
  plifs_plmap_free(finv);
  plifs_plmap_free(ident);
  plifs_bundle_free(b);
}

TEST_CASE("iterate, orbit, classify, cantorval through the C surface") {
  plifs_bundle *b = nullptr;
  REQUIRE(plifs_example_build(7, 0, 0, &b) == PLIFS_OK);

  plifs_trace *t = nullptr;
  REQUIRE(plifs_bundle_iterate(b, 4, 0, &t) == PLIFS_OK);
  CHECK(plifs_trace_overflowed(t) == 0);
  Str csv;
  REQUIRE(plifs_trace_to_csv(t, &csv.p) == PLIFS_OK);
  CHECK(csv.get().substr(0, 10) == "7,20,9,20,");
  plifs_trace_free(t);

  // a tiny arc cap must interrupt with a partial trace
  plifs_trace *partial = nullptr;
  CHECK(plifs_bundle_iterate(b, 6, 5, &partial) == PLIFS_ERR_OVERFLOW);
  CHECK(plifs_trace_overflowed(partial) == 1);
  plifs_trace_free(partial);

  Str orbit;
  REQUIRE(plifs_bundle_orbit(b, "2/5", 3, 0, &orbit.p) == PLIFS_OK);
  CHECK(orbit.get().find("\"truncated\":false") != std::string::npos);

  Str cls;
  REQUIRE(plifs_bundle_classify(b, 6, 0, &cls.p) == PLIFS_OK);
  CHECK(cls.get().find("\"label\":\"InteriorPlusCantor_Cantorval\"") != std::string::npos);
  CHECK(cls.get().find("\"pass\":true") != std::string::npos);

  int value = -1;
  Str report;
  REQUIRE(plifs_bundle_cantorval(b, 5, 3, 0, &value, &report.p) == PLIFS_OK);
  CHECK(value == 1);
  CHECK(report.get().find("\"is_symmetric_cantorval\":true") != std::string::npos);

  plifs_bundle_free(b);
  CHECK(plifs_example_build(9, 0, 0, &b) == PLIFS_ERR_INVALID_GEOMETRY);
}

TEST_CASE("psi report") {
  Str triadic;
  REQUIRE(plifs_psi_report("triadic", 2, &triadic.p) == PLIFS_OK);
  CHECK(triadic.get().find("\"matched_pairs\":7") != std::string::npos);
  Str bad;
  CHECK(plifs_psi_report("nonsense", 2, &bad.p) == PLIFS_ERR_PARSE);
}
