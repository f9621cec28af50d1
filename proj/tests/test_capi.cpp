#include <string>

#include "doctest.h"
#include "ehalg/ehalg.h"

namespace {

std::string fixture_path(const char* name) { return std::string(EHALG_FIXTURE_DIR) + "/" + name; }

struct SystemHandle {
  ehalg_system* p = nullptr;
  ~SystemHandle() { ehalg_system_free(p); }
};

struct ReportHandle {
  ehalg_report* p = nullptr;
  ~ReportHandle() { ehalg_report_free(p); }
};

}  // namespace

TEST_CASE("version and limits") {
  CHECK(std::string(ehalg_version()) == "1.0.0");
  ehalg_limits l = ehalg_default_limits();
  CHECK(l.guard_dim == 64);
  CHECK(l.bisect_guard == 12);
  CHECK(l.oracle_guard == 6);
}

TEST_CASE("loading systems and fixtures") {
  SystemHandle a, b;
  REQUIRE(ehalg_system_load(fixture_path("flip.sys").c_str(), &a.p) == EHALG_OK);
  REQUIRE(ehalg_system_fixture("FIX-FLIP", &b.p) == EHALG_OK);
  CHECK(std::string(ehalg_last_error()).empty());
  char* sa = nullptr;
  char* sb = nullptr;
  REQUIRE(ehalg_system_serialize(a.p, &sa) == EHALG_OK);
  REQUIRE(ehalg_system_set_field(b.p, "F 2") == EHALG_OK);
  REQUIRE(ehalg_system_serialize(b.p, &sb) == EHALG_OK);
  CHECK(std::string(sa) == std::string(sb));

  SystemHandle c;
  CHECK(ehalg_system_parse(sa, &c.p) == EHALG_OK);
  ehalg_string_free(sa);
  ehalg_string_free(sb);

  SystemHandle none;
  CHECK(ehalg_system_fixture("FIX-NOPE", &none.p) == EHALG_ERR_INVALID_ARGUMENT);
  CHECK(none.p == nullptr);
  CHECK_FALSE(std::string(ehalg_last_error()).empty());
  CHECK(ehalg_system_set_field(a.p, "F 4") != EHALG_OK);
}

TEST_CASE("status codes") {
  SystemHandle s;
  CHECK(ehalg_system_load(fixture_path("bad_parse.sys").c_str(), &s.p) == EHALG_ERR_PARSE);
  CHECK(std::string(ehalg_last_error()).find("line 7, column 5") != std::string::npos);
  CHECK(ehalg_system_load(fixture_path("missing.sys").c_str(), &s.p) == EHALG_ERR_IO);
  CHECK(ehalg_system_load(nullptr, &s.p) == EHALG_ERR_INVALID_ARGUMENT);
  CHECK(ehalg_system_load(fixture_path("flip.sys").c_str(), nullptr) == EHALG_ERR_INVALID_ARGUMENT);

  ReportHandle r;
  CHECK(ehalg_cmd_build(nullptr, nullptr, &r.p) == EHALG_ERR_INVALID_ARGUMENT);

  REQUIRE(ehalg_system_fixture("FIX-BRANDT", &s.p) == EHALG_OK);
  CHECK(ehalg_cmd_build(s.p, nullptr, &r.p) == EHALG_ERR_INVALID_ARGUMENT);  // no field yet
  REQUIRE(ehalg_system_set_field(s.p, "Q") == EHALG_OK);
  ehalg_limits tight = ehalg_default_limits();
  tight.guard_dim = 2;
  CHECK(ehalg_cmd_build(s.p, &tight, &r.p) == EHALG_ERR_GUARD);
  CHECK(r.p == nullptr);
}

TEST_CASE("commands") {
  SystemHandle z;
  REQUIRE(ehalg_system_fixture("FIX-Z2FIX", &z.p) == EHALG_OK);
  REQUIRE(ehalg_system_set_field(z.p, "F 2") == EHALG_OK);
  const char* gens[] = {"D_1+D_g"};
  ReportHandle dec;
  REQUIRE(ehalg_cmd_decompose(z.p, gens, 1, nullptr, &dec.p) == EHALG_OK);
  CHECK(ehalg_report_ok(dec.p) == 1);
  CHECK(std::string(ehalg_report_text(dec.p)).find("equals J: verified") != std::string::npos);
  CHECK(std::string(ehalg_report_json(dec.p)).find("\"decompose\"") != std::string::npos);

  SystemHandle bad;
  REQUIRE(ehalg_system_load(fixture_path("bad_nonassoc.sys").c_str(), &bad.p) == EHALG_OK);
  ReportHandle v;
  REQUIRE(ehalg_cmd_validate(bad.p, &v.p) == EHALG_OK);
  CHECK(ehalg_report_ok(v.p) == 0);

  ehalg_groupoid* g = nullptr;
  REQUIRE(ehalg_groupoid_load(fixture_path("pair2.gpd").c_str(), &g) == EHALG_OK);
  int is_groupoid = 0;
  REQUIRE(ehalg_path_is_groupoid(fixture_path("pair2.gpd").c_str(), &is_groupoid) == EHALG_OK);
  CHECK(is_groupoid == 1);
  ReportHandle b;
  REQUIRE(ehalg_cmd_bisect(g, nullptr, &b.p) == EHALG_OK);
  CHECK(std::string(ehalg_report_text(b.p)).find("7 bisections") != std::string::npos);
  ehalg_groupoid_free(g);

  ReportHandle fx;
  REQUIRE(ehalg_cmd_fixtures(nullptr, &fx.p) == EHALG_OK);
  CHECK(ehalg_report_ok(fx.p) == 1);
}
