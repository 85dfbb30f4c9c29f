#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verify.hpp"

using namespace tightcount;

TEST_CASE("every suite passes at default scale") {
  for (const auto& name : verify::suite_names()) {
    auto report = verify::run_suite(name);
    INFO(verify::to_text({report}));
    CHECK(report.all_pass());
  }
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(verify::run_suite("nope"), std::domain_error);
}

TEST_CASE("reports render as text and json") {
  auto report = verify::run_suite("kaplansky", 6);
  auto text = verify::to_text({report});
  CHECK(text.find("suite kaplansky") != std::string::npos);
  CHECK(text.find("result: pass") != std::string::npos);
  auto json = verify::to_json({report});
  CHECK(json.find("\"suite\":\"kaplansky\"") != std::string::npos);
  CHECK(json.find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("identities suite reports the degenerate rows informationally") {
  auto report = verify::run_suite("identities", 5);
  bool saw_degenerate = false;
  for (const auto& check : report.checks) {
    if (check.informational &&
        check.name.find("degenerate row n = 1") != std::string::npos) {
      saw_degenerate = true;
      CHECK(check.detail.find("lhs") != std::string::npos);
    }
  }
  CHECK(saw_degenerate);
  CHECK(report.all_pass());
}
