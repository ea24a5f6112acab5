#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "godeaux/scenarios.hpp"

using namespace godeaux;

namespace {

const std::vector<VerificationReport>& all_reports() {
  static const std::vector<VerificationReport> reports = [] {
    std::vector<VerificationReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name));
    return out;
  }();
  return reports;
}

const Check& row(const VerificationReport& r, std::string_view id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return *c;
}

}  // namespace

TEST_CASE("every suite passes on the reference data") {
  for (const auto& r : all_reports()) {
    CAPTURE(r.suite);
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CAPTURE(c.witness);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(r.ok());
    CHECK(r.summary().pass > 0);
  }
}

TEST_CASE("witness values") {
  const auto& vlat = all_reports()[1];
  CHECK(row(vlat, "vlat.four_k_minus_r").witness.rfind("(5, 3, 2)", 0) == 0);
  CHECK(row(vlat, "vlat.r_dot_d").witness == "6");
  CHECK(row(vlat, "vlat.b_dot_d").witness == "4");
  CHECK(row(vlat, "vlat.euler_f").witness == "14");
  const auto& cov = all_reports()[2];
  CHECK(row(cov, "cover.wbar_genus").witness == "(-6, 4, 0)");
  CHECK(row(cov, "cover.blow_down").witness == "K^2: -4 -> -3 -> -2 -> -1 -> 0 -> 1");
  CHECK(row(cov, "cover.h_prime_degree").status == CheckStatus::Skipped);
  const auto& fib = all_reports()[3];
  CHECK(row(fib, "fibre.identity").witness.find("m1 = -1/2, m2 = -1/2, m3 = 1/2, m4 = 1/2, a = 0") !=
        std::string::npos);
  CHECK(row(fib, "fibre.cover_k_squared").witness == "-2");
  const auto& quin = all_reports()[0];
  CHECK(row(quin, "quintic.non_vacuity").status == CheckStatus::Pass);
  CHECK(row(quin, "quintic.minimality").status == CheckStatus::Skipped);
}

TEST_CASE("perturbed parameter produces failures") {
  QuinticSuiteConfig cfg;
  cfg.perturb_a = true;
  const auto r = run_quintic_suite(cfg);
  CHECK(!r.ok());
  CHECK(r.configuration.at("a") == "u");
  CHECK(row(r, "quintic.tilde_e8_a1").status == CheckStatus::Fail);
  CHECK(!row(r, "quintic.tilde_e8_a1").witness.empty());
  CHECK(r.find("quintic.non_vacuity") == nullptr);
}

TEST_CASE("identity sigma is a marked, degenerate configuration") {
  QuinticSuiteConfig cfg;
  cfg.identity_sigma = true;
  cfg.non_vacuity = false;
  const auto r = run_quintic_suite(cfg);
  CHECK(r.configuration.count("sigma") == 1);
  CHECK(row(r, "quintic.sigma_invariance").status == CheckStatus::Pass);
  CHECK(row(r, "quintic.fixed_points").status == CheckStatus::Pass);
  CHECK(row(r, "quintic.sigma_order").status == CheckStatus::Fail);
}

TEST_CASE("anchors come from the registry and ids are unique") {
  const auto& reg = anchor_registry();
  CHECK(!reg.empty());
  std::set<std::string> statements;
  for (const auto& [key, text] : reg) {
    CHECK(!key.empty());
    CHECK(!text.empty());
    statements.insert(text);
  }
  std::set<std::string> ids;
  for (const auto& r : all_reports()) {
    for (const auto& c : r.checks) {
      CHECK(statements.count(c.anchor) == 1);
      CHECK(ids.insert(c.id).second);
      if (c.status == CheckStatus::Fail) CHECK(!c.witness.empty());
    }
  }
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  for (const auto& name : {"v-lattice", "cover", "fibre"}) {
    auto a = run_suite(name), b = run_suite(name);
    a.timestamp = b.timestamp = "";
    CHECK(to_json(a) == to_json(b));
  }
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
}

TEST_CASE("serialization") {
  const auto merged = merge_reports({all_reports()[1], all_reports()[3]});
  CHECK(merged.suite == "v-lattice+fibre");
  const auto j = nlohmann::json::parse(to_json(merged));
  CHECK(j["summary"]["total"].get<int>() == static_cast<int>(merged.checks.size()));
  CHECK(j["summary"]["pass"].get<int>() == merged.summary().pass);
  CHECK(j["checks"][0]["id"] == merged.checks[0].id);
  const auto md = to_markdown(merged);
  CHECK(md.find("| fibre.cover_chi | PASS |") != std::string::npos);
  CHECK(to_text(merged).find("PASS    vlat.k_squared") != std::string::npos);
}

TEST_CASE("shipped lattice file matches the built-in declarations") {
  std::ifstream in(GODEAUX_DATA_DIR "/godeaux.lat");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(v_lattice_declarations()));
}
