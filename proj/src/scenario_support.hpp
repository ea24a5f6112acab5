#pragma once

#include <string>
#include <utility>

#include "godeaux/error.hpp"
#include "godeaux/rational.hpp"
#include "godeaux/scenarios.hpp"

namespace godeaux::detail {

/// Collects check rows for one suite. Checks run in call order.
class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void record(std::string id, std::string_view key, CheckStatus status, std::string witness) {
    report_.checks.push_back({std::move(id), anchor(key), status, std::move(witness)});
  }

  void expect(std::string id, std::string_view key, bool ok, std::string witness) {
    record(std::move(id), key, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness));
  }

  void equal(std::string id, std::string_view key, const Rational& actual, const Rational& expected) {
    const bool ok = actual == expected;
    expect(std::move(id), key, ok,
           ok ? actual.to_string() : "got " + actual.to_string() + ", expected " + expected.to_string());
  }

  void skip(std::string id, std::string_view key, std::string reason) {
    record(std::move(id), key, CheckStatus::Skipped, std::move(reason));
  }

  /// `body` returns {ok, witness}; a godeaux::Error becomes a FAIL row.
  template <typename F>
  void run(std::string id, std::string_view key, F&& body) {
    try {
      auto [ok, witness] = body();
      expect(std::move(id), key, ok, std::move(witness));
    } catch (const Error& e) {
      expect(std::move(id), key, false, std::string("error: ") + e.what());
    }
  }

  void configure(std::string key, std::string value) { report_.configuration[std::move(key)] = std::move(value); }

  VerificationReport finish();

 private:
  VerificationReport report_;
};

}  // namespace godeaux::detail
