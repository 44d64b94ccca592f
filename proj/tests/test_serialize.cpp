#include <doctest.h>

#include <json.hpp>

#include "amalgam/error.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/serialize.hpp"

using namespace amalgam;

namespace {

VerdictRecord record(const char* src, const char* dst, int d = 1,
                     AlphaThresholdReading reading = AlphaThresholdReading::AsWrittenTau) {
  EmbeddingQuery q{SpaceSpec::parse(src), SpaceSpec::parse(dst), Dimension(d), {}};
  q.options.alpha_reading = reading;
  return VerdictRecord{decide(q), q};
}

}  // namespace

TEST_CASE("verdict json carries the stable field names") {
  const auto r = record("M[p=1,q=1,s=0]", "W[p=2,q=2]");
  const auto j = nlohmann::json::parse(verdict_to_json(r));
  for (const char* key : {"theorem", "status", "clause", "boundary", "probe_hint", "threshold", "strict", "inputs"})
    CHECK(j.contains(key));
  CHECK(j["status"] == "Holds");
  CHECK(j["inputs"]["src"] == "M[p=1,q=1,s=0]");
  CHECK(j["inputs"]["d"] == 1);
}

TEST_CASE("verdict json round trips") {
  const std::vector<VerdictRecord> records = {
      record("M[p=1,q=1,s=0]", "W[p=2,q=2]"),
      record("M[p=2,q=4,s=0]", "W[p=2,q=2]"),
      record("L[r=2,s=1/2]", "W[p=2,q=1]"),
      record("W[p=1,q=1/2]", "h[r=1/2,s=-3]", 2),
      record("B[p=1,q=2,s=1]", "W[p=1,q=1]"),
      record("Ma[p=4,q=2,s=1,alpha=1/3]", "W[p=2,q=2]", 1, AlphaThresholdReading::AlternateTau1),
      record("F[p=1,q=2]", "W[p=1,q=1]"),
      record("l0[q=2,s=1/2]", "l0[q=1]"),
  };
  for (const auto& r : records) {
    const auto text = verdict_to_json(r);
    const auto back = verdict_from_json(text);
    CHECK(back == r);
    CHECK(verdict_to_json(back) == text);
  }
}

TEST_CASE("malformed verdict json is a data format error") {
  for (const char* text : {"", "{", "[]", R"({"theorem":"x"})",
                           R"({"theorem":"x","status":"Maybe","clause":null,"boundary":"Interior","probe_hint":null,
                               "threshold":null,"strict":false,"inputs":{"src":"W[p=1,q=1]","dst":"W[p=1,q=1]",
                               "d":1,"alpha_reading":"as-written"}})"}) {
    try {
      (void)verdict_from_json(text);
      FAIL("expected DataFormat for: " << text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DataFormat);
    }
  }
}

TEST_CASE("alpha reading names") {
  CHECK(std::string(to_string(AlphaThresholdReading::AsWrittenTau)) == "as-written");
  CHECK(parse_alpha_reading("tau1") == AlphaThresholdReading::AlternateTau1);
  CHECK_THROWS_AS(parse_alpha_reading("tau"), Error);
}
