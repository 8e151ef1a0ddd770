#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "foldcalc/corpus.hpp"
#include "foldcalc/error.hpp"
#include "test_util.hpp"

namespace {

using namespace foldcalc;
using namespace foldcalc::testing;

corpus::CorpusEntry find_entry(const std::string& name) {
  for (const corpus::CorpusEntry& e : corpus::bundled_entries()) {
    if (e.name == name) return e;
  }
  FAIL("no bundled entry named ", name);
  return {};
}

}  // namespace

TEST_CASE("the bundled corpus is wholesale green") {
  const std::vector<corpus::CorpusEntry> entries = corpus::bundled_entries();
  CHECK(entries.size() == 12);

  std::set<std::string> names;
  for (const corpus::CorpusEntry& e : entries) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.kind.empty());

    const corpus::CorpusOutcome out = corpus::run_entry(e);
    CAPTURE(out.detail);
    CHECK(out.passed);
    CHECK(out.detail.empty());
    CHECK(out.name == e.name);
    CHECK_FALSE(out.ledger.empty());
  }
}

TEST_CASE("the bundle replay ledger ends on the simplified fibration") {
  const corpus::CorpusOutcome out = corpus::run_entry(find_entry("s1s3"));
  REQUIRE(out.passed);
  REQUIRE_FALSE(out.ledger.empty());
  CHECK(out.ledger.back() == "genus 6, 6 Lefschetz");
  CHECK(out.ledger.front() == "start: circles 2, cusps 0, pending 0, chi 0");

  // The mid-script checkpoint is acknowledged in the ledger.
  bool saw_checkpoint = false;
  for (const std::string& lineText : out.ledger) {
    if (lineText.rfind("checkpoint ok", 0) == 0) saw_checkpoint = true;
  }
  CHECK(saw_checkpoint);

  // The cusp ledger along the replay runs 0 -> 8 -> 6 -> 0.
  int max_cusps = 0;
  for (const std::string& lineText : out.ledger) {
    const std::size_t at = lineText.find("cusps ");
    if (at == std::string::npos) continue;
    max_cusps = std::max(max_cusps, std::stoi(lineText.substr(at + 6)));
  }
  CHECK(max_cusps == 8);
}

TEST_CASE("corpus entries parse from standalone documents") {
  SUBCASE("round-trip through the document schema") {
    const corpus::CorpusEntry original = find_entry("k3-invariants");
    const std::string doc = std::string("{\"name\": \"renamed\", \"note\": \"n\", \"kind\": \"") +
                            original.kind + "\", \"input\": " + original.input +
                            ", \"expected\": " + original.expected + "}";
    const corpus::CorpusEntry parsed = corpus::entry_from_json(doc);
    CHECK(parsed.name == "renamed");
    CHECK(parsed.kind == original.kind);
    const corpus::CorpusOutcome out = corpus::run_entry(parsed);
    CHECK(out.passed);
  }

  SUBCASE("note is optional") {
    const corpus::CorpusEntry e = corpus::entry_from_json(
        R"({"name": "x", "kind": "kirby-invariants",
            "input": {"catalog": {"name": "RP4"}},
            "expected": {"euler_char": 1}})");
    CHECK(e.note.empty());
    CHECK(corpus::run_entry(e).passed);
  }

  SUBCASE("malformed documents raise parse errors") {
    CHECK(thrown_kind([] { corpus::entry_from_json("{"); }) == "ParseError");
    CHECK(thrown_kind([] { corpus::entry_from_json(R"({"name": "x"})"); }) == "ParseError");
  }

  SUBCASE("unknown kinds raise parse errors when run") {
    corpus::CorpusEntry e = find_entry("k3-invariants");
    e.kind = "spectral-sequence";
    CHECK(thrown_kind([&] { corpus::run_entry(e); }) == "ParseError");
  }
}

TEST_CASE("mismatches are reported, not thrown") {
  corpus::CorpusEntry e = find_entry("k3-invariants");
  // Claim the wrong Euler characteristic; the run must complete and flag it.
  e.expected = R"({"h1": {"free_rank": 0, "torsion": [2, 6]}, "euler_char": 7})";
  const corpus::CorpusOutcome out = corpus::run_entry(e);
  CHECK_FALSE(out.passed);
  CHECK(out.detail.find("euler_char") != std::string::npos);
  CHECK(out.detail.find("got 0") != std::string::npos);
  CHECK(out.detail.find("expected 7") != std::string::npos);
}

TEST_CASE("precondition violations inside an entry propagate their own kind") {
  corpus::CorpusEntry e;
  e.name = "bad-cover";
  e.kind = "double-cover";
  // Two twisted 1-handles fall outside the covering construction.
  e.input = R"({"catalog": {"name": "NxS2", "params": [2]}})";
  e.expected = R"({})";
  CHECK(thrown_kind([&] { corpus::run_entry(e); }) == "PropositionHypothesisViolated");
}
