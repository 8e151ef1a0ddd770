#ifndef FOLDCALC_CORPUS_HPP
#define FOLDCALC_CORPUS_HPP

#include <string>
#include <vector>

// Worked-example regression corpus: named end-to-end scenarios with frozen
// expected outputs, replayable one at a time or wholesale.
namespace foldcalc::corpus {

// `kind` selects the executor:
//   kirby-invariants     input {catalog|kirby}, expected {h1, euler_char, ...}
//   double-cover         input {catalog|kirby}, expected {cover_h1, cover_euler_char}
//   sblf-classify        input {sblf},          expected {name}
//   sblf-build           input {sblf},          expected {catalog|kirby}
//   diagram-replay       input {diagram, script}, expected {final, euler_char}
//   trisect              input {diagram, simplify?}, expected {g, k, euler_char?}
//   flip-and-slip        input {diagram, rounds}, expected {genus, lefschetz, euler_char}
//   surgery-standardize  input {pi1, chi, cobordism}, expected {summands, euler_char}
// `input` and `expected` hold JSON text in the schemas of the io module.
struct CorpusEntry {
  std::string name;
  std::string note;
  std::string kind;
  std::string input;
  std::string expected;
};

std::vector<CorpusEntry> bundled_entries();

// Parses one entry document: {"name", "note", "kind", "input", "expected"}.
CorpusEntry entry_from_json(const std::string& text);

struct CorpusOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> ledger;  // human-readable replay lines
  std::string detail;               // first mismatch when failed
};

// Runs one entry; mismatches land in the outcome, while malformed entry
// documents raise ParseError and broken preconditions raise their own kinds.
CorpusOutcome run_entry(const CorpusEntry& e);

}  // namespace foldcalc::corpus

#endif  // FOLDCALC_CORPUS_HPP
