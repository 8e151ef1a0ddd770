#include "foldcalc/corpus.hpp"

#include <json.hpp>

#include "foldcalc/basediagram.hpp"
#include "foldcalc/error.hpp"
#include "foldcalc/io.hpp"
#include "foldcalc/kirby.hpp"
#include "foldcalc/sblf.hpp"
#include "foldcalc/surgery.hpp"

namespace foldcalc::corpus {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("corpus entry holds invalid JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("corpus entry misses field '") + name + "'");
  return *it;
}

kirby::HandleDecomposition handle_from_input(const json& input) {
  if (input.contains("catalog")) {
    const json& c = field(input, "catalog");
    std::vector<int> params;
    if (c.contains("params")) {
      for (const json& p : field(c, "params")) params.push_back(p.get<int>());
    }
    return kirby::catalog(field(c, "name").get<std::string>(), params);
  }
  return io::kirby_from_json(field(input, "kirby").dump());
}

algebra::AbelianInvariants abelian_from(const json& j) {
  algebra::AbelianInvariants a;
  a.free_rank = field(j, "free_rank").get<int>();
  for (const json& t : field(j, "torsion")) a.torsion.push_back(algebra::Int(t.get<long long>()));
  return a;
}

void note_mismatch(CorpusOutcome& out, const std::string& what,
                   const std::string& got, const std::string& want) {
  out.passed = false;
  if (out.detail.empty()) {
    out.detail = what + ": got " + got + ", expected " + want;
  }
  out.ledger.push_back("MISMATCH " + what + ": got " + got + ", expected " + want);
}

template <typename T>
void check_equal(CorpusOutcome& out, const std::string& what, const T& got, const T& want) {
  if (!(got == want)) {
    note_mismatch(out, what, std::to_string(got), std::to_string(want));
  }
}

std::string diagram_state(const basediagram::BaseDiagram& d) {
  int cusps = 0, pending = 0;
  for (const basediagram::FoldCircle& c : d.circles) {
    cusps += c.cusps;
    pending += c.pending;
  }
  return "circles " + std::to_string(d.circles.size()) + ", cusps " +
         std::to_string(cusps) + ", pending " + std::to_string(pending) +
         ", chi " + std::to_string(basediagram::total_euler_char(d));
}

void run_kirby_invariants(const json& input, const json& expected, CorpusOutcome& out) {
  const kirby::HandleDecomposition h = handle_from_input(input);
  const kirby::ManifoldInvariants inv = kirby::invariants(h);
  out.ledger.push_back("H1 = " + algebra::to_string(inv.h1) + ", chi = " +
                       std::to_string(inv.euler_char));
  if (expected.contains("h1")) {
    const algebra::AbelianInvariants want = abelian_from(field(expected, "h1"));
    if (!(inv.h1 == want)) {
      note_mismatch(out, "h1", algebra::to_string(inv.h1), algebra::to_string(want));
    }
  }
  if (expected.contains("euler_char")) {
    check_equal(out, "euler_char", inv.euler_char, field(expected, "euler_char").get<int>());
  }
  if (expected.contains("orientable")) {
    check_equal(out, "orientable", inv.orientable, field(expected, "orientable").get<bool>());
  }
}

void run_double_cover(const json& input, const json& expected, CorpusOutcome& out) {
  const kirby::HandleDecomposition base = handle_from_input(input);
  const kirby::HandleDecomposition cover = kirby::double_cover(base);
  const kirby::ManifoldInvariants inv = kirby::invariants(cover);
  const bool verified = kirby::verify_double_cover(base, cover);
  out.ledger.push_back("cover H1 = " + algebra::to_string(inv.h1) + ", chi = " +
                       std::to_string(inv.euler_char) +
                       (verified ? ", verified" : ", NOT verified"));
  if (!verified) note_mismatch(out, "verified", "false", "true");
  if (expected.contains("cover_h1")) {
    const algebra::AbelianInvariants want = abelian_from(field(expected, "cover_h1"));
    if (!(inv.h1 == want)) {
      note_mismatch(out, "cover_h1", algebra::to_string(inv.h1), algebra::to_string(want));
    }
  }
  if (expected.contains("cover_euler_char")) {
    check_equal(out, "cover_euler_char", inv.euler_char,
                field(expected, "cover_euler_char").get<int>());
  }
}

void run_sblf_classify(const json& input, const json& expected, CorpusOutcome& out) {
  const sblf::SblfData data = io::sblf_from_json(field(input, "sblf").dump());
  const sblf::DiffeoType type = sblf::classify_genus2(data);
  out.ledger.push_back("classified as " + type.to_string());
  const std::string want = field(expected, "name").get<std::string>();
  if (type.to_string() != want) note_mismatch(out, "name", type.to_string(), want);
}

void run_sblf_build(const json& input, const json& expected, CorpusOutcome& out) {
  const sblf::SblfData data = io::sblf_from_json(field(input, "sblf").dump());
  const kirby::HandleDecomposition built = sblf::build_kirby(data);
  const kirby::HandleDecomposition want = handle_from_input(expected);
  out.ledger.push_back("built " + std::to_string(built.two_handles.size()) +
                       " 2-handles, chi = " + std::to_string(built.euler_characteristic()));
  if (!(built == want)) {
    note_mismatch(out, "kirby diagram", io::to_json(built), io::to_json(want));
  }
}

void run_diagram_replay(const json& input, const json& expected, CorpusOutcome& out) {
  basediagram::BaseDiagram d = io::diagram_from_json(field(input, "diagram").dump());
  const int chi = basediagram::total_euler_char(d);
  out.ledger.push_back("start: " + diagram_state(d));

  const std::vector<io::ScriptItem> script = io::script_from_json(field(input, "script").dump());
  int position = 0;
  for (const io::ScriptItem& item : script) {
    if (item.checkpoint) {
      if (!(d == *item.checkpoint)) {
        note_mismatch(out, "checkpoint " + std::to_string(position),
                      diagram_state(d), diagram_state(*item.checkpoint));
      } else {
        out.ledger.push_back("checkpoint ok: " + diagram_state(d));
      }
    } else {
      d = basediagram::apply_move(d, *item.move);
      out.ledger.push_back(item.move->name + " -> " + diagram_state(d));
      if (basediagram::total_euler_char(d) != chi) {
        note_mismatch(out, "euler_char after " + item.move->name,
                      std::to_string(basediagram::total_euler_char(d)),
                      std::to_string(chi));
      }
    }
    ++position;
  }

  if (expected.contains("final")) {
    const basediagram::BaseDiagram want =
        io::diagram_from_json(field(expected, "final").dump());
    if (!(d == want)) {
      note_mismatch(out, "final diagram", io::to_json(d), io::to_json(want));
    }
  }
  if (expected.contains("euler_char")) {
    check_equal(out, "euler_char", basediagram::total_euler_char(d),
                field(expected, "euler_char").get<int>());
  }
  out.ledger.push_back("genus " + std::to_string(d.regions.front().fiber.genus) +
                       ", " + std::to_string(d.regions.front().lefschetz) +
                       " Lefschetz");
}

void run_trisect(const json& input, const json& expected, CorpusOutcome& out) {
  basediagram::BaseDiagram d = io::diagram_from_json(field(input, "diagram").dump());
  if (input.contains("simplify") && field(input, "simplify").get<bool>()) {
    const basediagram::SimplifyResult s = basediagram::simplify_to_sblf(d);
    d = s.result;
    out.ledger.push_back("simplified in " + std::to_string(s.log.size()) +
                         " moves: " + diagram_state(d));
  }
  const basediagram::TrisectionResult t = basediagram::sblf_to_trisection(d);
  out.ledger.push_back("trisection (g, k) = (" + std::to_string(t.params.g) + ", " +
                       std::to_string(t.params.k) + "), chi = " +
                       std::to_string(basediagram::total_euler_char(t.diagram)));
  check_equal(out, "g", t.params.g, field(expected, "g").get<int>());
  check_equal(out, "k", t.params.k, field(expected, "k").get<int>());
  if (expected.contains("euler_char")) {
    check_equal(out, "euler_char", basediagram::total_euler_char(t.diagram),
                field(expected, "euler_char").get<int>());
  }
}

void run_flip_and_slip(const json& input, const json& expected, CorpusOutcome& out) {
  basediagram::BaseDiagram d = io::diagram_from_json(field(input, "diagram").dump());
  const int rounds = field(input, "rounds").get<int>();
  for (int r = 0; r < rounds; ++r) {
    d = basediagram::flip_and_slip(d);
    out.ledger.push_back("round " + std::to_string(r + 1) + ": genus " +
                         std::to_string(d.regions.front().fiber.genus) + ", " +
                         std::to_string(d.regions.front().lefschetz) +
                         " Lefschetz, chi " +
                         std::to_string(basediagram::total_euler_char(d)));
  }
  check_equal(out, "genus", d.regions.front().fiber.genus,
              field(expected, "genus").get<int>());
  check_equal(out, "lefschetz", d.regions.front().lefschetz,
              field(expected, "lefschetz").get<int>());
  if (expected.contains("euler_char")) {
    check_equal(out, "euler_char", basediagram::total_euler_char(d),
                field(expected, "euler_char").get<int>());
  }
}

surgery::SummandKind kind_from_string(const std::string& name) {
  for (const surgery::SummandKind k :
       {surgery::SummandKind::S4, surgery::SummandKind::CP2,
        surgery::SummandKind::CP2bar, surgery::SummandKind::S2xS2,
        surgery::SummandKind::S1xS3, surgery::SummandKind::S1xtS3,
        surgery::SummandKind::RP4, surgery::SummandKind::S2xRP2}) {
    if (surgery::to_string(k) == name) return k;
  }
  parse_fail("unknown summand kind '" + name + "'");
}

void run_surgery_standardize(const json& input, const json& expected, CorpusOutcome& out) {
  surgery::ManifoldData x;
  x.pi1 = io::presentation_from_json(field(input, "pi1").dump());
  x.chi = field(input, "chi").get<int>();
  const std::string cob = field(input, "cobordism").get<std::string>();
  if (cob == "rp4") {
    x.cobordism = surgery::CobordismClass::RP4Like;
  } else if (cob == "s2xrp2") {
    x.cobordism = surgery::CobordismClass::S2xRP2Like;
  } else {
    parse_fail("cobordism must be 'rp4' or 's2xrp2'");
  }

  const surgery::StandardizeResult r = surgery::standardize(x);
  out.ledger.push_back(std::to_string(r.schedule.steps.size()) + " schedule steps, chi = " +
                       std::to_string(r.target.euler_characteristic()));

  int expected_total = 0;
  for (const auto& [name, value] : field(expected, "summands").items()) {
    const int want = value.get<int>();
    expected_total += want;
    const int got = surgery::count(r.target, kind_from_string(name));
    if (got != want) note_mismatch(out, "count of " + name, std::to_string(got), std::to_string(want));
  }
  check_equal(out, "summand count", static_cast<int>(r.target.summands.size()), expected_total);
  if (expected.contains("euler_char")) {
    check_equal(out, "euler_char", r.target.euler_characteristic(),
                field(expected, "euler_char").get<int>());
  }
}

}  // namespace

CorpusEntry entry_from_json(const std::string& text) {
  const json j = parse_text(text);
  CorpusEntry e;
  e.name = field(j, "name").get<std::string>();
  if (j.contains("note")) e.note = field(j, "note").get<std::string>();
  e.kind = field(j, "kind").get<std::string>();
  e.input = field(j, "input").dump();
  e.expected = field(j, "expected").dump();
  return e;
}

CorpusOutcome run_entry(const CorpusEntry& e) {
  CorpusOutcome out;
  out.name = e.name;
  out.passed = true;
  const json input = parse_text(e.input);
  const json expected = parse_text(e.expected);

  if (e.kind == "kirby-invariants") {
    run_kirby_invariants(input, expected, out);
  } else if (e.kind == "double-cover") {
    run_double_cover(input, expected, out);
  } else if (e.kind == "sblf-classify") {
    run_sblf_classify(input, expected, out);
  } else if (e.kind == "sblf-build") {
    run_sblf_build(input, expected, out);
  } else if (e.kind == "diagram-replay") {
    run_diagram_replay(input, expected, out);
  } else if (e.kind == "trisect") {
    run_trisect(input, expected, out);
  } else if (e.kind == "flip-and-slip") {
    run_flip_and_slip(input, expected, out);
  } else if (e.kind == "surgery-standardize") {
    run_surgery_standardize(input, expected, out);
  } else {
    parse_fail("unknown corpus kind '" + e.kind + "'");
  }
  return out;
}

namespace {

const char* kS1s3Replay = R"json({
  "name": "s1s3",
  "note": "twisted S3-bundle over the circle: two definite circles become one indefinite fold via flips and a cusp merge; the cusp ledger runs 0 -> 8 -> 6 -> 0",
  "kind": "diagram-replay",
  "input": {
    "diagram": {
      "circles": [
        {"kind": "definite", "arrow": "outward", "cusps": 0, "pending": 0},
        {"kind": "definite", "arrow": "inward", "cusps": 0, "pending": 0}
      ],
      "regions": [
        {"fiber": {"empty": true}, "lefschetz": 0},
        {"fiber": {"orientable": true, "genus": 0, "components": 1}, "lefschetz": 0},
        {"fiber": {"empty": true}, "lefschetz": 0}
      ]
    },
    "script": [
      {"move": "definite_to_indefinite", "circle": 0, "nonorientable_tube": true},
      {"move": "definite_to_indefinite", "circle": 1, "nonorientable_tube": true},
      {"move": "flip", "circle": 0, "nonorientable_tube": true},
      {"move": "flip", "circle": 0, "nonorientable_tube": true},
      {"move": "flip", "circle": 1, "nonorientable_tube": true},
      {"move": "flip", "circle": 1, "nonorientable_tube": true},
      {"move": "cusp_merge", "i": 0, "j": 1},
      {"checkpoint": {
        "circles": [{"kind": "indefinite", "arrow": "outward", "cusps": 6, "pending": 3}],
        "regions": [
          {"fiber": {"orientable": false, "genus": 2, "components": 1}, "lefschetz": 0},
          {"fiber": {"orientable": false, "genus": 2, "components": 1}, "lefschetz": 0}
        ]
      }},
      {"move": "unsink", "circle": 0},
      {"move": "unsink", "circle": 0},
      {"move": "unsink", "circle": 0},
      {"move": "unsink", "circle": 0},
      {"move": "unsink", "circle": 0},
      {"move": "unsink", "circle": 0},
      {"move": "resolve"}
    ]
  },
  "expected": {
    "final": {
      "circles": [{"kind": "indefinite", "arrow": "outward", "cusps": 0, "pending": 0}],
      "regions": [
        {"fiber": {"orientable": false, "genus": 6, "components": 1}, "lefschetz": 6},
        {"fiber": {"orientable": false, "genus": 4, "components": 1}, "lefschetz": 0}
      ]
    },
    "euler_char": 0
  }
})json";

const char* kRp4Trisect = R"json({
  "name": "rp4-trisect",
  "note": "the real projective 4-space model: a sphere fibration over the disk with one Lefschetz point trisects at genus 2",
  "kind": "trisect",
  "input": {
    "diagram": {
      "circles": [
        {"kind": "definite", "arrow": "outward", "cusps": 0, "pending": 0},
        {"kind": "definite", "arrow": "inward", "cusps": 0, "pending": 0}
      ],
      "regions": [
        {"fiber": {"empty": true}, "lefschetz": 0},
        {"fiber": {"orientable": true, "genus": 0, "components": 1}, "lefschetz": 1},
        {"fiber": {"empty": true}, "lefschetz": 0}
      ]
    }
  },
  "expected": {"g": 2, "k": 1, "euler_char": 1}
})json";

const char* kS1xtS3Trisect = R"json({
  "name": "s1xts3-trisect",
  "note": "the fold-only annulus picture of the twisted S3-bundle admits the minimal nonorientable trisection",
  "kind": "trisect",
  "input": {
    "diagram": {
      "circles": [
        {"kind": "definite", "arrow": "outward", "cusps": 0, "pending": 0},
        {"kind": "definite", "arrow": "inward", "cusps": 0, "pending": 0}
      ],
      "regions": [
        {"fiber": {"empty": true}, "lefschetz": 0},
        {"fiber": {"orientable": true, "genus": 0, "components": 1}, "lefschetz": 0},
        {"fiber": {"empty": true}, "lefschetz": 0}
      ]
    }
  },
  "expected": {"g": 1, "k": 1, "euler_char": 0}
})json";

const char* kS1s3TrisectViaSimplify = R"json({
  "name": "s1s3-trisect",
  "note": "the same bundle pushed through the full simplification first; the resulting fibration trisects at (13, 5)",
  "kind": "trisect",
  "input": {
    "diagram": {
      "circles": [
        {"kind": "definite", "arrow": "outward", "cusps": 0, "pending": 0},
        {"kind": "definite", "arrow": "inward", "cusps": 0, "pending": 0}
      ],
      "regions": [
        {"fiber": {"empty": true}, "lefschetz": 0},
        {"fiber": {"orientable": true, "genus": 0, "components": 1}, "lefschetz": 0},
        {"fiber": {"empty": true}, "lefschetz": 0}
      ]
    },
    "simplify": true
  },
  "expected": {"g": 13, "k": 5, "euler_char": 0}
})json";

const char* kKleinH1 = R"json({
  "name": "k3-invariants",
  "note": "twisted circle bundle over the Klein bottle with 6-fold monodromy: first homology Z/2 + Z/6",
  "kind": "kirby-invariants",
  "input": {"catalog": {"name": "K", "params": [3]}},
  "expected": {"h1": {"free_rank": 0, "torsion": [2, 6]}, "euler_char": 0, "orientable": false}
})json";

const char* kRp4Cover = R"json({
  "name": "rp4-double-cover",
  "note": "the orientation double cover of projective 4-space is the simply connected sphere",
  "kind": "double-cover",
  "input": {"catalog": {"name": "RP4"}},
  "expected": {"cover_h1": {"free_rank": 0, "torsion": []}, "cover_euler_char": 2}
})json";

const char* kK2Classify = R"json({
  "name": "k2-classify",
  "note": "a genus-two fibration with no fold and no Lefschetz points is the twisted circle bundle named by its gluing parameter",
  "kind": "sblf-classify",
  "input": {
    "sblf": {
      "fiber": {"orientable": false, "genus": 2},
      "lefschetz_cycles": [],
      "gluing_parameter": 2,
      "framing_parity": 0
    }
  },
  "expected": {"name": "K(2)"}
})json";

const char* kM22Classify = R"json({
  "name": "m22-classify",
  "note": "four Lefschetz cycles along the standard two-sided curve with gluing parameter 2",
  "kind": "sblf-classify",
  "input": {
    "sblf": {
      "fiber": {"orientable": false, "genus": 2},
      "lefschetz_cycles": ["a1 a2", "a1 a2", "a1 a2", "a1 a2"],
      "gluing_parameter": 2,
      "framing_parity": 0
    }
  },
  "expected": {"name": "M(2,2)"}
})json";

const char* kK3Build = R"json({
  "name": "k3-build",
  "note": "building the handle diagram of the parameter-3 bundle reproduces the catalog entry",
  "kind": "sblf-build",
  "input": {
    "sblf": {
      "fiber": {"orientable": false, "genus": 2},
      "lefschetz_cycles": [],
      "gluing_parameter": 3,
      "framing_parity": 0
    }
  },
  "expected": {"catalog": {"name": "K", "params": [3]}}
})json";

const char* kSurgeryRp4 = R"json({
  "name": "surgery-rp4",
  "note": "standardizing projective 4-space: the kill phase is empty and one torus rule plants the projective-plane pair",
  "kind": "surgery-standardize",
  "input": {
    "pi1": {
      "generators": [{"name": "t", "reverses_orientation": true}],
      "relators": [[["t", 2]]]
    },
    "chi": 1,
    "cobordism": "rp4"
  },
  "expected": {
    "summands": {"RP4": 1, "CP2": 1, "CP2bar": 1, "S1xS3": 1},
    "euler_char": 1
  }
})json";

const char* kFlipSlip = R"json({
  "name": "flip-and-slip",
  "note": "five rounds on the genus-two fibration normal form: fiber genus 2 -> 12, four new Lefschetz points per round",
  "kind": "flip-and-slip",
  "input": {
    "diagram": {
      "circles": [{"kind": "indefinite", "arrow": "outward", "cusps": 0, "pending": 0}],
      "regions": [
        {"fiber": {"orientable": false, "genus": 2, "components": 1}, "lefschetz": 0},
        {"fiber": {"orientable": true, "genus": 0, "components": 1}, "lefschetz": 0}
      ]
    },
    "rounds": 5
  },
  "expected": {"genus": 12, "lefschetz": 20, "euler_char": 2}
})json";

const char* kNotAllG2 = R"json({
  "name": "notall-g2",
  "note": "genus ladder of depth two with two inner Lefschetz points; simplification lands on the genus-8 fibration and the trisection follows",
  "kind": "trisect",
  "input": {
    "diagram": {
      "circles": [
        {"kind": "indefinite", "arrow": "inward", "cusps": 0, "pending": 0},
        {"kind": "indefinite", "arrow": "inward", "cusps": 0, "pending": 0}
      ],
      "regions": [
        {"fiber": {"orientable": false, "genus": 2, "components": 1}, "lefschetz": 2},
        {"fiber": {"orientable": false, "genus": 4, "components": 1}, "lefschetz": 0},
        {"fiber": {"orientable": false, "genus": 6, "components": 1}, "lefschetz": 0}
      ]
    },
    "simplify": true
  },
  "expected": {"g": 17, "k": 7, "euler_char": -2}
})json";

}  // namespace

std::vector<CorpusEntry> bundled_entries() {
  std::vector<CorpusEntry> out;
  for (const char* text :
       {kS1s3Replay, kRp4Trisect, kS1xtS3Trisect, kS1s3TrisectViaSimplify,
        kKleinH1, kRp4Cover, kK2Classify, kM22Classify, kK3Build, kSurgeryRp4,
        kFlipSlip, kNotAllG2}) {
    out.push_back(entry_from_json(text));
  }
  return out;
}

}  // namespace foldcalc::corpus
