#ifndef FOLDCALC_IO_HPP
#define FOLDCALC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "foldcalc/algebra.hpp"
#include "foldcalc/basediagram.hpp"
#include "foldcalc/kirby.hpp"
#include "foldcalc/sblf.hpp"
#include "foldcalc/surface.hpp"
#include "foldcalc/surgery.hpp"

// JSON (de)serialization. Schemas:
//  - group words are run-length arrays of [generator-name, exponent] pairs;
//  - curve words on surfaces are strings like "a1 a2^-1 b1" (crosscap loops
//    a1..ak on a nonorientable surface, pairs a_i, b_i on an orientable one);
//  - every from_json validates the parsed value with its check() method, so
//    malformed JSON raises ParseError while well-formed JSON describing an
//    invalid object raises that object's own error kind.
// Parsing is provided for the value kinds the command-line tools accept as
// input; report-like results are serialized only.
namespace foldcalc::io {

std::string curve_word_to_string(const surface::CurveWord& w);
surface::CurveWord curve_word_from_string(const surface::SurfaceModel& s,
                                          const std::string& text);

std::string to_json(const algebra::FpPresentation& p, bool pretty = false);
algebra::FpPresentation presentation_from_json(const std::string& text);

std::string to_json(const kirby::HandleDecomposition& h, bool pretty = false);
kirby::HandleDecomposition kirby_from_json(const std::string& text);

std::string to_json(const sblf::SblfData& d, bool pretty = false);
sblf::SblfData sblf_from_json(const std::string& text);

std::string to_json(const basediagram::BaseDiagram& d, bool pretty = false);
basediagram::BaseDiagram diagram_from_json(const std::string& text);

// One element of a move script: either a move or a checkpoint diagram the
// replayed state must equal at that position.
struct ScriptItem {
  std::optional<basediagram::Move> move;
  std::optional<basediagram::BaseDiagram> checkpoint;
};

std::string to_json(const std::vector<basediagram::Move>& log, bool pretty = false);
std::vector<ScriptItem> script_from_json(const std::string& text);

std::string to_json(const kirby::ManifoldInvariants& inv, bool pretty = false);
std::string to_json(const sblf::CertificationReport& r, bool pretty = false);
std::string to_json(const sblf::DiffeoType& t, bool pretty = false);
std::string to_json(const basediagram::SimplifyResult& r, bool pretty = false);
std::string to_json(const basediagram::TrisectionResult& r, bool pretty = false);
std::string to_json(const surgery::SumExpression& e, bool pretty = false);
// Loop words in the schedule are spelled with the generator names of `pi1`.
std::string to_json(const surgery::StandardizeResult& r,
                    const algebra::FpPresentation& pi1, bool pretty = false);

}  // namespace foldcalc::io

#endif  // FOLDCALC_IO_HPP
