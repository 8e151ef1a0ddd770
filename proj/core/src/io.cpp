#include "foldcalc/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "foldcalc/error.hpp"

namespace foldcalc::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  fail("ParseError", what);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("input is not valid JSON");
  return j;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) parse_fail(std::string("field '") + name + "' must be an integer");
  return f.get<int>();
}

int int_field_or(const json& j, const char* name, int fallback) {
  return j.contains(name) ? int_field(j, name) : fallback;
}

bool bool_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_boolean()) parse_fail(std::string("field '") + name + "' must be a boolean");
  return f.get<bool>();
}

std::string string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) parse_fail(std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

const json& array_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_array()) parse_fail(std::string("field '") + name + "' must be an array");
  return f;
}

// ---- group words as run-length [name, exponent] pairs --------------------

json word_to_json(const algebra::Word& w, const std::vector<std::string>& names) {
  json arr = json::array();
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign) ++j;
    arr.push_back(json::array(
        {names[w[i].gen], w[i].sign * static_cast<int>(j - i)}));
    i = j;
  }
  return arr;
}

algebra::Word word_from_json(const json& arr,
                             const std::vector<std::string>& names) {
  if (!arr.is_array()) parse_fail("a word must be an array of [name, exponent] pairs");
  algebra::Word w;
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_integer()) {
      parse_fail("each word letter must be a [name, exponent] pair");
    }
    const std::string name = pair[0].get<std::string>();
    const int exp = pair[1].get<int>();
    if (exp == 0) parse_fail("word exponents must be nonzero");
    int idx = -1;
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (names[g] == name) { idx = static_cast<int>(g); break; }
    }
    if (idx < 0) parse_fail("unknown generator '" + name + "' in word");
    const int sign = exp > 0 ? 1 : -1;
    for (int k = 0; k < (exp > 0 ? exp : -exp); ++k) w.push_back({idx, sign});
  }
  return w;
}

std::vector<std::string> generator_names(const algebra::FpPresentation& p) {
  std::vector<std::string> names;
  names.reserve(p.generators.size());
  for (const algebra::Generator& g : p.generators) names.push_back(g.name);
  return names;
}

std::vector<std::string> handle_names(const kirby::HandleDecomposition& h) {
  std::vector<std::string> names;
  names.reserve(h.one_handles.size());
  for (const kirby::OneHandle& oh : h.one_handles) names.push_back(oh.name);
  return names;
}

json presentation_to_json(const algebra::FpPresentation& p) {
  json j;
  j["generators"] = json::array();
  for (const algebra::Generator& g : p.generators) {
    j["generators"].push_back(
        {{"name", g.name}, {"reverses_orientation", g.reverses_orientation}});
  }
  const std::vector<std::string> names = generator_names(p);
  j["relators"] = json::array();
  for (const algebra::Word& r : p.relators) j["relators"].push_back(word_to_json(r, names));
  return j;
}

algebra::FpPresentation presentation_from(const json& j) {
  algebra::FpPresentation p;
  for (const json& g : array_field(j, "generators")) {
    p.generators.push_back({string_field(g, "name"), bool_field(g, "reverses_orientation")});
  }
  const std::vector<std::string> names = generator_names(p);
  for (const json& r : array_field(j, "relators")) {
    p.relators.push_back(word_from_json(r, names));
  }
  p.check();
  return p;
}

// ---- surfaces and curve words ---------------------------------------------

json surface_to_json(const surface::SurfaceModel& s) {
  return {{"orientable", s.orientable}, {"genus", s.genus}};
}

surface::SurfaceModel surface_from(const json& j) {
  surface::SurfaceModel s;
  s.orientable = bool_field(j, "orientable");
  s.genus = int_field(j, "genus");
  s.check();
  return s;
}

std::string curve_letter_name(const surface::SurfaceModel& s, int index) {
  if (s.orientable) {
    return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
  }
  return "a" + std::to_string(index + 1);
}

// ---- fiber classes and base diagrams --------------------------------------

json fiber_to_json(const basediagram::FiberClass& f) {
  if (f.empty) return {{"empty", true}};
  return {{"orientable", f.orientable}, {"genus", f.genus}, {"components", f.components}};
}

basediagram::FiberClass fiber_from(const json& j) {
  if (j.contains("empty")) {
    if (!bool_field(j, "empty")) parse_fail("field 'empty' may only be true");
    return basediagram::FiberClass::none();
  }
  basediagram::FiberClass f;
  f.empty = false;
  f.orientable = bool_field(j, "orientable");
  f.genus = int_field(j, "genus");
  f.components = int_field(j, "components");
  f.check();
  return f;
}

json diagram_to_json(const basediagram::BaseDiagram& d) {
  json j;
  j["circles"] = json::array();
  for (const basediagram::FoldCircle& c : d.circles) {
    j["circles"].push_back(
        {{"kind", c.kind == basediagram::CircleKind::Definite ? "definite" : "indefinite"},
         {"arrow", c.arrow == basediagram::Arrow::Inward ? "inward" : "outward"},
         {"cusps", c.cusps},
         {"pending", c.pending}});
  }
  j["regions"] = json::array();
  for (const basediagram::Region& r : d.regions) {
    j["regions"].push_back({{"fiber", fiber_to_json(r.fiber)}, {"lefschetz", r.lefschetz}});
  }
  return j;
}

basediagram::BaseDiagram diagram_from(const json& j) {
  basediagram::BaseDiagram d;
  for (const json& c : array_field(j, "circles")) {
    basediagram::FoldCircle circle;
    const std::string kind = string_field(c, "kind");
    if (kind == "definite") {
      circle.kind = basediagram::CircleKind::Definite;
    } else if (kind == "indefinite") {
      circle.kind = basediagram::CircleKind::Indefinite;
    } else {
      parse_fail("circle kind must be 'definite' or 'indefinite'");
    }
    if (c.contains("arrow")) {
      const std::string arrow = string_field(c, "arrow");
      if (arrow == "inward") {
        circle.arrow = basediagram::Arrow::Inward;
      } else if (arrow == "outward") {
        circle.arrow = basediagram::Arrow::Outward;
      } else {
        parse_fail("circle arrow must be 'inward' or 'outward'");
      }
    }
    circle.cusps = int_field_or(c, "cusps", 0);
    circle.pending = int_field_or(c, "pending", 0);
    d.circles.push_back(circle);
  }
  for (const json& r : array_field(j, "regions")) {
    d.regions.push_back({fiber_from(field(r, "fiber")), int_field_or(r, "lefschetz", 0)});
  }
  d.check();
  return d;
}

json move_to_json(const basediagram::Move& m) {
  json j;
  j["move"] = m.name;
  if (m.name == "definite_to_indefinite" || m.name == "flip") {
    j["circle"] = m.circle;
    j["nonorientable_tube"] = m.nonorientable_tube;
  } else if (m.name == "cusp_merge") {
    j["i"] = m.circle;
    j["j"] = m.second;
  } else if (m.name == "unsink" || m.name == "invert_fold") {
    j["circle"] = m.circle;
  } else if (m.name == "push") {
    j["from"] = m.from;
    j["to"] = m.to;
  } else if (m.name == "wrinkle") {
    j["region"] = m.region;
  }
  // recenter / resolve / flip_and_slip carry no parameters
  return j;
}

basediagram::Move move_from(const json& j) {
  basediagram::Move m;
  m.name = string_field(j, "move");
  if (m.name == "definite_to_indefinite" || m.name == "flip") {
    m.circle = int_field(j, "circle");
    m.nonorientable_tube = j.contains("nonorientable_tube")
                               ? bool_field(j, "nonorientable_tube")
                               : true;
  } else if (m.name == "cusp_merge") {
    m.circle = int_field(j, "i");
    m.second = int_field(j, "j");
  } else if (m.name == "unsink" || m.name == "invert_fold") {
    m.circle = int_field(j, "circle");
  } else if (m.name == "push") {
    m.from = int_field(j, "from");
    m.to = int_field(j, "to");
  } else if (m.name == "wrinkle") {
    m.region = int_field(j, "region");
  } else if (m.name != "recenter" && m.name != "resolve" && m.name != "flip_and_slip") {
    parse_fail("unknown move '" + m.name + "'");
  }
  return m;
}

// ---- kirby diagrams --------------------------------------------------------

json kirby_to_json(const kirby::HandleDecomposition& h) {
  json j;
  j["h0"] = h.zero_handles;
  j["h1"] = json::array();
  for (const kirby::OneHandle& oh : h.one_handles) {
    j["h1"].push_back({{"name", oh.name},
                       {"twisted", oh.twisted},
                       {"feet", json::array({oh.foot0, oh.foot1})}});
  }
  const std::vector<std::string> names = handle_names(h);
  j["h2"] = json::array();
  for (const kirby::TwoHandle& th : h.two_handles) {
    j["h2"].push_back({{"word", word_to_json(th.word, names)},
                       {"framings", th.framing_labels}});
  }
  j["h3"] = {{"untwisted", h.three_handles.untwisted}, {"twisted", h.three_handles.twisted}};
  j["h4"] = h.four_handles;
  return j;
}

kirby::HandleDecomposition kirby_from(const json& j) {
  kirby::HandleDecomposition h;
  h.zero_handles = int_field(j, "h0");
  for (const json& oh : array_field(j, "h1")) {
    const json& feet = array_field(oh, "feet");
    if (feet.size() != 2 || !feet[0].is_number_integer() || !feet[1].is_number_integer()) {
      parse_fail("1-handle feet must be a pair of 0-handle indices");
    }
    h.one_handles.push_back({string_field(oh, "name"), bool_field(oh, "twisted"),
                             feet[0].get<int>(), feet[1].get<int>()});
  }
  const std::vector<std::string> names = handle_names(h);
  for (const json& th : array_field(j, "h2")) {
    kirby::TwoHandle two;
    two.word = word_from_json(array_field(th, "word"), names);
    for (const json& f : array_field(th, "framings")) {
      if (!f.is_number_integer()) parse_fail("framing labels must be integers");
      two.framing_labels.push_back(f.get<int>());
    }
    h.two_handles.push_back(two);
  }
  const json& h3 = field(j, "h3");
  h.three_handles = {int_field(h3, "untwisted"), int_field(h3, "twisted")};
  h.four_handles = int_field(j, "h4");
  h.check();
  return h;
}

// ---- abelian invariants ----------------------------------------------------

json abelian_to_json(const algebra::AbelianInvariants& a) {
  json torsion = json::array();
  for (const algebra::Int& t : a.torsion) {
    if (t <= algebra::Int(std::numeric_limits<std::int64_t>::max())) {
      torsion.push_back(static_cast<std::int64_t>(t));
    } else {
      torsion.push_back(t.str());
    }
  }
  return {{"free_rank", a.free_rank}, {"torsion", torsion}};
}

}  // namespace

// ---- curve words -----------------------------------------------------------

std::string curve_word_to_string(const surface::CurveWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.word.size()) {
    std::size_t j = i;
    while (j < w.word.size() && w.word[j].gen == w.word[i].gen &&
           w.word[j].sign == w.word[i].sign) {
      ++j;
    }
    if (!out.empty()) out += ' ';
    out += curve_letter_name(w.surface, w.word[i].gen);
    const int exp = w.word[i].sign * static_cast<int>(j - i);
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

surface::CurveWord curve_word_from_string(const surface::SurfaceModel& s,
                                          const std::string& text) {
  s.check();
  surface::CurveWord w;
  w.surface = s;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string name = token;
    int exp = 1;
    if (const std::size_t caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        exp = std::stoi(token.substr(caret + 1));
      } catch (const std::exception&) {
        parse_fail("bad exponent in curve letter '" + token + "'");
      }
    }
    if (exp == 0) parse_fail("curve letter exponents must be nonzero");
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) {
      parse_fail("curve letters look like a3 or b2, got '" + token + "'");
    }
    int number = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        parse_fail("curve letters look like a3 or b2, got '" + token + "'");
      }
      number = number * 10 + (name[i] - '0');
    }
    if (number < 1) parse_fail("curve letter numbering starts at 1");
    int index = 0;
    if (s.orientable) {
      index = 2 * (number - 1) + (name[0] == 'b' ? 1 : 0);
    } else {
      if (name[0] == 'b') parse_fail("nonorientable surfaces have only a-letters");
      index = number - 1;
    }
    const int sign = exp > 0 ? 1 : -1;
    for (int k = 0; k < (exp > 0 ? exp : -exp); ++k) w.word.push_back({index, sign});
  }
  w.check();
  return w;
}

// ---- public JSON functions -------------------------------------------------

std::string to_json(const algebra::FpPresentation& p, bool pretty) {
  return dump(presentation_to_json(p), pretty);
}

algebra::FpPresentation presentation_from_json(const std::string& text) {
  return presentation_from(parse_text(text));
}

std::string to_json(const kirby::HandleDecomposition& h, bool pretty) {
  return dump(kirby_to_json(h), pretty);
}

kirby::HandleDecomposition kirby_from_json(const std::string& text) {
  return kirby_from(parse_text(text));
}

std::string to_json(const sblf::SblfData& d, bool pretty) {
  json j;
  j["fiber"] = surface_to_json(d.fiber);
  if (d.fold_curve) j["fold_curve"] = curve_word_to_string(*d.fold_curve);
  j["lefschetz_cycles"] = json::array();
  for (const surface::CurveWord& c : d.lefschetz_cycles) {
    j["lefschetz_cycles"].push_back(curve_word_to_string(c));
  }
  if (d.lower_fiber) j["lower_fiber"] = surface_to_json(*d.lower_fiber);
  j["gluing_parameter"] = d.gluing_parameter;
  j["framing_parity"] = d.framing_parity;
  return dump(j, pretty);
}

sblf::SblfData sblf_from_json(const std::string& text) {
  const json j = parse_text(text);
  sblf::SblfData d;
  d.fiber = surface_from(field(j, "fiber"));
  if (j.contains("fold_curve")) {
    d.fold_curve = curve_word_from_string(d.fiber, string_field(j, "fold_curve"));
  }
  for (const json& c : array_field(j, "lefschetz_cycles")) {
    if (!c.is_string()) parse_fail("lefschetz cycles must be curve-word strings");
    d.lefschetz_cycles.push_back(curve_word_from_string(d.fiber, c.get<std::string>()));
  }
  if (j.contains("lower_fiber")) d.lower_fiber = surface_from(field(j, "lower_fiber"));
  d.gluing_parameter = int_field_or(j, "gluing_parameter", 0);
  d.framing_parity = int_field_or(j, "framing_parity", 0);
  d.check();
  return d;
}

std::string to_json(const basediagram::BaseDiagram& d, bool pretty) {
  return dump(diagram_to_json(d), pretty);
}

basediagram::BaseDiagram diagram_from_json(const std::string& text) {
  return diagram_from(parse_text(text));
}

std::string to_json(const std::vector<basediagram::Move>& log, bool pretty) {
  json j = json::array();
  for (const basediagram::Move& m : log) j.push_back(move_to_json(m));
  return dump(j, pretty);
}

std::vector<ScriptItem> script_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) parse_fail("a move script is an array");
  std::vector<ScriptItem> items;
  for (const json& entry : j) {
    ScriptItem item;
    if (entry.contains("checkpoint")) {
      item.checkpoint = diagram_from(field(entry, "checkpoint"));
    } else {
      item.move = move_from(entry);
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::string to_json(const kirby::ManifoldInvariants& inv, bool pretty) {
  json j;
  j["euler_char"] = inv.euler_char;
  j["pi1"] = presentation_to_json(inv.pi1);
  j["h1"] = abelian_to_json(inv.h1);
  j["z2_betti"] = inv.z2_betti;
  j["orientable"] = inv.orientable;
  return dump(j, pretty);
}

std::string to_json(const sblf::CertificationReport& r, bool pretty) {
  json j;
  j["cycles_two_sided"] = r.cycles_two_sided;
  j["fold_nonseparating"] = r.fold_nonseparating;
  j["composite_fixes_fold"] = r.composite_fixes_fold;
  j["quotient_action_trivial"] = r.quotient_action_trivial;
  j["genus_two_exact"] = r.genus_two_exact;
  j["level"] = sblf::to_string(r.level);
  return dump(j, pretty);
}

std::string to_json(const sblf::DiffeoType& t, bool pretty) {
  json j;
  j["family"] = t.family;
  j["params"] = t.params;
  j["name"] = t.to_string();
  return dump(j, pretty);
}

std::string to_json(const basediagram::SimplifyResult& r, bool pretty) {
  json j;
  j["result"] = diagram_to_json(r.result);
  j["log"] = json::array();
  for (const basediagram::Move& m : r.log) j["log"].push_back(move_to_json(m));
  return dump(j, pretty);
}

std::string to_json(const basediagram::TrisectionResult& r, bool pretty) {
  json j;
  j["g"] = r.params.g;
  j["k"] = r.params.k;
  j["diagram"] = diagram_to_json(r.diagram);
  j["log"] = json::array();
  for (const basediagram::Move& m : r.log) j["log"].push_back(move_to_json(m));
  return dump(j, pretty);
}

namespace {

json expression_to_json(const surgery::SumExpression& e) {
  json summands = json::array();
  for (const surgery::Summand& s : e.summands) {
    json item;
    item["kind"] = surgery::to_string(s.kind);
    if (s.kind == surgery::SummandKind::Custom) {
      item["name"] = s.name;
      item["chi"] = s.chi;
      item["pi1"] = presentation_to_json(s.pi1);
      item["orientable"] = s.orientable;
    }
    summands.push_back(item);
  }
  return {{"summands", summands},
          {"euler_char", e.euler_characteristic()},
          {"orientable", e.orientable()}};
}

}  // namespace

std::string to_json(const surgery::SumExpression& e, bool pretty) {
  return dump(expression_to_json(e), pretty);
}

std::string to_json(const surgery::StandardizeResult& r,
                    const algebra::FpPresentation& pi1, bool pretty) {
  const std::vector<std::string> names = generator_names(pi1);
  json steps = json::array();
  for (const surgery::SurgeryStep& s : r.schedule.steps) {
    json step;
    step["rule"] = surgery::to_string(s.rule);
    step["locus"] = s.locus;
    if (s.rule == surgery::RuleKind::KillLoop) step["loop"] = word_to_json(s.loop, names);
    if (s.rule == surgery::RuleKind::Generic) step["stabilization"] = s.stabilization;
    steps.push_back(step);
  }
  json j;
  j["target"] = expression_to_json(r.target);
  j["schedule"] = steps;
  j["note"] = r.note;
  return dump(j, pretty);
}

}  // namespace foldcalc::io
