#include "foldcalc/sblf.hpp"

#include <algorithm>

#include "foldcalc/error.hpp"

namespace foldcalc::sblf {

namespace {

using algebra::Letter;
using algebra::Word;
using surface::CurveWord;
using surface::SurfaceModel;
using surface::Z2LinearMap;

void require_on_fiber(const SurfaceModel& fiber, const CurveWord& w, const char* what) {
  if (!(w.surface == fiber)) {
    fail("SurfaceMismatch", std::string(what) + " does not live on the fiber surface");
  }
  w.check();
}

// Composite of the Z2 twist maps, first listed cycle applied first.
Z2LinearMap composite_twist(const SblfData& d) {
  Z2LinearMap comp = Z2LinearMap::identity(d.fiber.z2_betti());
  for (const CurveWord& cyc : d.lefschetz_cycles) {
    comp = surface::dehn_twist_z2(surface::z2_class(cyc)).compose(comp);
  }
  return comp;
}

bool is_genus2_standard_class(const SblfData& d, const CurveWord& w) {
  const surface::BitVec cls = surface::z2_class(w).vector;
  return cls.size() == 2 && cls[0] == 1 && cls[1] == 1;
}

// Rewrites a curve word on the Klein-bottle fiber into the loop alphabet of
// the genus-two handle skeleton {a twisted, b untwisted}: the first crosscap
// loop maps to a, the second to a^{-1} b.
Word genus2_loop_word(const Word& word) {
  Word out;
  for (const Letter& l : word) {
    if (l.gen == 0) {
      out.push_back({0, l.sign});
    } else if (l.sign > 0) {
      out.push_back({0, -1});
      out.push_back({1, 1});
    } else {
      out.push_back({1, -1});
      out.push_back({0, 1});
    }
  }
  return algebra::cyclic_reduce(out);
}

int twisted_traversals(const std::vector<kirby::OneHandle>& handles, const Word& w) {
  int count = 0;
  for (const Letter& l : w) {
    if (handles[static_cast<std::size_t>(l.gen)].twisted) ++count;
  }
  return count;
}

std::vector<int> flat_labels(int traversals) {
  if (traversals == 0) return {0};
  return std::vector<int>(static_cast<std::size_t>(traversals), 0);
}

std::vector<int> lefschetz_labels(int traversals) {
  std::vector<int> labels(static_cast<std::size_t>(std::max(traversals, 1)), 0);
  labels[0] = -1;
  return labels;
}

}  // namespace

void SblfData::check() const {
  fiber.check();
  if (fiber.orientable || fiber.genus < 2 || fiber.genus % 2 != 0) {
    fail("InvalidData", "fiber must be a nonorientable surface of even genus at least 2");
  }
  for (const CurveWord& cyc : lefschetz_cycles) {
    require_on_fiber(fiber, cyc, "Lefschetz cycle");
  }
  if (fold_curve.has_value()) {
    require_on_fiber(fiber, *fold_curve, "fold curve");
    if (!lower_fiber.has_value()) {
      fail("InvalidData", "fold curve requires a lower fiber");
    }
    lower_fiber->check();
    if (lower_fiber->euler_characteristic() != fiber.euler_characteristic() + 2) {
      fail("InvalidData",
           "lower fiber must have Euler characteristic two above the fiber");
    }
  } else if (lower_fiber.has_value()) {
    fail("InvalidData", "lower fiber is only meaningful together with a fold curve");
  }
  if (gluing_parameter < 0) {
    fail("InvalidData", "gluing parameter must be nonnegative");
  }
  if (framing_parity != 0 && framing_parity != 1) {
    fail("InvalidData", "framing parity must be 0 or 1");
  }
}

std::string to_string(CertLevel level) {
  switch (level) {
    case CertLevel::PassExact: return "PASS-exact";
    case CertLevel::PassNecessary: return "PASS-necessary";
    case CertLevel::Fail: return "FAIL";
  }
  fail("InvalidData", "unknown certification level");
}

CertificationReport validate(const SblfData& d) {
  d.check();
  CertificationReport report;

  report.cycles_two_sided = std::all_of(
      d.lefschetz_cycles.begin(), d.lefschetz_cycles.end(),
      [](const CurveWord& cyc) { return surface::is_two_sided(cyc); });

  if (d.fold_curve.has_value()) {
    report.fold_nonseparating = surface::is_two_sided(*d.fold_curve) &&
                                surface::is_essential_z2(*d.fold_curve);
    if (report.cycles_two_sided && report.fold_nonseparating) {
      const surface::BitVec fold_class = surface::z2_class(*d.fold_curve).vector;
      report.composite_fixes_fold = composite_twist(d).apply(fold_class) == fold_class;
      if (report.composite_fixes_fold) {
        std::vector<surface::Z2Class> twist_classes;
        twist_classes.reserve(d.lefschetz_cycles.size());
        for (const CurveWord& cyc : d.lefschetz_cycles) {
          twist_classes.push_back(surface::z2_class(cyc));
        }
        report.quotient_action_trivial =
            surface::induced_quotient_action(twist_classes,
                                             surface::z2_class(*d.fold_curve))
                .is_identity();
      }
    }
  } else {
    report.fold_nonseparating = true;
    report.composite_fixes_fold = true;
    report.quotient_action_trivial = true;
  }

  if (d.fiber.genus == 2) {
    report.genus_two_exact =
        d.lefschetz_cycles.size() % 2 == 0 &&
        std::all_of(d.lefschetz_cycles.begin(), d.lefschetz_cycles.end(),
                    [&](const CurveWord& cyc) { return is_genus2_standard_class(d, cyc); });
  } else {
    report.genus_two_exact = true;
  }

  const bool all_pass = report.cycles_two_sided && report.fold_nonseparating &&
                        report.composite_fixes_fold && report.quotient_action_trivial &&
                        report.genus_two_exact;
  report.level = !all_pass           ? CertLevel::Fail
                 : d.fiber.genus == 2 ? CertLevel::PassExact
                                      : CertLevel::PassNecessary;
  return report;
}

kirby::HandleDecomposition build_kirby(const SblfData& d) {
  if (validate(d).level == CertLevel::Fail) {
    fail("InvalidData", "monodromy data failed certification");
  }
  const int k = d.fiber.genus;
  kirby::HandleDecomposition h;
  h.zero_handles = 1;

  if (k == 2) {
    h.one_handles = {{"a", true, 0, 0}, {"b", false, 0, 0}};

    Word fiber_word = genus2_loop_word(
        Word{{0, 1}, {0, 1}, {1, 1}, {1, 1}});  // both crosscap loops squared
    h.two_handles.push_back(
        {fiber_word, flat_labels(twisted_traversals(h.one_handles, fiber_word))});

    for (const CurveWord& cyc : d.lefschetz_cycles) {
      const Word w = genus2_loop_word(cyc.word);
      h.two_handles.push_back({w, lefschetz_labels(twisted_traversals(h.one_handles, w))});
    }

    if (d.fold_curve.has_value()) {
      const Word w = genus2_loop_word(d.fold_curve->word);
      h.two_handles.push_back({w, flat_labels(twisted_traversals(h.one_handles, w))});
    }

    const int n = d.gluing_parameter;
    Word closing(static_cast<std::size_t>(2 * n), Letter{0, 1});
    std::vector<int> closing_labels(static_cast<std::size_t>(std::max(2 * n, 1)), 0);
    closing_labels[0] = d.framing_parity;
    h.two_handles.push_back({closing, closing_labels});
  } else {
    for (int i = 0; i < k; ++i) {
      h.one_handles.push_back({"a" + std::to_string(i + 1), true, 0, 0});
    }

    Word fiber_word;
    for (int i = 0; i < k; ++i) {
      fiber_word.push_back({i, 1});
      fiber_word.push_back({i, 1});
    }
    h.two_handles.push_back(
        {fiber_word, std::vector<int>(static_cast<std::size_t>(2 * k), 0)});

    for (const CurveWord& cyc : d.lefschetz_cycles) {
      const Word w = algebra::cyclic_reduce(cyc.word);
      h.two_handles.push_back({w, lefschetz_labels(twisted_traversals(h.one_handles, w))});
    }

    if (d.fold_curve.has_value()) {
      const Word w = algebra::cyclic_reduce(d.fold_curve->word);
      h.two_handles.push_back({w, flat_labels(twisted_traversals(h.one_handles, w))});
    }

    // The closing round handle attaches over the bundle region; its regluing
    // power leaves no visible trace here, only the framing parity does.
    h.two_handles.push_back({Word{}, {d.framing_parity}});
  }

  if (d.fold_curve.has_value()) {
    const bool fold_twisted = d.lower_fiber->orientable;
    h.three_handles = {k - 2 + (fold_twisted ? 0 : 1), fold_twisted ? 1 : 0};
  } else {
    h.three_handles = {k, 0};
  }
  h.four_handles = 1;
  return h;
}

std::vector<int> relative_minimality_report(const SblfData& d) {
  d.check();
  std::vector<int> offenders;
  for (std::size_t i = 0; i < d.lefschetz_cycles.size(); ++i) {
    if (!surface::is_essential_z2(d.lefschetz_cycles[i])) {
      offenders.push_back(static_cast<int>(i));
    }
  }
  return offenders;
}

std::string DiffeoType::to_string() const {
  std::string out = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

DiffeoType classify_genus2(const SblfData& d) {
  d.check();
  if (d.fiber.genus != 2) {
    fail("WrongGenus", "classification requires a genus-two fiber");
  }
  if (!relative_minimality_report(d).empty()) {
    fail("NonMinimalCase", "null-homologous Lefschetz cycle present");
  }
  if (d.fold_curve.has_value() && !d.lefschetz_cycles.empty()) {
    fail("NonMinimalCase", "fold and Lefschetz cycles together fall outside the classification");
  }
  if (validate(d).level == CertLevel::Fail) {
    fail("InvalidData", "monodromy data failed certification");
  }

  const int n = d.gluing_parameter;
  if (d.fold_curve.has_value()) {
    return {d.framing_parity == 0 ? "N" : "Nprime", {n}};
  }
  if (d.lefschetz_cycles.empty()) {
    return {"K", {n}};
  }
  return {"M", {static_cast<int>(d.lefschetz_cycles.size()) / 2, n}};
}

int sblf_euler_char(const SblfData& d) {
  d.check();
  const int cycles = static_cast<int>(d.lefschetz_cycles.size());
  if (d.fold_curve.has_value()) {
    return d.fiber.euler_characteristic() + d.lower_fiber->euler_characteristic() + cycles;
  }
  return 2 * d.fiber.euler_characteristic() + cycles;
}

}  // namespace foldcalc::sblf
