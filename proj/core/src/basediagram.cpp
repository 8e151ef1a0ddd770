#include "foldcalc/basediagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "foldcalc/error.hpp"

namespace foldcalc::basediagram {

namespace {

bool is_sphere_stack(const FiberClass& f) {
  return !f.empty && f.orientable && f.genus == 0;
}

int sphere_components(const FiberClass& f) {
  if (f.empty) return 0;
  if (!is_sphere_stack(f)) return -1;
  return f.components;
}

void require_circle(const BaseDiagram& d, int i) {
  if (i < 0 || i >= static_cast<int>(d.circles.size())) {
    fail("InvalidData", "no circle with index " + std::to_string(i));
  }
}

void require_region(const BaseDiagram& d, int r) {
  if (r < 0 || r >= static_cast<int>(d.regions.size())) {
    fail("InvalidData", "no region with index " + std::to_string(r));
  }
}

int inner_chi(const BaseDiagram& d, int circle) {
  return d.regions[static_cast<std::size_t>(circle)].fiber.euler_characteristic();
}

int outer_chi(const BaseDiagram& d, int circle) {
  return d.regions[static_cast<std::size_t>(circle) + 1].fiber.euler_characteristic();
}

// Arrows point towards higher fiber chi; a tie (possible while tubes are
// pending) keeps the stored direction.
void derive_arrows(BaseDiagram& d) {
  for (std::size_t i = 0; i < d.circles.size(); ++i) {
    const int inner = inner_chi(d, static_cast<int>(i));
    const int outer = outer_chi(d, static_cast<int>(i));
    if (inner < outer) {
      d.circles[i].arrow = Arrow::Outward;
    } else if (inner > outer) {
      d.circles[i].arrow = Arrow::Inward;
    }
  }
}

BaseDiagram finish(BaseDiagram d) {
  derive_arrows(d);
  d.check();
  return d;
}

}  // namespace

int FiberClass::euler_characteristic() const {
  if (empty) return 0;
  return components * (orientable ? 2 - 2 * genus : 2 - genus);
}

int FiberClass::z2_betti() const {
  if (empty || components != 1) {
    fail("InvalidData", "mod-2 Betti number needs a connected fiber");
  }
  return orientable ? 2 * genus : genus;
}

void FiberClass::check() const {
  if (empty) {
    if (!orientable || genus != 0 || components != 0) {
      fail("InvalidData", "empty fiber must be stored in canonical form");
    }
    return;
  }
  if (components < 1) fail("InvalidData", "fiber needs at least one component");
  if (genus < 0) fail("InvalidData", "fiber genus must be nonnegative");
  if (!orientable && genus < 1) {
    fail("InvalidData", "a nonorientable fiber needs at least one crosscap");
  }
}

FiberClass attach_tube(const FiberClass& f, bool nonorientable_tube) {
  f.check();
  if (f.empty || f.components != 1) {
    fail("InvalidData", "tubes attach to a connected fiber");
  }
  FiberClass out = f;
  if (!f.orientable || !nonorientable_tube) {
    // Any tube on a nonorientable surface, and an orientable tube anywhere,
    // drops chi by 2 within the same orientability class.
    out.genus += f.orientable ? 1 : 2;
  } else {
    out.orientable = false;
    out.genus = 2 * f.genus + 2;
  }
  return out;
}

void BaseDiagram::check() const {
  if (regions.size() != circles.size() + 1) {
    fail("InvalidData", "a diagram with n circles needs n+1 regions");
  }
  for (const Region& r : regions) {
    r.fiber.check();
    if (r.lefschetz < 0) fail("InvalidData", "negative Lefschetz count");
    if (r.fiber.empty && r.lefschetz > 0) {
      fail("InvalidData", "Lefschetz points need a fiber to degenerate");
    }
  }
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const FoldCircle& c = circles[i];
    if (c.cusps < 0 || c.pending < 0) {
      fail("InvalidData", "cusp and pending counts must be nonnegative");
    }
    const FiberClass& a = regions[i].fiber;
    const FiberClass& b = regions[i + 1].fiber;
    if (c.kind == CircleKind::Definite) {
      if (c.cusps != 0) fail("InvalidData", "definite circles carry no cusps");
      if (c.pending != 0) fail("InvalidData", "definite circles carry no pending tubes");
      const int ca = sphere_components(a);
      const int cb = sphere_components(b);
      if (ca < 0 || cb < 0 || (ca != cb + 1 && cb != ca + 1)) {
        fail("InvalidData",
             "a definite circle separates sphere stacks whose component counts differ by one");
      }
    } else {
      if (a.empty || b.empty || a.components != 1 || b.components != 1) {
        fail("InvalidData", "an indefinite circle needs connected fibers on both sides");
      }
      if (c.pending == 0) {
        const int chi_a = a.euler_characteristic();
        const int chi_b = b.euler_characteristic();
        if (chi_a != chi_b + 2 && chi_b != chi_a + 2) {
          fail("InvalidData",
               "fiber Euler characteristics across an indefinite circle differ by two");
        }
        const FiberClass& higher = chi_a > chi_b ? a : b;
        const FiberClass& lower = chi_a > chi_b ? b : a;
        if (!higher.orientable && lower.orientable) {
          fail("InvalidData",
               "the lower fiber is the higher one with a tube, so it cannot regain orientability");
        }
      }
    }
  }
}

int total_euler_char(const BaseDiagram& d) {
  d.check();
  int chi = d.regions.front().fiber.euler_characteristic() +
            d.regions.back().fiber.euler_characteristic();
  for (const Region& r : d.regions) chi += r.lefschetz;
  for (const FoldCircle& c : d.circles) chi += c.cusps - 2 * c.pending;
  return chi;
}

BaseDiagram definite_to_indefinite(const BaseDiagram& d, int i, bool nonorientable_tube) {
  d.check();
  require_circle(d, i);
  const std::size_t ci = static_cast<std::size_t>(i);
  if (d.circles[ci].kind != CircleKind::Definite) {
    fail("NotDefinite", "the move converts a definite circle");
  }
  const std::size_t lower_region =
      d.regions[ci].fiber.empty ? ci : ci + 1;
  if (!d.regions[lower_region].fiber.empty) {
    fail("InconsistentFibers",
         "conversion is only realizable when the lower side carries no fiber");
  }
  const FiberClass& higher = d.regions[lower_region == ci ? ci + 1 : ci].fiber;
  BaseDiagram out = d;
  out.circles[ci].kind = CircleKind::Indefinite;
  out.regions[lower_region].fiber = attach_tube(higher, nonorientable_tube);
  return finish(std::move(out));
}

BaseDiagram flip(const BaseDiagram& d, int i, bool /*nonorientable_tube*/) {
  d.check();
  require_circle(d, i);
  if (d.circles[static_cast<std::size_t>(i)].kind != CircleKind::Indefinite) {
    fail("NotIndefinite", "only indefinite circles flip");
  }
  BaseDiagram out = d;
  out.circles[static_cast<std::size_t>(i)].cusps += 2;
  out.circles[static_cast<std::size_t>(i)].pending += 1;
  return finish(std::move(out));
}

BaseDiagram cusp_merge(const BaseDiagram& d, int i, int j) {
  d.check();
  require_circle(d, i);
  require_circle(d, j);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (hi != lo + 1) fail("NotAdjacent", "cusp merge needs neighbouring circles");
  const FoldCircle& a = d.circles[static_cast<std::size_t>(lo)];
  const FoldCircle& b = d.circles[static_cast<std::size_t>(hi)];
  if (a.kind != CircleKind::Indefinite || b.kind != CircleKind::Indefinite) {
    fail("NoCuspAvailable", "definite circles carry no cusps to merge");
  }
  if (a.cusps < 1 || b.cusps < 1) {
    fail("NoCuspAvailable", "both circles need at least one cusp");
  }
  const Region& between = d.regions[static_cast<std::size_t>(hi)];
  if (between.fiber.empty || between.fiber.components != 1) {
    fail("DisconnectedFiber", "the merged cusps must meet one fiber component");
  }
  if (between.lefschetz != 0) {
    fail("MoveInvalid", "move the Lefschetz points out of the absorbed region first");
  }
  if (a.pending + b.pending < 1) {
    fail("PendingUnderflow", "merging consumes one pending tube");
  }
  BaseDiagram out = d;
  out.circles[static_cast<std::size_t>(lo)] =
      FoldCircle{CircleKind::Indefinite, a.arrow, a.cusps + b.cusps - 2,
                 a.pending + b.pending - 1};
  out.circles.erase(out.circles.begin() + hi);
  out.regions.erase(out.regions.begin() + hi);
  return finish(std::move(out));
}

BaseDiagram unsink(const BaseDiagram& d, int i) {
  d.check();
  require_circle(d, i);
  const FoldCircle& c = d.circles[static_cast<std::size_t>(i)];
  if (c.kind != CircleKind::Indefinite || c.cusps < 1) {
    fail("NoCusp", "unsinking needs a cusp on an indefinite circle");
  }
  BaseDiagram out = d;
  out.circles[static_cast<std::size_t>(i)].cusps -= 1;
  const std::size_t target =
      outer_chi(d, i) < inner_chi(d, i) ? static_cast<std::size_t>(i) + 1
                                        : static_cast<std::size_t>(i);
  out.regions[target].lefschetz += 1;
  return finish(std::move(out));
}

BaseDiagram push_lefschetz(const BaseDiagram& d, int region_from, int region_to) {
  d.check();
  require_region(d, region_from);
  require_region(d, region_to);
  if (std::abs(region_from - region_to) != 1) {
    fail("NotAdjacent", "Lefschetz points move between neighbouring regions");
  }
  const int circle = std::min(region_from, region_to);
  if (d.circles[static_cast<std::size_t>(circle)].kind != CircleKind::Indefinite) {
    fail("WrongDirection", "points cross indefinite circles only");
  }
  const int chi_from =
      d.regions[static_cast<std::size_t>(region_from)].fiber.euler_characteristic();
  const int chi_to =
      d.regions[static_cast<std::size_t>(region_to)].fiber.euler_characteristic();
  if (chi_to >= chi_from) {
    fail("WrongDirection", "points move towards strictly lower fiber Euler characteristic");
  }
  if (d.regions[static_cast<std::size_t>(region_from)].lefschetz < 1) {
    fail("NoLefschetzPoint", "nothing to push");
  }
  BaseDiagram out = d;
  out.regions[static_cast<std::size_t>(region_from)].lefschetz -= 1;
  out.regions[static_cast<std::size_t>(region_to)].lefschetz += 1;
  return finish(std::move(out));
}

BaseDiagram wrinkle(const BaseDiagram& d, int region) {
  d.check();
  require_region(d, region);
  if (region != 0) {
    fail("MoveInvalid", "wrinkling is performed in the innermost region");
  }
  if (d.regions[0].lefschetz < 1) {
    fail("NoLefschetzPoint", "wrinkling consumes a Lefschetz point");
  }
  BaseDiagram out = d;
  out.circles.insert(out.circles.begin(),
                     FoldCircle{CircleKind::Indefinite, Arrow::Outward, 3, 0});
  const FiberClass old_fiber = d.regions[0].fiber;
  out.regions[0] = Region{attach_tube(old_fiber, true), d.regions[0].lefschetz - 1};
  out.regions.insert(out.regions.begin() + 1, Region{old_fiber, 0});
  return finish(std::move(out));
}

BaseDiagram invert_fold(const BaseDiagram& d, int i) {
  d.check();
  require_circle(d, i);
  if (i != 0) {
    fail("MoveInvalid", "fold inversion is performed on the innermost circle");
  }
  const FoldCircle& c = d.circles[0];
  if (c.kind != CircleKind::Indefinite || c.cusps != 0 ||
      inner_chi(d, 0) <= outer_chi(d, 0)) {
    fail("NotInwardIndefinite", "the move needs a cuspless inward indefinite circle");
  }
  if (c.pending != 0) {
    fail("MoveInvalid", "resolve pending tubes before inverting the fold");
  }
  const FiberClass f0 = d.regions[0].fiber;
  const FiberClass mid = attach_tube(attach_tube(f0, true), true);
  BaseDiagram out = d;
  out.circles[0] = FoldCircle{CircleKind::Indefinite, Arrow::Outward, 3, 0};
  out.circles.insert(out.circles.begin(),
                     FoldCircle{CircleKind::Indefinite, Arrow::Outward, 3, 0});
  out.regions[0].fiber = attach_tube(mid, true);
  out.regions.insert(out.regions.begin() + 1, Region{mid, 0});
  return finish(std::move(out));
}

BaseDiagram recenter(const BaseDiagram& d) {
  d.check();
  BaseDiagram out = d;
  std::reverse(out.circles.begin(), out.circles.end());
  std::reverse(out.regions.begin(), out.regions.end());
  return finish(std::move(out));
}

BaseDiagram resolve(const BaseDiagram& d) {
  d.check();
  if (d.circles.size() != 1) {
    fail("MoveInvalid", "resolution applies to a single remaining circle");
  }
  if (d.circles[0].kind != CircleKind::Indefinite) {
    fail("NotIndefinite", "only indefinite circles carry pending tubes");
  }
  const int pending = d.circles[0].pending;
  const int delta = inner_chi(d, 0) - outer_chi(d, 0);
  if (delta % 2 != 0) fail("MoveInvalid", "fiber Euler characteristics have mixed parity");
  const int difference = delta / 2 + 1;  // inner tube count minus outer
  if ((pending + difference) % 2 != 0 || difference > pending || difference < -pending) {
    fail("MoveInvalid", "pending tubes cannot restore the fold-circle gap");
  }
  const int inner_tubes = (pending + difference) / 2;
  const int outer_tubes = pending - inner_tubes;
  BaseDiagram out = d;
  out.circles[0].pending = 0;
  for (int t = 0; t < inner_tubes; ++t) {
    out.regions[0].fiber = attach_tube(out.regions[0].fiber, true);
  }
  for (int t = 0; t < outer_tubes; ++t) {
    out.regions[1].fiber = attach_tube(out.regions[1].fiber, true);
  }
  return finish(std::move(out));
}

bool is_sblf_normal_form(const BaseDiagram& d) {
  d.check();
  if (d.circles.empty()) {
    const FiberClass& f = d.regions[0].fiber;
    return !f.empty && f.components == 1;
  }
  if (d.circles.size() != 1) return false;
  const FoldCircle& c = d.circles[0];
  if (c.kind != CircleKind::Indefinite || c.cusps != 0 || c.pending != 0) return false;
  if (inner_chi(d, 0) != outer_chi(d, 0) - 2) return false;
  return d.regions[1].lefschetz == 0;
}

BaseDiagram flip_and_slip(const BaseDiagram& d) {
  if (d.circles.size() != 1 || !is_sblf_normal_form(d)) {
    fail("NotSblfNormalForm",
         "the macro needs a normal form with exactly one indefinite circle");
  }
  BaseDiagram out = flip(flip(d, 0, true), 0, true);
  for (int step = 0; step < 4; ++step) out = unsink(out, 0);
  return resolve(out);
}

BaseDiagram apply_move(const BaseDiagram& d, const Move& m) {
  if (m.name == "definite_to_indefinite") {
    return definite_to_indefinite(d, m.circle, m.nonorientable_tube);
  }
  if (m.name == "flip") return flip(d, m.circle, m.nonorientable_tube);
  if (m.name == "cusp_merge") return cusp_merge(d, m.circle, m.second);
  if (m.name == "unsink") return unsink(d, m.circle);
  if (m.name == "push") return push_lefschetz(d, m.from, m.to);
  if (m.name == "wrinkle") return wrinkle(d, m.region);
  if (m.name == "invert_fold") return invert_fold(d, m.circle);
  if (m.name == "recenter") return recenter(d);
  if (m.name == "resolve") return resolve(d);
  if (m.name == "flip_and_slip") return flip_and_slip(d);
  fail("UnknownName", "no move named '" + m.name + "'");
}

namespace {

// Pushes every Lefschetz point as far towards lower fiber chi as the circles
// allow, logging the moves.
void push_points_down(BaseDiagram& d, std::vector<Move>& log) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 1; r < static_cast<int>(d.regions.size()); ++r) {
      while (d.regions[static_cast<std::size_t>(r)].lefschetz > 0) {
        Move m{"push"};
        m.from = r;
        m.to = r - 1;
        BaseDiagram next;
        try {
          next = push_lefschetz(d, r, r - 1);
        } catch (const Error&) {
          break;
        }
        d = std::move(next);
        log.push_back(m);
        changed = true;
      }
    }
  }
}

}  // namespace

SimplifyResult simplify_to_sblf(const BaseDiagram& d,
                                const std::optional<std::vector<Move>>& script) {
  d.check();
  if (script.has_value()) {
    BaseDiagram state = d;
    for (std::size_t k = 0; k < script->size(); ++k) {
      try {
        state = apply_move(state, (*script)[k]);
      } catch (const Error& e) {
        fail("MoveInvalid", "script step " + std::to_string(k) + " (" +
                                (*script)[k].name + "): " + e.what());
      }
    }
    return {std::move(state), *script};
  }

  if (is_sblf_normal_form(d)) return {d, {}};

  BaseDiagram state = d;
  std::vector<Move> log;
  const auto stuck = [](const std::string& why) {
    fail("StrategyStuck", why);
  };

  // Eliminate definite circles.
  while (true) {
    const auto it = std::find_if(
        state.circles.begin(), state.circles.end(),
        [](const FoldCircle& c) { return c.kind == CircleKind::Definite; });
    if (it == state.circles.end()) break;
    const int i = static_cast<int>(it - state.circles.begin());
    try {
      state = definite_to_indefinite(state, i, true);
    } catch (const Error& e) {
      stuck(std::string("definite circle cannot be converted: ") + e.what());
    }
    Move m{"definite_to_indefinite"};
    m.circle = i;
    log.push_back(m);
  }

  // Clear Lefschetz points out of the annular regions before merging.
  push_points_down(state, log);

  // Flip every circle twice, then merge innermost-out.
  for (int i = 0; i < static_cast<int>(state.circles.size()); ++i) {
    for (int r = 0; r < 2; ++r) {
      state = flip(state, i, true);
      Move m{"flip"};
      m.circle = i;
      log.push_back(m);
    }
  }
  while (state.circles.size() > 1) {
    try {
      state = cusp_merge(state, 0, 1);
    } catch (const Error& e) {
      stuck(std::string("cusp merge failed: ") + e.what());
    }
    Move m{"cusp_merge"};
    m.circle = 0;
    m.second = 1;
    log.push_back(m);
  }

  if (state.circles.size() == 1) {
    while (state.circles[0].cusps > 0) {
      state = unsink(state, 0);
      Move m{"unsink"};
      m.circle = 0;
      log.push_back(m);
    }
    try {
      state = resolve(state);
    } catch (const Error& e) {
      stuck(std::string("resolution failed: ") + e.what());
    }
    log.push_back(Move{"resolve"});
    push_points_down(state, log);
  }

  if (!is_sblf_normal_form(state)) stuck("strategy did not reach normal form");
  return {std::move(state), std::move(log)};
}

BaseDiagram canonical_trisection_ladder(int g, int k) {
  if (k < 0 || g < k) fail("BadParams", "trisection parameters need g >= k >= 0");
  BaseDiagram d;
  for (int i = 0; i < g; ++i) {
    d.circles.push_back(
        FoldCircle{CircleKind::Indefinite, Arrow::Outward, i < g - k ? 3 : 0, 0});
    d.regions.push_back(Region{FiberClass::nonorientable(2 * (g - i)), 0});
  }
  d.circles.push_back(FoldCircle{CircleKind::Definite, Arrow::Inward, 0, 0});
  d.regions.push_back(Region{FiberClass::spheres(1), 0});
  d.regions.push_back(Region{FiberClass::none(), 0});
  derive_arrows(d);
  d.check();
  return d;
}

namespace {

bool is_trisectable_annulus(const BaseDiagram& d) {
  return d.circles.size() == 2 &&
         d.circles[0].kind == CircleKind::Definite &&
         d.circles[1].kind == CircleKind::Definite &&
         d.regions[0].fiber.empty && d.regions[2].fiber.empty &&
         sphere_components(d.regions[1].fiber) == 1;
}

}  // namespace

TrisectionResult sblf_to_trisection(const BaseDiagram& d) {
  d.check();

  if (is_trisectable_annulus(d)) {
    const int a = d.regions[1].lefschetz;
    BaseDiagram state = d;
    std::vector<Move> log;
    Move convert{"definite_to_indefinite"};
    convert.circle = 0;
    state = apply_move(state, convert);
    log.push_back(convert);
    for (int p = 0; p < a; ++p) {
      Move m{"push"};
      m.from = 1;
      m.to = 0;
      state = apply_move(state, m);
      log.push_back(m);
    }
    for (int p = 0; p < a; ++p) {
      Move m{"wrinkle"};
      m.region = 0;
      state = apply_move(state, m);
      log.push_back(m);
    }
    TrisectionParams params{a + 1, 1};
    if (total_euler_char(state) != 2 + params.g - 3 * params.k) {
      throw std::logic_error("trisection ladder lost the Euler characteristic");
    }
    return {std::move(state), params, std::move(log)};
  }

  TrisectionParams params;
  if (d.circles.empty() && is_sblf_normal_form(d)) {
    const int a = d.regions[0].lefschetz;
    const int b = d.regions[0].fiber.z2_betti();
    params = {a + b + 2, b};
  } else if (d.circles.size() == 1 && is_sblf_normal_form(d)) {
    const int a = d.regions[0].lefschetz;
    const int b = d.regions[1].fiber.z2_betti();
    params = {a + b + 3, b + 1};
  } else {
    fail("NotSblfNormalForm", "trisecting needs a normal form or the annulus shape");
  }
  BaseDiagram ladder = canonical_trisection_ladder(params.g, params.k);
  if (total_euler_char(ladder) != total_euler_char(d)) {
    throw std::logic_error("trisection ladder lost the Euler characteristic");
  }
  return {std::move(ladder), params, {}};
}

TrisectionSblfParams trisection_to_sblf_params(int g, int k) {
  if (k < 0 || g < k) fail("BadParams", "trisection parameters need g >= k >= 0");
  TrisectionSblfParams out;
  out.higher = FiberClass::nonorientable(2 * g + 4);
  out.lower = FiberClass::nonorientable(2 * g + 2);
  out.lefschetz = 2 * g + 3 * k + 4;
  out.trisection_euler_char = 2 + g - 3 * k;
  out.ladder_euler_char = out.higher.euler_characteristic() +
                          out.lower.euler_characteristic() + out.lefschetz;
  out.euler_char_matches = out.trisection_euler_char == out.ladder_euler_char;
  return out;
}

SpinProductTrisections spin_and_product_trisections(int m, int b) {
  if (b < 0 || m < b) fail("BadParams", "the families need m >= b >= 0");
  return {TrisectionParams{3 * m + 1, m + 1}, TrisectionParams{3 * m, m}, m == b};
}

}  // namespace foldcalc::basediagram
