#pragma once

#include <optional>
#include <string>
#include <vector>

namespace foldcalc::basediagram {

// Fiber over a region of the base: either empty (the map misses the region)
// or some number of identical closed-surface components.
struct FiberClass {
  bool empty = false;
  bool orientable = true;
  int genus = 0;
  int components = 1;

  static FiberClass none() { return {true, true, 0, 0}; }
  static FiberClass spheres(int components) { return {false, true, 0, components}; }
  static FiberClass nonorientable(int genus) { return {false, false, genus, 1}; }
  static FiberClass surface(int genus) { return {false, true, genus, 1}; }

  int euler_characteristic() const;
  int z2_betti() const;  // connected fibers only
  void check() const;

  friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

// Attaches one tube (1-handle) to a connected fiber: an orientable tube adds a
// handle, a nonorientable one a cross-handle.
FiberClass attach_tube(const FiberClass& f, bool nonorientable_tube);

enum class CircleKind { Definite, Indefinite };
enum class Arrow { Inward, Outward };

// One fold circle of the singular image. `pending` counts tubes created by
// flips that have not yet been materialized into the neighbouring fibers; the
// usual +-2 Euler-characteristic gap across the circle is suspended while any
// tube is pending and restored by `resolve`.
struct FoldCircle {
  CircleKind kind = CircleKind::Indefinite;
  Arrow arrow = Arrow::Outward;
  int cusps = 0;
  int pending = 0;

  friend bool operator==(const FoldCircle&, const FoldCircle&) = default;
};

struct Region {
  FiberClass fiber;
  int lefschetz = 0;

  friend bool operator==(const Region&, const Region&) = default;
};

// Concentric normal form: circles listed innermost first; regions.size() ==
// circles.size() + 1, innermost first.
struct BaseDiagram {
  std::vector<FoldCircle> circles;
  std::vector<Region> regions;

  void check() const;

  friend bool operator==(const BaseDiagram&, const BaseDiagram&) = default;
};

struct TrisectionParams {
  int g = 0;
  int k = 0;

  friend bool operator==(const TrisectionParams&, const TrisectionParams&) = default;
};

// A move-log entry / script element. Only the fields a given move reads are
// meaningful; the rest keep their defaults.
struct Move {
  std::string name;  // definite_to_indefinite | flip | cusp_merge | unsink |
                     // push | wrinkle | invert_fold | recenter | resolve |
                     // flip_and_slip
  int circle = 0;
  int second = 0;  // partner circle of cusp_merge
  int region = 0;
  int from = 0;
  int to = 0;
  bool nonorientable_tube = true;

  friend bool operator==(const Move&, const Move&) = default;
};

// The conserved quantity: chi(innermost fiber) + chi(outermost fiber) + total
// Lefschetz points + total cusps - 2 * total pending tubes. Every move below
// preserves it.
int total_euler_char(const BaseDiagram& d);

// Turns a definite circle whose lower side is empty into an indefinite one;
// the empty region acquires the sphere-with-one-tube fiber.
BaseDiagram definite_to_indefinite(const BaseDiagram& d, int i, bool nonorientable_tube);

// Adds two cusps to an indefinite circle and queues one tube on it.
BaseDiagram flip(const BaseDiagram& d, int i, bool nonorientable_tube);

// Merges two adjacent indefinite circles, absorbing the region between them;
// cusp counts combine as c_i + c_j - 2 and one pending tube is spent.
BaseDiagram cusp_merge(const BaseDiagram& d, int i, int j);

// Trades one cusp for a Lefschetz point in the lower-chi adjacent region
// (innermost on a tie).
BaseDiagram unsink(const BaseDiagram& d, int i);

// Moves one Lefschetz point to the adjacent region across an indefinite
// circle, towards strictly lower fiber chi.
BaseDiagram push_lefschetz(const BaseDiagram& d, int region_from, int region_to);

// Perturbs one Lefschetz point of the innermost region into a new innermost
// thrice-cusped indefinite circle; the remaining points stay innermost and the
// new innermost fiber gains one tube.
BaseDiagram wrinkle(const BaseDiagram& d, int region);

// Replaces the innermost circle, when inward and cuspless, by two outward
// thrice-cusped circles; the fibers inside descend by the tube ladder.
BaseDiagram invert_fold(const BaseDiagram& d, int i);

// Turns the diagram inside out (re-centers the picture on the sphere around
// the outer region).
BaseDiagram recenter(const BaseDiagram& d);

// Materializes all pending tubes of the single remaining circle into the two
// fibers so that the circle ends up outward with an honest chi gap.
BaseDiagram resolve(const BaseDiagram& d);

// On a fibration normal form: two flips, four unsinks and a resolve — the
// fiber genus rises by two and four Lefschetz points appear.
BaseDiagram flip_and_slip(const BaseDiagram& d);

// Replays one script element.
BaseDiagram apply_move(const BaseDiagram& d, const Move& m);

// Normal form: no definite circles, at most one (cuspless, fully resolved)
// indefinite circle, Lefschetz points only in the higher-genus region.
bool is_sblf_normal_form(const BaseDiagram& d);

struct SimplifyResult {
  BaseDiagram result;
  std::vector<Move> log;
};

// Drives the diagram to normal form: with a script, replays it; without one,
// converts definite circles, pushes points inward, flips every circle twice,
// merges innermost-out, unsinks, resolves, and pushes points to the
// higher-genus side.
SimplifyResult simplify_to_sblf(const BaseDiagram& d,
                                const std::optional<std::vector<Move>>& script = std::nullopt);

// The concentric ladder of a (g, k) trisection diagram: fibers N_2g, ...,
// N_2, S^2, empty; g outward indefinite circles of which the innermost g - k
// carry three cusps each, closed off by a definite circle.
BaseDiagram canonical_trisection_ladder(int g, int k);

struct TrisectionResult {
  BaseDiagram diagram;
  TrisectionParams params;
  std::vector<Move> log;
};

// Converts a normal-form diagram (or the two-definite-circle annulus shape)
// into a trisection diagram and its parameters.
TrisectionResult sblf_to_trisection(const BaseDiagram& d);

struct TrisectionSblfParams {
  FiberClass higher;
  FiberClass lower;
  int lefschetz = 0;
  int trisection_euler_char = 0;  // 2 + g - 3k
  int ladder_euler_char = 0;      // chi(higher) + chi(lower) + lefschetz
  bool euler_char_matches = false;
};

// The reverse conversion from (g, k) trisection parameters to fibration data;
// reports both sides of the Euler-characteristic ledger, which disagree
// unless g = 2k.
TrisectionSblfParams trisection_to_sblf_params(int g, int k);

struct SpinProductTrisections {
  TrisectionParams product;  // the circle-times-3-manifold family
  TrisectionParams spin;     // its spin companion
  bool minimal = false;
};

// Trisection parameters (3m+1, m+1) and (3m, m) for the standard families
// built from a 3-manifold of Heegaard genus m with b = first Betti number;
// minimal exactly when m = b.
SpinProductTrisections spin_and_product_trisections(int m, int b);

}  // namespace foldcalc::basediagram
