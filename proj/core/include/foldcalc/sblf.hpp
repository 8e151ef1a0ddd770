#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldcalc/kirby.hpp"
#include "foldcalc/surface.hpp"

namespace foldcalc::sblf {

// Monodromy data of a simplified broken Lefschetz fibration over the sphere
// with nonorientable higher-genus fiber: the fiber N_k (k even, >= 2), an
// optional fold curve (round vanishing cycle; absent for honest Lefschetz
// fibrations over the sphere), the ordered Lefschetz vanishing cycles, the
// lower fiber across the fold, the regluing power, and the framing parity of
// the closing round handle.
struct SblfData {
  surface::SurfaceModel fiber;
  std::optional<surface::CurveWord> fold_curve;
  std::vector<surface::CurveWord> lefschetz_cycles;
  std::optional<surface::SurfaceModel> lower_fiber;
  int gluing_parameter = 0;
  int framing_parity = 0;

  // Structural well-formedness (not monodromy certification): fiber shape,
  // words living on the fiber, lower fiber present exactly with the fold and
  // one Euler characteristic step up, parameter ranges.
  void check() const;

  friend bool operator==(const SblfData&, const SblfData&) = default;
};

enum class CertLevel { PassExact, PassNecessary, Fail };

std::string to_string(CertLevel level);

// Per-condition verdicts of the monodromy certification. Conditions about the
// fold hold vacuously when no fold is present; the genus-two condition holds
// vacuously on higher-genus fibers.
struct CertificationReport {
  bool cycles_two_sided = false;        // every Lefschetz cycle is two-sided
  bool fold_nonseparating = false;      // fold two-sided and homologically nonzero
  bool composite_fixes_fold = false;    // twist composite fixes the fold class
  bool quotient_action_trivial = false; // ... and descends to the identity
  bool genus_two_exact = false;         // Klein-bottle fiber: even count, all
                                        // cycles in the unique two-sided class
  CertLevel level = CertLevel::Fail;

  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

// Certifies the data: exact for the Klein-bottle fiber (the genus-two
// monodromy facts are hardwired), homology-level necessary conditions above
// genus two.
CertificationReport validate(const SblfData& d);

// Realizes the data as a handle diagram: fiber skeleton, one -1-framed
// 2-handle per Lefschetz cycle, the fold's 0-framed 2-handle and round
// 3-handle (twisted exactly when the lower fiber is orientable), the closing
// round handle (regluing power visible only on the genus-two fiber), and the
// remaining 3-/4-handles.
kirby::HandleDecomposition build_kirby(const SblfData& d);

// Indices of Lefschetz cycles whose mod-2 class vanishes (candidates for
// bounding a disk or Moebius band, i.e. non-relatively-minimal witnesses).
std::vector<int> relative_minimality_report(const SblfData& d);

// A named diffeomorphism type; family/params feed back into the kirby catalog.
struct DiffeoType {
  std::string family;       // "K" | "N" | "Nprime" | "M"
  std::vector<int> params;
  std::string to_string() const;

  friend bool operator==(const DiffeoType&, const DiffeoType&) = default;
};

// The genus-two classification: bundles, fold-only fibrations split by
// framing parity, and honest Lefschetz fibrations with evenly many cycles.
DiffeoType classify_genus2(const SblfData& d);

// Euler characteristic of the total space: upper + lower fiber contributions
// plus one per Lefschetz point (doubled fiber when there is no fold).
int sblf_euler_char(const SblfData& d);

}  // namespace foldcalc::sblf
