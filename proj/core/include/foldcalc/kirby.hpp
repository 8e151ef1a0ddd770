#pragma once

#include <array>
#include <string>
#include <vector>

#include "foldcalc/algebra.hpp"

namespace foldcalc::kirby {

// A 1-handle of a 4-dimensional handle decomposition. Feet index the
// 0-handles it joins (both 0 in the usual single-0-handle diagrams; covers
// produce two 0-handles). A twisted handle glues with an orientation reversal.
struct OneHandle {
  std::string name;
  bool twisted = false;
  int foot0 = 0;
  int foot1 = 0;

  friend bool operator==(const OneHandle&, const OneHandle&) = default;
};

// A 2-handle: its attaching word over the 1-handle letters plus per-arc
// framing labels. There is one label per traversal of a twisted letter, and a
// single label for words that never cross a twisted handle.
struct TwoHandle {
  algebra::Word word;  // letters index one_handles
  std::vector<int> framing_labels;

  friend bool operator==(const TwoHandle&, const TwoHandle&) = default;
};

struct ThreeHandles {
  int untwisted = 0;
  int twisted = 0;

  int total() const { return untwisted + twisted; }

  friend bool operator==(const ThreeHandles&, const ThreeHandles&) = default;
};

struct HandleDecomposition {
  int zero_handles = 1;
  std::vector<OneHandle> one_handles;
  std::vector<TwoHandle> two_handles;
  ThreeHandles three_handles;
  int four_handles = 0;

  int euler_characteristic() const;
  int one_handle_index(const std::string& name) const;  // -1 when absent
  // Counts, feet, letters, and framing-label lengths are consistent.
  void check() const;

  friend bool operator==(const HandleDecomposition&, const HandleDecomposition&) = default;
};

struct ManifoldInvariants {
  int euler_char = 0;
  algebra::FpPresentation pi1;
  algebra::AbelianInvariants h1;
  std::array<int, 5> z2_betti{};  // mod-2 Betti numbers b0..b4
  bool orientable = false;

  friend bool operator==(const ManifoldInvariants&, const ManifoldInvariants&) = default;
};

// Fundamental group (1-handles modulo 2-handle words, with a spanning tree of
// the 0-handle graph contracted), first homology, mod-2 Betti numbers via
// b2 = euler_char - 2 + 2 b1, and orientability read off the surviving
// orientation character. Assumes a constructor-produced closed diagram.
ManifoldInvariants invariants(const HandleDecomposition& h);

// The orientation double cover of a diagram with exactly one 0-handle and
// exactly one twisted 1-handle: two 0-handles, per-sheet copies of the
// untwisted handles, two lifts of the twisted handle joining the sheets, and
// sheet-parity rewriting of every attaching word (two lifted copies each).
// Framing labels are copied with signs alternating at each lifted-handle
// crossing; 3-/4-handle inventory is duplicated per sheet.
HandleDecomposition double_cover(const HandleDecomposition& h);

// True iff the cover's first homology matches the index-2 kernel of the
// base's fundamental group and the Euler characteristic doubled.
bool verify_double_cover(const HandleDecomposition& base,
                         const HandleDecomposition& cover);

// Removes a 2-handle attached along a split unknot with framing label +1 or
// -1 (a connect-summed complex-projective-plane factor, either orientation).
HandleDecomposition blow_down_orientable(HandleDecomposition h, int index);

// Removes a 2-handle whose word is the square of one twisted letter with odd
// total framing (a crosscap-section pattern: trades the projective-space
// summand for a twisted sphere bundle).
HandleDecomposition blow_down_nonorientable(HandleDecomposition h, int index);

// Named diagram constructors:
//   "K" n        - twisted sphere bundles over the Klein bottle, pi1 <a,b | aba^-1b, a^2n>
//   "RP4"        - real projective 4-space
//   "S1xtS3"     - twisted product of a circle and a 3-sphere
//   "RP4#RP4"    - its double, in the one-twisted-handle form
//   "N" n / "Nprime" n - the two fold-only fibrations over the disk, parity 0/1
//   "M" m n      - genus-two fibrations with 2m vanishing cycles, pi1 cyclic of order 2n
//   "X" m        - shorthand for "M" m 0
//   "R" n        - the twisted rational-ball double, boundary open (n >= 2)
//   "B" n        - the rational ball with cyclic fundamental group (n >= 1)
//   "NxS2" g     - product of a nonorientable surface with a sphere
//   "sum" g k    - connected sum of g-k twisted S3-bundles and k projective spaces
HandleDecomposition catalog(const std::string& name, const std::vector<int>& params = {});

std::vector<std::string> catalog_names();

}  // namespace foldcalc::kirby
