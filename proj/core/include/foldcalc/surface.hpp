#pragma once

#include <cstdint>
#include <vector>

#include "foldcalc/algebra.hpp"

namespace foldcalc::surface {

using BitVec = std::vector<std::uint8_t>;

// A closed surface: nonorientable genus-k N_k (crosscap number k >= 1) or
// orientable genus-g Σ_g.
struct SurfaceModel {
  bool orientable = false;
  int genus = 0;

  int z2_betti() const { return orientable ? 2 * genus : genus; }
  int euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  void check() const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// A cyclic word in the standard one-holed generators of the surface group:
// crosscap loops a_1..a_k on N_k (letter index i-1), the symplectic pairs
// a_1,b_1,...,a_g,b_g on Σ_g (letter indices 2i, 2i+1). No relator rewriting
// is applied; words are taken cyclically reduced and nonempty.
struct CurveWord {
  SurfaceModel surface;
  algebra::Word word;

  void check() const;

  friend bool operator==(const CurveWord&, const CurveWord&) = default;
};

// An element of H1 of the surface with coefficients in the two-element field,
// in the basis above; vector length equals the surface's first Z2 Betti number.
struct Z2Class {
  SurfaceModel surface;
  BitVec vector;

  void check() const;

  friend bool operator==(const Z2Class&, const Z2Class&) = default;
};

// A matrix over the two-element field acting on bit vectors (columns index
// the domain basis).
struct Z2LinearMap {
  int rows = 0;
  int cols = 0;
  BitVec entries;  // row-major

  static Z2LinearMap zero(int r, int c);
  static Z2LinearMap identity(int n);

  std::uint8_t& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(c)];
  }
  std::uint8_t at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(c)];
  }
  BitVec apply(const BitVec& v) const;
  Z2LinearMap compose(const Z2LinearMap& inner) const;  // this applied after inner
  bool is_identity() const;

  friend bool operator==(const Z2LinearMap&, const Z2LinearMap&) = default;
};

// Exponent sums of the word's letters, reduced mod 2.
Z2Class z2_class(const CurveWord& c);

// Pairing under the surface's intersection form: identity matrix in the
// crosscap basis on N_k, the standard symplectic form mod 2 on Σ_g.
int intersection_mod2(const Z2Class& x, const Z2Class& y);
int self_intersection_mod2(const Z2Class& x);

// A curve is two-sided exactly when its class pairs to zero with itself; on
// N_k this is the parity of the total exponent sum.
bool is_two_sided(const CurveWord& c);

// Nonvanishing of the Z2 class: a necessary condition for the curve to be
// essential (a null class can still be essential; this is the homology test).
bool is_essential_z2(const CurveWord& c);

// The transvection x -> x + (x . c) c induced by a Dehn twist along a
// two-sided curve in class c.
Z2LinearMap dehn_twist_z2(const Z2Class& c);

// Homology-level cut-cap-forget along a two-sided nonzero class c: the
// perpendicular subspace, the quotient by <c>, and the projection onto it.
struct CutCapForget {
  std::vector<BitVec> subspace_basis;  // basis of the perpendicular of c; c last
  int quotient_dim = 0;                // ambient dimension minus 2
  Z2LinearMap projection;  // quotient_dim x ambient; kernel inside the
                           // perpendicular is exactly <c>
};
CutCapForget cut_cap_forget_z2(const Z2Class& c);

// Action of the composite twist (first list entry applied first) restricted
// to the perpendicular of c and descended to the quotient. The composite must
// fix c and preserve its perpendicular.
Z2LinearMap induced_quotient_action(const std::vector<Z2Class>& twists,
                                    const Z2Class& c);

}  // namespace foldcalc::surface
