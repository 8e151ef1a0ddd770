#ifndef FOLDCALC_SURGERY_HPP
#define FOLDCALC_SURGERY_HPP

#include <string>
#include <vector>

#include "foldcalc/algebra.hpp"
#include "foldcalc/kirby.hpp"

namespace foldcalc::surgery {

// Alphabet of connected-sum pieces. Custom carries its own certificate
// (Euler characteristic, fundamental-group presentation, orientability);
// the payload fields are ignored for the standard kinds.
enum class SummandKind { S4, CP2, CP2bar, S2xS2, S1xS3, S1xtS3, RP4, S2xRP2, Custom };

std::string to_string(SummandKind k);

struct Summand {
  SummandKind kind = SummandKind::S4;
  std::string name;  // Custom only
  int chi = 0;       // Custom only
  algebra::FpPresentation pi1;  // Custom only
  bool orientable = true;       // Custom only

  static Summand standard(SummandKind k);
  static Summand custom(std::string name, int chi, algebra::FpPresentation pi1,
                        bool orientable);

  int euler_characteristic() const;
  bool is_orientable() const;

  friend bool operator==(const Summand&, const Summand&) = default;
};

// Custom summand from a handle decomposition (catalog entries and friends).
Summand from_kirby(const std::string& name, const kirby::HandleDecomposition& h);

// Formal connected sum over the summand alphabet; the empty sum is the
// 4-sphere. Summand order never matters: equality is multiset equality.
struct SumExpression {
  std::vector<Summand> summands;

  // 2 for the empty sum, otherwise sum of summand values minus 2(count - 1).
  int euler_characteristic() const;
  bool orientable() const;

  friend bool operator==(const SumExpression& a, const SumExpression& b);
};

int count(const SumExpression& e, SummandKind k);

// Surgery on a null-homotopic orientation-preserving loop: the group gains
// the loop as a relator plus one fresh free generator (named s1, s2, ...
// avoiding collisions). The loop must have even total orientation-reversing
// parity; otherwise its neighbourhood is a twisted S1 x D3 and the move does
// not apply (OrientationReversingLoop).
algebra::FpPresentation kill_loop(const algebra::FpPresentation& p,
                                  const algebra::Word& loop);

// The same surgery performed inside the first Custom summand (InvalidData
// when there is none): that summand's group gains the relator, its Euler
// characteristic rises by 2, and one S1xS3 summand splits off carrying the
// fresh free generator; the expression-level Euler characteristic is
// unchanged.
SumExpression kill_loop(const SumExpression& e, const algebra::Word& loop);

enum class LarsonVariant { I0, I1 };

// Zero-framed surgery on an unknotted torus inside a small 4-ball of any
// summand: variant I0 splits off { S2xS2, S1xS3 }, variant I1 splits off
// { CP2, CP2bar, S1xS3 }. Both leave the expression-level Euler
// characteristic unchanged.
SumExpression larson_rule(const SumExpression& e, LarsonVariant v);

enum class RuleKind { KillLoop, LarsonI0, LarsonI1, Generic };

std::string to_string(RuleKind k);

// One step of a surgery schedule. `loop` is meaningful for KillLoop steps;
// `stabilization` records how many visible CP2 copies a Generic
// stabilization step contributes.
struct SurgeryStep {
  RuleKind rule = RuleKind::Generic;
  std::string locus;  // human-readable placement note; tori are assumed
                      // disjoint, which is flagged but not verified
  algebra::Word loop;
  int stabilization = 0;

  friend bool operator==(const SurgeryStep&, const SurgeryStep&) = default;
};

struct SurgerySchedule {
  std::vector<SurgeryStep> steps;

  friend bool operator==(const SurgerySchedule&, const SurgerySchedule&) = default;
};

// Unoriented cobordism type of the input, passed through as a flag because
// it is determined by characteristic numbers this library does not compute.
enum class CobordismClass { S2xRP2Like, RP4Like };

// Certificate of a closed connected nonorientable 4-manifold: fundamental
// group with orientation character, Euler characteristic, cobordism type.
struct ManifoldData {
  algebra::FpPresentation pi1;
  int chi = 0;
  CobordismClass cobordism = CobordismClass::S2xRP2Like;
};

struct StandardizeResult {
  SumExpression target;
  SurgerySchedule schedule;
  std::string note;  // symbolic stabilization disclaimer (count not bounded)
};

// Rewrites the manifold as surgery on a standard connected sum: kills every
// orientation-preserving generator, identifies all orientation-reversing
// generators with the first one, kills the square of the survivor (skipped
// when that square is already a listed relator), checks the surgered core
// has first homology Z/2, applies the I1 torus rule once, and pads with the
// CP2 copies forced by the Euler-characteristic ledger (the true
// stabilization count is only known to be some k at least this large).
// Target shape: one of S2xRP2 / RP4 (by cobordism class) plus copies of
// S1xS3, CP2 and one CP2bar. Errors: AlreadyOrientable when no generator
// reverses orientation; InvalidData when the core homology or the Euler
// characteristic is inconsistent with the certificate.
StandardizeResult standardize(const ManifoldData& x);

// Re-executes a schedule against the input certificate; standardize(x)
// satisfies replay_schedule(x, schedule) == target exactly.
SumExpression replay_schedule(const ManifoldData& x, const SurgerySchedule& s);

// For nonorientable expressions the two complex-projective-plane summands
// are diffeomorphic, so every CP2bar may be rewritten as CP2; errors with
// AlreadyOrientable otherwise.
SumExpression lickorish_wallace_form(const SumExpression& e);

}  // namespace foldcalc::surgery

#endif  // FOLDCALC_SURGERY_HPP
