#include "foldcalc/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "foldcalc/error.hpp"

namespace foldcalc::surgery {

namespace {

// Parity of the orientation character on a word (exponent signs drop out).
bool reverses_orientation(const algebra::FpPresentation& p, const algebra::Word& w) {
  bool parity = false;
  for (const algebra::Letter& l : w) {
    if (l.gen < 0 || l.gen >= static_cast<int>(p.generators.size())) {
      fail("InvalidData", "loop uses a generator index outside the presentation");
    }
    parity ^= p.generators[l.gen].reverses_orientation;
  }
  return parity;
}

std::string fresh_generator_name(const algebra::FpPresentation& p) {
  for (int k = 1;; ++k) {
    const std::string candidate = "s" + std::to_string(k);
    if (p.generator_index(candidate) < 0) return candidate;
  }
}

// Canonical string for multiset comparison; injective on everything the
// summand semantics depend on (payload of standard kinds is ignored).
std::string sort_key(const Summand& s) {
  std::string key = to_string(s.kind);
  if (s.kind == SummandKind::Custom) {
    key += '|' + s.name + '|' + std::to_string(s.chi) + '|' +
           (s.orientable ? '1' : '0');
    for (const algebra::Generator& g : s.pi1.generators) {
      key += '|' + g.name + (g.reverses_orientation ? "-" : "+");
    }
    for (const algebra::Word& r : s.pi1.relators) {
      key += '/';
      for (const algebra::Letter& l : r) {
        key += std::to_string(l.gen) + (l.sign > 0 ? "." : ",");
      }
    }
  }
  return key;
}

Summand base_summand(CobordismClass c) {
  return Summand::standard(c == CobordismClass::RP4Like ? SummandKind::RP4
                                                        : SummandKind::S2xRP2);
}

}  // namespace

std::string to_string(SummandKind k) {
  switch (k) {
    case SummandKind::S4: return "S4";
    case SummandKind::CP2: return "CP2";
    case SummandKind::CP2bar: return "CP2bar";
    case SummandKind::S2xS2: return "S2xS2";
    case SummandKind::S1xS3: return "S1xS3";
    case SummandKind::S1xtS3: return "S1xtS3";
    case SummandKind::RP4: return "RP4";
    case SummandKind::S2xRP2: return "S2xRP2";
    case SummandKind::Custom: return "Custom";
  }
  fail("InvalidData", "unknown summand kind");
}

std::string to_string(RuleKind k) {
  switch (k) {
    case RuleKind::KillLoop: return "KillLoop";
    case RuleKind::LarsonI0: return "LarsonI0";
    case RuleKind::LarsonI1: return "LarsonI1";
    case RuleKind::Generic: return "Generic";
  }
  fail("InvalidData", "unknown rule kind");
}

Summand Summand::standard(SummandKind k) {
  if (k == SummandKind::Custom) {
    fail("InvalidData", "custom summands need an explicit certificate");
  }
  Summand s;
  s.kind = k;
  return s;
}

Summand Summand::custom(std::string name, int chi, algebra::FpPresentation pi1,
                        bool orientable) {
  pi1.check();
  Summand s;
  s.kind = SummandKind::Custom;
  s.name = std::move(name);
  s.chi = chi;
  s.pi1 = std::move(pi1);
  s.orientable = orientable;
  return s;
}

int Summand::euler_characteristic() const {
  switch (kind) {
    case SummandKind::S4: return 2;
    case SummandKind::CP2: return 3;
    case SummandKind::CP2bar: return 3;
    case SummandKind::S2xS2: return 4;
    case SummandKind::S1xS3: return 0;
    case SummandKind::S1xtS3: return 0;
    case SummandKind::RP4: return 1;
    case SummandKind::S2xRP2: return 2;
    case SummandKind::Custom: return chi;
  }
  fail("InvalidData", "unknown summand kind");
}

bool Summand::is_orientable() const {
  switch (kind) {
    case SummandKind::S1xtS3:
    case SummandKind::RP4:
    case SummandKind::S2xRP2: return false;
    case SummandKind::Custom: return orientable;
    default: return true;
  }
}

Summand from_kirby(const std::string& name, const kirby::HandleDecomposition& h) {
  const kirby::ManifoldInvariants inv = kirby::invariants(h);
  return Summand::custom(name, inv.euler_char, inv.pi1, inv.orientable);
}

int SumExpression::euler_characteristic() const {
  if (summands.empty()) return 2;  // the empty sum is the 4-sphere
  int total = 0;
  for (const Summand& s : summands) total += s.euler_characteristic();
  return total - 2 * (static_cast<int>(summands.size()) - 1);
}

bool SumExpression::orientable() const {
  return std::all_of(summands.begin(), summands.end(),
                     [](const Summand& s) { return s.is_orientable(); });
}

bool operator==(const SumExpression& a, const SumExpression& b) {
  std::vector<std::string> ka, kb;
  ka.reserve(a.summands.size());
  kb.reserve(b.summands.size());
  for (const Summand& s : a.summands) ka.push_back(sort_key(s));
  for (const Summand& s : b.summands) kb.push_back(sort_key(s));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

int count(const SumExpression& e, SummandKind k) {
  return static_cast<int>(std::count_if(e.summands.begin(), e.summands.end(),
                                        [&](const Summand& s) { return s.kind == k; }));
}

algebra::FpPresentation kill_loop(const algebra::FpPresentation& p,
                                  const algebra::Word& loop) {
  p.check();
  if (reverses_orientation(p, loop)) {
    fail("OrientationReversingLoop",
         "the loop reverses orientation, so its neighbourhood is not S1 x D3");
  }
  algebra::FpPresentation out = p;
  out.relators.push_back(algebra::cyclic_reduce(loop));
  out.generators.push_back({fresh_generator_name(p), false});
  return out;
}

SumExpression kill_loop(const SumExpression& e, const algebra::Word& loop) {
  SumExpression out = e;
  const auto it = std::find_if(out.summands.begin(), out.summands.end(),
                               [](const Summand& s) { return s.kind == SummandKind::Custom; });
  if (it == out.summands.end()) {
    fail("InvalidData", "no custom summand available to surger");
  }
  if (reverses_orientation(it->pi1, loop)) {
    fail("OrientationReversingLoop",
         "the loop reverses orientation, so its neighbourhood is not S1 x D3");
  }
  it->pi1.relators.push_back(algebra::cyclic_reduce(loop));
  it->chi += 2;
  out.summands.push_back(Summand::standard(SummandKind::S1xS3));
  return out;
}

SumExpression larson_rule(const SumExpression& e, LarsonVariant v) {
  SumExpression out = e;
  if (v == LarsonVariant::I0) {
    out.summands.push_back(Summand::standard(SummandKind::S2xS2));
  } else {
    out.summands.push_back(Summand::standard(SummandKind::CP2));
    out.summands.push_back(Summand::standard(SummandKind::CP2bar));
  }
  out.summands.push_back(Summand::standard(SummandKind::S1xS3));
  return out;
}

SumExpression replay_schedule(const ManifoldData& x, const SurgerySchedule& s) {
  x.pi1.check();
  if (!x.pi1.has_reversing_generator()) {
    fail("AlreadyOrientable", "standardization needs an orientation-reversing generator");
  }
  algebra::FpPresentation core = x.pi1;
  std::vector<Summand> exports;
  for (const SurgeryStep& step : s.steps) {
    switch (step.rule) {
      case RuleKind::KillLoop:
        if (reverses_orientation(core, step.loop)) {
          fail("OrientationReversingLoop",
               "scheduled loop reverses orientation: " + step.locus);
        }
        core.relators.push_back(algebra::cyclic_reduce(step.loop));
        exports.push_back(Summand::standard(SummandKind::S1xS3));
        break;
      case RuleKind::LarsonI0:
        exports.push_back(Summand::standard(SummandKind::S2xS2));
        exports.push_back(Summand::standard(SummandKind::S1xS3));
        break;
      case RuleKind::LarsonI1:
        exports.push_back(Summand::standard(SummandKind::CP2));
        exports.push_back(Summand::standard(SummandKind::CP2bar));
        exports.push_back(Summand::standard(SummandKind::S1xS3));
        break;
      case RuleKind::Generic:
        for (int i = 0; i < step.stabilization; ++i) {
          exports.push_back(Summand::standard(SummandKind::CP2));
        }
        break;
    }
  }
  SumExpression target;
  target.summands.push_back(base_summand(x.cobordism));
  target.summands.insert(target.summands.end(), exports.begin(), exports.end());
  return target;
}

StandardizeResult standardize(const ManifoldData& x) {
  x.pi1.check();
  if (!x.pi1.has_reversing_generator()) {
    fail("AlreadyOrientable", "standardization needs an orientation-reversing generator");
  }

  SurgerySchedule schedule;
  const auto kill = [&](const algebra::Word& loop, const std::string& locus) {
    SurgeryStep step;
    step.rule = RuleKind::KillLoop;
    step.locus = locus;
    step.loop = loop;
    schedule.steps.push_back(step);
  };

  // Null-homotopic loops: every orientation-preserving generator dies.
  int first_reversing = -1;
  for (int i = 0; i < static_cast<int>(x.pi1.generators.size()); ++i) {
    const algebra::Generator& g = x.pi1.generators[i];
    if (g.reverses_orientation) {
      if (first_reversing < 0) first_reversing = i;
      continue;
    }
    kill({{i, 1}}, "null-homotopic loop of generator '" + g.name + "'");
  }

  // Identify every further orientation-reversing generator with the first.
  for (int i = first_reversing + 1; i < static_cast<int>(x.pi1.generators.size()); ++i) {
    const algebra::Generator& g = x.pi1.generators[i];
    if (!g.reverses_orientation) continue;
    kill({{first_reversing, -1}, {i, 1}},
         "loop identifying generator '" + g.name + "' with '" +
             x.pi1.generators[first_reversing].name + "'");
  }

  // Kill the square of the surviving orientation-reversing generator unless
  // the presentation already lists that square as a relator.
  const algebra::Word square{{first_reversing, 1}, {first_reversing, 1}};
  const algebra::Word square_normal = algebra::normalize_cyclic(square);
  const bool already_relator =
      std::any_of(x.pi1.relators.begin(), x.pi1.relators.end(),
                  [&](const algebra::Word& r) {
                    return algebra::normalize_cyclic(r) == square_normal;
                  });
  if (!already_relator) {
    kill(square, "square of the orientation-reversing generator '" +
                     x.pi1.generators[first_reversing].name + "'");
  }

  // Ledger of the kills: each raises the core Euler characteristic by 2 and
  // splits off one S1xS3.
  algebra::FpPresentation core = x.pi1;
  int core_chi = x.chi;
  for (const SurgeryStep& step : schedule.steps) {
    core.relators.push_back(algebra::cyclic_reduce(step.loop));
    core_chi += 2;
  }

  const algebra::AbelianInvariants h1 = algebra::abelianization(core);
  if (h1.free_rank != 0 || h1.torsion != std::vector<algebra::Int>{2}) {
    fail("InvalidData", "surgered core must have first homology Z/2, got " +
                            algebra::to_string(h1));
  }

  SurgeryStep larson;
  larson.rule = RuleKind::LarsonI1;
  larson.locus = "unknotted torus in a standard 4-ball";
  schedule.steps.push_back(larson);

  const int base_chi = x.cobordism == CobordismClass::RP4Like ? 1 : 2;
  const int pad = core_chi - base_chi;
  if (pad < 0) {
    fail("InvalidData",
         "Euler characteristic too small for a core with finite fundamental group");
  }
  SurgeryStep stabilize;
  stabilize.rule = RuleKind::Generic;
  stabilize.locus = "stabilization by k copies of CP2 for sufficiently large k; "
                    "the Euler-characteristic ledger forces " +
                    std::to_string(pad) + " visible copies";
  stabilize.stabilization = pad;
  schedule.steps.push_back(stabilize);

  StandardizeResult r;
  r.schedule = schedule;
  r.target = replay_schedule(x, schedule);
  r.note = "the stabilization count is some k >= k0 with k0 not determined; "
           "only the " + std::to_string(pad) +
           " copies forced by the Euler characteristic are listed";
  return r;
}

SumExpression lickorish_wallace_form(const SumExpression& e) {
  if (e.orientable()) {
    fail("AlreadyOrientable",
         "the two complex projective planes only merge in a nonorientable sum");
  }
  SumExpression out = e;
  for (Summand& s : out.summands) {
    if (s.kind == SummandKind::CP2bar) s.kind = SummandKind::CP2;
  }
  return out;
}

}  // namespace foldcalc::surgery
