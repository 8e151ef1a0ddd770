#include "foldcalc/kirby.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <utility>

#include "foldcalc/error.hpp"

namespace foldcalc::kirby {

using algebra::Letter;
using algebra::Word;

namespace {

int twisted_traversals(const HandleDecomposition& h, const Word& w) {
  int count = 0;
  for (const Letter& l : w) {
    if (h.one_handles[static_cast<std::size_t>(l.gen)].twisted) ++count;
  }
  return count;
}

Word word_power(int gen, int exponent) {
  Word w;
  const int count = exponent < 0 ? -exponent : exponent;
  const int sign = exponent < 0 ? -1 : 1;
  for (int i = 0; i < count; ++i) w.push_back(Letter{gen, sign});
  return w;
}

std::vector<int> zeros(int count) { return std::vector<int>(static_cast<std::size_t>(count), 0); }

// Framing list for a word crossing `traversals` twisted arcs: one label per
// arc, or a single label when there are none.
std::vector<int> flat_framings(int traversals) {
  return traversals == 0 ? std::vector<int>{0} : zeros(traversals);
}

}  // namespace

int HandleDecomposition::euler_characteristic() const {
  return zero_handles - static_cast<int>(one_handles.size()) +
         static_cast<int>(two_handles.size()) - three_handles.total() + four_handles;
}

int HandleDecomposition::one_handle_index(const std::string& name) const {
  for (std::size_t i = 0; i < one_handles.size(); ++i) {
    if (one_handles[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void HandleDecomposition::check() const {
  if (zero_handles < 1) fail("InvalidData", "a diagram needs at least one 0-handle");
  if (three_handles.untwisted < 0 || three_handles.twisted < 0 || four_handles < 0) {
    fail("InvalidData", "handle counts must be nonnegative");
  }
  for (const OneHandle& oh : one_handles) {
    if (oh.foot0 < 0 || oh.foot0 >= zero_handles || oh.foot1 < 0 ||
        oh.foot1 >= zero_handles) {
      fail("InvalidData", "1-handle foot references a missing 0-handle");
    }
  }
  for (const TwoHandle& th : two_handles) {
    for (const Letter& l : th.word) {
      if (l.gen < 0 || l.gen >= static_cast<int>(one_handles.size())) {
        fail("InvalidData", "2-handle word references a missing 1-handle");
      }
      if (l.sign != 1 && l.sign != -1) {
        fail("InvalidData", "2-handle word letter sign must be +1 or -1");
      }
    }
    const int arcs = twisted_traversals(*this, th.word);
    const std::size_t expected = arcs == 0 ? 1 : static_cast<std::size_t>(arcs);
    if (th.framing_labels.size() != expected) {
      fail("InvalidData",
           "framing labels must carry one entry per twisted arc (or exactly one "
           "when the word avoids twisted handles)");
    }
  }
}

ManifoldInvariants invariants(const HandleDecomposition& h) {
  h.check();

  // Contract a spanning tree of the (0-handle, 1-handle) graph. Each vertex
  // gets the parity of twisted tree edges on its root path; a surviving
  // 1-handle reverses orientation iff its own twist and both foot parities
  // combine to an odd total.
  const int vertices = h.zero_handles;
  std::vector<int> parity(static_cast<std::size_t>(vertices), -1);
  std::vector<char> in_tree(h.one_handles.size(), 0);
  parity[0] = 0;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop_front();
    for (std::size_t e = 0; e < h.one_handles.size(); ++e) {
      const OneHandle& oh = h.one_handles[e];
      int other = -1;
      if (oh.foot0 == v && parity[static_cast<std::size_t>(oh.foot1)] < 0) {
        other = oh.foot1;
      } else if (oh.foot1 == v && parity[static_cast<std::size_t>(oh.foot0)] < 0) {
        other = oh.foot0;
      }
      if (other < 0) continue;
      in_tree[e] = 1;
      parity[static_cast<std::size_t>(other)] =
          parity[static_cast<std::size_t>(v)] ^ (oh.twisted ? 1 : 0);
      frontier.push_back(other);
    }
  }
  for (int v = 0; v < vertices; ++v) {
    if (parity[static_cast<std::size_t>(v)] < 0) {
      fail("InvalidData", "diagram is disconnected");
    }
  }

  algebra::FpPresentation pi1;
  std::vector<int> gen_of_handle(h.one_handles.size(), -1);
  for (std::size_t e = 0; e < h.one_handles.size(); ++e) {
    if (in_tree[e]) continue;
    const OneHandle& oh = h.one_handles[e];
    const bool reverses = (oh.twisted ? 1 : 0) ^
                          parity[static_cast<std::size_t>(oh.foot0)] ^
                          parity[static_cast<std::size_t>(oh.foot1)];
    gen_of_handle[e] = static_cast<int>(pi1.generators.size());
    pi1.generators.push_back(algebra::Generator{oh.name, reverses});
  }
  for (const TwoHandle& th : h.two_handles) {
    Word rel;
    for (const Letter& l : th.word) {
      const int g = gen_of_handle[static_cast<std::size_t>(l.gen)];
      if (g >= 0) rel.push_back(Letter{g, l.sign});
    }
    rel = algebra::cyclic_reduce(std::move(rel));
    int rev_parity = 0;
    for (const Letter& l : rel) {
      if (pi1.generators[static_cast<std::size_t>(l.gen)].reverses_orientation) {
        rev_parity ^= 1;
      }
    }
    if (rev_parity != 0) {
      fail("InvalidData",
           "2-handle attaches along an orientation-reversing loop; no such "
           "closed diagram exists");
    }
    pi1.relators.push_back(std::move(rel));
  }

  ManifoldInvariants out;
  out.euler_char = h.euler_characteristic();
  out.orientable = !pi1.has_reversing_generator();
  out.h1 = algebra::abelianization(pi1);
  const int b1 = algebra::z2_first_betti(pi1);
  const int b2 = out.euler_char - 2 + 2 * b1;
  out.z2_betti = {1, b1, b2, b1, 1};
  out.pi1 = std::move(pi1);
  return out;
}

HandleDecomposition double_cover(const HandleDecomposition& h) {
  h.check();
  if (h.zero_handles != 1) {
    fail("PropositionHypothesisViolated",
         "the covering construction expects exactly one 0-handle");
  }
  int twisted_index = -1;
  for (std::size_t e = 0; e < h.one_handles.size(); ++e) {
    if (!h.one_handles[e].twisted) continue;
    if (twisted_index >= 0) {
      fail("PropositionHypothesisViolated",
           "the covering construction expects exactly one twisted 1-handle");
    }
    twisted_index = static_cast<int>(e);
  }
  if (twisted_index < 0) {
    fail("PropositionHypothesisViolated",
         "the covering construction expects exactly one twisted 1-handle");
  }
  for (const TwoHandle& th : h.two_handles) {
    if (twisted_traversals(h, th.word) % 2 != 0) {
      fail("PropositionHypothesisViolated",
           "2-handle word crosses the twisted handle an odd number of times");
    }
  }

  HandleDecomposition cover;
  cover.zero_handles = 2;
  // copies[e] = indices of the sheet-0 and sheet-1 lifts of handle e. For the
  // twisted handle the two entries are its two sheet-joining lifts, indexed by
  // the sheet a forward traversal starts from.
  std::vector<std::array<int, 2>> copies(h.one_handles.size());
  for (std::size_t e = 0; e < h.one_handles.size(); ++e) {
    const OneHandle& oh = h.one_handles[e];
    const bool lifted = static_cast<int>(e) == twisted_index;
    for (int sheet = 0; sheet < 2; ++sheet) {
      copies[e][static_cast<std::size_t>(sheet)] =
          static_cast<int>(cover.one_handles.size());
      OneHandle copy;
      copy.name = oh.name + (sheet == 0 ? ".1" : ".2");
      copy.twisted = lifted;
      copy.foot0 = sheet;
      copy.foot1 = lifted ? 1 - sheet : sheet;
      cover.one_handles.push_back(std::move(copy));
    }
  }

  for (const TwoHandle& th : h.two_handles) {
    for (int start = 0; start < 2; ++start) {
      TwoHandle lift;
      int sheet = start;
      for (const Letter& l : th.word) {
        if (l.gen != twisted_index) {
          lift.word.push_back(
              Letter{copies[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(sheet)],
                     l.sign});
          continue;
        }
        // Forward traversal from this sheet uses the lift starting here; a
        // backward traversal uses the lift that ends here. Either way the
        // sheet flips.
        const int use = l.sign > 0 ? sheet : 1 - sheet;
        lift.word.push_back(
            Letter{copies[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(use)],
                   l.sign});
        sheet = 1 - sheet;
      }
      lift.framing_labels.reserve(th.framing_labels.size());
      int sign = 1;
      for (const int label : th.framing_labels) {
        lift.framing_labels.push_back(sign * label);
        sign = -sign;
      }
      cover.two_handles.push_back(std::move(lift));
    }
  }

  cover.three_handles = ThreeHandles{2 * h.three_handles.total(), 0};
  cover.four_handles = 2 * h.four_handles;
  return cover;
}

bool verify_double_cover(const HandleDecomposition& base,
                         const HandleDecomposition& cover) {
  const ManifoldInvariants base_inv = invariants(base);
  const ManifoldInvariants cover_inv = invariants(cover);
  const algebra::AbelianInvariants expected =
      algebra::abelianization(algebra::index2_subgroup(base_inv.pi1));
  return cover_inv.h1 == expected &&
         cover_inv.euler_char == 2 * base_inv.euler_char;
}

HandleDecomposition blow_down_orientable(HandleDecomposition h, int index) {
  h.check();
  if (index < 0 || index >= static_cast<int>(h.two_handles.size())) {
    fail("InvalidData", "2-handle index out of range");
  }
  const TwoHandle& th = h.two_handles[static_cast<std::size_t>(index)];
  const bool unit_framing =
      th.framing_labels.size() == 1 &&
      (th.framing_labels[0] == 1 || th.framing_labels[0] == -1);
  if (!th.word.empty() || !unit_framing) {
    fail("PatternNotRecognized",
         "blow-down needs a split unknot with framing label +1 or -1");
  }
  h.two_handles.erase(h.two_handles.begin() + index);
  return h;
}

HandleDecomposition blow_down_nonorientable(HandleDecomposition h, int index) {
  h.check();
  if (index < 0 || index >= static_cast<int>(h.two_handles.size())) {
    fail("InvalidData", "2-handle index out of range");
  }
  const TwoHandle& th = h.two_handles[static_cast<std::size_t>(index)];
  const bool is_square = th.word.size() == 2 && th.word[0] == th.word[1];
  const bool twisted_letter =
      is_square && h.one_handles[static_cast<std::size_t>(th.word[0].gen)].twisted;
  int framing_sum = 0;
  for (const int f : th.framing_labels) framing_sum += f;
  if (!is_square || !twisted_letter || framing_sum % 2 == 0) {
    fail("PatternNotRecognized",
         "blow-down needs the square of a twisted letter with odd framing");
  }
  h.two_handles.erase(h.two_handles.begin() + index);
  return h;
}

namespace {

void require_params(const std::string& name, const std::vector<int>& params,
                    std::size_t count) {
  if (params.size() != count) {
    fail("BadParams", "catalog entry '" + name + "' takes " +
                          std::to_string(count) + " parameter(s)");
  }
}

HandleDecomposition klein_bundle(int n) {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"a", true}, OneHandle{"b", false}};
  h.two_handles.push_back(
      TwoHandle{{{0, 1}, {1, 1}, {0, -1}, {1, 1}}, {0, 0}});
  h.two_handles.push_back(TwoHandle{word_power(0, 2 * n), flat_framings(2 * n)});
  h.three_handles = {2, 0};
  h.four_handles = 1;
  return h;
}

HandleDecomposition projective_space() {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"t", true}};
  h.two_handles.push_back(TwoHandle{word_power(0, 2), {1, 0}});
  h.three_handles = {0, 1};
  h.four_handles = 1;
  return h;
}

HandleDecomposition twisted_s3_bundle() {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"t", true}};
  h.three_handles = {0, 1};
  h.four_handles = 1;
  return h;
}

HandleDecomposition projective_double() {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"a", true}, OneHandle{"b", false}};
  h.two_handles.push_back(TwoHandle{word_power(0, 2), {1, 0}});
  h.two_handles.push_back(
      TwoHandle{{{0, 1}, {1, 1}, {0, -1}, {1, 1}}, {0, 0}});
  h.three_handles = {0, 2};
  h.four_handles = 1;
  return h;
}

HandleDecomposition fold_only_bundle(int n, int parity) {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"a", true}, OneHandle{"b", false}};
  h.two_handles.push_back(
      TwoHandle{{{0, 1}, {1, 1}, {0, -1}, {1, 1}}, {0, 0}});
  h.two_handles.push_back(TwoHandle{{{1, 1}}, {0}});
  std::vector<int> closing = flat_framings(2 * n);
  closing[0] = parity;
  h.two_handles.push_back(TwoHandle{word_power(0, 2 * n), std::move(closing)});
  h.three_handles = {0, 1};
  h.four_handles = 1;
  return h;
}

HandleDecomposition genus_two_fibration(int m, int n) {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"a", true}, OneHandle{"b", false}};
  h.two_handles.push_back(
      TwoHandle{{{0, 1}, {1, 1}, {0, -1}, {1, 1}}, {0, 0}});
  for (int i = 0; i < 2 * m; ++i) {
    h.two_handles.push_back(TwoHandle{{{1, 1}}, {-1}});
  }
  h.two_handles.push_back(TwoHandle{word_power(0, 2 * n), flat_framings(2 * n)});
  h.three_handles = {2, 0};
  h.four_handles = 1;
  return h;
}

HandleDecomposition rational_ball_double(int n) {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"t", true}, OneHandle{"u", false}};
  Word w = word_power(0, 2);
  const Word tail = word_power(1, n);
  w.insert(w.end(), tail.begin(), tail.end());
  h.two_handles.push_back(TwoHandle{std::move(w), {0, 0}});
  return h;
}

HandleDecomposition rational_ball(int n) {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"x", false}};
  h.two_handles.push_back(TwoHandle{word_power(0, n), {n - 1}});
  return h;
}

HandleDecomposition surface_times_sphere(int g) {
  HandleDecomposition h;
  Word fiber;
  for (int i = 0; i < g; ++i) {
    h.one_handles.push_back(OneHandle{"x" + std::to_string(i + 1), true});
    fiber.push_back(Letter{i, 1});
    fiber.push_back(Letter{i, 1});
  }
  h.two_handles.push_back(TwoHandle{std::move(fiber), zeros(2 * g)});
  h.two_handles.push_back(TwoHandle{{}, {0}});
  h.three_handles = {g, 0};
  h.four_handles = 1;
  return h;
}

HandleDecomposition twisted_sum(int g, int k) {
  HandleDecomposition h;
  for (int i = 0; i < g; ++i) {
    h.one_handles.push_back(OneHandle{"t" + std::to_string(i + 1), true});
  }
  for (int i = 0; i < k; ++i) {
    h.two_handles.push_back(TwoHandle{word_power(i, 2), {1, 0}});
  }
  h.three_handles = {0, g};
  h.four_handles = 1;
  return h;
}

}  // namespace

HandleDecomposition catalog(const std::string& name, const std::vector<int>& params) {
  auto bad = [&](const std::string& why) {
    fail("BadParams", "catalog entry '" + name + "': " + why);
  };
  if (name == "K") {
    require_params(name, params, 1);
    if (params[0] < 0) bad("n must be >= 0");
    return klein_bundle(params[0]);
  }
  if (name == "RP4") {
    require_params(name, params, 0);
    return projective_space();
  }
  if (name == "S1xtS3") {
    require_params(name, params, 0);
    return twisted_s3_bundle();
  }
  if (name == "RP4#RP4") {
    require_params(name, params, 0);
    return projective_double();
  }
  if (name == "N" || name == "Nprime") {
    require_params(name, params, 1);
    if (params[0] < 0) bad("n must be >= 0");
    return fold_only_bundle(params[0], name == "N" ? 0 : 1);
  }
  if (name == "M") {
    require_params(name, params, 2);
    if (params[0] < 1) bad("m must be >= 1");
    if (params[1] < 0) bad("n must be >= 0");
    return genus_two_fibration(params[0], params[1]);
  }
  if (name == "X") {
    require_params(name, params, 1);
    if (params[0] < 1) bad("m must be >= 1");
    return genus_two_fibration(params[0], 0);
  }
  if (name == "R") {
    require_params(name, params, 1);
    if (params[0] < 2) bad("n must be >= 2");
    return rational_ball_double(params[0]);
  }
  if (name == "B") {
    require_params(name, params, 1);
    if (params[0] < 1) bad("n must be >= 1");
    return rational_ball(params[0]);
  }
  if (name == "NxS2") {
    require_params(name, params, 1);
    if (params[0] < 1) bad("g must be >= 1");
    return surface_times_sphere(params[0]);
  }
  if (name == "sum") {
    require_params(name, params, 2);
    if (params[0] < 1) bad("g must be >= 1");
    if (params[1] < 0 || params[1] > params[0]) bad("k must satisfy 0 <= k <= g");
    return twisted_sum(params[0], params[1]);
  }
  fail("UnknownName", "no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"K", "RP4", "S1xtS3", "RP4#RP4", "N",    "Nprime",
          "M", "X",   "R",      "B",       "NxS2", "sum"};
}

}  // namespace foldcalc::kirby
