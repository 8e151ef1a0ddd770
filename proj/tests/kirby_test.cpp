#include <doctest.h>

#include <string>
#include <vector>

#include "foldcalc/algebra.hpp"
#include "foldcalc/kirby.hpp"
#include "test_util.hpp"

using namespace foldcalc::kirby;
using foldcalc::algebra::AbelianInvariants;
using foldcalc::algebra::Int;
using foldcalc::algebra::Word;
using foldcalc::testing::catalog_entries;
using foldcalc::testing::thrown_kind;

namespace {

bool satisfies_cover_hypothesis(const HandleDecomposition& h) {
  int twisted = 0;
  for (const OneHandle& oh : h.one_handles) twisted += oh.twisted ? 1 : 0;
  return h.zero_handles == 1 && twisted == 1;
}

}  // namespace

TEST_CASE("diagram validation") {
  HandleDecomposition h = catalog("K", {2});
  CHECK(thrown_kind([&] { h.check(); }).empty());
  CHECK(h.one_handle_index("b") == 1);
  CHECK(h.one_handle_index("zz") == -1);

  HandleDecomposition bad = h;
  bad.two_handles[0].framing_labels = {0};  // word crosses the twisted handle twice
  CHECK(thrown_kind([&] { bad.check(); }) == "InvalidData");
  bad = h;
  bad.two_handles[0].word[0].gen = 7;
  CHECK(thrown_kind([&] { bad.check(); }) == "InvalidData");
  bad = h;
  bad.zero_handles = 0;
  CHECK(thrown_kind([&] { bad.check(); }) == "InvalidData");
  bad = h;
  bad.one_handles[0].foot0 = 1;
  CHECK(thrown_kind([&] { bad.check(); }) == "InvalidData");
}

TEST_CASE("invariants: worked examples") {
  {
    const ManifoldInvariants inv = invariants(catalog("K", {3}));
    CHECK(inv.euler_char == 0);
    CHECK(inv.h1 == AbelianInvariants{0, {Int(2), Int(6)}});
    CHECK(inv.z2_betti == std::array<int, 5>{1, 2, 2, 2, 1});
    CHECK_FALSE(inv.orientable);
    CHECK(inv.pi1.generators.size() == 2);
    CHECK(inv.pi1.generators[0].name == "a");
    CHECK(inv.pi1.generators[0].reverses_orientation);
    CHECK_FALSE(inv.pi1.generators[1].reverses_orientation);
    CHECK(inv.pi1.relators ==
          std::vector<Word>{{{0, 1}, {1, 1}, {0, -1}, {1, 1}},
                            {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}});
  }
  {
    const ManifoldInvariants inv = invariants(catalog("RP4"));
    CHECK(inv.euler_char == 1);
    CHECK(inv.h1 == AbelianInvariants{0, {Int(2)}});
    CHECK(inv.z2_betti == std::array<int, 5>{1, 1, 1, 1, 1});
    CHECK_FALSE(inv.orientable);
  }
  {
    const ManifoldInvariants inv = invariants(catalog("N", {0}));
    CHECK(inv.euler_char == 2);
    CHECK(inv.h1 == AbelianInvariants{1, {}});
    CHECK(inv.z2_betti == std::array<int, 5>{1, 1, 2, 1, 1});
  }
  {
    const ManifoldInvariants inv = invariants(catalog("S1xtS3"));
    CHECK(inv.euler_char == 0);
    CHECK(inv.h1 == AbelianInvariants{1, {}});
    CHECK(inv.z2_betti == std::array<int, 5>{1, 1, 0, 1, 1});
    CHECK_FALSE(inv.orientable);
  }
  {
    const ManifoldInvariants inv = invariants(catalog("B", {5}));
    CHECK(inv.euler_char == 1);
    CHECK(inv.h1 == AbelianInvariants{0, {Int(5)}});
    CHECK(inv.orientable);
  }
  {
    const ManifoldInvariants inv = invariants(catalog("M", {2, 3}));
    CHECK(inv.euler_char == 4);
    CHECK(inv.h1 == AbelianInvariants{0, {Int(6)}});
    CHECK_FALSE(inv.orientable);
  }
  {
    // The m-fibration with no closing twists stays nonorientable: its
    // reversing generator survives (this is the mod-2 surjection witness).
    const ManifoldInvariants inv = invariants(catalog("X", {3}));
    CHECK(inv.euler_char == 6);
    CHECK(inv.h1 == AbelianInvariants{1, {}});
    CHECK_FALSE(inv.orientable);
  }
  {
    const ManifoldInvariants inv = invariants(catalog("sum", {3, 2}));
    CHECK(inv.euler_char == -2);
    CHECK(inv.h1 == AbelianInvariants{1, {Int(2), Int(2)}});
    CHECK_FALSE(inv.orientable);
  }
}

TEST_CASE("invariants reject impossible attaching words") {
  HandleDecomposition h;
  h.one_handles = {OneHandle{"t", true}};
  h.two_handles.push_back(TwoHandle{{{0, 1}}, {0}});
  CHECK(thrown_kind([&] { invariants(h); }) == "InvalidData");
}

TEST_CASE("double cover: structure of the lifted diagram") {
  const HandleDecomposition cover = double_cover(catalog("K", {2}));
  CHECK(cover.zero_handles == 2);
  REQUIRE(cover.one_handles.size() == 4);
  CHECK(cover.one_handles[0] == OneHandle{"a.1", true, 0, 1});
  CHECK(cover.one_handles[1] == OneHandle{"a.2", true, 1, 0});
  CHECK(cover.one_handles[2] == OneHandle{"b.1", false, 0, 0});
  CHECK(cover.one_handles[3] == OneHandle{"b.2", false, 1, 1});
  REQUIRE(cover.two_handles.size() == 4);
  // a b a^-1 b lifted from sheet 0: a.1 b.2 a.1^-1 b.1.
  CHECK(cover.two_handles[0].word == Word{{0, 1}, {3, 1}, {0, -1}, {2, 1}});
  CHECK(cover.two_handles[0].framing_labels == std::vector<int>{0, 0});
  // ... and from sheet 1: a.2 b.1 a.2^-1 b.2.
  CHECK(cover.two_handles[1].word == Word{{1, 1}, {2, 1}, {1, -1}, {3, 1}});
  // a^4 alternates lifts: (a.1 a.2)^2 and (a.2 a.1)^2.
  CHECK(cover.two_handles[2].word == Word{{0, 1}, {1, 1}, {0, 1}, {1, 1}});
  CHECK(cover.two_handles[3].word == Word{{1, 1}, {0, 1}, {1, 1}, {0, 1}});
  CHECK(cover.three_handles == ThreeHandles{4, 0});
  CHECK(cover.four_handles == 2);
  CHECK(cover.euler_characteristic() == 0);

  const ManifoldInvariants inv = invariants(cover);
  CHECK(inv.orientable);
  CHECK(inv.h1 == AbelianInvariants{1, {Int(2)}});  // circle times a lens space
}

TEST_CASE("double cover: framing labels alternate signs across lifted arcs") {
  HandleDecomposition h = catalog("RP4");
  h.two_handles[0].framing_labels = {3, 5};
  const HandleDecomposition cover = double_cover(h);
  CHECK(cover.two_handles[0].framing_labels == std::vector<int>{3, -5});
  CHECK(cover.two_handles[1].framing_labels == std::vector<int>{3, -5});
}

TEST_CASE("double cover: homology of lifted catalog diagrams") {
  CHECK(invariants(double_cover(catalog("K", {4}))).h1 ==
        AbelianInvariants{1, {Int(4)}});
  CHECK(invariants(double_cover(catalog("RP4#RP4"))).h1 == AbelianInvariants{1, {}});
  CHECK(invariants(double_cover(catalog("RP4"))).h1 == AbelianInvariants{0, {}});
  CHECK(invariants(double_cover(catalog("N", {3}))).h1 ==
        AbelianInvariants{0, {Int(3)}});
  CHECK(invariants(double_cover(catalog("R", {5}))).h1 ==
        AbelianInvariants{1, {Int(5)}});
  CHECK(invariants(double_cover(catalog("NxS2", {1}))).h1 == AbelianInvariants{0, {}});
  for (const auto& [name, params] : catalog_entries(5)) {
    const HandleDecomposition base = catalog(name, params);
    if (!satisfies_cover_hypothesis(base)) continue;
    const HandleDecomposition cover = double_cover(base);
    CHECK(cover.euler_characteristic() == 2 * base.euler_characteristic());
    CHECK(invariants(cover).orientable);
    CHECK(verify_double_cover(base, cover));
  }
}

TEST_CASE("double cover: hypothesis violations") {
  CHECK(thrown_kind([] { double_cover(catalog("B", {3})); }) ==
        "PropositionHypothesisViolated");
  CHECK(thrown_kind([] { double_cover(catalog("sum", {2, 1})); }) ==
        "PropositionHypothesisViolated");
  CHECK(thrown_kind([] { double_cover(double_cover(catalog("RP4"))); }) ==
        "PropositionHypothesisViolated");
  HandleDecomposition odd;
  odd.one_handles = {OneHandle{"t", true}};
  odd.two_handles.push_back(TwoHandle{{{0, 1}}, {0}});
  CHECK(thrown_kind([&] { double_cover(odd); }) == "PropositionHypothesisViolated");
}

TEST_CASE("verify_double_cover distinguishes mismatched pairs") {
  CHECK(verify_double_cover(catalog("K", {0}), double_cover(catalog("K", {0}))));
  CHECK_FALSE(verify_double_cover(catalog("K", {2}), double_cover(catalog("K", {3}))));
  CHECK_FALSE(verify_double_cover(catalog("RP4"), double_cover(catalog("RP4#RP4"))));
}

TEST_CASE("orientable blow-down") {
  HandleDecomposition h = catalog("K", {1});
  const int chi = h.euler_characteristic();
  h.two_handles.push_back(TwoHandle{{}, {1}});
  HandleDecomposition down = blow_down_orientable(h, 2);
  CHECK(down == catalog("K", {1}));
  CHECK(down.euler_characteristic() == chi);
  CHECK(h.euler_characteristic() == chi + 1);

  h.two_handles.back().framing_labels = {0};
  CHECK(thrown_kind([&] { blow_down_orientable(h, 2); }) == "PatternNotRecognized");
  CHECK(thrown_kind([&] { blow_down_orientable(catalog("RP4"), 0); }) ==
        "PatternNotRecognized");
  CHECK(thrown_kind([&] { blow_down_orientable(catalog("RP4"), 9); }) == "InvalidData");
}

TEST_CASE("nonorientable blow-down") {
  // Projective space loses its crosscap section and becomes the twisted
  // sphere bundle.
  const HandleDecomposition down = blow_down_nonorientable(catalog("RP4"), 0);
  CHECK(down == catalog("S1xtS3"));
  CHECK(invariants(down).h1 == AbelianInvariants{1, {}});

  // Both summands of the projective double, in either order.
  const HandleDecomposition pair = catalog("sum", {2, 2});
  const HandleDecomposition once = blow_down_nonorientable(pair, 0);
  const HandleDecomposition both = blow_down_nonorientable(once, 0);
  CHECK(both == catalog("sum", {2, 0}));
  CHECK(both.euler_characteristic() == -2);
  CHECK(invariants(both).h1 == AbelianInvariants{2, {}});
  CHECK(blow_down_nonorientable(blow_down_nonorientable(pair, 1), 0) == both);

  // Even framing, untwisted letter, and non-square words are rejected.
  HandleDecomposition even = catalog("RP4");
  even.two_handles[0].framing_labels = {0, 0};
  CHECK(thrown_kind([&] { blow_down_nonorientable(even, 0); }) ==
        "PatternNotRecognized");
  CHECK(thrown_kind([] { blow_down_nonorientable(catalog("B", {2}), 0); }) ==
        "PatternNotRecognized");
  CHECK(thrown_kind([] { blow_down_nonorientable(catalog("RP4#RP4"), 1); }) ==
        "PatternNotRecognized");
}

TEST_CASE("catalog: euler characteristics and parameter checking") {
  CHECK(catalog("K", {7}).euler_characteristic() == 0);
  CHECK(catalog("RP4").euler_characteristic() == 1);
  CHECK(catalog("S1xtS3").euler_characteristic() == 0);
  CHECK(catalog("RP4#RP4").euler_characteristic() == 0);
  CHECK(catalog("N", {9}).euler_characteristic() == 2);
  CHECK(catalog("Nprime", {9}).euler_characteristic() == 2);
  CHECK(catalog("M", {4, 9}).euler_characteristic() == 8);
  CHECK(catalog("X", {4}) == catalog("M", {4, 0}));
  CHECK(catalog("R", {3}).euler_characteristic() == 0);
  CHECK(catalog("B", {3}).euler_characteristic() == 1);
  CHECK(catalog("NxS2", {3}).euler_characteristic() == -2);
  CHECK(catalog("sum", {4, 3}).euler_characteristic() == -3);

  CHECK(thrown_kind([] { catalog("bogus"); }) == "UnknownName");
  CHECK(thrown_kind([] { catalog("K"); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("K", {-1}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("RP4", {1}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("M", {0, 0}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("R", {1}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("B", {0}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("NxS2", {0}); }) == "BadParams");
  CHECK(thrown_kind([] { catalog("sum", {1, 2}); }) == "BadParams");
  CHECK(catalog_names().size() == 12);
}

TEST_CASE("catalog diagrams satisfy the closed-manifold betti identities") {
  for (const auto& [name, params] : catalog_entries(5)) {
    if (name == "R" || name == "B") continue;  // bounded pieces, not closed
    const ManifoldInvariants inv = invariants(catalog(name, params));
    CHECK(inv.z2_betti[0] == 1);
    CHECK(inv.z2_betti[4] == 1);
    CHECK(inv.z2_betti[3] == inv.z2_betti[1]);
    const int alternating = inv.z2_betti[0] - inv.z2_betti[1] + inv.z2_betti[2] -
                            inv.z2_betti[3] + inv.z2_betti[4];
    CHECK(alternating == inv.euler_char);
    CHECK(inv.z2_betti[2] >= 0);
  }
}
