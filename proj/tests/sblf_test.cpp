#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "foldcalc/kirby.hpp"
#include "foldcalc/sblf.hpp"
#include "foldcalc/surface.hpp"
#include "test_util.hpp"

using namespace foldcalc;
using foldcalc::testing::thrown_kind;

namespace {

const surface::SurfaceModel kKb{false, 2};
const surface::SurfaceModel kN4{false, 4};
const surface::SurfaceModel kN6{false, 6};
const surface::SurfaceModel kSphere{true, 0};
const surface::SurfaceModel kTorus{true, 1};

// The unique two-sided essential class on the Klein bottle, as a curve word.
const algebra::Word kGamma{{0, 1}, {1, 1}};

surface::CurveWord cw(const surface::SurfaceModel& s, algebra::Word w) {
  return {s, std::move(w)};
}

sblf::SblfData bundle(int n = 0, int parity = 0) {
  return {kKb, std::nullopt, {}, std::nullopt, n, parity};
}

sblf::SblfData fold_only(int n, int parity) {
  return {kKb, cw(kKb, kGamma), {}, kSphere, n, parity};
}

sblf::SblfData fibration(int m, int n) {
  std::vector<surface::CurveWord> cycles(2 * static_cast<std::size_t>(m),
                                         cw(kKb, kGamma));
  return {kKb, std::nullopt, std::move(cycles), std::nullopt, n, 0};
}

}  // namespace

TEST_CASE("monodromy data structural validity") {
  CHECK_NOTHROW(bundle().check());
  CHECK_NOTHROW(fold_only(3, 1).check());
  CHECK_NOTHROW(fibration(2, 1).check());

  SUBCASE("fiber must be nonorientable of even genus") {
    sblf::SblfData odd = bundle();
    odd.fiber = {false, 3};
    CHECK(thrown_kind([&] { odd.check(); }) == "InvalidData");
    sblf::SblfData orient = bundle();
    orient.fiber = {true, 2};
    CHECK(thrown_kind([&] { orient.check(); }) == "InvalidData");
  }
  SUBCASE("fold and lower fiber travel together") {
    sblf::SblfData no_lower = fold_only(0, 0);
    no_lower.lower_fiber.reset();
    CHECK(thrown_kind([&] { no_lower.check(); }) == "InvalidData");
    sblf::SblfData stray = bundle();
    stray.lower_fiber = kSphere;
    CHECK(thrown_kind([&] { stray.check(); }) == "InvalidData");
    sblf::SblfData wrong_chi{kN4, cw(kN4, kGamma), {}, kSphere, 0, 0};
    CHECK(thrown_kind([&] { wrong_chi.check(); }) == "InvalidData");
  }
  SUBCASE("words must live on the fiber") {
    sblf::SblfData mismatch = bundle();
    mismatch.lefschetz_cycles.push_back(cw(kN4, kGamma));
    CHECK(thrown_kind([&] { mismatch.check(); }) == "SurfaceMismatch");
  }
  SUBCASE("parameter ranges") {
    sblf::SblfData neg = bundle();
    neg.gluing_parameter = -1;
    CHECK(thrown_kind([&] { neg.check(); }) == "InvalidData");
    sblf::SblfData parity = bundle();
    parity.framing_parity = 2;
    CHECK(thrown_kind([&] { parity.check(); }) == "InvalidData");
  }
}

TEST_CASE("certification worked examples") {
  SUBCASE("genus-two data certifies exactly") {
    for (const sblf::SblfData& d :
         {bundle(), fold_only(0, 0), fold_only(4, 1), fibration(2, 3)}) {
      const sblf::CertificationReport rep = sblf::validate(d);
      CHECK(rep.cycles_two_sided);
      CHECK(rep.fold_nonseparating);
      CHECK(rep.composite_fixes_fold);
      CHECK(rep.quotient_action_trivial);
      CHECK(rep.genus_two_exact);
      CHECK(rep.level == sblf::CertLevel::PassExact);
    }
  }
  SUBCASE("odd cycle count fails the genus-two condition") {
    sblf::SblfData d = bundle();
    d.lefschetz_cycles.push_back(cw(kKb, kGamma));
    const sblf::CertificationReport rep = sblf::validate(d);
    CHECK(rep.cycles_two_sided);
    CHECK_FALSE(rep.genus_two_exact);
    CHECK(rep.level == sblf::CertLevel::Fail);
  }
  SUBCASE("one-sided cycle fails") {
    sblf::SblfData d = fibration(1, 0);
    d.lefschetz_cycles.push_back(cw(kKb, {{0, 1}}));
    d.lefschetz_cycles.push_back(cw(kKb, kGamma));
    const sblf::CertificationReport rep = sblf::validate(d);
    CHECK_FALSE(rep.cycles_two_sided);
    CHECK(rep.level == sblf::CertLevel::Fail);
  }
  SUBCASE("null-homologous fold fails") {
    sblf::SblfData d{kN4, cw(kN4, {{0, 1}, {0, 1}}), {}, surface::SurfaceModel{false, 2}, 0, 0};
    const sblf::CertificationReport rep = sblf::validate(d);
    CHECK_FALSE(rep.fold_nonseparating);
    CHECK(rep.level == sblf::CertLevel::Fail);
  }
  SUBCASE("higher genus passes at the necessary level") {
    sblf::SblfData d{kN4, cw(kN4, kGamma), {}, surface::SurfaceModel{false, 2}, 2, 0};
    const sblf::CertificationReport rep = sblf::validate(d);
    CHECK(rep.level == sblf::CertLevel::PassNecessary);
    CHECK(sblf::to_string(rep.level) == "PASS-necessary");
  }
  SUBCASE("twist moving the quotient is caught, and its square is not") {
    const algebra::Word far_pair{{2, 1}, {3, 1}};
    sblf::SblfData d{kN4, cw(kN4, kGamma), {cw(kN4, far_pair)},
                     surface::SurfaceModel{false, 2}, 0, 0};
    sblf::CertificationReport rep = sblf::validate(d);
    CHECK(rep.composite_fixes_fold);
    CHECK_FALSE(rep.quotient_action_trivial);
    CHECK(rep.level == sblf::CertLevel::Fail);

    d.lefschetz_cycles.push_back(cw(kN4, far_pair));
    rep = sblf::validate(d);
    CHECK(rep.quotient_action_trivial);
    CHECK(rep.level == sblf::CertLevel::PassNecessary);
  }
  SUBCASE("level names") {
    CHECK(sblf::to_string(sblf::CertLevel::PassExact) == "PASS-exact");
    CHECK(sblf::to_string(sblf::CertLevel::Fail) == "FAIL");
  }
}

TEST_CASE("genus-two builder reproduces the catalog diagrams") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(sblf::build_kirby(bundle(n)) == kirby::catalog("K", {n}));
    CHECK(sblf::build_kirby(fold_only(n, 0)) == kirby::catalog("N", {n}));
    CHECK(sblf::build_kirby(fold_only(n, 1)) == kirby::catalog("Nprime", {n}));
  }
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      CHECK(sblf::build_kirby(fibration(m, n)) == kirby::catalog("M", {m, n}));
    }
  }
}

TEST_CASE("genus-two loop dictionary") {
  // An inverse spelling of the standard two-sided curve lands on the same
  // loop, up to cyclic reduction.
  sblf::SblfData d = bundle();
  d.lefschetz_cycles.push_back(cw(kKb, {{1, -1}, {0, -1}}));
  d.lefschetz_cycles.push_back(cw(kKb, kGamma));
  const kirby::HandleDecomposition h = sblf::build_kirby(d);
  REQUIRE(h.two_handles.size() == 4);
  CHECK(h.two_handles[0].word == algebra::Word{{0, 1}, {1, 1}, {0, -1}, {1, 1}});
  CHECK(h.two_handles[1].word == algebra::Word{{1, -1}});
  CHECK(h.two_handles[1].framing_labels == std::vector<int>{-1});
  CHECK(h.two_handles[2].word == algebra::Word{{1, 1}});
}

TEST_CASE("higher-genus builder") {
  SUBCASE("honest fibration over the sphere") {
    sblf::SblfData d{kN4, std::nullopt, {cw(kN4, kGamma)}, std::nullopt, 7, 1};
    const kirby::HandleDecomposition h = sblf::build_kirby(d);

    kirby::HandleDecomposition expected;
    expected.one_handles = {{"a1", true, 0, 0},
                            {"a2", true, 0, 0},
                            {"a3", true, 0, 0},
                            {"a4", true, 0, 0}};
    expected.two_handles.push_back(
        {{{0, 1}, {0, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {3, 1}},
         std::vector<int>(8, 0)});
    expected.two_handles.push_back({algebra::Word{{0, 1}, {1, 1}}, {-1, 0}});
    expected.two_handles.push_back({algebra::Word{}, {1}});
    expected.three_handles = {4, 0};
    expected.four_handles = 1;
    CHECK(h == expected);
    CHECK(kirby::invariants(h).euler_char == sblf::sblf_euler_char(d));
  }
  SUBCASE("fold three-handle twisting follows lower-fiber orientability") {
    sblf::SblfData over_nonor{kN4, cw(kN4, kGamma), {},
                              surface::SurfaceModel{false, 2}, 0, 0};
    const kirby::HandleDecomposition hn = sblf::build_kirby(over_nonor);
    CHECK(hn.three_handles == kirby::ThreeHandles{3, 0});

    sblf::SblfData over_torus{kN4, cw(kN4, kGamma), {}, kTorus, 0, 0};
    const kirby::HandleDecomposition ht = sblf::build_kirby(over_torus);
    CHECK(ht.three_handles == kirby::ThreeHandles{2, 1});

    CHECK(kirby::invariants(hn).euler_char == kirby::invariants(ht).euler_char);
    CHECK(kirby::invariants(hn).euler_char == sblf::sblf_euler_char(over_nonor));
  }
  SUBCASE("regluing power is invisible above genus two") {
    sblf::SblfData a{kN6, std::nullopt, {}, std::nullopt, 0, 0};
    sblf::SblfData b = a;
    b.gluing_parameter = 9;
    CHECK(sblf::build_kirby(a) == sblf::build_kirby(b));
  }
}

TEST_CASE("builder rejects uncertified or malformed data") {
  sblf::SblfData odd = bundle();
  odd.lefschetz_cycles.push_back(cw(kKb, kGamma));
  CHECK(thrown_kind([&] { sblf::build_kirby(odd); }) == "InvalidData");

  sblf::SblfData one_sided = bundle();
  one_sided.lefschetz_cycles.assign(2, cw(kKb, {{0, 1}}));
  CHECK(thrown_kind([&] { sblf::build_kirby(one_sided); }) == "InvalidData");

  sblf::SblfData bad_fiber = bundle();
  bad_fiber.fiber = {false, 5};
  CHECK(thrown_kind([&] { sblf::build_kirby(bad_fiber); }) == "InvalidData");
}

TEST_CASE("total-space Euler characteristic") {
  CHECK(sblf::sblf_euler_char(bundle(4)) == 0);
  CHECK(sblf::sblf_euler_char(fold_only(2, 1)) == 2);
  for (int m = 1; m <= 4; ++m) {
    CHECK(sblf::sblf_euler_char(fibration(m, 2)) == 2 * m);
  }
  SUBCASE("six Lefschetz points over a genus-six fiber with a fold") {
    std::vector<surface::CurveWord> cycles(6, cw(kN6, kGamma));
    sblf::SblfData d{kN6, cw(kN6, kGamma), std::move(cycles), kN4, 0, 0};
    CHECK(sblf::sblf_euler_char(d) == 0);
  }
  SUBCASE("high-genus fold family") {
    for (int g = 1; g <= 6; ++g) {
      const surface::SurfaceModel upper{false, 2 * g + 4};
      const surface::SurfaceModel lower{false, 2 * g + 2};
      std::vector<surface::CurveWord> cycles(
          static_cast<std::size_t>(2 * g + 4), cw(upper, kGamma));
      sblf::SblfData d{upper, cw(upper, kGamma), std::move(cycles), lower, 0, 0};
      CHECK(sblf::sblf_euler_char(d) == 2 - 2 * g);
    }
  }
}

TEST_CASE("relative minimality report") {
  CHECK(sblf::relative_minimality_report(fibration(2, 0)).empty());
  sblf::SblfData d = fibration(1, 0);
  d.lefschetz_cycles.push_back(cw(kKb, {{0, 1}, {0, 1}}));  // null-homologous
  CHECK(sblf::relative_minimality_report(d) == std::vector<int>{2});
}

TEST_CASE("genus-two classification") {
  SUBCASE("worked examples") {
    CHECK(sblf::classify_genus2(bundle(7)) == sblf::DiffeoType{"K", {7}});
    CHECK(sblf::classify_genus2(fold_only(0, 0)) == sblf::DiffeoType{"N", {0}});
    CHECK(sblf::classify_genus2(fold_only(3, 1)) == sblf::DiffeoType{"Nprime", {3}});
    CHECK(sblf::classify_genus2(fibration(2, 2)) == sblf::DiffeoType{"M", {2, 2}});
    CHECK(sblf::classify_genus2(fibration(2, 2)).to_string() == "M(2,2)");
  }
  SUBCASE("errors") {
    sblf::SblfData high{kN4, std::nullopt, {}, std::nullopt, 0, 0};
    CHECK(thrown_kind([&] { sblf::classify_genus2(high); }) == "WrongGenus");

    sblf::SblfData null_cycle = fibration(1, 0);
    null_cycle.lefschetz_cycles.push_back(cw(kKb, {{0, 1}, {0, 1}}));
    null_cycle.lefschetz_cycles.push_back(cw(kKb, kGamma));
    CHECK(thrown_kind([&] { sblf::classify_genus2(null_cycle); }) == "NonMinimalCase");

    sblf::SblfData mixed = fold_only(1, 0);
    mixed.lefschetz_cycles.assign(2, cw(kKb, kGamma));
    CHECK(thrown_kind([&] { sblf::classify_genus2(mixed); }) == "NonMinimalCase");

    sblf::SblfData odd = bundle();
    odd.lefschetz_cycles.push_back(cw(kKb, kGamma));
    CHECK(thrown_kind([&] { sblf::classify_genus2(odd); }) == "InvalidData");
  }
  SUBCASE("classification commutes with the catalog") {
    std::vector<sblf::SblfData> cases;
    for (int n = 0; n <= 4; ++n) {
      cases.push_back(bundle(n));
      cases.push_back(fold_only(n, 0));
      cases.push_back(fold_only(n, 1));
      for (int m = 1; m <= 3; ++m) cases.push_back(fibration(m, n));
    }
    for (const sblf::SblfData& d : cases) {
      const sblf::DiffeoType type = sblf::classify_genus2(d);
      const kirby::ManifoldInvariants from_catalog =
          kirby::invariants(kirby::catalog(type.family, type.params));
      const kirby::ManifoldInvariants from_build =
          kirby::invariants(sblf::build_kirby(d));
      CHECK(from_catalog.euler_char == from_build.euler_char);
      CHECK(from_catalog.h1 == from_build.h1);
      CHECK(from_catalog.orientable == from_build.orientable);
    }
  }
  SUBCASE("bundle parity does not change the named type") {
    sblf::SblfData d = bundle(3, 1);
    const sblf::DiffeoType type = sblf::classify_genus2(d);
    CHECK(type == sblf::DiffeoType{"K", {3}});
    const auto inv = kirby::invariants(sblf::build_kirby(d));
    const auto cat = kirby::invariants(kirby::catalog("K", {3}));
    CHECK(inv.h1 == cat.h1);
    CHECK(inv.euler_char == cat.euler_char);
  }
}

TEST_CASE("random data: built diagrams carry the predicted Euler characteristic") {
  std::mt19937 rng(20260815u);
  auto coin = [&] { return static_cast<int>(rng() % 2); };

  for (int iter = 0; iter < 300; ++iter) {
    const int k = 2 * (1 + static_cast<int>(rng() % 4));  // 2, 4, 6, 8
    const surface::SurfaceModel fiber{false, k};
    sblf::SblfData d{fiber, std::nullopt, {}, std::nullopt,
                     static_cast<int>(rng() % 6), coin()};

    if (coin()) {
      d.fold_curve = cw(fiber, kGamma);
      d.lower_fiber = (k == 2 || coin())
                          ? surface::SurfaceModel{true, (k - 2) / 2}
                          : surface::SurfaceModel{false, k - 2};
    }
    const int pairs = static_cast<int>(rng() % 4);  // up to 6 cycles
    for (int p = 0; p < pairs; ++p) {
      algebra::Word w = kGamma;
      if (k > 2) {
        const int i = static_cast<int>(rng() % static_cast<unsigned>(k));
        int j = static_cast<int>(rng() % static_cast<unsigned>(k - 1));
        if (j >= i) ++j;
        w = {{std::min(i, j), 1}, {std::max(i, j), 1}};
      }
      d.lefschetz_cycles.push_back(cw(fiber, w));
      d.lefschetz_cycles.push_back(cw(fiber, w));
    }

    const sblf::CertificationReport rep = sblf::validate(d);
    REQUIRE(rep.level == (k == 2 ? sblf::CertLevel::PassExact
                                 : sblf::CertLevel::PassNecessary));
    CHECK(kirby::invariants(sblf::build_kirby(d)).euler_char ==
          sblf::sblf_euler_char(d));
  }
}

TEST_CASE("appending a doubled cycle never breaks certification") {
  std::mt19937 rng(0x5b1fu);
  for (int iter = 0; iter < 200; ++iter) {
    const int k = 2 * (2 + static_cast<int>(rng() % 3));  // 4, 6, 8
    const surface::SurfaceModel fiber{false, k};
    sblf::SblfData d{fiber, cw(fiber, kGamma), {},
                     surface::SurfaceModel{false, k - 2}, 0, 0};
    REQUIRE(sblf::validate(d).level == sblf::CertLevel::PassNecessary);

    for (int step = 0; step < 3; ++step) {
      const int i = static_cast<int>(rng() % static_cast<unsigned>(k));
      int j = static_cast<int>(rng() % static_cast<unsigned>(k - 1));
      if (j >= i) ++j;
      const algebra::Word w{{std::min(i, j), 1}, {std::max(i, j), 1}};
      d.lefschetz_cycles.push_back(cw(fiber, w));
      d.lefschetz_cycles.push_back(cw(fiber, w));
      CHECK(sblf::validate(d).level == sblf::CertLevel::PassNecessary);
    }
  }
}
