#include <string>

#include <doctest.h>

#include "foldcalc/basediagram.hpp"
#include "foldcalc/error.hpp"
#include "foldcalc/kirby.hpp"
#include "foldcalc/render.hpp"
#include "test_util.hpp"

namespace {

using namespace foldcalc;
using namespace foldcalc::testing;

basediagram::BaseDiagram annulus_seed(int lefschetz) {
  basediagram::BaseDiagram d;
  d.circles = {{basediagram::CircleKind::Definite, basediagram::Arrow::Outward, 0, 0},
               {basediagram::CircleKind::Definite, basediagram::Arrow::Inward, 0, 0}};
  d.regions = {{basediagram::FiberClass::none(), 0},
               {basediagram::FiberClass::spheres(1), lefschetz},
               {basediagram::FiberClass::none(), 0}};
  d.check();
  return d;
}

}  // namespace

TEST_CASE("diagram pictures are deterministic well-formed SVG") {
  const basediagram::BaseDiagram simplified = basediagram::simplify_to_sblf(annulus_seed(0)).result;
  const std::string svg = render::diagram_svg(simplified);

  CHECK(svg == render::diagram_svg(simplified));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  // One fold circle at radius 40, fiber labels N6 (with six Lefschetz
  // crosses) inside and N4 outside.
  CHECK(svg.find("r=\"40.00\"") != std::string::npos);
  CHECK(svg.find("N6 L=6") != std::string::npos);
  CHECK(svg.find("N4") != std::string::npos);

  // Coordinates are printed with exactly two decimals.
  CHECK(svg.find("x1=\"") != std::string::npos);
  CHECK(svg.find(".") != std::string::npos);
}

TEST_CASE("diagram pictures reflect kind, cusps, and pending tubes") {
  SUBCASE("definite circles are dashed and empty regions show a dash") {
    const std::string svg = render::diagram_svg(annulus_seed(2));
    CHECK(svg.find("stroke-dasharray=\"6 4\"") != std::string::npos);
    CHECK(svg.find(">-<") != std::string::npos);
    CHECK(svg.find("S2 L=2") != std::string::npos);
  }

  SUBCASE("cusps and pending counts appear once present") {
    basediagram::BaseDiagram d;
    d.circles = {{basediagram::CircleKind::Indefinite, basediagram::Arrow::Outward, 6, 3}};
    d.regions = {{basediagram::FiberClass::nonorientable(2), 0},
                 {basediagram::FiberClass::nonorientable(2), 0}};
    d.check();
    const std::string svg = render::diagram_svg(d);
    CHECK(svg.find("p=3") != std::string::npos);
    CHECK(svg.find("N2") != std::string::npos);
    CHECK(svg == render::diagram_svg(d));
  }

  SUBCASE("rendering validates the diagram first") {
    basediagram::BaseDiagram bad;
    bad.circles = {{basediagram::CircleKind::Definite, basediagram::Arrow::Outward, 0, 0}};
    CHECK(thrown_kind([&] { render::diagram_svg(bad); }) == "InvalidData");
  }
}

TEST_CASE("handle diagrams render as a deterministic summary card") {
  const kirby::HandleDecomposition h = kirby::catalog("K", {3});
  const std::string svg = render::kirby_svg(h);

  CHECK(svg == render::kirby_svg(h));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  // The card names both 1-handles and spells the fiber word of the bundle.
  CHECK(svg.find("a") != std::string::npos);
  CHECK(svg.find("b") != std::string::npos);
  CHECK(svg.find("chi") != std::string::npos);
  CHECK(svg.find("a^6") != std::string::npos);
}
