#ifndef FOLDCALC_RENDER_HPP
#define FOLDCALC_RENDER_HPP

#include <string>

#include "foldcalc/basediagram.hpp"
#include "foldcalc/kirby.hpp"

// Deterministic SVG output (fixed layout radii, two-decimal coordinates) so
// renders can be compared byte-for-byte in golden-file tests.
namespace foldcalc::render {

// Concentric picture of a base diagram: fold circles at radii 40(i+1)
// (dashed when definite), cusps as outward kinks, pending tubes as a count
// label, Lefschetz points as small crosses in their region, arrows as radial
// ticks, and one fiber label per region.
std::string diagram_svg(const basediagram::BaseDiagram& d);

// Textual summary card of a handle decomposition: handle counts, one line
// per 1-handle and per 2-handle with its attaching word and framing labels.
std::string kirby_svg(const kirby::HandleDecomposition& h);

}  // namespace foldcalc::render

#endif  // FOLDCALC_RENDER_HPP
