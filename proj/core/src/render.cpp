#include "foldcalc/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace foldcalc::render {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string svg_open(int width, int height) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
       std::to_string(width) + " " + std::to_string(height) + "\">\n";
  s += "<rect width=\"" + std::to_string(width) + "\" height=\"" +
       std::to_string(height) + "\" fill=\"white\"/>\n";
  return s;
}

std::string line(double x1, double y1, double x2, double y2) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
         "\" y2=\"" + num(y2) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

std::string text(double x, double y, const std::string& content) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
         content + "</text>\n";
}

std::string cross(double x, double y) {
  return line(x - 4, y - 4, x + 4, y + 4) + line(x - 4, y + 4, x + 4, y - 4);
}

std::string fiber_label(const basediagram::FiberClass& f) {
  if (f.empty) return "-";
  if (!f.orientable) return "N" + std::to_string(f.genus);
  if (f.genus == 0) {
    return f.components == 1 ? "S2" : "S2*" + std::to_string(f.components);
  }
  return "Sig" + std::to_string(f.genus);
}

std::string region_label(const basediagram::Region& r) {
  std::string label = fiber_label(r.fiber);
  if (r.lefschetz > 0) label += " L=" + std::to_string(r.lefschetz);
  return label;
}

std::string word_text(const algebra::Word& w, const kirby::HandleDecomposition& h) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign) ++j;
    if (!out.empty()) out += ' ';
    out += h.one_handles[w[i].gen].name;
    const int exp = w[i].sign * static_cast<int>(j - i);
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace

std::string diagram_svg(const basediagram::BaseDiagram& d) {
  d.check();
  const int n = static_cast<int>(d.circles.size());
  const int size = 80 * (n + 2);
  const double c = size / 2.0;

  std::string s = svg_open(size, size);

  for (int i = 0; i < n; ++i) {
    const basediagram::FoldCircle& circle = d.circles[i];
    const double r = 40.0 * (i + 1);
    s += "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(r) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
    if (circle.kind == basediagram::CircleKind::Definite) {
      s += " stroke-dasharray=\"6 4\"";
    }
    s += "/>\n";

    // Cusps: small outward kinks, evenly spaced.
    for (int k = 0; k < circle.cusps; ++k) {
      const double a = 2.0 * kPi * k / circle.cusps;
      const double da = 0.06;
      const double x1 = c + (r - 4) * std::cos(a - da);
      const double y1 = c + (r - 4) * std::sin(a - da);
      const double x2 = c + (r + 9) * std::cos(a);
      const double y2 = c + (r + 9) * std::sin(a);
      const double x3 = c + (r - 4) * std::cos(a + da);
      const double y3 = c + (r - 4) * std::sin(a + da);
      s += "<path d=\"M " + num(x1) + " " + num(y1) + " L " + num(x2) + " " +
           num(y2) + " L " + num(x3) + " " + num(y3) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }

    // Arrow: a radial tick with a chevron, pointing to the higher-chi side.
    const double a = kPi / 4.0;
    const bool outward = circle.arrow == basediagram::Arrow::Outward;
    const double r_tail = outward ? r - 10 : r + 10;
    const double r_tip = outward ? r + 10 : r - 10;
    const double tx = c + r_tip * std::cos(a);
    const double ty = c + r_tip * std::sin(a);
    s += line(c + r_tail * std::cos(a), c + r_tail * std::sin(a), tx, ty);
    const double back = outward ? r_tip - 6 : r_tip + 6;
    s += line(c + back * std::cos(a - 0.08), c + back * std::sin(a - 0.08), tx, ty);
    s += line(c + back * std::cos(a + 0.08), c + back * std::sin(a + 0.08), tx, ty);

    if (circle.pending > 0) {
      const double la = 3.0 * kPi / 4.0;
      s += text(c + r * std::cos(la), c + r * std::sin(la) - 4,
                "p=" + std::to_string(circle.pending));
    }
  }

  // Regions: innermost disk, annuli, outer region.
  for (int i = 0; i <= n; ++i) {
    const basediagram::Region& region = d.regions[i];
    double mid;
    if (n == 0) {
      mid = 0.0;
    } else if (i == 0) {
      mid = 20.0;
    } else if (i == n) {
      mid = 40.0 * n + 24.0;
    } else {
      mid = 40.0 * i + 20.0;
    }

    for (int k = 0; k < region.lefschetz; ++k) {
      const double a = 2.0 * kPi * k / region.lefschetz + 0.35;
      s += cross(c + mid * std::cos(a), c + mid * std::sin(a));
    }

    const double ly = n == 0 ? c : c + mid;
    s += text(c, ly + (n == 0 ? 0.0 : 14.0), region_label(region));
  }

  s += "</svg>\n";
  return s;
}

std::string kirby_svg(const kirby::HandleDecomposition& h) {
  h.check();
  std::vector<std::string> lines;
  lines.push_back("h0=" + std::to_string(h.zero_handles) +
                  " h1=" + std::to_string(h.one_handles.size()) +
                  " h2=" + std::to_string(h.two_handles.size()) +
                  " h3=" + std::to_string(h.three_handles.untwisted) + "+" +
                  std::to_string(h.three_handles.twisted) + "t" +
                  " h4=" + std::to_string(h.four_handles) +
                  " chi=" + std::to_string(h.euler_characteristic()));
  for (const kirby::OneHandle& oh : h.one_handles) {
    lines.push_back("1-handle " + oh.name + (oh.twisted ? " (twisted)" : "") +
                    " feet " + std::to_string(oh.foot0) + "-" +
                    std::to_string(oh.foot1));
  }
  for (std::size_t i = 0; i < h.two_handles.size(); ++i) {
    const kirby::TwoHandle& th = h.two_handles[i];
    std::string framings;
    for (std::size_t k = 0; k < th.framing_labels.size(); ++k) {
      if (k > 0) framings += ",";
      framings += std::to_string(th.framing_labels[k]);
    }
    lines.push_back("2-handle #" + std::to_string(i) + ": " +
                    word_text(th.word, h) + " [" + framings + "]");
  }

  const int width = 640;
  const int height = 30 + 18 * static_cast<int>(lines.size());
  std::string s = svg_open(width, height);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    s += "<text x=\"12\" y=\"" + num(24.0 + 18.0 * i) +
         "\" font-family=\"monospace\" font-size=\"13\">" + lines[i] + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace foldcalc::render
