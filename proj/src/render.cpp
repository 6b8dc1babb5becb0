#include "cqs/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "cqs/exttor.hpp"

namespace cqs {

std::optional<RegionKind> region_kind_from_name(const std::string& name) {
  if (name == "polyhedron") return RegionKind::polyhedron;
  if (name == "below") return RegionKind::below;
  if (name == "abelow") return RegionKind::abelow;
  if (name == "link") return RegionKind::link;
  return std::nullopt;
}

namespace {

// Fixed three-decimal rendering of an exact rational (round half up), so the
// emitted text never depends on floating-point state.
std::string dec3(const Rat& v) {
  const Int scaled = rat_floor(v * 1000 + make_rat(1, 2));
  const bool neg = scaled < 0;
  const Int a = neg ? Int(-scaled) : scaled;
  const Int ip = a / 1000;
  const Int fp = a % 1000;
  std::string s = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str();
  if (fp != 0) {
    std::string f = fp.get_str();
    while (f.size() < 3) f.insert(f.begin(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    s += "." + f;
  }
  return s;
}

struct Seg {
  RationalVector a, b;
  bool dashed;
};

struct Figure {
  Int x_lo, x_hi, y_lo, y_hi;
  RationalVector vertex;
  std::vector<LatticeVector> gens;
  std::vector<RationalVector> strip;            // closed boundary of the staircase strip
  std::vector<Seg> edges;                       // styled strip boundary
  std::vector<RationalVector> shifted_outline;  // link: strip boundary + vertex(K)
  std::vector<LatticeVector> members;           // lattice points of the region
  bool fill_cone = false;
};

Figure make_figure(const Cqs& c, RegionKind kind, const WeilDivisor& d) {
  Figure f;
  f.vertex = polyhedron_vertex(c, d);
  f.gens = mingens(c, d);
  f.fill_cone = kind == RegionKind::polyhedron;

  if (f.gens.size() >= 2 &&
      (kind == RegionKind::below || kind == RegionKind::abelow || kind == RegionKind::link)) {
    f.strip.push_back(f.vertex);
    f.strip.push_back(RationalVector(f.gens.front()));
    for (std::size_t j = 1; j < f.gens.size(); ++j) {
      f.strip.push_back(rational_point_from_pairings(c, Rat(pair0(c, f.gens[j])),
                                                     Rat(pair1(c, f.gens[j - 1]))));
      f.strip.push_back(RationalVector(f.gens[j]));
    }
    // The strip's lower-left edges bound the open section polyhedron interior
    // for the below/link styling and the closed polyhedron for abelow; the
    // staircase is included in below/link and excised in abelow.
    const bool outer_dashed = kind != RegionKind::abelow;
    f.edges.push_back({f.vertex, f.strip[1], outer_dashed});
    for (std::size_t i = 1; i + 1 < f.strip.size(); ++i)
      f.edges.push_back({f.strip[i], f.strip[i + 1], !outer_dashed});
    f.edges.push_back({f.strip.back(), f.vertex, outer_dashed});
  }

  if (kind == RegionKind::below)
    f.members = below_region(c, d).lattice_points(c);
  else if (kind == RegionKind::link)
    f.members = link_region(c, d).lattice_points(c);

  if (kind == RegionKind::link) {
    const RationalVector vk = polyhedron_vertex(c, canonical_divisor());
    for (const auto& p : f.strip) f.shifted_outline.push_back(p + vk);
  }

  // Bounding box over everything drawn, with breathing room.
  std::vector<Rat> xs{f.vertex.x, Rat(0)};
  std::vector<Rat> ys{f.vertex.y, Rat(0)};
  for (const auto& g : f.gens) {
    xs.emplace_back(g.x);
    ys.emplace_back(g.y);
  }
  for (const auto& p : f.strip) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  for (const auto& p : f.shifted_outline) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  for (const auto& m : f.members) {
    xs.emplace_back(m.x);
    ys.emplace_back(m.y);
  }
  f.x_lo = rat_floor(*std::min_element(xs.begin(), xs.end())) - 1;
  f.x_hi = rat_ceil(*std::max_element(xs.begin(), xs.end())) + 2;
  f.y_lo = rat_floor(*std::min_element(ys.begin(), ys.end())) - 1;
  f.y_hi = rat_ceil(*std::max_element(ys.begin(), ys.end())) + 2;
  while (f.x_hi - f.x_lo < 4) ++f.x_hi;
  while (f.y_hi - f.y_lo < 4) ++f.y_hi;
  return f;
}

// Exit point of the ray vertex + t*(dir) against the top/right box border.
RationalVector ray_exit(const Figure& f, const Rat& dx, const Rat& dy) {
  Rat t_best(-1);
  if (dx > 0) t_best = (Rat(f.x_hi) - f.vertex.x) / dx;
  if (dy > 0) {
    const Rat ty = (Rat(f.y_hi) - f.vertex.y) / dy;
    if (t_best < 0 || ty < t_best) t_best = ty;
  }
  if (t_best < 0) t_best = 0;
  return {f.vertex.x + t_best * dx, f.vertex.y + t_best * dy};
}

std::string render_svg_impl(const Cqs& c, const Figure& f) {
  const Int unit = 20, margin = 10;
  const Int w = (f.x_hi - f.x_lo) * unit + 2 * margin;
  const Int h = (f.y_hi - f.y_lo) * unit + 2 * margin;
  auto sx = [&](const Rat& x) { return dec3((x - Rat(f.x_lo)) * unit + margin); };
  auto sy = [&](const Rat& y) { return dec3((Rat(f.y_hi) - y) * unit + margin); };
  auto pt = [&](const RationalVector& p) { return sx(p.x) + "," + sy(p.y); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

  out << "  <path fill=\"none\" stroke=\"#e0e0e0\" stroke-width=\"1\" d=\"";
  for (Int x = f.x_lo; x <= f.x_hi; ++x)
    out << "M" << sx(Rat(x)) << " " << sy(Rat(f.y_lo)) << "L" << sx(Rat(x)) << " "
        << sy(Rat(f.y_hi));
  for (Int y = f.y_lo; y <= f.y_hi; ++y)
    out << "M" << sx(Rat(f.x_lo)) << " " << sy(Rat(y)) << "L" << sx(Rat(f.x_hi)) << " "
        << sy(Rat(y));
  out << "\"/>\n";
  if (f.x_lo <= 0 && 0 <= f.x_hi)
    out << "  <line x1=\"" << sx(Rat(0)) << "\" y1=\"" << sy(Rat(f.y_lo)) << "\" x2=\""
        << sx(Rat(0)) << "\" y2=\"" << sy(Rat(f.y_hi))
        << "\" stroke=\"#b0b0b0\" stroke-width=\"1.5\"/>\n";
  if (f.y_lo <= 0 && 0 <= f.y_hi)
    out << "  <line x1=\"" << sx(Rat(f.x_lo)) << "\" y1=\"" << sy(Rat(0)) << "\" x2=\""
        << sx(Rat(f.x_hi)) << "\" y2=\"" << sy(Rat(0))
        << "\" stroke=\"#b0b0b0\" stroke-width=\"1.5\"/>\n";

  // Boundary rays of the section polyhedron.
  const RationalVector up_exit = ray_exit(f, Rat(0), Rat(1));
  const RationalVector slant_exit = ray_exit(f, Rat(c.n), Rat(c.q));
  if (f.fill_cone) {
    std::vector<RationalVector> poly{f.vertex, up_exit};
    if (slant_exit.y < Rat(f.y_hi)) poly.push_back({Rat(f.x_hi), Rat(f.y_hi)});
    poly.push_back(slant_exit);
    out << "  <polygon fill=\"#bcd6ee\" fill-opacity=\"0.55\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << pt(poly[i]);
    out << "\"/>\n";
  }
  const char* ray_color = f.fill_cone ? "#444444" : "#999999";
  out << "  <line x1=\"" << sx(f.vertex.x) << "\" y1=\"" << sy(f.vertex.y) << "\" x2=\""
      << sx(up_exit.x) << "\" y2=\"" << sy(up_exit.y) << "\" stroke=\"" << ray_color
      << "\" stroke-width=\"1.5\"/>\n";
  out << "  <line x1=\"" << sx(f.vertex.x) << "\" y1=\"" << sy(f.vertex.y) << "\" x2=\""
      << sx(slant_exit.x) << "\" y2=\"" << sy(slant_exit.y) << "\" stroke=\"" << ray_color
      << "\" stroke-width=\"1.5\"/>\n";

  if (!f.strip.empty()) {
    out << "  <polygon fill=\"#bcd6ee\" fill-opacity=\"0.55\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < f.strip.size(); ++i) out << (i ? " " : "") << pt(f.strip[i]);
    out << "\"/>\n";
    for (const auto& e : f.edges) {
      out << "  <line x1=\"" << sx(e.a.x) << "\" y1=\"" << sy(e.a.y) << "\" x2=\"" << sx(e.b.x)
          << "\" y2=\"" << sy(e.b.y) << "\" stroke=\"#1f4e79\" stroke-width=\"2\"";
      if (e.dashed) out << " stroke-dasharray=\"6,4\"";
      out << "/>\n";
    }
  }
  if (!f.shifted_outline.empty()) {
    out << "  <polygon fill=\"none\" stroke=\"#7a7a7a\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"3,3\" points=\"";
    for (std::size_t i = 0; i < f.shifted_outline.size(); ++i)
      out << (i ? " " : "") << pt(f.shifted_outline[i]);
    out << "\"/>\n";
  }
  for (const auto& m : f.members)
    out << "  <circle cx=\"" << sx(Rat(m.x)) << "\" cy=\"" << sy(Rat(m.y))
        << "\" r=\"3.2\" fill=\"#d81b60\"/>\n";
  for (const auto& g : f.gens)
    out << "  <circle cx=\"" << sx(Rat(g.x)) << "\" cy=\"" << sy(Rat(g.y))
        << "\" r=\"4\" fill=\"#2e7d32\"/>\n";
  out << "  <circle cx=\"" << sx(f.vertex.x) << "\" cy=\"" << sy(f.vertex.y)
      << "\" r=\"3.2\" fill=\"#c62828\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_tikz_impl(const Cqs& c, const Figure& f) {
  auto pt = [&](const RationalVector& p) { return "(" + dec3(p.x) + "," + dec3(p.y) + ")"; };
  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=0.5cm,y=0.5cm]\n";
  out << "  \\draw[step=1,gray!25,very thin] (" << f.x_lo << "," << f.y_lo << ") grid ("
      << f.x_hi << "," << f.y_hi << ");\n";
  if (f.x_lo <= 0 && 0 <= f.x_hi)
    out << "  \\draw[gray!60] (0," << f.y_lo << ") -- (0," << f.y_hi << ");\n";
  if (f.y_lo <= 0 && 0 <= f.y_hi)
    out << "  \\draw[gray!60] (" << f.x_lo << ",0) -- (" << f.x_hi << ",0);\n";

  const RationalVector up_exit = ray_exit(f, Rat(0), Rat(1));
  const RationalVector slant_exit = ray_exit(f, Rat(c.n), Rat(c.q));
  if (f.fill_cone) {
    out << "  \\fill[blue!15] " << pt(f.vertex) << " -- " << pt(up_exit);
    if (slant_exit.y < Rat(f.y_hi)) out << " -- (" << f.x_hi << "," << f.y_hi << ")";
    out << " -- " << pt(slant_exit) << " -- cycle;\n";
  }
  out << "  \\draw[" << (f.fill_cone ? "thick" : "gray") << "] " << pt(f.vertex) << " -- "
      << pt(up_exit) << ";\n";
  out << "  \\draw[" << (f.fill_cone ? "thick" : "gray") << "] " << pt(f.vertex) << " -- "
      << pt(slant_exit) << ";\n";

  if (!f.strip.empty()) {
    out << "  \\fill[blue!15] ";
    for (const auto& p : f.strip) out << pt(p) << " -- ";
    out << "cycle;\n";
    for (const auto& e : f.edges)
      out << "  \\draw[very thick" << (e.dashed ? ",dashed" : "") << "] " << pt(e.a) << " -- "
          << pt(e.b) << ";\n";
  }
  if (!f.shifted_outline.empty()) {
    out << "  \\draw[gray,dashed] ";
    for (const auto& p : f.shifted_outline) out << pt(p) << " -- ";
    out << "cycle;\n";
  }
  for (const auto& m : f.members)
    out << "  \\fill[purple] (" << m.x << "," << m.y << ") circle (0.14);\n";
  for (const auto& g : f.gens)
    out << "  \\fill[green!50!black] (" << g.x << "," << g.y << ") circle (0.17);\n";
  out << "  \\fill[red!70!black] " << pt(f.vertex) << " circle (0.14);\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Cqs& c, RegionKind kind, const WeilDivisor& d) {
  return render_svg_impl(c, make_figure(c, kind, d));
}

std::string render_tikz(const Cqs& c, RegionKind kind, const WeilDivisor& d) {
  return render_tikz_impl(c, make_figure(c, kind, d));
}

}  // namespace cqs
