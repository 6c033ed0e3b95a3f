#include "schroeter/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace schroeter {

namespace {

struct View {
  double x0, x1, y0, y1;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Affine coordinates as doubles, or nothing for points at infinity.
std::optional<std::array<double, 2>> to_plane(const ProjPoint& p) {
  if (p[2] == 0) return std::nullopt;
  Rat x(p[0], p[2]), y(p[1], p[2]);
  x.canonicalize();
  y.canonicalize();
  double dx = x.get_d(), dy = y.get_d();
  if (!std::isfinite(dx) || !std::isfinite(dy)) return std::nullopt;
  return std::array<double, 2>{dx, dy};
}

// Coefficients scaled by the largest one so doubles stay in range.
std::array<double, Cubic::kTerms> scaled_coeffs(const Cubic& c) {
  Int big = 0;
  for (const auto& k : c.coeffs()) big = std::max<Int>(big, abs(k));
  std::array<double, Cubic::kTerms> out{};
  for (std::size_t i = 0; i < Cubic::kTerms; ++i) {
    Rat r(c.coeffs()[i], big);
    r.canonicalize();
    out[i] = r.get_d();
  }
  return out;
}

double eval_affine(const std::array<double, Cubic::kTerms>& k, double x, double y) {
  // x³, x²y, x², xy², xy, x, y³, y², y, 1
  return k[0] * x * x * x + k[1] * x * x * y + k[2] * x * x + k[3] * x * y * y + k[4] * x * y + k[5] * x +
         k[6] * y * y * y + k[7] * y * y + k[8] * y + k[9];
}

View choose_view(const std::vector<PointPair>& pairs, const std::vector<std::size_t>& generation,
                 std::vector<std::string>& warnings) {
  std::size_t min_gen = generation.empty() ? 0 : *std::min_element(generation.begin(), generation.end());
  std::vector<std::array<double, 2>> pts;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i < generation.size() && generation[i] > min_gen + 1) continue;
    for (const ProjPoint* p : {&pairs[i].first(), &pairs[i].second()})
      if (auto q = to_plane(*p)) pts.push_back(*q);
  }
  if (pts.empty()) return {-5, 5, -5, 5};
  View v{pts[0][0], pts[0][0], pts[0][1], pts[0][1]};
  for (const auto& p : pts) {
    v.x0 = std::min(v.x0, p[0]);
    v.x1 = std::max(v.x1, p[0]);
    v.y0 = std::min(v.y0, p[1]);
    v.y1 = std::max(v.y1, p[1]);
  }
  double w = v.x1 - v.x0, h = v.y1 - v.y0;
  if (w <= 0 && h <= 0) {
    warnings.push_back("all framed points coincide; using a unit window");
    w = h = 2;
  }
  double side = std::max(w, h);
  if (side > 1e6) warnings.push_back("framed points span more than 1e6; detail will be lost");
  double cx = (v.x0 + v.x1) / 2, cy = (v.y0 + v.y1) / 2;
  double half = side * 0.65;
  return {cx - half, cx + half, cy - half, cy + half};
}

}  // namespace

SvgResult render_svg(const std::optional<Cubic>& curve, const std::vector<PointPair>& pairs,
                     const std::vector<std::size_t>& generation, const PlotOptions& options) {
  SvgResult result;
  const View v = choose_view(pairs, generation, result.warnings);
  const double W = options.width, H = options.height;
  auto sx = [&](double x) { return (x - v.x0) / (v.x1 - v.x0) * W; };
  auto sy = [&](double y) { return H - (y - v.y0) / (v.y1 - v.y0) * H; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes, or the window border when an axis is out of view.
  out << "<g stroke=\"#888\" stroke-width=\"1\">\n";
  if (v.y0 <= 0 && 0 <= v.y1)
    out << "<line x1=\"0\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(W) << "\" y2=\"" << fmt(sy(0)) << "\"/>\n";
  if (v.x0 <= 0 && 0 <= v.x1)
    out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"0\" x2=\"" << fmt(sx(0)) << "\" y2=\"" << fmt(H) << "\"/>\n";
  out << "<rect x=\"0.5\" y=\"0.5\" width=\"" << fmt(W - 1) << "\" height=\"" << fmt(H - 1)
      << "\" fill=\"none\"/>\n</g>\n";

  if (curve && !pairs.empty()) {
    const auto k = scaled_coeffs(*curve);
    const int n = std::max(options.grid, 8);
    std::vector<double> f((n + 1) * (n + 1));
    auto gx = [&](int i) { return v.x0 + (v.x1 - v.x0) * i / n; };
    auto gy = [&](int j) { return v.y0 + (v.y1 - v.y0) * j / n; };
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i) f[j * (n + 1) + i] = eval_affine(k, gx(i), gy(j));

    std::ostringstream path;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double c[4] = {f[j * (n + 1) + i], f[j * (n + 1) + i + 1], f[(j + 1) * (n + 1) + i + 1],
                             f[(j + 1) * (n + 1) + i]};
        const double px[4] = {gx(i), gx(i + 1), gx(i + 1), gx(i)};
        const double py[4] = {gy(j), gy(j), gy(j + 1), gy(j + 1)};
        std::vector<std::array<double, 2>> hits;
        for (int e = 0; e < 4; ++e) {
          int a = e, b = (e + 1) % 4;
          if ((c[a] < 0) != (c[b] < 0)) {
            double t = c[a] / (c[a] - c[b]);
            hits.push_back({px[a] + t * (px[b] - px[a]), py[a] + t * (py[b] - py[a])});
          }
        }
        for (std::size_t h = 0; h + 1 < hits.size(); h += 2) {
          path << 'M' << fmt(sx(hits[h][0])) << ' ' << fmt(sy(hits[h][1])) << 'L' << fmt(sx(hits[h + 1][0]))
               << ' ' << fmt(sy(hits[h + 1][1]));
        }
      }
    }
    out << "<path d=\"" << path.str() << "\" stroke=\"black\" stroke-width=\"1.2\" fill=\"none\"/>\n";
  }

  if (options.tangents && curve) {
    const double len = (v.x1 - v.x0) * 0.06;
    out << "<g stroke=\"#2a2\" stroke-width=\"1\">\n";
    for (const auto& pp : pairs) {
      for (const ProjPoint* p : {&pp.first(), &pp.second()}) {
        auto q = to_plane(*p);
        if (!q) continue;
        ProjLine t = tangent_at(*curve, *p);
        // Direction of a·x + b·y + c = 0 is (b, -a).
        double a = Rat(t[0], 1).get_d(), b = Rat(t[1], 1).get_d();
        double norm = std::hypot(a, b);
        if (!(norm > 0) || !std::isfinite(norm)) continue;
        double dx = b / norm * len, dy = -a / norm * len;
        out << "<line x1=\"" << fmt(sx((*q)[0] - dx)) << "\" y1=\"" << fmt(sy((*q)[1] - dy)) << "\" x2=\""
            << fmt(sx((*q)[0] + dx)) << "\" y2=\"" << fmt(sy((*q)[1] + dy)) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  std::size_t hidden = 0;
  for (const auto& pp : pairs) {
    int member = 0;
    for (const ProjPoint* p : {&pp.first(), &pp.second()}) {
      const char* colour = member++ ? "blue" : "red";
      auto q = to_plane(*p);
      if (!q || (*q)[0] < v.x0 || (*q)[0] > v.x1 || (*q)[1] < v.y0 || (*q)[1] > v.y1) {
        ++hidden;
        continue;
      }
      out << "<circle cx=\"" << fmt(sx((*q)[0])) << "\" cy=\"" << fmt(sy((*q)[1])) << "\" r=\"3\" fill=\""
          << colour << "\"/>\n";
    }
  }
  if (hidden) result.warnings.push_back(std::to_string(hidden) + " points lie outside the window");
  for (const auto& w : result.warnings) out << "<!-- " << w << " -->\n";
  out << "</svg>\n";
  result.svg = out.str();
  return result;
}

}  // namespace schroeter
