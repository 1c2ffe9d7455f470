// Copyright 2026 the ccpark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_render.hpp"

#include <cmath>
#include <sstream>

namespace ccpark {

namespace {

constexpr double kScale = 24.0;  // px per meter
constexpr double kPad = 12.0;

class SvgCanvas {
 public:
  SvgCanvas(const BoundsRect & bounds) : bounds_(bounds)
  {
    width_ = bounds.width() * kScale + 2 * kPad;
    height_ = bounds.height() * kScale + 2 * kPad;
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double px(double x) const { return kPad + (x - bounds_.xmin) * kScale; }
  double py(double y) const { return kPad + (bounds_.ymax - y) * kScale; }

  void grid()
  {
    os_ << "<g class=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (double x = std::ceil(bounds_.xmin); x <= bounds_.xmax; x += 1.0) {
      os_ << "<line x1=\"" << px(x) << "\" y1=\"" << py(bounds_.ymin) << "\" x2=\"" << px(x)
          << "\" y2=\"" << py(bounds_.ymax) << "\"/>\n";
    }
    for (double y = std::ceil(bounds_.ymin); y <= bounds_.ymax; y += 1.0) {
      os_ << "<line x1=\"" << px(bounds_.xmin) << "\" y1=\"" << py(y) << "\" x2=\""
          << px(bounds_.xmax) << "\" y2=\"" << py(y) << "\"/>\n";
    }
    os_ << "</g>\n";
    os_ << "<rect x=\"" << px(bounds_.xmin) << "\" y=\"" << py(bounds_.ymax) << "\" width=\""
        << bounds_.width() * kScale << "\" height=\"" << bounds_.height() * kScale
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  void polygon(const ConvexPolygon & poly, const std::string & style)
  {
    os_ << "<polygon points=\"";
    for (const auto & v : poly) {
      os_ << px(v.x) << "," << py(v.y) << " ";
    }
    os_ << "\" " << style << "/>\n";
  }

  void polyline(const std::vector<Vec2> & pts, const std::string & cls,
                const std::string & style)
  {
    if (pts.size() < 2) {
      return;
    }
    os_ << "<polyline class=\"" << cls << "\" points=\"";
    for (const auto & v : pts) {
      os_ << px(v.x) << "," << py(v.y) << " ";
    }
    os_ << "\" fill=\"none\" " << style << "/>\n";
  }

  void footprint(const Footprint & fp, const std::string & style)
  {
    ConvexPolygon poly{fp.corners.begin(), fp.corners.end()};
    polygon(poly, style);
  }

  void raw(const std::string & s) { os_ << s; }

  std::string finish()
  {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  BoundsRect bounds_;
  double width_;
  double height_;
  std::ostringstream os_;
};

const char * segment_class(SegmentKind kind)
{
  switch (kind) {
    case SegmentKind::Straight:
      return "seg-straight";
    case SegmentKind::Clothoid:
      return "seg-clothoid";
    case SegmentKind::Arc:
      return "seg-arc";
  }
  return "seg";
}

const char * segment_style(SegmentKind kind)
{
  switch (kind) {
    case SegmentKind::Straight:
      return "stroke=\"#2e8b57\" stroke-width=\"2\"";
    case SegmentKind::Clothoid:
      return "stroke=\"#00a0c8\" stroke-width=\"2\"";
    case SegmentKind::Arc:
      return "stroke=\"#d94040\" stroke-width=\"2\"";
  }
  return "stroke=\"#777\"";
}

// Classify the curve family between two dump samples from the curvature
// behavior alone (the dump carries no segment structure).
SegmentKind infer_kind(const TreeDump::Row & a, const TreeDump::Row & b)
{
  const double dk = std::abs(b.pose.kappa - a.pose.kappa);
  const double ds = std::max(b.s - a.s, 1.0e-9);
  if (dk / ds > 1.0e-3) {
    return SegmentKind::Clothoid;
  }
  if (std::abs(a.pose.kappa) > 1.0e-6 || std::abs(b.pose.kappa) > 1.0e-6) {
    return SegmentKind::Arc;
  }
  return SegmentKind::Straight;
}

}  // namespace

std::string render_svg(const RenderInputs & in)
{
  const Scenario & scn = *in.scenario;
  SvgCanvas canvas(scn.bounds);
  canvas.grid();

  for (const auto & obs : scn.obstacles) {
    canvas.polygon(obs, "fill=\"#9a9a9a\" stroke=\"#555\" stroke-width=\"1\"");
  }

  // Parking spot rectangle (vehicle-centered when parked).
  {
    const Pose & g = scn.spot.goal;
    const double cx = g.x + std::cos(g.theta) * (scn.vehicle.body_length / 2.0 -
                                                 scn.vehicle.rear_overhang);
    const double cy = g.y + std::sin(g.theta) * (scn.vehicle.body_length / 2.0 -
                                                 scn.vehicle.rear_overhang);
    ConvexPolygon rect;
    const double hl = scn.spot.length / 2.0;
    const double hw = scn.spot.width / 2.0;
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    for (const auto & [u, v] : {std::pair{-hl, -hw}, {hl, -hw}, {hl, hw}, {-hl, hw}}) {
      rect.push_back({cx + c * u - s * v, cy + s * u + c * v});
    }
    canvas.polygon(rect,
                   "fill=\"none\" stroke=\"#3355cc\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"6,4\"");
  }

  canvas.footprint(footprint_at(scn.vehicle, scn.start),
                   "fill=\"none\" stroke=\"#e08700\" stroke-width=\"2\"");
  canvas.footprint(footprint_at(scn.vehicle, scn.spot.goal),
                   "fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"2\"");

  if (in.rrt != nullptr) {
    canvas.raw("<g class=\"rrt\" opacity=\"0.5\">\n");
    for (int i = 0; i < in.rrt->size(); ++i) {
      const auto & node = in.rrt->node(i);
      if (node.parent < 0) {
        continue;
      }
      std::vector<Vec2> pts;
      for (const auto & [s, pose] : sample_path(node.edge, 0.25)) {
        pts.push_back(pose.position());
      }
      canvas.polyline(pts, "rrt-edge", "stroke=\"#b8c4f0\" stroke-width=\"1\"");
    }
    canvas.raw("</g>\n");
  }

  if (in.tree != nullptr && in.tree->rows.size() >= 2) {
    canvas.raw("<g class=\"target-tree\">\n");
    std::vector<Vec2> pts;
    SegmentKind kind = SegmentKind::Straight;
    int branch = in.tree->rows.front().branch;
    auto flush = [&]() {
      canvas.polyline(pts, segment_class(kind), segment_style(kind));
      pts.clear();
    };
    for (std::size_t i = 0; i + 1 < in.tree->rows.size(); ++i) {
      const auto & a = in.tree->rows[i];
      const auto & b = in.tree->rows[i + 1];
      if (b.branch != branch) {
        flush();
        branch = b.branch;
        continue;
      }
      const SegmentKind k = infer_kind(a, b);
      if (pts.empty()) {
        kind = k;
        pts.push_back(a.pose.position());
      } else if (k != kind) {
        pts.push_back(a.pose.position());
        flush();
        kind = k;
        pts.push_back(a.pose.position());
      }
      pts.push_back(b.pose.position());
    }
    flush();
    canvas.raw("</g>\n");
  }

  if (in.path != nullptr && in.path->rows.size() >= 2) {
    canvas.raw("<g class=\"plan\">\n");
    std::vector<Vec2> pts;
    Direction dir = in.path->rows.front().direction;
    auto flush = [&]() {
      const char * style = dir == Direction::Forward
                               ? "stroke=\"#1d3557\" stroke-width=\"3\""
                               : "stroke=\"#7d2b8b\" stroke-width=\"3\" stroke-dasharray=\"8,4\"";
      canvas.polyline(pts, dir == Direction::Forward ? "path-forward" : "path-backward", style);
    };
    for (const auto & row : in.path->rows) {
      if (row.direction != dir && pts.size() >= 2) {
        pts.push_back(row.pose.position());
        flush();
        pts.clear();
        dir = row.direction;
      }
      pts.push_back(row.pose.position());
    }
    flush();
    canvas.raw("</g>\n");
  }

  return canvas.finish();
}

}  // namespace ccpark
