// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/render/svg.hpp"

#include <algorithm>
#include <sstream>

namespace fermice::render {

namespace {

constexpr int kCell = 40;
constexpr int kPad = 40;

class Svg {
 public:
  Svg(int width, int height) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
         << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  }

  void line(int x1, int y1, int x2, int y2, const char* cls) {
    out_ << "  <line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"black\"/>\n";
  }

  // Small triangle centred at (x, y) pointing in dir.
  void arrow(int x, int y, const std::string& dir) {
    int p[6];
    if (dir == "up") {
      p[0] = x; p[1] = y - 5; p[2] = x - 4; p[3] = y + 3; p[4] = x + 4; p[5] = y + 3;
    } else if (dir == "down") {
      p[0] = x; p[1] = y + 5; p[2] = x - 4; p[3] = y - 3; p[4] = x + 4; p[5] = y - 3;
    } else if (dir == "right") {
      p[0] = x + 5; p[1] = y; p[2] = x - 3; p[3] = y - 4; p[4] = x - 3; p[5] = y + 4;
    } else {
      p[0] = x - 5; p[1] = y; p[2] = x + 3; p[3] = y - 4; p[4] = x + 3; p[5] = y + 4;
    }
    out_ << "  <polygon class=\"arrow " << dir << "\" points=\"" << p[0] << ',' << p[1] << ' ' << p[2]
         << ',' << p[3] << ' ' << p[4] << ',' << p[5] << "\"/>\n";
  }

  void text(int x, int y, const std::string& s, const char* cls = "label") {
    out_ << "  <text class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y
         << "\" font-size=\"12\" text-anchor=\"middle\">" << s << "</text>\n";
  }

  void circle(int x, int y, bool filled) {
    out_ << "  <circle class=\"" << (filled ? "occupied" : "empty") << "\" cx=\"" << x << "\" cy=\"" << y
         << "\" r=\"6\" stroke=\"black\" fill=\"" << (filled ? "black" : "white") << "\"/>\n";
  }

  void raw(const std::string& s) { out_ << "  " << s << "\n"; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

// Vertices of stored row r sit at y = top + r * kCell + kCell / 2; vertical
// edge row r spans from y(r - 1) to y(r).
void draw_lattice(Svg& svg, const ice::Bits& vertical, const ice::Bits& horizontal, int rows, int cols,
                  int left, int top) {
  auto vx = [&](int c) { return left + c * kCell + kCell / 2; };
  auto vy = [&](int r) { return top + r * kCell + kCell / 2; };
  for (int r = 0; r <= rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int y1 = vy(r) - kCell;
      const int y2 = vy(r);
      svg.line(vx(c), y1, vx(c), y2, "vertical");
      const bool up = vertical[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0;
      svg.arrow(vx(c), (y1 + y2) / 2, up ? "up" : "down");
    }
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c <= cols; ++c) {
      const int x1 = vx(c) - kCell;
      const int x2 = vx(c);
      svg.line(x1, vy(r), x2, vy(r), "horizontal");
      const bool right = horizontal[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0;
      svg.arrow((x1 + x2) / 2, vy(r), right ? "right" : "left");
    }
  }
}

}  // namespace

std::string ice_svg(const ice::IceState& s) {
  const int width = 2 * kPad + (s.cols + 1) * kCell;
  const int height = 2 * kPad + (s.rows + 1) * kCell;
  Svg svg(width, height);
  svg.raw("<desc>ice rows=" + std::to_string(s.rows) + " cols=" + std::to_string(s.cols) + " lambda=" +
          format_parts(s.lambda) + "</desc>");
  const int left = kPad + kCell / 2;
  const int top = kPad + kCell / 2;
  for (int c = 0; c < s.cols; ++c) svg.text(left + c * kCell + kCell / 2, kPad - 8, std::to_string(s.cols - c));
  for (int r = 0; r < s.rows; ++r) svg.text(kPad / 2, top + r * kCell + kCell / 2 + 4, std::to_string(s.rows - r));
  draw_lattice(svg, s.vertical, s.horizontal, s.rows, s.cols, left, top);
  return svg.finish();
}

std::string bend_svg(const ice::BendIceState& s) {
  const int rows = 2 * s.pairs;
  const int width = 2 * kPad + (s.cols + 2) * kCell;
  const int height = 2 * kPad + (rows + 1) * kCell;
  Svg svg(width, height);
  svg.raw("<desc>bend rows=" + std::to_string(rows) + " cols=" + std::to_string(s.cols) + " lambda=" +
          format_parts(s.lambda) + "</desc>");
  const int left = kPad + kCell / 2;
  const int top = kPad + kCell / 2;
  for (int c = 0; c < s.cols; ++c) svg.text(left + c * kCell + kCell / 2, kPad - 8, std::to_string(s.cols - c));
  for (int r = 0; r < rows; ++r) {
    const int i = s.pairs - r / 2;
    svg.text(kPad / 2, top + r * kCell + kCell / 2 + 4, std::to_string(i) + (r % 2 ? "̄" : ""));
  }
  draw_lattice(svg, s.vertical, s.horizontal, rows, s.cols, left, top);
  const int x = left + s.cols * kCell + kCell / 2;
  for (int p = 0; p < s.pairs; ++p) {
    const int y1 = top + 2 * p * kCell + kCell / 2;
    const int y2 = y1 + kCell;
    const bool up = s.bend_up[static_cast<std::size_t>(p)] != 0;
    std::ostringstream path;
    path << "<path class=\"uturn " << (up ? "up" : "down") << "\" d=\"M " << x << ' ' << y1 << " A "
         << kCell / 2 << ' ' << kCell / 2 << " 0 0 1 " << x << ' ' << y2 << "\" fill=\"none\" stroke=\"black\"/>";
    svg.raw(path.str());
    svg.arrow(x + kCell / 2, (y1 + y2) / 2, up ? "up" : "down");
  }
  return svg.finish();
}

std::string pattern_svg(const GTPattern& p) {
  const int n = p.n();
  std::size_t widest = 0;
  for (const auto& row : p.rows) widest = std::max(widest, row.size());
  const int width = 2 * kPad + static_cast<int>(widest + 1) * kCell;
  const int height = 2 * kPad + n * kCell;
  Svg svg(width, height);
  svg.raw("<desc>pattern rows=" + std::to_string(n) + "</desc>");
  for (int r = 0; r < n; ++r) {
    const auto& row = p.rows[static_cast<std::size_t>(r)];
    const int indent = static_cast<int>(widest - row.size()) * kCell / 2;
    for (std::size_t j = 0; j < row.size(); ++j) {
      svg.text(kPad + indent + static_cast<int>(j) * kCell + kCell / 2, kPad + r * kCell + kCell / 2,
               std::to_string(row[j]), "entry");
    }
  }
  return svg.finish();
}

std::string maya_svg(const fock::FockState& s, int margin) {
  const int lo = std::min(s.floor(), 0) + 1 - margin;
  const int hi = std::max(s.highest(), 0) + margin;
  const int count = hi - lo + 1;
  const int width = 2 * kPad + count * kCell;
  const int height = 2 * kPad + kCell;
  Svg svg(width, height);
  svg.raw("<desc>maya charge=" + std::to_string(s.charge()) + "</desc>");
  const int y = kPad + kCell / 2;
  // Mode k is drawn at column k - lo, matching the text diagram.
  auto cx = [&](int k) { return kPad + (k - lo) * kCell + kCell / 2; };
  for (int k = lo; k <= hi; ++k) svg.circle(cx(k), y, s.occupied(k));
  const int origin = (cx(0) + cx(1)) / 2;
  svg.line(origin, y - kCell / 2, origin, y + kCell / 2, "origin");
  svg.text(origin, y + kCell / 2 + 12, "0", "origin-label");
  return svg.finish();
}

}  // namespace fermice::render
