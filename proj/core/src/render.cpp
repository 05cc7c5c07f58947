#include "dualcat/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace dualcat {

namespace {

struct Arc {
  int lo = 0, hi = 0;
  int height = 1;  // 1 + heights of arcs nested inside
};

std::vector<Arc> side_arcs(const std::vector<Strand>& strands, int side) {
  std::vector<Arc> arcs;
  for (const auto& [a, b] : strands)
    if (a.side == side && b.side == side)
      arcs.push_back({std::min(a.pos, b.pos), std::max(a.pos, b.pos), 1});
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return x.hi - x.lo < y.hi - y.lo; });
  for (auto& outer : arcs)
    for (const auto& inner : arcs)
      if (outer.lo < inner.lo && inner.hi < outer.hi)
        outer.height = std::max(outer.height, inner.height + 1);
  return arcs;
}

struct Through {
  int dpos = 0, cpos = 0;
  bool marked = false;
};

int col_of(int pos) { return 2 * (pos - 1); }

class Grid {
 public:
  Grid(int rows, int cols)
      : rows_(std::max(rows, 1)),
        cols_(std::max(cols, 1)),
        cells_(rows_, std::string(cols_, ' ')) {}
  void put(int r, int c, char ch) {
    if (r >= 0 && r < rows_ && c >= 0 && c < cols_) cells_[r][c] = ch;
  }
  char get(int r, int c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_ ? cells_[r][c] : ' ';
  }
  std::string str() const {
    std::string out;
    for (const std::string& row : cells_) {
      size_t end = row.find_last_not_of(' ');
      out += row.substr(0, end == std::string::npos ? 0 : end + 1);
      out += '\n';
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<std::string> cells_;
};

}  // namespace

std::string render_ascii(const Matching& mt) {
  int m = mt.dom().length(), n = mt.cod().length();
  std::vector<Arc> caps = side_arcs(mt.strands(), 1);
  std::vector<Arc> cups = side_arcs(mt.strands(), 0);
  std::vector<Through> wires;
  for (const auto& [a, b] : mt.strands())
    if (a.side == 0 && b.side == 1)
      wires.push_back({a.pos, b.pos, mt.dom().marked(a.pos)});
  int cap_h = 0, cup_h = 0, shift = 0;
  for (const Arc& a : caps) cap_h = std::max(cap_h, a.height);
  for (const Arc& a : cups) cup_h = std::max(cup_h, a.height);
  for (const Through& t : wires)
    shift = std::max(shift, std::abs(col_of(t.cpos) - col_of(t.dpos)));
  int mid_h = wires.empty() ? 0 : std::max(1, shift);
  int rows = 2 + cap_h + mid_h + cup_h;
  int cols = 2 * std::max({m, n, 1}) - 1;
  Grid g(rows, cols);
  int cod_row = 0, dom_row = rows - 1;
  int mid_top = cod_row + cap_h;       // last cap row is mid_top
  int mid_bot = dom_row - cup_h;       // first cup row is mid_bot
  for (int q = 1; q <= n; ++q)
    g.put(cod_row, col_of(q), mt.cod().marked(q) ? '+' : '-');
  for (int p = 1; p <= m; ++p)
    g.put(dom_row, col_of(p), mt.dom().marked(p) ? '+' : '-');
  for (const Arc& a : caps) {
    int row = cod_row + a.height;
    for (int r = cod_row + 1; r < row; ++r) {
      g.put(r, col_of(a.lo), '|');
      g.put(r, col_of(a.hi), '|');
    }
    g.put(row, col_of(a.lo), '\\');
    g.put(row, col_of(a.hi), '/');
    for (int c = col_of(a.lo) + 1; c < col_of(a.hi); ++c) g.put(row, c, '_');
    g.put(row, (col_of(a.lo) + col_of(a.hi)) / 2, '>');
  }
  for (const Arc& a : cups) {
    int row = dom_row - a.height;
    for (int r = row + 1; r < dom_row; ++r) {
      g.put(r, col_of(a.lo), '|');
      g.put(r, col_of(a.hi), '|');
    }
    g.put(row, col_of(a.lo), '/');
    g.put(row, col_of(a.hi), '\\');
    for (int c = col_of(a.lo) + 1; c < col_of(a.hi); ++c) g.put(row, c, '_');
    g.put(row, (col_of(a.lo) + col_of(a.hi)) / 2, '>');
  }
  for (const Through& t : wires) {
    int xc = col_of(t.cpos), xd = col_of(t.dpos);
    auto col_at = [&](int r) {
      // Column while descending: xc above the middle band, xd below it,
      // rounded linear interpolation in between; gaps of two columns
      // between neighbouring strands keep distinct wires from touching.
      if (r <= mid_top) return xc;
      if (r > mid_top + mid_h) return xd;
      double lambda = static_cast<double>(r - mid_top) / (mid_h + 1);
      return static_cast<int>(std::lround(xc + lambda * (xd - xc)));
    };
    for (int r = cod_row + 1; r < dom_row; ++r) {
      int here = col_at(r), below = col_at(r + 1);
      char ch = below == here ? '|' : (below > here ? '\\' : '/');
      g.put(r, here, ch);
    }
    int arrow_row = (mid_top + mid_bot + 1) / 2;
    for (int d = 0; d < rows && arrow_row + d < dom_row; ++d) {
      int r = arrow_row + d;
      if (r > cod_row && g.get(r, col_at(r)) == '|') {
        g.put(r, col_at(r), t.marked ? 'v' : '^');
        break;
      }
    }
  }
  return g.str();
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << (std::abs(v - std::lround(v)) < 1e-9 ? std::lround(v) : v);
  return os.str();
}

void svg_arrow(std::ostringstream& os, double x, double y, double dx,
               double dy) {
  // Triangle of side 8 centred at (x,y) pointing along (dx,dy).
  double len = std::hypot(dx, dy);
  if (len < 1e-9) return;
  double ux = dx / len, uy = dy / len;
  double tipx = x + 4 * ux, tipy = y + 4 * uy;
  double b1x = x - 4 * ux - 3 * uy, b1y = y - 4 * uy + 3 * ux;
  double b2x = x - 4 * ux + 3 * uy, b2y = y - 4 * uy - 3 * ux;
  os << "  <polygon points=\"" << num(tipx) << "," << num(tipy) << " "
     << num(b1x) << "," << num(b1y) << " " << num(b2x) << "," << num(b2y)
     << "\" fill=\"#1a1a1a\"/>\n";
}

}  // namespace

std::string render_svg(const Matching& mt) {
  int m = mt.dom().length(), n = mt.cod().length();
  const double step = 40, margin = 40;
  auto x_of = [&](int pos) { return margin + step * (pos - 1); };
  double max_r_cup = 0, max_r_cap = 0;
  for (const auto& [a, b] : mt.strands()) {
    double r = step * std::abs(a.pos - b.pos) / 2.0;
    if (a.side == 0 && b.side == 0) max_r_cup = std::max(max_r_cup, r);
    if (a.side == 1 && b.side == 1) max_r_cap = std::max(max_r_cap, r);
  }
  double width = 2 * margin + step * (std::max({m, n, 1}) - 1);
  double y_top = margin, y_bot = y_top + 40 + max_r_cup + max_r_cap;
  double height = y_bot + margin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
     << " " << num(height) << "\">\n";
  os << "  <rect width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" fill=\"white\"/>\n";
  const char* stroke = " fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"2\"";
  for (const auto& [a, b] : mt.strands()) {
    if (a.side == 0 && b.side == 1) {
      double x1 = x_of(a.pos), x2 = x_of(b.pos);
      os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y_bot)
         << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y_top) << "\"" << stroke
         << "/>\n";
      double dir = mt.dom().marked(a.pos) ? -1 : 1;  // marked points down
      svg_arrow(os, (x1 + x2) / 2, (y_top + y_bot) / 2, dir * (x2 - x1) / 2,
                dir * (y_top - y_bot) / 2);
    } else if (a.side == 0) {
      double x1 = x_of(a.pos), x2 = x_of(b.pos), r = (x2 - x1) / 2;
      os << "  <path d=\"M " << num(x1) << " " << num(y_bot) << " A " << num(r)
         << " " << num(r) << " 0 0 1 " << num(x2) << " " << num(y_bot) << "\""
         << stroke << "/>\n";
      svg_arrow(os, (x1 + x2) / 2, y_bot - r, 1, 0);
    } else {
      double x1 = x_of(a.pos), x2 = x_of(b.pos), r = (x2 - x1) / 2;
      os << "  <path d=\"M " << num(x1) << " " << num(y_top) << " A " << num(r)
         << " " << num(r) << " 0 0 0 " << num(x2) << " " << num(y_top) << "\""
         << stroke << "/>\n";
      svg_arrow(os, (x1 + x2) / 2, y_top + r, 1, 0);
    }
  }
  auto label = [&](int len, const MarkedWord& w, double y) {
    for (int p = 1; p <= len; ++p)
      os << "  <text x=\"" << num(x_of(p)) << "\" y=\"" << num(y)
         << "\" text-anchor=\"middle\" font-family=\"monospace\" "
            "font-size=\"16\" fill=\"#1a1a1a\">"
         << (w.marked(p) ? '+' : '-') << "</text>\n";
  };
  label(n, mt.cod(), y_top - 12);
  label(m, mt.dom(), y_bot + 24);
  os << "</svg>\n";
  return os.str();
}

}  // namespace dualcat
