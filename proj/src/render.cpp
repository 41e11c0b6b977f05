#include <addcomp/render.hpp>

#include <sstream>

namespace addcomp {

namespace {

constexpr const char* kGlyphs = "#o*+x@%&";
const std::vector<std::string> kColors{"#1f4e9c", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};

struct Grid {
  Int x_lo, x_hi, y_lo, y_hi;
  // top[row][col]: index of the last layer containing the point, or -1.
  std::vector<std::vector<int>> top;
};

Grid rasterize(const std::vector<RenderLayer>& layers, const Window& window, const std::optional<RenderSlice>& slice) {
  for (const auto& l : layers) {
    const GroupSpec& s = l.set.spec();
    if (!s.is_free()) throw Error("rendering needs a free group, layer '" + l.name + "' lives in " + s.to_string());
    if (s.rank != 2 && !slice) throw Error("layer '" + l.name + "' has rank " + std::to_string(s.rank) + "; pick a 2-D slice");
  }
  if (window.dim() != 2) throw Error("render window must be two-dimensional");
  Grid g{window[0].first, window[0].second, window[1].first, window[1].second, {}};
  const long rows = Int(g.y_hi - g.y_lo + 1).get_si(), cols = Int(g.x_hi - g.x_lo + 1).get_si();
  if (rows <= 0 || cols <= 0 || rows * cols > 1000000) throw Error("render window is empty or too large");
  g.top.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), -1));
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& set = layers[li].set;
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c) {
        Int x = g.x_lo + c, y = g.y_hi - r;
        Point p;
        if (slice) {
          p = slice->base;
          if (p.size() != set.spec().rank) throw Error("slice base has the wrong length");
          p.at(slice->x_axis) = x;
          p.at(slice->y_axis) = y;
        } else {
          p = {x, y};
        }
        if (set.contains(p)) g.top[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(li);
      }
  }
  return g;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

char layer_glyph(std::size_t index) { return kGlyphs[index % 8]; }
std::string layer_color(std::size_t index) { return kColors[index % kColors.size()]; }

std::string render_ascii(const std::vector<RenderLayer>& layers, const Window& window,
                         const std::optional<RenderSlice>& slice) {
  Grid g = rasterize(layers, window, slice);
  std::ostringstream out;
  for (std::size_t i = 0; i < layers.size(); ++i) out << layer_glyph(i) << " " << layers[i].name << "\n";
  out << "x " << g.x_lo << ".." << g.x_hi << ", y " << g.y_hi << " (top) .. " << g.y_lo << " (bottom)\n";
  for (const auto& row : g.top) {
    for (int v : row) out << (v < 0 ? '.' : layer_glyph(static_cast<std::size_t>(v)));
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const std::vector<RenderLayer>& layers, const Window& window, const std::optional<RenderSlice>& slice,
                       int cell) {
  Grid g = rasterize(layers, window, slice);
  const std::size_t rows = g.top.size(), cols = g.top.empty() ? 0 : g.top[0].size();
  const int legend = 16 * static_cast<int>(layers.size()) + 8;
  const int width = static_cast<int>(cols) * cell, height = static_cast<int>(rows) * cell + legend;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  // Axes through the origin when it is inside the window.
  if (g.x_lo <= 0 && 0 <= g.x_hi) {
    long c = Int(-g.x_lo).get_si();
    out << "<line x1=\"" << c * cell + cell / 2 << "\" y1=\"0\" x2=\"" << c * cell + cell / 2 << "\" y2=\""
        << static_cast<long>(rows) * cell << "\" stroke=\"#cccccc\"/>\n";
  }
  if (g.y_lo <= 0 && 0 <= g.y_hi) {
    long r = Int(g.y_hi).get_si();
    out << "<line x1=\"0\" y1=\"" << r * cell + cell / 2 << "\" x2=\"" << width << "\" y2=\"" << r * cell + cell / 2
        << "\" stroke=\"#cccccc\"/>\n";
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      int v = g.top[r][c];
      if (v < 0) continue;
      out << "<rect x=\"" << c * static_cast<std::size_t>(cell) + 1 << "\" y=\"" << r * static_cast<std::size_t>(cell) + 1
          << "\" width=\"" << cell - 2 << "\" height=\"" << cell - 2 << "\" fill=\"" << layer_color(static_cast<std::size_t>(v))
          << "\"/>\n";
    }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    int y = static_cast<int>(rows) * cell + 8 + 16 * static_cast<int>(i);
    out << "<rect x=\"4\" y=\"" << y << "\" width=\"10\" height=\"10\" fill=\"" << layer_color(i) << "\"/>\n";
    out << "<text x=\"20\" y=\"" << y + 9 << "\" font-family=\"monospace\" font-size=\"11\">" << xml_escape(layers[i].name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace addcomp
