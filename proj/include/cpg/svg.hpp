// SVG rendering of representations and rectilinear drawings: grid cells map
// to fixed-size squares, paths are stroked polylines with one color per
// vertex, endpoints get dots (the paper draws arrows; we drop the heads).
#pragma once

#include <sstream>
#include <string>

#include "cpg/geometry.hpp"
#include "cpg/linegraph.hpp"

namespace cpg {

namespace svg_detail {

inline std::string color_for(std::size_t i) {
    // golden-angle hue walk keeps neighboring paths distinguishable
    int hue = static_cast<int>((i * 137) % 360);
    std::ostringstream s;
    s << "hsl(" << hue << ",70%,40%)";
    return s.str();
}

}  // namespace svg_detail

inline std::string render_svg(const CpgRepresentation& rep, int cell = 28) {
    const int margin = cell;
    const int width = margin * 2 + cell * std::max(rep.cols - 1, 0);
    const int height = margin * 2 + cell * std::max(rep.rows - 1, 0);
    auto x_of = [&](int col) { return margin + col * cell; };
    auto y_of = [&](int row) { return height - margin - row * cell; };  // row 0 at the bottom

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <g stroke=\"#ddd\" stroke-width=\"1\">\n";
    for (int r = 0; r < rep.rows; ++r)
        out << "    <line x1=\"" << x_of(0) << "\" y1=\"" << y_of(r) << "\" x2=\""
            << x_of(rep.cols - 1) << "\" y2=\"" << y_of(r) << "\"/>\n";
    for (int c = 0; c < rep.cols; ++c)
        out << "    <line x1=\"" << x_of(c) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(c)
            << "\" y2=\"" << y_of(rep.rows - 1) << "\"/>\n";
    out << "  </g>\n";

    std::size_t i = 0;
    for (const auto& path : rep.paths) {
        std::string color = svg_detail::color_for(i++);
        out << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"3\" stroke-linecap=\"round\" points=\"";
        for (const auto& c : path.corners) out << x_of(c.col) << "," << y_of(c.row) << " ";
        out << "\"/>\n";
        for (const auto& c : {path.corners.front(), path.corners.back()})
            out << "  <circle cx=\"" << x_of(c.col) << "\" cy=\"" << y_of(c.row)
                << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        const auto& label_at = path.corners.front();
        out << "  <text x=\"" << x_of(label_at.col) + 5 << "\" y=\"" << y_of(label_at.row) - 5
            << "\" font-size=\"11\" fill=\"" << color << "\">" << path.vertex << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline std::string render_svg(const RectilinearDrawing& d, int cell = 28) {
    CpgRepresentation rep = rep_from_rectilinear(d);
    return render_svg(rep, cell);
}

}  // namespace cpg
