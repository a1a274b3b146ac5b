#include "isotri/svg.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace isotri {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#17becf",
                          "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

std::string points_attr(const Triangle& t) {
    std::ostringstream os;
    os << std::setprecision(10);
    for (int i = 0; i < 3; ++i) {
        if (i) os << ' ';
        os << t[i].x << ',' << t[i].y;
    }
    return os.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '"') out += "&quot;";
        else out += c;
    }
    return out;
}

}  // namespace

void write_svg(const std::string& path, const Triangle& input,
               const std::vector<SvgItem>& items, double scale) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](const Triangle& t) {
        for (int i = 0; i < 3; ++i) {
            xmin = std::min(xmin, t[i].x);
            xmax = std::max(xmax, t[i].x);
            ymin = std::min(ymin, t[i].y);
            ymax = std::max(ymax, t[i].y);
        }
    };
    grow(input);
    for (const SvgItem& it : items) grow(it.tri);
    double margin = 0.1 * std::max(xmax - xmin, ymax - ymin) + 0.1;
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;
    double w = (xmax - xmin) * scale, h = (ymax - ymin) * scale;
    double legend_h = 22.0 * (static_cast<double>(items.size()) + 1.0) + 10.0;

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << std::setprecision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << w << "\" height=\"" << h + legend_h << "\" viewBox=\"0 0 " << w
       << ' ' << h + legend_h << "\">\n";
    // math y-up coordinates: flip y and shift so (xmin, ymax) is the top-left
    os << "<g transform=\"translate(" << -xmin * scale << ',' << ymax * scale
       << ") scale(" << scale << ',' << -scale << ")\">\n";
    os << "  <polygon points=\"" << points_attr(input)
       << "\" fill=\"#dddddd\" stroke=\"#333333\" stroke-width=\""
       << 2.0 / scale << "\" data-kind=\"input\" data-metric=\""
       << area(input) << "\"/>\n";
    for (size_t i = 0; i < items.size(); ++i) {
        os << "  <polygon points=\"" << points_attr(items[i].tri)
           << "\" fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
           << "\" stroke-width=\"" << 1.5 / scale << "\" data-kind=\""
           << escape(items[i].kind) << "\" data-metric=\"" << items[i].metric
           << "\"/>\n";
    }
    os << "</g>\n";
    double ly = h + 20.0;
    os << "<text x=\"10\" y=\"" << ly
       << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#333333\">"
          "input</text>\n";
    for (size_t i = 0; i < items.size(); ++i) {
        ly += 22.0;
        os << "<text x=\"10\" y=\"" << ly
           << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\""
           << kPalette[i % kPaletteSize] << "\">" << escape(items[i].kind)
           << " (" << std::setprecision(6) << items[i].metric
           << std::setprecision(10) << ")</text>\n";
    }
    os << "</svg>\n";
}

void write_phase_svg(const std::string& path,
                     const std::vector<std::vector<int>>& cells,
                     const std::vector<std::string>& legend, double cell_px) {
    size_t rows = cells.size();
    size_t cols = rows ? cells[0].size() : 0;
    double w = static_cast<double>(cols) * cell_px;
    double h = static_cast<double>(rows) * cell_px;
    double legend_h = 22.0 * static_cast<double>(legend.size()) + 10.0;

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << w << "\" height=\"" << h + legend_h << "\">\n";
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cells[r].size(); ++c) {
            int k = cells[r][c];
            if (k < 0) continue;
            // row 0 at the bottom: y-up convention for the (alpha, beta) axes
            os << "<rect x=\"" << static_cast<double>(c) * cell_px << "\" y=\""
               << h - static_cast<double>(r + 1) * cell_px << "\" width=\""
               << cell_px << "\" height=\"" << cell_px << "\" fill=\""
               << kPalette[k % kPaletteSize] << "\"/>\n";
        }
    }
    double ly = h + 20.0;
    for (size_t i = 0; i < legend.size(); ++i) {
        os << "<text x=\"10\" y=\"" << ly
           << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\""
           << kPalette[i % kPaletteSize] << "\">" << escape(legend[i])
           << "</text>\n";
        ly += 22.0;
    }
    os << "</svg>\n";
}

}  // namespace isotri
