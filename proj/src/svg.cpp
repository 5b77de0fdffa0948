#include "maintlab/svg.hpp"

#include <sstream>

#include "maintlab/csv.hpp"

namespace maintlab {

namespace {

constexpr int kPlot = 480;    // plot square, px
constexpr int kMarginL = 60;
constexpr int kMarginT = 40;
constexpr int kMarginB = 50;
constexpr int kLegendW = 230;

const char* color_for(const std::string& id) {
    if (id == "A") return "#1f77b4";
    if (id == "B") return "#2ca02c";
    if (id == "C") return "#ff7f0e";
    if (id == "D") return "#d62728";
    if (id == "E") return "#9467bd";
    if (id == "G") return "#8c564b";
    return "#7f7f7f";
}

double sx(double fpr) { return kMarginL + fpr * kPlot; }
double sy(double tpr) { return kMarginT + (1.0 - tpr) * kPlot; }

std::string star_path(double cx, double cy, double r) {
    // four-pointed star
    std::ostringstream p;
    p << "M" << cx << ' ' << cy - r << " L" << cx + r * 0.35 << ' ' << cy - r * 0.35 << " L"
      << cx + r << ' ' << cy << " L" << cx + r * 0.35 << ' ' << cy + r * 0.35 << " L" << cx << ' '
      << cy + r << " L" << cx - r * 0.35 << ' ' << cy + r * 0.35 << " L" << cx - r << ' ' << cy
      << " L" << cx - r * 0.35 << ' ' << cy - r * 0.35 << " Z";
    return p.str();
}

}  // namespace

std::string render_roc_svg(const std::map<std::string, SvgCurveInput>& curves,
                           const std::string& title) {
    const int width = kMarginL + kPlot + 20 + kLegendW;
    const int height = kMarginT + kPlot + kMarginB;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kMarginL + kPlot / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // frame and gridlines
    svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int i = 0; i <= 10; i += 2) {
        const double t = i / 10.0;
        svg << "<line x1=\"" << sx(t) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(t) << "\" y2=\""
            << sy(1) << "\"/>\n";
        svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(t) << "\" x2=\"" << sx(1) << "\" y2=\""
            << sy(t) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\"" << kPlot
        << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"black\"/>\n";

    // axis labels
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int i = 0; i <= 10; i += 2) {
        const double t = i / 10.0;
        svg << "<text x=\"" << sx(t) << "\" y=\"" << sy(0) + 18
            << "\" text-anchor=\"middle\">" << csv::format_fixed(t, 1) << "</text>\n";
        svg << "<text x=\"" << sx(0) - 8 << "\" y=\"" << sy(t) + 4
            << "\" text-anchor=\"end\">" << csv::format_fixed(t, 1) << "</text>\n";
    }
    svg << "<text x=\"" << kMarginL + kPlot / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">False positive rate</text>\n";
    svg << "<text x=\"16\" y=\"" << kMarginT + kPlot / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kMarginT + kPlot / 2
        << ")\">True positive rate</text>\n";
    svg << "</g>\n";

    // random-classifier diagonal
    svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(1) << "\" y2=\""
        << sy(1) << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";

    int legend_row = 0;
    for (const auto& [id, input] : curves) {
        const char* color = color_for(id);
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const RocPoint& p : input.curve->points) {
            svg << csv::format_fixed(sx(p.fpr), 2) << ',' << csv::format_fixed(sy(p.tpr), 2)
                << ' ';
        }
        svg << "\"/>\n";
        if (input.star) {
            svg << "<path d=\"" << star_path(sx(input.star->fpr), sy(input.star->tpr), 9)
                << "\" fill=\"" << color << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
        }
        const int lx = kMarginL + kPlot + 20;
        const int ly = kMarginT + 16 + legend_row * 22;
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 26 << "\" y2=\""
            << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 32 << "\" y=\"" << ly
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << input.label << " (AUC "
            << csv::format_fixed(input.curve->auc, 2) << ")</text>\n";
        ++legend_row;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace maintlab
