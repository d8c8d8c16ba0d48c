#include "modinv/figure.hpp"

#include <cmath>
#include <locale>
#include <sstream>

#include "modinv/special_values.hpp"

namespace modinv {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kReMin = -1.5;
constexpr double kReMax = 1.5;
constexpr double kImMax = 4.5;

double px(double re) { return (re - kReMin) / (kReMax - kReMin) * kWidth; }
double py(double im) { return kHeight - im / kImMax * kHeight; }

void line(std::ostringstream& svg, double x1, double y1, double x2, double y2,
          const char* style) {
    svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" " << style << "/>\n";
}

void text(std::ostringstream& svg, double x, double y, const std::string& s,
          const char* extra = "") {
    svg << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"11\" "
        << "font-family=\"serif\" " << extra << ">" << s << "</text>\n";
}

// The table writes wall points as "1/2 + ...", the figure annotates them
// the other way around.
std::string marker_label(const SpecialValueEntry& entry) {
    const std::string prefix = "1/2 + ";
    if (entry.tau_descriptor.rfind(prefix, 0) == 0)
        return entry.tau_descriptor.substr(prefix.size()) + " + 1/2";
    return entry.tau_descriptor;
}

} // namespace

std::string render_figure_svg() {
    std::ostringstream svg;
    svg.imbue(std::locale::classic());
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // real axis and imaginary axis
    line(svg, 0, py(0), kWidth, py(0), "stroke=\"black\" stroke-width=\"1\"");
    line(svg, px(0), 0, px(0), py(0), "stroke=\"#bbbbbb\" stroke-width=\"0.5\"");

    // unit circle arc (an ellipse arc in pixel space since the axes scale
    // differently)
    const double rx = kWidth / (kReMax - kReMin);
    const double ry = kHeight / kImMax;
    svg << "<path d=\"M " << px(-1.0) << " " << py(0.0) << " A " << rx << " "
        << ry << " 0 0 1 " << px(1.0) << " " << py(0.0)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // fundamental-domain walls from the arc upward
    const double wall_base = std::sqrt(3.0) / 2.0;
    line(svg, px(-0.5), py(wall_base), px(-0.5), 0,
         "stroke=\"black\" stroke-width=\"1\" class=\"wall\"");
    line(svg, px(0.5), py(wall_base), px(0.5), 0,
         "stroke=\"black\" stroke-width=\"1\" class=\"wall\"");

    // axis ticks
    struct Tick {
        double re;
        const char* label;
    };
    const Tick ticks[] = {
        {-1.5, "-3/2"},
        {-std::sqrt(2.0) / 2.0, "-√2/2"},
        {-std::sqrt(3.0) / 3.0, "-√3/3"},
        {0.0, "0"},
        {std::sqrt(3.0) / 3.0, "√3/3"},
        {std::sqrt(2.0) / 2.0, "√2/2"},
        {1.5, "3/2"},
    };
    for (const Tick& tick : ticks) {
        line(svg, px(tick.re), py(0) - 4, px(tick.re), py(0) + 4,
             "stroke=\"black\" stroke-width=\"1\"");
        text(svg, px(tick.re) - 10, py(0) - 8, tick.label);
    }

    // one marker per table entry; rows beyond Im = 4.5 are pinned to the top
    // edge, staggered so their annotations stay readable
    int off_scale_count = 0;
    for (const SpecialValueEntry& entry : table()) {
        const bool off_scale = entry.tau.im() > kImMax;
        const double x = px(entry.tau.re());
        const double y = off_scale ? 10.0 + 16.0 * off_scale_count++ : py(entry.tau.im());
        svg << "<circle cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"3.5\" fill=\"" << (off_scale ? "none" : "black")
            << "\" stroke=\"black\"/>\n";
        std::string label = marker_label(entry);
        if (off_scale) label += " (off scale)";
        text(svg, x + 7, y + 4, label);
    }

    text(svg, kWidth / 2 - 180, kHeight - 8,
         "The fundamental domain with the tabulated points marked",
         "font-style=\"italic\"");
    svg << "</svg>\n";
    return svg.str();
}

} // namespace modinv
