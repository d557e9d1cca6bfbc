#include "carleson/svg.hpp"

#include <algorithm>
#include <sstream>

namespace carleson {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac"};

double approx(const Rat& r) { return r.get_d(); }

}  // namespace

std::string realization_svg(const Collection& c, const BoxRealization& w) {
    if (c.dim != 2) throw Error("SVG rendering needs a 2-dimensional instance");
    if (w.pieces.size() != c.sets.size())
        throw Error("realization does not match collection");

    Rat min_x = c.set_boxes[0].low[0], max_x = c.set_boxes[0].high[0];
    Rat min_y = c.set_boxes[0].low[1], max_y = c.set_boxes[0].high[1];
    for (const auto& b : c.set_boxes) {
        min_x = std::min(min_x, b.low[0]);
        min_y = std::min(min_y, b.low[1]);
        max_x = std::max(max_x, b.high[0]);
        max_y = std::max(max_y, b.high[1]);
    }
    const double scale = 640.0 / std::max(approx(max_x - min_x), 1e-9);
    const double height = approx(max_y - min_y) * scale;

    auto px = [&](const Rat& x) { return (approx(x) - approx(min_x)) * scale; };
    // flip the y axis so the origin sits at the bottom left
    auto py = [&](const Rat& y) { return height - (approx(y) - approx(min_y)) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
       << height << "\" viewBox=\"0 0 640 " << height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        const char* color = kPalette[q % (sizeof(kPalette) / sizeof(*kPalette))];
        os << "  <g fill=\"" << color << "\" fill-opacity=\"0.75\">\n";
        for (const auto& p : w.pieces[q]) {
            os << "    <rect x=\"" << px(p.low[0]) << "\" y=\"" << py(p.high[1])
               << "\" width=\"" << (px(p.high[0]) - px(p.low[0])) << "\" height=\""
               << (py(p.low[1]) - py(p.high[1])) << "\">";
            os << "<title>" << c.sets[q].id << " piece, area "
               << rat_str(p.volume()) << "</title></rect>\n";
        }
        os << "  </g>\n";
    }
    for (std::size_t q = 0; q < c.sets.size(); ++q) {
        const auto& b = c.set_boxes[q];
        os << "  <rect x=\"" << px(b.low[0]) << "\" y=\"" << py(b.high[1])
           << "\" width=\"" << (px(b.high[0]) - px(b.low[0])) << "\" height=\""
           << (py(b.low[1]) - py(b.high[1]))
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">";
        os << "<title>" << c.sets[q].id << ", measure " << rat_str(c.mu[q])
           << ", weight " << rat_str(c.sets[q].weight) << "</title></rect>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace carleson
