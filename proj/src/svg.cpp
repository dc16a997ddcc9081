#include "dpcert/svg.hpp"

#include <algorithm>
#include <sstream>

namespace dpcert {

namespace {

constexpr double kMargin = 40;
constexpr double kSize = 480;

struct Frame {
    double extent; // largest coordinate shown
    double px(double s) const { return kMargin + s / extent * kSize; }
    double py(double t) const { return kMargin + kSize - t / extent * kSize; }
};

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else
            out += c;
    }
    return out;
}

void open(std::ostringstream &os, const Frame &f, const std::string &title) {
    double w = kSize + 2 * kMargin;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << w << "\" viewBox=\"0 0 " << w
       << ' ' << w << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kMargin << "\" y=\"20\" font-size=\"14\" font-family=\"sans-serif\">" << escape(title)
       << "</text>\n";
    os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.extent) << "\" y2=\"" << f.py(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(0) << "\" y2=\"" << f.py(f.extent)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.extent) << "\" y2=\""
       << f.py(f.extent) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
}

} // namespace

std::string region_svg(const std::vector<RegionSpec> &pieces, long m, const std::string &title) {
    double extent = 1;
    for (const auto &piece : pieces)
        for (const auto &p : piece.at(m))
            extent = std::max({extent, p.s.to_double(), p.t.to_double()});
    Frame f{extent * 1.1};
    std::ostringstream os;
    open(os, f, title + " (m = " + std::to_string(m) + ")");
    for (const auto &piece : pieces) {
        Polygon poly = piece.at(m);
        os << "<polygon fill=\"#4a7ab8\" fill-opacity=\"0.2\" stroke=\"#1f3f6b\" points=\"";
        for (const auto &p : poly)
            os << f.px(p.s.to_double()) << ',' << f.py(p.t.to_double()) << ' ';
        os << "\"/>\n";
        for (const auto &p : poly)
            os << "<text x=\"" << f.px(p.s.to_double()) + 4 << "\" y=\"" << f.py(p.t.to_double()) - 4
               << "\" font-size=\"10\" font-family=\"sans-serif\">(" << p.s.str() << ',' << p.t.str() << ")</text>\n";
    }
    for (const auto &[s, t] : lattice_points_union(pieces, m))
        os << "<circle cx=\"" << f.px(static_cast<double>(s)) << "\" cy=\"" << f.py(static_cast<double>(t))
           << "\" r=\"2\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string newton_svg(const BiPoly &f, const std::string &title) {
    double extent = 1;
    for (const auto &[mono, c] : f.terms())
        extent = std::max({extent, static_cast<double>(mono.s), static_cast<double>(mono.t)});
    Frame fr{extent * 1.1};
    std::ostringstream os;
    open(os, fr, title);
    NewtonPolygon np = newton_polygon(f);
    if (!np.vertices.empty()) {
        os << "<polyline fill=\"none\" stroke=\"#b8454a\" stroke-width=\"2\" points=\"";
        os << fr.px(np.vertices.front().s) << ',' << fr.py(fr.extent) << ' ';
        for (const auto &v : np.vertices)
            os << fr.px(v.s) << ',' << fr.py(v.t) << ' ';
        os << fr.px(fr.extent) << ',' << fr.py(np.vertices.back().t) << "\"/>\n";
    }
    for (const auto &[mono, c] : f.terms())
        os << "<circle cx=\"" << fr.px(mono.s) << "\" cy=\"" << fr.py(mono.t) << "\" r=\"3\" fill=\"black\"/>\n";
    for (const auto &v : np.vertices)
        os << "<text x=\"" << fr.px(v.s) + 4 << "\" y=\"" << fr.py(v.t) - 4
           << "\" font-size=\"10\" font-family=\"sans-serif\">(" << v.s << ',' << v.t << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace dpcert
