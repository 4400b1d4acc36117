#include "lcone/render.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace lcone {

namespace {

const char* kSvgStyle =
    "<style>line,polyline,polygon{stroke:#333;fill:none;stroke-width:1.5}"
    "text{font:12px sans-serif;fill:#111}"
    ".mult{font:9px sans-serif;fill:#a00}"
    ".label{fill:#06c}.central{stroke:#a00;stroke-dasharray:6 4}</style>";

std::string svg_open(double x0, double y0, double x1, double y1) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " "
       << y0 << " " << x1 - x0 << " " << y1 - y0 << "\">" << kSvgStyle;
    return os.str();
}

std::string chamber_label_text(const ChamberSet& s) {
    std::string out;
    for (int x : s) out += std::to_string(x);
    return out;
}

} // namespace

std::string svg_chamber_diagram(const ReducedWord& word) {
    ChamberDiagram cd = chamber_diagram(word);
    const int n = word.n;
    const int k = word.length();
    const double dx = 42, dy = 30, mx = 34, my = 24;
    auto X = [&](int col) { return mx + dx * col; };
    auto Y = [&](int p) { return my + dy * p; };

    std::ostringstream os;
    os << svg_open(0, 0, 2 * mx + dx * k, 2 * my + dy * n + dy);
    for (int strand = 1; strand <= n + 1; ++strand) {
        os << "<polyline points=\"";
        for (int col = 0; col <= k; ++col) {
            int p = 0;
            while (cd.snapshots[col][p] != strand) ++p;
            os << X(col) << "," << Y(p) << " ";
        }
        os << "\"/>";
        int p0 = strand - 1;
        os << "<text x=\"" << X(0) - 16 << "\" y=\"" << Y(p0) + 4 << "\">"
           << strand << "</text>";
        os << "<text x=\"" << X(k) + 6 << "\" y=\"" << Y(n - p0) + 4 << "\">"
           << strand << "</text>";
    }
    for (const Chamber& ch : chamber_sets(word)) {
        double cx = (X(ch.pair.s) + X(ch.pair.s_prime - 1)) / 2;
        double cy = Y(ch.pair.letter - 1) + dy / 2;
        os << "<text class=\"label\" text-anchor=\"middle\" x=\"" << cx
           << "\" y=\"" << cy << "\">" << chamber_label_text(ch.label)
           << "</text>";
    }
    os << "</svg>";
    return os.str();
}

std::string ascii_chamber_diagram(const ReducedWord& word) {
    const int n = word.n;
    std::ostringstream os;
    for (int p = 0; p <= n; ++p) {
        os << (p + 1) << " ";
        for (int a : word.letters)
            os << (p + 1 == a || p == a ? "-X-" : "---");
        os << " " << (n + 1 - p) << "\n";
    }
    bool first = true;
    os << "chambers:";
    for (const Chamber& ch : chamber_sets(word)) {
        os << (first ? " " : ", ") << chamber_set_str(ch.label);
        first = false;
    }
    os << "\n";
    return os.str();
}

std::string svg_rectangle_diagram(const RectangleDiagram& d) {
    const double w = 22, h = 15;
    auto cx = [&](double u, double v) { return w * (u - v); };
    auto cy = [&](double u, double v) { return h * (u + v); };

    double x0 = 1e9, y0 = 1e9, x1 = -1e9, y1 = -1e9;
    for (const DiagramCell& c : d.cells) {
        x0 = std::min(x0, cx(c.u, c.v) - w);
        x1 = std::max(x1, cx(c.u, c.v) + w);
        y0 = std::min(y0, cy(c.u, c.v) - h);
        y1 = std::max(y1, cy(c.u, c.v) + h);
    }
    std::ostringstream os;
    os << svg_open(x0 - 2 * w, y0 - 2 * h, x1 + 2 * w, y1 + 2 * h);
    for (const DiagramCell& c : d.cells) {
        double x = cx(c.u, c.v), y = cy(c.u, c.v);
        os << "<polygon stroke=\"#bbb\" points=\"" << x << "," << y - h << " "
           << x + w << "," << y << " " << x << "," << y + h << " " << x - w
           << "," << y << "\"/>";
        os << "<text text-anchor=\"middle\" x=\"" << x << "\" y=\"" << y + 4
           << "\">" << c.label << "</text>";
        if (c.mult > 1)
            os << "<text class=\"mult\" x=\"" << x + 4 << "\" y=\"" << y + 12
               << "\">x" << c.mult << "</text>";
    }
    for (const PlacedRectangle& pr : d.rects) {
        int uT = pr.u0, vT = pr.v0;
        int uR = pr.u0 + pr.grid.U - 1, vR = pr.v0;
        int uB = pr.u0 + pr.grid.U - 1, vB = pr.v0 + pr.grid.V - 1;
        int uL = pr.u0, vL = pr.v0 + pr.grid.V - 1;
        os << "<polygon points=\"" << cx(uT, vT) << "," << cy(uT, vT) - h << " "
           << cx(uR, vR) + w << "," << cy(uR, vR) << " " << cx(uB, vB) << ","
           << cy(uB, vB) + h << " " << cx(uL, vL) - w << "," << cy(uL, vL)
           << "\"/>";
    }
    if (!d.rects.empty()) {
        double umin = 1e9, umax = -1e9;
        for (const DiagramCell& c : d.cells) {
            umin = std::min(umin, double(c.u));
            umax = std::max(umax, double(c.u));
        }
        double vz = d.v_split - 0.5;
        os << "<line class=\"central\" x1=\"" << cx(umin - 1, vz) << "\" y1=\""
           << cy(umin - 1, vz) << "\" x2=\"" << cx(umax + 1, vz) << "\" y2=\""
           << cy(umax + 1, vz) << "\"/>";
    }
    os << "</svg>";
    return os.str();
}

std::string ascii_rectangle_diagram(const RectangleDiagram& d) {
    std::ostringstream os;
    int row_v = INT32_MIN;
    bool first_row = true;
    for (const DiagramCell& c : d.cells) {
        if (c.v != row_v) {
            if (!first_row) os << "\n";
            os << "row v=" << c.v << ":";
            row_v = c.v;
            first_row = false;
        }
        os << " " << c.label;
        if (c.mult > 1) os << "(x" << c.mult << ")";
    }
    os << "\nbox rows (top right first):";
    for (const BoxRow& r : d.box_rows) os << " " << r.count;
    os << "\ncentral line after " << d.central_index << " box row(s)\n";
    return os.str();
}

std::string svg_arrangement(const Arrangement& arr) {
    const double s = 16;
    const double top = 2 * (arr.n + 1);
    auto X = [&](int x2) { return s * x2; };
    auto Y = [&](int y2) { return s * (top + 2 - y2); };

    std::ostringstream os;
    os << svg_open(X(0), Y(2 * (arr.n + 1)) - s, X(2 * (arr.n + 1)) + 2 * s,
                   Y(2) + s);
    for (const ArrangementLine& line : arr.lines) {
        os << "<polyline points=\"";
        for (auto [x2, y2] : line.points) os << X(x2) << "," << Y(y2) << " ";
        os << "\"/>";
        auto [lx, ly] = line.points.front();
        auto [rx, ry] = line.points.back();
        os << "<text x=\"" << X(lx) - 14 << "\" y=\"" << Y(ly) + 4 << "\">"
           << line.h << "</text>";
        os << "<text x=\"" << X(rx) + 6 << "\" y=\"" << Y(ry) + 4 << "\">"
           << line.h << "</text>";
    }
    for (const ArrangementCrossing& c : arr.crossings)
        os << "<text class=\"mult\" x=\"" << X(c.x2) + 3 << "\" y=\""
           << Y(c.y2) - 3 << "\">" << c.letter << "</text>";
    os << "</svg>";
    return os.str();
}

} // namespace lcone
