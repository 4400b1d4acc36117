#include "lcone/rectangle.hpp"

#include <algorithm>
#include <map>

namespace lcone {

namespace {

void place_corner(PlacedRectangle& pr) {
    if (pr.grid.is_simple || pr.grid.comp.kind == EdgeDir::L) {
        pr.corner_u = pr.u0 + pr.grid.U - 1; // right corner
        pr.corner_v = pr.v0;
    } else {
        pr.corner_u = pr.u0; // left corner
        pr.corner_v = pr.v0 + pr.grid.V - 1;
    }
}

RectangleDiagram assemble(int n, std::vector<PlacedRectangle> rects) {
    RectangleDiagram d;
    d.n = n;
    d.rects = std::move(rects);

    std::map<std::pair<int, int>, DiagramCell> cells;
    for (const PlacedRectangle& pr : d.rects) {
        for (int ul = 0; ul < pr.grid.U; ++ul) {
            for (int vl = 0; vl < pr.grid.V; ++vl) {
                int u = pr.u0 + ul, v = pr.v0 + vl;
                int label = pr.grid.base + ul + vl;
                auto [it, fresh] = cells.try_emplace({u, v});
                DiagramCell& c = it->second;
                if (fresh) {
                    c.u = u;
                    c.v = v;
                    c.label = label;
                } else {
                    LCONE_CHECK(c.label == label,
                                "overlapping cells carry different labels");
                }
                ++c.covers;
            }
        }
    }
    for (auto& [pos, c] : cells) {
        c.mult = (c.covers + 1) / 2;
        d.cells.push_back(c);
    }
    std::sort(d.cells.begin(), d.cells.end(),
              [](const DiagramCell& a, const DiagramCell& b) {
                  return a.v != b.v ? a.v > b.v : a.u < b.u;
              });

    // Boxes: the rectangle outlines cut the diagram at every rectangle
    // boundary; a box row is the slice between consecutive v-boundaries.
    std::set<int> v_cuts;
    for (const PlacedRectangle& pr : d.rects) {
        v_cuts.insert(pr.v0);
        v_cuts.insert(pr.v0 + pr.grid.V);
    }
    std::vector<int> vc(v_cuts.begin(), v_cuts.end());
    for (size_t t = 0; t + 1 < vc.size(); ++t) {
        BoxRow row{vc[t], vc[t + 1], 0};
        std::set<int> u_cuts;
        std::vector<std::pair<int, int>> spans;
        for (const PlacedRectangle& pr : d.rects) {
            if (pr.v0 <= row.v_lo && pr.v0 + pr.grid.V >= row.v_hi) {
                u_cuts.insert(pr.u0);
                u_cuts.insert(pr.u0 + pr.grid.U);
                spans.emplace_back(pr.u0, pr.u0 + pr.grid.U);
            }
        }
        LCONE_CHECK(!spans.empty(), "box row covered by no rectangle");
        std::vector<int> uc(u_cuts.begin(), u_cuts.end());
        for (size_t s = 0; s + 1 < uc.size(); ++s)
            for (auto [lo, hi] : spans)
                if (lo <= uc[s] && hi >= uc[s + 1]) {
                    ++row.count;
                    break;
                }
        d.box_rows.push_back(row);
    }

    // Central line: box-row counts split into a block of one parity
    // followed by a block of the other. When every count has the same
    // parity, the odd block is taken to come first.
    const int rows = static_cast<int>(d.box_rows.size());
    int t = rows;
    for (int i = 1; i < rows; ++i)
        if (d.box_rows[i].count % 2 != d.box_rows[0].count % 2) {
            t = i;
            break;
        }
    for (int i = t; i < rows; ++i)
        LCONE_CHECK(d.box_rows[i].count % 2 == d.box_rows[t].count % 2,
                    "box-row parities change more than once");
    if (t == rows && d.box_rows[0].count % 2 == 0)
        t = 0; // all even: the (empty) odd block comes first
    d.central_index = t;
    d.v_split = t == rows ? vc.back() : vc[t];
    return d;
}

} // namespace

RectangleGrid rectangle_of(int n, const Component& Y) {
    if (Y.kind == EdgeDir::Undirected)
        throw input_error("rectangle_of needs a directed component");
    if (Y.a < 1 || Y.a >= Y.b || Y.b > n + 1)
        throw input_error("component boundaries out of range");
    RectangleGrid g;
    g.comp = Y;
    g.U = n + 2 - Y.b;
    g.V = Y.a;
    g.base = Y.kind == EdgeDir::L ? 1 : Y.b - Y.a;
    return g;
}

RectangleGrid rectangle_of_simple(int n, int j) {
    if (j < 1 || j > n) throw input_error("simple index out of range");
    RectangleGrid g;
    g.is_simple = true;
    g.simple_j = j;
    g.U = n + 1 - j;
    g.V = j;
    g.base = 1;
    return g;
}

RectangleDiagram diagram(const PartialQuiver& P) {
    std::vector<PlacedRectangle> rects;
    for (const Component& Y : components(P)) {
        PlacedRectangle pr;
        pr.grid = rectangle_of(P.n, Y);
        if (rects.empty()) {
            pr.u0 = 0;
            pr.v0 = 0;
        } else {
            const PlacedRectangle& prev = rects.back();
            if (prev.grid.comp.kind == EdgeDir::L) {
                // L then R: the rectangles share their left corners.
                pr.u0 = prev.u0;
                pr.v0 = prev.v0 + prev.grid.V - pr.grid.V;
            } else {
                // R then L: the rectangles share their right corners.
                pr.u0 = prev.u0 + prev.grid.U - pr.grid.U;
                pr.v0 = prev.v0;
            }
        }
        place_corner(pr);
        rects.push_back(pr);
    }
    RectangleDiagram d = assemble(P.n, std::move(rects));
    d.quiver = P;
    return d;
}

RectangleDiagram diagram_simple(int n, int j) {
    PlacedRectangle pr;
    pr.grid = rectangle_of_simple(n, j);
    place_corner(pr);
    RectangleDiagram d = assemble(n, {pr});
    d.is_simple = true;
    d.simple_j = j;
    return d;
}

std::vector<int> mu(const RectangleDiagram& d) {
    std::vector<int> out;
    for (const DiagramCell& c : d.cells)
        for (int t = 0; t < c.mult; ++t) out.push_back(c.label);
    return out;
}

std::vector<std::pair<int, int>> monomial_word(const RectangleDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (const DiagramCell& c : d.cells) out.emplace_back(c.label, c.mult);
    return out;
}

std::set<PositiveRoot> s_set(const RectangleDiagram& d) {
    std::set<PositiveRoot> out;
    for (const PlacedRectangle& pr : d.rects) {
        const bool side = pr.corner_v < d.v_split;
        for (int vl = 0; vl < pr.grid.V; ++vl) {
            int v = pr.v0 + vl;
            if (!d.is_simple && (v < d.v_split) != side) continue;
            int lo = pr.grid.base + vl;
            out.insert(PositiveRoot{lo, lo + pr.grid.U});
        }
    }
    return out;
}

std::vector<int> v_vector(const RectangleDiagram& d) {
    std::set<PositiveRoot> s = s_set(d);
    std::vector<PositiveRoot> order = root_order(standard_word(d.n));
    std::vector<int> out(order.size(), 0);
    for (size_t l = 0; l < order.size(); ++l)
        if (s.count(order[l])) out[l] = 1;
    return out;
}

} // namespace lcone
