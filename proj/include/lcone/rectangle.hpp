#pragma once

#include <set>
#include <utility>
#include <vector>

#include "lcone/quiver.hpp"
#include "lcone/weyl.hpp"

namespace lcone {

/// A rectangle of cells in diagonal coordinates: u increases down-right,
/// v increases down-left, and the cell at (u,v) is labelled base + u + v.
/// Type L rectangles have base 1; type R rectangles have base b - a.
struct RectangleGrid {
    bool is_simple = false;
    int simple_j = 0;  // meaningful when is_simple
    Component comp;    // meaningful when !is_simple
    int U = 0;         // extent in u: n + 2 - b
    int V = 0;         // extent in v: a
    int base = 0;
};

/// A rectangle translated into the glued diagram. The labelled corner is
/// the right corner (u0+U-1, v0) for type L, the left corner (u0, v0+V-1)
/// for type R.
struct PlacedRectangle {
    RectangleGrid grid;
    int u0 = 0, v0 = 0;
    int corner_u = 0, corner_v = 0;
};

struct DiagramCell {
    int u = 0, v = 0;
    int label = 0;
    int covers = 0; // number of rectangles containing the cell
    int mult = 0;   // ceil(covers / 2)
};

/// One diagonal row of boxes: boxes are the pieces the rectangle outlines
/// cut the diagram into, grouped by the v-interval they occupy.
struct BoxRow {
    int v_lo = 0, v_hi = 0; // half-open [v_lo, v_hi)
    int count = 0;
};

/// The glued rectangle diagram of a partial quiver (or of a simple index).
/// Cells are stored in reading order: decreasing v, then increasing u.
/// Box rows are ordered by increasing v (top right of the picture first);
/// the central line sits after `central_index` box rows, i.e. cells with
/// v < v_split lie before (above) it.
struct RectangleDiagram {
    int n = 0;
    bool is_simple = false;
    int simple_j = 0;
    PartialQuiver quiver; // meaningful when !is_simple
    std::vector<PlacedRectangle> rects;
    std::vector<DiagramCell> cells;
    std::vector<BoxRow> box_rows;
    int central_index = 0;
    int v_split = 0;
};

RectangleGrid rectangle_of(int n, const Component& Y);

/// rho(j): the type-L rectangle with a = j, b = j + 1.
RectangleGrid rectangle_of_simple(int n, int j);

RectangleDiagram diagram(const PartialQuiver& P);
RectangleDiagram diagram_simple(int n, int j);

/// Cell labels in reading order, each repeated by its multiplicity.
std::vector<int> mu(const RectangleDiagram& d);

/// (letter, exponent) pairs, one per cell in reading order.
std::vector<std::pair<int, int>> monomial_word(const RectangleDiagram& d);

/// For each component's rectangle, the part on the labelled-corner side of
/// the central line contributes one root per full diagonal row; unioned.
/// For a simple index, every diagonal row of the single rectangle counts.
std::set<PositiveRoot> s_set(const RectangleDiagram& d);

/// 0/1 indicator of s_set against the root order of the standard word.
std::vector<int> v_vector(const RectangleDiagram& d);

} // namespace lcone
