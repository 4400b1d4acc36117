#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcone/quiver.hpp"
#include "lcone/weyl.hpp"

namespace lcone {

/// Wiring diagram of a reduced word: n+1 strands, one crossing per column.
/// snapshots[j] lists the strands from top to bottom after column j;
/// snapshot 0 is 1..n+1 and the last snapshot is the reversed order.
struct ChamberDiagram {
    ReducedWord word;
    std::vector<std::vector<int>> snapshots;
};

/// A bounded chamber of the wiring diagram, sitting between the two columns
/// of a minimal pair and labelled by the strands passing below it.
struct Chamber {
    MinimalPair pair;
    ChamberSet label;

    bool operator==(const Chamber&) const = default;
};

/// One pseudoline of the square arrangement, as a polyline in doubled
/// integer coordinates (so that all crossings are lattice points).
/// x runs left to right, y bottom to top; the square is [1,n+1]^2.
struct ArrangementLine {
    int h = 0;
    std::vector<std::pair<int, int>> points; // 2 or 3 vertices, doubled
};

struct ArrangementCrossing {
    int x2 = 0, y2 = 0; // doubled coordinates
    int h = 0, g = 0;   // the two lines crossing, h < g
    int letter = 0;     // 1 + number of lines strictly above
};

/// Square pseudoline arrangement determined by a subset of [2,n]:
/// Line_h joins left point h (top to bottom) to right point h (bottom to
/// top); members of lambda bend downwards first, non-members upwards.
struct Arrangement {
    int n = 0;
    std::set<int> lambda;
    std::vector<ArrangementLine> lines;          // h = 1..n+1
    std::vector<ArrangementCrossing> crossings;  // sorted by x, then bottom-up
};

ChamberDiagram chamber_diagram(const ReducedWord& word);

/// One chamber per minimal pair, in pair order. Asserts the label is
/// constant between the pair's columns.
std::vector<Chamber> chamber_sets(const ReducedWord& word);

Arrangement arrangement(int n, const std::set<int>& lambda);

/// A reduced word compatible with the full quiver Q, read off by sweeping
/// the crossings of the arrangement of Q's left-pointing edges.
ReducedWord compatible_word(const PartialQuiver& Q);

/// True iff the multiset of chamber sets of `word` equals the multiset of
/// chamber sets of the partial quivers below Q.
bool is_compatible(const ReducedWord& word, const PartialQuiver& Q);

} // namespace lcone
