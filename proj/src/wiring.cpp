#include "lcone/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lcone {

ChamberDiagram chamber_diagram(const ReducedWord& word) {
    if (!is_reduced_w0(word.n, word.letters))
        throw input_error("chamber_diagram: not a reduced word for w0");
    ChamberDiagram cd;
    cd.word = word;
    std::vector<int> order(word.n + 1);
    std::iota(order.begin(), order.end(), 1);
    cd.snapshots.push_back(order);
    for (int a : word.letters) {
        std::swap(order[a - 1], order[a]);
        cd.snapshots.push_back(order);
    }
    for (int p = 0; p <= word.n; ++p)
        LCONE_CHECK(order[p] == word.n + 1 - p,
                    "final strand order is not reversed");
    return cd;
}

std::vector<Chamber> chamber_sets(const ReducedWord& word) {
    ChamberDiagram cd = chamber_diagram(word);
    std::vector<Chamber> out;
    for (const MinimalPair& mp : minimal_pairs(word)) {
        auto below = [&](int col) {
            ChamberSet s;
            for (int p = mp.letter; p <= word.n; ++p)
                s.insert(cd.snapshots[col][p]);
            return s;
        };
        ChamberSet label = below(mp.s);
        for (int col = mp.s + 1; col < mp.s_prime; ++col)
            LCONE_CHECK(below(col) == label,
                        "chamber label changed between the pair's columns");
        out.push_back(Chamber{mp, std::move(label)});
    }
    return out;
}

Arrangement arrangement(int n, const std::set<int>& lambda) {
    if (n < 1) throw input_error("rank must be >= 1");
    for (int h : lambda)
        if (h < 2 || h > n) throw input_error("lambda must be a subset of [2,n]");

    Arrangement arr;
    arr.n = n;
    arr.lambda = lambda;
    for (int h = 1; h <= n + 1; ++h) {
        ArrangementLine line;
        line.h = h;
        const std::pair<int, int> left{2, 2 * (n + 2 - h)};
        const std::pair<int, int> right{2 * (n + 1), 2 * h};
        line.points.push_back(left);
        if (h != 1 && h != n + 1) {
            if (lambda.count(h))
                line.points.emplace_back(2 * (n + 2 - h), 2); // down, then up
            else
                line.points.emplace_back(2 * h, 2 * (n + 1)); // up, then down
        }
        line.points.push_back(right);
        arr.lines.push_back(std::move(line));
    }

    // y at doubled abscissa x2 (all segments have slope +-1, so this is exact)
    auto y_at = [](const ArrangementLine& line, int x2) {
        for (size_t i = 0; i + 1 < line.points.size(); ++i) {
            auto [x0, y0] = line.points[i];
            auto [x1, y1] = line.points[i + 1];
            if (x2 >= x0 && x2 <= x1)
                return y0 + (y1 - y0) / (x1 - x0) * (x2 - x0);
        }
        throw internal_error("abscissa outside the arrangement square");
    };

    for (int h = 1; h <= n + 1; ++h) {
        for (int g = h + 1; g <= n + 1; ++g) {
            const auto& lh = arr.lines[h - 1];
            const auto& lg = arr.lines[g - 1];
            int found = 0;
            for (size_t i = 0; i + 1 < lh.points.size(); ++i) {
                for (size_t j = 0; j + 1 < lg.points.size(); ++j) {
                    auto [ax0, ay0] = lh.points[i];
                    auto [ax1, ay1] = lh.points[i + 1];
                    auto [bx0, by0] = lg.points[j];
                    auto [bx1, by1] = lg.points[j + 1];
                    int sa = (ay1 - ay0) / (ax1 - ax0);
                    int sb = (by1 - by0) / (bx1 - bx0);
                    if (sa == sb) continue;
                    // sa (x - ax0) + ay0 = sb (x - bx0) + by0, slopes are +-1
                    int num = sa * ax0 - ay0 - sb * bx0 + by0;
                    if (num % (sa - sb) != 0) continue;
                    int x2 = num / (sa - sb);
                    if (x2 < std::max(ax0, bx0) || x2 > std::min(ax1, bx1))
                        continue;
                    int y2 = ay0 + sa * (x2 - ax0);
                    LCONE_CHECK(y2 == by0 + sb * (x2 - bx0),
                                "inconsistent crossing point");
                    arr.crossings.push_back(
                        ArrangementCrossing{x2, y2, h, g, 0});
                    ++found;
                }
            }
            LCONE_CHECK(found == 1, "lines must cross exactly once");
        }
    }
    std::sort(arr.crossings.begin(), arr.crossings.end(),
              [](const ArrangementCrossing& a, const ArrangementCrossing& b) {
                  return std::tie(a.x2, a.y2) < std::tie(b.x2, b.y2);
              });
    for (ArrangementCrossing& c : arr.crossings) {
        int above = 0;
        for (const ArrangementLine& line : arr.lines) {
            if (line.h == c.h || line.h == c.g) continue;
            int y2 = y_at(line, c.x2);
            LCONE_CHECK(y2 != c.y2, "triple crossing in arrangement");
            if (y2 > c.y2) ++above;
        }
        c.letter = 1 + above;
    }
    return arr;
}

ReducedWord compatible_word(const PartialQuiver& Q) {
    if (!Q.is_quiver())
        throw input_error("compatible_word needs a fully directed quiver");
    std::set<int> lambda;
    for (int e = 2; e <= Q.n; ++e)
        if (Q.edge(e) == EdgeDir::L) lambda.insert(e);
    Arrangement arr = arrangement(Q.n, lambda);
    std::vector<int> letters;
    letters.reserve(arr.crossings.size());
    for (const ArrangementCrossing& c : arr.crossings)
        letters.push_back(c.letter);
    ReducedWord w = make_reduced_word(Q.n, std::move(letters));
    LCONE_CHECK(is_compatible(w, Q), "swept word fails the compatibility test");
    return w;
}

bool is_compatible(const ReducedWord& word, const PartialQuiver& Q) {
    if (word.n != Q.n) throw input_error("is_compatible: rank mismatch");
    if (!Q.is_quiver())
        throw input_error("is_compatible needs a fully directed quiver");
    std::multiset<ChamberSet> have;
    for (const Chamber& c : chamber_sets(word)) have.insert(c.label);
    std::multiset<ChamberSet> want;
    for (const PartialQuiver& P : sub_partial_quivers(Q))
        want.insert(chamber_set_of(P));
    return have == want;
}

} // namespace lcone
