#include "lcone/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "lcone/wiring.hpp"

namespace lcone {

namespace {

using i128 = __int128;

long long narrow(i128 x) {
    LCONE_CHECK(x <= INT64_MAX && x >= INT64_MIN,
                "exact arithmetic overflowed 64 bits");
    return static_cast<long long>(x);
}

} // namespace

std::string ConeLabel::str() const {
    if (simple) return "j=" + std::to_string(j);
    return quiver.str();
}

ConeMatrix cone_matrix(const ReducedWord& word) {
    if (!is_reduced_w0(word.n, word.letters))
        throw input_error("cone_matrix: not a reduced word for w0");
    const int n = word.n;
    const int k = word.length();
    ConeMatrix cm;
    cm.word = word;

    std::vector<PositiveRoot> roots = root_order(word);
    for (int j = 1; j <= n; ++j) {
        std::vector<long long> row(k, 0);
        int pos = -1;
        for (int p = 0; p < k; ++p)
            if (roots[p] == PositiveRoot{j, j + 1}) pos = p;
        LCONE_CHECK(pos >= 0, "simple root missing from the root order");
        row[pos] = 1;
        cm.rows.push_back(std::move(row));
        ConeLabel lab;
        lab.simple = true;
        lab.j = j;
        cm.row_labels.push_back(std::move(lab));
    }
    for (const MinimalPair& mp : minimal_pairs(word)) {
        std::vector<long long> row(k, 0);
        row[mp.s - 1] = -1;
        row[mp.s_prime - 1] = -1;
        for (int p = mp.s + 1; p < mp.s_prime; ++p)
            if (std::abs(word.letters[p - 1] - mp.letter) == 1) row[p - 1] = 1;
        cm.rows.push_back(std::move(row));
        ConeLabel lab;
        lab.simple = false;
        lab.pair = mp;
        cm.row_labels.push_back(std::move(lab));
    }
    LCONE_CHECK(static_cast<int>(cm.rows.size()) == k,
                "cone matrix must be square");

    long long det = 0;
    inverse_unimodular(cm.rows, &det); // validates unimodularity
    cm.det = det;
    return cm;
}

std::vector<std::vector<long long>> inverse_unimodular(
    const std::vector<std::vector<long long>>& m, long long* det_out) {
    const int k = static_cast<int>(m.size());
    for (const auto& row : m)
        LCONE_CHECK(static_cast<int>(row.size()) == k, "matrix must be square");

    // Fraction-free Gauss-Jordan on [m | I]; every division below is exact.
    std::vector<std::vector<long long>> a(k, std::vector<long long>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
        a[i][k + i] = 1;
    }
    long long sign = 1, denom = 1;
    for (int p = 0; p < k; ++p) {
        int r = p;
        while (r < k && a[r][p] == 0) ++r;
        LCONE_CHECK(r < k, "cone matrix is singular");
        if (r != p) {
            std::swap(a[r], a[p]);
            sign = -sign;
        }
        const long long pivot = a[p][p];
        for (int i = 0; i < k; ++i) {
            if (i == p) continue;
            const long long f = a[i][p];
            for (int j = 0; j < 2 * k; ++j) {
                i128 t = (i128)pivot * a[i][j] - (i128)f * a[p][j];
                LCONE_CHECK(t % denom == 0, "fraction-free division failed");
                a[i][j] = narrow(t / denom);
            }
        }
        denom = pivot;
    }
    const long long d = a[k - 1][k - 1];
    for (int i = 0; i < k; ++i)
        LCONE_CHECK(a[i][i] == d, "elimination lost diagonal agreement");
    const long long det = sign * d;
    LCONE_CHECK(det == 1 || det == -1, "cone matrix must be unimodular");
    if (det_out) *det_out = det;

    std::vector<std::vector<long long>> inv(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            LCONE_CHECK(a[i][k + j] % d == 0, "inverse is not integral");
            inv[i][j] = a[i][k + j] / d;
        }
    return inv;
}

std::vector<SpanningVector> spanning_vectors(const ReducedWord& word) {
    ConeMatrix cm = cone_matrix(word);
    const int k = word.length();
    std::vector<std::vector<long long>> inv = inverse_unimodular(cm.rows);

    // Chamber columns are labeled by the partial quiver of their chamber set.
    std::vector<Chamber> chambers = chamber_sets(word);
    size_t next_chamber = 0;
    std::vector<SpanningVector> out;
    for (int c = 0; c < k; ++c) {
        SpanningVector sv;
        sv.word = word;
        sv.label = cm.row_labels[c];
        if (!sv.label.simple) {
            const Chamber& ch = chambers[next_chamber++];
            LCONE_CHECK(ch.pair == sv.label.pair, "chamber order mismatch");
            sv.label.quiver = partial_quiver_of(word.n, ch.label);
        }
        sv.coords.resize(k);
        for (int r = 0; r < k; ++r) {
            sv.coords[r] = inv[r][c];
            LCONE_CHECK(sv.coords[r] >= 0, "spanning vector has a negative entry");
        }
        out.push_back(std::move(sv));
    }
    LCONE_CHECK(next_chamber == chambers.size(), "chamber count mismatch");
    return out;
}

RootMultiset multiset_M(const PartialQuiver& P) {
    RootMultiset m;
    for (const Component& Y : components(P))
        for (int i = 1; i <= Y.a; ++i)
            for (int j = Y.b; j <= P.n + 1; ++j) ++m[PositiveRoot{i, j}];
    for (auto& [root, mult] : m) mult = (mult + 1) / 2;
    return m;
}

RootMultiset multiset_M_simple(int n, int j) {
    if (j < 1 || j > n) throw input_error("simple index out of range");
    RootMultiset m;
    for (int p = 1; p <= j; ++p)
        for (int q = j + 1; q <= n + 1; ++q) m[PositiveRoot{p, q}] = 1;
    return m;
}

RootMultiset root_multiset_of(const ReducedWord& word,
                              const std::vector<long long>& coords) {
    if (coords.size() != static_cast<size_t>(word.length()))
        throw input_error("coordinate vector has the wrong length");
    std::vector<PositiveRoot> roots = root_order(word);
    RootMultiset m;
    for (int p = 0; p < word.length(); ++p)
        if (coords[p] != 0) m[roots[p]] += coords[p];
    return m;
}

bool cone_contains(const ReducedWord& word, const std::vector<long long>& a) {
    if (a.size() != static_cast<size_t>(word.length()))
        throw input_error("coordinate vector has the wrong length");
    ConeMatrix cm = cone_matrix(word);
    for (const auto& row : cm.rows) {
        i128 dot = 0;
        for (size_t p = 0; p < a.size(); ++p) dot += (i128)row[p] * a[p];
        if (dot < 0) return false;
    }
    return true;
}

} // namespace lcone
