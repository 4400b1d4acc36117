#include "lcone/crystal.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "lcone/cone.hpp"

namespace lcone {

namespace {

using i128 = __int128;

// pos[i][j] = position of alpha_{ij} in the standard word's root order
const std::vector<std::vector<int>>& position_table(int n) {
    constexpr int kMaxCached = 16;
    if (n < 1) throw input_error("rank must be >= 1");
    auto build = [](int m) {
        std::vector<std::vector<int>> pos(m + 2, std::vector<int>(m + 2, -1));
        std::vector<PositiveRoot> order = root_order(standard_word(m));
        for (size_t l = 0; l < order.size(); ++l)
            pos[order[l].lo][order[l].hi] = static_cast<int>(l);
        return pos;
    };
    static const auto cache = [&] {
        std::vector<std::vector<std::vector<int>>> all(kMaxCached + 1);
        for (int m = 1; m <= kMaxCached; ++m) all[m] = build(m);
        return all;
    }();
    if (n > kMaxCached)
        throw capacity_error("crystal operations limited to n <= 16");
    return cache[n];
}

void check_state(int n, const std::vector<long long>& c, int i) {
    if (i < 1 || i > n) throw input_error("letter out of range [1,n]");
    if (c.size() != static_cast<size_t>(longest_length(n)))
        throw input_error("coordinate vector has the wrong length");
}

} // namespace

int standard_root_position(int n, int i, int j) {
    if (i < 1 || j <= i || j > n + 1)
        throw input_error("not a positive root index pair");
    return position_table(n)[i][j];
}

FProfile f_profile(int n, const std::vector<long long>& c, int i) {
    check_state(n, c, i);
    const auto& pos = position_table(n);
    FProfile fp;
    fp.i = i;
    fp.values.assign(n + 1 - i, 0);
    // f_{i,n+1} = c_{i,n+1}; going down, f_{i,j} = f_{i,j+1} + c_{ij} - c_{i+1,j+1}
    fp.values.back() = c[pos[i][n + 1]];
    for (int j = n; j >= i + 1; --j)
        fp.values[j - i - 1] =
            fp.values[j - i] + c[pos[i][j]] - c[pos[i + 1][j + 1]];
    return fp;
}

std::vector<long long> ftilde(int n, std::vector<long long> c, int i) {
    FProfile fp = f_profile(n, c, i);
    long long best = *std::max_element(fp.values.begin(), fp.values.end());
    int j0 = i + 1;
    while (fp.values[j0 - i - 1] != best) ++j0;
    const auto& pos = position_table(n);
    ++c[pos[i][j0]];
    if (j0 != i + 1) {
        --c[pos[i + 1][j0]];
        LCONE_CHECK(c[pos[i + 1][j0]] >= 0,
                    "lowering operator produced a negative coordinate");
    }
    return c;
}

long long epsilon(int n, const std::vector<long long>& c, int i) {
    FProfile fp = f_profile(n, c, i);
    long long best = *std::max_element(fp.values.begin(), fp.values.end());
    return std::max(best, 0LL);
}

std::optional<std::vector<long long>> etilde(int n, std::vector<long long> c,
                                             int i) {
    FProfile fp = f_profile(n, c, i);
    long long best = *std::max_element(fp.values.begin(), fp.values.end());
    if (best <= 0) return std::nullopt;
    int j1 = n + 1;
    while (fp.values[j1 - i - 1] != best) --j1;
    const auto& pos = position_table(n);
    --c[pos[i][j1]];
    LCONE_CHECK(c[pos[i][j1]] >= 0,
                "raising operator produced a negative coordinate");
    if (j1 != i + 1) ++c[pos[i + 1][j1]];
    return c;
}

SymbolSequence crossing_out(int n, const std::vector<long long>& c, int i) {
    check_state(n, c, i);
    const auto& pos = position_table(n);
    SymbolSequence seq;
    seq.i = i;
    for (int m = 0; m <= n - i; ++m) {
        int l = i + m + 1;
        long long a = c[pos[i][l]];
        long long b = l == i + 1 ? 1 - a : c[pos[i + 1][l]];
        if (a < 0 || a > 1 || b < 0 || b > 1)
            throw input_error("crossing out needs 0/1 coordinates");
        if (a == 1 && b == 1)
            throw input_error("crossing out: both paired coordinates are 1");
        seq.symbols += a == 0 ? (b == 0 ? '0' : '-') : '+';
    }
    std::string symbols = std::move(seq.symbols);
    seq = classify_symbols(i, std::move(symbols));
    return seq;
}

SymbolSequence classify_symbols(int i, std::string symbols) {
    SymbolSequence seq;
    seq.i = i;
    seq.symbols = std::move(symbols);
    LCONE_CHECK(!seq.symbols.empty(), "empty symbol sequence");

    // Cross out non-initial 0's, then cancel non-initial +- pairs; the
    // symbol at position 0 (and a +- pair starting there) is protected.
    std::string red;
    std::vector<int> rpos;
    for (int m = 0; m < static_cast<int>(seq.symbols.size()); ++m) {
        char s = seq.symbols[m];
        if (m > 0 && s == '0') continue;
        if (s == '-' && !red.empty() && red.back() == '+' && red.size() >= 2) {
            red.pop_back();
            rpos.pop_back();
            continue;
        }
        red += s;
        rpos.push_back(m);
    }
    seq.reduced = red;
    seq.reduced_pos = rpos;

    // Classify against the case table: a leading 0 or protected +- pair,
    // then a (possibly empty) run of -'s, then a (possibly empty) run of +'s.
    size_t body = 0;
    int base_case = 0;
    if (red[0] == '0') {
        body = 1;
        base_case = 1; // cases (i)-(iv)
    } else if (red[0] == '+' && red.size() >= 2 && red[1] == '-') {
        body = 2;
        base_case = 5; // cases (v)-(viii)
    } else if (red[0] == '-') {
        body = 0;
        base_case = 9; // cases (ix)-(x)
    } else {
        body = 1;
        base_case = 11; // case (xi)
    }
    size_t p = body;
    while (p < red.size() && red[p] == '-') ++p;
    size_t minus_run = p - body;
    while (p < red.size() && red[p] == '+') ++p;
    LCONE_CHECK(p == red.size(), "reduced symbol sequence has no case");
    bool has_plus = red.back() == '+';
    if (base_case == 9) {
        LCONE_CHECK(minus_run >= 1, "reduced symbol sequence has no case");
        seq.case_id = has_plus ? 9 : 10;
    } else if (base_case == 11) {
        seq.case_id = 11;
    } else {
        seq.case_id = base_case + (minus_run >= 1 ? 0 : 2) + (has_plus ? 0 : 1);
    }

    // Marked symbol: the last '-', except that a lone leading +- pair
    // (cases (vii), (viii)) and minus-free sequences mark position 0.
    size_t last_minus = red.find_last_of('-');
    size_t sel;
    if (last_minus == std::string::npos)
        sel = 0;
    else if (red[0] == '+' && last_minus == 1)
        sel = 0;
    else
        sel = last_minus;
    seq.selected = rpos[sel];
    seq.j0 = i + seq.selected + 1;
    return seq;
}

std::vector<long long> apply_monomial(const ReducedWord& word,
                                      const std::vector<long long>& a) {
    const int n = word.n;
    const int k = word.length();
    if (a.size() != static_cast<size_t>(k))
        throw input_error("exponent vector has the wrong length");
    std::vector<long long> c(longest_length(n), 0);
    for (int m = k - 1; m >= 0; --m) {
        if (a[m] < 0) throw input_error("exponents must be nonnegative");
        for (long long t = 0; t < a[m]; ++t)
            c = ftilde(n, std::move(c), word.letters[m]);
    }
    return c;
}

std::vector<long long> string_extract(std::vector<long long> c,
                                      const ReducedWord& word) {
    const int n = word.n;
    std::vector<long long> a;
    for (int m = 0; m < word.length(); ++m) {
        int i = word.letters[m];
        long long e = epsilon(n, c, i);
        for (long long t = 0; t < e; ++t) {
            auto up = etilde(n, c, i);
            LCONE_CHECK(up.has_value(), "epsilon overcounted the raisings");
            c = std::move(*up);
        }
        LCONE_CHECK(epsilon(n, c, i) == 0, "epsilon undercounted the raisings");
        a.push_back(e);
    }
    for (long long x : c)
        LCONE_CHECK(x == 0, "string extraction left a nonzero residue");
    return a;
}

std::vector<long long> apply_moves_R(const ReducedWord& src,
                                     const std::vector<Move>& path,
                                     std::vector<long long> c) {
    if (c.size() != static_cast<size_t>(src.length()))
        throw input_error("coordinate vector has the wrong length");
    for (const Move& mv : path) {
        const int p = mv.pos - 1;
        if (mv.kind == MoveKind::Commutation) {
            std::swap(c[p], c[p + 1]);
        } else {
            long long a = c[p], b = c[p + 1], d = c[p + 2];
            long long t = std::min(a, d);
            c[p] = b + d - t;
            c[p + 1] = t;
            c[p + 2] = a + b - t;
        }
    }
    return c;
}

std::vector<long long> transition_R(const ReducedWord& src,
                                    const ReducedWord& dst,
                                    std::vector<long long> c, int limit) {
    if (src == dst) return c;
    return apply_moves_R(src, move_path(src, dst, limit), std::move(c));
}

std::vector<long long> apply_moves_T(const ReducedWord& src,
                                     const std::vector<Move>& path,
                                     std::vector<long long> a) {
    if (a.size() != static_cast<size_t>(src.length()))
        throw input_error("coordinate vector has the wrong length");
    for (const Move& mv : path) {
        const int p = mv.pos - 1;
        if (mv.kind == MoveKind::Commutation) {
            std::swap(a[p], a[p + 1]);
        } else {
            long long x = a[p], y = a[p + 1], z = a[p + 2];
            a[p] = std::max(z, y - x);
            a[p + 1] = x + z;
            a[p + 2] = std::min(x, y - z);
        }
    }
    return a;
}

std::vector<long long> transition_T(const ReducedWord& src,
                                    const ReducedWord& dst,
                                    std::vector<long long> a, int limit) {
    if (src == dst) return a;
    return apply_moves_T(src, move_path(src, dst, limit), std::move(a));
}

std::vector<long long> s_map(const ReducedWord& i, const ReducedWord& j,
                             const std::vector<long long>& a, int limit) {
    std::vector<long long> c = apply_monomial(i, a);
    return transition_R(standard_word(i.n), j, std::move(c), limit);
}

std::vector<long long> weight_alpha(const ReducedWord& word,
                                    const std::vector<long long>& coords) {
    if (coords.size() != static_cast<size_t>(word.length()))
        throw input_error("coordinate vector has the wrong length");
    std::vector<PositiveRoot> order = root_order(word);
    std::vector<long long> w(word.n, 0);
    for (int l = 0; l < word.length(); ++l)
        for (int s = order[l].lo; s < order[l].hi; ++s)
            w[s - 1] += coords[l];
    return w;
}

ReducedWord block_word(int n, bool evens_first) {
    if (n < 1) throw input_error("rank must be >= 1");
    std::vector<int> block;
    for (int pass = 0; pass < 2; ++pass) {
        int start = (pass == 0) == !evens_first ? 1 : 2;
        for (int a = start; a <= n; a += 2) block.push_back(a);
    }
    std::vector<int> letters;
    for (int l = 0; l < longest_length(n); ++l)
        letters.push_back(block[l % block.size()]);
    return make_reduced_word(n, std::move(letters));
}

namespace {

// Rank over the rationals via fraction-free elimination.
int rational_rank(std::vector<std::vector<i128>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    i128 prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                i128 t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                LCONE_CHECK(t % prev == 0, "fraction-free division failed");
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace

ConjectureReport conjecture_explore(int n, int samples, unsigned seed) {
    if (n > 4)
        throw capacity_error("conjecture exploration limited to n <= 4");
    ConjectureReport rep;
    rep.n = n;
    rep.k_word = block_word(n, false);
    rep.k_prime = block_word(n, true);
    const int k = longest_length(n);
    const ReducedWord jn = standard_word(n);

    std::vector<Move> to_k = rep.k_word == jn
                                 ? std::vector<Move>{}
                                 : move_path(jn, rep.k_word);
    std::vector<Move> k_to_kp = rep.k_word == rep.k_prime
                                    ? std::vector<Move>{}
                                    : move_path(rep.k_word, rep.k_prime);

    CommutationClasses cc = commutation_classes(n);
    rep.braid_edges = cc.braid_edges;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> coeff(0, 3);

    for (size_t ci = 0; ci < cc.classes.size(); ++ci) {
        ConjectureClassReport r;
        r.class_index = static_cast<int>(ci);
        r.representative = cc.words[cc.classes[ci][0]];

        std::vector<std::vector<long long>> vecs;
        for (const SpanningVector& sv : spanning_vectors(r.representative)) {
            std::vector<long long> c = apply_monomial(r.representative, sv.coords);
            vecs.push_back(apply_moves_R(jn, to_k, std::move(c)));
        }
        std::vector<std::vector<i128>> m;
        for (const auto& v : vecs) m.emplace_back(v.begin(), v.end());
        r.rank = rational_rank(std::move(m));
        r.independent = r.rank == static_cast<int>(vecs.size());

        r.samples = samples;
        auto combine = [&](const std::vector<long long>& lambda) {
            std::vector<long long> x(k, 0);
            for (size_t t = 0; t < vecs.size(); ++t)
                for (int p = 0; p < k; ++p) x[p] += lambda[t] * vecs[t][p];
            return x;
        };
        for (int s = 0; s < samples; ++s) {
            std::vector<long long> la(vecs.size()), mu(vecs.size());
            for (auto& t : la) t = coeff(rng);
            for (auto& t : mu) t = coeff(rng);
            std::vector<long long> x = combine(la), y = combine(mu);
            std::vector<long long> xy(k), x2(k);
            for (int p = 0; p < k; ++p) {
                xy[p] = x[p] + y[p];
                x2[p] = 2 * x[p];
            }
            std::vector<long long> rx = apply_moves_R(rep.k_word, k_to_kp, x);
            std::vector<long long> ry = apply_moves_R(rep.k_word, k_to_kp, y);
            std::vector<long long> rxy = apply_moves_R(rep.k_word, k_to_kp, xy);
            std::vector<long long> rx2 = apply_moves_R(rep.k_word, k_to_kp, x2);
            bool additive = true, homogeneous = true;
            for (int p = 0; p < k; ++p) {
                if (rxy[p] != rx[p] + ry[p]) additive = false;
                if (rx2[p] != 2 * rx[p]) homogeneous = false;
            }
            if (!additive || !homogeneous) ++r.linearity_violations;
        }
        rep.classes.push_back(std::move(r));
    }
    return rep;
}

} // namespace lcone
