#include "lcone/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace lcone {

namespace {

std::string encode(const std::vector<int>& letters) {
    return std::string(letters.begin(), letters.end());
}

} // namespace

std::string PositiveRoot::str() const {
    std::ostringstream os;
    os << "a[" << lo << "," << hi << "]";
    return os.str();
}

std::string letters_str(const std::vector<int>& letters) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ",";
        os << letters[i];
    }
    os << ")";
    return os.str();
}

std::string ReducedWord::str() const { return letters_str(letters); }

int longest_length(int n) { return n * (n + 1) / 2; }

ReducedWord standard_word(int n) {
    if (n < 1) throw input_error("standard_word: rank must be >= 1");
    ReducedWord w;
    w.n = n;
    w.letters.reserve(longest_length(n));
    for (int m = n; m >= 1; --m)
        for (int a = m; a <= n; ++a) w.letters.push_back(a);
    LCONE_CHECK(is_reduced_w0(n, w.letters), "standard_word is not reduced");
    return w;
}

bool is_reduced_w0(int n, const std::vector<int>& letters) {
    if (n < 1) throw input_error("rank must be >= 1");
    for (int a : letters)
        if (a < 1 || a > n) throw input_error("letter out of range [1,n]");
    if (static_cast<int>(letters.size()) != longest_length(n)) return false;
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    for (int a : letters) std::swap(perm[a - 1], perm[a]);
    for (int i = 0; i <= n; ++i)
        if (perm[i] != n + 1 - i) return false;
    return true;
}

ReducedWord make_reduced_word(int n, std::vector<int> letters) {
    if (!is_reduced_w0(n, letters))
        throw input_error("not a reduced word for w0: " + letters_str(letters));
    return ReducedWord{n, std::move(letters)};
}

std::vector<ReducedWord> enumerate_reduced_words(int n, int limit) {
    if (n < 1) throw input_error("rank must be >= 1");
    if (n > limit)
        throw capacity_error("reduced-word enumeration limited to n <= " +
                             std::to_string(limit));
    const int k = longest_length(n);
    std::vector<ReducedWord> out;
    std::vector<int> word;
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);

    // DFS appending ascents only; every maximal chain ends at w0.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == k) {
            out.push_back(ReducedWord{n, word});
            return;
        }
        for (int a = 1; a <= n; ++a) {
            if (perm[a - 1] < perm[a]) {
                std::swap(perm[a - 1], perm[a]);
                word.push_back(a);
                self(self);
                word.pop_back();
                std::swap(perm[a - 1], perm[a]);
            }
        }
    };
    rec(rec);
    return out;
}

std::vector<Move> moves(const ReducedWord& word) {
    const auto& w = word.letters;
    const int k = word.length();
    std::vector<Move> out;
    for (int p = 0; p + 1 < k; ++p) {
        if (std::abs(w[p] - w[p + 1]) > 1) {
            ReducedWord r = word;
            std::swap(r.letters[p], r.letters[p + 1]);
            out.push_back(Move{MoveKind::Commutation, p + 1, std::move(r)});
        }
    }
    for (int p = 0; p + 2 < k; ++p) {
        if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
            ReducedWord r = word;
            r.letters[p] = w[p + 1];
            r.letters[p + 1] = w[p];
            r.letters[p + 2] = w[p + 1];
            out.push_back(Move{MoveKind::Braid, p + 1, std::move(r)});
        }
    }
    return out;
}

CommutationClasses commutation_classes(int n, int limit) {
    CommutationClasses cc;
    cc.words = enumerate_reduced_words(n, limit);
    const int m = static_cast<int>(cc.words.size());
    std::unordered_map<std::string, int> index;
    index.reserve(m * 2);
    for (int i = 0; i < m; ++i) index[encode(cc.words[i].letters)] = i;

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<std::pair<int, int>> braid_word_edges;
    for (int i = 0; i < m; ++i) {
        for (const Move& mv : moves(cc.words[i])) {
            int j = index.at(encode(mv.result.letters));
            if (mv.kind == MoveKind::Commutation) {
                int a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            } else if (i < j) {
                braid_word_edges.emplace_back(i, j);
            }
        }
    }

    std::unordered_map<int, int> root_to_class;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        auto [it, fresh] =
            root_to_class.try_emplace(r, static_cast<int>(cc.classes.size()));
        if (fresh) cc.classes.emplace_back();
        cc.classes[it->second].push_back(i);
    }
    for (auto [i, j] : braid_word_edges) {
        int a = root_to_class.at(find(i));
        int b = root_to_class.at(find(j));
        if (a > b) std::swap(a, b);
        if (a != b) cc.braid_edges.emplace_back(a, b);
    }
    std::sort(cc.braid_edges.begin(), cc.braid_edges.end());
    cc.braid_edges.erase(
        std::unique(cc.braid_edges.begin(), cc.braid_edges.end()),
        cc.braid_edges.end());
    return cc;
}

std::vector<PositiveRoot> root_order(const ReducedWord& word) {
    const int k = word.length();
    std::vector<PositiveRoot> out(k);
    for (int j = 0; j < k; ++j) {
        int a = word.letters[j];
        PositiveRoot r{a, a + 1};
        // apply s_{i_{j-1}} first, s_{i_1} last
        for (int l = j - 1; l >= 0; --l) {
            int s = word.letters[l];
            auto flip = [s](int x) { return x == s ? s + 1 : x == s + 1 ? s : x; };
            r.lo = flip(r.lo);
            r.hi = flip(r.hi);
            if (r.lo > r.hi) std::swap(r.lo, r.hi);
        }
        out[j] = r;
    }
    return out;
}

std::vector<MinimalPair> minimal_pairs(const ReducedWord& word) {
    std::vector<MinimalPair> out;
    std::vector<int> last(word.n + 1, 0); // 1-based position of last sighting
    for (int p = 1; p <= word.length(); ++p) {
        int a = word.letters[p - 1];
        if (last[a] != 0) out.push_back(MinimalPair{last[a], p, a});
        last[a] = p;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> commutation_normal_form(int n, const std::vector<int>& w) {
    for (int a : w)
        if (a < 1 || a > n) throw input_error("letter out of range [1,n]");
    std::vector<int> rest = w, out;
    out.reserve(w.size());
    while (!rest.empty()) {
        // Letters whose first occurrence is not blocked by a neighbour letter.
        std::vector<bool> blocked(n + 2, false), taken(n + 2, false);
        std::vector<size_t> first_pos;
        for (size_t p = 0; p < rest.size(); ++p) {
            int a = rest[p];
            if (!blocked[a] && !taken[a]) {
                taken[a] = true;
                first_pos.push_back(p);
            }
            blocked[a] = true;
            if (a > 1) blocked[a - 1] = true;
            if (a < n) blocked[a + 1] = true;
        }
        std::sort(first_pos.begin(), first_pos.end(),
                  [&](size_t x, size_t y) { return rest[x] < rest[y]; });
        std::vector<bool> drop(rest.size(), false);
        for (size_t p : first_pos) {
            out.push_back(rest[p]);
            drop[p] = true;
        }
        std::vector<int> next;
        next.reserve(rest.size());
        for (size_t p = 0; p < rest.size(); ++p)
            if (!drop[p]) next.push_back(rest[p]);
        rest.swap(next);
    }
    return out;
}

bool commutation_equivalent(int n, const std::vector<int>& u,
                            const std::vector<int>& v) {
    if (u.size() != v.size()) return false;
    return commutation_normal_form(n, u) == commutation_normal_form(n, v);
}

std::vector<Move> move_path(const ReducedWord& src, const ReducedWord& dst,
                            int limit) {
    if (src.n != dst.n) throw input_error("move_path: rank mismatch");
    if (src.n > limit)
        throw capacity_error("move_path limited to n <= " +
                             std::to_string(limit));
    if (!is_reduced_w0(src.n, src.letters) || !is_reduced_w0(dst.n, dst.letters))
        throw input_error("move_path: inputs must be reduced words for w0");
    if (src.letters == dst.letters) return {};

    struct Step {
        std::string from;
        Move move;
    };
    std::unordered_map<std::string, Step> seen;
    std::deque<std::string> queue;
    std::unordered_map<std::string, ReducedWord> decode;
    const std::string start = encode(src.letters);
    const std::string goal = encode(dst.letters);
    decode[start] = src;
    queue.push_back(start);
    seen[start] = Step{start, Move{MoveKind::Commutation, 0, src}};

    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (Move& mv : moves(decode.at(cur))) {
            std::string key = encode(mv.result.letters);
            if (seen.count(key)) continue;
            decode[key] = mv.result;
            seen[key] = Step{cur, mv};
            if (key == goal) {
                std::vector<Move> path;
                for (std::string at = goal; at != start; at = seen.at(at).from)
                    path.push_back(seen.at(at).move);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(key);
        }
    }
    throw internal_error("move_path: no path found (graph should be connected)");
}

} // namespace lcone
