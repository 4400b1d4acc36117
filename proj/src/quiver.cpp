#include "lcone/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace lcone {

namespace {

// [lo, hi] bounds of the directed interval; throws if empty or disconnected.
std::pair<int, int> directed_interval(const PartialQuiver& P) {
    int lo = 0, hi = 0;
    for (int e = 2; e <= P.n; ++e) {
        if (P.by_edge[e] != EdgeDir::Undirected) {
            if (lo == 0) lo = e;
            hi = e;
        }
    }
    if (lo == 0)
        throw input_error("partial quiver has no directed edge");
    for (int e = lo; e <= hi; ++e)
        if (P.by_edge[e] == EdgeDir::Undirected)
            throw input_error("directed edges of a partial quiver must be contiguous");
    return {lo, hi};
}

} // namespace

bool PartialQuiver::is_quiver() const {
    for (int e = 2; e <= n; ++e)
        if (by_edge[e] == EdgeDir::Undirected) return false;
    return true;
}

std::string PartialQuiver::str() const {
    std::string s;
    for (int e = n; e >= 2; --e) s += static_cast<char>(by_edge[e]);
    return s;
}

PartialQuiver make_partial_quiver(int n, std::vector<EdgeDir> by_edge) {
    if (n < 2) throw input_error("partial quivers need rank >= 2");
    if (static_cast<int>(by_edge.size()) != n + 1)
        throw input_error("edge vector must have size n+1");
    PartialQuiver P{n, std::move(by_edge)};
    directed_interval(P); // validates
    return P;
}

PartialQuiver parse_partial_quiver(int n, const std::string& s) {
    if (static_cast<int>(s.size()) != n - 1)
        throw input_error("partial quiver string must have n-1 symbols");
    std::vector<EdgeDir> by_edge(n + 1, EdgeDir::Undirected);
    for (int i = 0; i < n - 1; ++i) {
        char c = s[i];
        int e = n - i;
        switch (c) {
            case 'L': by_edge[e] = EdgeDir::L; break;
            case 'R': by_edge[e] = EdgeDir::R; break;
            case '-': break;
            default: throw input_error("partial quiver symbols are L, R, -");
        }
    }
    return make_partial_quiver(n, std::move(by_edge));
}

std::vector<Component> components(const PartialQuiver& P) {
    auto [lo, hi] = directed_interval(P);
    std::vector<Component> out;
    int e = hi; // leftmost edge
    while (e >= lo) {
        EdgeDir kind = P.by_edge[e];
        int run_hi = e;
        while (e >= lo && P.by_edge[e] == kind) --e;
        int run_lo = e + 1;
        Component c;
        c.kind = kind;
        c.edge_lo = run_lo;
        c.edge_hi = run_hi;
        c.a = std::max(run_lo - 1, 1);
        c.b = std::min(run_hi + 1, P.n + 1);
        LCONE_CHECK(c.a < c.b, "component boundary indices out of order");
        out.push_back(c);
    }
    return out;
}

ChamberSet chamber_set_of(const PartialQuiver& P) {
    auto [lo, hi] = directed_interval(P);
    ChamberSet c;
    for (int e = 2; e <= P.n; ++e)
        if (P.by_edge[e] == EdgeDir::L) c.insert(e);
    if (P.by_edge[lo] == EdgeDir::R) // rightmost directed edge
        for (int x = 1; x <= lo - 1; ++x) c.insert(x);
    if (P.by_edge[hi] == EdgeDir::R) // leftmost directed edge
        for (int x = hi + 1; x <= P.n + 1; ++x) c.insert(x);
    return c;
}

bool is_legal_chamber_set(int n, const ChamberSet& c) {
    if (c.empty()) return false;
    for (int x : c)
        if (x < 1 || x > n + 1) return false;
    // Initial/final intervals [1,j], [j,n+1] never arise as chamber sets.
    int lo = *c.begin(), hi = *c.rbegin();
    bool contiguous = hi - lo + 1 == static_cast<int>(c.size());
    if (contiguous && (lo == 1 || hi == n + 1)) return false;
    return true;
}

PartialQuiver partial_quiver_of(int n, const ChamberSet& c) {
    if (!is_legal_chamber_set(n, c))
        throw input_error("illegal chamber set " + chamber_set_str(c));
    const bool has_first = c.count(1) > 0;
    const bool has_last = c.count(n + 1) > 0;
    std::vector<EdgeDir> by_edge(n + 1, EdgeDir::Undirected);

    auto min_excluded = [&] {
        for (int x = 1; x <= n + 1; ++x)
            if (!c.count(x)) return x;
        throw internal_error("chamber set is the full interval");
    };
    auto max_excluded = [&] {
        for (int x = n + 1; x >= 1; --x)
            if (!c.count(x)) return x;
        throw internal_error("chamber set is the full interval");
    };

    int lo = 0, hi = 0; // directed interval
    if (!has_first && !has_last) {
        lo = *c.begin();
        hi = *c.rbegin();
    } else if (has_first && !has_last) {
        lo = min_excluded();
        hi = *c.rbegin();
        by_edge[lo] = EdgeDir::R;
    } else if (!has_first && has_last) {
        lo = *c.begin();
        hi = max_excluded();
        by_edge[hi] = EdgeDir::R;
    } else {
        lo = min_excluded();
        hi = max_excluded();
        by_edge[lo] = EdgeDir::R;
        by_edge[hi] = EdgeDir::R;
    }
    if (lo < 2 || hi > n || lo > hi)
        throw input_error("illegal chamber set " + chamber_set_str(c));
    for (int e = lo; e <= hi; ++e)
        if (by_edge[e] == EdgeDir::Undirected)
            by_edge[e] = c.count(e) ? EdgeDir::L : EdgeDir::R;

    PartialQuiver P = make_partial_quiver(n, std::move(by_edge));
    if (chamber_set_of(P) != c)
        throw input_error("illegal chamber set " + chamber_set_str(c));
    return P;
}

bool leq(const PartialQuiver& P, const PartialQuiver& Q) {
    if (P.n != Q.n) throw input_error("leq: rank mismatch");
    for (int e = 2; e <= P.n; ++e)
        if (P.by_edge[e] != EdgeDir::Undirected && P.by_edge[e] != Q.by_edge[e])
            return false;
    return true;
}

std::vector<PartialQuiver> sub_partial_quivers(const PartialQuiver& Q) {
    auto [qlo, qhi] = directed_interval(Q);
    std::vector<PartialQuiver> out;
    for (int lo = qlo; lo <= qhi; ++lo) {
        for (int hi = lo; hi <= qhi; ++hi) {
            std::vector<EdgeDir> by_edge(Q.n + 1, EdgeDir::Undirected);
            for (int e = lo; e <= hi; ++e) by_edge[e] = Q.by_edge[e];
            out.push_back(PartialQuiver{Q.n, std::move(by_edge)});
        }
    }
    return out;
}

std::vector<PartialQuiver> all_quivers(int n) {
    if (n < 2) throw input_error("rank must be >= 2");
    std::vector<PartialQuiver> out;
    const int m = n - 1;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<EdgeDir> by_edge(n + 1, EdgeDir::Undirected);
        for (int i = 0; i < m; ++i)
            by_edge[n - i] = (mask >> i) & 1 ? EdgeDir::R : EdgeDir::L;
        out.push_back(PartialQuiver{n, std::move(by_edge)});
    }
    return out;
}

std::vector<PartialQuiver> all_partial_quivers(int n) {
    std::vector<PartialQuiver> out;
    for (int lo = 2; lo <= n; ++lo) {
        for (int hi = lo; hi <= n; ++hi) {
            int len = hi - lo + 1;
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<EdgeDir> by_edge(n + 1, EdgeDir::Undirected);
                for (int i = 0; i < len; ++i)
                    by_edge[lo + i] = (mask >> i) & 1 ? EdgeDir::R : EdgeDir::L;
                out.push_back(PartialQuiver{n, std::move(by_edge)});
            }
        }
    }
    return out;
}

std::string chamber_set_str(const ChamberSet& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int x : c) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << "}";
    return os.str();
}

} // namespace lcone
