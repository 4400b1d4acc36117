#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lcone/errors.hpp"

namespace lcone {

enum class EdgeDir : char { L = 'L', R = 'R', Undirected = '-' };

/// A type-A_n quiver with a nonempty contiguous interval of directed edges,
/// the rest undirected. Edges are numbered 2..n starting at the right hand
/// end; the string form reads edge n first ("LRL-" has edge 5 = L for n=5).
struct PartialQuiver {
    int n = 0;
    std::vector<EdgeDir> by_edge; // size n+1; indices 2..n meaningful

    EdgeDir edge(int e) const { return by_edge[e]; }
    bool is_quiver() const; // all edges directed
    std::string str() const;
    bool operator==(const PartialQuiver&) const = default;
    bool operator<(const PartialQuiver& o) const {
        return std::tie(n, by_edge) < std::tie(o.n, o.by_edge);
    }
};

/// Maximal same-orientation run with its boundary edge numbers:
/// a = number of the leftmost edge to the right of the run (1 if none),
/// b = number of the rightmost edge to the left of the run (n+1 if none).
struct Component {
    EdgeDir kind = EdgeDir::Undirected;
    int edge_lo = 0; // smallest edge number in the run
    int edge_hi = 0; // largest edge number in the run
    int a = 0;
    int b = 0;

    bool operator==(const Component&) const = default;
};

using ChamberSet = std::set<int>; // subset of [1, n+1]

PartialQuiver parse_partial_quiver(int n, const std::string& s);
PartialQuiver make_partial_quiver(int n, std::vector<EdgeDir> by_edge);

/// Components ordered left to right (decreasing edge numbers).
std::vector<Component> components(const PartialQuiver& P);

ChamberSet chamber_set_of(const PartialQuiver& P);

/// Inverse of chamber_set_of; throws input_error on illegal chamber sets
/// (initial or final intervals of [1,n+1], including the empty and full set).
PartialQuiver partial_quiver_of(int n, const ChamberSet& c);

bool is_legal_chamber_set(int n, const ChamberSet& c);

/// P <= Q: every directed edge of P is directed the same way in Q.
bool leq(const PartialQuiver& P, const PartialQuiver& Q);

/// All partial quivers P <= Q; size n(n-1)/2 when Q is a full quiver.
std::vector<PartialQuiver> sub_partial_quivers(const PartialQuiver& Q);

/// Every full quiver of rank n (2^{n-1} of them), in lexicographic order.
std::vector<PartialQuiver> all_quivers(int n);

/// Every partial quiver of rank n.
std::vector<PartialQuiver> all_partial_quivers(int n);

std::string chamber_set_str(const ChamberSet& c);

} // namespace lcone
