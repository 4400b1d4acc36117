#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcone/quiver.hpp"
#include "lcone/weyl.hpp"

namespace lcone {

/// Label of an inequality row / inverse column: either a simple index
/// j in [1,n] or the partial quiver of a bounded chamber.
struct ConeLabel {
    bool simple = false;
    int j = 0;                   // meaningful when simple
    MinimalPair pair;            // meaningful when !simple
    PartialQuiver quiver;        // meaningful when !simple

    std::string str() const;
};

/// The k x k unimodular matrix cutting out the cone of a reduced word:
/// a vector lies in the cone iff rows * a >= 0 entrywise. The first n rows
/// assert nonnegativity at the simple-root positions; the remaining k-n
/// rows carry one inequality per minimal pair.
struct ConeMatrix {
    ReducedWord word;
    std::vector<std::vector<long long>> rows;
    std::vector<ConeLabel> row_labels;
    long long det = 0; // always +1 or -1
};

struct SpanningVector {
    ReducedWord word;
    ConeLabel label;
    std::vector<long long> coords; // a column of the inverse; nonnegative
};

using RootMultiset = std::map<PositiveRoot, long long>;

ConeMatrix cone_matrix(const ReducedWord& word);

/// Exact inverse of an integer matrix with determinant +-1
/// (fraction-free Gauss-Jordan elimination). Throws internal_error if the
/// matrix is singular or the determinant is not a unit.
std::vector<std::vector<long long>> inverse_unimodular(
    const std::vector<std::vector<long long>>& m, long long* det_out = nullptr);

/// Columns of the inverse of cone_matrix, labeled positionally; chamber
/// columns carry the partial quiver recovered from the chamber set.
std::vector<SpanningVector> spanning_vectors(const ReducedWord& word);

/// Roots alpha_{ij} with i <= a(Y) and b(Y) <= j, unioned over the
/// components Y of P with multiplicities, then ceiling-halved.
RootMultiset multiset_M(const PartialQuiver& P);

/// Roots alpha_{pq} with p <= j < q, each with multiplicity 1.
RootMultiset multiset_M_simple(int n, int j);

/// Multiset sending each positive root of the word's root order to the
/// coordinate sitting at its position (used to compare against multiset_M).
RootMultiset root_multiset_of(const ReducedWord& word,
                              const std::vector<long long>& coords);

bool cone_contains(const ReducedWord& word, const std::vector<long long>& a);

} // namespace lcone
