#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lcone/errors.hpp"

namespace lcone {

/// Positive root alpha_{lo,hi} = alpha_lo + ... + alpha_{hi-1},
/// with 1 <= lo < hi <= n+1.
struct PositiveRoot {
    int lo = 0;
    int hi = 0;

    auto operator<=>(const PositiveRoot&) const = default;
    std::string str() const;
};

/// A reduced word for the longest element of the symmetric group S_{n+1}.
/// Letters take values in [1,n]; the length is always n(n+1)/2.
struct ReducedWord {
    int n = 0;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const ReducedWord&) const = default;
    std::string str() const;
};

/// Positions s < s_prime of two consecutive occurrences of the same letter
/// (nothing equal in between). Positions are 1-based.
struct MinimalPair {
    int s = 0;
    int s_prime = 0;
    int letter = 0;

    auto operator<=>(const MinimalPair&) const = default;
};

enum class MoveKind { Commutation, Braid };

/// One elementary rewrite of a reduced word. `pos` is the 1-based position of
/// the leftmost letter involved (2 letters for a commutation, 3 for a braid).
struct Move {
    MoveKind kind;
    int pos;
    ReducedWord result;
};

/// Partition of all reduced words for w0 into commutation classes, with the
/// graph whose vertices are classes and whose edges are long braid moves.
struct CommutationClasses {
    std::vector<ReducedWord> words;              // deterministic (lex) order
    std::vector<std::vector<int>> classes;       // indices into `words`
    std::vector<std::pair<int, int>> braid_edges; // class index pairs, i < j
};

int longest_length(int n); // n(n+1)/2

/// The word (n, n-1, n, n-2, n-1, n, ..., 1, 2, ..., n).
ReducedWord standard_word(int n);

bool is_reduced_w0(int n, const std::vector<int>& letters);

/// Validating constructor; throws input_error if not a reduced word for w0.
ReducedWord make_reduced_word(int n, std::vector<int> letters);

/// All reduced words for w0, in lexicographic order.
/// Refuses n > limit (the count grows superexponentially).
std::vector<ReducedWord> enumerate_reduced_words(int n, int limit = 5);

std::vector<Move> moves(const ReducedWord& word);

CommutationClasses commutation_classes(int n, int limit = 5);

/// The induced total order on positive roots:
/// position l carries s_{i_1}...s_{i_{l-1}}(alpha_{i_l}).
std::vector<PositiveRoot> root_order(const ReducedWord& word);

/// One pair per consecutive repetition of each letter; count is k - n.
std::vector<MinimalPair> minimal_pairs(const ReducedWord& word);

/// Cartier-Foata normal form under commutations s_a s_b = s_b s_a, |a-b| > 1.
/// Works for arbitrary words over [1,n], reduced or not.
std::vector<int> commutation_normal_form(int n, const std::vector<int>& w);

bool commutation_equivalent(int n, const std::vector<int>& u,
                            const std::vector<int>& v);

/// A sequence of moves turning src into dst (breadth-first search over the
/// move graph). Refuses ranks above `limit`.
std::vector<Move> move_path(const ReducedWord& src, const ReducedWord& dst,
                            int limit = 5);

std::string letters_str(const std::vector<int>& letters);

} // namespace lcone
