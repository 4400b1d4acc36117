#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcone/weyl.hpp"

namespace lcone {

/// All crystal-operator coordinates live in the context of the standard
/// word (n, n-1, n, ..., 1, 2, ..., n); a coordinate vector c has length
/// k = n(n+1)/2 and c_{ij} sits at the position of alpha_{ij} in that
/// word's root order.

/// 0-based position of alpha_{ij} in root_order(standard_word(n)).
int standard_root_position(int n, int i, int j);

/// f_{ij} = sum_{l>=j} c_{il} - sum_{l>=j+1} c_{i+1,l} for j in [i+1, n+1].
struct FProfile {
    int i = 0;
    std::vector<long long> values; // values[j - i - 1] = f_{ij}
};

FProfile f_profile(int n, const std::vector<long long>& c, int i);

/// Lowering operator: j0 = minimal argmax of f_{ij}; c_{i,j0} += 1 and,
/// unless j0 = i+1, c_{i+1,j0} -= 1.
std::vector<long long> ftilde(int n, std::vector<long long> c, int i);

/// Raising operator, the inverse of ftilde: acts at the maximal argmax;
/// returns nothing when epsilon is zero.
std::optional<std::vector<long long>> etilde(int n, std::vector<long long> c,
                                             int i);

/// Number of times etilde applies (= max_j f_{ij}, never negative).
long long epsilon(int n, const std::vector<long long>& c, int i);

/// The pair sequence x_m = (c_{i,i+m+1}, c_{i+1,i+m+1}), m = 0..n-i, with
/// c_{i+1,i+1} := 1 - c_{i,i+1}, encoded over {0,-,+}, reduced by crossing
/// out non-initial 0s and non-initial +- pairs, then classified.
struct SymbolSequence {
    int i = 0;
    std::string symbols;           // original sequence
    std::string reduced;           // after crossing out
    std::vector<int> reduced_pos;  // original index of each reduced symbol
    int selected = 0;              // original index m of the marked symbol
    int case_id = 0;               // 1..11
    int j0 = 0;                    // i + selected + 1
};

/// Requires every c_{i,l}, c_{i+1,l} to lie in {0,1} and never both 1.
SymbolSequence crossing_out(int n, const std::vector<long long>& c, int i);

/// Reduction and case classification of a raw symbol sequence over {0,-,+};
/// the coordinate-free back half of crossing_out.
SymbolSequence classify_symbols(int i, std::string symbols);

/// Coordinates of the monomial F~_{i_1}^{a_1} ... F~_{i_k}^{a_k} applied
/// to the highest weight element, with the rightmost factor acting first.
std::vector<long long> apply_monomial(const ReducedWord& word,
                                      const std::vector<long long>& a);

/// Greedy string extraction along the word: a_m = epsilon before applying
/// etilde^{a_m}; asserts the final state is zero.
std::vector<long long> string_extract(std::vector<long long> c,
                                      const ReducedWord& word);

/// Re-express coordinates along an explicit move path: commutation moves
/// swap the two entries; a braid move (i,j,i)->(j,i,j) maps (a,b,c) to
/// (b+c-t, t, a+b-t) with t = min(a,c).
std::vector<long long> apply_moves_R(const ReducedWord& src,
                                     const std::vector<Move>& path,
                                     std::vector<long long> c);

std::vector<long long> transition_R(const ReducedWord& src,
                                    const ReducedWord& dst,
                                    std::vector<long long> c, int limit = 5);

/// String-coordinate analogue: commutation moves swap, braid moves apply
/// T3(a,b,c) = (max(c,b-a), a+c, min(a,b-c)).
std::vector<long long> apply_moves_T(const ReducedWord& src,
                                     const std::vector<Move>& path,
                                     std::vector<long long> a);

std::vector<long long> transition_T(const ReducedWord& src,
                                    const ReducedWord& dst,
                                    std::vector<long long> a, int limit = 5);

/// String-to-Lusztig change of parametrization: apply the monomial over
/// `i`, then move the Lusztig coordinates from the standard word to `j`.
std::vector<long long> s_map(const ReducedWord& i, const ReducedWord& j,
                             const std::vector<long long>& a, int limit = 5);

/// Sum of coords_l * alpha^l as simple-root coordinates (length n).
std::vector<long long> weight_alpha(const ReducedWord& word,
                                    const std::vector<long long>& coords);

struct ConjectureClassReport {
    int class_index = 0;
    ReducedWord representative;
    int rank = 0;
    bool independent = false;
    int samples = 0;
    int linearity_violations = 0;
};

/// Per commutation class: the Lusztig coordinates (in the context of the
/// block word (1,3,5,...,2,4,6,...)) of the class's chamber and simple
/// basis elements, their rational rank, and sampled additivity checks of
/// the transition to the opposite block word. Report only, never throws
/// on a violation.
struct ConjectureReport {
    int n = 0;
    ReducedWord k_word;
    ReducedWord k_prime;
    std::vector<ConjectureClassReport> classes;
    std::vector<std::pair<int, int>> braid_edges;
};

ConjectureReport conjecture_explore(int n, int samples = 100,
                                    unsigned seed = 1);

/// The word made of the block (odd letters ascending, then even letters
/// ascending) repeated cyclically to length k; reduced for w0.
ReducedWord block_word(int n, bool evens_first = false);

} // namespace lcone
