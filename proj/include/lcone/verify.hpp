#pragma once

#include <string>
#include <vector>

namespace lcone {

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    long long instances = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_seconds = 0;

    bool ok() const { return failures.empty(); }
};

/// Root multisets of spanning vectors equal the closed-form multisets,
/// over every reduced word and every label, up to rank n_max.
VerifyReport verify_multiset(int n_max = 4);

/// Exponent expansions of spanning vectors over a compatible word are
/// commutation-equivalent to the diagram reading sequence mu.
VerifyReport verify_rectangle_word(int n_max = 5);

/// The string-to-Lusztig map sends each spanning vector of a compatible
/// word to the 0/1 indicator vector of its label's diagram root set.
VerifyReport verify_theorem63(int n_max = 6);

/// Crossing-out selection agrees with the lowering operator's argmax on
/// pipeline states and on seeded random 0/1 states.
VerifyReport verify_crossing_out(int n_max = 5, int random_states = 10000,
                                 unsigned seed = 1);

/// Lusztig transition round trips are identities; string transitions map
/// spanning vectors to spanning vectors across single moves; the
/// transport-based raising operator agrees with the closed form.
VerifyReport verify_transport(int n_max = 4, int random_states = 10000,
                              unsigned seed = 1);

/// String extraction inverts monomial application on every spanning
/// vector and on seeded nonnegative combinations (cone inside string cone).
VerifyReport verify_premat(int n_max = 4, int combos = 100, unsigned seed = 1);

std::vector<VerifyReport> verify_all(unsigned seed = 1);

} // namespace lcone
