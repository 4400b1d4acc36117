#include "lcone/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "lcone/cone.hpp"
#include "lcone/crystal.hpp"
#include "lcone/rectangle.hpp"
#include "lcone/wiring.hpp"

namespace lcone {

namespace {

class Timer {
  public:
    explicit Timer(VerifyReport& r) : r_(r) {}
    ~Timer() {
        r_.elapsed_seconds =
            std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    VerifyReport& r_;
    clock::time_point start_ = clock::now();
};

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(const std::vector<int>& v) {
    return vec_str(std::vector<long long>(v.begin(), v.end()));
}

std::string multiset_str(const RootMultiset& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [r, c] : m) {
        os << (first ? "" : ", ") << r.str() << "x" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

void fail(VerifyReport& r, std::string input, std::string expected,
          std::string got) {
    r.failures.push_back(
        {std::move(input), std::move(expected), std::move(got)});
}

int argmax_j0(int n, const std::vector<long long>& c, int i) {
    FProfile fp = f_profile(n, c, i);
    long long best = fp.values[0];
    int j0 = i + 1;
    for (size_t t = 1; t < fp.values.size(); ++t)
        if (fp.values[t] > best) {
            best = fp.values[t];
            j0 = i + 1 + static_cast<int>(t);
        }
    return j0;
}

std::vector<int> mu_of_label(int n, const ConeLabel& label) {
    return label.simple ? mu(diagram_simple(n, label.j))
                        : mu(diagram(label.quiver));
}

std::vector<int> v_of_label(int n, const ConeLabel& label) {
    return label.simple ? v_vector(diagram_simple(n, label.j))
                        : v_vector(diagram(label.quiver));
}

} // namespace

VerifyReport verify_multiset(int n_max) {
    VerifyReport r;
    r.suite = "multiset";
    Timer t(r);
    for (int n = 1; n <= n_max; ++n) {
        for (const ReducedWord& w : enumerate_reduced_words(n)) {
            for (const SpanningVector& sv : spanning_vectors(w)) {
                RootMultiset want = sv.label.simple
                                        ? multiset_M_simple(n, sv.label.j)
                                        : multiset_M(sv.label.quiver);
                RootMultiset got = root_multiset_of(w, sv.coords);
                ++r.instances;
                if (got != want)
                    fail(r, w.str() + " label " + sv.label.str(),
                         multiset_str(want), multiset_str(got));
            }
        }
    }
    return r;
}

VerifyReport verify_rectangle_word(int n_max) {
    VerifyReport r;
    r.suite = "rectangle-word";
    Timer t(r);
    for (int n = 2; n <= n_max; ++n) {
        for (const PartialQuiver& Q : all_quivers(n)) {
            ReducedWord w = compatible_word(Q);
            for (const SpanningVector& sv : spanning_vectors(w)) {
                std::vector<int> expansion;
                for (int p = 0; p < w.length(); ++p)
                    for (long long x = 0; x < sv.coords[p]; ++x)
                        expansion.push_back(w.letters[p]);
                std::vector<int> want = mu_of_label(n, sv.label);
                ++r.instances;
                if (!commutation_equivalent(n, expansion, want))
                    fail(r, Q.str() + " label " + sv.label.str(),
                         "~ " + vec_str(want), vec_str(expansion));
            }
        }
    }
    return r;
}

VerifyReport verify_theorem63(int n_max) {
    VerifyReport r;
    r.suite = "theorem63";
    Timer t(r);
    for (int n = 2; n <= n_max; ++n) {
        const ReducedWord jn = standard_word(n);
        for (const PartialQuiver& Q : all_quivers(n)) {
            ReducedWord w = compatible_word(Q);
            for (const SpanningVector& sv : spanning_vectors(w)) {
                std::vector<long long> got = s_map(w, jn, sv.coords);
                std::vector<int> want = v_of_label(n, sv.label);
                ++r.instances;
                if (std::vector<long long>(want.begin(), want.end()) != got)
                    fail(r, Q.str() + " label " + sv.label.str(),
                         vec_str(want), vec_str(got));
            }
        }
    }
    return r;
}

VerifyReport verify_crossing_out(int n_max, int random_states, unsigned seed) {
    VerifyReport r;
    r.suite = "crossing-out";
    Timer t(r);

    auto check_state = [&](int n, const std::vector<long long>& c, int i) {
        SymbolSequence seq = crossing_out(n, c, i);
        int want = argmax_j0(n, c, i);
        ++r.instances;
        if (seq.j0 != want)
            fail(r,
                 "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                     " c=" + vec_str(c),
                 "j0=" + std::to_string(want), "j0=" + std::to_string(seq.j0));
    };
    auto checkable = [&](int n, const std::vector<long long>& c, int i) {
        for (int l = i + 1; l <= n + 1; ++l) {
            long long a = c[standard_root_position(n, i, l)];
            long long b = l == i + 1 ? 1 - a
                                     : c[standard_root_position(n, i + 1, l)];
            if (a < 0 || a > 1 || b < 0 || b > 1 || (a == 1 && b == 1))
                return false;
        }
        return true;
    };

    // States visited while building the monomials of the main pipeline.
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
        for (const PartialQuiver& Q : all_quivers(n)) {
            ReducedWord w = compatible_word(Q);
            for (const SpanningVector& sv : spanning_vectors(w)) {
                std::vector<long long> c(longest_length(n), 0);
                for (int m = w.length() - 1; m >= 0; --m) {
                    int i = w.letters[m];
                    for (long long x = 0; x < sv.coords[m]; ++x) {
                        if (checkable(n, c, i)) check_state(n, c, i);
                        c = ftilde(n, std::move(c), i);
                    }
                }
            }
        }
    }

    // Seeded random 0/1 states with the paired-ones conflicts cleared.
    std::mt19937 rng(seed);
    for (int n = 1; n <= n_max; ++n) {
        const int k = longest_length(n);
        std::uniform_int_distribution<int> bit(0, 1);
        std::uniform_int_distribution<int> letter(1, n);
        for (int s = 0; s < random_states; ++s) {
            std::vector<long long> c(k);
            for (auto& x : c) x = bit(rng);
            int i = letter(rng);
            for (int l = i + 2; l <= n + 1; ++l) {
                int pi = standard_root_position(n, i, l);
                int pj = standard_root_position(n, i + 1, l);
                if (c[pi] == 1 && c[pj] == 1) c[pj] = 0;
            }
            check_state(n, c, i);
        }
    }
    return r;
}

VerifyReport verify_transport(int n_max, int random_states, unsigned seed) {
    VerifyReport r;
    r.suite = "transport";
    Timer t(r);
    std::mt19937 rng(seed);

    for (int n = 1; n <= n_max; ++n) {
        const int k = longest_length(n);
        const ReducedWord jn = standard_word(n);
        std::vector<ReducedWord> words = enumerate_reduced_words(n);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        std::uniform_int_distribution<long long> entry(0, 4);

        // Round trips between random word pairs are identities.
        for (int s = 0; s < 50; ++s) {
            const ReducedWord& u = words[pick(rng)];
            const ReducedWord& v = words[pick(rng)];
            std::vector<long long> c(k);
            for (auto& x : c) x = entry(rng);
            std::vector<long long> back =
                transition_R(v, u, transition_R(u, v, c));
            ++r.instances;
            if (back != c)
                fail(r, u.str() + " <-> " + v.str() + " c=" + vec_str(c),
                     vec_str(c), vec_str(back));
        }

        // String transitions across one move send labeled spanning vectors
        // to the equally labeled spanning vectors of the neighbour word.
        std::map<std::vector<int>, std::vector<SpanningVector>> sv_cache;
        auto svs_of = [&](const ReducedWord& w)
            -> const std::vector<SpanningVector>& {
            auto [it, fresh] = sv_cache.try_emplace(w.letters);
            if (fresh) it->second = spanning_vectors(w);
            return it->second;
        };
        for (const ReducedWord& u : words) {
            const auto& svu = svs_of(u);
            for (const Move& mv : moves(u)) {
                const auto& svv = svs_of(mv.result);
                std::map<std::string, std::vector<long long>> by_label;
                for (const SpanningVector& sv : svv)
                    by_label[sv.label.str()] = sv.coords;
                for (const SpanningVector& sv : svu) {
                    auto it = by_label.find(sv.label.str());
                    if (it == by_label.end()) continue;
                    std::vector<long long> got =
                        apply_moves_T(u, {mv}, sv.coords);
                    ++r.instances;
                    if (got != it->second)
                        fail(r,
                             u.str() + " -> " + mv.result.str() + " label " +
                                 sv.label.str(),
                             vec_str(it->second), vec_str(got));
                }
            }
        }

        // Transport-based raising operator versus the closed form.
        std::vector<std::vector<Move>> fwd(n + 1), bwd(n + 1);
        std::vector<ReducedWord> head(n + 1);
        for (int i = 1; i <= n; ++i) {
            for (const ReducedWord& w : words)
                if (w.letters[0] == i) {
                    head[i] = w;
                    break;
                }
            fwd[i] = jn == head[i] ? std::vector<Move>{}
                                   : move_path(jn, head[i]);
            bwd[i] = jn == head[i] ? std::vector<Move>{}
                                   : move_path(head[i], jn);
        }
        std::uniform_int_distribution<int> letter(1, n);
        for (int s = 0; s < random_states; ++s) {
            std::vector<long long> c(k);
            for (auto& x : c) x = entry(rng);
            int i = letter(rng);
            std::vector<long long> ct = apply_moves_R(jn, fwd[i], c);
            long long eps_transport = ct[0];
            long long eps_fast = epsilon(n, c, i);
            ++r.instances;
            if (eps_transport != eps_fast) {
                fail(r, "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                            " c=" + vec_str(c),
                     "eps=" + std::to_string(eps_transport),
                     "eps=" + std::to_string(eps_fast));
                continue;
            }
            if (eps_fast == 0) continue;
            --ct[0];
            std::vector<long long> via_transport =
                apply_moves_R(head[i], bwd[i], std::move(ct));
            auto via_fast = etilde(n, c, i);
            ++r.instances;
            if (!via_fast || *via_fast != via_transport)
                fail(r, "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                            " c=" + vec_str(c),
                     vec_str(via_transport),
                     via_fast ? vec_str(*via_fast) : "none");
        }
    }
    return r;
}

VerifyReport verify_premat(int n_max, int combos, unsigned seed) {
    VerifyReport r;
    r.suite = "premat";
    Timer t(r);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> coeff(0, 2);

    auto round_trip = [&](const ReducedWord& w, const std::vector<long long>& a,
                          const std::string& what) {
        std::vector<long long> back =
            string_extract(apply_monomial(w, a), w);
        ++r.instances;
        if (back != a)
            fail(r, w.str() + " " + what + " a=" + vec_str(a), vec_str(a),
                 vec_str(back));
    };

    for (int n = 1; n <= n_max; ++n) {
        const int k = longest_length(n);
        for (const ReducedWord& w : enumerate_reduced_words(n)) {
            std::vector<SpanningVector> svs = spanning_vectors(w);
            for (const SpanningVector& sv : svs)
                round_trip(w, sv.coords, "label " + sv.label.str());
            for (int s = 0; s < combos; ++s) {
                std::vector<long long> a(k, 0);
                for (const SpanningVector& sv : svs) {
                    long long lambda = coeff(rng);
                    for (int p = 0; p < k; ++p) a[p] += lambda * sv.coords[p];
                }
                round_trip(w, a, "combo");
            }
        }
    }
    return r;
}

std::vector<VerifyReport> verify_all(unsigned seed) {
    return {verify_multiset(),      verify_rectangle_word(),
            verify_theorem63(),     verify_crossing_out(5, 10000, seed),
            verify_transport(4, 10000, seed), verify_premat(4, 100, seed)};
}

} // namespace lcone
