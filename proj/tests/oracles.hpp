// Independent reference implementations used only by tests. These stay
// deliberately naive (exhaustive enumeration, literal rule replay) so they
// cannot share a bug with the library code they check.
#ifndef READSEQ_TESTS_ORACLES_HPP
#define READSEQ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "readseq/alignment.hpp"
#include "readseq/sequences.hpp"

namespace oracles {

// ---- Viterbi: exhaustive path enumeration ------------------------------

inline double transition(int from, int to, readseq::Eq1Form form) {
    const double term = form == readseq::Eq1Form::difference
                            ? 1.0 - (static_cast<double>(to) - static_cast<double>(from))
                            : 1.0 - static_cast<double>(to) - static_cast<double>(from);
    return term * term;
}

inline double path_cost(const std::vector<readseq::CandidateSet>& sets,
                        const std::vector<std::size_t>& choice, readseq::Eq1Form form) {
    double cost = 0.0;
    for (std::size_t t = 0; t < sets.size(); ++t) {
        const double rank = static_cast<double>(choice[t]);
        cost += rank * rank;
        if (t + 1 < sets.size()) {
            cost += transition(sets[t].ranked[choice[t]].word_index,
                               sets[t + 1].ranked[choice[t + 1]].word_index, form);
        }
    }
    return cost;
}

struct BruteViterbi {
    double min_cost = 0.0;
    std::size_t n_minima = 0;
    std::vector<std::size_t> best_choice; // first minimum in odometer order
};

inline BruteViterbi brute_force_viterbi(const std::vector<readseq::CandidateSet>& sets,
                                        readseq::Eq1Form form) {
    BruteViterbi result;
    std::vector<std::size_t> choice(sets.size(), 0);
    bool first = true;
    while (true) {
        const double cost = path_cost(sets, choice, form);
        if (first || cost < result.min_cost) {
            result.min_cost = cost;
            result.n_minima = 1;
            result.best_choice = choice;
            first = false;
        } else if (cost == result.min_cost) {
            result.n_minima += 1;
        }
        std::size_t t = sets.size();
        while (t-- > 0) {
            if (++choice[t] < sets[t].ranked.size()) break;
            choice[t] = 0;
            if (t == 0) return result;
        }
        if (sets.empty()) return result;
    }
}

// ---- Sequences: literal replay of the admission rules ------------------

// Re-checks that every member of an emitted sequence would be admitted given
// the members before it, and recounts regressions on the way.
struct SequenceReplay {
    bool valid = true;
    std::size_t regressions = 0;
};

inline SequenceReplay replay_sequence(const readseq::ReadingSequence& seq) {
    SequenceReplay replay;
    if (seq.fixations.empty()) {
        replay.valid = false;
        return replay;
    }
    int lo = seq.fixations[0].word_index;
    int hi = lo;
    int prev = lo;
    for (std::size_t i = 1; i < seq.fixations.size(); ++i) {
        const int idx = seq.fixations[i].word_index;
        const bool rule1 = prev <= idx && idx <= prev + 4;
        const bool rule2 = lo <= idx && idx <= hi;
        if (!rule1 && !rule2) {
            replay.valid = false;
            return replay;
        }
        if (!rule1 && idx < prev) replay.regressions += 1;
        lo = std::min(lo, idx);
        hi = std::max(hi, idx);
        prev = idx;
    }
    return replay;
}

// ---- Mann-Whitney: exact p by enumerating label assignments ------------

// Doubled midranks of the pooled sample so all arithmetic stays integral.
inline std::vector<std::int64_t> doubled_midranks(std::vector<double> pooled) {
    std::sort(pooled.begin(), pooled.end());
    std::vector<std::int64_t> ranks(pooled.size());
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[k] = static_cast<std::int64_t>(i + j + 2);
        }
        i = j + 1;
    }
    return ranks;
}

// Enumerates every C(n, na) assignment of pooled values to the first sample
// and counts assignments at least as extreme as the observed one.
inline double mwu_exact_oracle(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = doubled_midranks(pooled);

    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    const auto rank_of = [&](double v) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        return ranks[static_cast<std::size_t>(it - sorted.begin())];
    };

    const auto na = static_cast<std::int64_t>(a.size());
    const auto nb = static_cast<std::int64_t>(b.size());
    const auto n = na + nb;
    std::int64_t r2_obs = 0;
    for (const double v : a) r2_obs += rank_of(v);
    const std::int64_t u2_obs = r2_obs - na * (na + 1);
    const std::int64_t m2 = na * nb;
    const std::int64_t dev_obs = std::llabs(u2_obs - m2);

    // Index combinations of size na out of n.
    std::vector<std::int64_t> picked(static_cast<std::size_t>(na));
    std::iota(picked.begin(), picked.end(), 0);
    std::uint64_t tail = 0, total = 0;
    while (true) {
        std::int64_t r2 = 0;
        for (const auto idx : picked) r2 += ranks[static_cast<std::size_t>(idx)];
        const std::int64_t u2 = r2 - na * (na + 1);
        if (std::llabs(u2 - m2) >= dev_obs) tail += 1;
        total += 1;

        // next combination
        std::int64_t pos = na - 1;
        while (pos >= 0 && picked[static_cast<std::size_t>(pos)] == n - na + pos) --pos;
        if (pos < 0) break;
        picked[static_cast<std::size_t>(pos)] += 1;
        for (std::int64_t q = pos + 1; q < na; ++q) {
            picked[static_cast<std::size_t>(q)] = picked[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return static_cast<double>(tail) / static_cast<double>(total);
}

// ---- Deterministic helpers for random test data ------------------------

inline int rand_int(std::mt19937_64& rng, int lo, int hi) { // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double rand01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// A random reading line with hand-built candidate sets (sorted, ranked).
inline std::vector<readseq::CandidateSet> random_candidate_sets(std::mt19937_64& rng,
                                                                int max_fixations,
                                                                int max_candidates) {
    const int n = rand_int(rng, 1, max_fixations);
    std::vector<readseq::CandidateSet> sets(static_cast<std::size_t>(n));
    for (auto& set : sets) {
        const int k = rand_int(rng, 1, max_candidates);
        double distance = rand01(rng) * 10.0;
        std::vector<int> used;
        for (int c = 0; c < k; ++c) {
            int idx = rand_int(rng, 0, 19);
            while (std::find(used.begin(), used.end(), idx) != used.end()) {
                idx = rand_int(rng, 0, 19);
            }
            used.push_back(idx);
            set.ranked.push_back({idx, distance});
            distance += 0.5 + rand01(rng) * 5.0; // strictly increasing
        }
    }
    return sets;
}

} // namespace oracles

#endif
