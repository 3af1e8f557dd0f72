#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "readseq/errors.hpp"
#include "readseq/sequences.hpp"

using namespace readseq;

namespace {

// Builds a plain temporal stream where fixation i is assigned word indices[i].
struct Stream {
    std::vector<Fixation> fixations;
    std::vector<AlignedFixation> aligned;
};

Stream stream_of(const std::vector<int>& indices, double duration_ms = 200.0) {
    Stream s;
    double t = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Fixation f;
        f.participant_id = "p";
        f.page_id = "page";
        f.t_start_ms = t;
        f.duration_ms = duration_ms;
        t += duration_ms + 50.0;
        s.fixations.push_back(f);
        s.aligned.push_back({i, indices[i], 0, 0});
    }
    return s;
}

} // namespace

TEST_SUITE("sequences") {

TEST_CASE("monotone +1 steps form one sequence without regressions") {
    const Stream s = stream_of({10, 11, 12, 13});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].fixations.size() == 4);
    CHECK(seqs[0].min_index == 10);
    CHECK(seqs[0].max_index == 13);
    CHECK(seqs[0].regressions.empty());
    CHECK(seqs[0].t_start_ms == 0.0);
    CHECK(seqs[0].t_end_ms == 3 * 250.0 + 200.0);
    CHECK(seqs[0].duration_ms() == 950.0);
}

TEST_CASE("a gap of five words breaks the sequence") {
    // 10 -> 14 is a +4 step and stays; 14 -> 19 exceeds it and is outside the
    // hull, so the sequence ends before 19. The singleton at 19 is discarded.
    const Stream s = stream_of({10, 14, 19});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].fixations.size() == 2);
    CHECK(seqs[0].max_index == 14);
}

TEST_CASE("a backward step inside the hull is a regression") {
    const Stream s = stream_of({10, 12, 15, 11});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].fixations.size() == 4);
    REQUIRE(seqs[0].regressions.size() == 1);
    CHECK(seqs[0].regressions[0].from_index == 15);
    CHECK(seqs[0].regressions[0].to_index == 11);
    CHECK(seqs[0].regressions[0].fixation_index == 3);
}

TEST_CASE("hand-traced double regression") {
    const Stream s = stream_of({5, 6, 7, 6, 8, 7});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 1);
    CHECK(count_regressions(seqs) == 2);
    CHECK(seqs[0].regressions[0].from_index == 7);
    CHECK(seqs[0].regressions[0].to_index == 6);
    CHECK(seqs[0].regressions[1].from_index == 8);
    CHECK(seqs[0].regressions[1].to_index == 7);
}

TEST_CASE("forward re-read inside the hull is not a regression") {
    // 15 -> 11 regresses, then 11 -> 15 jumps forward within the hull (gap 4
    // satisfies rule 1 anyway); only the backward move counts.
    const Stream s = stream_of({10, 12, 15, 11, 15});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 1);
    CHECK(count_regressions(seqs) == 1);

    // Same but the forward re-read exceeds rule 1's reach: 15 -> 10 -> 15 has
    // a +5 step admitted only through the hull; still no regression.
    const Stream wide = stream_of({10, 14, 15, 10, 15});
    const auto wide_seqs = build_sequences(wide.aligned, wide.fixations);
    REQUIRE(wide_seqs.size() == 1);
    CHECK(wide_seqs[0].fixations.size() == 5);
    CHECK(count_regressions(wide_seqs) == 1); // only 15 -> 10
}

TEST_CASE("count_regressions sums across sequences") {
    CHECK(count_regressions({}) == 0);
    // Two separate sequences, far apart, one regression each.
    const Stream s = stream_of({10, 11, 10, 100, 101, 100});
    const auto seqs = build_sequences(s.aligned, s.fixations);
    REQUIRE(seqs.size() == 2);
    CHECK(count_regressions(seqs) == 2);
}

TEST_CASE("min_fixations threshold discards short runs") {
    const Stream s = stream_of({10, 11, 12});
    SequenceOptions opts;
    opts.min_fixations = 4;
    CHECK(build_sequences(s.aligned, s.fixations, opts).empty());
    opts.min_fixations = 3;
    CHECK(build_sequences(s.aligned, s.fixations, opts).size() == 1);
}

TEST_CASE("min_distinct_words threshold discards same-word runs") {
    // Three fixations but only one distinct word.
    const Stream s = stream_of({10, 10, 10});
    CHECK(build_sequences(s.aligned, s.fixations).empty());
    SequenceOptions opts;
    opts.min_distinct_words = 1;
    CHECK(build_sequences(s.aligned, s.fixations, opts).size() == 1);
}

TEST_CASE("invalid thresholds are rejected") {
    const Stream s = stream_of({1, 2});
    SequenceOptions opts;
    opts.min_fixations = 0;
    CHECK_THROWS_AS(build_sequences(s.aligned, s.fixations, opts), ValidationError);
}

TEST_CASE("empty stream gives no sequences") {
    CHECK(build_sequences({}, {}).empty());
}

TEST_CASE("random streams: replay, hulls, step bounds, partition") {
    std::mt19937_64 rng(20240916);
    for (int trial = 0; trial < 300; ++trial) {
        // Random index walks mixing small steps, jumps, and backtracks.
        std::vector<int> indices;
        int current = oracles::rand_int(rng, 0, 30);
        const int n = oracles::rand_int(rng, 1, 40);
        for (int i = 0; i < n; ++i) {
            const int move = oracles::rand_int(rng, 0, 9);
            if (move < 5) {
                current += oracles::rand_int(rng, 0, 4); // gentle forward
            } else if (move < 7) {
                current = std::max(0, current - oracles::rand_int(rng, 1, 6));
            } else {
                current += oracles::rand_int(rng, 5, 25); // hard jump
            }
            indices.push_back(current);
        }

        const Stream s = stream_of(indices);
        SequenceOptions opts;
        opts.min_fixations = oracles::rand_int(rng, 1, 3);
        opts.min_distinct_words = oracles::rand_int(rng, 1, 2);
        const auto seqs = build_sequences(s.aligned, s.fixations, opts);

        std::set<std::size_t> member_of_any;
        std::size_t replayed_regressions = 0;
        for (const auto& seq : seqs) {
            CHECK(static_cast<int>(seq.fixations.size()) >= opts.min_fixations);

            // Independent rule replay accepts every member and agrees on
            // regressions.
            const auto replay = oracles::replay_sequence(seq);
            CHECK(replay.valid);
            CHECK(replay.regressions == seq.regressions.size());
            replayed_regressions += replay.regressions;

            // Hull bookkeeping matches the members; hull only widens and the
            // forward reach grows by at most 4 per admitted fixation.
            int lo = seq.fixations[0].word_index;
            int hi = lo;
            for (std::size_t i = 0; i < seq.fixations.size(); ++i) {
                const int idx = seq.fixations[i].word_index;
                CHECK(idx <= hi + 4);
                const int new_lo = std::min(lo, idx);
                const int new_hi = std::max(hi, idx);
                CHECK(new_lo <= lo);
                CHECK(new_hi >= hi);
                lo = new_lo;
                hi = new_hi;
            }
            CHECK(lo == seq.min_index);
            CHECK(hi == seq.max_index);

            // Regressions strictly decrease the index.
            for (const auto& reg : seq.regressions) {
                CHECK(reg.to_index < reg.from_index);
            }

            for (const auto& af : seq.fixations) {
                CHECK(member_of_any.insert(af.fixation_index).second);
            }

            CHECK(seq.duration_ms() >= 0.0);
        }
        CHECK(member_of_any.size() <= s.aligned.size());
        CHECK(count_regressions(seqs) == replayed_regressions);
    }
}

} // TEST_SUITE
