#include "readseq/sequences.hpp"

#include <algorithm>
#include <set>

#include "readseq/errors.hpp"

namespace readseq {

namespace {

bool keep_sequence(const ReadingSequence& seq, const SequenceOptions& opts) {
    if (static_cast<int>(seq.fixations.size()) < opts.min_fixations) return false;
    std::set<int> distinct;
    for (const auto& af : seq.fixations) distinct.insert(af.word_index);
    return static_cast<int>(distinct.size()) >= opts.min_distinct_words;
}

} // namespace

std::vector<ReadingSequence> build_sequences(const std::vector<AlignedFixation>& aligned,
                                             const std::vector<Fixation>& page_fixations,
                                             const SequenceOptions& opts) {
    if (opts.min_fixations < 1 || opts.min_distinct_words < 1) {
        throw ValidationError("sequence thresholds must be >= 1");
    }
    for (const auto& af : aligned) {
        if (af.fixation_index >= page_fixations.size()) {
            throw ValidationError("aligned fixation index out of range");
        }
    }

    std::vector<ReadingSequence> sequences;
    ReadingSequence open;
    bool has_open = false;
    int prev_index = 0; // word index of the previous admitted fixation

    const auto start_sequence = [&](const AlignedFixation& af) {
        open = ReadingSequence{};
        const Fixation& f = page_fixations[af.fixation_index];
        open.fixations.push_back(af);
        open.min_index = open.max_index = af.word_index;
        open.t_start_ms = f.t_start_ms;
        open.t_end_ms = f.t_end_ms();
        prev_index = af.word_index;
        has_open = true;
    };

    const auto close_sequence = [&] {
        if (has_open && keep_sequence(open, opts)) {
            sequences.push_back(std::move(open));
        }
        has_open = false;
    };

    for (const auto& af : aligned) {
        if (!has_open) {
            start_sequence(af);
            continue;
        }

        const int idx = af.word_index;
        const bool forward_rule = prev_index <= idx && idx <= prev_index + 4;
        const bool hull_rule = open.min_index <= idx && idx <= open.max_index;

        if (!forward_rule && !hull_rule) {
            close_sequence();
            start_sequence(af);
            continue;
        }

        if (!forward_rule && idx < prev_index) {
            // Hull-only backward admission: a regression.
            open.regressions.push_back({af.fixation_index, prev_index, idx});
        }

        const Fixation& f = page_fixations[af.fixation_index];
        open.fixations.push_back(af);
        open.min_index = std::min(open.min_index, idx);
        open.max_index = std::max(open.max_index, idx);
        open.t_end_ms = std::max(open.t_end_ms, f.t_end_ms());
        prev_index = idx;
    }
    close_sequence();
    return sequences;
}

std::size_t count_regressions(const std::vector<ReadingSequence>& seqs) {
    std::size_t total = 0;
    for (const auto& seq : seqs) total += seq.regressions.size();
    return total;
}

} // namespace readseq
