#ifndef READSEQ_SEQUENCES_HPP
#define READSEQ_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "readseq/alignment.hpp"
#include "readseq/types.hpp"

namespace readseq {

// A backward re-fixation admitted because it landed inside the sequence's
// already-read span. fixation_index matches AlignedFixation::fixation_index.
struct RegressionEvent {
    std::size_t fixation_index = 0;
    int from_index = 0;
    int to_index = 0;
};

struct ReadingSequence {
    std::vector<AlignedFixation> fixations; // temporal order
    int min_index = 0;
    int max_index = 0;
    std::vector<RegressionEvent> regressions;
    double t_start_ms = 0.0; // start of first member
    double t_end_ms = 0.0;   // end of last member

    double duration_ms() const { return t_end_ms - t_start_ms; }
};

struct SequenceOptions {
    int min_fixations = 2;      // sequences with fewer members are discarded
    int min_distinct_words = 2; // ... or covering fewer distinct words
};

// Greedy temporal scan over one page's aligned fixations. A fixation extends
// the open sequence iff its word index is at most four ahead of the previous
// admitted one (and not behind it), or falls within the sequence's current
// [min, max] hull. A hull-only admission that moves backward is recorded as
// a regression. Anything else closes the sequence and opens a new one.
std::vector<ReadingSequence> build_sequences(const std::vector<AlignedFixation>& aligned,
                                             const std::vector<Fixation>& page_fixations,
                                             const SequenceOptions& opts = {});

std::size_t count_regressions(const std::vector<ReadingSequence>& seqs);

} // namespace readseq

#endif
