#ifndef READSEQ_PIPELINE_HPP
#define READSEQ_PIPELINE_HPP

#include <iosfwd>
#include <vector>

#include "readseq/alignment.hpp"
#include "readseq/features.hpp"
#include "readseq/geometry.hpp"
#include "readseq/ingest.hpp"
#include "readseq/sequences.hpp"

namespace readseq {

struct PipelineConfig {
    DisplayGeometry geometry;
    RadiiForm radii_form = RadiiForm::additive;
    Eq1Form eq1_form = Eq1Form::difference;
    SequenceOptions sequence;
    FeatureOptions features;
    int threads = 1;
};

struct ParticipantResult {
    std::string participant_id;
    std::vector<PageAnalysis> pages; // content pages only
    SessionFeatures features;
    FilterStats filtered;
};

struct PipelineResult {
    RegionRadii radii;
    std::vector<ParticipantResult> participants;
};

// geometry -> content filter -> alignment -> sequences -> features, for every
// session. Participants are processed in parallel up to config.threads;
// results keep the dataset's participant order, so output is deterministic.
PipelineResult run_pipeline(const Dataset& dataset, const PipelineConfig& config);

// Debug dumps (delimited text).
// Aligned: participant, page, line, t_start_ms, word_index, rank, cost
// contribution (emission plus transition to the next line member).
void write_aligned_dump(std::ostream& out, const PipelineResult& result,
                        Eq1Form form, char delimiter = '\t');
// Sequences: participant, page, start/end ms, member count, index hull,
// regression count.
void write_sequence_dump(std::ostream& out, const PipelineResult& result,
                         char delimiter = '\t');

} // namespace readseq

#endif
