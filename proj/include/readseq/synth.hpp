#ifndef READSEQ_SYNTH_HPP
#define READSEQ_SYNTH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "readseq/types.hpp"

namespace readseq {

// Synthetic page + fixation stream with known ground truth, used to validate
// the alignment and sequence stages at controllable difficulty.
struct SynthConfig {
    // Word grid
    int lines = 10;
    int words_per_line = 10;
    double word_width_px = 60.0;
    double word_height_px = 18.0;
    double word_gap_px = 14.0;
    double line_spacing_px = 36.0;
    double margin_x_px = 100.0;
    double margin_y_px = 100.0;

    // Reading plan. Per fixation: off-text with off_text_prob, else a
    // regression (uniform target left of the current word on the current
    // text line) with regression_prob, else a forward step — of 2..4 words
    // with skip_prob (weighted by skip_step_weights), of exactly 1 word
    // otherwise.
    double regression_prob = 0.0;
    double skip_prob = 0.0;
    double off_text_prob = 0.0;
    std::array<double, 3> skip_step_weights{0.6, 0.3, 0.1}; // steps 2, 3, 4

    // Fixation placement and timing
    double noise_sigma_px = 0.0; // isotropic Gaussian jitter around word centers
    double fix_duration_mean_ms = 200.0;
    double fix_duration_sd_ms = 40.0;
    double min_fix_duration_ms = 50.0;
    double saccade_gap_ms = 25.0;

    // Off-text fixations land this far right of the text block, before
    // jitter; keep it larger than the candidate radius plus a few sigma.
    double off_text_clearance_px = 300.0;

    std::uint64_t seed = 1;
    std::string participant_id = "synth";
    std::string page_id = "synth-page";
    std::size_t max_fixations = 0; // 0: stop when the last word is reached

    void validate() const;
};

// Intended word and sequence membership for one generated fixation;
// both empty for off-text fixations.
struct GroundTruth {
    std::optional<int> word_index;
    std::optional<int> sequence_id;
};

struct SynthResult {
    PageLayout layout;
    std::vector<Fixation> fixations;
    std::vector<GroundTruth> truth; // parallel to fixations
    int planned_regressions = 0;    // regression branch events in the plan
};

// Deterministic for a given seed (own uniform/gaussian derivation, so output
// does not depend on the standard library's distribution internals).
SynthResult generate(const SynthConfig& config);

} // namespace readseq

#endif
