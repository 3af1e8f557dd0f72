#include "readseq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "readseq/errors.hpp"

namespace readseq {

namespace {

// Explicit derivations from the raw mt19937_64 stream; std::*_distribution
// would tie the output to one standard library's internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; the log argument is kept away from zero.
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    constexpr double two_pi = 6.28318530717958647692;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

// Index into cumulative weights; weights need not be normalized.
std::size_t pick_weighted(std::mt19937_64& rng, const double* weights, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += weights[i];
    double u = uniform01(rng) * total;
    for (std::size_t i = 0; i < n; ++i) {
        u -= weights[i];
        if (u < 0.0) return i;
    }
    return n - 1;
}

} // namespace

void SynthConfig::validate() const {
    if (lines <= 0 || words_per_line <= 0) {
        throw ValidationError("layout must have at least one line and one word per line");
    }
    if (word_width_px <= 0 || word_height_px <= 0 || line_spacing_px <= 0) {
        throw ValidationError("word and line dimensions must be positive");
    }
    for (const double p : {regression_prob, skip_prob, off_text_prob}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("plan probabilities must be in [0, 1]");
        }
    }
    if (regression_prob + skip_prob + off_text_prob > 1.0) {
        throw ValidationError("plan branch probabilities must sum to <= 1");
    }
    double weight_sum = 0.0;
    for (const double w : skip_step_weights) {
        if (w < 0.0) throw ValidationError("skip step weights must be >= 0");
        weight_sum += w;
    }
    if (skip_prob > 0.0 && weight_sum <= 0.0) {
        throw ValidationError("skip_prob > 0 needs a positive skip step weight");
    }
    if (noise_sigma_px < 0.0) {
        throw ValidationError("noise sigma must be >= 0");
    }
    if (fix_duration_mean_ms <= 0.0 || fix_duration_sd_ms < 0.0 ||
        min_fix_duration_ms <= 0.0 || saccade_gap_ms < 0.0) {
        throw ValidationError("invalid fixation timing parameters");
    }
}

SynthResult generate(const SynthConfig& config) {
    config.validate();

    SynthResult result;
    result.layout.page_id = config.page_id;
    result.layout.kind = PageKind::content;

    const int n_words = config.lines * config.words_per_line;
    for (int i = 0; i < n_words; ++i) {
        const int line = i / config.words_per_line;
        const int col = i % config.words_per_line;
        WordBox box;
        box.word_index = i;
        box.text = "w" + std::to_string(i);
        box.x_min = config.margin_x_px + col * (config.word_width_px + config.word_gap_px);
        box.x_max = box.x_min + config.word_width_px;
        box.y_min = config.margin_y_px + line * config.line_spacing_px;
        box.y_max = box.y_min + config.word_height_px;
        result.layout.words.push_back(std::move(box));
    }
    const double text_right_edge =
        config.margin_x_px + config.words_per_line * (config.word_width_px + config.word_gap_px);

    std::mt19937_64 rng(config.seed);
    const std::size_t cap = config.max_fixations
                                ? config.max_fixations
                                : static_cast<std::size_t>(n_words) * 10;

    double t = 0.0;
    int current = 0; // word the reader is on
    bool first = true;
    const double branch_probs[3] = {config.off_text_prob, config.regression_prob,
                                    config.skip_prob};

    while (result.fixations.size() < cap) {
        std::optional<int> target = current;
        if (first) {
            first = false;
        } else {
            const double u = uniform01(rng);
            const double p_off = branch_probs[0];
            const double p_reg = p_off + branch_probs[1];
            const double p_skip = p_reg + branch_probs[2];
            // Regressions stay on the current text line. A backward jump to a
            // vertically adjacent line can fall inside the previous fixation's
            // parafoveal region, and the assignment model is then free to
            // prefer an index-smooth reading of the whole line; such fixations
            // would not be recoverable ground truth even without noise.
            const int line_start = (current / config.words_per_line) * config.words_per_line;
            if (u < p_off) {
                target = std::nullopt; // off-text
            } else if (u < p_reg && current > line_start) {
                // A regression with no room on this line degrades to a plain
                // forward step below.
                target = uniform_int(rng, line_start, current - 1);
                result.planned_regressions += 1;
            } else {
                int step = 1;
                if (u >= p_reg && u < p_skip) {
                    step = 2 + static_cast<int>(pick_weighted(
                                   rng, config.skip_step_weights.data(),
                                   config.skip_step_weights.size()));
                }
                if (current + step >= n_words) break; // text finished
                target = current + step;
            }
        }

        Fixation f;
        f.participant_id = config.participant_id;
        f.page_id = config.page_id;
        double duration = config.fix_duration_mean_ms +
                          config.fix_duration_sd_ms * gaussian(rng);
        f.duration_ms = std::max(duration, config.min_fix_duration_ms);
        f.t_start_ms = t;
        t += f.duration_ms + config.saccade_gap_ms;

        GroundTruth truth;
        if (target) {
            const WordBox& box = result.layout.words[static_cast<std::size_t>(*target)];
            f.x_px = box.center_x() + config.noise_sigma_px * gaussian(rng);
            f.y_px = box.center_y() + config.noise_sigma_px * gaussian(rng);
            truth.word_index = *target;
            truth.sequence_id = 0; // the plan reads one continuous span
            current = *target;
        } else {
            const WordBox& anchor =
                result.layout.words[static_cast<std::size_t>(std::min(current, n_words - 1))];
            f.x_px = text_right_edge + config.off_text_clearance_px +
                     config.noise_sigma_px * gaussian(rng);
            f.y_px = anchor.center_y() + config.noise_sigma_px * gaussian(rng);
        }
        result.fixations.push_back(std::move(f));
        result.truth.push_back(truth);

        if (target && *target >= n_words - 1) break; // reached the last word
    }

    return result;
}

} // namespace readseq
