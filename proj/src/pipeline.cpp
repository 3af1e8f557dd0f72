#include "readseq/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include "readseq/errors.hpp"
#include "text_util.hpp"

namespace readseq {

using detail::fmt_double;

namespace {

ParticipantResult analyze_participant(const Session& session, const Dataset& dataset,
                                      const RegionRadii& radii,
                                      const PipelineConfig& config) {
    ParticipantResult result;
    result.participant_id = session.participant_id;

    const Session content = filter_content_pages(session, dataset, &result.filtered);
    for (const auto& page : content.pages) {
        const PageLayout* layout = dataset.find_layout(page.page_id);
        PageAnalysis analysis;
        analysis.page_id = page.page_id;
        analysis.fixations = page.fixations;
        analysis.aligned = align_page(analysis.fixations, *layout, radii, config.eq1_form);
        analysis.sequences =
            build_sequences(analysis.aligned, analysis.fixations, config.sequence);
        result.pages.push_back(std::move(analysis));
    }
    result.features =
        compute_features(result.participant_id, result.pages, config.features);
    return result;
}

} // namespace

PipelineResult run_pipeline(const Dataset& dataset, const PipelineConfig& config) {
    if (config.threads < 1) {
        throw ValidationError("thread count must be >= 1");
    }

    PipelineResult result;
    result.radii = compute_radii(config.geometry, config.radii_form);
    result.participants.resize(dataset.sessions.size());

    const std::size_t n = dataset.sessions.size();
    const std::size_t n_threads = std::min<std::size_t>(config.threads, std::max<std::size_t>(n, 1));

    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            result.participants[i] =
                analyze_participant(dataset.sessions[i], dataset, result.radii, config);
        }
        return result;
    }

    // Results land in per-participant slots, so the output order (and the
    // bytes written from it) never depends on scheduling.
    std::vector<std::thread> workers;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < n_threads; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    result.participants[i] = analyze_participant(dataset.sessions[i],
                                                                 dataset, result.radii, config);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (first_error) std::rethrow_exception(first_error);
    return result;
}

void write_aligned_dump(std::ostream& out, const PipelineResult& result, Eq1Form form,
                        char delimiter) {
    const char d = delimiter;
    out << "participant_id" << d << "page_id" << d << "line_id" << d << "t_start_ms" << d
        << "word_index" << d << "rank" << d << "cost" << '\n';
    for (const auto& participant : result.participants) {
        for (const auto& page : participant.pages) {
            const auto& aligned = page.aligned;
            for (std::size_t i = 0; i < aligned.size(); ++i) {
                const auto& af = aligned[i];
                // Emission for this fixation plus the transition to the next
                // member of the same line; summing the column gives the total
                // path cost.
                double cost = static_cast<double>(af.rank) * af.rank;
                if (i + 1 < aligned.size() && aligned[i + 1].line_id == af.line_id) {
                    const double step = form == Eq1Form::difference
                                            ? 1.0 - static_cast<double>(aligned[i + 1].word_index -
                                                                        af.word_index)
                                            : 1.0 - static_cast<double>(aligned[i + 1].word_index) -
                                                  static_cast<double>(af.word_index);
                    cost += step * step;
                }
                out << participant.participant_id << d << page.page_id << d << af.line_id
                    << d << fmt_double(page.fixations[af.fixation_index].t_start_ms) << d
                    << af.word_index << d << af.rank << d << fmt_double(cost) << '\n';
            }
        }
    }
}

void write_sequence_dump(std::ostream& out, const PipelineResult& result, char delimiter) {
    const char d = delimiter;
    out << "participant_id" << d << "page_id" << d << "t_start_ms" << d << "t_end_ms" << d
        << "n_fixations" << d << "min_index" << d << "max_index" << d << "n_regressions"
        << '\n';
    for (const auto& participant : result.participants) {
        for (const auto& page : participant.pages) {
            for (const auto& seq : page.sequences) {
                out << participant.participant_id << d << page.page_id << d
                    << fmt_double(seq.t_start_ms) << d << fmt_double(seq.t_end_ms) << d
                    << seq.fixations.size() << d << seq.min_index << d << seq.max_index
                    << d << seq.regressions.size() << '\n';
            }
        }
    }
}

} // namespace readseq
