#ifndef READSEQ_FEATURES_HPP
#define READSEQ_FEATURES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "readseq/alignment.hpp"
#include "readseq/sequences.hpp"
#include "readseq/types.hpp"

namespace readseq {

// Everything the pipeline derived for one content page of one participant.
struct PageAnalysis {
    std::string page_id;
    std::vector<Fixation> fixations; // all fixations on the page
    std::vector<AlignedFixation> aligned;
    std::vector<ReadingSequence> sequences;
};

// How a forward jump of k word indices counts toward n_words.
enum class WordCountPolicy {
    traversed, // jump of k contributes k words (text coverage); regression 1
    fixated,   // every reading fixation contributes exactly 1
};

// Denominator for the *_per_sec features.
enum class TimeBase {
    reading,   // total reading-fixation duration
    wallclock, // per-page span from first fixation start to last fixation end
};

struct FeatureOptions {
    WordCountPolicy word_count = WordCountPolicy::traversed;
    TimeBase time_base = TimeBase::reading;
};

struct SessionFeatures {
    std::string participant_id;
    double sum_RFix_dur = 0.0;          // ms, reading fixations only
    double avg_RFix_dur_per_page = 0.0; // sum_RFix_dur / n_CP_visited
    double avg_n_RFix = 0.0;            // reading fixations per content page
    std::int64_t n_CP_visited = 0;      // content pages with >= 1 fixation
    double avg_Fix_dur = 0.0;           // ms, over all fixations
    double dur_per_RSeq = 0.0;          // ms, mean sequence duration
    std::int64_t n_RSeq = 0;
    double avg_RFix_dur = 0.0;          // ms, mean reading-fixation duration
    std::int64_t n_RFix = 0;
    std::int64_t n_Reg = 0;
    double n_Reg_per_sec = 0.0;
    std::int64_t n_unique_word = 0;     // distinct (page, word_index) read
    std::int64_t n_words = 0;           // words read incl. duplicates
    double words_per_sec = 0.0;
    double max_y_of_RFix = 0.0;         // page coordinates
    double avg_y_of_RFix = 0.0;

    // True when the per-second denominators were zero; the rates are then
    // reported as 0 rather than NaN. Not a matrix column.
    bool zero_time_base = false;
};

// All sequence members in temporal order (pages in session order).
std::vector<AlignedFixation> reading_fixations(const std::vector<ReadingSequence>& seqs);

SessionFeatures compute_features(const std::string& participant_id,
                                 const std::vector<PageAnalysis>& pages,
                                 const FeatureOptions& opts = {});

// Matrix column names in their fixed output order (participant_id first).
const std::vector<std::string>& feature_column_names();

double feature_value(const SessionFeatures& f, const std::string& column);

void write_feature_matrix(std::ostream& out,
                          const std::vector<SessionFeatures>& rows,
                          char delimiter = '\t');

std::vector<SessionFeatures> parse_feature_matrix(std::istream& in);

} // namespace readseq

#endif
