#ifndef READSEQ_TYPES_HPP
#define READSEQ_TYPES_HPP

#include <optional>
#include <string>
#include <vector>

namespace readseq {

// One fixation event in page coordinates (scroll-compensated). If the source
// log is in viewport coordinates, the ingest layer adds the per-row scroll
// offset before this struct is built.
struct Fixation {
    std::string participant_id;
    std::string page_id;
    double t_start_ms = 0.0;
    double duration_ms = 0.0;
    double x_px = 0.0;
    double y_px = 0.0;

    double t_end_ms() const { return t_start_ms + duration_ms; }
};

// Axis-aligned word bounding box with the page-wide continuous word index.
struct WordBox {
    int word_index = 0;
    std::string text;
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double center_x() const { return 0.5 * (x_min + x_max); }
    double center_y() const { return 0.5 * (y_min + y_max); }
};

enum class PageKind { content, serp, video, other };

const char* to_string(PageKind kind);
PageKind page_kind_from_string(const std::string& s); // throws ValidationError

struct PageLayout {
    std::string page_id;
    PageKind kind = PageKind::content;
    std::vector<WordBox> words; // sorted by word_index, contiguous indices
};

// Pre/post test scores for one participant.
struct Scores {
    double mcq_pre = 0.0;
    double mcq_post = 0.0;
    double essay_pre = 0.0;
    double essay_post = 0.0;
};

// All fixations of one participant on one page, in temporal order.
struct PageStream {
    std::string page_id;
    std::vector<Fixation> fixations;
};

struct Session {
    std::string participant_id;
    std::vector<PageStream> pages;
    std::optional<Scores> scores;
};

} // namespace readseq

#endif
