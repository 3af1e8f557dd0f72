#ifndef READSEQ_INGEST_HPP
#define READSEQ_INGEST_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "readseq/types.hpp"

namespace readseq {

struct FixationParseOptions {
    char delimiter = '\0'; // '\0' = auto-detect (tab or comma) from the header
};

// Fixation log: delimited UTF-8 text with a header naming at least
// participant_id, page_id, t_start_ms, duration_ms, x_px, y_px; an optional
// scroll_y_px column is added onto y_px so downstream code always sees page
// coordinates. Rows come back stably sorted by (participant, page, t_start).
std::vector<Fixation> parse_fixations(std::istream& in,
                                      const FixationParseOptions& opts = {});

// Layout document: JSON of the form
//   {"pages": [{"page_id": ..., "page_kind": "content",
//               "words": [{"index": 0, "text": ..., "bbox": [x0,y0,x1,y1]}]}]}
// Word indices must be unique and contiguous per page; boxes must not be
// inverted. Words come back sorted by index.
std::vector<PageLayout> parse_layouts(std::istream& in);

// Scores table: delimited text with participant_id, mcq_pre, mcq_post,
// essay_pre, essay_post.
std::map<std::string, Scores> parse_scores(std::istream& in);

// Writers for the same formats (shortest round-trip float formatting,
// so parse(write(parse(x))) == parse(x)).
void write_fixations(std::ostream& out, std::span<const Fixation> fixations,
                     char delimiter = '\t');
void write_layouts(std::ostream& out, std::span<const PageLayout> layouts);
void write_scores(std::ostream& out, const std::map<std::string, Scores>& scores,
                  char delimiter = '\t');

// Layouts keyed by page id plus the per-participant sessions built from a
// fixation log. Every fixation's page_id must resolve to a layout.
struct Dataset {
    std::vector<PageLayout> layouts;
    std::vector<Session> sessions;

    const PageLayout* find_layout(const std::string& page_id) const;
};

Dataset build_dataset(std::vector<Fixation> fixations,
                      std::vector<PageLayout> layouts,
                      const std::map<std::string, Scores>& scores = {});

struct FilterStats {
    std::size_t pages_dropped = 0;
    std::size_t fixations_dropped = 0;
};

// Keeps only page streams whose layout kind is `content`. Total and
// idempotent; drop counts are accumulated into `stats` when given.
Session filter_content_pages(const Session& session, const Dataset& dataset,
                             FilterStats* stats = nullptr);
Dataset filter_content_pages(const Dataset& dataset, FilterStats* stats = nullptr);

} // namespace readseq

#endif
