#ifndef READSEQ_ALIGNMENT_HPP
#define READSEQ_ALIGNMENT_HPP

#include <cstddef>
#include <vector>

#include "readseq/geometry.hpp"
#include "readseq/types.hpp"

namespace readseq {

// Transition cost used inside the Viterbi word assignment.
//
// The printed cost (1 - I_next - I_prev)^2 grows with the absolute word
// index and cannot express a tradeoff of word spacing; the difference form
// (1 - (I_next - I_prev))^2 is minimized when consecutive fixations advance
// by exactly one word. The difference form is the default.
enum class Eq1Form { difference, printed };

// Asymmetric region around a fixation: wide to the right (parafoveal
// preview direction for left-to-right text), foveal-sized elsewhere.
struct ParafovealRegion {
    double center_x = 0.0;
    double center_y = 0.0;
    double extent_right = 0.0;
    double extent_left = 0.0;
    double extent_up = 0.0;
    double extent_down = 0.0;

    static ParafovealRegion around(const Fixation& f, const RegionRadii& radii);
    bool contains(double x, double y) const;
};

struct Candidate {
    int word_index = 0;
    double distance_px = 0.0;
};

// Candidate words for one fixation, rank 0 first. Sorted ascending by
// distance, ties broken by smaller word index. Every distance is within
// the candidate radius (2 * r_foveal).
struct CandidateSet {
    std::vector<Candidate> ranked;

    bool empty() const { return ranked.empty(); }
    std::size_t size() const { return ranked.size(); }
};

// Euclidean distance from the fixation point to the nearest point of the
// word's bounding box; 0 when the fixation lies inside the box.
double word_distance(const Fixation& f, const WordBox& w);

CandidateSet candidates(const Fixation& f, const PageLayout& layout,
                        const RegionRadii& radii);

// Maximal run of consecutive fixations, each inside its predecessor's
// parafoveal region. Members are indices into the page's fixation stream.
struct ReadingLine {
    int id = 0;
    std::vector<std::size_t> members;
};

// Greedy left-to-right segmentation of one page's fixation stream.
// A fixation with an empty candidate set ends the current line and starts
// none; it cannot belong to any reading sequence.
std::vector<ReadingLine> segment_lines(const std::vector<Fixation>& fixations,
                                       const std::vector<CandidateSet>& cands,
                                       const RegionRadii& radii);

struct AlignedFixation {
    std::size_t fixation_index = 0; // into the page's fixation stream
    int word_index = 0;
    int rank = 0;
    int line_id = 0;
};

// Minimum-cost word assignment for one reading line:
//   sum_t rank(F_t)^2  +  sum_t transition(I_t, I_t+1)
// with the transition given by `form`. Ties resolve to the smaller rank
// (and smaller word index at equal distance), so output is deterministic.
// Throws ValidationError on an empty line or a member without candidates.
std::vector<AlignedFixation> viterbi_assign(const ReadingLine& line,
                                            const std::vector<CandidateSet>& cands,
                                            Eq1Form form = Eq1Form::difference);

// Full per-page alignment: candidates, line segmentation, Viterbi per line.
// Output is in temporal order across lines.
std::vector<AlignedFixation> align_page(const std::vector<Fixation>& fixations,
                                        const PageLayout& layout,
                                        const RegionRadii& radii,
                                        Eq1Form form = Eq1Form::difference);

} // namespace readseq

#endif
