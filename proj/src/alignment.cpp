#include "readseq/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "readseq/errors.hpp"

namespace readseq {

ParafovealRegion ParafovealRegion::around(const Fixation& f, const RegionRadii& radii) {
    ParafovealRegion region;
    region.center_x = f.x_px;
    region.center_y = f.y_px;
    region.extent_right = radii.r_parafoveal_px;
    region.extent_left = radii.r_foveal_px;
    region.extent_up = radii.r_foveal_px;
    region.extent_down = radii.r_foveal_px;
    return region;
}

bool ParafovealRegion::contains(double x, double y) const {
    // Screen coordinates: y grows downward.
    const double dx = x - center_x;
    const double dy = y - center_y;
    return dx >= -extent_left && dx <= extent_right && dy >= -extent_up &&
           dy <= extent_down;
}

double word_distance(const Fixation& f, const WordBox& w) {
    const double dx = std::max({w.x_min - f.x_px, 0.0, f.x_px - w.x_max});
    const double dy = std::max({w.y_min - f.y_px, 0.0, f.y_px - w.y_max});
    return std::hypot(dx, dy);
}

CandidateSet candidates(const Fixation& f, const PageLayout& layout,
                        const RegionRadii& radii) {
    CandidateSet set;
    for (const auto& w : layout.words) {
        const double dist = word_distance(f, w);
        if (dist <= radii.candidate_radius_px) {
            set.ranked.push_back({w.word_index, dist});
        }
    }
    std::sort(set.ranked.begin(), set.ranked.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.distance_px != b.distance_px) return a.distance_px < b.distance_px;
                  return a.word_index < b.word_index;
              });
    return set;
}

std::vector<ReadingLine> segment_lines(const std::vector<Fixation>& fixations,
                                       const std::vector<CandidateSet>& cands,
                                       const RegionRadii& radii) {
    if (fixations.size() != cands.size()) {
        throw ValidationError("fixation and candidate-set counts differ");
    }

    std::vector<ReadingLine> lines;
    ReadingLine current;
    int next_id = 0;

    const auto close_current = [&] {
        if (!current.members.empty()) {
            lines.push_back(std::move(current));
            current = ReadingLine{};
        }
    };

    for (std::size_t t = 0; t < fixations.size(); ++t) {
        if (cands[t].empty()) {
            // Not on text: ends the line and belongs to none.
            close_current();
            continue;
        }
        if (!current.members.empty()) {
            const Fixation& prev = fixations[current.members.back()];
            const auto region = ParafovealRegion::around(prev, radii);
            if (!region.contains(fixations[t].x_px, fixations[t].y_px)) {
                close_current();
            }
        }
        if (current.members.empty()) {
            current.id = next_id++;
        }
        current.members.push_back(t);
    }
    close_current();
    return lines;
}

namespace {

double transition_cost(int idx_from, int idx_to, Eq1Form form) {
    const double term = form == Eq1Form::difference
                            ? 1.0 - static_cast<double>(idx_to - idx_from)
                            : 1.0 - static_cast<double>(idx_to) - static_cast<double>(idx_from);
    return term * term;
}

} // namespace

std::vector<AlignedFixation> viterbi_assign(const ReadingLine& line,
                                            const std::vector<CandidateSet>& cands,
                                            Eq1Form form) {
    const std::size_t n = line.members.size();
    if (n == 0) {
        throw ValidationError("viterbi_assign on an empty reading line");
    }
    for (const std::size_t t : line.members) {
        if (t >= cands.size() || cands[t].empty()) {
            throw ValidationError("reading line member without candidates");
        }
    }

    // suffix[t][k]: best cost of the line from fixation t onward, given
    // candidate k at t. Emission is rank^2 for every fixation, the last
    // one included.
    std::vector<std::vector<double>> suffix(n);
    for (std::size_t t = n; t-- > 0;) {
        const auto& ranked = cands[line.members[t]].ranked;
        suffix[t].resize(ranked.size());
        for (std::size_t k = 0; k < ranked.size(); ++k) {
            const double emission = static_cast<double>(k) * static_cast<double>(k);
            if (t + 1 == n) {
                suffix[t][k] = emission;
                continue;
            }
            const auto& next_ranked = cands[line.members[t + 1]].ranked;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k2 = 0; k2 < next_ranked.size(); ++k2) {
                const double cost =
                    transition_cost(ranked[k].word_index, next_ranked[k2].word_index, form) +
                    suffix[t + 1][k2];
                best = std::min(best, cost);
            }
            suffix[t][k] = emission + best;
        }
    }

    // Forward reconstruction; picking the first minimizer in rank order makes
    // ties resolve to the smaller rank, then the smaller word index.
    std::vector<AlignedFixation> out;
    out.reserve(n);
    std::size_t chosen = 0;
    for (std::size_t k = 1; k < suffix[0].size(); ++k) {
        if (suffix[0][k] < suffix[0][chosen]) chosen = k;
    }
    for (std::size_t t = 0; t < n; ++t) {
        const auto& ranked = cands[line.members[t]].ranked;
        out.push_back({line.members[t], ranked[chosen].word_index,
                       static_cast<int>(chosen), line.id});
        if (t + 1 == n) break;

        const auto& next_ranked = cands[line.members[t + 1]].ranked;
        std::size_t next_choice = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k2 = 0; k2 < next_ranked.size(); ++k2) {
            const double cost =
                transition_cost(ranked[chosen].word_index, next_ranked[k2].word_index, form) +
                suffix[t + 1][k2];
            if (cost < best) {
                best = cost;
                next_choice = k2;
            }
        }
        chosen = next_choice;
    }
    return out;
}

std::vector<AlignedFixation> align_page(const std::vector<Fixation>& fixations,
                                        const PageLayout& layout,
                                        const RegionRadii& radii, Eq1Form form) {
    std::vector<CandidateSet> cands;
    cands.reserve(fixations.size());
    for (const auto& f : fixations) {
        cands.push_back(candidates(f, layout, radii));
    }

    std::vector<AlignedFixation> aligned;
    for (const auto& line : segment_lines(fixations, cands, radii)) {
        auto assigned = viterbi_assign(line, cands, form);
        aligned.insert(aligned.end(), assigned.begin(), assigned.end());
    }
    return aligned;
}

} // namespace readseq
