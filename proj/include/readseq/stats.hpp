#ifndef READSEQ_STATS_HPP
#define READSEQ_STATS_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "readseq/features.hpp"
#include "readseq/types.hpp"

namespace readseq {

enum class ScoreKind { mcq, essay };
enum class Phase { pre, post, kg }; // kg = post - pre

const char* to_string(ScoreKind k);
const char* to_string(Phase p);

double score_value(const Scores& s, ScoreKind kind, Phase phase);

// What to do with participants whose score equals the group mean exactly.
enum class EqualMeanPolicy { exclude, low, high };

struct GroupSplit {
    ScoreKind kind = ScoreKind::mcq;
    Phase phase = Phase::kg;
    std::vector<std::string> low;
    std::vector<std::string> high;
    std::vector<std::string> excluded; // scored exactly the mean
    double threshold = 0.0;            // the mean
};

// Splits participants below/above the mean score. Throws DegenerateDataError
// when fewer than two participants have scores or all scores are identical.
GroupSplit split_groups(const std::map<std::string, Scores>& scores,
                        ScoreKind kind, Phase phase,
                        EqualMeanPolicy equal_mean = EqualMeanPolicy::exclude);

enum class MwuMethod {
    automatic,  // exact when min(n) <= 8, asymptotic otherwise
    exact,      // tail count over all C(n, min_n) label assignments
    asymptotic, // normal approximation, tie-corrected variance, continuity corr.
};

struct MannWhitneyResult {
    double u_statistic = 0.0; // U of the first sample
    double p_value = 1.0;     // two-sided
    bool exact = false;
};

// Rank-sum U with midrank tie handling. Throws ValidationError on an empty
// sample. The exact path computes the permutation-null tail by dynamic
// programming over rank sums, so it stays feasible for large other-sample
// sizes.
MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                 std::span<const double> b,
                                 MwuMethod method = MwuMethod::automatic);

enum class SignificanceTier { ns, marginal, significant, very_significant };

const char* to_string(SignificanceTier t);

// Tiers follow the reporting convention: p < 0.01 very significant,
// p <= 0.05 significant, p < 0.1 marginal, otherwise ns.
SignificanceTier significance_tier(double p);

struct GroupComparison {
    std::string feature;
    double mean_low = 0.0;
    double mean_high = 0.0;
    double u_statistic = 0.0;
    double p_value = 1.0;
    SignificanceTier tier = SignificanceTier::ns;
};

// One Mann-Whitney comparison per feature column. Every participant in the
// split must have a feature row; otherwise throws ValidationError naming the
// missing participant.
std::vector<GroupComparison> compare_all(const std::vector<SessionFeatures>& rows,
                                         const GroupSplit& split,
                                         MwuMethod method = MwuMethod::automatic);

// TSV report and a human-readable table with tier markers
// (~ marginal, * significant, ** very significant).
void write_comparison_report(std::ostream& out,
                             const std::vector<GroupComparison>& comparisons,
                             char delimiter = '\t');
void write_comparison_table(std::ostream& out, const GroupSplit& split,
                            const std::vector<GroupComparison>& comparisons);

} // namespace readseq

#endif
