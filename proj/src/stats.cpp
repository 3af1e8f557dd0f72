#include "readseq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <vector>

#include "readseq/errors.hpp"
#include "text_util.hpp"

namespace readseq {

using detail::fmt_double;

const char* to_string(ScoreKind k) {
    return k == ScoreKind::mcq ? "mcq" : "essay";
}

const char* to_string(Phase p) {
    switch (p) {
        case Phase::pre: return "pre";
        case Phase::post: return "post";
        case Phase::kg: return "kg";
    }
    return "kg";
}

double score_value(const Scores& s, ScoreKind kind, Phase phase) {
    const double pre = kind == ScoreKind::mcq ? s.mcq_pre : s.essay_pre;
    const double post = kind == ScoreKind::mcq ? s.mcq_post : s.essay_post;
    switch (phase) {
        case Phase::pre: return pre;
        case Phase::post: return post;
        case Phase::kg: return post - pre;
    }
    return post - pre;
}

GroupSplit split_groups(const std::map<std::string, Scores>& scores, ScoreKind kind,
                        Phase phase, EqualMeanPolicy equal_mean) {
    if (scores.size() < 2) {
        throw DegenerateDataError("group split needs at least 2 scored participants, got " +
                                  std::to_string(scores.size()));
    }

    GroupSplit split;
    split.kind = kind;
    split.phase = phase;

    double sum = 0.0;
    for (const auto& [id, s] : scores) sum += score_value(s, kind, phase);
    split.threshold = sum / static_cast<double>(scores.size());

    for (const auto& [id, s] : scores) {
        const double v = score_value(s, kind, phase);
        if (v < split.threshold) {
            split.low.push_back(id);
        } else if (v > split.threshold) {
            split.high.push_back(id);
        } else {
            switch (equal_mean) {
                case EqualMeanPolicy::exclude: split.excluded.push_back(id); break;
                case EqualMeanPolicy::low: split.low.push_back(id); break;
                case EqualMeanPolicy::high: split.high.push_back(id); break;
            }
        }
    }

    if (split.low.empty() && split.high.empty()) {
        throw DegenerateDataError("all " + std::string(to_string(kind)) + "/" +
                                  to_string(phase) +
                                  " scores are identical; no comparison possible");
    }
    return split;
}

namespace {

// Midranks of the pooled sample, doubled so they are exact integers.
// Returns (doubled midrank per pooled element in sorted order, sorted values).
struct PooledRanks {
    std::vector<double> sorted_values;
    std::vector<std::int64_t> doubled_ranks; // parallel to sorted_values
    std::vector<std::int64_t> tie_sizes;
};

PooledRanks pooled_midranks(std::span<const double> a, std::span<const double> b) {
    PooledRanks pooled;
    pooled.sorted_values.reserve(a.size() + b.size());
    pooled.sorted_values.insert(pooled.sorted_values.end(), a.begin(), a.end());
    pooled.sorted_values.insert(pooled.sorted_values.end(), b.begin(), b.end());
    std::sort(pooled.sorted_values.begin(), pooled.sorted_values.end());

    const std::size_t n = pooled.sorted_values.size();
    pooled.doubled_ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled.sorted_values[j + 1] == pooled.sorted_values[i]) ++j;
        // Ranks i+1 .. j+1 share the midrank (i+j+2)/2; doubled: i+j+2.
        const std::int64_t doubled = static_cast<std::int64_t>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) pooled.doubled_ranks[k] = doubled;
        pooled.tie_sizes.push_back(static_cast<std::int64_t>(j - i + 1));
        i = j + 1;
    }
    return pooled;
}

// Doubled rank sum of `sample` within the pooled ranking.
std::int64_t doubled_rank_sum(std::span<const double> sample, const PooledRanks& pooled) {
    std::int64_t sum = 0;
    for (const double v : sample) {
        const auto it = std::lower_bound(pooled.sorted_values.begin(),
                                         pooled.sorted_values.end(), v);
        sum += pooled.doubled_ranks[static_cast<std::size_t>(
            it - pooled.sorted_values.begin())];
    }
    return sum;
}

// Exact two-sided tail of the permutation null: the distribution of the
// k-subset doubled rank sum is obtained with a subset-sum DP, then the tail
// counts all assignments at least as far from the null mean as observed.
// Counting is pure integer arithmetic, so p is exact.
double exact_two_sided_p(const PooledRanks& pooled, std::size_t k,
                         std::int64_t doubled_u_deviation) {
    const std::size_t n = pooled.doubled_ranks.size();
    std::int64_t total = 0;
    for (const auto r : pooled.doubled_ranks) total += r;

    // ways[j][s]: subsets of size j with doubled rank sum s.
    std::vector<std::vector<std::uint64_t>> ways(
        k + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(total) + 1, 0));
    ways[0][0] = 1;
    for (std::size_t item = 0; item < n; ++item) {
        const auto r = static_cast<std::size_t>(pooled.doubled_ranks[item]);
        const std::size_t j_max = std::min(k, item + 1);
        for (std::size_t j = j_max; j >= 1; --j) {
            auto& dst = ways[j];
            const auto& src = ways[j - 1];
            for (std::size_t s = static_cast<std::size_t>(total); s >= r; --s) {
                dst[s] += src[s - r];
            }
        }
    }

    // U (doubled) of the k-sample at rank sum s is s - k(k+1); its null mean
    // is n_a * n_b (doubled M/2), identical for either sample by symmetry.
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t mean2 = kk * (static_cast<std::int64_t>(n) - kk); // n_a*n_b
    std::uint64_t tail = 0, all = 0;
    for (std::size_t s = 0; s < ways[k].size(); ++s) {
        const std::uint64_t count = ways[k][s];
        if (!count) continue;
        all += count;
        const std::int64_t u2 = static_cast<std::int64_t>(s) - kk * (kk + 1);
        if (std::llabs(u2 - mean2) >= doubled_u_deviation) tail += count;
    }
    return static_cast<double>(tail) / static_cast<double>(all);
}

double asymptotic_two_sided_p(const PooledRanks& pooled, std::size_t n_a,
                              std::size_t n_b, double u_a) {
    const double na = static_cast<double>(n_a);
    const double nb = static_cast<double>(n_b);
    const double n = na + nb;
    const double mu = na * nb / 2.0;

    double tie_term = 0.0;
    for (const auto t : pooled.tie_sizes) {
        const double td = static_cast<double>(t);
        tie_term += td * td * td - td;
    }
    const double variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (variance <= 0.0) return 1.0; // every value tied

    const double num = std::max(std::abs(u_a - mu) - 0.5, 0.0); // continuity corr.
    const double z = num / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

} // namespace

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                 MwuMethod method) {
    if (a.empty() || b.empty()) {
        throw ValidationError("Mann-Whitney samples must be non-empty");
    }
    for (const double v : a) {
        if (!std::isfinite(v)) throw ValidationError("non-finite value in sample");
    }
    for (const double v : b) {
        if (!std::isfinite(v)) throw ValidationError("non-finite value in sample");
    }

    const PooledRanks pooled = pooled_midranks(a, b);
    const std::int64_t r2_a = doubled_rank_sum(a, pooled);
    const auto na = static_cast<std::int64_t>(a.size());
    const auto nb = static_cast<std::int64_t>(b.size());
    const std::int64_t u2_a = r2_a - na * (na + 1); // doubled U_a, exact
    const std::int64_t m2 = na * nb;                // doubled null mean of U

    MannWhitneyResult result;
    result.u_statistic = static_cast<double>(u2_a) / 2.0;

    const bool use_exact =
        method == MwuMethod::exact ||
        (method == MwuMethod::automatic && std::min(a.size(), b.size()) <= 8);
    if (use_exact) {
        result.exact = true;
        result.p_value = exact_two_sided_p(pooled, std::min(a.size(), b.size()),
                                           std::llabs(u2_a - m2));
    } else {
        result.exact = false;
        result.p_value = asymptotic_two_sided_p(pooled, a.size(), b.size(),
                                                result.u_statistic);
    }
    return result;
}

const char* to_string(SignificanceTier t) {
    switch (t) {
        case SignificanceTier::ns: return "ns";
        case SignificanceTier::marginal: return "marginal";
        case SignificanceTier::significant: return "significant";
        case SignificanceTier::very_significant: return "very_significant";
    }
    return "ns";
}

SignificanceTier significance_tier(double p) {
    if (p < 0.01) return SignificanceTier::very_significant;
    if (p <= 0.05) return SignificanceTier::significant;
    if (p < 0.1) return SignificanceTier::marginal;
    return SignificanceTier::ns;
}

std::vector<GroupComparison> compare_all(const std::vector<SessionFeatures>& rows,
                                         const GroupSplit& split, MwuMethod method) {
    std::map<std::string, const SessionFeatures*> by_id;
    for (const auto& row : rows) by_id[row.participant_id] = &row;

    const auto collect = [&](const std::vector<std::string>& ids, const std::string& column) {
        std::vector<double> values;
        values.reserve(ids.size());
        for (const auto& id : ids) {
            const auto it = by_id.find(id);
            if (it == by_id.end()) {
                throw ValidationError("participant '" + id + "' has no feature row");
            }
            values.push_back(feature_value(*it->second, column));
        }
        return values;
    };

    const auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (const double x : v) s += x;
        return v.empty() ? 0.0 : s / static_cast<double>(v.size());
    };

    std::vector<GroupComparison> comparisons;
    const auto& names = feature_column_names();
    for (std::size_t i = 1; i < names.size(); ++i) { // skip participant_id
        const auto low = collect(split.low, names[i]);
        const auto high = collect(split.high, names[i]);
        const auto mwu = mann_whitney_u(low, high, method);

        GroupComparison c;
        c.feature = names[i];
        c.mean_low = mean(low);
        c.mean_high = mean(high);
        c.u_statistic = mwu.u_statistic;
        c.p_value = mwu.p_value;
        c.tier = significance_tier(mwu.p_value);
        comparisons.push_back(std::move(c));
    }
    return comparisons;
}

namespace {

const char* tier_marker(SignificanceTier t) {
    switch (t) {
        case SignificanceTier::ns: return "";
        case SignificanceTier::marginal: return "~";
        case SignificanceTier::significant: return "*";
        case SignificanceTier::very_significant: return "**";
    }
    return "";
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

} // namespace

void write_comparison_report(std::ostream& out,
                             const std::vector<GroupComparison>& comparisons,
                             char delimiter) {
    const char d = delimiter;
    out << "feature" << d << "mean_low" << d << "mean_high" << d << "U" << d << "p"
        << d << "tier" << '\n';
    for (const auto& c : comparisons) {
        out << c.feature << d << fmt_double(c.mean_low) << d << fmt_double(c.mean_high)
            << d << fmt_double(c.u_statistic) << d << fmt_double(c.p_value) << d
            << to_string(c.tier) << '\n';
    }
}

void write_comparison_table(std::ostream& out, const GroupSplit& split,
                            const std::vector<GroupComparison>& comparisons) {
    out << "Group comparison: " << to_string(split.kind) << " / " << to_string(split.phase)
        << "  (Low n=" << split.low.size() << ", High n=" << split.high.size();
    if (!split.excluded.empty()) {
        out << ", excluded at mean: " << split.excluded.size();
    }
    out << ", mean threshold " << fixed(split.threshold, 4) << ")\n";
    out << "Markers: ~ 0.05<=p<0.1, * 0.01<p<=0.05, ** p<0.01\n\n";

    std::size_t width = 10;
    for (const auto& c : comparisons) width = std::max(width, c.feature.size());
    out << std::string(width - 7, ' ') << "feature"
        << "          Low         High        U            p\n";
    for (const auto& c : comparisons) {
        std::string p = fixed(c.p_value, 3);
        out << std::string(width - c.feature.size(), ' ') << c.feature;
        const auto col = [&](const std::string& s, std::size_t w) {
            out << std::string(w > s.size() ? w - s.size() : 1, ' ') << s;
        };
        col(fixed(c.mean_low, 2), 13);
        col(fixed(c.mean_high, 2), 13);
        col(fixed(c.u_statistic, 1), 9);
        col(p + tier_marker(c.tier), 15);
        out << '\n';
    }
}

} // namespace readseq
