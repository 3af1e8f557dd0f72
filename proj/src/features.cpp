#include "readseq/features.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "readseq/errors.hpp"
#include "text_util.hpp"

namespace readseq {

using detail::fmt_double;
using detail::parse_double_field;
using detail::split;
using detail::strip_cr;

std::vector<AlignedFixation> reading_fixations(const std::vector<ReadingSequence>& seqs) {
    std::vector<AlignedFixation> out;
    for (const auto& seq : seqs) {
        out.insert(out.end(), seq.fixations.begin(), seq.fixations.end());
    }
    return out;
}

namespace {

std::int64_t words_read(const ReadingSequence& seq, WordCountPolicy policy) {
    if (policy == WordCountPolicy::fixated) {
        return static_cast<std::int64_t>(seq.fixations.size());
    }
    // Traversed: the first fixation and every regression contribute one word,
    // a forward step contributes its index gap (0 for a refixation).
    std::int64_t total = 0;
    for (std::size_t i = 0; i < seq.fixations.size(); ++i) {
        if (i == 0) {
            total += 1;
            continue;
        }
        const int step = seq.fixations[i].word_index - seq.fixations[i - 1].word_index;
        total += step >= 0 ? step : 1;
    }
    return total;
}

} // namespace

SessionFeatures compute_features(const std::string& participant_id,
                                 const std::vector<PageAnalysis>& pages,
                                 const FeatureOptions& opts) {
    SessionFeatures f;
    f.participant_id = participant_id;

    double all_fix_dur_sum = 0.0;
    std::int64_t all_fix_count = 0;
    double seq_dur_sum = 0.0;
    double rfix_y_sum = 0.0;
    double wallclock_ms = 0.0;
    std::set<std::pair<std::string, int>> unique_words;
    bool any_rfix = false;

    for (const auto& page : pages) {
        if (page.fixations.empty()) continue; // not visited
        f.n_CP_visited += 1;

        double page_end = page.fixations.front().t_end_ms();
        for (const auto& fix : page.fixations) {
            all_fix_dur_sum += fix.duration_ms;
            all_fix_count += 1;
            page_end = std::max(page_end, fix.t_end_ms());
        }
        wallclock_ms += page_end - page.fixations.front().t_start_ms;

        f.n_RSeq += static_cast<std::int64_t>(page.sequences.size());
        for (const auto& seq : page.sequences) {
            seq_dur_sum += seq.duration_ms();
            f.n_Reg += static_cast<std::int64_t>(seq.regressions.size());
            f.n_words += words_read(seq, opts.word_count);
            for (const auto& af : seq.fixations) {
                const Fixation& fix = page.fixations[af.fixation_index];
                f.n_RFix += 1;
                f.sum_RFix_dur += fix.duration_ms;
                rfix_y_sum += fix.y_px;
                f.max_y_of_RFix = any_rfix ? std::max(f.max_y_of_RFix, fix.y_px) : fix.y_px;
                any_rfix = true;
                unique_words.emplace(page.page_id, af.word_index);
            }
        }
    }

    f.n_unique_word = static_cast<std::int64_t>(unique_words.size());
    if (f.n_CP_visited > 0) {
        f.avg_RFix_dur_per_page = f.sum_RFix_dur / static_cast<double>(f.n_CP_visited);
        f.avg_n_RFix = static_cast<double>(f.n_RFix) / static_cast<double>(f.n_CP_visited);
    }
    if (all_fix_count > 0) {
        f.avg_Fix_dur = all_fix_dur_sum / static_cast<double>(all_fix_count);
    }
    if (f.n_RSeq > 0) {
        f.dur_per_RSeq = seq_dur_sum / static_cast<double>(f.n_RSeq);
    }
    if (f.n_RFix > 0) {
        f.avg_RFix_dur = f.sum_RFix_dur / static_cast<double>(f.n_RFix);
        f.avg_y_of_RFix = rfix_y_sum / static_cast<double>(f.n_RFix);
    }

    const double base_ms =
        opts.time_base == TimeBase::reading ? f.sum_RFix_dur : wallclock_ms;
    if (base_ms > 0.0) {
        f.n_Reg_per_sec = static_cast<double>(f.n_Reg) / (base_ms / 1000.0);
        f.words_per_sec = static_cast<double>(f.n_words) / (base_ms / 1000.0);
    } else {
        f.zero_time_base = true;
    }
    return f;
}

const std::vector<std::string>& feature_column_names() {
    static const std::vector<std::string> names = {
        "participant_id",
        "sum_RFix_dur",
        "avg_RFix_dur_per_page",
        "avg_n_RFix",
        "n_CP_visited",
        "avg_Fix_dur",
        "dur_per_RSeq",
        "n_RSeq",
        "avg_RFix_dur",
        "n_RFix",
        "n_Reg",
        "n_Reg_per_sec",
        "n_unique_word",
        "n_words",
        "words_per_sec",
        "max_y_of_RFix",
        "avg_y_of_RFix",
    };
    return names;
}

double feature_value(const SessionFeatures& f, const std::string& column) {
    if (column == "sum_RFix_dur") return f.sum_RFix_dur;
    if (column == "avg_RFix_dur_per_page") return f.avg_RFix_dur_per_page;
    if (column == "avg_n_RFix") return f.avg_n_RFix;
    if (column == "n_CP_visited") return static_cast<double>(f.n_CP_visited);
    if (column == "avg_Fix_dur") return f.avg_Fix_dur;
    if (column == "dur_per_RSeq") return f.dur_per_RSeq;
    if (column == "n_RSeq") return static_cast<double>(f.n_RSeq);
    if (column == "avg_RFix_dur") return f.avg_RFix_dur;
    if (column == "n_RFix") return static_cast<double>(f.n_RFix);
    if (column == "n_Reg") return static_cast<double>(f.n_Reg);
    if (column == "n_Reg_per_sec") return f.n_Reg_per_sec;
    if (column == "n_unique_word") return static_cast<double>(f.n_unique_word);
    if (column == "n_words") return static_cast<double>(f.n_words);
    if (column == "words_per_sec") return f.words_per_sec;
    if (column == "max_y_of_RFix") return f.max_y_of_RFix;
    if (column == "avg_y_of_RFix") return f.avg_y_of_RFix;
    throw ValidationError("unknown feature column '" + column + "'");
}

namespace {

void set_feature_value(SessionFeatures& f, const std::string& column, double v,
                       std::size_t line) {
    const auto as_count = [&](const char* name) {
        if (v < 0.0 || v != std::floor(v)) {
            throw ParseError("count feature must be a non-negative integer", line, name);
        }
        return static_cast<std::int64_t>(v);
    };
    if (column == "sum_RFix_dur") f.sum_RFix_dur = v;
    else if (column == "avg_RFix_dur_per_page") f.avg_RFix_dur_per_page = v;
    else if (column == "avg_n_RFix") f.avg_n_RFix = v;
    else if (column == "n_CP_visited") f.n_CP_visited = as_count("n_CP_visited");
    else if (column == "avg_Fix_dur") f.avg_Fix_dur = v;
    else if (column == "dur_per_RSeq") f.dur_per_RSeq = v;
    else if (column == "n_RSeq") f.n_RSeq = as_count("n_RSeq");
    else if (column == "avg_RFix_dur") f.avg_RFix_dur = v;
    else if (column == "n_RFix") f.n_RFix = as_count("n_RFix");
    else if (column == "n_Reg") f.n_Reg = as_count("n_Reg");
    else if (column == "n_Reg_per_sec") f.n_Reg_per_sec = v;
    else if (column == "n_unique_word") f.n_unique_word = as_count("n_unique_word");
    else if (column == "n_words") f.n_words = as_count("n_words");
    else if (column == "words_per_sec") f.words_per_sec = v;
    else if (column == "max_y_of_RFix") f.max_y_of_RFix = v;
    else if (column == "avg_y_of_RFix") f.avg_y_of_RFix = v;
    else throw ParseError("unknown feature column", line, column);
}

} // namespace

void write_feature_matrix(std::ostream& out, const std::vector<SessionFeatures>& rows,
                          char delimiter) {
    const auto& names = feature_column_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out << delimiter;
        out << names[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row.participant_id;
        for (std::size_t i = 1; i < names.size(); ++i) {
            out << delimiter << fmt_double(feature_value(row, names[i]));
        }
        out << '\n';
    }
}

std::vector<SessionFeatures> parse_feature_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("empty feature matrix (no header)", 1);
    }
    header = strip_cr(header);
    const char delim = header.find('\t') != std::string::npos ? '\t' : ',';
    const auto names = split(header, delim);
    if (names.empty() || names[0] != "participant_id") {
        throw ParseError("feature matrix must start with participant_id", 1);
    }

    std::vector<SessionFeatures> rows;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split(line, delim);
        if (cells.size() != names.size()) {
            throw ParseError("row has " + std::to_string(cells.size()) +
                                 " fields, header has " + std::to_string(names.size()),
                             line_no);
        }
        SessionFeatures f;
        f.participant_id = cells[0];
        for (std::size_t i = 1; i < names.size(); ++i) {
            set_feature_value(f, names[i], parse_double_field(cells[i], line_no, names[i]),
                              line_no);
        }
        rows.push_back(std::move(f));
    }
    return rows;
}

} // namespace readseq
