#include "readseq/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "readseq/errors.hpp"
#include "text_util.hpp"

namespace readseq {

using detail::fmt_double;
using detail::parse_double_field;
using detail::parse_int_field;
using detail::split;
using detail::strip_cr;

const char* to_string(PageKind kind) {
    switch (kind) {
        case PageKind::content: return "content";
        case PageKind::serp: return "serp";
        case PageKind::video: return "video";
        case PageKind::other: return "other";
    }
    return "other";
}

PageKind page_kind_from_string(const std::string& s) {
    if (s == "content") return PageKind::content;
    if (s == "serp") return PageKind::serp;
    if (s == "video") return PageKind::video;
    if (s == "other") return PageKind::other;
    throw ValidationError("unknown page_kind '" + s + "'");
}

namespace {

char detect_delimiter(const std::string& header) {
    if (header.find('\t') != std::string::npos) return '\t';
    return ',';
}

// Header name -> column position, with required-column checking.
class ColumnMap {
public:
    ColumnMap(const std::string& header, char delim) {
        const auto names = split(header, delim);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!columns_.emplace(names[i], i).second) {
                throw ParseError("duplicate column '" + names[i] + "'", 1);
            }
        }
    }

    std::size_t require(const std::string& name) const {
        const auto it = columns_.find(name);
        if (it == columns_.end()) {
            throw ParseError("missing required column", 1, name);
        }
        return it->second;
    }

    std::optional<std::size_t> optional(const std::string& name) const {
        const auto it = columns_.find(name);
        if (it == columns_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return columns_.size(); }

private:
    std::unordered_map<std::string, std::size_t> columns_;
};

const std::string& cell(const std::vector<std::string>& row, std::size_t col,
                        std::size_t line) {
    if (col >= row.size()) {
        throw ParseError("row has " + std::to_string(row.size()) +
                             " fields, expected at least " + std::to_string(col + 1),
                         line);
    }
    return row[col];
}

} // namespace

std::vector<Fixation> parse_fixations(std::istream& in, const FixationParseOptions& opts) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("empty fixation file (no header)", 1);
    }
    header = strip_cr(header);
    const char delim = opts.delimiter ? opts.delimiter : detect_delimiter(header);
    const ColumnMap columns(header, delim);

    const std::size_t c_participant = columns.require("participant_id");
    const std::size_t c_page = columns.require("page_id");
    const std::size_t c_t = columns.require("t_start_ms");
    const std::size_t c_dur = columns.require("duration_ms");
    const std::size_t c_x = columns.require("x_px");
    const std::size_t c_y = columns.require("y_px");
    const auto c_scroll = columns.optional("scroll_y_px");

    std::vector<Fixation> fixations;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto row = split(line, delim);

        Fixation f;
        f.participant_id = cell(row, c_participant, line_no);
        f.page_id = cell(row, c_page, line_no);
        f.t_start_ms = parse_double_field(cell(row, c_t, line_no), line_no, "t_start_ms");
        f.duration_ms = parse_double_field(cell(row, c_dur, line_no), line_no, "duration_ms");
        f.x_px = parse_double_field(cell(row, c_x, line_no), line_no, "x_px");
        f.y_px = parse_double_field(cell(row, c_y, line_no), line_no, "y_px");
        if (c_scroll) {
            // Viewport-frame input: shift into page coordinates.
            f.y_px += parse_double_field(cell(row, *c_scroll, line_no), line_no, "scroll_y_px");
        }

        if (f.participant_id.empty()) {
            throw ParseError("empty participant_id", line_no, "participant_id");
        }
        if (f.page_id.empty()) {
            throw ParseError("empty page_id", line_no, "page_id");
        }
        if (f.duration_ms < 0.0) {
            throw ParseError("negative duration", line_no, "duration_ms");
        }
        if (!std::isfinite(f.t_start_ms) || !std::isfinite(f.duration_ms) ||
            !std::isfinite(f.x_px) || !std::isfinite(f.y_px)) {
            throw ParseError("non-finite value", line_no);
        }
        fixations.push_back(std::move(f));
    }

    std::stable_sort(fixations.begin(), fixations.end(),
                     [](const Fixation& a, const Fixation& b) {
                         if (a.participant_id != b.participant_id)
                             return a.participant_id < b.participant_id;
                         if (a.page_id != b.page_id) return a.page_id < b.page_id;
                         return a.t_start_ms < b.t_start_ms;
                     });
    return fixations;
}

std::vector<PageLayout> parse_layouts(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid layout JSON: ") + e.what(), 1);
    }

    if (!doc.is_object() || !doc.contains("pages") || !doc["pages"].is_array()) {
        throw ValidationError("layout document must be an object with a 'pages' array");
    }

    std::vector<PageLayout> layouts;
    std::set<std::string> seen_pages;
    for (const auto& page : doc["pages"]) {
        PageLayout layout;
        try {
            layout.page_id = page.at("page_id").get<std::string>();
            layout.kind = page_kind_from_string(page.at("page_kind").get<std::string>());
            for (const auto& word : page.at("words")) {
                WordBox box;
                box.word_index = word.at("index").get<int>();
                box.text = word.value("text", std::string{});
                const auto& bbox = word.at("bbox");
                if (!bbox.is_array() || bbox.size() != 4) {
                    throw ValidationError("bbox must be [x_min, y_min, x_max, y_max]");
                }
                box.x_min = bbox[0].get<double>();
                box.y_min = bbox[1].get<double>();
                box.x_max = bbox[2].get<double>();
                box.y_max = bbox[3].get<double>();
                layout.words.push_back(std::move(box));
            }
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("malformed layout entry for page '" + layout.page_id +
                                  "': " + e.what());
        }

        if (layout.page_id.empty()) {
            throw ValidationError("layout page with empty page_id");
        }
        if (!seen_pages.insert(layout.page_id).second) {
            throw ValidationError("duplicate page_id '" + layout.page_id + "' in layout");
        }

        for (const auto& w : layout.words) {
            if (w.word_index < 0) {
                throw ValidationError("negative word index " + std::to_string(w.word_index) +
                                      " on page '" + layout.page_id + "'");
            }
            if (!(w.x_min < w.x_max) || !(w.y_min < w.y_max)) {
                throw ValidationError("inverted bbox for word " + std::to_string(w.word_index) +
                                      " on page '" + layout.page_id + "'");
            }
        }

        std::sort(layout.words.begin(), layout.words.end(),
                  [](const WordBox& a, const WordBox& b) { return a.word_index < b.word_index; });
        for (std::size_t i = 0; i + 1 < layout.words.size(); ++i) {
            const int cur = layout.words[i].word_index;
            const int next = layout.words[i + 1].word_index;
            if (next == cur) {
                throw ValidationError("duplicate word index " + std::to_string(cur) +
                                      " on page '" + layout.page_id + "'");
            }
            if (next != cur + 1) {
                throw ValidationError("word indices not contiguous on page '" + layout.page_id +
                                      "': " + std::to_string(cur) + " followed by " +
                                      std::to_string(next));
            }
        }

        layouts.push_back(std::move(layout));
    }
    return layouts;
}

std::map<std::string, Scores> parse_scores(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("empty scores file (no header)", 1);
    }
    header = strip_cr(header);
    const char delim = detect_delimiter(header);
    const ColumnMap columns(header, delim);

    const std::size_t c_participant = columns.require("participant_id");
    const std::size_t c_mcq_pre = columns.require("mcq_pre");
    const std::size_t c_mcq_post = columns.require("mcq_post");
    const std::size_t c_essay_pre = columns.require("essay_pre");
    const std::size_t c_essay_post = columns.require("essay_post");

    std::map<std::string, Scores> scores;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto row = split(line, delim);

        const std::string& id = cell(row, c_participant, line_no);
        Scores s;
        s.mcq_pre = parse_double_field(cell(row, c_mcq_pre, line_no), line_no, "mcq_pre");
        s.mcq_post = parse_double_field(cell(row, c_mcq_post, line_no), line_no, "mcq_post");
        s.essay_pre = parse_double_field(cell(row, c_essay_pre, line_no), line_no, "essay_pre");
        s.essay_post = parse_double_field(cell(row, c_essay_post, line_no), line_no, "essay_post");

        for (const auto& [value, field] :
             {std::pair{s.mcq_pre, "mcq_pre"}, {s.mcq_post, "mcq_post"},
              {s.essay_pre, "essay_pre"}, {s.essay_post, "essay_post"}}) {
            if (!std::isfinite(value) || value < 0.0) {
                throw ParseError("score must be finite and >= 0", line_no, field);
            }
        }
        if (!scores.emplace(id, s).second) {
            throw ParseError("duplicate participant '" + id + "'", line_no, "participant_id");
        }
    }
    return scores;
}

void write_fixations(std::ostream& out, std::span<const Fixation> fixations,
                     char delimiter) {
    const char d = delimiter;
    out << "participant_id" << d << "page_id" << d << "t_start_ms" << d
        << "duration_ms" << d << "x_px" << d << "y_px" << '\n';
    for (const auto& f : fixations) {
        out << f.participant_id << d << f.page_id << d << fmt_double(f.t_start_ms) << d
            << fmt_double(f.duration_ms) << d << fmt_double(f.x_px) << d
            << fmt_double(f.y_px) << '\n';
    }
}

void write_layouts(std::ostream& out, std::span<const PageLayout> layouts) {
    nlohmann::json doc;
    doc["pages"] = nlohmann::json::array();
    for (const auto& layout : layouts) {
        nlohmann::json page;
        page["page_id"] = layout.page_id;
        page["page_kind"] = to_string(layout.kind);
        page["words"] = nlohmann::json::array();
        for (const auto& w : layout.words) {
            page["words"].push_back({{"index", w.word_index},
                                     {"text", w.text},
                                     {"bbox", {w.x_min, w.y_min, w.x_max, w.y_max}}});
        }
        doc["pages"].push_back(std::move(page));
    }
    out << doc.dump(2) << '\n';
}

void write_scores(std::ostream& out, const std::map<std::string, Scores>& scores,
                  char delimiter) {
    const char d = delimiter;
    out << "participant_id" << d << "mcq_pre" << d << "mcq_post" << d
        << "essay_pre" << d << "essay_post" << '\n';
    for (const auto& [id, s] : scores) {
        out << id << d << fmt_double(s.mcq_pre) << d << fmt_double(s.mcq_post) << d
            << fmt_double(s.essay_pre) << d << fmt_double(s.essay_post) << '\n';
    }
}

const PageLayout* Dataset::find_layout(const std::string& page_id) const {
    for (const auto& layout : layouts) {
        if (layout.page_id == page_id) return &layout;
    }
    return nullptr;
}

Dataset build_dataset(std::vector<Fixation> fixations, std::vector<PageLayout> layouts,
                      const std::map<std::string, Scores>& scores) {
    Dataset dataset;
    dataset.layouts = std::move(layouts);

    std::set<std::string> known_pages;
    for (const auto& layout : dataset.layouts) known_pages.insert(layout.page_id);

    // parse_fixations already groups by (participant, page) and orders by time.
    for (auto& f : fixations) {
        if (!known_pages.count(f.page_id)) {
            throw ValidationError("fixation references unknown page '" + f.page_id + "'");
        }
        if (dataset.sessions.empty() ||
            dataset.sessions.back().participant_id != f.participant_id) {
            Session session;
            session.participant_id = f.participant_id;
            dataset.sessions.push_back(std::move(session));
        }
        Session& session = dataset.sessions.back();
        if (session.pages.empty() || session.pages.back().page_id != f.page_id) {
            PageStream stream;
            stream.page_id = f.page_id;
            session.pages.push_back(std::move(stream));
        }
        session.pages.back().fixations.push_back(std::move(f));
    }

    for (auto& session : dataset.sessions) {
        const auto it = scores.find(session.participant_id);
        if (it != scores.end()) session.scores = it->second;
    }
    return dataset;
}

Session filter_content_pages(const Session& session, const Dataset& dataset,
                             FilterStats* stats) {
    Session filtered;
    filtered.participant_id = session.participant_id;
    filtered.scores = session.scores;
    for (const auto& page : session.pages) {
        const PageLayout* layout = dataset.find_layout(page.page_id);
        if (!layout) {
            throw ValidationError("page '" + page.page_id + "' has no layout");
        }
        if (layout->kind == PageKind::content) {
            filtered.pages.push_back(page);
        } else if (stats) {
            stats->pages_dropped += 1;
            stats->fixations_dropped += page.fixations.size();
        }
    }
    return filtered;
}

Dataset filter_content_pages(const Dataset& dataset, FilterStats* stats) {
    Dataset filtered;
    filtered.layouts = dataset.layouts;
    for (const auto& session : dataset.sessions) {
        filtered.sessions.push_back(filter_content_pages(session, dataset, stats));
    }
    return filtered;
}

} // namespace readseq
