#include <doctest.h>

#include <random>
#include <sstream>

#include "readseq/errors.hpp"
#include "readseq/ingest.hpp"

using namespace readseq;

namespace {

const char* kFixationHeader = "participant_id\tpage_id\tt_start_ms\tduration_ms\tx_px\ty_px\n";

std::vector<Fixation> parse_fix(const std::string& text) {
    std::istringstream in(text);
    return parse_fixations(in);
}

std::vector<PageLayout> parse_lay(const std::string& text) {
    std::istringstream in(text);
    return parse_layouts(in);
}

PageLayout simple_page(const std::string& id, PageKind kind, int n_words) {
    PageLayout page;
    page.page_id = id;
    page.kind = kind;
    for (int i = 0; i < n_words; ++i) {
        WordBox box;
        box.word_index = i;
        box.text = "w" + std::to_string(i);
        box.x_min = 100.0 + i * 70.0;
        box.x_max = box.x_min + 60.0;
        box.y_min = 100.0;
        box.y_max = 118.0;
        page.words.push_back(box);
    }
    return page;
}

} // namespace

TEST_SUITE("ingest") {

TEST_CASE("well-formed rows parse and sort by time") {
    const std::string text = std::string(kFixationHeader) +
                             "p1\tpage\t200\t150\t10\t20\n"
                             "p1\tpage\t0\t100\t30\t40\n"
                             "p1\tpage\t100\t120\t50\t60\n";
    const auto fixations = parse_fix(text);
    REQUIRE(fixations.size() == 3);
    CHECK(fixations[0].t_start_ms == 0.0);
    CHECK(fixations[1].t_start_ms == 100.0);
    CHECK(fixations[2].t_start_ms == 200.0);
    CHECK(fixations[0].x_px == 30.0);
    CHECK(fixations[0].duration_ms == 100.0);
}

TEST_CASE("comma delimiter is auto-detected") {
    const auto fixations =
        parse_fix("participant_id,page_id,t_start_ms,duration_ms,x_px,y_px\n"
                  "p1,page,0,100,1.5,2.5\n");
    REQUIRE(fixations.size() == 1);
    CHECK(fixations[0].x_px == 1.5);
}

TEST_CASE("header-only file yields an empty list") {
    CHECK(parse_fix(kFixationHeader).empty());
}

TEST_CASE("negative duration names row and field") {
    const std::string text = std::string(kFixationHeader) +
                             "p1\tpage\t0\t100\t1\t2\n"
                             "p1\tpage\t200\t-5\t1\t2\n";
    try {
        parse_fix(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 3);
        CHECK(e.field_name == "duration_ms");
    }
}

TEST_CASE("malformed number names row and column") {
    const std::string text = std::string(kFixationHeader) + "p1\tpage\t0\t100\tzap\t2\n";
    try {
        parse_fix(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
        CHECK(e.field_name == "x_px");
    }
}

TEST_CASE("missing required column is rejected") {
    CHECK_THROWS_AS(parse_fix("participant_id\tpage_id\tt_start_ms\tx_px\ty_px\np\tq\t0\t1\t2\n"),
                    ParseError);
}

TEST_CASE("scroll offset shifts y into page coordinates") {
    const auto fixations =
        parse_fix("participant_id\tpage_id\tt_start_ms\tduration_ms\tx_px\ty_px\tscroll_y_px\n"
                  "p1\tpage\t0\t100\t10\t400\t1200\n");
    REQUIRE(fixations.size() == 1);
    CHECK(fixations[0].y_px == 1600.0);
}

TEST_CASE("ties in t_start keep input order") {
    const std::string text = std::string(kFixationHeader) +
                             "p1\tpage\t50\t1\t111\t0\n"
                             "p1\tpage\t50\t2\t222\t0\n";
    const auto fixations = parse_fix(text);
    REQUIRE(fixations.size() == 2);
    CHECK(fixations[0].x_px == 111.0);
    CHECK(fixations[1].x_px == 222.0);
}

TEST_CASE("layout document with two pages") {
    const auto layouts = parse_lay(R"({"pages": [
        {"page_id": "a", "page_kind": "content",
         "words": [{"index": 1, "text": "second", "bbox": [70, 0, 130, 20]},
                   {"index": 0, "text": "first", "bbox": [0, 0, 60, 20]}]},
        {"page_id": "b", "page_kind": "serp", "words": []}
    ]})");
    REQUIRE(layouts.size() == 2);
    CHECK(layouts[0].page_id == "a");
    CHECK(layouts[0].kind == PageKind::content);
    REQUIRE(layouts[0].words.size() == 2);
    CHECK(layouts[0].words[0].word_index == 0); // sorted by index
    CHECK(layouts[0].words[0].text == "first");
    CHECK(layouts[1].kind == PageKind::serp);
}

TEST_CASE("non-contiguous word indices are rejected") {
    CHECK_THROWS_AS(parse_lay(R"({"pages": [{"page_id": "a", "page_kind": "content",
        "words": [{"index": 0, "text": "x", "bbox": [0,0,1,1]},
                  {"index": 1, "text": "y", "bbox": [2,0,3,1]},
                  {"index": 3, "text": "z", "bbox": [4,0,5,1]}]}]})"),
                    ValidationError);
}

TEST_CASE("duplicate word index is rejected") {
    CHECK_THROWS_AS(parse_lay(R"({"pages": [{"page_id": "a", "page_kind": "content",
        "words": [{"index": 0, "text": "x", "bbox": [0,0,1,1]},
                  {"index": 0, "text": "y", "bbox": [2,0,3,1]}]}]})"),
                    ValidationError);
}

TEST_CASE("inverted bbox is rejected") {
    CHECK_THROWS_AS(parse_lay(R"({"pages": [{"page_id": "a", "page_kind": "content",
        "words": [{"index": 0, "text": "x", "bbox": [5,0,1,1]}]}]})"),
                    ValidationError);
}

TEST_CASE("unknown page kind is rejected") {
    CHECK_THROWS_AS(parse_lay(R"({"pages": [{"page_id": "a", "page_kind": "blog",
        "words": []}]})"),
                    ValidationError);
}

TEST_CASE("scores parse and validate") {
    std::istringstream in(
        "participant_id\tmcq_pre\tmcq_post\tessay_pre\tessay_post\n"
        "p1\t3\t7\t1.5\t4\n"
        "p2\t2\t2\t0\t1\n");
    const auto scores = parse_scores(in);
    REQUIRE(scores.size() == 2);
    CHECK(scores.at("p1").mcq_post == 7.0);
    CHECK(scores.at("p2").essay_post == 1.0);

    std::istringstream dup(
        "participant_id\tmcq_pre\tmcq_post\tessay_pre\tessay_post\n"
        "p1\t1\t2\t3\t4\np1\t1\t2\t3\t4\n");
    CHECK_THROWS_AS(parse_scores(dup), ParseError);

    std::istringstream negative(
        "participant_id\tmcq_pre\tmcq_post\tessay_pre\tessay_post\n"
        "p1\t-1\t2\t3\t4\n");
    CHECK_THROWS_AS(parse_scores(negative), ParseError);
}

TEST_CASE("fixation round-trip is value-exact") {
    std::mt19937_64 rng(99);
    std::vector<Fixation> original;
    for (int i = 0; i < 50; ++i) {
        Fixation f;
        f.participant_id = "p" + std::to_string(i % 3);
        f.page_id = "page" + std::to_string(i % 2);
        f.t_start_ms = static_cast<double>(i) * 100.0 + 0.1 * static_cast<double>(rng() % 1000);
        f.duration_ms = 0.3 + static_cast<double>(rng() % 997) / 7.0;
        f.x_px = static_cast<double>(rng() % 100000) / 7.3;
        f.y_px = static_cast<double>(rng() % 100000) / 11.9;
        original.push_back(f);
    }
    std::ostringstream out;
    write_fixations(out, original);
    const auto reparsed = parse_fix(out.str());
    std::ostringstream out2;
    write_fixations(out2, reparsed);
    const auto reparsed2 = parse_fix(out2.str());

    REQUIRE(reparsed.size() == original.size());
    REQUIRE(reparsed2.size() == reparsed.size());
    for (std::size_t i = 0; i < reparsed.size(); ++i) {
        CHECK(reparsed2[i].participant_id == reparsed[i].participant_id);
        CHECK(reparsed2[i].page_id == reparsed[i].page_id);
        CHECK(reparsed2[i].t_start_ms == reparsed[i].t_start_ms);
        CHECK(reparsed2[i].duration_ms == reparsed[i].duration_ms);
        CHECK(reparsed2[i].x_px == reparsed[i].x_px);
        CHECK(reparsed2[i].y_px == reparsed[i].y_px);
    }
}

TEST_CASE("layout round-trip is value-exact") {
    std::vector<PageLayout> original{simple_page("a", PageKind::content, 7),
                                     simple_page("b", PageKind::video, 3)};
    original[0].words[2].x_min += 0.123456789012345;
    original[0].words[2].x_max += 0.123456789012345;

    std::ostringstream out;
    write_layouts(out, original);
    const auto reparsed = parse_lay(out.str());
    REQUIRE(reparsed.size() == 2);
    CHECK(reparsed[0].words[2].x_min == original[0].words[2].x_min);
    CHECK(reparsed[1].kind == PageKind::video);
    CHECK(reparsed[0].words.size() == 7);
}

TEST_CASE("build_dataset groups by participant and page") {
    const std::string text = std::string(kFixationHeader) +
                             "alice\tp1\t0\t100\t1\t2\n"
                             "alice\tp2\t500\t100\t1\t2\n"
                             "alice\tp1\t200\t100\t1\t2\n"
                             "bob\tp1\t0\t100\t1\t2\n";
    auto dataset = build_dataset(parse_fix(text),
                                 {simple_page("p1", PageKind::content, 2),
                                  simple_page("p2", PageKind::serp, 2)});
    REQUIRE(dataset.sessions.size() == 2);
    CHECK(dataset.sessions[0].participant_id == "alice");
    REQUIRE(dataset.sessions[0].pages.size() == 2);
    CHECK(dataset.sessions[0].pages[0].fixations.size() == 2);
    CHECK(dataset.sessions[1].participant_id == "bob");
}

TEST_CASE("fixation on an unknown page is rejected") {
    const std::string text = std::string(kFixationHeader) + "p\tmissing\t0\t100\t1\t2\n";
    CHECK_THROWS_AS(build_dataset(parse_fix(text), {simple_page("p1", PageKind::content, 1)}),
                    ValidationError);
}

TEST_CASE("content filter keeps only content pages") {
    const std::string text = std::string(kFixationHeader) +
                             "p\tc1\t0\t100\t1\t2\n"
                             "p\tc2\t200\t100\t1\t2\n"
                             "p\ts1\t400\t100\t1\t2\n"
                             "p\ts1\t600\t100\t1\t2\n";
    const auto dataset = build_dataset(parse_fix(text),
                                       {simple_page("c1", PageKind::content, 2),
                                        simple_page("c2", PageKind::content, 2),
                                        simple_page("s1", PageKind::serp, 2)});
    FilterStats stats;
    const Session filtered = filter_content_pages(dataset.sessions[0], dataset, &stats);
    CHECK(filtered.pages.size() == 2);
    CHECK(stats.pages_dropped == 1);
    CHECK(stats.fixations_dropped == 2);

    // Idempotent: filtering the filtered session drops nothing further.
    FilterStats again;
    const Session twice = filter_content_pages(filtered, dataset, &again);
    CHECK(twice.pages.size() == 2);
    CHECK(again.pages_dropped == 0);
    CHECK(again.fixations_dropped == 0);
}

TEST_CASE("session with only non-content pages filters to empty") {
    const std::string text = std::string(kFixationHeader) + "p\ts1\t0\t100\t1\t2\n";
    const auto dataset =
        build_dataset(parse_fix(text), {simple_page("s1", PageKind::video, 1)});
    FilterStats stats;
    const Session filtered = filter_content_pages(dataset.sessions[0], dataset, &stats);
    CHECK(filtered.pages.empty());
    CHECK(stats.pages_dropped == 1);
}

TEST_CASE("all-content session passes through unchanged") {
    const std::string text = std::string(kFixationHeader) + "p\tc1\t0\t100\t1\t2\n";
    const auto dataset =
        build_dataset(parse_fix(text), {simple_page("c1", PageKind::content, 1)});
    FilterStats stats;
    const Session filtered = filter_content_pages(dataset.sessions[0], dataset, &stats);
    CHECK(filtered.pages.size() == 1);
    CHECK(stats.pages_dropped == 0);
    CHECK(filtered.pages[0].fixations.size() == 1);
}

} // TEST_SUITE
