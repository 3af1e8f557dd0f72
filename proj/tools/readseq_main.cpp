#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "readseq/errors.hpp"
#include "readseq/pipeline.hpp"
#include "readseq/stats.hpp"
#include "readseq/synth.hpp"
#include "readseq/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitMissingFile = 2;
constexpr int kExitParseError = 3;
constexpr int kExitDegenerate = 4;

struct CommonOptions {
    readseq::PipelineConfig pipeline;
    readseq::EqualMeanPolicy equal_mean = readseq::EqualMeanPolicy::exclude;
    std::string geometry_file;
};

// Geometry/policy flags shared by the analysis subcommands. Precedence:
// explicit flags > --geometry file > built-in defaults.
struct GeometryFlags {
    CLI::Option* diagonal = nullptr;
    CLI::Option* width = nullptr;
    CLI::Option* height = nullptr;
    CLI::Option* distance = nullptr;
    CLI::Option* foveal = nullptr;
    CLI::Option* parafoveal = nullptr;
};

readseq::DisplayGeometry load_geometry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw readseq::Error("cannot open geometry file: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw readseq::ParseError(std::string("invalid geometry JSON: ") + e.what(), 1);
    }
    readseq::DisplayGeometry geom;
    geom.diagonal_inches = doc.value("diagonal_inches", geom.diagonal_inches);
    if (doc.contains("resolution_px")) {
        geom.resolution_width_px = doc["resolution_px"].at(0).get<int>();
        geom.resolution_height_px = doc["resolution_px"].at(1).get<int>();
    }
    geom.viewing_distance_cm = doc.value("viewing_distance_cm", geom.viewing_distance_cm);
    geom.foveal_diameter_deg = doc.value("foveal_diameter_deg", geom.foveal_diameter_deg);
    geom.parafoveal_diameter_deg =
        doc.value("parafoveal_diameter_deg", geom.parafoveal_diameter_deg);
    return geom;
}

GeometryFlags add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    GeometryFlags flags;
    cmd->add_option("--geometry", opts.geometry_file,
                    "JSON file with display geometry parameters");
    flags.diagonal = cmd->add_option("--diagonal-inches",
                                     opts.pipeline.geometry.diagonal_inches,
                                     "Screen diagonal in inches");
    flags.width = cmd->add_option("--res-width", opts.pipeline.geometry.resolution_width_px,
                                  "Horizontal resolution in pixels");
    flags.height = cmd->add_option("--res-height", opts.pipeline.geometry.resolution_height_px,
                                   "Vertical resolution in pixels");
    flags.distance = cmd->add_option("--viewing-distance-cm",
                                     opts.pipeline.geometry.viewing_distance_cm,
                                     "Viewer-to-display distance in cm");
    flags.foveal = cmd->add_option("--foveal-deg", opts.pipeline.geometry.foveal_diameter_deg,
                                   "Foveal region diameter in degrees");
    flags.parafoveal = cmd->add_option("--parafoveal-deg",
                                       opts.pipeline.geometry.parafoveal_diameter_deg,
                                       "Parafoveal region diameter in degrees");

    cmd->add_option("--radii-form", [&opts](const std::vector<std::string>& v) {
           if (v[0] == "additive") opts.pipeline.radii_form = readseq::RadiiForm::additive;
           else if (v[0] == "direct") opts.pipeline.radii_form = readseq::RadiiForm::direct;
           else return false;
           return true;
       },
       "Parafoveal radius derivation: additive|direct (default additive)");
    cmd->add_option("--eq1-form", [&opts](const std::vector<std::string>& v) {
           if (v[0] == "difference") opts.pipeline.eq1_form = readseq::Eq1Form::difference;
           else if (v[0] == "printed") opts.pipeline.eq1_form = readseq::Eq1Form::printed;
           else return false;
           return true;
       },
       "Viterbi transition cost: difference|printed (default difference)");
    cmd->add_option("--nwords", [&opts](const std::vector<std::string>& v) {
           if (v[0] == "traversed")
               opts.pipeline.features.word_count = readseq::WordCountPolicy::traversed;
           else if (v[0] == "fixated")
               opts.pipeline.features.word_count = readseq::WordCountPolicy::fixated;
           else return false;
           return true;
       },
       "Word counting: traversed|fixated (default traversed)");
    cmd->add_option("--time-base", [&opts](const std::vector<std::string>& v) {
           if (v[0] == "reading") opts.pipeline.features.time_base = readseq::TimeBase::reading;
           else if (v[0] == "wallclock")
               opts.pipeline.features.time_base = readseq::TimeBase::wallclock;
           else return false;
           return true;
       },
       "Per-second denominator: reading|wallclock (default reading)");
    cmd->add_option("--equal-mean", [&opts](const std::vector<std::string>& v) {
           if (v[0] == "exclude") opts.equal_mean = readseq::EqualMeanPolicy::exclude;
           else if (v[0] == "low") opts.equal_mean = readseq::EqualMeanPolicy::low;
           else if (v[0] == "high") opts.equal_mean = readseq::EqualMeanPolicy::high;
           else return false;
           return true;
       },
       "Participants scoring exactly the mean: exclude|low|high (default exclude)");
    cmd->add_option("--min-seq-len", opts.pipeline.sequence.min_fixations,
                    "Minimum fixations per reading sequence (default 2)");
    cmd->add_option("--min-seq-words", opts.pipeline.sequence.min_distinct_words,
                    "Minimum distinct words per reading sequence (default 2)");
    cmd->add_option("--threads", opts.pipeline.threads,
                    "Participant-level parallelism (default 1)");
    return flags;
}

void resolve_geometry(CommonOptions& opts, const GeometryFlags& flags) {
    if (opts.geometry_file.empty()) return;
    // Start from the file, then reapply any explicitly passed flag on top.
    readseq::DisplayGeometry& geom = opts.pipeline.geometry;
    readseq::DisplayGeometry merged = load_geometry_file(opts.geometry_file);
    if (flags.diagonal->count()) merged.diagonal_inches = geom.diagonal_inches;
    if (flags.width->count()) merged.resolution_width_px = geom.resolution_width_px;
    if (flags.height->count()) merged.resolution_height_px = geom.resolution_height_px;
    if (flags.distance->count()) merged.viewing_distance_cm = geom.viewing_distance_cm;
    if (flags.foveal->count()) merged.foveal_diameter_deg = geom.foveal_diameter_deg;
    if (flags.parafoveal->count())
        merged.parafoveal_diameter_deg = geom.parafoveal_diameter_deg;
    geom = merged;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw readseq::Error("cannot open file for checksum: " + path);
    std::uint64_t hash = 1469598103934665603ULL;
    char buf[1 << 14];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ULL;
        }
        if (got < static_cast<std::streamsize>(sizeof(buf))) break;
    }
    return hash;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void require_input_file(const std::string& path) {
    if (path.empty() || !fs::exists(path)) {
        std::cerr << "error: missing input file: " << path << "\n";
        std::exit(kExitMissingFile);
    }
}

// All outputs go through a temp file + rename.
void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw readseq::Error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

json geometry_to_json(const readseq::DisplayGeometry& g) {
    return {{"diagonal_inches", g.diagonal_inches},
            {"resolution_px", {g.resolution_width_px, g.resolution_height_px}},
            {"viewing_distance_cm", g.viewing_distance_cm},
            {"foveal_diameter_deg", g.foveal_diameter_deg},
            {"parafoveal_diameter_deg", g.parafoveal_diameter_deg}};
}

json config_to_json(const CommonOptions& opts) {
    const auto& p = opts.pipeline;
    return {{"geometry", geometry_to_json(p.geometry)},
            {"radii_form", p.radii_form == readseq::RadiiForm::additive ? "additive" : "direct"},
            {"eq1_form",
             p.eq1_form == readseq::Eq1Form::difference ? "difference" : "printed"},
            {"nwords", p.features.word_count == readseq::WordCountPolicy::traversed
                           ? "traversed"
                           : "fixated"},
            {"time_base",
             p.features.time_base == readseq::TimeBase::reading ? "reading" : "wallclock"},
            {"equal_mean", opts.equal_mean == readseq::EqualMeanPolicy::exclude ? "exclude"
                           : opts.equal_mean == readseq::EqualMeanPolicy::low ? "low"
                                                                              : "high"},
            {"min_seq_len", p.sequence.min_fixations},
            {"min_seq_words", p.sequence.min_distinct_words},
            {"threads", p.threads}};
}

json radii_to_json(const readseq::RegionRadii& radii) {
    return {{"r_foveal_px", radii.r_foveal_px},
            {"r_parafoveal_px", radii.r_parafoveal_px},
            {"candidate_radius_px", radii.candidate_radius_px},
            {"r_foveal_px_rounded", std::llround(radii.r_foveal_px)},
            {"r_parafoveal_px_rounded", std::llround(radii.r_parafoveal_px)}};
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const CommonOptions& opts, const readseq::RegionRadii& radii,
                    const std::map<std::string, std::string>& inputs,
                    const std::vector<std::string>& outputs) {
    json manifest;
    manifest["tool"] = "readseq";
    manifest["version"] = readseq::kVersion;
    manifest["command"] = command;
    manifest["config"] = config_to_json(opts);
    manifest["radii"] = radii_to_json(radii);
    json in;
    for (const auto& [path, checksum] : inputs) in[path] = checksum;
    manifest["inputs"] = in;
    manifest["outputs"] = outputs;
    atomic_write(out_path, manifest.dump(2) + "\n");
}

readseq::Dataset load_dataset(const std::string& fixations_path,
                              const std::string& layout_path,
                              const std::string& scores_path) {
    require_input_file(fixations_path);
    require_input_file(layout_path);
    if (!scores_path.empty()) require_input_file(scores_path);

    std::ifstream fix_in(fixations_path);
    auto fixations = readseq::parse_fixations(fix_in);
    std::ifstream layout_in(layout_path);
    auto layouts = readseq::parse_layouts(layout_in);
    std::map<std::string, readseq::Scores> scores;
    if (!scores_path.empty()) {
        std::ifstream scores_in(scores_path);
        scores = readseq::parse_scores(scores_in);
    }
    return readseq::build_dataset(std::move(fixations), std::move(layouts), scores);
}

void warn_filtered(const readseq::PipelineResult& result) {
    for (const auto& participant : result.participants) {
        if (participant.filtered.pages_dropped > 0) {
            std::cerr << "note: " << participant.participant_id << ": dropped "
                      << participant.filtered.pages_dropped << " non-content page(s), "
                      << participant.filtered.fixations_dropped << " fixation(s)\n";
        }
        if (participant.pages.empty()) {
            std::cerr << "warning: " << participant.participant_id
                      << ": no content pages left after filtering\n";
        }
    }
}

void print_radii(const readseq::RegionRadii& radii) {
    std::cout << "r_foveal ≈ " << std::llround(radii.r_foveal_px) << " px, r_parafoveal ≈ "
              << std::llround(radii.r_parafoveal_px) << " px (candidate radius "
              << std::llround(radii.candidate_radius_px) << " px)\n";
}

std::string to_tsv(const std::vector<readseq::SessionFeatures>& rows) {
    std::ostringstream out;
    readseq::write_feature_matrix(out, rows);
    return out.str();
}

json synth_config_to_json(const readseq::SynthConfig& c) {
    return {{"seed", c.seed},
            {"lines", c.lines},
            {"words_per_line", c.words_per_line},
            {"word_width_px", c.word_width_px},
            {"word_height_px", c.word_height_px},
            {"word_gap_px", c.word_gap_px},
            {"line_spacing_px", c.line_spacing_px},
            {"noise_sigma_px", c.noise_sigma_px},
            {"regression_prob", c.regression_prob},
            {"skip_prob", c.skip_prob},
            {"off_text_prob", c.off_text_prob},
            {"fix_duration_mean_ms", c.fix_duration_mean_ms},
            {"fix_duration_sd_ms", c.fix_duration_sd_ms},
            {"participant_id", c.participant_id},
            {"page_id", c.page_id}};
}

int run_synth(const readseq::SynthConfig& config, const std::string& out_fixations,
              const std::string& out_layout, const std::string& out_truth) {
    const readseq::SynthResult result = readseq::generate(config);

    std::ostringstream fix_out;
    readseq::write_fixations(fix_out, result.fixations);
    atomic_write(out_fixations, fix_out.str());

    std::ostringstream layout_out;
    readseq::write_layouts(layout_out, std::span(&result.layout, 1));
    atomic_write(out_layout, layout_out.str());

    if (!out_truth.empty()) {
        std::ostringstream truth_out;
        truth_out << "fixation\tword_index\tsequence_id\n";
        for (std::size_t i = 0; i < result.truth.size(); ++i) {
            const auto& t = result.truth[i];
            truth_out << i << '\t'
                      << (t.word_index ? std::to_string(*t.word_index) : "none") << '\t'
                      << (t.sequence_id ? std::to_string(*t.sequence_id) : "none") << '\n';
        }
        atomic_write(out_truth, truth_out.str());
    }

    json manifest;
    manifest["tool"] = "readseq";
    manifest["version"] = readseq::kVersion;
    manifest["command"] = "synth";
    manifest["config"] = synth_config_to_json(config);
    manifest["planned_regressions"] = result.planned_regressions;
    json outputs = json::array({out_fixations, out_layout});
    if (!out_truth.empty()) outputs.push_back(out_truth);
    manifest["outputs"] = outputs;
    atomic_write(out_fixations + ".manifest.json", manifest.dump(2) + "\n");

    std::cout << "generated " << result.fixations.size() << " fixations over "
              << result.layout.words.size() << " words (" << result.planned_regressions
              << " planned regressions)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reading-sequence detection and analysis for eye-tracking data"};
    app.set_version_flag("--version", std::string("readseq ") + readseq::kVersion);
    app.require_subcommand(1);

    CommonOptions opts;

    // --- synth ---
    readseq::SynthConfig synth_config;
    std::string synth_out_fixations = "fixations.tsv";
    std::string synth_out_layout = "layout.json";
    std::string synth_out_truth;
    CLI::App* synth = app.add_subcommand("synth", "Generate synthetic fixations with ground truth");
    synth->add_option("--seed", synth_config.seed, "Random seed");
    synth->add_option("--lines", synth_config.lines, "Text lines on the page");
    synth->add_option("--words-per-line", synth_config.words_per_line, "Words per line");
    synth->add_option("--sigma", synth_config.noise_sigma_px, "Fixation jitter sigma in px");
    synth->add_option("--regression-prob", synth_config.regression_prob,
                      "Probability of a regression per fixation");
    synth->add_option("--skip-prob", synth_config.skip_prob,
                      "Probability of a 2-4 word forward skip");
    synth->add_option("--off-text-prob", synth_config.off_text_prob,
                      "Probability of an off-text fixation");
    synth->add_option("--participant", synth_config.participant_id, "Participant id");
    synth->add_option("--page", synth_config.page_id, "Page id");
    synth->add_option("--out-fixations", synth_out_fixations, "Fixation log output path");
    synth->add_option("--out-layout", synth_out_layout, "Layout JSON output path");
    synth->add_option("--out-truth", synth_out_truth, "Ground truth output path (optional)");

    // --- align ---
    std::string fixations_path, layout_path, scores_path, out_path, sequences_path;
    CLI::App* align = app.add_subcommand("align", "Assign fixations to words and dump them");
    align->add_option("--fixations", fixations_path, "Fixation log")->required();
    align->add_option("--layout", layout_path, "Word layout JSON")->required();
    align->add_option("--out", out_path, "Aligned-fixation dump path")->required();
    align->add_option("--sequences", sequences_path, "Optional reading-sequence dump path");
    const GeometryFlags align_geometry = add_common_flags(align, opts);

    // --- features ---
    CLI::App* features = app.add_subcommand("features", "Compute per-participant features");
    features->add_option("--fixations", fixations_path, "Fixation log")->required();
    features->add_option("--layout", layout_path, "Word layout JSON")->required();
    features->add_option("--out", out_path, "Feature matrix path")->required();
    features->add_option("--sequences", sequences_path, "Optional reading-sequence dump path");
    const GeometryFlags features_geometry = add_common_flags(features, opts);

    // --- compare ---
    std::string features_path, score_kind_str = "mcq", phase_str = "kg";
    CLI::App* compare = app.add_subcommand("compare", "Mann-Whitney group comparison");
    compare->add_option("--features", features_path, "Feature matrix")->required();
    compare->add_option("--scores", scores_path, "Scores table")->required();
    compare->add_option("--score-kind", score_kind_str, "mcq|essay (default mcq)");
    compare->add_option("--phase", phase_str, "pre|post|kg (default kg)");
    compare->add_option("--out", out_path, "Comparison report path")->required();
    const GeometryFlags compare_geometry = add_common_flags(compare, opts);

    // --- pipeline ---
    std::string out_dir = "out";
    CLI::App* pipeline = app.add_subcommand(
        "pipeline", "Full chain: ingest, align, sequences, features, comparisons");
    pipeline->add_option("--fixations", fixations_path, "Fixation log")->required();
    pipeline->add_option("--layout", layout_path, "Word layout JSON")->required();
    pipeline->add_option("--scores", scores_path, "Scores table (optional)");
    pipeline->add_option("--out", out_dir, "Output directory");
    const GeometryFlags pipeline_geometry = add_common_flags(pipeline, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            return run_synth(synth_config, synth_out_fixations, synth_out_layout,
                             synth_out_truth);
        }

        if (align->parsed() || features->parsed()) {
            resolve_geometry(opts, align->parsed() ? align_geometry : features_geometry);
            const readseq::Dataset dataset = load_dataset(fixations_path, layout_path, "");
            const readseq::PipelineResult result = readseq::run_pipeline(dataset, opts.pipeline);
            warn_filtered(result);
            print_radii(result.radii);

            std::ostringstream out;
            std::string command;
            if (align->parsed()) {
                command = "align";
                readseq::write_aligned_dump(out, result, opts.pipeline.eq1_form);
            } else {
                command = "features";
                std::vector<readseq::SessionFeatures> rows;
                for (const auto& participant : result.participants) {
                    if (participant.features.zero_time_base) {
                        std::cerr << "warning: " << participant.participant_id
                                  << ": zero reading time, per-second features set to 0\n";
                    }
                    rows.push_back(participant.features);
                }
                readseq::write_feature_matrix(out, rows);
            }
            atomic_write(out_path, out.str());

            std::vector<std::string> outputs{out_path};
            if (!sequences_path.empty()) {
                std::ostringstream seq_out;
                readseq::write_sequence_dump(seq_out, result);
                atomic_write(sequences_path, seq_out.str());
                outputs.push_back(sequences_path);
            }
            write_manifest(out_path + ".manifest.json", command, opts, result.radii,
                           {{fixations_path, hex64(fnv1a64_file(fixations_path))},
                            {layout_path, hex64(fnv1a64_file(layout_path))}},
                           outputs);
            return 0;
        }

        if (compare->parsed()) {
            resolve_geometry(opts, compare_geometry);
            require_input_file(features_path);
            require_input_file(scores_path);

            std::ifstream features_in(features_path);
            const auto rows = readseq::parse_feature_matrix(features_in);
            std::ifstream scores_in(scores_path);
            const auto scores = readseq::parse_scores(scores_in);

            readseq::ScoreKind kind;
            if (score_kind_str == "mcq") kind = readseq::ScoreKind::mcq;
            else if (score_kind_str == "essay") kind = readseq::ScoreKind::essay;
            else throw readseq::ValidationError("unknown score kind '" + score_kind_str + "'");
            readseq::Phase phase;
            if (phase_str == "pre") phase = readseq::Phase::pre;
            else if (phase_str == "post") phase = readseq::Phase::post;
            else if (phase_str == "kg") phase = readseq::Phase::kg;
            else throw readseq::ValidationError("unknown phase '" + phase_str + "'");

            const auto split = readseq::split_groups(scores, kind, phase, opts.equal_mean);
            const auto comparisons = readseq::compare_all(rows, split);

            std::ostringstream out;
            readseq::write_comparison_report(out, comparisons);
            atomic_write(out_path, out.str());
            readseq::write_comparison_table(std::cout, split, comparisons);

            write_manifest(out_path + ".manifest.json", "compare", opts,
                           readseq::compute_radii(opts.pipeline.geometry,
                                                  opts.pipeline.radii_form),
                           {{features_path, hex64(fnv1a64_file(features_path))},
                            {scores_path, hex64(fnv1a64_file(scores_path))}},
                           {out_path});
            return 0;
        }

        if (pipeline->parsed()) {
            resolve_geometry(opts, pipeline_geometry);
            const readseq::Dataset dataset =
                load_dataset(fixations_path, layout_path, scores_path);
            const readseq::PipelineResult result = readseq::run_pipeline(dataset, opts.pipeline);
            warn_filtered(result);
            print_radii(result.radii);

            std::vector<readseq::SessionFeatures> rows;
            std::map<std::string, readseq::Scores> scores;
            for (const auto& participant : result.participants) {
                rows.push_back(participant.features);
            }
            for (const auto& session : dataset.sessions) {
                if (session.scores) scores[session.participant_id] = *session.scores;
            }

            const std::string features_out = (fs::path(out_dir) / "features.tsv").string();
            atomic_write(features_out, to_tsv(rows));
            // Manifest entries are relative to the output directory, so two
            // runs into different directories stay byte-identical.
            std::vector<std::string> outputs{"features.tsv"};

            std::map<std::string, std::string> inputs{
                {fixations_path, hex64(fnv1a64_file(fixations_path))},
                {layout_path, hex64(fnv1a64_file(layout_path))}};
            if (!scores_path.empty()) {
                inputs[scores_path] = hex64(fnv1a64_file(scores_path));
            }

            if (!scores.empty()) {
                std::size_t comparisons_written = 0;
                for (const auto kind : {readseq::ScoreKind::mcq, readseq::ScoreKind::essay}) {
                    for (const auto phase :
                         {readseq::Phase::pre, readseq::Phase::post, readseq::Phase::kg}) {
                        const std::string stem = std::string("compare_") + to_string(kind) +
                                                 "_" + to_string(phase);
                        readseq::GroupSplit split;
                        try {
                            split = readseq::split_groups(scores, kind, phase, opts.equal_mean);
                        } catch (const readseq::DegenerateDataError& e) {
                            std::cerr << "warning: skipping " << stem << ": " << e.what()
                                      << "\n";
                            continue;
                        }
                        const auto comparisons = readseq::compare_all(rows, split);
                        std::ostringstream report;
                        readseq::write_comparison_report(report, comparisons);
                        const std::string report_path =
                            (fs::path(out_dir) / (stem + ".tsv")).string();
                        atomic_write(report_path, report.str());
                        outputs.push_back(stem + ".tsv");

                        std::ostringstream table;
                        readseq::write_comparison_table(table, split, comparisons);
                        const std::string table_path =
                            (fs::path(out_dir) / (stem + ".txt")).string();
                        atomic_write(table_path, table.str());
                        outputs.push_back(stem + ".txt");
                        comparisons_written += 1;
                    }
                }
                if (comparisons_written == 0) {
                    throw readseq::DegenerateDataError(
                        "scores were supplied but every group split is degenerate");
                }
            }

            write_manifest((fs::path(out_dir) / "manifest.json").string(), "pipeline", opts,
                           result.radii, inputs, outputs);
            return 0;
        }
    } catch (const readseq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const readseq::DegenerateDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const readseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
