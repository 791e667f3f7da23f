#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corvar/corpus.hpp"
#include "corvar/errors.hpp"
#include "corvar/feature_words.hpp"
#include "corvar/ingest.hpp"
#include "corvar/lexical.hpp"
#include "corvar/profile_io.hpp"
#include "corvar/report.hpp"
#include "corvar/syntactic.hpp"

namespace {

using namespace corvar;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw_error(errc::io, "cannot open " + out_path + " for writing");
  out << text;
  out.flush();
  if (!out) throw_error(errc::io, "write failed on " + out_path);
}

std::string resolve_id(const std::string& id, const std::string& input) {
  if (!id.empty()) return id;
  return std::filesystem::path(input).stem().string();
}

enum class OutputFormat { json, csv, markdown };

struct FormatFlags {
  bool json = false;
  bool csv = false;
  bool markdown = false;

  OutputFormat pick(OutputFormat fallback) const {
    if (json) return OutputFormat::json;
    if (csv) return OutputFormat::csv;
    if (markdown) return OutputFormat::markdown;
    return fallback;
  }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags) {
  auto* json = cmd->add_flag("--json", flags.json, "JSON output");
  auto* csv = cmd->add_flag("--csv", flags.csv, "CSV output");
  auto* md = cmd->add_flag("--markdown", flags.markdown, "Markdown output");
  json->excludes(csv)->excludes(md);
  csv->excludes(md);
}

std::string render_report(const ComparisonReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return render_json(report);
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::markdown: return render_markdown(report);
  }
  return {};
}

int run(int argc, char** argv) {
  CLI::App app{"corpus variation metrics"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Compute a lexical or syntactic profile for one corpus");
  std::string an_input, an_format = "tokens", an_id, an_out;
  FormatFlags an_flags;
  bool an_han_only = true;
  bool an_exclude_punct_tokens = false;
  bool an_include_punct_arcs = true;
  analyze->add_option("--input", an_input, "Corpus file")->required();
  analyze->add_option("--format", an_format, "Input format")
      ->check(CLI::IsMember({"tokens", "conllu"}));
  add_format_flags(analyze, an_flags);
  analyze->add_flag("--han-only,!--no-han-only", an_han_only,
                    "Count only Han characters as monosyllabic types");
  analyze->add_flag("--exclude-punct-tokens", an_exclude_punct_tokens,
                    "Drop all-punctuation tokens before lexical analysis");
  analyze->add_flag("--include-punct-arcs,!--exclude-punct-arcs",
                    an_include_punct_arcs,
                    "Keep arcs whose dependent is punctuation");
  analyze->add_option("--id", an_id, "Corpus id (default: file stem)");
  analyze->add_option("--out", an_out, "Output file (default: stdout)");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Draw a fixed-size random sample of sentences");
  std::string sm_input, sm_format = "tokens", sm_out;
  std::size_t sm_n = 2000;
  std::uint64_t sm_seed = 0;
  sample->add_option("--input", sm_input, "Corpus file")->required();
  sample->add_option("--format", sm_format, "Input format")
      ->check(CLI::IsMember({"tokens", "conllu"}));
  sample->add_option("--n", sm_n, "Sentences to keep");
  sample->add_option("--seed", sm_seed, "Sampling seed");
  sample->add_option("--out", sm_out, "Output file (default: stdout)");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Cross-corpus report from saved profiles");
  std::vector<std::string> cp_profiles;
  std::string cp_out;
  std::size_t cp_top = 5;
  bool cp_relevance = true;
  FormatFlags cp_flags;
  compare->add_option("--profiles", cp_profiles, "Profile JSON files")
      ->required()
      ->expected(-1);
  compare->add_flag("--relevance,!--no-relevance", cp_relevance,
                    "Correlate lexical metrics with corpus size");
  add_format_flags(compare, cp_flags);
  compare->add_option("--top", cp_top, "Relations shown per corpus");
  compare->add_option("--out", cp_out, "Output file (default: stdout)");

  // features
  auto* features = app.add_subcommand(
      "features", "Candidate regional feature words with KWIC contexts");
  std::string ft_target, ft_reference, ft_out;
  ExtractOptions ft_opts;
  features->add_option("--target", ft_target, "Corpus to scan")->required();
  features->add_option("--reference", ft_reference, "Reference corpus")
      ->required();
  features->add_option("--min-freq", ft_opts.min_frequency,
                       "Minimum candidate frequency");
  features->add_option("--contexts", ft_opts.max_contexts,
                       "KWIC contexts per candidate");
  features->add_option("--window", ft_opts.window, "KWIC window (tokens)");
  features->add_option("--out", ft_out, "Output TSV (default: stdout)");

  // relations
  auto* relations = app.add_subcommand(
      "relations", "Dependency relation distribution of a treebank");
  std::string rl_input;
  std::size_t rl_top = 5;
  bool rl_include_punct_arcs = true;
  relations->add_option("--input", rl_input, "CoNLL-U file")->required();
  relations->add_option("--top", rl_top, "Rows to show");
  relations->add_flag("--include-punct-arcs,!--exclude-punct-arcs",
                      rl_include_punct_arcs,
                      "Keep arcs whose dependent is punctuation");

  // mdd
  auto* mdd = app.add_subcommand(
      "mdd", "Mean dependency distance summary of a treebank");
  std::string md_input;
  std::size_t md_top = 3;
  bool md_include_punct_arcs = true;
  mdd->add_option("--input", md_input, "CoNLL-U file")->required();
  mdd->add_option("--top-sentences", md_top,
                  "Longest-distance sentences to list");
  mdd->add_flag("--include-punct-arcs,!--exclude-punct-arcs",
                md_include_punct_arcs,
                "Keep arcs whose dependent is punctuation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? 0 : 1;
  }

  if (*analyze) {
    if (an_format == "tokens") {
      Corpus corpus = parse_tokens_file(an_input, resolve_id(an_id, an_input));
      if (an_exclude_punct_tokens) corpus = filter_punctuation_tokens(corpus);
      const LexicalProfile profile = lexical_profile(corpus, an_han_only);
      switch (an_flags.pick(OutputFormat::json)) {
        case OutputFormat::json:
          emit(an_out, render_profile_json(profile));
          break;
        case OutputFormat::csv:
          emit(an_out, render_csv(build_comparison({profile}, {},
                                                   {.with_relevance = false})));
          break;
        case OutputFormat::markdown:
          emit(an_out, render_markdown(build_comparison(
                           {profile}, {}, {.with_relevance = false})));
          break;
      }
    } else {
      const ParsedCorpus corpus =
          parse_conllu_file(an_input, resolve_id(an_id, an_input));
      const SyntacticOptions opts{.include_punctuation_arcs =
                                      an_include_punct_arcs};
      const SyntacticProfile profile = syntactic_profile(corpus, opts);
      switch (an_flags.pick(OutputFormat::json)) {
        case OutputFormat::json:
          emit(an_out, render_profile_json(profile));
          break;
        case OutputFormat::csv:
          emit(an_out, render_csv(build_comparison({}, {profile},
                                                   {.with_relevance = false})));
          break;
        case OutputFormat::markdown:
          emit(an_out, render_markdown(build_comparison(
                           {}, {profile}, {.with_relevance = false})));
          break;
      }
    }
    return 0;
  }

  if (*sample) {
    if (sm_format == "tokens") {
      const Corpus corpus = parse_tokens_file(sm_input);
      const Corpus picked = sample_sentences(corpus, sm_n, sm_seed);
      emit(sm_out, render_tokens(picked));
      std::cerr << "sampled " << picked.sentences.size() << " of "
                << corpus.sentences.size() << " sentences, seed " << sm_seed
                << "\n";
    } else {
      const ParsedCorpus corpus = parse_conllu_file(sm_input);
      const ParsedCorpus picked = sample_sentences(corpus, sm_n, sm_seed);
      emit(sm_out,
           render_conllu(picked, "corvar sample seed=" + std::to_string(sm_seed) +
                                     " n=" + std::to_string(sm_n)));
      std::cerr << "sampled " << picked.sentences.size() << " of "
                << corpus.sentences.size() << " sentences, seed " << sm_seed
                << "\n";
    }
    return 0;
  }

  if (*compare) {
    std::vector<Profile> profiles;
    profiles.reserve(cp_profiles.size());
    for (const auto& path : cp_profiles) profiles.push_back(read_profile(path));
    const ComparisonReport report = build_comparison(
        profiles, {.top_relations = cp_top, .with_relevance = cp_relevance});
    for (const auto& warning : report.warnings)
      std::cerr << "warning: " << warning << "\n";
    emit(cp_out, render_report(report, cp_flags.pick(OutputFormat::markdown)));
    return 0;
  }

  if (*features) {
    const Corpus target = parse_tokens_file(ft_target);
    const Corpus reference = parse_tokens_file(ft_reference);
    const auto candidates =
        extract_candidates(target, reference_type_set(reference), ft_opts);
    emit(ft_out, render_annotations(annotation_skeleton(candidates)));
    std::cerr << candidates.size() << " candidate(s)\n";
    return 0;
  }

  if (*relations) {
    const ParsedCorpus corpus = parse_conllu_file(rl_input);
    const SyntacticOptions opts{.include_punctuation_arcs =
                                    rl_include_punct_arcs};
    const auto stats = relation_stats(corpus, opts);
    std::string out = "| Relation | Share | Mean signed distance |\n";
    out += "| --- | ---: | ---: |\n";
    char buf[128];
    for (std::size_t i = 0; i < stats.size() && i < rl_top; ++i) {
      std::snprintf(buf, sizeof buf, "| %s | %.2f%% | %.3f |\n",
                    stats[i].label.c_str(), stats[i].proportion * 100.0,
                    stats[i].mean_signed_distance);
      out += buf;
    }
    emit("", out);
    return 0;
  }

  if (*mdd) {
    const ParsedCorpus corpus = parse_conllu_file(md_input);
    const SyntacticOptions opts{.include_punctuation_arcs =
                                    md_include_punct_arcs};
    const MddSummary summary = corpus_mdd_summary(corpus, opts);
    char buf[160];
    std::string out;
    out += "sentences\t" + std::to_string(summary.sentence_count) + "\n";
    out += "measured_sentences\t" +
           std::to_string(summary.measured_sentence_count) + "\n";
    out += "arcs\t" + std::to_string(summary.arc_count) + "\n";
    std::snprintf(buf, sizeof buf, "macro_mdd\t%.6f\nmicro_mdd\t%.6f\n",
                  summary.macro_mdd, summary.micro_mdd);
    out += buf;
    for (const auto& extreme : extreme_sentences(corpus, md_top, opts)) {
      std::snprintf(buf, sizeof buf, "extreme\tsentence=%zu\tmdd=%.6f\n",
                    extreme.sentence_index + 1, extreme.mdd);
      out += buf;
    }
    emit("", out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
