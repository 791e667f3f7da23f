#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "corvar/profile_io.hpp"
#include "corvar/rank_stats.hpp"

namespace corvar {

struct ReportRow {
  std::string key;    // machine-readable, used in CSV and JSON
  std::string label;  // human-readable, used in Markdown
  bool percent = false;
  bool integer = false;
  std::vector<std::optional<double>> values;  // one per lexical profile
  std::optional<CorrelationResult> relevance;  // this metric vs corpus size
  std::string relevance_error;

  bool operator==(const ReportRow&) const = default;
};

struct ComparisonReport {
  std::vector<LexicalProfile> lexical;
  std::vector<SyntacticProfile> syntactic;
  std::vector<SizeCorrelationRow> relevance;  // empty when not computed
  std::size_t top_relations = 5;
  std::vector<std::string> warnings;

  std::vector<std::string> lexical_ids() const;
  std::vector<std::string> syntactic_ids() const;
  bool has_relevance() const { return !relevance.empty(); }

  // Size row first, then the nine derived metrics in fixed order.
  std::vector<ReportRow> lexical_rows() const;

  bool operator==(const ComparisonReport&) const = default;
};

struct ComparisonOptions {
  std::size_t top_relations = 5;
  bool with_relevance = true;
};

// Throws errc::empty_corpus when no profile of either kind is given.
// Relevance needs at least 3 lexical profiles; with fewer it is omitted and
// a warning recorded.
ComparisonReport build_comparison(std::vector<LexicalProfile> lexical,
                                  std::vector<SyntacticProfile> syntactic,
                                  const ComparisonOptions& opts = {});
ComparisonReport build_comparison(const std::vector<Profile>& profiles,
                                  const ComparisonOptions& opts = {});

std::string render_markdown(const ComparisonReport& report);
std::string render_csv(const ComparisonReport& report);
nlohmann::ordered_json report_to_json(const ComparisonReport& report);
std::string render_json(const ComparisonReport& report);
ComparisonReport comparison_from_json(const nlohmann::json& j);

}  // namespace corvar
