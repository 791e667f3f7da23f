#include "corvar/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "corvar/errors.hpp"

namespace corvar {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string percent(double v) { return fixed(v * 100.0, 2) + "%"; }

// Shortest representation that round-trips, for machine-readable output.
std::string full(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string integer_text(double v) {
  return std::to_string(static_cast<std::uint64_t>(v));
}

std::string md_cell(const std::optional<double>& v, bool as_percent,
                    bool as_integer) {
  if (!v) return "—";
  if (as_integer) return integer_text(*v);
  if (as_percent) return percent(*v);
  return fixed(*v, 3);
}

std::string csv_cell(const std::optional<double>& v, bool as_integer) {
  if (!v) return "";
  if (as_integer) return integer_text(*v);
  return full(*v);
}

}  // namespace

std::vector<std::string> ComparisonReport::lexical_ids() const {
  std::vector<std::string> ids;
  ids.reserve(lexical.size());
  for (const auto& p : lexical) ids.push_back(p.id);
  return ids;
}

std::vector<std::string> ComparisonReport::syntactic_ids() const {
  std::vector<std::string> ids;
  ids.reserve(syntactic.size());
  for (const auto& p : syntactic) ids.push_back(p.id);
  return ids;
}

std::vector<ReportRow> ComparisonReport::lexical_rows() const {
  struct RowSpec {
    const char* key;
    const char* label;
    bool percent;
    bool integer;
    std::optional<double> (*get)(const LexicalProfile&);
  };
  static const RowSpec specs[] = {
      {"token_count", "Tokens (N)", false, true,
       [](const LexicalProfile& p) -> std::optional<double> {
         return static_cast<double>(p.token_count);
       }},
      {"type_count", "Types (V)", false, true,
       [](const LexicalProfile& p) -> std::optional<double> {
         return static_cast<double>(p.type_count);
       }},
      {"ttr", "Type-token ratio", false, false,
       [](const LexicalProfile& p) -> std::optional<double> { return p.ttr; }},
      {"monosyllabic_type_count", "Monosyllabic types", false, true,
       [](const LexicalProfile& p) -> std::optional<double> {
         return static_cast<double>(p.monosyllabic_type_count);
       }},
      {"monosyllabic_proportion", "Monosyllabic share of types", true, false,
       [](const LexicalProfile& p) -> std::optional<double> {
         return p.monosyllabic_proportion;
       }},
      {"hapax_count", "Hapax legomena", false, true,
       [](const LexicalProfile& p) -> std::optional<double> {
         return static_cast<double>(p.hapax_count);
       }},
      {"hapax_proportion", "Hapax share of types", true, false,
       [](const LexicalProfile& p) -> std::optional<double> {
         return p.hapax_proportion;
       }},
      {"h_point", "h-point", false, false,
       [](const LexicalProfile& p) -> std::optional<double> {
         return p.h_point;
       }},
      {"r_value", "Richness index R", false, false,
       [](const LexicalProfile& p) -> std::optional<double> {
         return p.r_value;
       }},
      {"a_value", "Frequency structure a", false, false,
       [](const LexicalProfile& p) -> std::optional<double> {
         return p.a_value;
       }},
  };

  std::vector<ReportRow> rows;
  rows.reserve(std::size(specs));
  for (const auto& spec : specs) {
    ReportRow row;
    row.key = spec.key;
    row.label = spec.label;
    row.percent = spec.percent;
    row.integer = spec.integer;
    for (const auto& p : lexical) row.values.push_back(spec.get(p));
    for (const auto& rel : relevance) {
      if (rel.metric != row.key) continue;
      row.relevance = rel.result;
      row.relevance_error = rel.error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComparisonReport build_comparison(std::vector<LexicalProfile> lexical,
                                  std::vector<SyntacticProfile> syntactic,
                                  const ComparisonOptions& opts) {
  if (lexical.empty() && syntactic.empty())
    throw_error(errc::empty_corpus, "comparison needs at least one profile");

  ComparisonReport report;
  report.lexical = std::move(lexical);
  report.syntactic = std::move(syntactic);
  report.top_relations = opts.top_relations;
  if (opts.with_relevance) {
    if (report.lexical.size() >= 3) {
      report.relevance = correlate_with_size(report.lexical);
    } else if (!report.lexical.empty()) {
      report.warnings.push_back(
          "size relevance needs at least 3 corpora; omitted");
    }
  }
  return report;
}

ComparisonReport build_comparison(const std::vector<Profile>& profiles,
                                  const ComparisonOptions& opts) {
  std::vector<LexicalProfile> lexical;
  std::vector<SyntacticProfile> syntactic;
  for (const auto& p : profiles) {
    if (const auto* lex = std::get_if<LexicalProfile>(&p))
      lexical.push_back(*lex);
    else
      syntactic.push_back(std::get<SyntacticProfile>(p));
  }
  return build_comparison(std::move(lexical), std::move(syntactic), opts);
}

std::string render_markdown(const ComparisonReport& report) {
  std::string out = "# Corpus comparison\n";

  for (const auto& warning : report.warnings) {
    out += "\n> ";
    out += warning;
    out += '\n';
  }

  if (!report.lexical.empty()) {
    out += "\n## Lexical metrics\n\n| Metric |";
    for (const auto& id : report.lexical_ids()) {
      out += ' ';
      out += id;
      out += " |";
    }
    if (report.has_relevance()) out += " Size relevance |";
    out += "\n| --- |";
    for (std::size_t i = 0; i < report.lexical.size(); ++i) out += " ---: |";
    if (report.has_relevance()) out += " ---: |";
    out += '\n';
    for (const auto& row : report.lexical_rows()) {
      out += "| ";
      out += row.label;
      out += " |";
      for (const auto& v : row.values) {
        out += ' ';
        out += md_cell(v, row.percent, row.integer);
        out += " |";
      }
      if (report.has_relevance()) {
        out += ' ';
        if (row.relevance)
          out += fixed(row.relevance->rho, 3) + "(" +
                 fixed(row.relevance->p_value, 3) + ")";
        else
          out += "—";
        out += " |";
      }
      out += '\n';
    }
  }

  if (!report.syntactic.empty()) {
    out += "\n## Syntactic metrics\n\n| Metric |";
    for (const auto& id : report.syntactic_ids()) {
      out += ' ';
      out += id;
      out += " |";
    }
    out += "\n| --- |";
    for (std::size_t i = 0; i < report.syntactic.size(); ++i) out += " ---: |";
    out += '\n';
    out += "| Sentences |";
    for (const auto& p : report.syntactic)
      out += ' ' + std::to_string(p.sentence_count) + " |";
    out += "\n| Dependency arcs |";
    for (const auto& p : report.syntactic)
      out += ' ' + std::to_string(p.arc_count) + " |";
    out += "\n| Mean dependency distance |";
    for (const auto& p : report.syntactic)
      out += ' ' + fixed(p.mean_mdd, 3) + " |";
    out += '\n';

    for (const auto& p : report.syntactic) {
      out += "\n### Relations — ";
      out += p.id;
      out += "\n\n| Relation | Share | Mean signed distance |\n";
      out += "| --- | ---: | ---: |\n";
      const std::size_t n = std::min(report.top_relations, p.relations.size());
      for (std::size_t i = 0; i < n; ++i) {
        const auto& r = p.relations[i];
        out += "| " + r.label + " | " + percent(r.proportion) + " | " +
               fixed(r.mean_signed_distance, 3) + " |\n";
      }
    }
  }
  return out;
}

std::string render_csv(const ComparisonReport& report) {
  std::string out;

  if (!report.lexical.empty()) {
    out += "metric";
    for (const auto& id : report.lexical_ids()) out += ',' + id;
    if (report.has_relevance())
      out += ",relevance_rho,relevance_p,relevance_method";
    out += '\n';
    for (const auto& row : report.lexical_rows()) {
      out += row.key;
      for (const auto& v : row.values) out += ',' + csv_cell(v, row.integer);
      if (report.has_relevance()) {
        if (row.relevance) {
          out += ',' + full(row.relevance->rho);
          out += ',' + full(row.relevance->p_value);
          out += ',' + row.relevance->method;
        } else {
          out += ",,,";
        }
      }
      out += '\n';
    }
  }

  if (!report.syntactic.empty()) {
    if (!out.empty()) out += '\n';
    out += "metric";
    for (const auto& id : report.syntactic_ids()) out += ',' + id;
    out += '\n';
    out += "sentence_count";
    for (const auto& p : report.syntactic)
      out += ',' + std::to_string(p.sentence_count);
    out += "\narc_count";
    for (const auto& p : report.syntactic)
      out += ',' + std::to_string(p.arc_count);
    out += "\nmean_mdd";
    for (const auto& p : report.syntactic) out += ',' + full(p.mean_mdd);
    out += '\n';

    out += "\nrelation,corpus,proportion,mean_signed_distance\n";
    for (const auto& p : report.syntactic) {
      const std::size_t n = std::min(report.top_relations, p.relations.size());
      for (std::size_t i = 0; i < n; ++i) {
        const auto& r = p.relations[i];
        out += r.label + ',' + p.id + ',' + full(r.proportion) + ',' +
               full(r.mean_signed_distance) + '\n';
      }
    }
  }
  return out;
}

nlohmann::ordered_json report_to_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["lexical"] = nlohmann::ordered_json::array();
  for (const auto& p : report.lexical) j["lexical"].push_back(to_json(p));
  j["syntactic"] = nlohmann::ordered_json::array();
  for (const auto& p : report.syntactic) j["syntactic"].push_back(to_json(p));
  if (report.has_relevance()) {
    auto rel = nlohmann::ordered_json::array();
    for (const auto& row : report.relevance) {
      nlohmann::ordered_json rj;
      rj["metric"] = row.metric;
      if (row.result) {
        rj["rho"] = row.result->rho;
        rj["p_value"] = row.result->p_value;
        rj["n"] = row.result->n;
        rj["method"] = row.result->method;
      } else {
        rj["error"] = row.error;
      }
      rel.push_back(std::move(rj));
    }
    j["relevance"] = std::move(rel);
  } else {
    j["relevance"] = nullptr;
  }
  j["top_relations"] = report.top_relations;
  j["warnings"] = report.warnings;
  return j;
}

std::string render_json(const ComparisonReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

ComparisonReport comparison_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw_error(errc::schema, "comparison: expected a JSON object");
  for (const char* key :
       {"lexical", "syntactic", "relevance", "top_relations", "warnings"})
    if (!j.contains(key))
      throw_error(errc::schema,
                  std::string("comparison: missing field \"") + key + "\"");
  if (j.size() != 5)
    throw_error(errc::schema, "comparison: unknown extra fields present");

  ComparisonReport report;
  for (const auto& pj : j.at("lexical"))
    report.lexical.push_back(lexical_profile_from_json(pj));
  for (const auto& pj : j.at("syntactic"))
    report.syntactic.push_back(syntactic_profile_from_json(pj));
  const auto& rel = j.at("relevance");
  if (!rel.is_null()) {
    for (const auto& rj : rel) {
      SizeCorrelationRow row;
      row.metric = rj.at("metric").get<std::string>();
      if (rj.contains("error")) {
        row.error = rj.at("error").get<std::string>();
      } else {
        CorrelationResult r;
        r.rho = rj.at("rho").get<double>();
        r.p_value = rj.at("p_value").get<double>();
        r.n = rj.at("n").get<std::size_t>();
        r.method = rj.at("method").get<std::string>();
        row.result = std::move(r);
      }
      report.relevance.push_back(std::move(row));
    }
  }
  report.top_relations = j.at("top_relations").get<std::size_t>();
  for (const auto& w : j.at("warnings"))
    report.warnings.push_back(w.get<std::string>());
  return report;
}

}  // namespace corvar
