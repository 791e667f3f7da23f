#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "corvar/errors.hpp"
#include "corvar/profile_io.hpp"
#include "corvar/report.hpp"

using namespace corvar;

namespace {

LexicalProfile lex(const std::string& id, std::uint64_t n, std::uint64_t v,
                   double h, bool with_r = true) {
  LexicalProfile p;
  p.id = id;
  p.token_count = n;
  p.type_count = v;
  p.ttr = static_cast<double>(v) / static_cast<double>(n);
  p.hapax_count = v / 2;
  p.hapax_proportion = 0.5611;
  p.monosyllabic_type_count = v / 10;
  p.monosyllabic_proportion = 0.0859 + 0.001 * static_cast<double>(n % 7);
  p.h_point = h;
  p.arc_length_total = 120.5;
  if (with_r) {
    p.arc_length_to_h = 50.25;
    p.r_value = 0.583;
  }
  p.a_value = static_cast<double>(n) / (h * h);
  return p;
}

SyntacticProfile syn(const std::string& id) {
  SyntacticProfile p;
  p.id = id;
  p.sentence_count = 100;
  p.arc_count = 900;
  p.mean_mdd = 3.7925;
  p.relations = {{"ATT", 0.45, 2.1}, {"VOB", 0.35, -1.4}, {"WP", 0.2, -5.0}};
  return p;
}

ComparisonReport compare_lex(std::vector<LexicalProfile> lexical,
                             ComparisonOptions opts = {}) {
  return build_comparison(std::move(lexical), {}, opts);
}

}  // namespace

TEST_CASE("profile json round trips with strict schemas") {
  const LexicalProfile p = lex("sin", 43840, 10407, 61.0);
  const auto j = nlohmann::json::parse(render_profile_json(p));
  CHECK(lexical_profile_from_json(j) == p);

  const LexicalProfile partial = lex("tiny", 10, 4, 1.5, false);
  const auto j2 = nlohmann::json::parse(render_profile_json(partial));
  CHECK(j2.at("r_value").is_null());
  CHECK(lexical_profile_from_json(j2) == partial);

  const SyntacticProfile s = syn("mld");
  const auto j3 = nlohmann::json::parse(render_profile_json(s));
  CHECK(syntactic_profile_from_json(j3) == s);

  // the variant reader distinguishes the two kinds
  CHECK(std::holds_alternative<LexicalProfile>(profile_from_json(j)));
  CHECK(std::holds_alternative<SyntacticProfile>(profile_from_json(j3)));
}

TEST_CASE("profile readers reject unknown and missing fields") {
  const auto base =
      nlohmann::json::parse(render_profile_json(lex("x", 100, 40, 3.0)));

  auto extra = base;
  extra["surprise"] = 1;
  try {
    (void)lexical_profile_from_json(extra);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::schema);
    CHECK(std::string(e.what()).find("surprise") != std::string::npos);
  }

  auto missing = base;
  missing.erase("ttr");
  CHECK_THROWS_AS((void)lexical_profile_from_json(missing), error);

  auto wrong_type = base;
  wrong_type["token_count"] = "many";
  CHECK_THROWS_AS((void)lexical_profile_from_json(wrong_type), error);

  auto rel_extra =
      nlohmann::json::parse(render_profile_json(syn("s")));
  rel_extra["relations"][0]["count"] = 5;
  CHECK_THROWS_AS((void)syntactic_profile_from_json(rel_extra), error);
}

TEST_CASE("comparison rules: profile counts and relevance threshold") {
  CHECK_THROWS_AS((void)compare_lex({}), error);

  const auto two = compare_lex({lex("a", 100, 30, 3), lex("b", 200, 50, 4)});
  CHECK_FALSE(two.has_relevance());
  REQUIRE(two.warnings.size() == 1);
  CHECK(two.warnings[0].find("at least 3") != std::string::npos);

  const auto three = compare_lex(
      {lex("a", 100, 30, 3), lex("b", 200, 50, 4), lex("c", 400, 90, 6)});
  CHECK(three.has_relevance());
  CHECK(three.relevance.size() == 9);
  CHECK(three.warnings.empty());

  const auto off = compare_lex(
      {lex("a", 100, 30, 3), lex("b", 200, 50, 4), lex("c", 400, 90, 6)},
      {.with_relevance = false});
  CHECK_FALSE(off.has_relevance());
  CHECK(off.warnings.empty());
}

TEST_CASE("markdown rendering is deterministic and formats cells") {
  const auto report = build_comparison(
      {lex("sin", 43840, 10407, 61.0), lex("mld", 49670, 11813, 78.0, false)},
      {syn("sin"), syn("mld")}, {.top_relations = 2});

  const std::string md = render_markdown(report);
  CHECK(md == render_markdown(report));

  CHECK(md.find("| Metric | sin | mld |") != std::string::npos);
  CHECK(md.find("56.11%") != std::string::npos);   // percent formatting
  CHECK(md.find("| 43840 |") != std::string::npos);  // integer formatting
  CHECK(md.find("0.583") != std::string::npos);    // plain real
  CHECK(md.find("—") != std::string::npos);        // absent r_value for mld
  CHECK(md.find("### Relations — sin") != std::string::npos);
  CHECK(md.find("45.00%") != std::string::npos);   // relation share
  CHECK(md.find("WP") == std::string::npos);       // cut by top_relations = 2
}

TEST_CASE("markdown relevance cells use rho(p) with three decimals") {
  ComparisonReport report;
  report.lexical = {lex("a", 100, 30, 3), lex("b", 200, 50, 4),
                    lex("c", 400, 90, 6)};
  SizeCorrelationRow row;
  row.metric = "ttr";
  row.result = CorrelationResult{0.0857142857, 0.8724, 6, "exact-permutation"};
  report.relevance.push_back(row);

  const std::string md = render_markdown(report);
  CHECK(md.find("0.086(0.872)") != std::string::npos);
}

TEST_CASE("csv rendering keeps a rectangular lexical block") {
  const auto report =
      compare_lex({lex("a", 100, 30, 3), lex("b", 200, 50, 4, false)});
  const std::string csv = render_csv(report);

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    const auto nl = csv.find('\n', start);
    lines.push_back(csv.substr(start, nl - start));
    start = nl + 1;
  }
  REQUIRE(lines.size() == 11);  // header + size row + nine metric rows
  CHECK(lines[0] == "metric,a,b");
  for (const auto& line : lines) {
    const auto commas =
        static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    CHECK(commas == 2);  // one label column + one column per corpus
  }
  CHECK(lines[1].rfind("token_count,100,200", 0) == 0);
  // absent r_value renders as an empty cell
  bool saw_r = false;
  for (const auto& line : lines)
    if (line.rfind("r_value,", 0) == 0) {
      CHECK(line == "r_value,0.583,");
      saw_r = true;
    }
  CHECK(saw_r);
}

TEST_CASE("csv relevance adds exactly three columns") {
  const auto report = compare_lex(
      {lex("a", 100, 30, 3), lex("b", 200, 50, 4), lex("c", 400, 90, 6)});
  const std::string csv = render_csv(report);
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == "metric,a,b,c,relevance_rho,relevance_p,relevance_method");
}

TEST_CASE("report json round trips") {
  const auto report = build_comparison(
      {lex("a", 100, 30, 3), lex("b", 200, 50, 4), lex("c", 400, 90, 6)},
      {syn("a")}, {.top_relations = 4});
  const auto j = nlohmann::json::parse(render_json(report));
  const ComparisonReport back = comparison_from_json(j);
  CHECK(back == report);

  auto corrupted = j;
  corrupted["extra"] = true;
  CHECK_THROWS_AS((void)comparison_from_json(corrupted), error);
}
