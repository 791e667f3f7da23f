#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "corvar/corpus.hpp"
#include "corvar/errors.hpp"
#include "corvar/ingest.hpp"
#include "corvar/lexical.hpp"
#include "reference.hpp"

using namespace corvar;

namespace {

FrequencyList list_of(const std::vector<std::uint64_t>& freqs) {
  FrequencyList list;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    list.entries.push_back(FrequencyEntry{"w" + std::to_string(i), freqs[i]});
    list.token_total += freqs[i];
  }
  return list;
}

// Non-increasing random frequencies ending in 1, so the h-point always lies
// inside the list.
FrequencyList random_list(SplitMix64& rng) {
  const std::size_t v = rng.next() % 499 + 2;
  std::vector<std::uint64_t> freqs(v);
  std::uint64_t f = 1;
  for (std::size_t i = v; i-- > 0;) {
    freqs[i] = f;
    f += rng.next() % 4;
  }
  return list_of(freqs);
}

Corpus corpus_of(const std::vector<std::vector<std::string>>& sentences) {
  Corpus corpus;
  corpus.id = "t";
  for (const auto& words : sentences) {
    Sentence s;
    for (const auto& w : words) s.tokens.push_back(Token::make(w));
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace

TEST_CASE("h-point: exact fixed points and interpolation") {
  CHECK(h_point(list_of({3, 2, 1})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h_point(list_of({5, 5, 1, 1})) == doctest::Approx(2.6).epsilon(1e-12));
  CHECK(h_point(list_of({4, 1})) == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(h_point(list_of({1})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h_point(list_of({1, 1, 1})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("h-point: lists with no internal crossing use the virtual endpoint") {
  // every f(r) > r: extend with (V+1, 0)
  CHECK(h_point(list_of({5, 3})) == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(h_point(list_of({7})) == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("h-point matches the geometric oracle on random lists") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const FrequencyList list = random_list(rng);
    const double produced = h_point(list);
    const double expected = ref::h_point_geometric(list);
    CHECK(std::abs(produced - expected) <=
          1e-9 * std::max({1.0, produced, expected}));
    CHECK(produced >= 1.0);
    CHECK(produced <= static_cast<double>(list.type_count()));
  }
}

TEST_CASE("arc lengths: frozen values and the serial reference") {
  CHECK(arc_length_total(list_of({3, 2, 1})) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(arc_length_total(list_of({5, 5, 1, 1})) ==
        doctest::Approx(2.0 + std::sqrt(17.0)).epsilon(1e-12));
  CHECK(arc_length_total(list_of({7})) == 0.0);

  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const FrequencyList list = random_list(rng);
    const double produced = arc_length_total(list);
    const double expected = ref::arc_length_serial(list);
    CHECK(std::abs(produced - expected) <= 1e-9 * std::max(1.0, expected));
  }
}

TEST_CASE("arc length up to the h-point") {
  CHECK(arc_length_to_h(list_of({3, 2, 1}), 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // h = 2.6: one full segment plus the partial piece to (2.6, 2.6)
  CHECK(arc_length_to_h(list_of({5, 5, 1, 1}), 2.6) ==
        doctest::Approx(3.473863375370596).epsilon(1e-12));
  // all-hapax list: h = 1 and the path from (1, f(1)) has zero length
  CHECK(arc_length_to_h(list_of({1, 1, 1}), 1.0) == 0.0);

  CHECK_THROWS_AS((void)arc_length_to_h(list_of({7}), 1.75), error);
}

TEST_CASE("R-value: frozen values and range") {
  CHECK(r_value(list_of({3, 2, 1})) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r_value(list_of({1, 1, 1})) == 1.0);

  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FrequencyList list = random_list(rng);
    const double h = h_point(list);
    const double l = arc_length_total(list);
    const double lh = arc_length_to_h(list, h);
    CHECK(lh >= 0.0);
    CHECK(lh <= l + 1e-9 * std::max(1.0, l));
    const double r = r_value(list);
    CHECK(r >= -1e-12);
    CHECK(r <= 1.0 + 1e-12);
  }
}

TEST_CASE("R-value is undefined when the h-point lies beyond the last rank") {
  // f = [5, 4]: h = 2.4 > V = 2, so the partial segment would overshoot L
  const FrequencyList list = list_of({5, 4});
  CHECK(h_point(list) == doctest::Approx(2.4).epsilon(1e-12));
  try {
    (void)r_value(list);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::undefined_metric);
  }

  const Corpus corpus = corpus_of(
      {{"a", "a", "a", "a", "a"}, {"b", "b", "b", "b"}});
  const LexicalProfile profile = lexical_profile(corpus);
  CHECK(profile.h_point == doctest::Approx(2.4).epsilon(1e-12));
  CHECK_FALSE(profile.arc_length_to_h.has_value());
  CHECK_FALSE(profile.r_value.has_value());
}

TEST_CASE("a-value arithmetic") {
  CHECK(a_value(3, 1.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(a_value(43840, 61.0) == doctest::Approx(11.7818).epsilon(1e-4));
  CHECK(a_value(49670, 78.0) == doctest::Approx(8.1640).epsilon(1e-4));
}

TEST_CASE("hapax and monosyllabic tallies") {
  const Corpus corpus = corpus_of(
      {{"我", "爱", "我", "的", "A"}, {"北京", "的", "咖啡", "的"}});
  const FrequencyList list = build_frequency_list(corpus);

  const HapaxStats hapax = hapax_stats(list);
  CHECK(hapax.count == 4);  // 爱 A 北京 咖啡
  CHECK(hapax.proportion == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
  REQUIRE(hapax.types.size() == 4);
  CHECK(hapax.types[0] == "A");  // rank order within frequency 1

  const MonosyllabicStats han = monosyllabic_stats(list, true);
  CHECK(han.count == 3);  // 我 爱 的
  CHECK(han.proportion == doctest::Approx(0.5).epsilon(1e-12));

  const MonosyllabicStats any = monosyllabic_stats(list, false);
  CHECK(any.count == 4);  // + A
}

TEST_CASE("three-token worked example end to end") {
  const Corpus corpus = corpus_of({{"a", "b", "a"}});
  const LexicalProfile p = lexical_profile(corpus);

  CHECK(p.token_count == 3);
  CHECK(p.type_count == 2);
  CHECK(p.ttr == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(p.hapax_count == 1);
  CHECK(p.h_point == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(p.arc_length_total == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(p.arc_length_to_h.has_value());
  CHECK(*p.arc_length_to_h == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  REQUIRE(p.r_value.has_value());
  CHECK(*p.r_value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.a_value == doctest::Approx(3.0 / 2.25).epsilon(1e-12));
}

TEST_CASE("profile agrees with the individually computed metrics") {
  SplitMix64 rng(31);
  static const char* vocab[] = {"的", "是", "我", "你", "新加坡",
                                "华语", "e\xCC\x81", "x", "yy", "。"};
  for (int round = 0; round < 20; ++round) {
    Corpus corpus;
    corpus.id = "r";
    const std::size_t sentences = rng.next() % 30 + 1;
    for (std::size_t s = 0; s < sentences; ++s) {
      Sentence sent;
      const std::size_t len = rng.next() % 8 + 1;
      for (std::size_t t = 0; t < len; ++t)
        sent.tokens.push_back(Token::make(vocab[rng.next() % std::size(vocab)]));
      corpus.sentences.push_back(std::move(sent));
    }

    const LexicalProfile p = lexical_profile(corpus);
    const FrequencyList list = build_frequency_list(corpus);
    CHECK(p.token_count == list.token_total);
    CHECK(p.type_count == list.type_count());
    CHECK(p.ttr == doctest::Approx(ttr(corpus)).epsilon(1e-12));
    CHECK(p.hapax_count == hapax_stats(list).count);
    CHECK(p.monosyllabic_type_count == monosyllabic_stats(list, true).count);
    CHECK(p.h_point ==
          doctest::Approx(ref::h_point_geometric(list)).epsilon(1e-9));
    CHECK(p.arc_length_total ==
          doctest::Approx(ref::arc_length_serial(list)).epsilon(1e-9));
    CHECK(p.a_value == doctest::Approx(a_value(p.token_count, p.h_point))
                           .epsilon(1e-12));
  }
}

TEST_CASE("appending a brand-new type adds one type and one hapax") {
  Corpus corpus = corpus_of({{"a", "b", "a", "c"}});
  const LexicalProfile before = lexical_profile(corpus);

  corpus.sentences.push_back(Sentence{{Token::make("zz_new")}});
  const LexicalProfile after = lexical_profile(corpus);

  CHECK(after.type_count == before.type_count + 1);
  CHECK(after.hapax_count == before.hapax_count + 1);
  CHECK(after.token_count == before.token_count + 1);
}
