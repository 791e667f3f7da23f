#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "corvar/corpus.hpp"
#include "corvar/parsed.hpp"

namespace corvar {

// Plain token format: one sentence per line, tokens separated by ASCII
// spaces or tabs; blank lines are skipped.
Corpus parse_tokens_text(const std::string& text, const std::string& id);
Corpus parse_tokens_file(const std::filesystem::path& path,
                         const std::string& id = {});

// CoNLL-U: 10 tab-separated columns; columns ID, FORM, HEAD, DEPREL are
// used, the rest pass through as "_" on output. Comment lines and
// multiword/empty-node IDs ("3-4", "3.1") are skipped.
ParsedCorpus parse_conllu_text(const std::string& text, const std::string& id);
ParsedCorpus parse_conllu_file(const std::filesystem::path& path,
                               const std::string& id = {});

std::string render_tokens(const Corpus& corpus);
void write_tokens_file(const std::filesystem::path& path, const Corpus& corpus);

std::string render_conllu(const ParsedCorpus& corpus,
                          const std::string& header_comment = {});
void write_conllu_file(const std::filesystem::path& path,
                       const ParsedCorpus& corpus,
                       const std::string& header_comment = {});

// Counter-based generator; the sequence for a given seed is part of the
// sampling contract and must not change.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// k distinct indices from [0, population), ascending. k >= population
// returns the identity selection.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t k,
                                        std::uint64_t seed);

Corpus sample_sentences(const Corpus& corpus, std::size_t n,
                        std::uint64_t seed);
ParsedCorpus sample_sentences(const ParsedCorpus& corpus, std::size_t n,
                              std::uint64_t seed);

}  // namespace corvar
