#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "corvar/corpus.hpp"

namespace corvar {

// All type texts of the corpus, for membership tests against a reference.
std::unordered_set<std::string> reference_type_set(const Corpus& corpus);

struct KwicContext {
  std::string before;  // up to `window` tokens, space-joined, sentence-bounded
  std::string after;

  bool operator==(const KwicContext&) const = default;
};

struct FeatureCandidate {
  std::string word;
  std::uint64_t frequency = 0;
  std::vector<KwicContext> contexts;  // first occurrences in corpus order
};

struct ExtractOptions {
  std::uint64_t min_frequency = 1;
  std::size_t max_contexts = 5;
  std::size_t window = 5;  // tokens kept on each side
};

// Types of `target` absent from `reference`, frequency >= min_frequency,
// ordered by frequency descending then code-point order.
std::vector<FeatureCandidate> extract_candidates(
    const Corpus& target, const std::unordered_set<std::string>& reference,
    const ExtractOptions& opts = {});

// Annotation rows. category is one of: a (regional lexical variant),
// b (regional collocation), c (regional idiom), x (rejected).
struct AnnotationRecord {
  std::string word;
  std::string category;
  std::string mainland_equivalent;
  std::string note;

  bool operator==(const AnnotationRecord&) const = default;
};

inline constexpr const char* kAnnotationHeader =
    "word\tcategory\tmainland_equivalent\tnote";

std::string render_annotations(const std::vector<AnnotationRecord>& records);
void write_annotations(const std::filesystem::path& path,
                       const std::vector<AnnotationRecord>& records);

std::vector<AnnotationRecord> parse_annotations(const std::string& text);
std::vector<AnnotationRecord> read_annotations(
    const std::filesystem::path& path);

// Pre-filled rows for fresh candidates: category "x" until a human promotes
// them, frequency and contexts packed into the note.
std::vector<AnnotationRecord> annotation_skeleton(
    const std::vector<FeatureCandidate>& candidates);

// Records whose category is not "x".
std::size_t accepted_count(const std::vector<AnnotationRecord>& records);
std::map<std::string, std::size_t> category_counts(
    const std::vector<AnnotationRecord>& records);

}  // namespace corvar
