#include "corvar/feature_words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "corvar/errors.hpp"
#include "corvar/unicode.hpp"

namespace corvar {

namespace {

const std::unordered_set<std::string> kCategories = {"a", "b", "c", "x"};

void check_field(const std::string& value, const char* name) {
  if (value.find('\t') != std::string::npos ||
      value.find('\n') != std::string::npos ||
      value.find('\r') != std::string::npos)
    throw_error(errc::schema,
                std::string(name) + " field contains a tab or line break");
}

void check_record(const AnnotationRecord& r) {
  if (r.word.empty())
    throw_error(errc::schema, "annotation word must not be empty");
  check_field(r.word, "word");
  check_field(r.category, "category");
  check_field(r.mainland_equivalent, "mainland_equivalent");
  check_field(r.note, "note");
  if (!kCategories.contains(r.category))
    throw_error(errc::schema,
                "unknown category \"" + r.category + "\" (expected a, b, c, or x)");
}

std::string join_tokens(const Sentence& sentence, std::size_t first,
                        std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (!out.empty()) out += ' ';
    out += sentence.tokens[i].text();
  }
  return out;
}

}  // namespace

std::unordered_set<std::string> reference_type_set(const Corpus& corpus) {
  std::unordered_set<std::string> types;
  for (const auto& sentence : corpus.sentences)
    for (const auto& token : sentence.tokens) types.insert(token.text());
  return types;
}

std::vector<FeatureCandidate> extract_candidates(
    const Corpus& target, const std::unordered_set<std::string>& reference,
    const ExtractOptions& opts) {
  const FrequencyList list = build_frequency_list(target);

  std::vector<FeatureCandidate> candidates;
  std::unordered_map<std::string, std::size_t> slot;  // word -> index
  for (const auto& entry : list.entries) {
    if (entry.frequency < opts.min_frequency) break;  // entries sorted by freq
    if (reference.contains(entry.type_text)) continue;
    slot.emplace(entry.type_text, candidates.size());
    candidates.push_back(FeatureCandidate{entry.type_text, entry.frequency, {}});
  }

  if (opts.max_contexts > 0 && !candidates.empty()) {
    for (const auto& sentence : target.sentences) {
      for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const auto it = slot.find(sentence.tokens[i].text());
        if (it == slot.end()) continue;
        auto& cand = candidates[it->second];
        if (cand.contexts.size() >= opts.max_contexts) continue;
        const std::size_t first = i >= opts.window ? i - opts.window : 0;
        const std::size_t last =
            std::min(sentence.tokens.size(), i + opts.window + 1);
        cand.contexts.push_back(KwicContext{join_tokens(sentence, first, i),
                                            join_tokens(sentence, i + 1, last)});
      }
    }
  }
  return candidates;
}

std::string render_annotations(const std::vector<AnnotationRecord>& records) {
  std::string out = kAnnotationHeader;
  out += '\n';
  for (const auto& r : records) {
    check_record(r);
    out += r.word;
    out += '\t';
    out += r.category;
    out += '\t';
    out += r.mainland_equivalent;
    out += '\t';
    out += r.note;
    out += '\n';
  }
  return out;
}

void write_annotations(const std::filesystem::path& path,
                       const std::vector<AnnotationRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw_error(errc::io, "cannot open " + path.string() + " for writing");
  out << render_annotations(records);
  out.flush();
  if (!out)
    throw_error(errc::io, "write failed on " + path.string());
}

std::vector<AnnotationRecord> parse_annotations(const std::string& text) {
  std::vector<AnnotationRecord> records;
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!uni::valid_utf8(line))
      throw_error(errc::encoding,
                  "invalid UTF-8 on line " + std::to_string(line_number));
    if (!saw_header) {
      if (line != kAnnotationHeader)
        throw_error(errc::schema,
                    "line 1: expected header \"" + std::string(kAnnotationHeader) +
                        "\"");
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find('\t', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (fields.size() != 4)
      throw_error(errc::schema, "line " + std::to_string(line_number) +
                                    ": expected 4 fields, got " +
                                    std::to_string(fields.size()));
    AnnotationRecord r{std::move(fields[0]), std::move(fields[1]),
                       std::move(fields[2]), std::move(fields[3])};
    try {
      check_record(r);
    } catch (const error& e) {
      throw_error(e.code(),
                  "line " + std::to_string(line_number) + ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  if (!saw_header)
    throw_error(errc::schema, "annotation file is empty (missing header)");
  return records;
}

std::vector<AnnotationRecord> read_annotations(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw_error(errc::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw_error(errc::io, "read failed on " + path.string());
  return parse_annotations(std::move(buf).str());
}

std::vector<AnnotationRecord> annotation_skeleton(
    const std::vector<FeatureCandidate>& candidates) {
  std::vector<AnnotationRecord> records;
  records.reserve(candidates.size());
  for (const auto& c : candidates) {
    std::string note = "freq=" + std::to_string(c.frequency);
    if (!c.contexts.empty()) {
      note += "; kwic:";
      bool first = true;
      for (const auto& ctx : c.contexts) {
        note += first ? " " : " || ";
        first = false;
        if (!ctx.before.empty()) {
          note += ctx.before;
          note += ' ';
        }
        note += '[';
        note += c.word;
        note += ']';
        if (!ctx.after.empty()) {
          note += ' ';
          note += ctx.after;
        }
      }
    }
    records.push_back(AnnotationRecord{c.word, "x", "", std::move(note)});
  }
  return records;
}

std::size_t accepted_count(const std::vector<AnnotationRecord>& records) {
  std::size_t n = 0;
  for (const auto& r : records)
    if (r.category != "x") ++n;
  return n;
}

std::map<std::string, std::size_t> category_counts(
    const std::vector<AnnotationRecord>& records) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) ++counts[r.category];
  return counts;
}

}  // namespace corvar
