#include "corvar/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "corvar/errors.hpp"
#include "corvar/unicode.hpp"

namespace corvar {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw_error(errc::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw_error(errc::io, "read failed on " + path.string());
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw_error(errc::io, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out)
    throw_error(errc::io, "write failed on " + path.string());
}

std::string default_id(const std::filesystem::path& path,
                       const std::string& id) {
  if (!id.empty()) return id;
  return path.stem().string();
}

// Yields lines without the trailing '\n'; strips one trailing '\r' and a
// leading UTF-8 BOM on the first line.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : rest_(text) {}

  bool next(std::string_view& line) {
    if (done_) return false;
    const std::size_t nl = rest_.find('\n');
    if (nl == std::string_view::npos) {
      line = rest_;
      done_ = true;
      if (line.empty()) return false;
    } else {
      line = rest_.substr(0, nl);
      rest_.remove_prefix(nl + 1);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number_;
    if (number_ == 1 && line.size() >= 3 &&
        static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB &&
        static_cast<unsigned char>(line[2]) == 0xBF)
      line.remove_prefix(3);
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::string_view rest_;
  std::size_t number_ = 0;
  bool done_ = false;
};

void require_utf8(std::string_view line, std::size_t line_number) {
  if (!uni::valid_utf8(line))
    throw_error(errc::encoding,
                "invalid UTF-8 on line " + std::to_string(line_number));
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool parse_int(std::string_view text, int& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Corpus parse_tokens_text(const std::string& text, const std::string& id) {
  Corpus corpus;
  corpus.id = id;
  LineReader reader(text);
  std::string_view line;
  while (reader.next(line)) {
    require_utf8(line, reader.number());
    Sentence sentence;
    std::size_t start = 0;
    const auto flush_token = [&](std::size_t end) {
      if (end > start)
        sentence.tokens.push_back(
            Token::make(line.substr(start, end - start)));
    };
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ' ' || line[i] == '\t') {
        flush_token(i);
        start = i + 1;
      }
    }
    flush_token(line.size());
    if (!sentence.tokens.empty()) corpus.sentences.push_back(std::move(sentence));
  }
  if (corpus.sentences.empty())
    throw_error(errc::empty_corpus, "no sentences in token input");
  return corpus;
}

Corpus parse_tokens_file(const std::filesystem::path& path,
                         const std::string& id) {
  return parse_tokens_text(read_file(path), default_id(path, id));
}

ParsedCorpus parse_conllu_text(const std::string& text, const std::string& id) {
  ParsedCorpus corpus;
  corpus.id = id;
  LineReader reader(text);

  ParsedSentence current;
  const auto flush = [&]() {
    if (current.tokens.empty()) return;
    validate_sentence(current);
    corpus.sentences.push_back(std::move(current));
    current = {};
  };

  std::string_view line;
  while (reader.next(line)) {
    require_utf8(line, reader.number());
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = split_fields(line, '\t');
    if (fields.size() != 10)
      throw_error(errc::parse, "expected 10 columns on line " +
                                   std::to_string(reader.number()) + ", got " +
                                   std::to_string(fields.size()));

    const std::string_view id_field = fields[0];
    // Multiword ranges and empty nodes carry no dependency arc.
    if (id_field.find('-') != std::string_view::npos ||
        id_field.find('.') != std::string_view::npos)
      continue;

    ParsedToken token;
    if (!parse_int(id_field, token.index) || token.index <= 0)
      throw_error(errc::parse, "bad token id on line " +
                                   std::to_string(reader.number()));
    token.form = std::string(fields[1]);
    if (token.form.empty())
      throw_error(errc::parse,
                  "empty form on line " + std::to_string(reader.number()));
    if (!parse_int(fields[6], token.head) || token.head < 0)
      throw_error(errc::parse,
                  "bad head on line " + std::to_string(reader.number()));
    token.relation = std::string(fields[7]);
    if (token.relation.empty())
      throw_error(errc::parse,
                  "empty relation on line " + std::to_string(reader.number()));
    current.tokens.push_back(std::move(token));
  }
  flush();

  if (corpus.sentences.empty())
    throw_error(errc::empty_corpus, "no sentences in dependency input");
  return corpus;
}

ParsedCorpus parse_conllu_file(const std::filesystem::path& path,
                               const std::string& id) {
  return parse_conllu_text(read_file(path), default_id(path, id));
}

std::string render_tokens(const Corpus& corpus) {
  std::string out;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (i != 0) out += ' ';
      out += sentence.tokens[i].text();
    }
    out += '\n';
  }
  return out;
}

void write_tokens_file(const std::filesystem::path& path,
                       const Corpus& corpus) {
  write_file(path, render_tokens(corpus));
}

std::string render_conllu(const ParsedCorpus& corpus,
                          const std::string& header_comment) {
  std::string out;
  if (!header_comment.empty()) {
    out += "# ";
    out += header_comment;
    out += '\n';
  }
  for (const auto& sentence : corpus.sentences) {
    for (const auto& tok : sentence.tokens) {
      out += std::to_string(tok.index);
      out += '\t';
      out += tok.form;
      out += "\t_\t_\t_\t_\t";
      out += std::to_string(tok.head);
      out += '\t';
      out += tok.relation;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

void write_conllu_file(const std::filesystem::path& path,
                       const ParsedCorpus& corpus,
                       const std::string& header_comment) {
  write_file(path, render_conllu(corpus, header_comment));
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t k,
                                        std::uint64_t seed) {
  std::vector<std::size_t> indices(population);
  for (std::size_t i = 0; i < population; ++i) indices[i] = i;
  if (k >= population) return indices;

  // Partial Fisher-Yates: after k swaps the prefix is a uniform k-subset.
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(
                                  rng.next() % (population - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  std::sort(indices.begin(), indices.end());  // keep original corpus order
  return indices;
}

namespace {

template <typename CorpusT>
CorpusT sample_impl(const CorpusT& corpus, std::size_t n, std::uint64_t seed) {
  const auto chosen = sample_indices(corpus.sentences.size(), n, seed);
  CorpusT out;
  out.id = corpus.id;
  out.sentences.reserve(chosen.size());
  for (const std::size_t i : chosen) out.sentences.push_back(corpus.sentences[i]);
  return out;
}

}  // namespace

Corpus sample_sentences(const Corpus& corpus, std::size_t n,
                        std::uint64_t seed) {
  return sample_impl(corpus, n, seed);
}

ParsedCorpus sample_sentences(const ParsedCorpus& corpus, std::size_t n,
                              std::uint64_t seed) {
  return sample_impl(corpus, n, seed);
}

}  // namespace corvar
