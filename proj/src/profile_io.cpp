#include "corvar/profile_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "corvar/errors.hpp"

namespace corvar {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array kLexicalKeys = {
    "id",           "token_count",
    "type_count",   "ttr",
    "hapax_count",  "hapax_proportion",
    "monosyllabic_type_count", "monosyllabic_proportion",
    "h_point",      "arc_length_total",
    "arc_length_to_h", "r_value",
    "a_value"};

constexpr std::array kSyntacticKeys = {"id", "sentence_count", "arc_count",
                                       "mean_mdd", "relations"};

constexpr std::array kRelationKeys = {"label", "proportion",
                                      "mean_signed_distance"};

template <std::size_t N>
void require_exact_keys(const json& j, const std::array<const char*, N>& keys,
                        const char* what) {
  if (!j.is_object())
    throw_error(errc::schema, std::string(what) + ": expected a JSON object");
  for (const char* key : keys)
    if (!j.contains(key))
      throw_error(errc::schema,
                  std::string(what) + ": missing field \"" + key + "\"");
  if (j.size() != N)
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known)
        throw_error(errc::schema,
                    std::string(what) + ": unknown field \"" + key + "\"");
    }
}

std::string require_string(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string())
    throw_error(errc::schema, std::string("field \"") + key +
                                  "\" must be a string");
  return v.get<std::string>();
}

std::uint64_t require_count(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() &&
                                   v.get<std::int64_t>() >= 0))
    throw_error(errc::schema, std::string("field \"") + key +
                                  "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

double require_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number())
    throw_error(errc::schema, std::string("field \"") + key +
                                  "\" must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number())
    throw_error(errc::schema, std::string("field \"") + key +
                                  "\" must be a number or null");
  return v.get<double>();
}

json parse_json_text(const std::string& text, const std::string& where) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw_error(errc::parse, "invalid JSON in " + where);
  return j;
}

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

ordered_json nullable(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

ordered_json to_json(const LexicalProfile& p) {
  ordered_json j;
  j["id"] = p.id;
  j["token_count"] = p.token_count;
  j["type_count"] = p.type_count;
  j["ttr"] = p.ttr;
  j["hapax_count"] = p.hapax_count;
  j["hapax_proportion"] = p.hapax_proportion;
  j["monosyllabic_type_count"] = p.monosyllabic_type_count;
  j["monosyllabic_proportion"] = p.monosyllabic_proportion;
  j["h_point"] = p.h_point;
  j["arc_length_total"] = p.arc_length_total;
  j["arc_length_to_h"] = nullable(p.arc_length_to_h);
  j["r_value"] = nullable(p.r_value);
  j["a_value"] = p.a_value;
  return j;
}

ordered_json to_json(const SyntacticProfile& p) {
  ordered_json j;
  j["id"] = p.id;
  j["sentence_count"] = p.sentence_count;
  j["arc_count"] = p.arc_count;
  j["mean_mdd"] = p.mean_mdd;
  ordered_json relations = ordered_json::array();
  for (const auto& r : p.relations) {
    ordered_json rj;
    rj["label"] = r.label;
    rj["proportion"] = r.proportion;
    rj["mean_signed_distance"] = r.mean_signed_distance;
    relations.push_back(std::move(rj));
  }
  j["relations"] = std::move(relations);
  return j;
}

LexicalProfile lexical_profile_from_json(const json& j) {
  require_exact_keys(j, kLexicalKeys, "lexical profile");
  LexicalProfile p;
  p.id = require_string(j, "id");
  p.token_count = require_count(j, "token_count");
  p.type_count = require_count(j, "type_count");
  p.ttr = require_number(j, "ttr");
  p.hapax_count = require_count(j, "hapax_count");
  p.hapax_proportion = require_number(j, "hapax_proportion");
  p.monosyllabic_type_count = require_count(j, "monosyllabic_type_count");
  p.monosyllabic_proportion = require_number(j, "monosyllabic_proportion");
  p.h_point = require_number(j, "h_point");
  p.arc_length_total = require_number(j, "arc_length_total");
  p.arc_length_to_h = optional_number(j, "arc_length_to_h");
  p.r_value = optional_number(j, "r_value");
  p.a_value = require_number(j, "a_value");
  return p;
}

SyntacticProfile syntactic_profile_from_json(const json& j) {
  require_exact_keys(j, kSyntacticKeys, "syntactic profile");
  SyntacticProfile p;
  p.id = require_string(j, "id");
  p.sentence_count = require_count(j, "sentence_count");
  p.arc_count = require_count(j, "arc_count");
  p.mean_mdd = require_number(j, "mean_mdd");
  const auto& relations = j.at("relations");
  if (!relations.is_array())
    throw_error(errc::schema, "field \"relations\" must be an array");
  for (const auto& rj : relations) {
    require_exact_keys(rj, kRelationKeys, "relation entry");
    RelationStat r;
    r.label = require_string(rj, "label");
    r.proportion = require_number(rj, "proportion");
    r.mean_signed_distance = require_number(rj, "mean_signed_distance");
    p.relations.push_back(std::move(r));
  }
  return p;
}

Profile profile_from_json(const json& j) {
  if (!j.is_object())
    throw_error(errc::schema, "profile: expected a JSON object");
  if (j.contains("ttr")) return lexical_profile_from_json(j);
  if (j.contains("mean_mdd")) return syntactic_profile_from_json(j);
  throw_error(errc::schema, "profile: neither lexical nor syntactic fields present");
}

Profile read_profile(const std::filesystem::path& path) {
  return profile_from_json(parse_json_text(read_file(path), path.string()));
}

std::string render_profile_json(const LexicalProfile& profile) {
  return to_json(profile).dump(2) + "\n";
}

std::string render_profile_json(const SyntacticProfile& profile) {
  return to_json(profile).dump(2) + "\n";
}

void write_profile(const std::filesystem::path& path,
                   const LexicalProfile& profile) {
  write_file(path, render_profile_json(profile));
}

void write_profile(const std::filesystem::path& path,
                   const SyntacticProfile& profile) {
  write_file(path, render_profile_json(profile));
}

}  // namespace corvar
