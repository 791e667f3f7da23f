#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "corvar/lexical.hpp"
#include "corvar/syntactic.hpp"

namespace corvar {

// Field sets are pinned; readers reject unknown or missing fields so the
// two profile kinds stay distinguishable on disk.
nlohmann::ordered_json to_json(const LexicalProfile& profile);
nlohmann::ordered_json to_json(const SyntacticProfile& profile);

LexicalProfile lexical_profile_from_json(const nlohmann::json& j);
SyntacticProfile syntactic_profile_from_json(const nlohmann::json& j);

using Profile = std::variant<LexicalProfile, SyntacticProfile>;

Profile profile_from_json(const nlohmann::json& j);
Profile read_profile(const std::filesystem::path& path);

std::string render_profile_json(const LexicalProfile& profile);
std::string render_profile_json(const SyntacticProfile& profile);

void write_profile(const std::filesystem::path& path,
                   const LexicalProfile& profile);
void write_profile(const std::filesystem::path& path,
                   const SyntacticProfile& profile);

}  // namespace corvar
