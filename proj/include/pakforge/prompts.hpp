#pragma once

#include <pakforge/names.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pakforge::prompts {

enum class Level { workspace, system, public_ };

/// Accepts "workspace", "system", or "public"; throws UnknownLevel.
Level parse_level(const std::string& text);
std::string level_name(Level level);

struct Question {
    enum class Kind { free_text, choice };
    enum class Derive { none, raw_name, dir_name };

    std::string key;
    int index = 0;  // 1-based position within the level
    Kind kind = Kind::free_text;
    std::string default_value;          // option text for choice questions
    std::vector<std::string> choices;   // empty unless kind == choice
    // Derived defaults are recomputed from the resolved project_name, so the
    // value offered for e.g. github_repo_name tracks what the user entered.
    Derive derive = Derive::none;
};

/// The ordered question table for a level: 1 workspace question, 6 system,
/// 16 public. Keys are unique, indices contiguous from 1.
const std::vector<Question>& question_set(Level level);

/// Fully resolved, validated answers plus the names derived from them.
struct ProjectAnswers {
    Level level = Level::workspace;
    std::map<std::string, std::string> values;
    names::DerivedNames derived;  // final values, overrides included

    /// Directory the rendered tree lives under: folder_name for workspace,
    /// github_repo_name otherwise.
    const std::string& root_name() const;
};

/// Interactive callback: receives the question and the default that a blank
/// response selects, returns the raw user response (may be empty).
using Responder = std::function<std::string(const Question&, const std::string& effective_default)>;

/// Resolves each question in order with precedence
///   provided > non-empty interactive response > user_defaults > built-in,
/// recomputing derived defaults once project_name is known, then validates.
/// A null responder means non-interactive. Throws MissingAnswer when no layer
/// yields a value, ValidationFailed on bad values (empty, invalid names,
/// unknown choice options).
ProjectAnswers resolve_answers(Level level,
                               const std::map<std::string, std::string>& user_defaults,
                               const std::map<std::string, std::string>& provided,
                               const Responder& respond = nullptr);

/// Parses a line-based "key = value" file: '#' comments at column 1, blank
/// lines skipped, whitespace around key and value trimmed, later duplicates
/// win. Throws ConfigParseError with the line number on malformed lines.
std::map<std::string, std::string> parse_key_value_file(const std::filesystem::path& file);

/// parse_key_value_file for an optional config: absent file -> empty map.
std::map<std::string, std::string> load_user_defaults(const std::filesystem::path& config_path);

/// defaults.cfg under $FORGE_CONFIG_DIR, else $XDG_CONFIG_HOME/pakforge,
/// else ~/.config/pakforge. The file need not exist.
std::filesystem::path default_config_path();

/// For a choice question, the canonical option text for `value`, which may
/// be the option text itself or its 1-based index. Empty optional if neither.
std::optional<std::string> canonical_choice(const Question& question, const std::string& value);

} // namespace pakforge::prompts
