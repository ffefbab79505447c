#pragma once

#include <optional>
#include <string>
#include <utility>

namespace pakforge::names {

/// A validated project name, optionally split into namespace.package.
///
/// Segments start with a lowercase letter followed by lowercase letters,
/// digits, hyphens, or underscores. At most one dot is allowed and it
/// separates the namespace from the package (e.g. "montypy.grail").
struct ProjectName {
    std::string raw;
    std::optional<std::string> ns;
    std::string package;

    /// Parses and validates, throwing InvalidName with a corrective message.
    static ProjectName parse(const std::string& raw);

    bool has_namespace() const { return ns.has_value(); }
};

/// Names derived from a project name. github_repo_name and dist_name default
/// to the raw name verbatim; dir_name has hyphens replaced by underscores in
/// each segment, with the dot kept as the hierarchy marker.
struct DerivedNames {
    std::string github_repo_name;
    std::string dist_name;
    std::string dir_name;
};

/// Splits "ns.pkg" into (ns, pkg); names without a dot yield an absent
/// namespace. Rejoining with a dot reproduces the input.
std::pair<std::optional<std::string>, std::string> split_namespace(const std::string& text);

/// Hyphens become underscores per segment; the dot separator is preserved.
/// Idempotent: applying it to its own output is the identity.
std::string normalize_dir_name(const ProjectName& name);

DerivedNames derive_defaults(const ProjectName& name);

/// True if text is a valid source directory name: dot-separated segments of
/// [a-z_][a-z0-9_]*, at most one dot, no hyphens.
bool is_valid_dir_name(const std::string& text);

/// True if text is a valid single name segment (no dot).
bool is_valid_segment(const std::string& text);

} // namespace pakforge::names
