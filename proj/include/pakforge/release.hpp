#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pakforge::release {

/// A semantic version tag, optionally a release candidate: M.m.p or M.m.p-rc.N.
struct ReleaseTag {
    std::uint64_t major = 0;
    std::uint64_t minor = 0;
    std::uint64_t patch = 0;
    std::optional<std::uint64_t> rc;

    bool prerelease() const { return rc.has_value(); }

    /// Canonical text form; parse(format(t)) == t.
    std::string format() const;

    // rc-tagged versions precede the final release of the same triple.
    friend std::strong_ordering operator<=>(const ReleaseTag& a, const ReleaseTag& b);
    friend bool operator==(const ReleaseTag& a, const ReleaseTag& b) = default;
};

/// Accepts exactly M.m.p or M.m.p-rc.N with no leading zeros; anything else
/// (v-prefix, two-part versions, "rc0" without the dot) throws InvalidTag.
ReleaseTag parse_tag(const std::string& text);

/// Total order: (major, minor, patch) lexicographic; for equal triples an
/// rc tag precedes the final release and rc numbers order naturally.
std::strong_ordering compare_tags(const ReleaseTag& a, const ReleaseTag& b);

/// Exact, case-sensitive username match. Denial is a value, not an error.
bool authorize(const std::string& tag_pusher, const std::string& maintainer);

struct ReleaseStep {
    std::string descriptor;
    bool prerelease = false;
    bool informational = false;
};

struct ReleasePlan {
    ReleaseTag tag;
    bool prerelease = false;
    std::vector<ReleaseStep> steps;
    std::string changelog_preview;
};

/// Inputs the planner needs about the repository; planning itself performs
/// no network access and mutates nothing.
struct RepoState {
    std::string maintainer;
    std::vector<ReleaseTag> existing_tags;
    std::filesystem::path news_dir;      // may be empty or nonexistent
    std::filesystem::path changelog;     // may be empty or nonexistent
};

/// Parses and authorizes the tag, enforces monotonicity against existing
/// tags, and emits the ordered dry-run steps. Final releases get a changelog
/// preview compiled from the news fragments; rc tags defer the changelog.
/// With conda_forge_checklist set, an informational fourth step is appended.
ReleasePlan plan_release(const std::string& tag_text, const std::string& pusher,
                         const RepoState& repo_state, bool conda_forge_checklist = false);

} // namespace pakforge::release
