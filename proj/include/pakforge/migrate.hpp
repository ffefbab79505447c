#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace pakforge::migrate {

/// Content-hashed snapshot of a file tree; stands in for a version-control
/// view of the project. Hidden files included, symlinks skipped.
struct Manifest {
    std::filesystem::path root;
    std::string algorithm;                       // digest algorithm name
    std::map<std::string, std::string> entries;  // relative path -> digest hex
    std::vector<std::string> warnings;           // e.g. skipped symlinks

    /// Line-based form: "# digest: <algorithm>" header, then
    /// "<digest-hex> TAB <path>" sorted by path.
    std::string serialize() const;

    /// Inverse of serialize. Throws ManifestParseError on malformed lines.
    static Manifest parse(const std::string& text, const std::string& origin = "<manifest>");
};

/// Hashes every regular file under root. Paths are '/'-separated and
/// relative to root; symlinks are recorded as warnings, not followed.
Manifest snapshot_tree(const std::filesystem::path& root);

/// Four-way triage of old vs new, each list sorted lexicographically.
struct MigrationPlan {
    std::vector<std::string> deleted;    // in old only
    std::vector<std::string> untracked;  // in new only
    std::vector<std::string> modified;   // in both, digest differs
    std::vector<std::string> unchanged;  // in both, digest equal
};

/// Throws AlgorithmMismatch when the manifests were hashed differently.
MigrationPlan diff_manifests(const Manifest& old_manifest, const Manifest& new_manifest);

/// What the human did about one path. moved/removed apply to deleted paths,
/// added to untracked, merged to modified.
enum class Action { moved, removed, added, merged };

Action parse_action(const std::string& text);
std::string action_name(Action action);

struct ChecklistItem {
    std::string description;
    bool satisfied = false;
};

/// The five completion conditions of a migration, in fixed order. The fifth
/// (overall review) takes an explicit flag since pull requests are outside
/// the tool's view.
struct CompletionChecklist {
    std::vector<ChecklistItem> items;

    bool complete() const;
};

/// Computes satisfaction from how `resolved` covers the plan's categories.
/// Throws UnknownPath for a resolved path absent from the plan and
/// ValidationFailed for an action that does not fit the path's category.
/// `reviewed` defaults to satisfied so an empty plan is vacuously complete;
/// the CLI passes it explicitly (its --reviewed flag is opt-in).
CompletionChecklist checklist(const MigrationPlan& plan,
                              const std::map<std::string, Action>& resolved,
                              bool reviewed = true);

struct CopyOutcome {
    bool copied = false;          // false: destination existed, left intact
    std::string src_digest;
    std::string dst_digest;       // equals src_digest after a copy
};

/// Copies src to dst unless dst exists; never overwrites. A skip reports
/// both digests so the caller can resolve the collision manually.
CopyOutcome copy_no_clobber(const std::filesystem::path& src, const std::filesystem::path& dst);

} // namespace pakforge::migrate
