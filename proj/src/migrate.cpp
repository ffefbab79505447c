#include <pakforge/migrate.hpp>

#include <pakforge/digest.hpp>
#include <pakforge/errors.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace pakforge::migrate {

namespace {

// Relative path with '/' separators regardless of platform. Lexical on
// purpose: fs::relative would resolve symlinks, renaming the very links the
// snapshot reports as skipped.
std::string relative_key(const fs::path& root, const fs::path& file) {
    return file.lexically_relative(root).generic_string();
}

std::vector<std::string> sorted(std::set<std::string> values) {
    return {values.begin(), values.end()};
}

const char* k_header_prefix = "# digest: ";

} // namespace

std::string Manifest::serialize() const {
    std::string out = std::string(k_header_prefix) + algorithm + "\n";
    for (const auto& [path, hex] : entries)
        out += hex + "\t" + path + "\n";
    return out;
}

Manifest Manifest::parse(const std::string& text, const std::string& origin) {
    Manifest manifest;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line.rfind(k_header_prefix, 0) != 0)
                throw ManifestParseError(origin, lineno,
                                         "expected \"# digest: <algorithm>\" header");
            manifest.algorithm = line.substr(std::string(k_header_prefix).size());
            if (manifest.algorithm.empty())
                throw ManifestParseError(origin, lineno, "empty algorithm name");
            header_seen = true;
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw ManifestParseError(origin, lineno, "expected \"<digest-hex> TAB <path>\"");
        std::string hex = line.substr(0, tab);
        std::string path = line.substr(tab + 1);
        if (hex.find_first_not_of("0123456789abcdef") != std::string::npos)
            throw ManifestParseError(origin, lineno, "digest is not lowercase hex");
        if (!manifest.entries.emplace(path, hex).second)
            throw ManifestParseError(origin, lineno, "duplicate path " + path);
    }
    if (!header_seen)
        throw ManifestParseError(origin, 1, "missing \"# digest: <algorithm>\" header");
    return manifest;
}

Manifest snapshot_tree(const fs::path& root) {
    if (!fs::exists(root))
        throw IoFailure(root.string(), "does not exist");
    if (!fs::is_directory(root))
        throw IoFailure(root.string(), "not a directory");

    Manifest manifest;
    manifest.root = root;
    manifest.algorithm = digest::algorithm();

    for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it) {
        if (it->is_symlink()) {
            manifest.warnings.push_back("skipped symlink: " + relative_key(root, it->path()));
            if (it->is_directory())
                it.disable_recursion_pending();
            continue;
        }
        if (it->is_regular_file())
            manifest.entries[relative_key(root, it->path())] = digest::sha256_file(it->path());
    }
    return manifest;
}

MigrationPlan diff_manifests(const Manifest& old_manifest, const Manifest& new_manifest) {
    if (old_manifest.algorithm != new_manifest.algorithm)
        throw AlgorithmMismatch(old_manifest.algorithm, new_manifest.algorithm);

    std::set<std::string> deleted, untracked, modified, unchanged;
    for (const auto& [path, hex] : old_manifest.entries) {
        auto it = new_manifest.entries.find(path);
        if (it == new_manifest.entries.end())
            deleted.insert(path);
        else if (it->second != hex)
            modified.insert(path);
        else
            unchanged.insert(path);
    }
    for (const auto& [path, hex] : new_manifest.entries)
        if (!old_manifest.entries.count(path))
            untracked.insert(path);

    return MigrationPlan{sorted(std::move(deleted)), sorted(std::move(untracked)),
                         sorted(std::move(modified)), sorted(std::move(unchanged))};
}

Action parse_action(const std::string& text) {
    if (text == "moved")
        return Action::moved;
    if (text == "removed")
        return Action::removed;
    if (text == "added")
        return Action::added;
    if (text == "merged")
        return Action::merged;
    throw ValidationFailed("unknown action '" + text +
                           "' (expected moved, removed, added, or merged)");
}

std::string action_name(Action action) {
    switch (action) {
    case Action::moved: return "moved";
    case Action::removed: return "removed";
    case Action::added: return "added";
    case Action::merged: return "merged";
    }
    return "?";
}

bool CompletionChecklist::complete() const {
    return std::all_of(items.begin(), items.end(),
                       [](const ChecklistItem& i) { return i.satisfied; });
}

CompletionChecklist checklist(const MigrationPlan& plan,
                              const std::map<std::string, Action>& resolved,
                              bool reviewed) {
    std::set<std::string> deleted(plan.deleted.begin(), plan.deleted.end());
    std::set<std::string> untracked(plan.untracked.begin(), plan.untracked.end());
    std::set<std::string> modified(plan.modified.begin(), plan.modified.end());
    std::set<std::string> unchanged(plan.unchanged.begin(), plan.unchanged.end());

    std::size_t moved_or_removed = 0, added = 0, merged = 0;
    for (const auto& [path, action] : resolved) {
        if (deleted.count(path)) {
            if (action != Action::moved && action != Action::removed)
                throw ValidationFailed("deleted path " + path + " cannot be '" +
                                       action_name(action) + "' (use moved or removed)");
            ++moved_or_removed;
        } else if (untracked.count(path)) {
            if (action != Action::added)
                throw ValidationFailed("untracked path " + path + " cannot be '" +
                                       action_name(action) + "' (use added)");
            ++added;
        } else if (modified.count(path)) {
            if (action != Action::merged)
                throw ValidationFailed("modified path " + path + " cannot be '" +
                                       action_name(action) + "' (use merged)");
            ++merged;
        } else if (unchanged.count(path)) {
            throw ValidationFailed("unchanged path " + path + " needs no action");
        } else {
            throw UnknownPath(path);
        }
    }

    // Which deleted files were worth keeping is the human's call, expressed
    // through the chosen action; items 1 and 2 are both blocked while any
    // deleted path is still unclassified.
    bool deleted_done = moved_or_removed == deleted.size();
    bool untracked_done = added == untracked.size();
    bool modified_done = merged == modified.size();
    bool all = deleted_done && untracked_done && modified_done && reviewed;

    CompletionChecklist list;
    list.items = {
        {"All deleted files that need to be preserved have been moved", deleted_done},
        {"All unwanted deleted files have been removed", deleted_done},
        {"All untracked files have been added", untracked_done},
        {"All modified files have been merged", modified_done},
        {"All resulting changes have been reviewed", all},
    };
    return list;
}

CopyOutcome copy_no_clobber(const fs::path& src, const fs::path& dst) {
    if (!fs::exists(src))
        throw IoFailure(src.string(), "does not exist");
    if (!fs::is_regular_file(src))
        throw IoFailure(src.string(), "not a regular file");

    CopyOutcome outcome;
    outcome.src_digest = digest::sha256_file(src);

    if (fs::exists(dst)) {
        outcome.copied = false;
        outcome.dst_digest = digest::sha256_file(dst);
        return outcome;
    }

    if (dst.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(dst.parent_path(), ec);
        if (ec)
            throw IoFailure(dst.parent_path().string(), ec.message());
    }
    std::error_code ec;
    // copy_options::none refuses to overwrite; the exists() check above only
    // narrows the race, the copy itself is the authority.
    fs::copy_file(src, dst, fs::copy_options::none, ec);
    if (ec)
        throw IoFailure(dst.string(), ec.message());
    outcome.copied = true;
    outcome.dst_digest = outcome.src_digest;
    return outcome;
}

} // namespace pakforge::migrate
