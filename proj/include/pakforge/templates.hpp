#pragma once

#include <pakforge/prompts.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pakforge::templates {

/// One manifest entry: a path template plus an optional "key=value" guard.
/// Guarded entries are emitted only when the resolved answer matches.
struct BundleEntry {
    std::string path_template;
    std::optional<std::pair<std::string, std::string>> condition;
};

/// A level's template bundle: the manifest plus the directory holding the
/// template files (stored under their literal, unrendered path templates).
struct TemplateBundle {
    prompts::Level level = prompts::Level::workspace;
    std::vector<BundleEntry> entries;
    std::filesystem::path files_root;
};

/// Directory holding templates/<level>/; FORGE_TEMPLATES_DIR overrides the
/// compiled-in default.
std::filesystem::path bundle_root();

/// Reads templates/<level>/MANIFEST under root. Each line is
/// "condition TAB path-template" or just "path-template"; '#' comments and
/// blank lines are skipped. Conditions must reference question keys of the
/// level; anything else throws TemplateSyntaxError.
TemplateBundle load_bundle(prompts::Level level, const std::filesystem::path& root);
TemplateBundle load_bundle(prompts::Level level);

/// Replaces every "{{ key }}" (inner whitespace optional) with context[key].
/// Unknown keys throw UnknownPlaceholder; unterminated or stray markers
/// throw TemplateSyntaxError. Non-placeholder text passes through untouched,
/// and the result never contains marker sequences.
std::string render_template(const std::string& text,
                            const std::map<std::string, std::string>& context);

struct RenderedFile {
    std::string path;     // relative, '/'-separated
    std::string content;  // bytes; text files are LF with trailing newline
    bool binary = false;
};

/// A fully rendered project: the root directory name and its files, sorted
/// by path, free of placeholder markers.
struct RenderedTree {
    std::string root_name;
    std::vector<RenderedFile> files;

    const RenderedFile* find(const std::string& path) const;
};

/// The full render context for a level's answers: every answer value plus
/// the computed keys (package_dir_path, and for public the keyword list and
/// the workflow fragments driven by the two choice questions).
std::map<std::string, std::string> build_context(const prompts::ProjectAnswers& answers);

/// Renders the level's bundle with the resolved answers. A dotted package
/// directory nests sources under src/<namespace>/<package>/ and adds the
/// namespace __init__.py.
RenderedTree render_tree(const TemplateBundle& bundle, const prompts::ProjectAnswers& answers);
RenderedTree render_tree(prompts::Level level, const prompts::ProjectAnswers& answers);

/// How write_tree treats what already exists on disk.
enum class ClobberPolicy {
    overwrite,      // existing files are replaced
    skip_existing,  // existing files are kept and reported
    refuse_root,    // the tree's root directory must not exist at all
};

struct WriteReport {
    std::vector<std::string> written;           // tree-relative paths
    std::vector<std::string> skipped_existing;  // disjoint from written
};

/// Writes tree under destination/<root_name>. refuse_root throws RootExists
/// when that directory is already present; skip_existing leaves pre-existing
/// files byte-identical and reports them.
WriteReport write_tree(const RenderedTree& tree, const std::filesystem::path& destination,
                       ClobberPolicy policy);

} // namespace pakforge::templates
