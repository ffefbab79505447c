#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace pakforge::news {

/// Canonical changelog section order. Fragment files and compiled releases
/// never introduce sections outside this list.
const std::vector<std::string>& canonical_sections();

bool is_canonical_section(const std::string& name);

/// One news fragment: section name -> items. Sections still holding only the
/// "<news-item>" placeholder are absent.
struct NewsFragment {
    std::string source_name;  // file stem, e.g. "bucket" for news/bucket.rst
    std::map<std::string, std::vector<std::string>> sections;

    bool empty() const { return sections.empty(); }
};

/// One compiled release: version heading plus its categorized items.
/// An empty sections map renders as "No significant changes."
struct Release {
    std::string version;
    std::map<std::string, std::vector<std::string>> sections;
};

/// The changelog as structured data: optional preamble text above the first
/// release block, then releases newest-first.
struct ChangelogDocument {
    std::string preamble;
    std::vector<Release> releases;

    /// Parses changelog text. Release blocks are version headings (a line
    /// starting with a digit, underlined with '=' of equal length); anything
    /// above the first heading is preamble.
    static ChangelogDocument parse(const std::string& text);

    /// Serializes: preamble, then release blocks, blank-line separated.
    std::string format() const;
};

/// The template every change copies; ships all sections with a placeholder.
std::string fragment_template();

/// Writes news/<name>.rst containing `item` under `section` and the template
/// placeholders elsewhere (directories created as needed). Refuses to
/// overwrite. Throws InvalidSection for a non-canonical section and
/// InvalidName for a stem that is empty, contains separators, or is TEMPLATE.
std::filesystem::path create_news(const std::filesystem::path& news_dir,
                                  const std::string& name,
                                  const std::string& section,
                                  const std::string& item);

/// Parses every news/*.rst except TEMPLATE.rst, lexicographic filename order.
/// Malformed lines throw FragmentParseError with file and line.
std::vector<NewsFragment> collect_news(const std::filesystem::path& news_dir);

/// Merged view of many fragments: section -> concatenated items, fragment
/// order preserved within a section.
std::map<std::string, std::vector<std::string>> merge_fragments(
    const std::vector<NewsFragment>& fragments);

/// Prepends a release compiled from `fragments` to the document. Throws
/// DuplicateVersion when `version` already heads it. Pure: clearing news/ is
/// a separate, explicit step.
ChangelogDocument compile_changelog(const std::string& version,
                                    const std::vector<NewsFragment>& fragments,
                                    const ChangelogDocument& existing);

/// Renders one release block: version line, '=' underline, then each
/// non-empty section in canonical order as "**<Section>: **" with " * <item>"
/// bullets. Zero fragments render "No significant changes."
std::string render_release_block(const std::string& version,
                                 const std::vector<NewsFragment>& fragments);

/// True iff at least one changed path matches news/*.rst and is not
/// news/TEMPLATE.rst. Monotone in the path list.
bool check_news_present(const std::vector<std::string>& changed_paths);

/// Deletes every real fragment directly under news/, keeping TEMPLATE.rst.
/// Returns the deleted paths in filename order.
std::vector<std::filesystem::path> clear_news(const std::filesystem::path& news_dir);

} // namespace pakforge::news
