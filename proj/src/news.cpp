#include <pakforge/news.hpp>

#include <pakforge/errors.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;

namespace pakforge::news {

namespace {

const std::vector<std::string> k_sections = {
    "Added", "Changed", "Deprecated", "Removed", "Fixed", "Security",
};

constexpr const char* k_placeholder = "<news-item>";
constexpr const char* k_no_changes = "No significant changes.";

std::string read_text(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoFailure(file.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const fs::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw IoFailure(file.string(), "cannot open for writing");
    out << text;
    if (!out)
        throw IoFailure(file.string(), "write failed");
}

// "**Added:**" or "**Added: **" -> "Added"; anything else -> nullopt.
std::optional<std::string> parse_header(const std::string& line) {
    if (line.size() < 5 || line.substr(0, 2) != "**")
        return std::nullopt;
    if (line.substr(line.size() - 2) != "**")
        return std::nullopt;
    std::string inner = line.substr(2, line.size() - 4);
    if (!inner.empty() && inner.back() == ' ')
        inner.pop_back();
    if (inner.empty() || inner.back() != ':')
        return std::nullopt;
    inner.pop_back();
    return inner;
}

// "* text" or " * text" -> "text"; anything else -> nullopt.
std::optional<std::string> parse_item(const std::string& line) {
    std::size_t i = 0;
    if (i < line.size() && line[i] == ' ')
        ++i;
    if (i + 1 < line.size() && line[i] == '*' && line[i + 1] == ' ')
        return line.substr(i + 2);
    return std::nullopt;
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

NewsFragment parse_fragment(const fs::path& file) {
    NewsFragment frag;
    frag.source_name = file.stem().string();

    std::string current;         // section of the open header, or empty
    bool current_known = false;  // header seen in this file yet

    auto lines = split_lines(read_text(file));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        std::size_t lineno = i + 1;
        if (is_blank(line))
            continue;

        if (auto section = parse_header(line)) {
            if (!is_canonical_section(*section))
                throw FragmentParseError(file.string(), lineno,
                                         "unknown section \"" + *section + "\"");
            current = *section;
            current_known = true;
            continue;
        }
        if (auto item = parse_item(line)) {
            if (!current_known)
                throw FragmentParseError(file.string(), lineno,
                                         "item before any section header");
            if (*item == k_placeholder)
                continue;
            frag.sections[current].push_back(*item);
            continue;
        }
        throw FragmentParseError(file.string(), lineno,
                                 "expected a \"**Section:**\" header or a \"* item\" line");
    }
    return frag;
}

bool is_real_fragment(const fs::path& entry) {
    return entry.extension() == ".rst" && entry.filename() != "TEMPLATE.rst";
}

std::vector<fs::path> real_fragments_sorted(const fs::path& news_dir) {
    std::vector<fs::path> files;
    if (fs::exists(news_dir)) {
        for (const auto& entry : fs::directory_iterator(news_dir)) {
            if (entry.is_regular_file() && is_real_fragment(entry.path()))
                files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });
    return files;
}

std::string render_release(const Release& release) {
    std::string out = release.version + "\n" + std::string(release.version.size(), '=') + "\n";
    bool any = false;
    for (const auto& section : k_sections) {
        auto it = release.sections.find(section);
        if (it == release.sections.end() || it->second.empty())
            continue;
        any = true;
        out += "\n**" + section + ": **\n\n";
        for (const auto& item : it->second)
            out += " * " + item + "\n";
    }
    if (!any)
        out += "\n" + std::string(k_no_changes) + "\n";
    return out;
}

bool digit(char c) { return c >= '0' && c <= '9'; }

// Version heading: a digit-led line underlined by '=' of the same length.
// The preamble's own section titles never start with a digit, so this does
// not mistake an overlined document title for a release.
bool is_version_heading(const std::vector<std::string>& lines, std::size_t i) {
    if (i + 1 >= lines.size())
        return false;
    const std::string& head = lines[i];
    const std::string& under = lines[i + 1];
    if (head.empty() || !digit(head.front()))
        return false;
    return under.size() == head.size() &&
           under.find_first_not_of('=') == std::string::npos;
}

} // namespace

const std::vector<std::string>& canonical_sections() {
    return k_sections;
}

bool is_canonical_section(const std::string& name) {
    return std::find(k_sections.begin(), k_sections.end(), name) != k_sections.end();
}

std::string fragment_template() {
    std::string out;
    for (std::size_t i = 0; i < k_sections.size(); ++i) {
        if (i != 0)
            out += "\n";
        out += "**" + k_sections[i] + ":**\n\n* " + k_placeholder + "\n";
    }
    return out;
}

fs::path create_news(const fs::path& news_dir, const std::string& name,
                     const std::string& section, const std::string& item) {
    if (!is_canonical_section(section))
        throw InvalidSection(section);
    if (name.empty() || name == "TEMPLATE" || name.find('/') != std::string::npos ||
        name.find('\\') != std::string::npos || name.find("..") != std::string::npos)
        throw InvalidName("'" + name + "' is not a valid news fragment stem");
    if (item.empty())
        throw ValidationFailed("news item text must not be empty");

    std::error_code ec;
    fs::create_directories(news_dir, ec);
    if (ec)
        throw IoFailure(news_dir.string(), ec.message());

    fs::path target = news_dir / (name + ".rst");
    if (fs::exists(target))
        throw AlreadyExists(target.string());

    std::string out;
    for (std::size_t i = 0; i < k_sections.size(); ++i) {
        if (i != 0)
            out += "\n";
        out += "**" + k_sections[i] + ":**\n\n* ";
        out += (k_sections[i] == section) ? item : k_placeholder;
        out += "\n";
    }
    write_text(target, out);
    return target;
}

std::vector<NewsFragment> collect_news(const fs::path& news_dir) {
    std::vector<NewsFragment> fragments;
    for (const auto& file : real_fragments_sorted(news_dir))
        fragments.push_back(parse_fragment(file));
    return fragments;
}

std::map<std::string, std::vector<std::string>> merge_fragments(
    const std::vector<NewsFragment>& fragments) {
    std::map<std::string, std::vector<std::string>> merged;
    for (const auto& frag : fragments)
        for (const auto& [section, items] : frag.sections)
            merged[section].insert(merged[section].end(), items.begin(), items.end());
    return merged;
}

std::string render_release_block(const std::string& version,
                                 const std::vector<NewsFragment>& fragments) {
    return render_release(Release{version, merge_fragments(fragments)});
}

ChangelogDocument ChangelogDocument::parse(const std::string& text) {
    ChangelogDocument doc;
    auto lines = split_lines(text);

    std::size_t i = 0;
    std::size_t first_heading = lines.size();
    for (std::size_t j = 0; j < lines.size(); ++j) {
        if (is_version_heading(lines, j)) {
            first_heading = j;
            break;
        }
    }

    std::string preamble;
    for (; i < first_heading; ++i)
        preamble += lines[i] + "\n";
    while (preamble.size() >= 2 && preamble.substr(preamble.size() - 2) == "\n\n")
        preamble.pop_back();
    if (preamble == "\n")
        preamble.clear();
    doc.preamble = preamble;

    Release* current = nullptr;
    std::string section;
    bool section_known = false;
    while (i < lines.size()) {
        if (is_version_heading(lines, i)) {
            doc.releases.push_back(Release{lines[i], {}});
            current = &doc.releases.back();
            section_known = false;
            i += 2;
            continue;
        }
        const std::string& line = lines[i];
        ++i;
        if (is_blank(line) || line == k_no_changes)
            continue;
        if (auto header = parse_header(line)) {
            section = *header;
            section_known = true;
            continue;
        }
        if (auto item = parse_item(line); item && current && section_known) {
            current->sections[section].push_back(*item);
            continue;
        }
        // Free-form prose inside a release block is preserved only by the
        // original text, not the structured view; tolerated, not an error.
    }
    return doc;
}

std::string ChangelogDocument::format() const {
    std::vector<std::string> pieces;
    if (!preamble.empty()) {
        std::string head = preamble;
        if (head.back() != '\n')
            head += "\n";
        pieces.push_back(head);
    }
    for (const auto& release : releases)
        pieces.push_back(render_release(release));

    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i != 0)
            out += "\n";
        out += pieces[i];
    }
    return out;
}

ChangelogDocument compile_changelog(const std::string& version,
                                    const std::vector<NewsFragment>& fragments,
                                    const ChangelogDocument& existing) {
    if (!existing.releases.empty() && existing.releases.front().version == version)
        throw DuplicateVersion(version);

    ChangelogDocument out = existing;
    out.releases.insert(out.releases.begin(), Release{version, merge_fragments(fragments)});
    return out;
}

bool check_news_present(const std::vector<std::string>& changed_paths) {
    return std::any_of(changed_paths.begin(), changed_paths.end(), [](const std::string& p) {
        if (p.size() <= 5 || p.substr(0, 5) != "news/")
            return false;
        std::string rest = p.substr(5);
        if (rest.find('/') != std::string::npos)
            return false;
        fs::path as_path(rest);
        return as_path.extension() == ".rst" && rest != "TEMPLATE.rst";
    });
}

std::vector<fs::path> clear_news(const fs::path& news_dir) {
    auto removed = real_fragments_sorted(news_dir);
    for (const auto& file : removed) {
        std::error_code ec;
        fs::remove(file, ec);
        if (ec)
            throw IoFailure(file.string(), ec.message());
    }
    return removed;
}

} // namespace pakforge::news
