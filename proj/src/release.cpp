#include <pakforge/release.hpp>

#include <pakforge/errors.hpp>
#include <pakforge/news.hpp>

#include <algorithm>
#include <charconv>

namespace pakforge::release {

namespace {

bool digit(char c) { return c >= '0' && c <= '9'; }

// One number of the grammar (0|[1-9][0-9]*); advances pos past it.
std::uint64_t take_number(const std::string& text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && digit(text[pos]))
        ++pos;
    if (pos == start)
        throw InvalidTag("expected a number for " + std::string(what) + " in '" + text + "'");
    if (text[start] == '0' && pos - start > 1)
        throw InvalidTag("leading zero in " + std::string(what) + " of '" + text + "'");

    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || ptr != text.data() + pos)
        throw InvalidTag(std::string(what) + " out of range in '" + text + "'");
    return value;
}

void expect(const std::string& text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw InvalidTag("expected '" + std::string(1, c) + "' at position " +
                         std::to_string(pos) + " in '" + text + "'");
    ++pos;
}

} // namespace

ReleaseTag parse_tag(const std::string& text) {
    if (text.empty())
        throw InvalidTag("empty tag");
    if (text.front() == 'v' || text.front() == 'V')
        throw InvalidTag("'" + text + "' must not carry a v prefix");

    ReleaseTag tag;
    std::size_t pos = 0;
    tag.major = take_number(text, pos, "major");
    expect(text, pos, '.');
    tag.minor = take_number(text, pos, "minor");
    expect(text, pos, '.');
    tag.patch = take_number(text, pos, "patch");

    if (pos < text.size()) {
        expect(text, pos, '-');
        expect(text, pos, 'r');
        expect(text, pos, 'c');
        expect(text, pos, '.');
        tag.rc = take_number(text, pos, "rc");
    }
    if (pos != text.size())
        throw InvalidTag("trailing characters in '" + text + "'");
    return tag;
}

std::string ReleaseTag::format() const {
    std::string out = std::to_string(major) + "." + std::to_string(minor) + "." +
                      std::to_string(patch);
    if (rc)
        out += "-rc." + std::to_string(*rc);
    return out;
}

std::strong_ordering operator<=>(const ReleaseTag& a, const ReleaseTag& b) {
    if (auto c = a.major <=> b.major; c != 0)
        return c;
    if (auto c = a.minor <=> b.minor; c != 0)
        return c;
    if (auto c = a.patch <=> b.patch; c != 0)
        return c;
    if (a.rc.has_value() != b.rc.has_value())
        return a.rc.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.rc)
        return *a.rc <=> *b.rc;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_tags(const ReleaseTag& a, const ReleaseTag& b) {
    return a <=> b;
}

bool authorize(const std::string& tag_pusher, const std::string& maintainer) {
    return !maintainer.empty() && tag_pusher == maintainer;
}

ReleasePlan plan_release(const std::string& tag_text, const std::string& pusher,
                         const RepoState& repo_state, bool conda_forge_checklist) {
    ReleaseTag tag = parse_tag(tag_text);

    if (!authorize(pusher, repo_state.maintainer))
        throw Unauthorized(pusher, repo_state.maintainer);

    if (!repo_state.existing_tags.empty()) {
        const ReleaseTag& max =
            *std::max_element(repo_state.existing_tags.begin(), repo_state.existing_tags.end());
        if (tag <= max)
            throw NonMonotonicTag(tag.format(), max.format());
    }

    ReleasePlan plan;
    plan.tag = tag;
    plan.prerelease = tag.prerelease();

    if (!plan.prerelease)
        plan.changelog_preview =
            news::render_release_block(tag.format(), news::collect_news(repo_state.news_dir));

    std::string docs = "deploy-docs(tag " + tag.format() +
                       (plan.prerelease ? ", pre-release)" : ")");
    plan.steps.push_back({"publish-github-release(with changelog)", plan.prerelease, false});
    plan.steps.push_back({docs, false, false});
    plan.steps.push_back({"upload-package-index", plan.prerelease, false});
    if (conda_forge_checklist)
        plan.steps.push_back({"emit-conda-forge-checklist", false, true});
    return plan;
}

} // namespace pakforge::release
