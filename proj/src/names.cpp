#include <pakforge/names.hpp>

#include <pakforge/errors.hpp>

#include <algorithm>
#include <cctype>

namespace pakforge::names {

namespace {

bool lower_alpha(char c) { return c >= 'a' && c <= 'z'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

// Segment grammar: [a-z][a-z0-9_-]*. Underscores in entered names are
// accepted and passed through unchanged.
void check_segment(const std::string& segment, const std::string& whole) {
    if (segment.empty())
        throw InvalidName("'" + whole + "': empty segment around the dot");
    for (char c : segment) {
        if (static_cast<unsigned char>(c) >= 0x80)
            throw InvalidName("'" + whole + "': non-ASCII characters are not allowed");
        if (std::isupper(static_cast<unsigned char>(c)))
            throw InvalidName("'" + whole + "': use lowercase letters only");
        if (c == ' ')
            throw InvalidName("'" + whole + "': spaces are not allowed (use hyphens)");
    }
    if (!lower_alpha(segment.front()))
        throw InvalidName("'" + whole + "': each segment must start with a lowercase letter");
    for (char c : segment) {
        if (!(lower_alpha(c) || digit(c) || c == '-' || c == '_'))
            throw InvalidName("'" + whole + "': illegal character '" + std::string(1, c) +
                              "' (allowed: lowercase letters, digits, hyphens)");
    }
}

} // namespace

std::pair<std::optional<std::string>, std::string> split_namespace(const std::string& text) {
    if (text.empty())
        throw InvalidName("project name must not be empty");

    auto dots = std::count(text.begin(), text.end(), '.');
    if (dots > 1)
        throw InvalidName("'" + text + "': at most one dot is allowed (namespace.package)");

    if (dots == 0) {
        check_segment(text, text);
        return {std::nullopt, text};
    }

    auto pos = text.find('.');
    std::string ns = text.substr(0, pos);
    std::string pkg = text.substr(pos + 1);
    check_segment(ns, text);
    check_segment(pkg, text);
    return {ns, pkg};
}

ProjectName ProjectName::parse(const std::string& raw) {
    auto [ns, pkg] = split_namespace(raw);
    return ProjectName{raw, std::move(ns), std::move(pkg)};
}

std::string normalize_dir_name(const ProjectName& name) {
    std::string out = name.raw;
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

DerivedNames derive_defaults(const ProjectName& name) {
    return DerivedNames{name.raw, name.raw, normalize_dir_name(name)};
}

bool is_valid_segment(const std::string& text) {
    if (text.empty() || !lower_alpha(text.front()))
        return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        return lower_alpha(c) || digit(c) || c == '-' || c == '_';
    });
}

bool is_valid_dir_name(const std::string& text) {
    auto valid_dir_segment = [](const std::string& s) {
        if (s.empty() || !(lower_alpha(s.front()) || s.front() == '_'))
            return false;
        return std::all_of(s.begin(), s.end(),
                           [](char c) { return lower_alpha(c) || digit(c) || c == '_'; });
    };

    auto dots = std::count(text.begin(), text.end(), '.');
    if (dots > 1)
        return false;
    if (dots == 0)
        return valid_dir_segment(text);
    auto pos = text.find('.');
    return valid_dir_segment(text.substr(0, pos)) && valid_dir_segment(text.substr(pos + 1));
}

} // namespace pakforge::names
