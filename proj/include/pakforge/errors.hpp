#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pakforge {

/// Base class for all pakforge errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A name (project, segment, directory, file stem) violates the grammar.
class InvalidName : public Error {
public:
    using Error::Error;
};

/// Level string is not one of workspace | system | public.
class UnknownLevel : public Error {
public:
    explicit UnknownLevel(const std::string& level)
        : Error("unknown level '" + level + "' (expected workspace, system, or public)") {}
};

/// Non-interactive resolution hit a question with no value from any layer.
class MissingAnswer : public Error {
public:
    explicit MissingAnswer(const std::string& key)
        : Error("no answer available for '" + key + "' in non-interactive mode") {}
};

/// A resolved answer set failed validation.
class ValidationFailed : public Error {
public:
    using Error::Error;
};

/// Malformed line in a key = value config or answers file.
class ConfigParseError : public Error {
public:
    ConfigParseError(const std::string& file, std::size_t line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Template references a key that is not in the render context.
class UnknownPlaceholder : public Error {
public:
    UnknownPlaceholder(const std::string& key, const std::string& location)
        : Error("unknown placeholder '" + key + "' at " + location), key_(key) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Malformed placeholder markup (unterminated or empty marker).
class TemplateSyntaxError : public Error {
public:
    using Error::Error;
};

/// Filesystem operation failed.
class IoFailure : public Error {
public:
    IoFailure(const std::string& path, const std::string& cause)
        : Error(path + ": " + cause) {}
};

/// Tree-level no-clobber: the target root directory already exists.
class RootExists : public Error {
public:
    explicit RootExists(const std::string& path)
        : Error("root directory already exists: " + path) {}
};

/// A news fragment with this stem already exists.
class AlreadyExists : public Error {
public:
    explicit AlreadyExists(const std::string& name)
        : Error("news fragment already exists: " + name) {}
};

/// Section name outside the canonical set.
class InvalidSection : public Error {
public:
    explicit InvalidSection(const std::string& section)
        : Error("invalid section '" + section +
                "' (expected Added, Changed, Deprecated, Removed, Fixed, or Security)") {}
};

/// Unparseable line in a news fragment or changelog.
class FragmentParseError : public Error {
public:
    FragmentParseError(const std::string& file, std::size_t line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// The version being compiled already heads the changelog.
class DuplicateVersion : public Error {
public:
    explicit DuplicateVersion(const std::string& version)
        : Error("version " + version + " already heads the changelog") {}
};

/// Text is not a valid release tag.
class InvalidTag : public Error {
public:
    explicit InvalidTag(const std::string& reason) : Error("invalid tag: " + reason) {}
};

/// Tag pusher is not the authorized maintainer.
class Unauthorized : public Error {
public:
    Unauthorized(const std::string& pusher, const std::string& maintainer)
        : Error("user '" + pusher + "' is not authorized to release (maintainer is '" +
                maintainer + "')") {}
};

/// New tag does not exceed the highest existing tag.
class NonMonotonicTag : public Error {
public:
    NonMonotonicTag(const std::string& tag, const std::string& existing_max)
        : Error("tag " + tag + " does not exceed existing tag " + existing_max),
          existing_max_(existing_max) {}

    const std::string& existing_max() const { return existing_max_; }

private:
    std::string existing_max_;
};

/// A resolved-actions entry names a path outside the migration plan.
class UnknownPath : public Error {
public:
    explicit UnknownPath(const std::string& path)
        : Error("path not present in the migration plan: " + path) {}
};

/// Malformed line in a serialized tree manifest.
class ManifestParseError : public Error {
public:
    ManifestParseError(const std::string& file, std::size_t line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Two manifests hashed with different algorithms cannot be compared.
class AlgorithmMismatch : public Error {
public:
    AlgorithmMismatch(const std::string& a, const std::string& b)
        : Error("manifest digest algorithms differ: " + a + " vs " + b) {}
};

} // namespace pakforge
