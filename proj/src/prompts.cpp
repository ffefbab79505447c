#include <pakforge/prompts.hpp>

#include <pakforge/errors.hpp>

#include <cstdlib>
#include <fstream>

namespace fs = std::filesystem;

namespace pakforge::prompts {

namespace {

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

Question free_text(std::string key, int index, std::string default_value,
                   Question::Derive derive = Question::Derive::none) {
    Question q;
    q.key = std::move(key);
    q.index = index;
    q.kind = Question::Kind::free_text;
    q.default_value = std::move(default_value);
    q.derive = derive;
    return q;
}

Question yes_no(std::string key, int index) {
    Question q;
    q.key = std::move(key);
    q.index = index;
    q.kind = Question::Kind::choice;
    q.choices = {"No", "Yes"};
    q.default_value = "No";
    return q;
}

std::vector<Question> build_workspace() {
    return {free_text("folder_name", 1, "workspace-folder")};
}

std::vector<Question> build_system() {
    using D = Question::Derive;
    return {
        free_text("project_name", 1, "my-package"),
        free_text("github_username_or_orgname", 2, "billingegroup"),
        free_text("github_repo_name", 3, "my-package", D::raw_name),
        free_text("conda_pypi_package_dist_name", 4, "my-package", D::raw_name),
        free_text("package_dir_name", 5, "my_package", D::dir_name),
        free_text("contributors", 6, "Sangjoon Lee, Simon Billinge"),
    };
}

std::vector<Question> build_public() {
    using D = Question::Derive;
    return {
        free_text("maintainer_name", 1, "Simon Billinge"),
        free_text("maintainer_email", 2, "sb2896@columbia.edu"),
        free_text("maintainer_github_username", 3, "sbillinge"),
        free_text("contributors", 4, "Sangjoon Lee, Simon Billinge, Billinge Group members"),
        free_text("license_holders", 5,
                  "The Trustees of Columbia University in the City of New York"),
        free_text("project_name", 6, "diffpy.my-project"),
        free_text("github_username_or_orgname", 7, "diffpy"),
        free_text("github_repo_name", 8, "diffpy.my-project", D::raw_name),
        free_text("conda_pypi_package_dist_name", 9, "diffpy.my-project", D::raw_name),
        free_text("package_dir_name", 10, "diffpy.my_project", D::dir_name),
        free_text("project_short_description", 11, "Python package for doing science."),
        free_text("project_keywords", 12, "diffraction, PDF, X-ray, neutron"),
        free_text("minimum_supported_python_version", 13, "3.11"),
        free_text("maximum_supported_python_version", 14, "3.13"),
        yes_no("project_needs_c_code_compiled", 15),
        yes_no("project_has_gui_tests", 16),
    };
}

} // namespace

Level parse_level(const std::string& text) {
    if (text == "workspace")
        return Level::workspace;
    if (text == "system")
        return Level::system;
    if (text == "public")
        return Level::public_;
    throw UnknownLevel(text);
}

std::string level_name(Level level) {
    switch (level) {
    case Level::workspace: return "workspace";
    case Level::system: return "system";
    case Level::public_: return "public";
    }
    return "?";
}

const std::vector<Question>& question_set(Level level) {
    static const std::vector<Question> workspace = build_workspace();
    static const std::vector<Question> system = build_system();
    static const std::vector<Question> public_ = build_public();
    switch (level) {
    case Level::workspace: return workspace;
    case Level::system: return system;
    case Level::public_: return public_;
    }
    return workspace;
}

const std::string& ProjectAnswers::root_name() const {
    auto it = values.find(level == Level::workspace ? "folder_name" : "github_repo_name");
    if (it == values.end())
        throw Error("answers are missing the root-name question");
    return it->second;
}

std::optional<std::string> canonical_choice(const Question& question, const std::string& value) {
    for (std::size_t i = 0; i < question.choices.size(); ++i) {
        if (value == question.choices[i] || value == std::to_string(i + 1))
            return question.choices[i];
    }
    return std::nullopt;
}

namespace {

// The default a blank response selects: user config wins over the built-in;
// derived built-ins recompute from the project name entered earlier.
std::string effective_default(const Question& q,
                              const std::map<std::string, std::string>& user_defaults,
                              const std::optional<names::DerivedNames>& derived) {
    if (auto it = user_defaults.find(q.key); it != user_defaults.end())
        return it->second;
    if (derived) {
        if (q.derive == Question::Derive::raw_name)
            return derived->github_repo_name;
        if (q.derive == Question::Derive::dir_name)
            return derived->dir_name;
    }
    return q.default_value;
}

void validate(const Question& q, std::string& value) {
    if (value.empty())
        throw ValidationFailed("'" + q.key + "' must not be empty");

    if (q.kind == Question::Kind::choice) {
        auto canonical = canonical_choice(q, value);
        if (!canonical)
            throw ValidationFailed("'" + value + "' is not an option for '" + q.key + "'");
        value = *canonical;
        return;
    }
    if (q.key == "project_name" || q.key == "folder_name") {
        try {
            names::ProjectName::parse(value);
        } catch (const InvalidName& e) {
            throw ValidationFailed(std::string(e.what()));
        }
        if (q.key == "folder_name" && value.find('.') != std::string::npos)
            throw ValidationFailed("'" + value + "': a workspace folder name cannot contain a dot");
    }
    if (q.key == "package_dir_name" && !names::is_valid_dir_name(value))
        throw ValidationFailed("'" + value +
                               "': directory names use lowercase letters, digits, and "
                               "underscores (underscore for space is required)");
}

} // namespace

ProjectAnswers resolve_answers(Level level,
                               const std::map<std::string, std::string>& user_defaults,
                               const std::map<std::string, std::string>& provided,
                               const Responder& respond) {
    const auto& questions = question_set(level);

    for (const auto& [key, value] : provided) {
        bool known = false;
        for (const auto& q : questions)
            known = known || q.key == key;
        if (!known)
            throw ValidationFailed("'" + key + "' is not a " + level_name(level) + " question");
    }

    ProjectAnswers answers;
    answers.level = level;
    std::optional<names::DerivedNames> derived;

    for (const auto& q : questions) {
        std::string def = effective_default(q, user_defaults, derived);

        std::string value;
        if (auto it = provided.find(q.key); it != provided.end()) {
            value = trim(it->second);
        } else if (respond) {
            value = trim(respond(q, def));
            if (value.empty())
                value = def;
        } else {
            value = def;
        }
        if (value.empty() && def.empty())
            throw MissingAnswer(q.key);

        validate(q, value);
        answers.values[q.key] = value;

        // Later derived defaults key off the validated project name.
        if (q.key == "project_name")
            derived = names::derive_defaults(names::ProjectName::parse(value));
    }

    if (level == Level::workspace) {
        const std::string& folder = answers.values["folder_name"];
        answers.derived = names::derive_defaults(names::ProjectName::parse(folder));
    } else {
        answers.derived = names::DerivedNames{
            answers.values["github_repo_name"],
            answers.values["conda_pypi_package_dist_name"],
            answers.values["package_dir_name"],
        };
    }
    return answers;
}

std::map<std::string, std::string> parse_key_value_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoFailure(file.string(), "cannot open for reading");

    std::map<std::string, std::string> result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (trim(line).empty())
            continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(file.string(), lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigParseError(file.string(), lineno, "missing key before '='");
        result[key] = trim(line.substr(eq + 1));
    }
    return result;
}

std::map<std::string, std::string> load_user_defaults(const fs::path& config_path) {
    if (!fs::exists(config_path))
        return {};
    return parse_key_value_file(config_path);
}

fs::path default_config_path() {
    if (const char* dir = std::getenv("FORGE_CONFIG_DIR"); dir && *dir)
        return fs::path(dir) / "defaults.cfg";
    if (const char* xdg = std::getenv("XDG_CONFIG_HOME"); xdg && *xdg)
        return fs::path(xdg) / "pakforge" / "defaults.cfg";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".config" / "pakforge" / "defaults.cfg";
    return fs::path(".config") / "pakforge" / "defaults.cfg";
}

} // namespace pakforge::prompts
