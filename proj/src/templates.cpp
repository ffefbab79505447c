#include <pakforge/templates.hpp>

#include <pakforge/errors.hpp>
#include <pakforge/names.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef PAKFORGE_TEMPLATES_DIR
#define PAKFORGE_TEMPLATES_DIR "templates"
#endif

namespace fs = std::filesystem;

namespace pakforge::templates {

namespace {

std::string read_bytes(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoFailure(file.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_binary_name(const std::string& path) {
    for (const char* ext : {".png", ".ico", ".gif", ".jpg", ".jpeg"}) {
        std::string suffix(ext);
        if (path.size() > suffix.size() &&
            path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
            return true;
    }
    return false;
}

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos)
        return "";
    auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

std::string location_of(const std::string& text, std::size_t offset, const std::string& origin) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return origin + ":" + std::to_string(line) + ":" + std::to_string(col);
}

std::string render_at(const std::string& text, const std::map<std::string, std::string>& context,
                      const std::string& origin) {
    std::string out;
    out.reserve(text.size());

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto open = text.find("{{", pos);
        auto stray = text.find("}}", pos);
        if (open == std::string::npos && stray == std::string::npos) {
            out.append(text, pos, std::string::npos);
            break;
        }
        if (stray != std::string::npos && (open == std::string::npos || stray < open))
            throw TemplateSyntaxError("'}}' without matching '{{' at " +
                                      location_of(text, stray, origin));

        out.append(text, pos, open - pos);
        auto close = text.find("}}", open + 2);
        if (close == std::string::npos)
            throw TemplateSyntaxError("unterminated '{{' at " + location_of(text, open, origin));
        std::string inner = text.substr(open + 2, close - open - 2);
        if (inner.find("{{") != std::string::npos || inner.find('\n') != std::string::npos)
            throw TemplateSyntaxError("malformed placeholder at " +
                                      location_of(text, open, origin));
        std::string key = trim(inner);
        if (key.empty())
            throw TemplateSyntaxError("empty placeholder at " + location_of(text, open, origin));

        auto it = context.find(key);
        if (it == context.end())
            throw UnknownPlaceholder(key, location_of(text, open, origin));
        out += it->second;
        pos = close + 2;
    }
    return out;
}

void check_rendered_path(const std::string& path, const std::string& origin) {
    if (path.empty() || path.front() == '/' || path.back() == '/')
        throw TemplateSyntaxError("bad rendered path '" + path + "' from " + origin);
    std::istringstream in(path);
    std::string part;
    while (std::getline(in, part, '/')) {
        if (part.empty() || part == "." || part == "..")
            throw TemplateSyntaxError("bad rendered path '" + path + "' from " + origin);
    }
}

// Headless-display setup inserted into the test workflow when the project
// declares GUI tests.
const char* k_gui_setup_yes =
    "      - name: Start a virtual display for GUI tests\n"
    "        run: |\n"
    "          sudo apt-get install -y xvfb\n"
    "          Xvfb :99 -screen 0 1280x720x24 &\n"
    "          echo \"DISPLAY=:99\" >> \"$GITHUB_ENV\"\n";

// Extra build steps inserted into the wheel workflow when the project
// compiles C code.
const char* k_c_steps_yes =
    "      - name: Install compile-time requirements\n"
    "        run: python -m pip install -r requirements/build.txt\n"
    "      - name: Build compiled extensions in place\n"
    "        run: python setup.py build_ext --inplace\n";

const char* k_namespace_init =
    "__path__ = __import__(\"pkgutil\").extend_path(__path__, __name__)\n";

} // namespace

fs::path bundle_root() {
    if (const char* dir = std::getenv("FORGE_TEMPLATES_DIR"); dir && *dir)
        return fs::path(dir);
    return fs::path(PAKFORGE_TEMPLATES_DIR);
}

TemplateBundle load_bundle(prompts::Level level, const fs::path& root) {
    fs::path dir = root / prompts::level_name(level);
    fs::path manifest = dir / "MANIFEST";
    if (!fs::exists(manifest))
        throw IoFailure(manifest.string(), "bundle manifest is missing");

    std::set<std::string> keys;
    for (const auto& q : prompts::question_set(level))
        keys.insert(q.key);

    TemplateBundle bundle;
    bundle.level = level;
    bundle.files_root = dir / "files";

    std::istringstream in(read_bytes(manifest));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        BundleEntry entry;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            entry.path_template = line;
        } else {
            std::string condition = line.substr(0, tab);
            entry.path_template = line.substr(tab + 1);
            auto eq = condition.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= condition.size())
                throw TemplateSyntaxError(manifest.string() + ":" + std::to_string(lineno) +
                                          ": condition must be key=value");
            std::string key = condition.substr(0, eq);
            if (!keys.count(key))
                throw TemplateSyntaxError(manifest.string() + ":" + std::to_string(lineno) +
                                          ": condition key '" + key + "' is not a " +
                                          prompts::level_name(level) + " question");
            entry.condition = {key, condition.substr(eq + 1)};
        }
        if (entry.path_template.empty())
            throw TemplateSyntaxError(manifest.string() + ":" + std::to_string(lineno) +
                                      ": empty path template");
        bundle.entries.push_back(std::move(entry));
    }
    return bundle;
}

TemplateBundle load_bundle(prompts::Level level) {
    return load_bundle(level, bundle_root());
}

std::string render_template(const std::string& text,
                            const std::map<std::string, std::string>& context) {
    return render_at(text, context, "<template>");
}

const RenderedFile* RenderedTree::find(const std::string& path) const {
    for (const auto& file : files)
        if (file.path == path)
            return &file;
    return nullptr;
}

std::map<std::string, std::string> build_context(const prompts::ProjectAnswers& answers) {
    std::map<std::string, std::string> ctx = answers.values;

    if (answers.level != prompts::Level::workspace) {
        std::string dir_path = answers.derived.dir_name;
        std::replace(dir_path.begin(), dir_path.end(), '.', '/');
        ctx["package_dir_path"] = dir_path;
    }

    if (answers.level == prompts::Level::public_) {
        // TOML-ready keyword list: "a, b" -> "a", "b"
        std::string toml;
        std::istringstream in(answers.values.at("project_keywords"));
        std::string word;
        while (std::getline(in, word, ',')) {
            word = trim(word);
            if (word.empty())
                continue;
            if (!toml.empty())
                toml += ", ";
            toml += "\"" + word + "\"";
        }
        ctx["project_keywords_toml"] = toml;

        bool c_code = answers.values.at("project_needs_c_code_compiled") == "Yes";
        bool gui = answers.values.at("project_has_gui_tests") == "Yes";
        ctx["c_extension_build_steps"] = c_code ? k_c_steps_yes : "";
        ctx["gui_test_setup"] = gui ? k_gui_setup_yes : "";
    }
    return ctx;
}

RenderedTree render_tree(const TemplateBundle& bundle, const prompts::ProjectAnswers& answers) {
    if (bundle.level != answers.level)
        throw Error("bundle level does not match the answers");

    auto ctx = build_context(answers);

    RenderedTree tree;
    tree.root_name = answers.root_name();

    for (const auto& entry : bundle.entries) {
        if (entry.condition) {
            auto it = ctx.find(entry.condition->first);
            if (it == ctx.end() || it->second != entry.condition->second)
                continue;
        }

        RenderedFile file;
        file.path = render_at(entry.path_template, ctx, "<manifest>");
        check_rendered_path(file.path, entry.path_template);
        file.binary = is_binary_name(file.path);

        std::string raw = read_bytes(bundle.files_root / entry.path_template);
        file.content = file.binary ? raw : render_at(raw, ctx, entry.path_template);
        tree.files.push_back(std::move(file));
    }

    // A dotted package directory means a namespace package: the sources
    // already rendered under src/<ns>/<pkg> via package_dir_path; the shared
    // namespace directory needs its path-extending __init__.py.
    if (answers.level != prompts::Level::workspace) {
        const std::string& dir_name = answers.derived.dir_name;
        if (auto dot = dir_name.find('.'); dot != std::string::npos)
            tree.files.push_back(
                {"src/" + dir_name.substr(0, dot) + "/__init__.py", k_namespace_init, false});
    }

    std::sort(tree.files.begin(), tree.files.end(),
              [](const RenderedFile& a, const RenderedFile& b) { return a.path < b.path; });
    for (std::size_t i = 1; i < tree.files.size(); ++i)
        if (tree.files[i].path == tree.files[i - 1].path)
            throw Error("duplicate rendered path: " + tree.files[i].path);
    return tree;
}

RenderedTree render_tree(prompts::Level level, const prompts::ProjectAnswers& answers) {
    return render_tree(load_bundle(level), answers);
}

WriteReport write_tree(const RenderedTree& tree, const fs::path& destination,
                       ClobberPolicy policy) {
    if (!fs::exists(destination))
        throw IoFailure(destination.string(), "destination does not exist");

    fs::path root = destination / tree.root_name;
    if (policy == ClobberPolicy::refuse_root && fs::exists(root))
        throw RootExists(root.string());

    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec)
        throw IoFailure(root.string(), ec.message());

    WriteReport report;
    for (const auto& file : tree.files) {
        fs::path target = root / file.path;
        if (policy != ClobberPolicy::overwrite && fs::exists(target)) {
            report.skipped_existing.push_back(file.path);
            continue;
        }
        if (target.has_parent_path()) {
            fs::create_directories(target.parent_path(), ec);
            if (ec)
                throw IoFailure(target.parent_path().string(), ec.message());
        }
        std::ofstream out(target, std::ios::binary);
        if (!out)
            throw IoFailure(target.string(), "cannot open for writing");
        out << file.content;
        if (!out)
            throw IoFailure(target.string(), "write failed");
        report.written.push_back(file.path);
    }
    return report;
}

} // namespace pakforge::templates
