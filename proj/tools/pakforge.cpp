#include <pakforge/digest.hpp>
#include <pakforge/errors.hpp>
#include <pakforge/migrate.hpp>
#include <pakforge/news.hpp>
#include <pakforge/prompts.hpp>
#include <pakforge/release.hpp>
#include <pakforge/templates.hpp>
#include <pakforge/version.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace pakforge;

namespace {

const char* k_synopsis =
    "usage: pakforge <command> [options]\n"
    "  create <workspace|system|public> [--answers FILE] [--yes] [--dest DIR]\n"
    "  news add <name> --section <section> --item <text> [--news-dir DIR]\n"
    "  news check <changed-paths-file>\n"
    "  news clear [--news-dir DIR]\n"
    "  changelog compile <version> [--news-dir DIR] [--changelog FILE] [--write]\n"
    "  release plan <tag> --pusher <name> [--maintainer <name>]\n"
    "               [--existing-tags FILE] [--news-dir DIR] [--changelog FILE]\n"
    "               [--conda-forge]\n"
    "  migrate plan --old <dir|manifest> --new <dir|manifest>\n"
    "               [--format sections|manifest]\n"
    "  migrate checklist --old <dir|manifest> --new <dir|manifest>\n"
    "               [--resolved FILE] [--reviewed]\n"
    "  migrate copy <src> <dst>\n";

int classify(const Error& e) {
    if (dynamic_cast<const Unauthorized*>(&e))
        return 2;
    if (dynamic_cast<const NonMonotonicTag*>(&e) || dynamic_cast<const RootExists*>(&e) ||
        dynamic_cast<const AlreadyExists*>(&e) || dynamic_cast<const DuplicateVersion*>(&e))
        return 4;
    if (dynamic_cast<const InvalidTag*>(&e) || dynamic_cast<const InvalidName*>(&e) ||
        dynamic_cast<const ValidationFailed*>(&e) || dynamic_cast<const ConfigParseError*>(&e) ||
        dynamic_cast<const UnknownPlaceholder*>(&e) ||
        dynamic_cast<const TemplateSyntaxError*>(&e) || dynamic_cast<const InvalidSection*>(&e) ||
        dynamic_cast<const FragmentParseError*>(&e) || dynamic_cast<const UnknownLevel*>(&e) ||
        dynamic_cast<const UnknownPath*>(&e) || dynamic_cast<const MissingAnswer*>(&e) ||
        dynamic_cast<const ManifestParseError*>(&e) || dynamic_cast<const AlgorithmMismatch*>(&e))
        return 3;
    return 1;
}

std::string read_bytes(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoFailure(file.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> read_lines(const fs::path& file) {
    std::istringstream in(read_bytes(file));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos)
        return "";
    auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

// Prompt texts follow the transcript form exactly:
//   [i/N] key (default):
// and for choice questions
//   [i/N] Select key
//     1 - No
//     2 - Yes
//     Choose from [1/2] (1):
// with the sub-lines indented two spaces and a space after each colon.
prompts::Responder make_interactive(std::size_t total) {
    return [total](const prompts::Question& q, const std::string& effective_default) {
        if (q.kind == prompts::Question::Kind::choice) {
            std::cout << "[" << q.index << "/" << total << "] Select " << q.key << "\n";
            std::string indices;
            std::size_t default_index = 1;
            for (std::size_t i = 0; i < q.choices.size(); ++i) {
                std::cout << "  " << (i + 1) << " - " << q.choices[i] << "\n";
                if (!indices.empty())
                    indices += "/";
                indices += std::to_string(i + 1);
                if (q.choices[i] == effective_default)
                    default_index = i + 1;
            }
            std::cout << "  Choose from [" << indices << "] (" << default_index << "): "
                      << std::flush;
        } else {
            std::cout << "[" << q.index << "/" << total << "] " << q.key << " ("
                      << effective_default << "): " << std::flush;
        }
        std::string line;
        if (!std::getline(std::cin, line))
            return std::string();  // closed input reads as accepting the default
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    };
}

// A side of a migration: a directory to snapshot or a saved manifest file.
migrate::Manifest load_side(const std::string& arg) {
    fs::path path(arg);
    if (fs::is_directory(path))
        return migrate::snapshot_tree(path);
    if (fs::exists(path))
        return migrate::Manifest::parse(read_bytes(path), path.string());
    throw IoFailure(arg, "no such file or directory");
}

void print_category(const char* name, const std::vector<std::string>& paths) {
    std::cout << name << ":\n";
    for (const auto& path : paths)
        std::cout << "  " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scaffold Python project trees and manage their news, releases, and migrations"};
    app.set_version_flag("--version", version_banner());
    app.require_subcommand(1);

    int exit_code = 0;

    // create
    auto* create = app.add_subcommand("create", "Render a level's template tree as a new project");
    std::string create_level;
    std::string answers_file;
    std::string dest = ".";
    bool yes = false;
    create->add_option("level", create_level, "workspace, system, or public")->required();
    create->add_option("--answers", answers_file, "key = value file answering questions outright");
    create->add_flag("--yes", yes, "accept defaults without prompting");
    create->add_option("--dest", dest, "directory to create the project under");
    create->callback([&]() {
        auto level = prompts::parse_level(create_level);
        auto user_defaults = prompts::load_user_defaults(prompts::default_config_path());
        std::map<std::string, std::string> provided;
        if (!answers_file.empty())
            provided = prompts::parse_key_value_file(answers_file);
        prompts::Responder respond;
        if (!yes)
            respond = make_interactive(prompts::question_set(level).size());
        auto answers = prompts::resolve_answers(level, user_defaults, provided, respond);
        auto tree = templates::render_tree(level, answers);
        auto report = templates::write_tree(tree, dest, templates::ClobberPolicy::refuse_root);
        std::cerr << "created " << (fs::path(dest) / tree.root_name).lexically_normal().string()
                  << " (" << report.written.size() << " files)\n";
    });

    // news
    auto* news_cmd = app.add_subcommand("news", "Manage news fragments");
    news_cmd->require_subcommand(1);

    std::string news_name, news_section, news_item;
    std::string add_news_dir = "news";
    auto* news_add = news_cmd->add_subcommand("add", "Create news/<name>.rst with one item");
    news_add->add_option("name", news_name, "fragment file stem, typically the branch name")
        ->required();
    news_add->add_option("--section", news_section, "Added, Changed, Deprecated, Removed, Fixed, or Security")
        ->required();
    news_add->add_option("--item", news_item, "news item text")->required();
    news_add->add_option("--news-dir", add_news_dir, "news directory");
    news_add->callback([&]() {
        auto path = news::create_news(add_news_dir, news_name, news_section, news_item);
        std::cout << path.string() << "\n";
    });

    std::string paths_file;
    auto* news_check = news_cmd->add_subcommand(
        "check", "Verify a list of changed paths includes a news fragment");
    news_check->add_option("changed-paths-file", paths_file, "file with one changed path per line")
        ->required();
    news_check->callback([&]() {
        std::vector<std::string> changed;
        for (const auto& line : read_lines(paths_file)) {
            auto path = trim(line);
            if (!path.empty())
                changed.push_back(path);
        }
        if (news::check_news_present(changed)) {
            std::cout << "news-check: pass\n";
        } else {
            std::cerr << "news-check: fail: no news fragment among the changed paths"
                         " (expected news/<name>.rst other than news/TEMPLATE.rst)\n";
            exit_code = 1;
        }
    });

    std::string clear_news_dir = "news";
    auto* news_clear =
        news_cmd->add_subcommand("clear", "Delete fragments under news/, keeping TEMPLATE.rst");
    news_clear->add_option("--news-dir", clear_news_dir, "news directory");
    news_clear->callback([&]() {
        for (const auto& path : news::clear_news(clear_news_dir))
            std::cout << path.string() << "\n";
    });

    // changelog
    auto* changelog_cmd = app.add_subcommand("changelog", "Compile news fragments into the changelog");
    changelog_cmd->require_subcommand(1);

    std::string compile_version;
    std::string compile_news_dir = "news";
    std::string changelog_file = "CHANGELOG.rst";
    bool compile_write = false;
    auto* compile = changelog_cmd->add_subcommand(
        "compile", "Prepend a release block compiled from the news fragments");
    compile->add_option("version", compile_version, "release version heading")->required();
    compile->add_option("--news-dir", compile_news_dir, "news directory");
    compile->add_option("--changelog", changelog_file, "changelog file");
    compile->add_flag("--write", compile_write, "write the result back to the changelog file");
    compile->callback([&]() {
        release::parse_tag(compile_version);  // version must be a valid tag
        auto fragments = news::collect_news(compile_news_dir);
        std::string existing_text;
        if (fs::exists(changelog_file))
            existing_text = read_bytes(changelog_file);
        auto existing = news::ChangelogDocument::parse(existing_text);
        auto compiled = news::compile_changelog(compile_version, fragments, existing);
        auto text = compiled.format();
        std::cout << text;
        if (compile_write) {
            std::ofstream out(changelog_file, std::ios::binary);
            if (!out)
                throw IoFailure(changelog_file, "cannot open for writing");
            out << text;
            std::cerr << "wrote " << changelog_file << "\n";
        }
    });

    // release
    auto* release_cmd = app.add_subcommand("release", "Plan releases");
    release_cmd->require_subcommand(1);

    std::string plan_tag, plan_pusher, plan_maintainer, tags_file;
    std::string plan_news_dir = "news";
    std::string plan_changelog = "CHANGELOG.rst";
    bool conda_forge = false;
    auto* plan = release_cmd->add_subcommand("plan", "Dry-run the release steps for a tag");
    plan->add_option("tag", plan_tag, "version tag, e.g. 1.2.0 or 1.2.0-rc.0")->required();
    plan->add_option("--pusher", plan_pusher, "GitHub username pushing the tag")->required();
    plan->add_option("--maintainer", plan_maintainer,
                     "authorized maintainer (default: maintainer_github_username from the"
                     " defaults config)");
    plan->add_option("--existing-tags", tags_file, "file with one existing tag per line");
    plan->add_option("--news-dir", plan_news_dir, "news directory");
    plan->add_option("--changelog", plan_changelog, "changelog file");
    plan->add_flag("--conda-forge", conda_forge,
                   "append the informational conda-forge checklist step");
    plan->callback([&]() {
        release::RepoState state;
        state.maintainer = plan_maintainer;
        if (state.maintainer.empty()) {
            auto defaults = prompts::load_user_defaults(prompts::default_config_path());
            auto it = defaults.find("maintainer_github_username");
            if (it != defaults.end())
                state.maintainer = it->second;
        }
        if (!tags_file.empty()) {
            for (const auto& line : read_lines(tags_file)) {
                auto text = trim(line);
                if (!text.empty())
                    state.existing_tags.push_back(release::parse_tag(text));
            }
        }
        state.news_dir = plan_news_dir;
        state.changelog = plan_changelog;

        auto release_plan = release::plan_release(plan_tag, plan_pusher, state, conda_forge);
        std::cout << "tag: " << release_plan.tag.format() << "\n";
        std::cout << "prerelease: " << (release_plan.prerelease ? "yes" : "no") << "\n";
        int step = 1;
        for (const auto& s : release_plan.steps) {
            std::cout << "STEP " << step++ << ": " << s.descriptor;
            if (s.prerelease)
                std::cout << " [pre-release]";
            if (s.informational)
                std::cout << " (informational)";
            std::cout << "\n";
        }
        if (!release_plan.changelog_preview.empty())
            std::cout << "changelog preview:\n" << release_plan.changelog_preview;
    });

    // migrate
    auto* migrate_cmd = app.add_subcommand("migrate", "Triage an old tree against a new one");
    migrate_cmd->require_subcommand(1);

    std::string old_arg, new_arg;
    std::string plan_format = "sections";
    auto* mplan = migrate_cmd->add_subcommand("plan", "Four-way diff of old vs new");
    mplan->add_option("--old", old_arg, "old directory or saved manifest")->required();
    mplan->add_option("--new", new_arg, "new directory or saved manifest")->required();
    mplan->add_option("--format", plan_format, "sections (default) or manifest")
        ->check(CLI::IsMember({"sections", "manifest"}));
    mplan->callback([&]() {
        if (plan_format == "manifest") {
            auto manifest = load_side(new_arg);
            for (const auto& warning : manifest.warnings)
                std::cerr << "warning: " << warning << "\n";
            std::cout << manifest.serialize();
            return;
        }
        auto old_manifest = load_side(old_arg);
        auto new_manifest = load_side(new_arg);
        for (const auto& manifest : {&old_manifest, &new_manifest})
            for (const auto& warning : manifest->warnings)
                std::cerr << "warning: " << warning << "\n";
        auto migration = migrate::diff_manifests(old_manifest, new_manifest);
        print_category("deleted", migration.deleted);
        print_category("untracked", migration.untracked);
        print_category("modified", migration.modified);
        print_category("unchanged", migration.unchanged);
    });

    std::string cl_old, cl_new, resolved_file;
    bool reviewed = false;
    auto* mchecklist =
        migrate_cmd->add_subcommand("checklist", "Five completion conditions for a migration");
    mchecklist->add_option("--old", cl_old, "old directory or saved manifest")->required();
    mchecklist->add_option("--new", cl_new, "new directory or saved manifest")->required();
    mchecklist->add_option("--resolved", resolved_file,
                           "file with one \"<action> TAB <path>\" line per handled path;"
                           " actions: moved, removed, added, merged");
    mchecklist->add_flag("--reviewed", reviewed, "count the overall review as done");
    mchecklist->callback([&]() {
        auto migration = migrate::diff_manifests(load_side(cl_old), load_side(cl_new));
        std::map<std::string, migrate::Action> resolved_actions;
        if (!resolved_file.empty()) {
            std::size_t lineno = 0;
            for (const auto& line : read_lines(resolved_file)) {
                ++lineno;
                if (trim(line).empty() || line[0] == '#')
                    continue;
                auto tab = line.find('\t');
                if (tab == std::string::npos)
                    throw ValidationFailed(resolved_file + ":" + std::to_string(lineno) +
                                           ": expected \"<action> TAB <path>\"");
                auto action = migrate::parse_action(trim(line.substr(0, tab)));
                resolved_actions[trim(line.substr(tab + 1))] = action;
            }
        }
        auto checklist = migrate::checklist(migration, resolved_actions, reviewed);
        for (const auto& item : checklist.items)
            std::cout << (item.satisfied ? "[x] " : "[ ] ") << item.description << "\n";
        std::cout << "complete: " << (checklist.complete() ? "yes" : "no") << "\n";
    });

    std::string copy_src, copy_dst;
    auto* mcopy = migrate_cmd->add_subcommand("copy", "Copy a file unless the destination exists");
    mcopy->add_option("src", copy_src, "source file")->required();
    mcopy->add_option("dst", copy_dst, "destination file")->required();
    mcopy->callback([&]() {
        auto outcome = migrate::copy_no_clobber(copy_src, copy_dst);
        if (outcome.copied) {
            std::cout << "copied " << copy_src << " -> " << copy_dst << "\n";
        } else {
            std::cout << "skipped (exists): " << copy_dst << "\n";
            std::cout << "src " << digest::algorithm() << ": " << outcome.src_digest << "\n";
            std::cout << "dst " << digest::algorithm() << ": " << outcome.dst_digest << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "pakforge: " << e.what() << "\n" << k_synopsis;
        return 64;
    } catch (const Error& e) {
        std::cerr << "pakforge: " << e.what() << "\n";
        return classify(e);
    }
    return exit_code;
}
