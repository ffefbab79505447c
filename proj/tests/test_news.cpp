#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pakforge/errors.hpp>
#include <pakforge/news.hpp>

#include "helpers.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace pakforge;
using namespace pakforge::news;

namespace {

const std::string k_bucket_item = "Add ``bucket()`` in ``utils.py`` for cleaning up spills.";

// Counts non-overlapping occurrences of needle in haystack.
std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("canonical sections are the documented sextet in order") {
    const std::vector<std::string> expected = {"Added",   "Changed", "Deprecated",
                                               "Removed", "Fixed",   "Security"};
    CHECK(canonical_sections() == expected);
    for (const auto& s : expected)
        CHECK(is_canonical_section(s));
    CHECK_FALSE(is_canonical_section("Exploded"));
    CHECK_FALSE(is_canonical_section("added"));
}

TEST_CASE("fragment template ships every section with a placeholder") {
    auto tpl = fragment_template();
    for (const auto& section : canonical_sections())
        CHECK(tpl.find("**" + section + ":**") != std::string::npos);
    CHECK(count_occurrences(tpl, "<news-item>") == 6);
    CHECK(tpl.back() == '\n');
}

TEST_CASE("create_news writes the item under the requested section") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";

    auto path = create_news(news_dir, "bucket", "Added", k_bucket_item);
    CHECK(path == news_dir / "bucket.rst");

    auto content = testutil::read_file(path);
    CHECK(content.find("**Added:**\n\n* " + k_bucket_item) != std::string::npos);
    // other sections keep their placeholders
    CHECK(count_occurrences(content, "<news-item>") == 5);

    auto fragments = collect_news(news_dir);
    REQUIRE(fragments.size() == 1);
    CHECK(fragments[0].source_name == "bucket");
    REQUIRE(fragments[0].sections.count("Added") == 1);
    CHECK(fragments[0].sections.at("Added") == std::vector<std::string>{k_bucket_item});
}

TEST_CASE("create_news rejects bad sections, names, and collisions") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";

    CHECK_THROWS_AS(create_news(news_dir, "x", "Exploded", "boom"), InvalidSection);
    CHECK_THROWS_AS(create_news(news_dir, "TEMPLATE", "Added", "x"), InvalidName);
    CHECK_THROWS_AS(create_news(news_dir, "", "Added", "x"), InvalidName);
    CHECK_THROWS_AS(create_news(news_dir, "a/b", "Added", "x"), InvalidName);

    create_news(news_dir, "bucket", "Added", k_bucket_item);
    CHECK_THROWS_AS(create_news(news_dir, "bucket", "Fixed", "again"), AlreadyExists);
}

TEST_CASE("collect_news skips the template and orders fragments by filename") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    testutil::write_file(news_dir / "TEMPLATE.rst", fragment_template());

    CHECK(collect_news(news_dir).empty());

    create_news(news_dir, "b", "Added", "second item");
    create_news(news_dir, "a", "Added", "first item");

    // oracle: the expected order is the filename sort, computed independently
    std::vector<std::string> stems = {"b", "a"};
    std::sort(stems.begin(), stems.end());

    auto fragments = collect_news(news_dir);
    REQUIRE(fragments.size() == 2);
    for (std::size_t i = 0; i < stems.size(); ++i)
        CHECK(fragments[i].source_name == stems[i]);
    CHECK(fragments[0].sections.at("Added") == std::vector<std::string>{"first item"});
}

TEST_CASE("collect_news reports the offending file and line") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    testutil::write_file(news_dir / "broken.rst", "**Added:**\n\nnot a bullet line\n");

    try {
        collect_news(news_dir);
        FAIL("expected FragmentParseError");
    } catch (const FragmentParseError& e) {
        CHECK(std::string(e.what()).find("broken.rst") != std::string::npos);
        CHECK(e.line() == 3);
    }

    // an item outside any section is also malformed
    testutil::write_file(news_dir / "broken.rst", "* floating item\n");
    CHECK_THROWS_AS(collect_news(news_dir), FragmentParseError);
}

TEST_CASE("compiled release block matches the published snippet byte for byte") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    create_news(news_dir, "bucket", "Added", k_bucket_item);
    auto fragments = collect_news(news_dir);

    auto doc = compile_changelog("0.1.0", fragments, ChangelogDocument{});
    REQUIRE(doc.releases.size() == 1);
    CHECK(doc.releases[0].version == "0.1.0");

    const std::string expected_prefix =
        "0.1.0\n"
        "=====\n"
        "\n"
        "**Added: **\n"
        "\n"
        " * " + k_bucket_item + "\n";
    auto text = doc.format();
    CHECK(text.substr(0, expected_prefix.size()) == expected_prefix);

    auto block = render_release_block("0.1.0", fragments);
    CHECK(block.substr(0, expected_prefix.size()) == expected_prefix);
}

TEST_CASE("a release without fragments records no significant changes") {
    ChangelogDocument existing;
    existing.releases.push_back({"0.1.0", {{"Added", {k_bucket_item}}}});

    auto doc = compile_changelog("0.2.0", {}, existing);
    REQUIRE(doc.releases.size() == 2);
    CHECK(doc.releases[0].version == "0.2.0");
    CHECK(doc.releases[0].sections.empty());
    CHECK(doc.format().find("0.2.0\n=====\n\nNo significant changes.\n") != std::string::npos);
}

TEST_CASE("two fragments merge under one header in filename order") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    create_news(news_dir, "alpha", "Added", "alpha item");
    create_news(news_dir, "beta", "Added", "beta item");
    auto fragments = collect_news(news_dir);

    // oracle: manual concatenation in sorted-filename order
    const std::string expected_block =
        "0.1.0\n"
        "=====\n"
        "\n"
        "**Added: **\n"
        "\n"
        " * alpha item\n"
        " * beta item\n";

    auto block = render_release_block("0.1.0", fragments);
    CHECK(block == expected_block);
    CHECK(count_occurrences(block, "**Added: **") == 1);
}

TEST_CASE("compiling an already-heading version is refused") {
    auto doc = compile_changelog("0.1.0", {}, ChangelogDocument{});
    CHECK_THROWS_AS(compile_changelog("0.1.0", {}, doc), DuplicateVersion);
    // a different version is fine, and the old head stays second
    auto next = compile_changelog("0.2.0", {}, doc);
    REQUIRE(next.releases.size() == 2);
    CHECK(next.releases[0].version == "0.2.0");
    CHECK(next.releases[1].version == "0.1.0");
}

TEST_CASE("changelog documents round-trip through parse and format") {
    ChangelogDocument doc;
    doc.preamble = "=============\nRelease notes\n=============\n";
    doc.releases.push_back({"0.2.0", {{"Added", {"new thing"}}, {"Fixed", {"old bug"}}}});
    doc.releases.push_back({"0.1.0", {{"Added", {k_bucket_item}}}});

    auto text = doc.format();
    auto parsed = ChangelogDocument::parse(text);
    CHECK(parsed.preamble == doc.preamble);
    REQUIRE(parsed.releases.size() == 2);
    CHECK(parsed.releases[0].version == "0.2.0");
    CHECK(parsed.releases[0].sections == doc.releases[0].sections);
    CHECK(parsed.releases[1].sections == doc.releases[1].sections);
    CHECK(parsed.format() == text);
}

TEST_CASE("property: every fragment item appears exactly once after compile") {
    testutil::Rng rng(21);
    const auto& sections = canonical_sections();
    for (int trial = 0; trial < 50; ++trial) {
        testutil::TempDir dir;
        auto news_dir = dir / "news";
        testutil::write_file(news_dir / "TEMPLATE.rst", fragment_template());

        std::vector<std::string> items;
        auto fragment_count = rng.below(4);
        for (std::uint64_t f = 0; f < fragment_count; ++f) {
            auto stem = std::string("frag") + char('a' + f);
            auto section = sections[rng.below(sections.size())];
            auto item = "item " + std::to_string(trial) + "-" + std::to_string(f);
            create_news(news_dir, stem, section, item);
            items.push_back(item);
        }

        auto fragments = collect_news(news_dir);
        auto doc = compile_changelog("1.0.0", fragments, ChangelogDocument{});
        auto text = doc.format();
        for (const auto& item : items)
            CHECK(count_occurrences(text, " * " + item + "\n") == 1);
        if (items.empty())
            CHECK(text.find("No significant changes.") != std::string::npos);
    }
}

TEST_CASE("property: section order in output is canonical regardless of input order") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    // filenames chosen so collection order disagrees with section order
    create_news(news_dir, "a", "Security", "lock the door");
    create_news(news_dir, "b", "Added", "front porch");
    create_news(news_dir, "c", "Fixed", "leaky tap");

    auto block = render_release_block("1.0.0", collect_news(news_dir));
    auto added = block.find("**Added: **");
    auto fixed = block.find("**Fixed: **");
    auto security = block.find("**Security: **");
    REQUIRE(added != std::string::npos);
    REQUIRE(fixed != std::string::npos);
    REQUIRE(security != std::string::npos);
    CHECK(added < fixed);
    CHECK(fixed < security);
}

TEST_CASE("news presence check") {
    CHECK(check_news_present({"news/bucket.rst", "src/x.py"}));
    CHECK_FALSE(check_news_present({"news/TEMPLATE.rst"}));
    CHECK_FALSE(check_news_present({}));
    CHECK_FALSE(check_news_present({"src/x.py", "README.rst"}));
    CHECK_FALSE(check_news_present({"news/nested/deep.rst"}));
    CHECK_FALSE(check_news_present({"news/notes.txt"}));
    CHECK(check_news_present({"news/TEMPLATE.rst", "news/bucket.rst"}));
}

TEST_CASE("property: adding a qualifying path never flips pass to fail") {
    testutil::Rng rng(22);
    const std::vector<std::string> pool = {
        "news/bucket.rst", "news/TEMPLATE.rst", "src/x.py", "README.rst",
        "news/extra.rst",  "docs/index.rst",    "news/notes.txt",
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> paths;
        for (const auto& p : pool)
            if (rng.below(2))
                paths.push_back(p);
        bool before = check_news_present(paths);
        paths.push_back("news/qualifying.rst");
        CHECK(check_news_present(paths));
        if (before)
            CHECK(check_news_present(paths));
    }
}

TEST_CASE("clear_news removes fragments but keeps the template") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    testutil::write_file(news_dir / "TEMPLATE.rst", fragment_template());
    create_news(news_dir, "b", "Added", "x");
    create_news(news_dir, "a", "Added", "y");

    auto removed = clear_news(news_dir);
    REQUIRE(removed.size() == 2);
    CHECK(removed[0].filename() == "a.rst");
    CHECK(removed[1].filename() == "b.rst");
    CHECK(testutil::list_files(news_dir) == std::vector<std::string>{"TEMPLATE.rst"});
}

TEST_CASE("compiling does not touch the news directory") {
    testutil::TempDir dir;
    auto news_dir = dir / "news";
    create_news(news_dir, "bucket", "Added", k_bucket_item);
    auto before = testutil::list_files(news_dir);

    auto fragments = collect_news(news_dir);
    compile_changelog("0.1.0", fragments, ChangelogDocument{});
    CHECK(testutil::list_files(news_dir) == before);
}
