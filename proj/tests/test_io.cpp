#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include "helpers.hpp"
#include "picod/io.hpp"

using namespace picod;

TEST_SUITE_BEGIN("io");

TEST_CASE("instance round-trip and validation errors") {
    const auto ex2 = named_instance("ex2");
    const auto back = io::instance_from_json(io::to_json(ex2));
    CHECK(back.message_count() == ex2.message_count());
    CHECK(back.request_sets() == ex2.request_sets());

    CHECK_THROWS_WITH_AS(io::instance_from_json(R"({"m": 3, "edges": [[0], []]})"),
                         doctest::Contains("empty edge at index 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(io::instance_from_json(R"({"m": 3, "edges": [[0, 3]]})"),
                         doctest::Contains("out of range"), std::runtime_error);
    CHECK_THROWS_WITH_AS(io::instance_from_json("{nope"), doctest::Contains("malformed JSON"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(io::instance_from_json(R"({"edges": []})"), doctest::Contains("\"m\""),
                         std::runtime_error);
}

TEST_CASE("instance file round-trip") {
    const auto path = std::filesystem::temp_directory_path() / "picod_io_test_instance.json";
    const auto pentagon = named_instance("pentagon");
    io::save_instance(pentagon, path);
    const auto back = io::load_instance(path);
    CHECK(back.request_sets() == pentagon.request_sets());
    std::filesystem::remove(path);

    CHECK_THROWS_AS(io::load_instance("/nonexistent/picod.json"), std::runtime_error);
}

TEST_CASE("coloring and collection round-trips") {
    const auto c = testing::pentagon_twofold();
    const auto back = io::coloring_from_json(io::to_json(c));
    CHECK(back.fold() == 2);
    CHECK(back.palette_size() == 5);
    CHECK(back.assignment() == c.assignment());

    CHECK_THROWS_AS(io::coloring_from_json(R"({"k": 2, "L": 1, "assign": [[0, 1]]})"),
                    std::runtime_error);

    const auto col = binary_collection(4);
    const auto col_back = io::collection_from_json(io::to_json(col));
    CHECK(col_back.member_count() == 2);
    CHECK(col_back.total_colors() == 4);
    for (int p = 0; p < 2; ++p)
        CHECK(col_back.member(p).assignment() == col.member(p).assignment());

    const auto empty = io::collection_from_json(R"({"k": 2, "colorings": []})");
    CHECK(empty.member_count() == 0);
    CHECK(empty.fold() == 2);
}

TEST_CASE("selection round-trip") {
    const EssentialSelection sel{{{0, 2}, {}, {1}}};
    const auto back = io::selection_from_json(io::to_json(sel));
    CHECK(back.essential == sel.essential);
}

TEST_CASE("matrix round-trip and shape errors") {
    const auto g = indicator_matrix(testing::ex2_coloring());
    const auto back = io::matrix_from_json(io::to_json(g));
    CHECK(back == g);

    CHECK_THROWS_WITH_AS(io::matrix_from_json(R"({"q": 2, "k": 1, "rows": 2, "entries": [[0, 1]]})"),
                         doctest::Contains("rows"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        io::matrix_from_json(R"({"q": 2, "k": 1, "rows": 1, "entries": [[0, 2]]})"),
        doctest::Contains("outside"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        io::matrix_from_json(R"({"q": 4, "k": 1, "rows": 1, "entries": [[0, 1]]})"),
        doctest::Contains("prime"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        io::matrix_from_json(R"({"q": 2, "k": 3, "rows": 1, "entries": [[0, 1]]})"),
        doctest::Contains("\"k\""), std::runtime_error);
}

TEST_CASE("chain reports serialize optional fields as null") {
    ChainReport r;
    r.l_star = 2;
    r.chi = 4;
    CHECK(io::to_json(r) ==
          R"({"alpha":null,"chain_ok":null,"chi":4,"delta":null,"l_star":2,"lambda":null})");

    const auto full = certify_chain(complete_two_uniform(4));
    const auto text = io::to_json(full);
    CHECK(text.find("\"chain_ok\":true") != std::string::npos);
    CHECK(text.find("\"delta\":2") != std::string::npos);
}

TEST_SUITE_END();
