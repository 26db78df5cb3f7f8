#include "onto/config.hpp"

#include "onto/error.hpp"

#include <doctest.h>

#include <fstream>

using namespace onto;

namespace {

std::filesystem::path write_config(const char* body) {
    auto dir = std::filesystem::temp_directory_path() / "onto_config_test";
    std::filesystem::create_directories(dir);
    auto file = dir / "onto.toml";
    std::ofstream out(file);
    out << body;
    return file;
}

} // namespace

TEST_CASE("config file sections merge over defaults") {
    auto file = write_config(
        "# pipeline settings\n"
        "[paths]\n"
        "wsdl_dir = \"corpus/wsdl\"\n"
        "context_dir = 'corpus/ctx'\n"
        "\n"
        "[tfidf]\n"
        "k = 7\n"
        "min_weight = 0.01   # cutoff\n"
        "\n"
        "[context]\n"
        "n = 5\n"
        "j = 6\n"
        "m = 4\n"
        "theta = 0.45\n"
        "\n"
        "[ranking]\n"
        "alpha = 0.6\n"
        "beta = 0.2\n"
        "gamma = 0.2\n"
        "top_k = 3\n"
        "\n"
        "[flags]\n"
        "stemming = true\n"
        "stopwords_replace = false\n");
    Config config;
    load_config_file(config, file);
    CHECK(config.wsdl_dir == "corpus/wsdl");
    CHECK(config.context_dir == "corpus/ctx");
    CHECK(config.output_dir == "out"); // untouched default
    CHECK(config.tfidf_k == 7);
    CHECK(config.tfidf_min_weight == 0.01);
    CHECK(config.context.results == 5);
    CHECK(config.context.result_descriptors == 6);
    CHECK(config.context.context_descriptors == 4);
    CHECK(config.context.theta == 0.45);
    CHECK(config.weights.alpha == 0.6);
    CHECK(config.top_k == 3);
    CHECK(config.stemming);
    CHECK_FALSE(config.stopwords_replace);
    config.validate();
}

TEST_CASE("config errors name file, line and key") {
    Config config;

    auto unknown = write_config("[tfidf]\nbogus = 1\n");
    try {
        load_config_file(config, unknown);
        FAIL("expected Config error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Config);
        CHECK(std::string(e.what()).find("tfidf.bogus") != std::string::npos);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    auto bad_int = write_config("[tfidf]\nk = banana\n");
    CHECK_THROWS_AS(load_config_file(config, bad_int), Error);

    auto bad_line = write_config("just words\n");
    CHECK_THROWS_AS(load_config_file(config, bad_line), Error);

    CHECK_THROWS_AS(load_config_file(config, "/nonexistent/onto.toml"), Error);
}

TEST_CASE("validate rejects out-of-range parameters") {
    Config config;
    config.validate(); // defaults pass

    Config bad_k = config;
    bad_k.tfidf_k = 0;
    CHECK_THROWS_AS(bad_k.validate(), Error);

    Config bad_theta = config;
    bad_theta.context.theta = 1.5;
    CHECK_THROWS_AS(bad_theta.validate(), Error);

    Config bad_weights = config;
    bad_weights.weights = {0, 0, 0};
    CHECK_THROWS_AS(bad_weights.validate(), Error);

    Config bad_order = config;
    bad_order.order = "sideways";
    CHECK_THROWS_AS(bad_order.validate(), Error);

    Config shuffle = config;
    shuffle.order = "shuffle:42";
    shuffle.validate();
}
