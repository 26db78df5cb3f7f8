#include "onto/storage.hpp"

#include "onto/error.hpp"
#include "onto/pipeline.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace onto;

namespace {

const std::filesystem::path kFixtures = FIXTURE_DIR;

BootstrapResult fixture_bootstrap() {
    Config config;
    config.wsdl_dir = (kFixtures / "wsdl").string();
    config.context_dir = (kFixtures / "ctx").string();
    return run_bootstrap(config);
}

std::filesystem::path temp_dir(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

} // namespace

TEST_CASE("ontology save/load round-trips byte-identically") {
    BootstrapResult result = fixture_bootstrap();
    auto dir = temp_dir("onto_storage_rt");
    auto path = dir / "ontology.json";
    save_ontology(result.ontology, path);

    Ontology loaded = load_ontology(path);
    CHECK(ontology_to_json(loaded) == ontology_to_json(result.ontology));
    CHECK(loaded.version == result.ontology.version);
    CHECK(loaded.concepts.size() == result.ontology.concepts.size());
    CHECK(loaded.relations == result.ontology.relations);

    // saving the loaded copy reproduces the same bytes
    auto path2 = dir / "ontology2.json";
    save_ontology(loaded, path2);
    CHECK(slurp(path) == slurp(path2));
    std::filesystem::remove_all(dir);
}

TEST_CASE("registry save/load round-trips and rebuilds stats") {
    BootstrapResult result = fixture_bootstrap();
    result.registry.records.at("cityweather").visits = 3;
    auto dir = temp_dir("onto_storage_reg");
    auto path = dir / "registry.json";
    save_registry(result.registry, path);

    Registry loaded = load_registry(path);
    CHECK(registry_to_json(loaded) == registry_to_json(result.registry));
    CHECK(loaded.records.at("cityweather").visits == 3);
    CHECK(loaded.stats.n_docs == result.registry.stats.n_docs);
    CHECK(loaded.stats.doc_freq == result.registry.stats.doc_freq);
    std::filesystem::remove_all(dir);
}

TEST_CASE("loaders tolerate unknown keys and reject broken files") {
    BootstrapResult result = fixture_bootstrap();
    auto dir = temp_dir("onto_storage_schema");
    auto path = dir / "ontology.json";
    save_ontology(result.ontology, path);

    SUBCASE("unknown top-level key warns but loads") {
        std::string text = ontology_to_json(result.ontology);
        text.insert(text.find('{') + 1, "\n  \"future_extension\": 42,");
        std::vector<std::string> warnings;
        Ontology loaded = ontology_from_json(text, &warnings);
        CHECK(loaded.version == result.ontology.version);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("future_extension") != std::string::npos);
        CHECK(ontology_to_json(loaded) == ontology_to_json(result.ontology));
    }

    SUBCASE("truncated file is a schema error") {
        std::string text = ontology_to_json(result.ontology);
        std::ofstream(path, std::ios::trunc) << text.substr(0, text.size() / 2);
        try {
            (void)load_ontology(path);
            FAIL("expected Schema error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Schema);
        }
    }

    SUBCASE("missing key names the key") {
        try {
            (void)ontology_from_json("{\"concepts\": [], \"relations\": [], "
                                     "\"events\": [], \"quarantine\": []}");
            FAIL("expected Schema error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Schema);
            CHECK(std::string(e.what()).find("version") != std::string::npos);
        }
    }

    SUBCASE("event version beyond ontology version is a mismatch") {
        std::string bad = "{\"concepts\": [], \"relations\": [], \"quarantine\": [], "
                          "\"version\": 1, \"events\": [{\"version\": 5, "
                          "\"service_id\": \"s\", \"kind\": \"DomainChange\", "
                          "\"detail\": \"d\"}]}";
        CHECK_THROWS_AS((void)ontology_from_json(bad), Error);
    }

    SUBCASE("registry weight type errors name the key") {
        try {
            (void)registry_from_json("{\"records\": [], \"weights\": "
                                     "{\"alpha\": \"high\", \"beta\": 0.3, \"gamma\": 0.2}}");
            FAIL("expected Schema error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Schema);
            CHECK(std::string(e.what()).find("alpha") != std::string::npos);
        }
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("write_artifacts emits the three files, byte-stable across runs") {
    Config config;
    config.wsdl_dir = (kFixtures / "wsdl").string();
    config.context_dir = (kFixtures / "ctx").string();

    auto dir_a = temp_dir("onto_artifacts_a");
    auto dir_b = temp_dir("onto_artifacts_b");

    Config config_a = config;
    config_a.output_dir = dir_a.string();
    write_artifacts(run_bootstrap(config_a), config_a);

    Config config_b = config;
    config_b.output_dir = dir_b.string();
    write_artifacts(run_bootstrap(config_b), config_b);

    for (const char* file : {"ontology.json", "registry.json", "report.json"}) {
        CAPTURE(file);
        std::string sa = slurp(dir_a / file);
        CHECK(sa == slurp(dir_b / file));
        CHECK(!sa.empty());
    }
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("atomic_write leaves no temp file behind") {
    auto dir = temp_dir("onto_atomic");
    auto path = dir / "x.json";
    atomic_write(path, "{}\n");
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(dir / "x.json.tmp"));
    atomic_write(path, "{\"a\": 1}\n"); // overwrite in place
    CHECK(slurp(path) == "{\"a\": 1}\n");
    std::filesystem::remove_all(dir);
}
