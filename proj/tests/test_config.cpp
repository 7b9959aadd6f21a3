#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "hhsum/config.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/errors.hpp"
#include "near.hpp"

using namespace hhsum;

TEST_CASE("defaults and validation") {
    const EngineConfig d;
    CHECK(d.precision_digits == 30);
    CHECK(d.oracle_max_terms == 1000000);
    CHECK(d.euler_truncation == 100000);
    CHECK(d.default_tolerance == 1e-8);
    CHECK_NOTHROW(d.validate());
    EngineConfig bad;
    bad.precision_digits = 10;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = EngineConfig{};
    bad.default_tolerance = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("environment and files") {
    setenv("HHSUM_PRECISION", "40", 1);
    CHECK(apply_environment(EngineConfig{}).precision_digits == 40);
    unsetenv("HHSUM_PRECISION");
    CHECK(apply_environment(EngineConfig{}).precision_digits == 30);

    const char* kv = "hhsum_test_cfg.txt";
    {
        std::ofstream f(kv);
        f << "# comment\nprecision_digits = 35\ndefault_tolerance=1e-9\n";
    }
    const EngineConfig a = load_config_file(kv, EngineConfig{});
    CHECK(a.precision_digits == 35);
    CHECK(a.default_tolerance == 1e-9);
    const char* js = "hhsum_test_cfg.json";
    {
        std::ofstream f(js);
        f << R"({"oracle_max_terms": 5000, "exact_terms": 16})";
    }
    const EngineConfig b = load_config_file(js, EngineConfig{});
    CHECK(b.oracle_max_terms == 5000);
    CHECK(b.exact_terms == 16);
    {
        std::ofstream f(kv);
        f << "no_such_key = 1\n";
    }
    CHECK_THROWS(load_config_file(kv, EngineConfig{}));
    std::remove(kv);
    std::remove(js);
}

TEST_CASE("reconfiguring precision refreshes cached constants") {
    const std::uint64_t g0 = config_generation();
    EngineConfig c;
    c.precision_digits = 60;
    configure(c);
    CHECK(config_generation() > g0);
    CHECK(testing_util::gap(zeta(3), "1.202056903159594285399738161511449990764986292340498881792271") < 1e-58);
    configure(EngineConfig{});
    CHECK(zeta(3).err < 1e-30);
}
