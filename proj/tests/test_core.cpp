#include <doctest.h>

#include <algorithm>

#include "mlpa/core.hpp"
#include "mlpa/search.hpp"

using mlpa::Partition;
using mlpa::SpacingOrder;

TEST_CASE("positions of the smallest three-level array") {
    auto positions = mlpa::build_positions(Partition{{2, 3, 5}}, SpacingOrder{{5, 2, 3}});
    CHECK(positions == std::vector<int>{0, 2, 3, 4, 5, 6, 9, 12});

    positions = mlpa::build_positions(Partition{{2, 3, 5}}, SpacingOrder{{3, 5, 2}});
    CHECK(positions == std::vector<int>{0, 2, 3, 4, 5, 6, 8, 10});
}

TEST_CASE("positions of the smallest two-level array") {
    auto positions = mlpa::build_positions(Partition{{2, 3}}, SpacingOrder{{3, 2}});
    CHECK(positions == std::vector<int>{0, 2, 3, 4});
}

TEST_CASE("14-element four-level array") {
    auto positions = mlpa::build_positions(Partition{{2, 3, 5, 7}}, SpacingOrder{{7, 2, 3, 5}});
    CHECK(positions.size() == 14);
    CHECK(positions ==
          std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 20, 25, 30});
}

TEST_CASE("total elements") {
    CHECK(mlpa::total_elements(Partition{{2, 3, 5}}) == 8);
    CHECK(mlpa::total_elements(Partition{{2, 3, 5, 7}}) == 14);
    CHECK(mlpa::total_elements(Partition{{2, 3}}) == 4);
    CHECK(mlpa::total_elements(Partition{{2, 3, 5, 7, 11}}) == 24);
    CHECK(mlpa::total_elements(Partition{{2, 3, 5, 7, 11, 13}}) == 36);
    CHECK_THROWS_AS(mlpa::total_elements(Partition{{2, 4}}), mlpa::ConfigError);
}

TEST_CASE("aperture") {
    CHECK(mlpa::aperture(Partition{{2, 3, 5}}, SpacingOrder{{5, 2, 3}}) == 12);
    CHECK(mlpa::aperture(Partition{{2, 3}}, SpacingOrder{{3, 2}}) == 4);
    CHECK(mlpa::aperture(Partition{{5, 9, 11}}, SpacingOrder{{11, 5, 9}}) == 99 - 9);
}

TEST_CASE("two-term aperture can fall short of the full maximum") {
    Partition partition{{2, 3, 5, 7}};
    SpacingOrder spacing{{5, 7, 3, 2}};
    CHECK(mlpa::aperture(partition, spacing) == 14);
    CHECK(mlpa::aperture_last_two(partition, spacing) == 12);
}

TEST_CASE("validate_partition catches each invariant") {
    CHECK(mlpa::validate_partition(Partition{{2, 3, 5}}).empty());
    CHECK(!mlpa::validate_partition(Partition{{2}}).empty());

    auto violations = mlpa::validate_partition(Partition{{2, 4, 5}});
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "gcd(2,4)=2");

    CHECK(!mlpa::validate_partition(Partition{{1, 2, 3}}).empty());
    CHECK(!mlpa::validate_partition(Partition{{3, 2, 5}}).empty());
    CHECK(!mlpa::validate_partition(Partition{{2, 3, 3}}).empty());
}

TEST_CASE("validate_config catches spacing problems") {
    Partition partition{{2, 3, 5}};
    CHECK(mlpa::validate_config(partition, SpacingOrder{{5, 2, 3}}).empty());

    auto identity = mlpa::validate_config(partition, SpacingOrder{{2, 3, 5}});
    CHECK(identity.size() == 3);  // every position is a fixed point

    CHECK(!mlpa::validate_config(partition, SpacingOrder{{5, 2}}).empty());
    CHECK(!mlpa::validate_config(partition, SpacingOrder{{5, 2, 7}}).empty());
}

TEST_CASE("validate_config reports coinciding subarrays") {
    // 2*3 = 3*2 = 6 collides, so only 13 of 14 positions are distinct
    auto violations =
        mlpa::validate_config(Partition{{2, 3, 5, 7}}, SpacingOrder{{5, 7, 2, 3}});
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("coincide") != std::string::npos);

    CHECK_THROWS_AS(mlpa::make_config(Partition{{2, 3, 5, 7}}, SpacingOrder{{5, 7, 2, 3}}),
                    mlpa::ConfigError);
}

TEST_CASE("make_config fills the derived fields") {
    auto config = mlpa::make_config(Partition{{2, 3, 5}}, SpacingOrder{{5, 2, 3}});
    CHECK(config.total_elements == 8);
    CHECK(config.aperture == 12);
    CHECK(config.positions.size() == 8);
    CHECK(config.positions.front() == 0);
    CHECK(config.positions.back() == config.aperture);
}

TEST_CASE("ConfigError carries the violation list") {
    try {
        mlpa::make_config(Partition{{2, 4}}, SpacingOrder{{4, 2}});
        FAIL("expected ConfigError");
    } catch (const mlpa::ConfigError& e) {
        REQUIRE(e.violations().size() == 1);
        CHECK(e.violations()[0] == "gcd(2,4)=2");
    }
}

TEST_CASE("position set properties over the full enumerated space") {
    for (int levels = 2; levels <= 4; ++levels) {
        for (int n = 4; n <= 30; ++n) {
            for (const auto& partition : mlpa::enumerate_coprime_partitions(n, levels)) {
                for (const auto& spacing : mlpa::enumerate_spacing_orders(partition)) {
                    auto positions = mlpa::build_positions(partition, spacing);
                    CHECK(positions.front() == 0);
                    CHECK(std::is_sorted(positions.begin(), positions.end()));
                    CHECK(positions.back() <= mlpa::aperture(partition, spacing));

                    // raw expansion repeats the origin exactly L - 1 times
                    std::size_t raw = 0;
                    for (int c : partition.counts) raw += static_cast<std::size_t>(c);
                    std::size_t duplicates = raw - positions.size();
                    if (mlpa::validate_config(partition, spacing).empty()) {
                        CHECK(duplicates == static_cast<std::size_t>(levels - 1));
                        CHECK(static_cast<int>(positions.size()) ==
                              mlpa::total_elements(partition));
                    } else {
                        CHECK(duplicates > static_cast<std::size_t>(levels - 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("sorting any emitted spacing reproduces the counts") {
    for (int n = 8; n <= 24; ++n) {
        for (const auto& partition : mlpa::enumerate_coprime_partitions(n, 3)) {
            for (const auto& spacing : mlpa::enumerate_spacing_orders(partition)) {
                auto sorted = spacing.spacings;
                std::sort(sorted.begin(), sorted.end());
                CHECK(sorted == partition.counts);
            }
        }
    }
}
