#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hurwitz/character.hpp"

using namespace hurwitz;

TEST_CASE("character values on small groups") {
    for (int n = 1; n <= 6; ++n)
        for (auto& mu : partitions_of(n))
            CHECK(character(Partition({n}), mu) == 1);

    CHECK(character(Partition({1, 1, 1}), Partition({3})) == 1);
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("character on the identity class is the dimension") {
    for (int n = 1; n <= 7; ++n) {
        Partition identity(std::vector<int>(n, 1));
        for (auto& lambda : partitions_of(n))
            CHECK(Integer(character(lambda, identity)) == dimension(lambda));
    }
}

TEST_CASE("character tables for n = 1, 2, 3") {
    CHECK(character_table(1).entries() == std::vector<std::vector<long long>>{{1}});
    CHECK(character_table(2).entries() ==
          std::vector<std::vector<long long>>{{1, 1}, {-1, 1}});
    // rows/columns in canonical order (3), (2,1), (1,1,1)
    const auto& t3 = character_table(3);
    CHECK(t3.at(Partition({2, 1}), Partition({3})) == -1);
    CHECK(t3.at(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(t3.at(Partition({2, 1}), Partition({1, 1, 1})) == 2);
}

TEST_CASE("character table cap is a refusal") {
    CHECK_THROWS_AS(character_table(15), CapExceededError);
    CHECK_THROWS_AS(character_table(5, 4), CapExceededError);
}

TEST_CASE("first orthogonality relation") {
    for (int n = 1; n <= 6; ++n) {
        const auto& table = character_table(n);
        for (auto& mu : table.partitions())
            for (auto& nu : table.partitions()) {
                Integer sum = 0;
                for (auto& lambda : table.partitions())
                    sum += Integer(table.at(lambda, mu)) * table.at(lambda, nu);
                CHECK(sum == (mu == nu ? stabilizer_order(mu) : Integer(0)));
            }
    }
}

TEST_CASE("corrupt cache files are recomputed") {
    auto dir = std::filesystem::temp_directory_path() / "hurwitz-cache-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "character-table-4.json");
        out << "{\"version\":1,\"n\":4,\"partitions\":[\"4\"],\"table\":[[7]]}";
    }
    // load_cached_table must reject the truncated file
    CHECK_FALSE(detail::load_cached_table(dir / "character-table-4.json", 4).has_value());
    {
        std::ofstream out(dir / "garbage.json");
        out << "not json";
    }
    CHECK_FALSE(detail::load_cached_table(dir / "garbage.json", 4).has_value());

    // round trip through the store/load pair
    auto table = detail::compute_character_table(4);
    detail::store_cached_table(dir / "character-table-4.json", table);
    auto loaded = detail::load_cached_table(dir / "character-table-4.json", 4);
    REQUIRE(loaded.has_value());
    CHECK(loaded->entries() == table.entries());
    std::filesystem::remove_all(dir);
}
