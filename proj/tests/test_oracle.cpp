#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <sstream>

#include "tritsynth/oracle.hpp"

#include "json.hpp"

using namespace tritsynth;

TEST_CASE("layer zero is the projective Clifford group") {
    const GroupAtlas atlas = bfs_enumerate(0);
    REQUIRE(atlas.complete);
    REQUIRE(atlas.layer_sizes.size() == 1);
    CHECK(atlas.layer_sizes[0] == 216);
    CHECK(atlas.entries.size() == 216);
    for (const auto& [key, rec] : atlas.entries) {
        CHECK(rec.min_t_count == 0);
        CHECK((rec.denom_exp == 0 || rec.denom_exp == 3));
        CHECK(rec.h_count == (rec.denom_exp == 0 ? 0u : 1u));
    }
}

namespace {

const GroupAtlas& depth_two_atlas() {
    static const GroupAtlas atlas = bfs_enumerate(2);
    return atlas;
}

} // namespace

TEST_CASE("first two T layers") {
    const GroupAtlas& atlas = depth_two_atlas();
    REQUIRE(atlas.complete);
    REQUIRE(atlas.layer_sizes.size() == 3);
    CHECK(atlas.layer_sizes[0] == 216);
    CHECK(atlas.layer_sizes[1] == 1728);
    CHECK(atlas.layer_sizes[2] == 10368);

    // T-count 1 splits as: T^a p (k = 0), T^a H' p and H' T^a p (k = 3),
    // and H' T^a H' p (k = 4)
    std::array<std::size_t, 5> by_k{};
    for (const auto& [key, rec] : atlas.entries) {
        if (rec.min_t_count != 1) continue;
        REQUIRE(rec.denom_exp <= 4);
        ++by_k[rec.denom_exp];
    }
    CHECK(by_k[0] == 108);
    CHECK(by_k[1] == 0);
    CHECK(by_k[2] == 0);
    CHECK(by_k[3] == 648);
    CHECK(by_k[4] == 972);
}

TEST_CASE("witnesses reproduce their keys and layers are deterministic") {
    const GroupAtlas a = bfs_enumerate(1);
    const GroupAtlas b = bfs_enumerate(1);
    REQUIRE(a.entries.size() == b.entries.size());
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    for (; ia != a.entries.end(); ++ia, ++ib) {
        CHECK(ia->first == ib->first);
        CHECK(ia->second.witness == ib->second.witness);
    }
    for (const auto& [key, rec] : a.entries)
        CHECK(canonical_key(string_to_matrix(parse_gate_string(rec.witness))) == key);
}

TEST_CASE("uniqueness and denominator-law checks are clean at depth two") {
    const GroupAtlas& atlas = depth_two_atlas();
    const CheckReport uniq = check_uniqueness(atlas);
    CHECK(uniq.checked == atlas.entries.size());
    for (const auto& v : uniq.violations) FAIL_CHECK(v);
    const CheckReport thm = check_denom_law(atlas);
    CHECK(thm.checked == atlas.entries.size());
    for (const auto& v : thm.violations) FAIL_CHECK(v);
}

TEST_CASE("element budget marks the atlas incomplete") {
    const GroupAtlas atlas = bfs_enumerate(3, 500);
    CHECK(!atlas.complete);
    CHECK(atlas.entries.size() >= 500);
}

TEST_CASE("jsonl export") {
    const GroupAtlas atlas = bfs_enumerate(0);
    std::istringstream lines(atlas_to_jsonl(atlas));
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("min_t_count"));
        CHECK(j.contains("witness"));
        CHECK(j.contains("h_count"));
        CHECK(j.contains("denom_exp"));
        ++count;
    }
    CHECK(count == 216);
}
