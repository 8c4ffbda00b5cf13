#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lnd/io.hpp"

using lnd::Int;
using lnd::json;
using lnd::ZpRing;
using lnd::ZRing;

TEST_CASE("scalar serialization across bases") {
    const ZRing z;
    CHECK(lnd::scalar_to_json(z, Int("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK(lnd::scalar_from_json(z, json("-42")) == Int(-42));
    CHECK(lnd::scalar_from_json(z, json(-42)) == Int(-42));

    const lnd::QRing q;
    CHECK(lnd::scalar_to_json(q, lnd::rat_from_string("3/6")) == "1/2");
    CHECK(lnd::scalar_from_json(q, json("4/6")) == lnd::rat_from_string("2/3"));

    const ZpRing f5(5);
    CHECK(lnd::scalar_from_json(f5, json("-1")) == 4);
    CHECK_THROWS_AS(lnd::scalar_from_json(z, json(1.5)), lnd::ParseError);
}

TEST_CASE("base descriptors") {
    CHECK(lnd::base_from_json(json("Z")) == lnd::BaseDesc::z());
    CHECK(lnd::base_from_json(json{{"Zmod", 7}}) == lnd::BaseDesc::zp(7));
    CHECK(lnd::BaseDesc::parse("Zmod:3") == lnd::BaseDesc::zp(3));
    CHECK_THROWS_AS(lnd::base_from_json(json("F4")), lnd::ParseError);
    CHECK_THROWS(lnd::with_base(lnd::BaseDesc::zp(4), [](auto) {}));  // 4 is not prime
}

TEST_CASE("ring documents round trip") {
    const auto a = lnd::truncated_power_ring(ZRing{}, 3);
    const auto doc = lnd::ring_to_json(a);
    const auto b = lnd::ring_from_json(ZRing{}, doc);
    CHECK(a == b);
    CHECK(lnd::canonical_dump(doc) == lnd::canonical_dump(lnd::ring_to_json(b)));

    const auto f2 = lnd::dual_numbers(ZpRing(2));
    CHECK(f2 == lnd::ring_from_json(ZpRing(2), lnd::ring_to_json(f2)));
}

TEST_CASE("action documents round trip byte-stably") {
    auto [ring, table] = lnd::canonical_instance(2);
    const auto doc = lnd::action_to_json(table);
    const auto back = lnd::action_from_json(ZRing{}, doc, ".");
    CHECK(table == back);
    CHECK(lnd::canonical_dump(doc) == lnd::canonical_dump(lnd::action_to_json(back)));
}

TEST_CASE("action document errors are typed") {
    auto [ring, table] = lnd::canonical_instance(1);
    auto doc = lnd::action_to_json(table);

    auto wrong_rank = doc;
    wrong_rank["action"][1]["matrix"] = json::array({json::array({"1", "0"})});
    CHECK_THROWS_AS((void)lnd::action_from_json(ZRing{}, wrong_rank, "."), lnd::MismatchError);

    auto overflow = doc;
    overflow["action"][1]["alpha"] = json::array({0, 0, 0, 1});  // degree 4 > bound 1
    CHECK_THROWS_AS((void)lnd::action_from_json(ZRing{}, overflow, "."), lnd::BoundError);

    auto malformed = doc;
    malformed.erase("ring");
    CHECK_THROWS_AS((void)lnd::action_from_json(ZRing{}, malformed, "."), lnd::ParseError);
}

TEST_CASE("loading fills omitted entries with zero") {
    const auto t = lnd::trivial_instance(lnd::dual_numbers(ZRing{}), 2);
    auto doc = lnd::action_to_json(t);
    json kept = json::array();
    for (const auto& e : doc["action"])
        if (lnd::seq_from_json(e["alpha"]).is_zero()) kept.push_back(e);
    doc["action"] = kept;
    const auto back = lnd::action_from_json(ZRing{}, doc, ".");
    CHECK(back == t);
}

TEST_CASE("deformation and automorphism documents round trip") {
    auto [ring, table] = lnd::canonical_instance(2);
    const auto s = lnd::StructureTable::build(2);
    lnd::Rng rng(9);
    const auto d = lnd::seeded_deformation(table, s, 2, rng);
    const auto doc = lnd::deformation_to_json(d);
    const auto back = lnd::deformation_from_json(ZRing{}, doc, ".");
    CHECK(back.order == d.order);
    for (int i = 1; i <= d.order; ++i)
        CHECK(back.coeffs[static_cast<size_t>(i - 1)].equal(d.coeffs[static_cast<size_t>(i - 1)]));
    CHECK(lnd::canonical_dump(doc) == lnd::canonical_dump(lnd::deformation_to_json(back)));

    const auto p = lnd::seeded_automorphism(ring, 2, rng);
    const auto pdoc = lnd::automorphism_to_json(p);
    const auto pback = lnd::automorphism_from_json(ZRing{}, pdoc, ".");
    CHECK(pback.order == p.order);
    for (int i = 1; i <= p.order; ++i) CHECK(pback.coeff(i) == p.coeff(i));
}

TEST_CASE("structure tables round trip") {
    const auto t = lnd::StructureTable::build(3);
    const auto doc = lnd::structure_table_to_json(t);
    const auto back = lnd::structure_table_from_json(doc);
    CHECK(back.bound() == 3);
    for (const auto& [pair, gammas] : t.entries()) {
        const auto& b = back.constants(pair.first, pair.second);
        for (const auto& [gamma, v] : gammas) {
            auto it = b.find(gamma);
            if (sgn(v) == 0) CHECK((it == b.end() || sgn(it->second) == 0));
            else {
                REQUIRE(it != b.end());
                CHECK(it->second == v);
            }
        }
    }
}

TEST_CASE("file references resolve relative to the referencing document") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "lnd_io_test";
    fs::create_directories(dir);
    const auto ring = lnd::dual_numbers(ZRing{});
    lnd::save_json_file(dir / "ring.json", lnd::ring_to_json(ring));

    auto t = lnd::trivial_instance(ring, 1);
    auto doc = lnd::action_to_json(t);
    doc["ring"] = json{{"file", "ring.json"}};
    lnd::save_json_file(dir / "action.json", doc);

    const auto loaded = lnd::load_json_file(dir / "action.json");
    const auto back = lnd::action_from_json(ZRing{}, loaded, dir);
    CHECK(back == t);
    CHECK(lnd::peek_base(loaded, dir) == lnd::BaseDesc::z());

    CHECK_THROWS_AS(lnd::load_json_file(dir / "missing.json"), lnd::IoError);
    fs::remove_all(dir);
}
