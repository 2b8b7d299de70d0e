#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "zetatrace/variety.hpp"

#include <nlohmann/json.hpp>

#ifndef ZT_FIXTURE_DIR
#error "ZT_FIXTURE_DIR must point at the fixture directory"
#endif

using namespace zetatrace;

namespace {

Variety load(const std::string& name) {
    return parse_variety_file(std::string(ZT_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("projective space sizes") {
    CHECK(projective_space_size(Int(3), 1) == 4);
    CHECK(projective_space_size(Int(2), 2) == 7);
    CHECK(projective_space_size(Int(9), 2) == 91);
}

TEST_CASE("empty equation sets count the ambient projective space") {
    const Variety p1 = load("p1_f3.json");
    const Variety p2 = load("p2_f2.json");
    for (unsigned r = 1; r <= 5; ++r) {
        CHECK(Int(count_projective(p1, r)) == projective_space_size(pow_int(Int(3), r), 1));
        CHECK(Int(count_projective(p2, r)) == projective_space_size(pow_int(Int(2), r), 2));
    }
}

TEST_CASE("frozen curve counts") {
    const std::vector<std::uint64_t> e1 = count_series(load("e1_f5.json"), 5).counts;
    CHECK(e1 == std::vector<std::uint64_t>{8, 32, 104, 640, 3208});

    const std::vector<std::uint64_t> e2_7 = count_series(load("e2_f7.json"), 3).counts;
    CHECK(e2_7 == std::vector<std::uint64_t>{12, 48, 324});

    const std::vector<std::uint64_t> e2_13 = count_series(load("e2_f13.json"), 3).counts;
    CHECK(e2_13 == std::vector<std::uint64_t>{12, 192, 2268});

    const std::vector<std::uint64_t> g2 = count_series(load("genus2_f3.json"), 7).counts;
    CHECK(g2 == std::vector<std::uint64_t>{4, 10, 28, 118, 244, 730, 2188});
}

TEST_CASE("counts match the all-tuples oracle") {
    const Variety e1 = load("e1_f5.json");
    for (unsigned r = 1; r <= 3; ++r)
        CHECK(count_projective(e1, r) == oracle::oracle_count_projective(e1, r));

    const Variety e2_7 = load("e2_f7.json");
    for (unsigned r = 1; r <= 2; ++r)
        CHECK(count_projective(e2_7, r) == oracle::oracle_count_projective(e2_7, r));

    const Variety e2_13 = load("e2_f13.json");
    for (unsigned r = 1; r <= 2; ++r)
        CHECK(count_projective(e2_13, r) == oracle::oracle_count_projective(e2_13, r));

    const Variety g2 = load("genus2_f3.json");
    for (unsigned r = 1; r <= 4; ++r)
        CHECK(count_projective(g2, r) == oracle::oracle_count_projective(g2, r));
}

TEST_CASE("both enumeration backends agree") {
    for (const std::string name : {"e1_f5.json", "e2_f7.json", "genus2_f3.json"}) {
        const Variety V = load(name);
        for (unsigned r = 1; r <= 3; ++r) {
            CAPTURE(name);
            CAPTURE(r);
            CHECK(detail::count_with_tables(V, r, 1) == detail::count_generic(V, r));
        }
    }
}

TEST_CASE("worker count never changes the answer") {
    const Variety g2 = load("genus2_f3.json");
    const std::uint64_t base = count_projective(g2, 5, kDefaultBudget, 1);
    CHECK(count_projective(g2, 5, kDefaultBudget, 3) == base);
    CHECK(count_projective(g2, 5, kDefaultBudget, 8) == base);

    const Variety e1 = load("e1_f5.json");
    const CountSeries one = count_series(e1, 4, kDefaultBudget, 1);
    const CountSeries many = count_series(e1, 4, kDefaultBudget, 7);
    CHECK(one.counts == many.counts);
}

TEST_CASE("weil bound holds for the elliptic fixture") {
    const Variety e1 = load("e1_f5.json");
    const CountSeries cs = count_series(e1, 5);
    for (unsigned r = 1; r <= 5; ++r) {
        const Int qr = pow_int(Int(5), r);
        const Int dev = Int(cs.counts[r - 1]) - qr - 1;
        CHECK(dev * dev <= 4 * qr);
    }
}

TEST_CASE("counts obey the Newton recurrence for the curve trace") {
    const Variety e1 = load("e1_f5.json");
    const CountSeries cs = count_series(e1, 5);
    const Int a = 1 + 5 - Int(cs.counts[0]);
    CHECK(a == -2);
    CHECK(oracle::counts_from_trace(a, Int(5), 5) == cs.counts);
}

TEST_CASE("budget is enforced in point evaluations") {
    const Variety e1 = load("e1_f5.json");
    // |P^2(F_5)| = 31 evaluations: budget 30 refuses, 31 suffices.
    CHECK_THROWS_AS(count_projective(e1, 1, 30), EnumerationTooLarge);
    CHECK(count_projective(e1, 1, 31) == 8);
    try {
        count_series(e1, 6, 1000);
        FAIL("expected EnumerationTooLarge");
    } catch (const EnumerationTooLarge& e) {
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("parser validates documents") {
    const auto doc = nlohmann::json::parse(R"({
        "p": 5, "num_vars": 3, "dim": 1, "betti": [1, 2, 1],
        "polys": [[{"exps": [0, 2, 1], "coeff": 1},
                   {"exps": [3, 0, 0], "coeff": -1},
                   {"exps": [1, 0, 2], "coeff": 1}]]
    })");
    const Variety V = parse_variety(doc);
    CHECK(V.p == 5);
    CHECK(V.num_vars == 3);
    CHECK(V.betti_hint == std::vector<unsigned>{1, 2, 1});
    CHECK(count_projective(V, 1) == 8);

    auto bad = doc;
    bad["p"] = 6;
    CHECK_THROWS_AS(parse_variety(bad), CompositeModulus);

    bad = doc;
    bad["betti"] = {1, 2, 1, 1};  // length must be 2*dim+1
    CHECK_THROWS_AS(parse_variety(bad), ParseError);

    bad = doc;
    bad["betti"] = {2, 2, 1};  // must start and end with 1
    CHECK_THROWS_AS(parse_variety(bad), ParseError);

    bad = doc;
    bad["polys"][0][0]["exps"] = {0, 2};  // wrong arity
    CHECK_THROWS_AS(parse_variety(bad), ParseError);

    bad = doc;
    bad["polys"][0][0]["exps"] = {0, 1, 1};  // degree 2 among degree-3 terms
    CHECK_THROWS_AS(parse_variety(bad), NotHomogeneous);

    CHECK_THROWS_AS(parse_variety_file("/nonexistent/path.json"), ParseError);
}
