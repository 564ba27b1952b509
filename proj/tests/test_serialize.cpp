#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tfop/serialize.hpp"

#include <cstdio>

using namespace tfop;

TEST_CASE("vector and matrix JSON round trips are exact") {
    Rng rng(601);
    const CVec v = rng.cvec(7);
    CHECK((vector_from_json(vector_to_json(v)) - v).norm() == 0.0);

    const CMat m = rng.cmat(5, 5);
    CHECK((matrix_from_json(matrix_to_json(m)) - m).norm() == 0.0);

    CHECK_THROWS_AS(matrix_to_json(rng.cmat(3, 4)), std::invalid_argument);
}

TEST_CASE("file round trip preserves every bit") {
    Rng rng(602);
    const CMat m = rng.cmat(6, 6);
    const char* path = "tmp_serialize_matrix.json";
    save_json(path, matrix_to_json(m));
    CHECK((matrix_from_json(load_json(path)) - m).norm() == 0.0);
    std::remove(path);
}

TEST_CASE("mask JSON carries its lattice") {
    Rng rng(603);
    const TFLattice lat(12, 3, 4);
    const CMat mask = rng.cmat(lat.time_shifts(), lat.freq_shifts());
    const auto [back, lat2] = mask_from_json(mask_to_json(mask, lat));
    CHECK(lat2 == lat);
    CHECK((back - mask).norm() == 0.0);
    CHECK_THROWS_AS(mask_to_json(rng.cmat(2, 2), lat), std::invalid_argument);
}

TEST_CASE("malformed payloads are reported") {
    Json j;
    j["n"] = 3;
    j["re"] = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(vector_from_json(j), std::runtime_error);  // missing im
    j["im"] = {1.0, 2.0};
    CHECK_THROWS_AS(vector_from_json(j), std::runtime_error);  // length mismatch
}

TEST_CASE("TST specs load with inline or file-referenced prototypes") {
    Rng rng(604);
    const CMat phi = rng.cmat(6, 6);
    Json j;
    j["n"] = 6;
    j["b1"] = 2;
    j["nu1"] = 3;
    j["alpha"]["offsets"] = {{0, 0}, {1, 2}};
    j["alpha"]["values"]["re"] = {1.0, -0.5};
    j["alpha"]["values"]["im"] = {0.0, 0.25};
    j["phi"] = matrix_to_json(phi);

    const TSTSpec spec = tst_spec_from_json(j, "");
    CHECK(spec.n == 6);
    CHECK(spec.b1 == 2);
    CHECK(spec.nu1 == 3);
    REQUIRE(spec.alpha.size() == 2);
    CHECK(std::get<0>(spec.alpha[1]) == 1);
    CHECK(std::get<1>(spec.alpha[1]) == 2);
    CHECK(std::get<2>(spec.alpha[1]) == Complex{-0.5, 0.25});
    CHECK((spec.phi - phi).norm() == 0.0);

    const char* path = "tmp_serialize_phi.json";
    save_json(path, matrix_to_json(phi));
    j["phi"] = Json{{"file", path}};
    const TSTSpec spec2 = tst_spec_from_json(j, ".");
    CHECK((spec2.phi - phi).norm() == 0.0);
    std::remove(path);
}

TEST_CASE("canonicalize: flushes relative noise, rounds, and is idempotent") {
    Json a;
    a["n"] = 2;
    a["re"] = {1.5, 1e-30};
    a["im"] = {0.12345678901234567, -2.0};

    Json b;
    b["n"] = 2;
    b["re"] = {1.5 * (1.0 + 1e-13), -1e-29};
    b["im"] = {0.12345678901236, -2.0 * (1.0 - 1e-14)};

    canonicalize(a);
    canonicalize(b);
    CHECK(a.dump() == b.dump());
    CHECK(a["re"][1].get<double>() == 0.0);

    Json once = a;
    canonicalize(a);
    CHECK(a.dump() == once.dump());
}

TEST_CASE("canonicalize reaches nested objects") {
    Json j;
    j["outer"]["n"] = 1;
    j["outer"]["re"] = {1.0 + 1e-15};
    j["outer"]["im"] = {0.0};
    j["list"] = Json::array();
    Json item;
    item["n"] = 1;
    item["re"] = {2.0 * (1.0 + 1e-14)};
    item["im"] = {1e-28};
    j["list"].push_back(item);
    canonicalize(j);
    CHECK(j["outer"]["re"][0].get<double>() == 1.0);
    CHECK(j["list"][0]["re"][0].get<double>() == 2.0);
    CHECK(j["list"][0]["im"][0].get<double>() == 0.0);
}
