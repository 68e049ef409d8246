#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "suzuki.h"

using Json = nlohmann::ordered_json;

namespace {

struct Handle {
    suzuki_algebra* a = nullptr;
    ~Handle() { suzuki_algebra_free(a); }
};

struct Out {
    char* s = nullptr;
    ~Out() { suzuki_string_free(s); }
    Json json() const { return Json::parse(s); }
};

}  // namespace

TEST_CASE("create, query, free") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 2, 1, -1, &h.a) == SUZUKI_OK);
    CHECK(suzuki_algebra_dim(h.a) == 8);
    CHECK(suzuki_algebra_conductor(h.a) == 4);
    CHECK(std::string(suzuki_version()).size() >= 5);
}

TEST_CASE("invalid parameters are rejected with messages") {
    suzuki_algebra* a = nullptr;
    CHECK(suzuki_algebra_create(0, 2, 1, 1, &a) == SUZUKI_ERR_INVALID_ARGUMENT);
    CHECK(a == nullptr);
    CHECK(std::strlen(suzuki_last_error()) > 0);
    CHECK(suzuki_algebra_create(1, 1, 1, 1, &a) == SUZUKI_ERR_INVALID_ARGUMENT);
    CHECK(suzuki_algebra_create(1, 2, 2, 1, &a) == SUZUKI_ERR_INVALID_ARGUMENT);
    CHECK(suzuki_algebra_create(1, 2, 1, 0, &a) == SUZUKI_ERR_INVALID_ARGUMENT);
    CHECK(suzuki_algebra_create(1, 2, 1, 1, nullptr) == SUZUKI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify payload") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 2, 1, 1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_algebra_verify(h.a, &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["ok"] == true);
    CHECK(j["verdicts"]["associativity"]["ok"] == true);
    CHECK(j["verdicts"]["antipode_left"]["ok"] == true);
}

TEST_CASE("export payload carries basis and mult triples") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 2, -1, 1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_algebra_export(h.a, &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["dim"] == 8);
    CHECK(j["basis"].size() == 8);
    CHECK(j["basis"][0] == "x11^1");
    CHECK(j["mult"].size() > 0);
    CHECK(j.contains("checksum"));
}

TEST_CASE("grouplikes and decompose payloads") {
    Handle h;
    REQUIRE(suzuki_algebra_create(2, 3, 1, -1, &h.a) == SUZUKI_OK);
    Out g, d;
    REQUIRE(suzuki_grouplikes(h.a, &g.s) == SUZUKI_OK);
    Json gj = g.json();
    CHECK(gj["ok"] == true);
    CHECK(gj["count"] == 8);
    CHECK(gj["pairwise_distinct"] == true);

    REQUIRE(suzuki_decompose(h.a, &d.s) == SUZUKI_OK);
    Json dj = d.json();
    CHECK(dj["ok"] == true);
    CHECK(dj["dim"] == 24);
    CHECK(dj["span_rank"] == 24);
}

TEST_CASE("aut table for the Kac-Paljutkin case") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 2, 1, -1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_aut_table(h.a, &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["ok"] == true);
    CHECK(j["order"] == 4);
    CHECK(j["closed"] == true);
    CHECK(j["invariants"]["identification"] == "Z2xZ2");
    CHECK(j["discrepancies"].empty());
}

TEST_CASE("aut table reports the closure failure of A(2,2,+,+)") {
    Handle h;
    REQUIRE(suzuki_algebra_create(2, 2, 1, 1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_aut_table(h.a, &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["ok"] == false);
    CHECK(j["closed"] == false);
    bool have_closure_entry = false;
    for (const auto& d : j["discrepancies"])
        if (d["kind"] == "closure_failure") have_closure_entry = true;
    CHECK(have_closure_entry);
}

TEST_CASE("aut verify accepts descriptors and identity") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 3, 1, 1, &h.a) == SUZUKI_OK);
    Out a, b, c;
    REQUIRE(suzuki_aut_verify(h.a, "identity", &a.s) == SUZUKI_OK);
    CHECK(a.json()["ok"] == true);
    REQUIRE(suzuki_aut_verify(h.a, "psi:1:1:-1", &b.s) == SUZUKI_OK);
    CHECK(b.json()["ok"] == true);
    REQUIRE(suzuki_aut_verify(h.a, "psi:1:2:1", &c.s) == SUZUKI_OK);
    CHECK(c.json()["ok"] == false);
    CHECK(c.json().contains("first_failure"));

    char* bad = nullptr;
    CHECK(suzuki_aut_verify(h.a, "psi:1:9:1", &bad) == SUZUKI_ERR_INVALID_ARGUMENT);
    CHECK(suzuki_aut_verify(h.a, "wat", &bad) == SUZUKI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("comodule twist payload") {
    Handle h;
    REQUIRE(suzuki_algebra_create(2, 3, 1, 1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_comodule_twist(h.a, 2, 1, "psi:1:1:1", &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["ok"] == true);
    CHECK(j["transport"]["support_dim_before"] == 4);
    CHECK(j["transport"]["support_dim_after"] == 4);
    CHECK(j["transport"]["supp_equals_psi_inverse_of_supp"] == true);
    CHECK_FALSE(j["transport"]["matched_subcoalgebra"].is_null());

    char* bad = nullptr;
    CHECK(suzuki_comodule_twist(h.a, 0, 1, "identity", &bad) == SUZUKI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("aut search payload matches enumeration on H8") {
    Handle h;
    REQUIRE(suzuki_algebra_create(1, 2, 1, -1, &h.a) == SUZUKI_OK);
    Out out;
    REQUIRE(suzuki_aut_search(h.a, "default", &out.s) == SUZUKI_OK);
    Json j = out.json();
    CHECK(j["ok"] == true);
    CHECK(j["found_distinct"] == 4);
    CHECK(j["classified_distinct"] == 4);
    CHECK(j["set_equal"] == true);

    char* bad = nullptr;
    CHECK(suzuki_aut_search(h.a, "bogus", &bad) == SUZUKI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cached create round trips") {
    namespace fs = std::filesystem;
    std::string dir = (fs::temp_directory_path() / "suzuki_capi_cache_test").string();
    fs::remove_all(dir);

    Handle first;
    REQUIRE(suzuki_algebra_create_cached(1, 3, -1, 1, dir.c_str(), &first.a) == SUZUKI_OK);
    CHECK(fs::exists(dir));
    bool have_file = false;
    for (const auto& e : fs::directory_iterator(dir)) have_file = have_file || e.is_regular_file();
    CHECK(have_file);

    Handle second;  // loads from cache and must agree
    REQUIRE(suzuki_algebra_create_cached(1, 3, -1, 1, dir.c_str(), &second.a) == SUZUKI_OK);
    Out e1, e2;
    REQUIRE(suzuki_algebra_export(first.a, &e1.s) == SUZUKI_OK);
    REQUIRE(suzuki_algebra_export(second.a, &e2.s) == SUZUKI_OK);
    CHECK(std::string(e1.s) == std::string(e2.s));

    // corrupt the cache: loader must fall back to a clean build
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream f(e.path());
        f << "{\"garbage\": true}";
    }
    Handle third;
    REQUIRE(suzuki_algebra_create_cached(1, 3, -1, 1, dir.c_str(), &third.a) == SUZUKI_OK);
    Out e3;
    REQUIRE(suzuki_algebra_export(third.a, &e3.s) == SUZUKI_OK);
    CHECK(std::string(e1.s) == std::string(e3.s));
    fs::remove_all(dir);
}
