#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>
#include <toricvan.h>

using nlohmann::json;

namespace {

std::string goldens_dir() {
    if (const char* env = std::getenv("TORICVAN_GOLDENS")) return env;
#ifdef TORICVAN_GOLDENS_DIR
    return TORICVAN_GOLDENS_DIR;
#else
    return "goldens";
#endif
}

json run_ok(const std::string& job) {
    tv_result* res = nullptr;
    int rc = tv_run_job_text(job.c_str(), &res);
    REQUIRE(rc == 0);
    REQUIRE(res != nullptr);
    json out = json::parse(tv_result_json(res));
    tv_result_free(res);
    return out;
}

int run_rc(const std::string& job, std::string* err = nullptr) {
    tv_result* res = nullptr;
    int rc = tv_run_job_text(job.c_str(), &res);
    if (rc == 0) {
        tv_result_free(res);
    } else {
        CHECK(res == nullptr);
        if (err) *err = tv_last_error();
    }
    return rc;
}

}  // namespace

TEST_CASE("successful job returns result JSON") {
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 3}, {"k", 1}}},
        {"construction", {{"hirzebruch", 1}}},
        {"task", "affine_ideal"},
    };
    json out = run_ok(job.dump());
    CHECK(out.contains("generators"));
    CHECK(out["generators"].is_array());
    CHECK_FALSE(out["generators"].empty());
    CHECK(out.contains("timing_ms"));
    CHECK(out["checks"]["soundness"]["violations"] == 0);
}

TEST_CASE("schema errors are status 2") {
    std::string err;
    CHECK(run_rc("{ not json", &err) == 2);
    CHECK_FALSE(err.empty());

    json job = {
        {"schema_version", 1},
        {"q", {{"p", 3}, {"k", 0}}},
        {"construction", {{"hirzebruch", 1}}},
        {"task", "affine_ideal"},
    };
    CHECK(run_rc(job.dump(), &err) == 2);
    CHECK(err.find("job.q.k") != std::string::npos);

    job["q"]["k"] = 1;
    job["task"] = "no_such_task";
    CHECK(run_rc(job.dump()) == 2);

    job["task"] = "affine_ideal";
    job["beta"] = json::array({json::array({1, 1})});  // beta and construction
    CHECK(run_rc(job.dump()) == 2);
}

TEST_CASE("budget exhaustion is status 3") {
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 3}, {"k", 1}}},
        {"construction", {{"hirzebruch", 2}}},
        {"task", "toric_ideal"},
        {"options", {{"pair_budget", 1}}},
    };
    CHECK(run_rc(job.dump()) == 3);
}

TEST_CASE("domain errors are status 4") {
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 3}, {"k", 1}}},
        {"construction", {{"wps", {2, 4}}}},
        {"task", "toric_ideal"},
    };
    std::string err;
    CHECK(run_rc(job.dump(), &err) == 4);
    CHECK(err.find("BadWeights") != std::string::npos);
}

TEST_CASE("golden suite verifies clean") {
    tv_result* res = nullptr;
    int rc = tv_verify_suite(goldens_dir().c_str(), &res);
    REQUIRE(res != nullptr);
    json report = json::parse(tv_result_json(res));
    tv_result_free(res);
    INFO(report.dump(2));
    CHECK(rc == 0);
    CHECK(report["failures"].empty());
    CHECK(report["passed"].get<int>() >= 12);
}

TEST_CASE("tampered golden fails verification") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "toricvan_tampered";
    fs::create_directories(dir);
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 3}, {"k", 1}}},
        {"construction", {{"hirzebruch", 1}}},
        {"task", "toric_ideal"},
        {"expect", {{"generators_ideal", {"x1"}}}},
    };
    std::ofstream(dir / "bad.json") << job.dump(2);

    tv_result* res = nullptr;
    int rc = tv_verify_suite(dir.string().c_str(), &res);
    REQUIRE(res != nullptr);
    json report = json::parse(tv_result_json(res));
    tv_result_free(res);
    CHECK(rc == 1);
    CHECK(report["failures"].size() == 1);
    fs::remove_all(dir);
}

TEST_CASE("results are byte stable apart from timing") {
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 5}, {"k", 1}}},
        {"construction", {{"hirzebruch", 3}}},
        {"task", "toric_ideal"},
    };
    json a = run_ok(job.dump());
    json b = run_ok(job.dump());
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
}

TEST_CASE("code task emits parameters and rank nullity") {
    json job = {
        {"schema_version", 1},
        {"q", {{"p", 5}, {"k", 1}}},
        {"construction", {{"hirzebruch", 3}}},
        {"task", "code"},
        {"alpha", {1, 0}},
        {"region", "minus_vb"},
    };
    json out = run_ok(job.dump());
    CHECK(out["code"]["n"] == 36);
    CHECK(out["code"]["k"] == 2);
    CHECK(out["code"]["delta"] == 30);
    CHECK(out["checks"]["rank_nullity"] == true);
}

TEST_CASE("misc C API surface") {
    CHECK(std::string(tv_version()).find("toricvan") == 0);
    CHECK(std::string(tv_result_json(nullptr)).empty());
    CHECK(tv_last_error() != nullptr);
    tv_result_free(nullptr);

    tv_result* res = nullptr;
    CHECK(tv_run_job_file("/nonexistent/job.json", &res) == 2);
    CHECK(res == nullptr);
}
