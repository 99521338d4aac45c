#include "toricvan.h"

#include <string>

#include "job.hpp"

struct tv_result {
    std::string text;
};

namespace {

thread_local std::string g_last_error = "";

int fail(int code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
int guarded(tv_result** out, Fn&& fn) {
    if (!out) return fail(2, "out pointer is NULL");
    *out = nullptr;
    try {
        nlohmann::json doc = fn();
        *out = new tv_result{doc.dump(2) + "\n"};
        return 0;
    } catch (const toric::Error& e) {
        return fail(static_cast<int>(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
}

}  // namespace

extern "C" {

int tv_run_job_text(const char* json_text, tv_result** out) {
    if (!json_text) return fail(2, "json_text is NULL");
    return guarded(out, [&] {
        nlohmann::json job;
        try {
            job = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw toric::SchemaError(e.what());
        }
        return toric::run_job_json(job);
    });
}

int tv_run_job_file(const char* path, tv_result** out) {
    if (!path) return fail(2, "path is NULL");
    return guarded(out, [&] { return toric::run_job_file(path); });
}

int tv_verify_suite(const char* dir, tv_result** out) {
    if (!dir) return fail(2, "dir is NULL");
    nlohmann::json report;
    int rc = guarded(out, [&] {
        report = toric::verify_suite_dir(dir);
        return report;
    });
    if (rc != 0) return rc;
    if (!report.at("failures").empty()) return fail(1, "golden suite failures");
    return 0;
}

const char* tv_result_json(const tv_result* result) {
    return result ? result->text.c_str() : "";
}

void tv_result_free(tv_result* result) { delete result; }

const char* tv_last_error(void) { return g_last_error.c_str(); }

const char* tv_version(void) { return "toricvan 1.0.0"; }

}  // extern "C"
