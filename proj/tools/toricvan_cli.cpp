// Batch front end over the C API: job files in, canonical JSON out.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricvan.h"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string out_path;
    int64_t budget_pairs = -1;
    int64_t budget_points = -1;
    int64_t seed = -1;
    std::string path;
};

struct JobOpts {
    int64_t p = 0, k = 1;
    std::string beta;  // "1,0,1,2;0,1,0,1"
    int64_t hirzebruch = -1;
    std::vector<int64_t> wps, product, alpha, eps, point;
    std::vector<std::string> B, map_f, map_g;
    int64_t map_s = 0;
    std::string map_domain = "affine";
    std::string region;
    std::vector<std::string> extra_points;  // "1,0,1,0"
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out_path, "write the result JSON to a file");
    cmd->add_option("--budget-pairs", c.budget_pairs, "Groebner pair budget");
    cmd->add_option("--budget-points", c.budget_points, "point enumeration budget");
    cmd->add_option("--seed", c.seed, "seed for sampled verification");
    cmd->add_option("--path", c.path, "ideal path: elimination, cellular, or both")
        ->check(CLI::IsMember({"elimination", "cellular", "both"}));
}

void add_job(CLI::App* cmd, JobOpts& j) {
    cmd->add_option("--p", j.p, "field characteristic")->required();
    cmd->add_option("--k", j.k, "extension degree");
    cmd->add_option("--beta", j.beta, "grading matrix, rows ';'-separated");
    cmd->add_option("--hirzebruch", j.hirzebruch, "Hirzebruch parameter");
    cmd->add_option("--wps", j.wps, "weighted projective space weights")->delimiter(',');
    cmd->add_option("--product", j.product, "projective space dimensions")->delimiter(',');
    cmd->add_option("--B", j.B, "irrelevant ideal monomials");
    cmd->add_option("--alpha", j.alpha, "degree vector")->delimiter(',');
    cmd->add_option("--eps", j.eps, "support (1-based variable indices)")->delimiter(',');
    cmd->add_option("--point", j.point, "point coordinates")->delimiter(',');
    cmd->add_option("--map-s", j.map_s, "number of map parameters");
    cmd->add_option("--map-f", j.map_f, "map numerators");
    cmd->add_option("--map-g", j.map_g, "map denominators");
    cmd->add_option("--map-domain", j.map_domain, "map domain")
        ->check(CLI::IsMember({"affine", "torus"}));
    cmd->add_option("--region", j.region, "point region")
        ->check(CLI::IsMember({"affine", "torus", "minus_vb", "vb", "image"}));
    cmd->add_option("--extra-point", j.extra_points, "extra evaluation point");
}

std::vector<int64_t> parse_ints(const std::string& s, char sep) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(std::stoll(item));
    return out;
}

json build_job(const JobOpts& j, const std::string& task) {
    json job;
    job["schema_version"] = 1;
    job["q"] = {{"p", j.p}, {"k", j.k}};
    job["task"] = task;
    if (!j.beta.empty()) {
        json rows = json::array();
        std::stringstream ss(j.beta);
        std::string row;
        while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row, ','));
        job["beta"] = rows;
    }
    if (j.hirzebruch >= 0) job["construction"] = {{"hirzebruch", j.hirzebruch}};
    if (!j.wps.empty()) job["construction"] = {{"wps", j.wps}};
    if (!j.product.empty()) job["construction"] = {{"product", j.product}};
    if (!j.B.empty()) job["B"] = j.B;
    if (!j.alpha.empty()) job["alpha"] = j.alpha;
    if (!j.eps.empty()) job["eps"] = j.eps;
    if (!j.point.empty()) job["point"] = j.point;
    if (j.map_s > 0) {
        job["map"] = {{"s", j.map_s},
                      {"f", j.map_f},
                      {"g", j.map_g},
                      {"domain", j.map_domain}};
    }
    if (!j.region.empty()) job["region"] = j.region;
    if (!j.extra_points.empty()) {
        json pts = json::array();
        for (const auto& p : j.extra_points) pts.push_back(parse_ints(p, ','));
        job["extra_points"] = pts;
    }
    return job;
}

void apply_common(json& job, const CommonOpts& c) {
    if (!job.contains("options")) job["options"] = json::object();
    if (c.budget_pairs >= 0) job["options"]["pair_budget"] = c.budget_pairs;
    if (c.budget_points >= 0) job["options"]["point_budget"] = c.budget_points;
    if (c.seed >= 0) job["options"]["seed"] = c.seed;
    if (!c.path.empty()) job["options"]["path"] = c.path;
    if (job["options"].empty()) job.erase("options");
}

int emit(tv_result* result, const CommonOpts& c) {
    const char* text = tv_result_json(result);
    if (!c.out_path.empty()) {
        std::ofstream out(c.out_path);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", c.out_path.c_str());
            tv_result_free(result);
            return 2;
        }
        out << text;
    } else {
        std::fputs(text, stdout);
    }
    tv_result_free(result);
    return 0;
}

int run_job(json job, const CommonOpts& c) {
    apply_common(job, c);
    tv_result* result = nullptr;
    int rc = tv_run_job_text(job.dump().c_str(), &result);
    if (rc != 0) {
        std::fprintf(stderr, "error (%d): %s\n", rc, tv_last_error());
        return rc;
    }
    return emit(result, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vanishing ideals and evaluation codes for toric varieties over "
                 "finite fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tv_version()));

    CommonOpts common;
    JobOpts jobopts;
    std::string job_file;
    std::string suite_dir = "goldens";
    std::string ideal_task = "toric_ideal";

    auto* cmd_run = app.add_subcommand("run", "run a job file");
    cmd_run->add_option("job", job_file, "job JSON file")->required();
    add_common(cmd_run, common);

    auto* cmd_verify = app.add_subcommand("verify", "run the golden suite");
    cmd_verify->add_option("dir", suite_dir, "suite directory");
    cmd_verify->add_option("--out", common.out_path, "write the report to a file");

    auto* cmd_ideal = app.add_subcommand("ideal", "compute a vanishing ideal");
    cmd_ideal->add_option("--task", ideal_task, "ideal task")
        ->check(CLI::IsMember({"param_ideal", "affine_ideal", "toric_ideal", "cell_ideal",
                               "point_ideal"}));
    add_job(cmd_ideal, jobopts);
    add_common(cmd_ideal, common);

    auto* cmd_orbits = app.add_subcommand("orbits", "enumerate orbit representatives");
    add_job(cmd_orbits, jobopts);
    add_common(cmd_orbits, common);

    auto* cmd_code = app.add_subcommand("code", "build an evaluation code");
    add_job(cmd_code, jobopts);
    add_common(cmd_code, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            std::ifstream in(job_file);
            if (!in) {
                std::fprintf(stderr, "error: cannot open %s\n", job_file.c_str());
                return 2;
            }
            json job;
            try {
                in >> job;
            } catch (const json::exception& e) {
                std::fprintf(stderr, "error (2): %s\n", e.what());
                return 2;
            }
            return run_job(std::move(job), common);
        }
        if (cmd_verify->parsed()) {
            tv_result* result = nullptr;
            int rc = tv_verify_suite(suite_dir.c_str(), &result);
            if (!result) {
                std::fprintf(stderr, "error (%d): %s\n", rc, tv_last_error());
                return rc;
            }
            int emit_rc = emit(result, common);
            return rc != 0 ? rc : emit_rc;
        }
        std::string task = cmd_ideal->parsed() ? ideal_task
                           : cmd_orbits->parsed() ? "orbits"
                                                  : "code";
        return run_job(build_job(jobopts, task), common);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
