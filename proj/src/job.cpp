#include "job.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

namespace toric {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    throw SchemaError(path + ": " + msg);
}

const json& need(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) schema_fail(path + "." + key, "missing");
    return obj.at(key);
}

int64_t need_int(const json& obj, const std::string& path, const std::string& key) {
    const json& v = need(obj, path, key);
    if (!v.is_number_integer()) schema_fail(path + "." + key, "must be an integer");
    return v.get<int64_t>();
}

std::vector<int64_t> int_list(const json& v, const std::string& path) {
    if (!v.is_array()) schema_fail(path, "must be an array of integers");
    std::vector<int64_t> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            schema_fail(path + "[" + std::to_string(i) + "]", "must be an integer");
        out.push_back(v[i].get<int64_t>());
    }
    return out;
}

struct JobContext {
    FieldPtr field;
    ToricData toric;
    std::optional<RationalMap> map;
    std::optional<DegVec> alpha;
    Budget budget;
    uint64_t point_budget = 10'000'000;
    uint64_t distance_budget = 100'000'000;
    uint64_t seed = 1;
    std::string path = "cellular";  // elimination | cellular | both
    RingPtr ring;
};

FieldPtr parse_field(const json& job) {
    const json& q = need(job, "job", "q");
    int64_t p = need_int(q, "job.q", "p");
    int64_t k = need_int(q, "job.q", "k");
    if (p < 2) schema_fail("job.q.p", "must be at least 2");
    if (k < 1) schema_fail("job.q.k", "must be at least 1");
    return std::make_shared<const FiniteField>(static_cast<uint64_t>(p),
                                               static_cast<uint32_t>(k));
}

ToricData parse_toric(const json& job, const FieldPtr& field) {
    bool has_beta = job.contains("beta");
    bool has_cons = job.contains("construction");
    if (has_beta == has_cons)
        schema_fail("job", "exactly one of beta / construction is required");

    ToricData t;
    if (has_cons) {
        const json& c = job.at("construction");
        if (!c.is_object() || c.size() != 1)
            schema_fail("job.construction",
                        "must hold exactly one of hirzebruch / wps / product");
        if (c.contains("hirzebruch"))
            t = construct_hirzebruch(need_int(c, "job.construction", "hirzebruch"));
        else if (c.contains("wps"))
            t = construct_wps(int_list(c.at("wps"), "job.construction.wps"));
        else if (c.contains("product"))
            t = construct_product_projective(
                int_list(c.at("product"), "job.construction.product"));
        else
            schema_fail("job.construction", "unknown construction");
        if (job.contains("B"))
            schema_fail("job.B", "conflicts with a named construction");
        return t;
    }

    const json& b = job.at("beta");
    if (!b.is_array() || b.empty()) schema_fail("job.beta", "must be a nonempty matrix");
    for (size_t i = 0; i < b.size(); ++i)
        t.beta.push_back(int_list(b[i], "job.beta[" + std::to_string(i) + "]"));
    for (const auto& row : t.beta)
        if (row.size() != t.beta[0].size()) schema_fail("job.beta", "ragged matrix");

    if (job.contains("B")) {
        const json& bb = job.at("B");
        if (!bb.is_array()) schema_fail("job.B", "must be an array of monomial strings");
        RingPtr ring = make_cox_ring(field, t.beta);
        for (size_t i = 0; i < bb.size(); ++i) {
            std::string where = "job.B[" + std::to_string(i) + "]";
            if (!bb[i].is_string()) schema_fail(where, "must be a string");
            Polynomial p;
            try {
                p = parse_polynomial(bb[i].get<std::string>(), ring);
            } catch (const Error& e) {
                schema_fail(where, e.what());
            }
            if (p.nterms() != 1 || p.terms()[0].c != 1)
                schema_fail(where, "must be a monomial with coefficient 1");
            t.irrelevant.push_back(p.terms()[0].m);
        }
    }
    return t;
}

std::optional<RationalMap> parse_rational_map(const json& job, size_t r) {
    if (!job.contains("map")) return std::nullopt;
    const json& m = job.at("map");
    RationalMap map;
    int64_t s = need_int(m, "job.map", "s");
    if (s < 1) schema_fail("job.map.s", "must be positive");
    map.s = static_cast<size_t>(s);
    auto texts = [&](const char* key) {
        const json& v = need(m, "job.map", key);
        if (!v.is_array() || v.size() != r)
            schema_fail(std::string("job.map.") + key,
                        "must list one entry per variable (" + std::to_string(r) + ")");
        std::vector<std::string> out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string())
                schema_fail(std::string("job.map.") + key + "[" + std::to_string(i) + "]",
                            "must be a string");
            out.push_back(v[i].get<std::string>());
        }
        return out;
    };
    map.f = texts("f");
    map.g = texts("g");
    if (m.contains("domain")) {
        std::string d = m.at("domain").get<std::string>();
        if (d == "torus") map.domain = RationalMap::Domain::Torus;
        else if (d == "affine") map.domain = RationalMap::Domain::FullAffine;
        else schema_fail("job.map.domain", "must be affine or torus");
    }
    return map;
}

JobContext parse_job(const json& job) {
    if (!job.is_object()) schema_fail("job", "must be an object");
    JobContext ctx;
    ctx.field = parse_field(job);
    ctx.toric = parse_toric(job, ctx.field);
    ctx.ring = make_cox_ring(ctx.field, ctx.toric.beta);
    ctx.map = parse_rational_map(job, ctx.toric.beta[0].size());
    if (job.contains("alpha")) {
        ctx.alpha = int_list(job.at("alpha"), "job.alpha");
        if (ctx.alpha->size() != ctx.toric.beta.size())
            schema_fail("job.alpha", "length must equal the number of grading rows");
    }
    if (job.contains("options")) {
        const json& o = job.at("options");
        if (!o.is_object()) schema_fail("job.options", "must be an object");
        if (o.contains("pair_budget"))
            ctx.budget.pair_budget = static_cast<uint64_t>(
                std::max<int64_t>(1, need_int(o, "job.options", "pair_budget")));
        if (o.contains("degree_cap"))
            ctx.budget.degree_cap = need_int(o, "job.options", "degree_cap");
        if (o.contains("point_budget"))
            ctx.point_budget = static_cast<uint64_t>(
                std::max<int64_t>(1, need_int(o, "job.options", "point_budget")));
        if (o.contains("distance_budget"))
            ctx.distance_budget = static_cast<uint64_t>(
                std::max<int64_t>(1, need_int(o, "job.options", "distance_budget")));
        if (o.contains("seed"))
            ctx.seed = static_cast<uint64_t>(need_int(o, "job.options", "seed"));
        if (o.contains("path")) {
            ctx.path = o.at("path").get<std::string>();
            if (ctx.path != "elimination" && ctx.path != "cellular" && ctx.path != "both")
                schema_fail("job.options.path", "must be elimination, cellular, or both");
        }
    }
    return ctx;
}

Region parse_region(const json& job, const JobContext& ctx) {
    if (job.contains("region")) {
        std::string r = job.at("region").get<std::string>();
        if (r == "affine") return Region::Affine;
        if (r == "torus") return Region::Torus;
        if (r == "minus_vb") return Region::MinusVB;
        if (r == "vb") return Region::VB;
        if (r == "image") return Region::Image;
        schema_fail("job.region", "must be affine, torus, minus_vb, vb, or image");
    }
    if (ctx.map) return Region::Image;
    if (!ctx.toric.irrelevant.empty()) return Region::MinusVB;
    return Region::Affine;
}

// The identity parameterization y_j -> x_j, for the elimination path of
// the affine orbit-set ideal.
RationalMap identity_map(size_t r) {
    RationalMap map;
    map.s = r;
    for (size_t j = 1; j <= r; ++j) {
        map.f.push_back("y" + std::to_string(j));
        map.g.push_back("1");
    }
    return map;
}

json sorted_generators(const Ideal& ideal) {
    std::vector<std::string> out;
    for (const auto& g : ideal.gens())
        if (!g.is_zero()) out.push_back(g.monic().to_string());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return json(out);
}

json point_list(const std::vector<std::vector<uint32_t>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

bool in_vb(const std::vector<Monomial>& irr, const std::vector<uint32_t>& p) {
    for (const auto& m : irr) {
        bool vanishes = false;
        for (size_t j = 0; j < m.nvars(); ++j)
            if (m.exps[j] > 0 && p[j] == 0) {
                vanishes = true;
                break;
            }
        if (!vanishes) return false;
    }
    return true;
}

// Points the ideal of the given task must vanish on.
std::vector<std::vector<uint32_t>> soundness_points(const JobContext& ctx,
                                                    const std::string& task,
                                                    const json& job) {
    const IntMat& beta = ctx.toric.beta;
    if (task == "param_ideal")
        return enumerate_region_points(ctx.field, beta, Region::Image, ctx.map, {},
                                       ctx.point_budget);
    if (task == "affine_ideal")
        return enumerate_region_points(ctx.field, beta, Region::Affine, std::nullopt, {},
                                       ctx.point_budget);
    if (task == "toric_ideal") {
        if (ctx.map) {
            auto pts = enumerate_region_points(ctx.field, beta, Region::Image, ctx.map,
                                               {}, ctx.point_budget);
            std::erase_if(pts, [&](const auto& p) { return in_vb(ctx.toric.irrelevant, p); });
            return pts;
        }
        return enumerate_region_points(ctx.field, beta, Region::MinusVB, std::nullopt,
                                       ctx.toric.irrelevant, ctx.point_budget);
    }
    if (task == "cell_ideal") {
        auto eps = int_list(need(job, "job", "eps"), "job.eps");
        std::vector<size_t> idx;
        for (auto e : eps) idx.push_back(static_cast<size_t>(e - 1));
        auto sup = Support::normalized(idx).epsilon;
        auto pts = enumerate_region_points(ctx.field, beta, Region::Affine, std::nullopt,
                                           {}, ctx.point_budget);
        std::erase_if(pts, [&](const auto& p) {
            return Support::of_point(p).epsilon != sup;
        });
        return pts;
    }
    if (task == "point_ideal") {
        auto pv = int_list(need(job, "job", "point"), "job.point");
        std::vector<uint32_t> point(pv.begin(), pv.end());
        auto sup = Support::of_point(point).epsilon;
        auto fp = orbit_fingerprint(*ctx.field, beta, point);
        auto pts = enumerate_region_points(ctx.field, beta, Region::Affine, std::nullopt,
                                           {}, ctx.point_budget);
        std::erase_if(pts, [&](const auto& p) {
            return Support::of_point(p).epsilon != sup ||
                   orbit_fingerprint(*ctx.field, beta, p) != fp;
        });
        return pts;
    }
    return {};
}

json soundness_check(const JobContext& ctx, const Ideal& ideal, const std::string& task,
                     const json& job) {
    json out;
    std::vector<std::vector<uint32_t>> pts;
    try {
        pts = soundness_points(ctx, task, job);
    } catch (const BudgetError&) {
        out["sampled"] = 0;
        out["skipped"] = "point budget";
        return out;
    }
    std::vector<size_t> idx(pts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(ctx.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    size_t take = std::min<size_t>(100, idx.size());
    size_t violations = 0;
    for (size_t i = 0; i < take; ++i)
        for (const auto& g : ideal.gens())
            if (g.evaluate_values(pts[idx[i]]) != 0) ++violations;
    out["sampled"] = take;
    out["violations"] = violations;
    return out;
}

// Affine orbit-set ideal along the requested path(s); records path
// equivalence when both are run.
Ideal affine_by_path(const JobContext& ctx, json& checks) {
    if (ctx.path == "elimination")
        return parameterized_vanishing_ideal(ctx.field, ctx.toric.beta,
                                             identity_map(ctx.toric.beta[0].size()),
                                             ctx.budget);
    Ideal cellular = affine_cellular_ideal(ctx.field, ctx.toric.beta, ctx.budget);
    if (ctx.path == "both") {
        Ideal elim = parameterized_vanishing_ideal(ctx.field, ctx.toric.beta,
                                                   identity_map(ctx.toric.beta[0].size()),
                                                   ctx.budget);
        checks["path_equivalence"] = ideal_equal(cellular, elim, ctx.budget);
    }
    return cellular;
}

Ideal task_ideal(const JobContext& ctx, const std::string& task, const json& job,
                 json& checks) {
    if (task == "param_ideal") {
        if (!ctx.map) schema_fail("job.map", "required for param_ideal");
        return parameterized_vanishing_ideal(ctx.field, ctx.toric.beta, *ctx.map,
                                             ctx.budget);
    }
    if (task == "affine_ideal") return affine_by_path(ctx, checks);
    if (task == "toric_ideal") {
        if (ctx.toric.irrelevant.empty())
            schema_fail("job", "toric_ideal requires a construction or B");
        Ideal base = ctx.map ? parameterized_vanishing_ideal(ctx.field, ctx.toric.beta,
                                                             *ctx.map, ctx.budget)
                             : affine_by_path(ctx, checks);
        Ideal b = irrelevant_ideal(base.ring(), ctx.toric);
        Ideal ix = colon(base, b, ctx.budget);
        bool agree = ideal_equal(ix, saturate(base, b, ctx.budget), ctx.budget);
        checks["colon_equals_saturation"] = agree;
        if (!agree)
            throw DomainError("colon by the irrelevant ideal differs from its saturation");
        return ix;
    }
    if (task == "cell_ideal") {
        auto eps = int_list(need(job, "job", "eps"), "job.eps");
        std::vector<size_t> idx;
        for (auto e : eps) {
            if (e < 1 || static_cast<size_t>(e) > ctx.toric.beta[0].size())
                schema_fail("job.eps", "variable index out of range");
            idx.push_back(static_cast<size_t>(e - 1));
        }
        return cell_ideal(ctx.field, ctx.toric.beta, Support::normalized(idx), ctx.budget);
    }
    if (task == "point_ideal") {
        auto pv = int_list(need(job, "job", "point"), "job.point");
        std::vector<uint32_t> point;
        for (auto v : pv) {
            if (v < 0 || static_cast<uint64_t>(v) >= ctx.field->q())
                schema_fail("job.point", "coordinate out of range");
            point.push_back(static_cast<uint32_t>(v));
        }
        return point_orbit_ideal(ctx.field, ctx.toric.beta, point, ctx.budget);
    }
    schema_fail("job.task", "unknown task " + task);
}

json run_parsed(const json& job) {
    JobContext ctx = parse_job(job);
    std::string task = need(job, "job", "task").get<std::string>();
    json checks = json::object();
    json result;
    result["schema_version"] = 1;
    result["job"] = job;
    result["task"] = task;

    if (task == "orbits") {
        Region region = parse_region(job, ctx);
        auto orbits = enumerate_orbit_points(ctx.field, ctx.toric.beta, region, ctx.map,
                                             ctx.toric.irrelevant, ctx.point_budget);
        json pts = json::array();
        for (const auto& o : orbits) pts.push_back(o.rep);
        result["orbits"] = pts;
        result["orbit_count"] = orbits.size();
    } else if (task == "code") {
        if (!ctx.alpha) schema_fail("job.alpha", "required for code");
        Region region = parse_region(job, ctx);
        auto orbits = enumerate_orbit_points(ctx.field, ctx.toric.beta, region, ctx.map,
                                             ctx.toric.irrelevant, ctx.point_budget);
        std::vector<std::vector<uint32_t>> pts;
        for (const auto& o : orbits) pts.push_back(o.rep);
        if (job.contains("extra_points")) {
            const json& ep = job.at("extra_points");
            if (!ep.is_array()) schema_fail("job.extra_points", "must be an array");
            for (size_t i = 0; i < ep.size(); ++i) {
                auto pv = int_list(ep[i], "job.extra_points[" + std::to_string(i) + "]");
                std::vector<uint32_t> p;
                for (auto v : pv) {
                    if (v < 0 || static_cast<uint64_t>(v) >= ctx.field->q())
                        schema_fail("job.extra_points", "coordinate out of range");
                    p.push_back(static_cast<uint32_t>(v));
                }
                pts.push_back(std::move(p));
            }
        }

        std::optional<Ideal> ideal;
        std::string ideal_task =
            ctx.toric.irrelevant.empty() ? (ctx.map ? "param_ideal" : "affine_ideal")
                                         : "toric_ideal";
        ideal = task_ideal(ctx, ideal_task, job, checks);

        auto code = build_evaluation_code(ctx.field, ctx.toric.beta, pts, *ctx.alpha,
                                          ideal, ctx.budget, ctx.distance_budget);
        json basis = json::array();
        for (const auto& m : code.basis)
            basis.push_back(monomial_to_string(*ctx.ring, m));
        result["basis"] = basis;
        result["points"] = point_list(pts);
        json cj;
        cj["n"] = code.n;
        cj["k"] = code.k;
        if (code.delta) cj["delta"] = *code.delta;
        else cj["delta"] = nullptr;
        result["code"] = cj;

        auto nullsp = graded_vanishing_space(ctx.field, ctx.toric.beta, pts, *ctx.alpha);
        auto full = graded_monomial_basis(ctx.ring, *ctx.alpha);
        checks["rank_nullity"] = nullsp.size() + code.k == full.size();
    } else {
        Ideal ideal = task_ideal(ctx, task, job, checks);
        result["generators"] = sorted_generators(ideal);
        checks["soundness"] = soundness_check(ctx, ideal, task, job);
    }

    result["checks"] = checks;
    return result;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

json run_job_json(const json& job) {
    auto start = std::chrono::steady_clock::now();
    json result;
    try {
        result = run_parsed(job);
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    // Informational only; golden comparisons ignore it.
    result["timing_ms"] = ms;
    return result;
}

json run_job_file(const std::string& path) { return run_job_json(load_json_file(path)); }

namespace {

void compare_expect(const json& expect, const json& result, const json& job,
                    json& mismatches) {
    auto add = [&](const std::string& field, const json& want, const json& got) {
        json m;
        m["field"] = field;
        m["expected"] = want;
        m["actual"] = got;
        mismatches.push_back(m);
    };

    for (auto it = expect.begin(); it != expect.end(); ++it) {
        const std::string& key = it.key();
        if (key == "generators" || key == "orbits" || key == "basis" ||
            key == "orbit_count" || key == "points") {
            json got = result.contains(key) ? result.at(key) : json();
            if (got != it.value()) add(key, it.value(), got);
        } else if (key == "code") {
            json got = result.contains("code") ? result.at("code") : json();
            if (got != it.value()) add(key, it.value(), got);
        } else if (key == "generators_ideal") {
            // Ideal-level comparison: published generators may differ from
            // computed ones by a basis change.
            if (!result.contains("generators")) {
                add(key, it.value(), json());
                continue;
            }
            JobContext ctx = parse_job(job);
            auto parse_list = [&](const json& lst) {
                std::vector<Polynomial> gens;
                for (const auto& s : lst)
                    gens.push_back(parse_polynomial(s.get<std::string>(), ctx.ring));
                return Ideal(ctx.ring, std::move(gens));
            };
            Ideal want = parse_list(it.value());
            Ideal got = parse_list(result.at("generators"));
            if (!ideal_equal(want, got, ctx.budget))
                add(key, it.value(), result.at("generators"));
        } else if (key == "checks") {
            for (auto ct = it.value().begin(); ct != it.value().end(); ++ct) {
                json got = result.at("checks").contains(ct.key())
                               ? result.at("checks").at(ct.key())
                               : json();
                if (got != ct.value()) add("checks." + ct.key(), ct.value(), got);
            }
        } else {
            add(key, it.value(), json("unknown expect field"));
        }
    }

    // Hard invariants regardless of the expect block.
    if (result.contains("checks")) {
        const json& checks = result.at("checks");
        if (checks.contains("soundness") && checks.at("soundness").contains("violations") &&
            checks.at("soundness").at("violations").get<uint64_t>() != 0)
            add("checks.soundness.violations", 0, checks.at("soundness").at("violations"));
        for (const char* key : {"path_equivalence", "colon_equals_saturation", "rank_nullity"})
            if (checks.contains(key) && checks.at(key).is_boolean() &&
                !checks.at(key).get<bool>())
                add(std::string("checks.") + key, true, false);
    }
}

}  // namespace

json verify_suite_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (fs::exists(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());

    json report;
    report["jobs"] = files.size();
    json failures = json::array();
    size_t passed = 0;
    for (const auto& file : files) {
        json mismatches = json::array();
        try {
            json doc = load_json_file(file);
            json job = doc;
            json expect = json::object();
            if (doc.contains("expect")) {
                expect = doc.at("expect");
                job.erase("expect");
            }
            json result = run_job_json(job);
            compare_expect(expect, result, job, mismatches);
        } catch (const Error& e) {
            json m;
            m["field"] = "error";
            m["expected"] = "success";
            m["actual"] = e.what();
            mismatches.push_back(m);
        }
        if (mismatches.empty()) {
            ++passed;
        } else {
            json f;
            f["file"] = fs::path(file).filename().string();
            f["mismatches"] = mismatches;
            failures.push_back(f);
        }
    }
    report["passed"] = passed;
    report["failures"] = failures;
    return report;
}

}  // namespace toric
