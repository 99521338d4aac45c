#include "vanishing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

std::vector<std::string> numbered(const std::string& stem, size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

size_t beta_cols(const IntMat& beta) {
    if (beta.empty() || beta[0].empty()) throw DomainError("empty grading matrix");
    return beta[0].size();
}

void check_point(const FiniteField& field, const std::vector<uint32_t>& point, size_t r) {
    if (point.size() != r) throw DomainError("point arity mismatch");
    for (auto v : point)
        if (v >= field.q()) throw DomainError("point coordinate out of range");
}

// g is a monomial multiple of h (both monic, terms canonically sorted).
bool monomial_multiple(const Polynomial& g, const Polynomial& h) {
    if (h.is_zero() || g.nterms() != h.nterms()) return false;
    const Monomial& lg = g.terms().front().m;
    const Monomial& lh = h.terms().front().m;
    if (!lh.divides(lg)) return false;
    return h.times_monomial(lg / lh) == g;
}

std::vector<Polynomial> prune_divisible(std::vector<Polynomial> gens) {
    for (auto& g : gens) g = g.monic();
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        int64_t da = a.terms().front().m.total_degree();
        int64_t db = b.terms().front().m.total_degree();
        if (da != db) return da < db;
        return a.to_string() < b.to_string();
    });
    std::vector<Polynomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : kept)
            if (monomial_multiple(g, h)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

uint64_t checked_points(uint64_t base, size_t exp, uint64_t budget) {
    uint64_t n = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (n > budget / base)
            throw BudgetError("point enumeration exceeds the point budget");
        n *= base;
    }
    if (n > budget) throw BudgetError("point enumeration exceeds the point budget");
    return n;
}

// Calls fn for every vector over `values`, in lexicographic order with the
// first coordinate most significant.
template <typename Fn>
void odometer(const std::vector<uint32_t>& values, size_t len, Fn&& fn) {
    if (values.empty() || len == 0) return;
    std::vector<size_t> idx(len, 0);
    std::vector<uint32_t> point(len, values[0]);
    while (true) {
        fn(point);
        size_t j = len;
        while (j > 0) {
            --j;
            if (++idx[j] < values.size()) {
                point[j] = values[idx[j]];
                break;
            }
            idx[j] = 0;
            point[j] = values[0];
            if (j == 0) return;
        }
    }
}

std::vector<uint32_t> field_values(const FiniteField& field, bool nonzero) {
    std::vector<uint32_t> vals;
    for (uint32_t v = nonzero ? 1 : 0; v < field.q(); ++v) vals.push_back(v);
    return vals;
}

bool monomial_vanishes(const Monomial& m, const std::vector<uint32_t>& point) {
    for (size_t j = 0; j < m.nvars(); ++j)
        if (m.exps[j] > 0 && point[j] == 0) return true;
    return false;
}

struct ParsedMap {
    RingPtr yring;
    std::vector<Polynomial> f, g;
    bool unit_denominators = true;
};

ParsedMap parse_map(const FieldPtr& field, size_t r, const RationalMap& map) {
    if (map.s == 0) throw DomainError("map requires at least one parameter");
    if (map.f.size() != r || map.g.size() != r)
        throw DomainError("map must provide one f and one g per coordinate");
    ParsedMap out;
    out.yring = std::make_shared<GradedRing>(field, numbered("y", map.s),
                                             std::vector<DegVec>{});
    Polynomial one = Polynomial::constant(out.yring, 1);
    for (size_t j = 0; j < r; ++j) {
        out.f.push_back(parse_polynomial(map.f[j], out.yring));
        Polynomial g = parse_polynomial(map.g[j], out.yring);
        if (g.is_zero())
            throw DomainError("InvalidDenominator: g" + std::to_string(j + 1) +
                              " is the zero polynomial");
        if (!(g == one)) out.unit_denominators = false;
        out.g.push_back(std::move(g));
    }
    return out;
}

Polynomial P(const RingPtr& ring, const std::string& src) {
    return parse_polynomial(src, ring);
}

std::string pw(const std::string& var, int64_t e) {
    if (e == 0) return "1";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::vector<Polynomial> hirzebruch_affine_gens(const RingPtr& ring, int64_t ell) {
    int64_t q = static_cast<int64_t>(ring->field().q());
    int64_t t = q - 1;
    std::vector<Polynomial> gens;
    gens.push_back(P(ring, "x3*x1*(" + pw("x3", t) + "-" + pw("x1", t) + ")"));
    gens.push_back(P(ring, "x4*x2*x1*(" + pw("x4", t) + "-" + pw("x2", t) + "*" +
                               pw("x1", t * ell) + ")"));
    gens.push_back(P(ring, "x4*x3*x2*(" + pw("x4", t) + "-" + pw("x3", t * ell) + "*" +
                               pw("x2", t) + ")"));
    return gens;
}

std::vector<Polynomial> hirzebruch_toric_gens(const RingPtr& ring, int64_t ell) {
    int64_t q = static_cast<int64_t>(ring->field().q());
    int64_t t = q - 1;
    Polynomial f1 = P(ring, "x3*x1*(" + pw("x3", t) + "-" + pw("x1", t) + ")");
    if (ell > 1) {
        Polynomial f4 = P(ring, pw("x4", q) + "*x2-x4*" + pw("x3", t * ell) + "*" +
                                    pw("x2", q) + "+x4*" + pw("x3", t) + "*" + pw("x2", q) +
                                    "*" + pw("x1", t * (ell - 1)) + "-x4*" + pw("x2", q) +
                                    "*" + pw("x1", t * ell));
        return {f1, f4};
    }
    auto affine = hirzebruch_affine_gens(ring, ell);
    Polynomial f4p = P(ring, pw("x4", 2 * q - 1) + "*x2-x4*" + pw("x3", 2 * t) + "*" +
                                 pw("x2", 2 * q - 1) + "+x4*" + pw("x3", t) + "*" +
                                 pw("x2", 2 * q - 1) + "*" + pw("x1", t) + "-x4*" +
                                 pw("x2", 2 * q - 1) + "*" + pw("x1", 2 * t));
    return {affine[0], affine[1], affine[2], f4p};
}

// Binomial set of the (1,...,1,a,b) weighted projective space; empty
// optional when the weight pattern does not match.
std::optional<std::vector<Polynomial>> wps_gens(const RingPtr& ring,
                                                const std::vector<int64_t>& w) {
    size_t r = w.size();
    if (r < 3) return std::nullopt;
    for (size_t i = 0; i + 2 < r; ++i)
        if (w[i] != 1) return std::nullopt;
    int64_t a = w[r - 2], b = w[r - 1];
    int64_t t = static_cast<int64_t>(ring->field().q()) - 1;
    auto xv = [](size_t j) { return "x" + std::to_string(j + 1); };
    std::vector<Polynomial> gens;
    for (size_t i = 0; i + 2 < r; ++i)
        for (size_t j = i + 1; j + 2 < r; ++j)
            gens.push_back(P(ring, xv(i) + "*" + xv(j) + "*(" + pw(xv(i), t) + "-" +
                                       pw(xv(j), t) + ")"));
    for (size_t k = 0; k + 2 < r; ++k) {
        gens.push_back(P(ring, xv(k) + "*" + xv(r - 2) + "*(" + pw(xv(k), t * a) + "-" +
                                   pw(xv(r - 2), t) + ")"));
        gens.push_back(P(ring, xv(k) + "*" + xv(r - 1) + "*(" + pw(xv(k), t * b) + "-" +
                                   pw(xv(r - 1), t) + ")"));
    }
    gens.push_back(P(ring, xv(r - 2) + "*" + xv(r - 1) + "*(" + pw(xv(r - 2), t * b) +
                               "-" + pw(xv(r - 1), t * a) + ")"));
    return gens;
}

std::vector<Polynomial> product_gens(const RingPtr& ring,
                                     const std::vector<int64_t>& ns) {
    int64_t t = static_cast<int64_t>(ring->field().q()) - 1;
    auto xv = [](size_t j) { return "x" + std::to_string(j + 1); };
    std::vector<Polynomial> gens;
    size_t offset = 0;
    for (int64_t n : ns) {
        size_t block = static_cast<size_t>(n) + 1;
        for (size_t i = offset; i < offset + block; ++i)
            for (size_t j = i + 1; j < offset + block; ++j)
                gens.push_back(P(ring, xv(i) + "*" + xv(j) + "*(" + pw(xv(i), t) + "-" +
                                           pw(xv(j), t) + ")"));
        offset += block;
    }
    return gens;
}

std::string join_params(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

RingPtr make_cox_ring(const FieldPtr& field, const IntMat& beta) {
    size_t r = beta_cols(beta);
    return std::make_shared<GradedRing>(field, numbered("x", r), beta);
}

Ideal parameterized_vanishing_ideal(const FieldPtr& field, const IntMat& beta,
                                    const RationalMap& map, const Budget& budget) {
    size_t r = beta_cols(beta);
    size_t d = beta.size();
    ParsedMap pm = parse_map(field, r, map);
    size_t s = map.s;

    std::vector<std::string> names = numbered("x", r);
    for (auto& n : numbered("y", s)) names.push_back(n);
    for (auto& n : numbered("z", d)) names.push_back(n);
    names.push_back("w");
    auto ext = std::make_shared<GradedRing>(field, names, std::vector<DegVec>{});

    uint64_t q = field->q();
    std::vector<Polynomial> gens;
    for (size_t j = 0; j < r; ++j) {
        Monomial zm = Monomial::one(ext->nvars());
        for (size_t i = 0; i < d; ++i) {
            int64_t e = beta[i][j];
            if (e < 0 || e > UINT16_MAX) throw DomainError("grading entry out of range");
            zm.exps[r + s + i] = static_cast<Exp>(e);
        }
        gens.push_back(Polynomial::variable(ext, j) * map_to_ring(pm.g[j], ext) -
                       map_to_ring(pm.f[j], ext) * Polynomial::monomial(ext, zm));
    }
    for (size_t i = 0; i < s; ++i) {
        Polynomial y = Polynomial::variable(ext, r + i);
        if (map.domain == RationalMap::Domain::Torus) {
            Monomial m = Monomial::one(ext->nvars());
            m.exps[r + i] = static_cast<Exp>(q - 1);
            gens.push_back(Polynomial::monomial(ext, m) - Polynomial::constant(ext, 1));
        } else {
            Monomial m = Monomial::one(ext->nvars());
            m.exps[r + i] = static_cast<Exp>(q);
            gens.push_back(Polynomial::monomial(ext, m) - y);
        }
    }
    if (!pm.unit_denominators) {
        Polynomial prod = Polynomial::variable(ext, r + s + d);
        for (const auto& g : pm.g) prod = prod * map_to_ring(g, ext);
        gens.push_back(prod - Polynomial::constant(ext, 1));
    }

    std::vector<size_t> drop;
    for (size_t j = r; j < ext->nvars(); ++j) drop.push_back(j);
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), drop, budget);

    RingPtr cox = make_cox_ring(field, beta);
    std::vector<Polynomial> out;
    for (const auto& g : elim.gens()) out.push_back(map_to_ring(g, cox));
    return Ideal(cox, std::move(out));
}

Ideal affine_cellular_ideal(const FieldPtr& field, const IntMat& beta,
                            const Budget& budget, size_t max_vars) {
    size_t r = beta_cols(beta);
    if (r > max_vars)
        throw DomainError("cellular enumeration limited to " +
                          std::to_string(max_vars) + " variables");
    RingPtr ring = make_cox_ring(field, beta);
    int64_t scale = static_cast<int64_t>(field->q()) - 1;

    std::vector<Polynomial> raw;
    for (uint64_t mask = 1; mask < (uint64_t(1) << r); ++mask) {
        std::vector<size_t> idx;
        for (size_t j = 0; j < r; ++j)
            if (mask & (uint64_t(1) << j)) idx.push_back(j);
        IntLattice lat = support_kernel(beta, Support{idx});
        if (lat.is_zero()) continue;
        Monomial xe = Monomial::one(r);
        for (size_t j : idx) xe.exps[j] = 1;
        Ideal cell = lattice_ideal(lat, scale, ring, budget);
        for (const auto& g : cell.gens())
            if (!g.is_zero()) raw.push_back(g.times_monomial(xe));
    }
    return Ideal(ring, prune_divisible(std::move(raw)));
}

Ideal cell_ideal(const FieldPtr& field, const IntMat& beta, const Support& eps,
                 const Budget& budget) {
    size_t r = beta_cols(beta);
    RingPtr ring = make_cox_ring(field, beta);
    std::vector<bool> in(r, false);
    for (size_t j : eps.epsilon) {
        if (j >= r) throw DomainError("support index out of range");
        in[j] = true;
    }
    std::vector<Polynomial> gens;
    for (size_t j = 0; j < r; ++j)
        if (!in[j]) gens.push_back(Polynomial::variable(ring, j));
    if (!eps.empty()) {
        IntLattice lat = support_kernel(beta, eps);
        if (!lat.is_zero()) {
            int64_t scale = static_cast<int64_t>(field->q()) - 1;
            Ideal li = lattice_ideal(lat, scale, ring, budget);
            for (const auto& g : li.gens()) gens.push_back(g);
        }
    }
    return Ideal(ring, std::move(gens));
}

Ideal point_orbit_ideal(const FieldPtr& field, const IntMat& beta,
                        const std::vector<uint32_t>& point, const Budget& budget) {
    size_t r = beta_cols(beta);
    check_point(*field, point, r);
    RingPtr ring = make_cox_ring(field, beta);
    Support eps = Support::of_point(point);
    std::vector<bool> in(r, false);
    for (size_t j : eps.epsilon) in[j] = true;
    std::vector<Polynomial> gens;
    for (size_t j = 0; j < r; ++j)
        if (!in[j]) gens.push_back(Polynomial::variable(ring, j));
    if (!eps.empty()) {
        IntLattice lat = support_kernel(beta, eps);
        if (!lat.is_zero()) {
            PartialCharacter chi{point, eps, lat};
            Ideal ci = character_lattice_ideal(chi, ring, budget);
            for (const auto& g : ci.gens()) gens.push_back(g);
        }
    }
    return Ideal(ring, std::move(gens));
}

Ideal irrelevant_ideal(const RingPtr& ring, const ToricData& toric) {
    if (toric.irrelevant.empty())
        throw DomainError("toric data carries no irrelevant ideal");
    std::vector<Polynomial> gens;
    for (const auto& m : toric.irrelevant) {
        if (m.nvars() != ring->nvars()) throw DomainError("monomial arity mismatch");
        gens.push_back(Polynomial::monomial(ring, m));
    }
    return Ideal(ring, std::move(gens));
}

namespace {

Ideal quotient_by_irrelevant(const Ideal& ideal, const ToricData& toric,
                             const Budget& budget) {
    Ideal b = irrelevant_ideal(ideal.ring(), toric);
    Ideal ix = colon(ideal, b, budget);
    if (!ideal_equal(ix, saturate(ideal, b, budget), budget))
        throw DomainError("colon by the irrelevant ideal differs from its saturation");
    return ix;
}

}  // namespace

Ideal toric_vanishing_ideal(const FieldPtr& field, const ToricData& toric,
                            const Budget& budget) {
    return quotient_by_irrelevant(affine_cellular_ideal(field, toric.beta, budget),
                                  toric, budget);
}

Ideal toric_subset_vanishing_ideal(const FieldPtr& field, const ToricData& toric,
                                   const RationalMap& map, const Budget& budget) {
    return quotient_by_irrelevant(
        parameterized_vanishing_ideal(field, toric.beta, map, budget), toric, budget);
}

std::vector<uint32_t> orbit_fingerprint(const FiniteField& field, const IntMat& beta,
                                        const std::vector<uint32_t>& point) {
    Support eps = Support::of_point(point);
    if (eps.empty()) return {};
    IntLattice lat = support_kernel(beta, eps);
    std::vector<uint32_t> out;
    for (const auto& row : lat.basis) {
        uint32_t v = 1;
        for (size_t i = 0; i < row.size(); ++i)
            v = field.mul(v, field.pow(point[lat.ambient_vars[i]], row[i]));
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<uint32_t>> enumerate_region_points(
    const FieldPtr& field, const IntMat& beta, Region region,
    const std::optional<RationalMap>& map, const std::vector<Monomial>& irrelevant,
    uint64_t point_budget) {
    size_t r = beta_cols(beta);
    std::vector<std::vector<uint32_t>> out;

    if (region == Region::Image) {
        if (!map) throw DomainError("image region requires a map");
        ParsedMap pm = parse_map(field, r, *map);
        bool torus = map->domain == RationalMap::Domain::Torus;
        auto vals = field_values(*field, torus);
        checked_points(vals.size(), map->s, point_budget);
        odometer(vals, map->s, [&](const std::vector<uint32_t>& t) {
            std::vector<uint32_t> point(r);
            for (size_t j = 0; j < r; ++j) {
                uint32_t den = pm.g[j].evaluate_values(t);
                if (den == 0) return;
                point[j] = field->div(pm.f[j].evaluate_values(t), den);
            }
            out.push_back(std::move(point));
        });
        return out;
    }

    if ((region == Region::VB || region == Region::MinusVB) && irrelevant.empty())
        throw DomainError("region requires the irrelevant ideal");
    for (const auto& m : irrelevant)
        if (m.nvars() != r) throw DomainError("monomial arity mismatch");

    auto vals = field_values(*field, region == Region::Torus);
    checked_points(vals.size(), r, point_budget);
    odometer(vals, r, [&](const std::vector<uint32_t>& p) {
        if (region == Region::VB || region == Region::MinusVB) {
            bool in_vb = true;
            for (const auto& m : irrelevant)
                if (!monomial_vanishes(m, p)) {
                    in_vb = false;
                    break;
                }
            if (in_vb != (region == Region::VB)) return;
        }
        out.push_back(p);
    });
    return out;
}

std::vector<OrbitPoint> enumerate_orbit_points(const FieldPtr& field, const IntMat& beta,
                                               Region region,
                                               const std::optional<RationalMap>& map,
                                               const std::vector<Monomial>& irrelevant,
                                               uint64_t point_budget) {
    size_t r = beta_cols(beta);
    auto raw = enumerate_region_points(field, beta, region, map, irrelevant, point_budget);
    std::vector<OrbitPoint> orbits;

    if (region == Region::VB) {
        // One representative per cell: the indicator point of each support
        // occurring in V(B).
        std::set<std::vector<size_t>> sups;
        for (const auto& p : raw) sups.insert(Support::of_point(p).epsilon);
        for (const auto& s : sups) {
            std::vector<uint32_t> rep(r, 0);
            for (size_t j : s) rep[j] = 1;
            orbits.push_back(
                OrbitPoint{rep, Support{s}, orbit_fingerprint(*field, beta, rep)});
        }
    } else {
        std::map<std::pair<std::vector<size_t>, std::vector<uint32_t>>,
                 std::vector<uint32_t>>
            best;
        for (const auto& p : raw) {
            auto key = std::make_pair(Support::of_point(p).epsilon,
                                      orbit_fingerprint(*field, beta, p));
            auto it = best.find(key);
            if (it == best.end() || p < it->second) best[key] = p;
        }
        for (const auto& [key, rep] : best)
            orbits.push_back(OrbitPoint{rep, Support{key.first}, key.second});
    }

    std::sort(orbits.begin(), orbits.end(),
              [](const OrbitPoint& a, const OrbitPoint& b) { return a.rep < b.rep; });
    return orbits;
}

ToricData construct_hirzebruch(int64_t ell) {
    if (ell < 1) throw DomainError("hirzebruch parameter must be positive");
    ToricData t;
    t.beta = {{1, 0, 1, ell}, {0, 1, 0, 1}};
    const std::pair<size_t, size_t> pairs[] = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
    for (auto [i, j] : pairs) {
        Monomial m = Monomial::one(4);
        m.exps[i] = 1;
        m.exps[j] = 1;
        t.irrelevant.push_back(m);
    }
    t.name = "hirzebruch(" + std::to_string(ell) + ")";
    t.family = ToricData::Family::Hirzebruch;
    t.params = {ell};
    return t;
}

ToricData construct_wps(const std::vector<int64_t>& weights) {
    size_t r = weights.size();
    if (r < 2) throw DomainError("BadWeights: need at least two weights");
    for (auto w : weights)
        if (w < 1) throw DomainError("BadWeights: weights must be positive");
    for (size_t skip = 0; skip < r; ++skip) {
        int64_t g = 0;
        for (size_t i = 0; i < r; ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1)
            throw DomainError("BadWeights: every " + std::to_string(r - 1) +
                              " of the weights must be coprime");
    }
    ToricData t;
    t.beta = {weights};
    for (size_t j = 0; j < r; ++j) {
        Monomial m = Monomial::one(r);
        m.exps[j] = 1;
        t.irrelevant.push_back(m);
    }
    t.name = "wps(" + join_params(weights) + ")";
    t.family = ToricData::Family::WPS;
    t.params = weights;
    return t;
}

ToricData construct_product_projective(const std::vector<int64_t>& n_list) {
    if (n_list.empty()) throw DomainError("product requires at least one factor");
    for (auto n : n_list)
        if (n < 1) throw DomainError("factor dimensions must be positive");
    size_t k = n_list.size();
    size_t r = 0;
    for (auto n : n_list) r += static_cast<size_t>(n) + 1;
    ToricData t;
    t.beta.assign(k, std::vector<int64_t>(r, 0));
    size_t offset = 0;
    std::vector<std::pair<size_t, size_t>> blocks;
    for (size_t i = 0; i < k; ++i) {
        size_t block = static_cast<size_t>(n_list[i]) + 1;
        for (size_t j = offset; j < offset + block; ++j) t.beta[i][j] = 1;
        blocks.emplace_back(offset, block);
        offset += block;
    }
    // B: one variable from each block, all combinations.
    std::vector<Monomial> acc{Monomial::one(r)};
    for (auto [start, len] : blocks) {
        std::vector<Monomial> next;
        for (const auto& m : acc)
            for (size_t j = start; j < start + len; ++j) {
                Monomial mm = m;
                mm.exps[j] = 1;
                next.push_back(std::move(mm));
            }
        acc = std::move(next);
    }
    t.irrelevant = std::move(acc);
    t.name = "product(" + join_params(n_list) + ")";
    t.family = ToricData::Family::Product;
    t.params = n_list;
    return t;
}

std::optional<Ideal> closed_form_affine_ideal(const FieldPtr& field,
                                              const ToricData& toric) {
    RingPtr ring = make_cox_ring(field, toric.beta);
    switch (toric.family) {
        case ToricData::Family::Hirzebruch:
            return Ideal(ring, hirzebruch_affine_gens(ring, toric.params[0]));
        case ToricData::Family::WPS: {
            auto gens = wps_gens(ring, toric.params);
            if (!gens) return std::nullopt;
            return Ideal(ring, std::move(*gens));
        }
        case ToricData::Family::Product:
            return Ideal(ring, product_gens(ring, toric.params));
        case ToricData::Family::Custom:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Ideal> closed_form_toric_ideal(const FieldPtr& field,
                                             const ToricData& toric) {
    if (toric.family == ToricData::Family::Hirzebruch) {
        RingPtr ring = make_cox_ring(field, toric.beta);
        return Ideal(ring, hirzebruch_toric_gens(ring, toric.params[0]));
    }
    // For weighted projective spaces and products of projective spaces the
    // toric vanishing ideal coincides with the affine one.
    return closed_form_affine_ideal(field, toric);
}

}  // namespace toric
