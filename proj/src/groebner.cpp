#include "groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace toric {

namespace {

using Terms = std::vector<Term>;  // sorted descending under the active order

Terms to_sorted(const Polynomial& p, const MonomialOrder& ord) {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return t;
}

Polynomial from_terms(const RingPtr& ring, Terms t) {
    return Polynomial(ring, std::move(t));
}

// h[from..] - c * x^m * g, merged under ord.
Terms axpy_sub(const FiniteField& F, const MonomialOrder& ord, const Terms& h,
               size_t from, uint32_t c, const Monomial& m, const Terms& g) {
    Terms out;
    out.reserve(h.size() - from + g.size());
    size_t i = from, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(h[i++]);
            continue;
        }
        Monomial gm = g[j].m * m;
        uint32_t gc = F.neg(F.mul(g[j].c, c));
        if (i == h.size()) {
            out.push_back(Term{std::move(gm), gc});
            ++j;
            continue;
        }
        int cmp = ord.cmp(h[i].m, gm);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            out.push_back(Term{std::move(gm), gc});
            ++j;
        } else {
            uint32_t s = F.add(h[i].c, gc);
            if (s != 0) out.push_back(Term{h[i].m, s});
            ++i, ++j;
        }
    }
    return out;
}

struct Reducers {
    std::vector<Terms> polys;  // monic, sorted under ord
    std::vector<Monomial> lts;
};

Terms normal_form_terms(const FiniteField& F, const MonomialOrder& ord, Terms h,
                        const Reducers& red) {
    Terms rem;
    size_t head = 0;
    while (head < h.size()) {
        bool reduced = false;
        for (size_t k = 0; k < red.lts.size(); ++k) {
            if (red.lts[k].divides(h[head].m)) {
                Monomial m = h[head].m / red.lts[k];
                h = axpy_sub(F, ord, h, head, h[head].c, m, red.polys[k]);
                head = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) rem.push_back(h[head++]);
    }
    return rem;
}

void make_monic(const FiniteField& F, Terms& t) {
    if (t.empty() || t.front().c == 1) return;
    uint32_t inv = F.inv(t.front().c);
    for (auto& term : t) term.c = F.mul(term.c, inv);
}

struct PairKey {
    int64_t deg;
    Monomial lcm;
    size_t i, j;
};

uint64_t pair_id(size_t i, size_t j) { return (static_cast<uint64_t>(i) << 32) | j; }

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const MonomialOrder& ord) {
    const auto& F = f.ring()->field();
    Reducers red;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!f.ring()->same_ring(*g.ring())) throw DomainError("ring mismatch");
        Terms t = to_sorted(g, ord);
        make_monic(F, t);
        red.lts.push_back(t.front().m);
        red.polys.push_back(std::move(t));
    }
    return from_terms(f.ring(), normal_form_terms(F, ord, to_sorted(f, ord), red));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord, const Budget& budget) {
    RingPtr ring;
    for (const auto& g : gens)
        if (!g.is_zero()) ring = g.ring();
    if (!ring) return {};
    const auto& F = ring->field();

    Reducers basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Terms t = to_sorted(g, ord);
        make_monic(F, t);
        basis.lts.push_back(t.front().m);
        basis.polys.push_back(std::move(t));
    }

    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pending(pair_less);
    std::unordered_set<uint64_t> pending_ids;

    auto add_pair = [&](size_t i, size_t j) {
        // Buchberger's first criterion: coprime leading terms.
        if (basis.lts[i].coprime(basis.lts[j])) return;
        Monomial l = Monomial::lcm(basis.lts[i], basis.lts[j]);
        pending.insert(PairKey{l.total_degree(), std::move(l), i, j});
        pending_ids.insert(pair_id(i, j));
    };

    for (size_t i = 0; i < basis.polys.size(); ++i)
        for (size_t j = i + 1; j < basis.polys.size(); ++j) add_pair(i, j);

    uint64_t processed = 0;
    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_ids.erase(pair_id(pk.i, pk.j));

        if (++processed > budget.pair_budget)
            throw BudgetError("ResourceBudgetExceeded: pair budget exhausted");
        if (pk.deg > budget.degree_cap)
            throw BudgetError("ResourceBudgetExceeded: S-pair degree " +
                              std::to_string(pk.deg) + " exceeds cap");

        // Chain criterion: a third leading term dividing the lcm, with both
        // connecting pairs already handled.
        bool skip = false;
        for (size_t k = 0; k < basis.lts.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis.lts[k].divides(pk.lcm)) continue;
            uint64_t a = pair_id(std::min(pk.i, k), std::max(pk.i, k));
            uint64_t b = pair_id(std::min(pk.j, k), std::max(pk.j, k));
            if (!pending_ids.count(a) && !pending_ids.count(b)) skip = true;
        }
        if (skip) continue;

        Monomial ui = pk.lcm / basis.lts[pk.i];
        Monomial uj = pk.lcm / basis.lts[pk.j];
        Terms s;
        s.reserve(basis.polys[pk.i].size());
        for (const auto& t : basis.polys[pk.i]) s.push_back(Term{t.m * ui, t.c});
        s = axpy_sub(F, ord, s, 0, 1, uj, basis.polys[pk.j]);
        s = normal_form_terms(F, ord, std::move(s), basis);
        if (s.empty()) continue;
        make_monic(F, s);
        size_t idx = basis.polys.size();
        basis.lts.push_back(s.front().m);
        basis.polys.push_back(std::move(s));
        for (size_t i = 0; i < idx; ++i) add_pair(i, idx);
    }

    // Minimize: keep only elements whose leading term is not divisible by
    // another kept leading term.
    std::vector<size_t> order_idx(basis.polys.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        int c = ord.cmp(basis.lts[a], basis.lts[b]);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<size_t> kept;
    for (size_t i : order_idx) {
        bool divisible = false;
        for (size_t k : kept)
            if (basis.lts[k].divides(basis.lts[i])) divisible = true;
        if (!divisible) kept.push_back(i);
    }

    // Inter-reduce tails for the unique reduced basis.
    std::vector<Polynomial> out;
    for (size_t pos = 0; pos < kept.size(); ++pos) {
        Reducers others;
        for (size_t p2 = 0; p2 < kept.size(); ++p2) {
            if (p2 == pos) continue;
            others.polys.push_back(basis.polys[kept[p2]]);
            others.lts.push_back(basis.lts[kept[p2]]);
        }
        Terms t = normal_form_terms(F, ord, basis.polys[kept[pos]], others);
        make_monic(F, t);
        out.push_back(from_terms(ring, std::move(t)));
    }
    return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (!g.ring()->same_ring(*ring_)) throw DomainError("generator ring mismatch");
}

bool Ideal::is_zero() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_zero(); });
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord,
                                               const Budget& budget) const {
    auto key = ord.key();
    auto it = gb_cache_.find(key);
    if (it != gb_cache_.end()) return it->second;
    auto gb = buchberger(gens_, ord, budget);
    return gb_cache_.emplace(key, std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f, const Budget& budget) const {
    auto ord = MonomialOrder::lex(ring_->nvars());
    return normal_form(f, groebner(ord, budget), ord).is_zero();
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
    const auto& src = *f.ring();
    std::vector<std::optional<size_t>> map(src.nvars());
    for (size_t j = 0; j < src.nvars(); ++j) map[j] = target->var_index(src.var_names()[j]);
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m = Monomial::one(target->nvars());
        for (size_t j = 0; j < src.nvars(); ++j) {
            if (t.m.exps[j] == 0) continue;
            if (!map[j])
                throw DomainError("variable " + src.var_names()[j] +
                                  " does not exist in the target ring");
            m.exps[*map[j]] = t.m.exps[j];
        }
        terms.push_back(Term{std::move(m), t.c});
    }
    return Polynomial(target, std::move(terms));
}

Ideal eliminate(const Ideal& ideal, const std::vector<size_t>& drop, const Budget& budget) {
    if (drop.empty()) return ideal;
    const auto& ring = ideal.ring();
    size_t r = ring->nvars();
    std::vector<bool> dropped(r, false);
    for (size_t j : drop) {
        if (j >= r) throw DomainError("drop variable out of range");
        dropped[j] = true;
    }

    std::vector<uint32_t> perm;
    for (size_t j = 0; j < r; ++j)
        if (dropped[j]) perm.push_back(static_cast<uint32_t>(j));
    size_t split = perm.size();
    for (size_t j = 0; j < r; ++j)
        if (!dropped[j]) perm.push_back(static_cast<uint32_t>(j));
    auto ord = MonomialOrder::block(perm, split);

    const auto& gb = ideal.groebner(ord, budget);

    std::vector<std::string> kept_names;
    for (size_t j = 0; j < r; ++j)
        if (!dropped[j]) kept_names.push_back(ring->var_names()[j]);
    std::vector<DegVec> kept_beta;
    if (ring->graded()) {
        for (const auto& row : ring->beta()) {
            DegVec kr;
            for (size_t j = 0; j < r; ++j)
                if (!dropped[j]) kr.push_back(row[j]);
            kept_beta.push_back(std::move(kr));
        }
    }
    RingPtr contracted;
    try {
        contracted = std::make_shared<GradedRing>(ring->field_ptr(), kept_names, kept_beta);
    } catch (const DomainError&) {
        // Columns left after contraction no longer form a valid grading.
        contracted = std::make_shared<GradedRing>(ring->field_ptr(), kept_names,
                                                  std::vector<DegVec>{});
    }

    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (size_t j = 0; j < r && pure; ++j)
                if (dropped[j] && t.m.exps[j] != 0) pure = false;
        if (pure) kept.push_back(map_to_ring(g, contracted));
    }
    return Ideal(contracted, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
    if (!a.ring()->same_ring(*b.ring())) throw DomainError("ring mismatch");
    const auto& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal(ring, {});

    std::string aux = "w";
    while (ring->var_index(aux)) aux += "_";
    std::vector<std::string> names = ring->var_names();
    names.push_back(aux);
    auto ext = std::make_shared<GradedRing>(ring->field_ptr(), names, std::vector<DegVec>{});

    Polynomial w = Polynomial::variable(ext, ext->nvars() - 1);
    Polynomial one_minus_w = Polynomial::constant(ext, 1) - w;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        if (!f.is_zero()) gens.push_back(w * map_to_ring(f, ext));
    for (const auto& g : b.gens())
        if (!g.is_zero()) gens.push_back(one_minus_w * map_to_ring(g, ext));

    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {ext->nvars() - 1}, budget);
    std::vector<Polynomial> out;
    for (const auto& g : elim.gens()) out.push_back(map_to_ring(g, ring));
    return Ideal(ring, std::move(out));
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& f) {
    if (f.is_zero()) throw DomainError("division by the zero polynomial");
    const auto& ring = h.ring();
    const auto& F = ring->field();
    auto ord = MonomialOrder::lex(ring->nvars());
    Terms rem = to_sorted(h, ord);
    Terms div = to_sorted(f, ord);
    std::vector<Term> quot;
    while (!rem.empty()) {
        if (!div.front().m.divides(rem.front().m))
            throw DomainError("exact division failed");
        Monomial m = rem.front().m / div.front().m;
        uint32_t c = F.div(rem.front().c, div.front().c);
        quot.push_back(Term{m, c});
        rem = axpy_sub(F, ord, rem, 0, c, m, div);
    }
    return Polynomial(ring, std::move(quot));
}

Ideal colon(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
    if (f.is_zero()) throw DomainError("colon by the zero polynomial");
    const auto& ring = ideal.ring();
    Ideal principal(ring, {f});
    Ideal inter = intersect(ideal, principal, budget);
    std::vector<Polynomial> out;
    for (const auto& h : inter.gens())
        if (!h.is_zero()) out.push_back(exact_divide(h, f));
    return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& ideal, const Ideal& divisor, const Budget& budget) {
    if (divisor.is_zero()) throw DomainError("colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& b : divisor.gens()) {
        if (b.is_zero()) continue;
        Ideal part = colon(ideal, b, budget);
        acc = first ? part : intersect(acc, part, budget);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& ideal, const Ideal& divisor, const Budget& budget) {
    Ideal prev = ideal;
    for (int iter = 0; iter < 1000; ++iter) {
        Ideal next = colon(prev, divisor, budget);
        if (ideal_equal(prev, next, budget)) return next;
        prev = next;
    }
    throw DomainError("saturation did not stabilize");
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
    if (!a.ring()->same_ring(*b.ring())) throw DomainError("ring mismatch");
    auto ord = MonomialOrder::lex(a.ring()->nvars());
    const auto& ga = a.groebner(ord, budget);
    const auto& gb = b.groebner(ord, budget);
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

std::vector<Monomial> quotient_graded_basis(const Ideal& ideal, const DegVec& alpha,
                                            const Budget& budget) {
    for (const auto& g : ideal.gens())
        if (!g.is_homogeneous())
            throw DomainError("NonHomogeneousIdeal: generator " + g.to_string());
    auto candidates = graded_monomial_basis(ideal.ring(), alpha);
    if (ideal.is_zero()) return candidates;
    auto ord = MonomialOrder::lex(ideal.ring()->nvars());
    const auto& gb = ideal.groebner(ord, budget);
    std::vector<Monomial> lts;
    for (const auto& g : gb)
        if (!g.is_zero()) lts.push_back(to_sorted(g, ord).front().m);
    std::vector<Monomial> out;
    for (const auto& m : candidates) {
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) divisible = true;
        if (!divisible) out.push_back(m);
    }
    return out;
}

}  // namespace toric
