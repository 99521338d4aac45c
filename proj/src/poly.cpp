#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace toric {

int64_t Monomial::total_degree() const {
    int64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](Exp e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > m.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) {
        uint32_t s = static_cast<uint32_t>(r.exps[i]) + m.exps[i];
        if (s > UINT16_MAX) throw DomainError("exponent overflow");
        r.exps[i] = static_cast<Exp>(s);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (m.exps[i] > r.exps[i]) throw DomainError("monomial division failure");
        r.exps[i] = static_cast<Exp>(r.exps[i] - m.exps[i]);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] = std::max(r.exps[i], b.exps[i]);
    return r;
}

bool Monomial::coprime(const Monomial& b) const {
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

MonomialOrder MonomialOrder::lex(size_t r) {
    std::vector<uint32_t> p(r);
    std::iota(p.begin(), p.end(), 0u);
    return MonomialOrder{Kind::Lex, std::move(p), 0};
}

MonomialOrder MonomialOrder::lex_perm(std::vector<uint32_t> perm) {
    return MonomialOrder{Kind::Lex, std::move(perm), 0};
}

MonomialOrder MonomialOrder::block(std::vector<uint32_t> perm, size_t split) {
    return MonomialOrder{Kind::Block, std::move(perm), split};
}

namespace {

// degrevlex on the listed variables: higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing variable wins.
int degrevlex_cmp(const Monomial& a, const Monomial& b,
                  const std::vector<uint32_t>& vars, size_t from, size_t to) {
    int64_t da = 0, db = 0;
    for (size_t i = from; i < to; ++i) {
        da += a.exps[vars[i]];
        db += b.exps[vars[i]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = to; i-- > from;) {
        Exp ea = a.exps[vars[i]], eb = b.exps[vars[i]];
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::Lex) {
        for (uint32_t j : perm) {
            Exp ea = a.exps[j], eb = b.exps[j];
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }
    int c = degrevlex_cmp(a, b, perm, 0, block_split);
    if (c != 0) return c;
    return degrevlex_cmp(a, b, perm, block_split, perm.size());
}

std::string MonomialOrder::key() const {
    std::string s = kind == Kind::Lex ? "lex:" : "block" + std::to_string(block_split) + ":";
    for (auto j : perm) s += std::to_string(j) + ",";
    return s;
}

namespace {

// Exact rank over the rationals via fraction-free elimination.
size_t int_rank(std::vector<std::vector<int64_t>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            __int128 f = a[i][col], g = a[row][col];
            __int128 d = std::gcd(static_cast<int64_t>(f), static_cast<int64_t>(g));
            if (d != 0) { f /= d; g /= d; }
            for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] * g - a[row][j] * f;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

GradedRing::GradedRing(std::shared_ptr<const FiniteField> field,
                       std::vector<std::string> var_names,
                       std::vector<DegVec> beta)
    : field_(std::move(field)), var_names_(std::move(var_names)), beta_(std::move(beta)) {
    if (!field_) throw DomainError("ring requires a field");
    if (var_names_.empty()) throw DomainError("ring requires at least one variable");
    if (!beta_.empty()) {
        size_t r = var_names_.size();
        for (const auto& row : beta_) {
            if (row.size() != r) throw DomainError("beta row length mismatch");
            for (auto v : row)
                if (v < 0) throw DomainError("beta entries must be non-negative");
        }
        for (size_t j = 0; j < r; ++j) {
            bool nonzero = false;
            for (const auto& row : beta_) nonzero = nonzero || row[j] != 0;
            if (!nonzero)
                throw DomainError("beta column " + std::to_string(j + 1) + " is zero");
        }
        if (int_rank(beta_) != beta_.size())
            throw DomainError("RankDeficient: beta must have full row rank");
    }
}

std::optional<size_t> GradedRing::var_index(const std::string& name) const {
    for (size_t j = 0; j < var_names_.size(); ++j)
        if (var_names_[j] == name) return j;
    return std::nullopt;
}

DegVec GradedRing::beta_degree(const Monomial& m) const {
    if (!graded()) throw DomainError("ring carries no grading");
    DegVec deg(beta_.size(), 0);
    for (size_t i = 0; i < beta_.size(); ++i)
        for (size_t j = 0; j < m.exps.size(); ++j)
            deg[i] += beta_[i][j] * m.exps[j];
    return deg;
}

bool GradedRing::same_ring(const GradedRing& o) const {
    return field_->same_field(*o.field_) && var_names_ == o.var_names_ && beta_ == o.beta_;
}

namespace {

// Canonical lex x_1 > x_2 > ... for internal term storage.
bool lex_greater(const Monomial& a, const Monomial& b) {
    for (size_t j = 0; j < a.exps.size(); ++j)
        if (a.exps[j] != b.exps[j]) return a.exps[j] > b.exps[j];
    return false;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
    std::map<Monomial, uint64_t, bool (*)(const Monomial&, const Monomial&)> acc(lex_greater);
    const auto& F = ring_->field();
    for (auto& t : terms) {
        if (t.m.nvars() != ring_->nvars()) throw DomainError("monomial arity mismatch");
        auto [it, fresh] = acc.emplace(t.m, 0);
        it->second = F.add(static_cast<uint32_t>(it->second), t.c);
    }
    for (auto& [m, c] : acc)
        if (c != 0) terms_.push_back(Term{m, static_cast<uint32_t>(c)});
}

Polynomial Polynomial::constant(RingPtr ring, uint32_t c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back(Term{Monomial::one(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, uint32_t c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t j) {
    Monomial m = Monomial::one(ring->nvars());
    m.exps[j] = 1;
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw DomainError("ring mismatch");
    const auto& F = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && lex_greater(terms_[i].m, o.terms_[j].m))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || lex_greater(o.terms_[j].m, terms_[i].m)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            uint32_t c = F.add(terms_[i].c, o.terms_[j].c);
            if (c != 0) r.terms_.push_back(Term{terms_[i].m, c});
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::negated() const {
    Polynomial r = *this;
    const auto& F = ring_->field();
    for (auto& t : r.terms_) t.c = F.neg(t.c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negated(); }

Polynomial Polynomial::scaled(uint32_t c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    const auto& F = ring_->field();
    for (auto& t : r.terms_) t.c = F.mul(t.c, c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, uint32_t c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    const auto& F = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.m * m, F.mul(t.c, c)});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw DomainError("ring mismatch");
    Polynomial r(ring_);
    for (const auto& t : o.terms_) r = r + times_monomial(t.m, t.c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const auto& F = ring_->field();
    return scaled(F.inv(terms_.front().c));
}

std::optional<DegVec> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return DegVec(ring_->d(), 0);
    DegVec deg = ring_->beta_degree(terms_.front().m);
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ring_->beta_degree(terms_[i].m) != deg) return std::nullopt;
    return deg;
}

bool Polynomial::is_homogeneous() const { return homogeneous_degree().has_value(); }

uint32_t Polynomial::evaluate_values(const std::vector<uint32_t>& point) const {
    if (point.size() != ring_->nvars()) throw DomainError("point arity mismatch");
    const auto& F = ring_->field();
    uint32_t acc = 0;
    for (const auto& t : terms_) {
        uint32_t v = t.c;
        for (size_t j = 0; j < point.size(); ++j)
            if (t.m.exps[j] != 0) v = F.mul(v, F.pow(point[j], t.m.exps[j]));
        acc = F.add(acc, v);
    }
    return acc;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    const auto& F = ring_->field();
    std::vector<uint32_t> vals;
    vals.reserve(point.size());
    for (const auto& e : point) {
        if (!e.field || !e.field->same_field(F)) throw DomainError("FieldMismatch");
        vals.push_back(e.v);
    }
    return FieldElement{&F, evaluate_values(vals)};
}

std::string monomial_to_string(const GradedRing& ring, const Monomial& m) {
    std::string s;
    for (size_t j = 0; j < m.exps.size(); ++j) {
        if (m.exps[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_names()[j];
        if (m.exps[j] > 1) s += "^" + std::to_string(m.exps[j]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const auto& F = ring_->field();
    std::string out;
    for (const auto& t : terms_) {
        bool negative = false;
        std::string coeff;
        if (F.k() == 1) {
            int64_t s = static_cast<int64_t>(t.c);
            if (s > static_cast<int64_t>(F.p() / 2)) {
                s -= static_cast<int64_t>(F.p());
                negative = true;
            }
            coeff = std::to_string(s < 0 ? -s : s);
        } else {
            coeff = F.to_string(t.c);
            if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        std::string mono = monomial_to_string(*ring_, t.m);
        if (mono == "1") {
            out += coeff;
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("SyntaxError at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial p = term();
        if (neg) p = p.negated();
        while (true) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    uint64_t nat() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected a number");
        uint64_t n = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            n = n * 10 + static_cast<uint64_t>(src_[pos_] - '0');
            if (n > INT32_MAX) fail("number too large");
            ++pos_;
        }
        return n;
    }

    Polynomial factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t n = nat();
            return Polynomial::constant(ring_, ring_->field().from_int(static_cast<int64_t>(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            uint64_t e = 1;
            if (eat('^')) e = nat();
            if (name == "a" && !ring_->var_index("a")) {
                const auto& F = ring_->field();
                if (F.k() == 1) fail("'a' requires an extension field");
                uint32_t root = static_cast<uint32_t>(F.p());  // coefficient vector (0,1,0,..)
                return Polynomial::constant(ring_, F.pow(root, static_cast<int64_t>(e)));
            }
            auto j = ring_->var_index(name);
            if (!j) {
                pos_ = start;
                fail("UnknownVariable '" + name + "'");
            }
            if (e > UINT16_MAX) fail("exponent too large");
            Monomial m = Monomial::one(ring_->nvars());
            m.exps[*j] = static_cast<Exp>(e);
            return Polynomial::monomial(ring_, std::move(m));
        }
        fail("expected a factor");
    }

    const std::string& src_;
    RingPtr ring_;
    size_t pos_ = 0;
};

void basis_rec(const RingPtr& ring, size_t j, int64_t cap, DegVec remaining,
               Monomial& cur, std::vector<Monomial>& out) {
    size_t r = ring->nvars();
    if (j == r) {
        for (auto v : remaining)
            if (v != 0) return;
        out.push_back(cur);
        return;
    }
    const auto& beta = ring->beta();
    for (int64_t e = 0; e <= cap; ++e) {
        bool feasible = true;
        for (size_t i = 0; i < beta.size(); ++i)
            if (remaining[i] < 0) feasible = false;
        if (!feasible) break;
        cur.exps[j] = static_cast<Exp>(e);
        basis_rec(ring, j + 1, cap, remaining, cur, out);
        for (size_t i = 0; i < beta.size(); ++i) remaining[i] -= beta[i][j];
    }
    cur.exps[j] = 0;
}

}  // namespace

Polynomial parse_polynomial(const std::string& src, RingPtr ring) {
    return Parser(src, std::move(ring)).run();
}

std::vector<Monomial> graded_monomial_basis(const RingPtr& ring, const DegVec& alpha) {
    if (!ring->graded()) throw DomainError("UnboundedDegreePiece: ring carries no grading");
    if (alpha.size() != ring->d()) throw DomainError("degree vector length mismatch");
    for (auto v : alpha)
        if (v < 0) return {};
    // Column nonzero-ness is enforced at ring construction, which bounds
    // every exponent by the largest alpha component.
    int64_t cap = 0;
    for (auto v : alpha) cap = std::max(cap, v);
    if (cap > UINT16_MAX) throw DomainError("degree piece too large to enumerate");
    DegVec remaining = alpha;
    Monomial cur = Monomial::one(ring->nvars());
    std::vector<Monomial> out;
    basis_rec(ring, 0, cap, remaining, cur, out);
    return out;
}

}  // namespace toric
