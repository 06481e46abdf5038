#include "motivix/fermat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace motivix::fermat {

Poly2 Poly2::constant(const NfElem& c) { return monomial(c, 0, 0); }
Poly2 Poly2::constant(const Rat& c) { return monomial(NfElem(exact::NumberField::rationals(), c), 0, 0); }

Poly2 Poly2::monomial(const NfElem& c, int i, int j) {
    if (i < 0 || j < 0) throw InvalidInput("negative exponent in monomial");
    Poly2 p;
    p.add_term({i, j}, c);
    return p;
}

void Poly2::add_term(const Mono& m, const NfElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NfElem Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? NfElem() : it->second;
}

bool Poly2::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0}); }

int Poly2::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
}

int Poly2::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.second);
    return d;
}

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
    Poly2 r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    *this = std::move(r);
    return *this;
}

Poly2& Poly2::operator*=(const NfElem& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Poly2& a, const Poly2& b) { return (a - b).is_zero(); }

Poly2 Poly2::pow(int e) const {
    if (e < 0) throw InvalidInput("negative power of a polynomial");
    Poly2 r = constant(Rat(1)), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Poly2 Poly2::dx() const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.first > 0) r.add_term({m.first - 1, m.second}, c * Rat(m.first));
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.second > 0) r.add_term({m.first, m.second - 1}, c * Rat(m.second));
    return r;
}

Mono Poly2::strip_monomial() {
    if (terms_.empty()) return {0, 0};
    int a = INT_MAX, b = INT_MAX;
    for (const auto& [m, c] : terms_) {
        a = std::min(a, m.first);
        b = std::min(b, m.second);
    }
    if (a == 0 && b == 0) return {0, 0};
    std::map<Mono, NfElem> t;
    for (auto& [m, c] : terms_) t.emplace(Mono{m.first - a, m.second - b}, c);
    terms_ = std::move(t);
    return {a, b};
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Mono, NfElem>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : order) {
        std::string mono;
        if (m.first) mono += m.first > 1 ? "x^" + std::to_string(m.first) : "x";
        if (m.second) {
            if (!mono.empty()) mono += "*";
            mono += m.second > 1 ? "y^" + std::to_string(m.second) : "y";
        }
        bool neg = false;
        std::string coef;
        if (c.is_rational()) {
            Rat v = c.rational_value();
            neg = v < 0;
            Rat a = abs(v);
            if (a != 1 || mono.empty()) coef = a.get_str();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << coef;
        if (!coef.empty() && !mono.empty()) os << "*";
        os << mono;
    }
    return os.str();
}

RatFun::RatFun(Poly2 n, Poly2 d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
    // cancel a common monomial factor
    Poly2 tn = num, td = den;
    Mono a = tn.strip_monomial(), b = td.strip_monomial();
    if (num.is_zero()) {
        den = Poly2::constant(Rat(1));
        return;
    }
    int cx = std::min(a.first, b.first), cy = std::min(a.second, b.second);
    if (cx == 0 && cy == 0) return;
    auto shift = [&](const Poly2& p) {
        Poly2 r;
        for (const auto& [m, c] : p.terms()) r += Poly2::monomial(c, m.first - cx, m.second - cy);
        return r;
    };
    num = shift(num);
    den = shift(den);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den == b.den) return RatFun(a.num + b.num, a.den);
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num * b.num, a.den * b.den); }

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num.is_zero()) throw InvalidInput("division by the zero rational function");
    return RatFun(a.num * b.den, a.den * b.num);
}

RatFun RatFun::pow(int e) const {
    if (e >= 0) return RatFun(num.pow(e), den.pow(e));
    if (num.is_zero()) throw InvalidInput("negative power of zero");
    return RatFun(den.pow(-e), num.pow(-e));
}

RatFun RatFun::dx() const { return RatFun(num.dx() * den - num * den.dx(), den * den); }
RatFun RatFun::dy() const { return RatFun(num.dy() * den - num * den.dy(), den * den); }

std::string RatFun::str() const {
    if (den.is_constant() && den.coeff(0, 0).is_rational() && den.coeff(0, 0).rational_value() == 1) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RatFun substitute(const Poly2& p, const RatFun& a, const RatFun& b) {
    if (p.is_zero()) return RatFun();
    const int dxp = p.degree_x(), dyp = p.degree_y();
    // Σ c·A^i·a_den^{dx−i}·B^j·b_den^{dy−j} over a_den^dx·b_den^dy
    std::vector<Poly2> an(dxp + 1), ad(dxp + 1), bn(dyp + 1), bd(dyp + 1);
    an[0] = ad[0] = bn[0] = bd[0] = Poly2::constant(Rat(1));
    for (int k = 1; k <= dxp; ++k) {
        an[k] = an[k - 1] * a.num;
        ad[k] = ad[k - 1] * a.den;
    }
    for (int k = 1; k <= dyp; ++k) {
        bn[k] = bn[k - 1] * b.num;
        bd[k] = bd[k - 1] * b.den;
    }
    Poly2 n;
    for (const auto& [m, c] : p.terms()) n += an[m.first] * ad[dxp - m.first] * bn[m.second] * bd[dyp - m.second] * c;
    return RatFun(n, ad[dxp] * bd[dyp]);
}

RatFun substitute(const RatFun& r, const RatFun& a, const RatFun& b) {
    return substitute(r.num, a, b) / substitute(r.den, a, b);
}

// ---- parser ----

namespace {

struct Parser {
    const std::string& s;
    std::string v1, v2;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun r = term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    RatFun term() {
        RatFun r = factor();
        for (;;) {
            if (eat('*'))
                r = r * factor();
            else if (eat('/')) {
                RatFun d = factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }
    RatFun factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFun base = atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            if (pos - start > 4) fail("exponent too large");
            int e = std::stoi(s.substr(start, pos - start));
            if (neg && base.is_zero()) fail("negative power of zero");
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    RatFun atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFun r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFun(Poly2::constant(Rat(Int(s.substr(start, pos - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == v1) return RatFun(Poly2::x());
            if (name == v2) return RatFun(Poly2::y());
            exact::Generator g = exact::known_generator(name);
            auto field = exact::NumberField::make({g});
            return RatFun(Poly2::constant(NfElem::generator(field, name)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFun parse_ratfun(const std::string& text, const std::string& var1, const std::string& var2) {
    Parser p{text, var1, var2};
    RatFun r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

// ---- linear algebra ----

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(NfMatrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        NfElem inv = a[row][col].inverse();
        for (auto& e : a[row]) e = e * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            NfElem f = a[r][col];
            for (std::size_t k = col; k < a[r].size(); ++k)
                if (!a[row][k].is_zero()) a[r][k] -= f * a[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int nf_rank(NfMatrix a) {
    if (a.empty()) return 0;
    return static_cast<int>(echelon(a, a[0].size()).size());
}

std::optional<std::vector<NfElem>> nf_solve(NfMatrix a, std::vector<NfElem> b) {
    if (a.size() != b.size()) throw ShapeError("nf_solve: row count mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    auto pivots = echelon(a, n);
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (!a[r][n].is_zero()) return std::nullopt;
    std::vector<NfElem> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
    return x;
}

}  // namespace motivix::fermat
