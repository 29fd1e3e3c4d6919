#include "sspc/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace sspc {

std::string VarName::text() const {
    switch (kind) {
        case Kind::diagonal: return "d" + std::to_string(i);
        case Kind::off_diagonal: return "x" + std::to_string(i) + std::to_string(j);
        case Kind::scale: return "t";
    }
    throw std::logic_error("bad VarName kind");
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

MultiPoly MultiPoly::variable(const VarName& v) {
    MultiPoly p;
    p.terms_[Monomial{{v, 1}}] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [mono, coef] : terms_) {
        int d = 0;
        for (const auto& [v, e] : mono) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

std::set<VarName> MultiPoly::variables() const {
    std::set<VarName> vars;
    for (const auto& [mono, coef] : terms_)
        for (const auto& [v, e] : mono) vars.insert(v);
    return vars;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [mono, coef] : terms_) p.terms_.emplace(mono, -coef);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [mono, coef] : o.terms_) add_term(mono, coef);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [mono, coef] : o.terms_) add_term(mono, -coef);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly p = *this;
    p += o;
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly p = *this;
    p -= o;
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            // merge the two sorted exponent lists
            Monomial m;
            m.reserve(ma.size() + mb.size());
            auto ia = ma.begin();
            auto ib = mb.begin();
            while (ia != ma.end() || ib != mb.end()) {
                if (ib == mb.end() || (ia != ma.end() && ia->first < ib->first))
                    m.push_back(*ia++);
                else if (ia == ma.end() || ib->first < ia->first)
                    m.push_back(*ib++);
                else {
                    m.emplace_back(ia->first, ia->second + ib->second);
                    ++ia;
                    ++ib;
                }
            }
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

Rational MultiPoly::evaluate(const std::map<VarName, Rational>& binding) const {
    Rational acc(0);
    for (const auto& [mono, coef] : terms_) {
        Rational term = coef;
        for (const auto& [v, e] : mono) {
            auto it = binding.find(v);
            if (it == binding.end())
                throw std::invalid_argument("unbound variable " + v.text());
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s += "*";
        s += m[k].first.text();
        if (m[k].second > 1) s += "^" + std::to_string(m[k].second);
    }
    return s;
}

}  // namespace

std::string MultiPoly::text() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        Rational mag = coef < 0 ? Rational(-coef) : coef;
        if (first) {
            if (coef < 0) s += "-";
            first = false;
        } else {
            s += coef < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            s += to_string(mag);
        } else {
            if (mag != 1) s += to_string(mag) + "*";
            s += monomial_text(mono);
        }
    }
    return s;
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("polynomial: unexpected end");
        return s[pos++];
    }
    std::string take_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (start == pos) throw ParseError("polynomial: expected number");
        return s.substr(start, pos - start);
    }
    int take_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("polynomial: expected integer");
        return std::stoi(s.substr(start, pos - start));
    }
};

VarName parse_var(PolyLexer& lx) {
    char c = lx.take();
    if (c == 't') return VarName::t();
    if (c == 'd') {
        int i = lx.take_int();
        if (i < 1 || i > 8) throw ParseError("polynomial: bad d variable index");
        return VarName::diag(i);
    }
    if (c == 'x') {
        int ij = lx.take_int();
        int i = ij / 10, j = ij % 10;
        if (ij < 11 || ij > 88 || i == j || j == 0 || j == 9)
            throw ParseError("polynomial: bad x variable index");
        return VarName::off(i, j);
    }
    throw ParseError(std::string("polynomial: unexpected character '") + c + "'");
}

}  // namespace

MultiPoly parse_poly(const std::string& text) {
    PolyLexer lx{text};
    MultiPoly p;
    if (lx.done()) throw ParseError("polynomial: empty input");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("polynomial: expected '+' or '-' between terms");
        }
        first = false;

        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = parse_rational(lx.take_number());
            have_coef = true;
        }
        MultiPoly term = MultiPoly::constant(sign < 0 ? Rational(-coef) : coef);
        bool have_var = false;
        while (true) {
            char nxt = lx.peek();
            if (have_coef || have_var) {
                if (nxt != '*') break;
                lx.take();
            } else if (nxt != 't' && nxt != 'd' && nxt != 'x') {
                break;
            }
            VarName v = parse_var(lx);
            int exp = 1;
            if (lx.peek() == '^') {
                lx.take();
                exp = lx.take_int();
                if (exp < 1) throw ParseError("polynomial: exponent must be positive");
            }
            MultiPoly pv = MultiPoly::variable(v);
            for (int k = 0; k < exp; ++k) term = term * pv;
            have_var = true;
        }
        if (!have_coef && !have_var)
            throw ParseError("polynomial: empty term");
        p += term;
    }
    return p;
}

}  // namespace sspc
