#include "nambu/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nambu {

std::int64_t Monomial::grade() const {
    std::int64_t g = 0;
    for (auto e : exps) g += e;
    return g;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const std::int64_t ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga > gb;
    for (std::size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return a.exps.size() > b.exps.size();
}

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int64_t s = static_cast<std::int64_t>(a) + b;
    if (s > std::numeric_limits<std::int32_t>::max() || s < std::numeric_limits<std::int32_t>::min()) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return static_cast<std::int32_t>(s);
}

// GMP requires canonical operands; normalize every externally supplied
// coefficient on entry.
Rational canon(Rational r) {
    r.canonicalize();
    return r;
}

double double_pow(double base, std::int32_t e) {
    if (e == 0) return 1.0;
    if (e < 0) return 1.0 / double_pow(base, -e);
    double out = 1.0, acc = base;
    for (std::int32_t n = e; n > 0; n >>= 1) {
        if (n & 1) out *= acc;
        if (n > 1) acc *= acc;
    }
    return out;
}

}  // namespace

Polynomial Polynomial::zero(SpacePtr space) {
    if (!space) throw std::invalid_argument("null variable space");
    return Polynomial(std::move(space));
}

Polynomial Polynomial::constant(SpacePtr space, const Rational& value) {
    Polynomial p = zero(std::move(space));
    Rational v = canon(value);
    if (v != 0) {
        Monomial m;
        m.exps.assign(p.space_->symbol_count(), 0);
        p.terms_.emplace(std::move(m), std::move(v));
    }
    return p;
}

Polynomial Polynomial::from_symbol(SpacePtr space, const Symbol& s, std::int32_t exponent) {
    Polynomial p = zero(std::move(space));
    if (s.index < 0 || s.index >= p.space_->symbol_count() ||
        p.space_->name_of(s.index) != s.name) {
        throw std::invalid_argument("symbol '" + s.name + "' is not declared in the space");
    }
    if (exponent < 0 && s.kind == SymbolKind::variable) {
        throw std::invalid_argument("negative exponent on variable '" + s.name + "'");
    }
    if (exponent == 0) return constant(p.space_, 1);
    Monomial m;
    m.exps.assign(p.space_->symbol_count(), 0);
    m.exps[s.index] = exponent;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

void Polynomial::check_same_space(const Polynomial& o) const {
    if (space_ == o.space_) return;
    if (space_ && o.space_ && *space_ == *o.space_) return;
    throw std::invalid_argument("polynomials belong to different variable spaces");
}

void Polynomial::insert_term(Monomial m, Rational c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(space_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b);
    Polynomial out(a.space_);
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.exps.resize(ma.exps.size());
            for (std::size_t i = 0; i < ma.exps.size(); ++i) {
                m.exps[i] = checked_add(ma.exps[i], mb.exps[i]);
            }
            out.insert_term(std::move(m), ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(space_);
    const Rational s = canon(c);
    if (s == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * s);
    return out;
}

Polynomial Polynomial::pow(std::int32_t e) const {
    if (e < 0) return inverse().pow(-e);
    Polynomial acc = constant(space_, 1);
    Polynomial base = *this;
    for (std::int32_t n = e; n > 0; n >>= 1) {
        if (n & 1) acc = acc * base;
        if (n > 1) base = base * base;
    }
    return acc;
}

bool Polynomial::is_invertible() const {
    if (terms_.size() != 1) return false;
    const auto& m = terms_.begin()->first;
    for (int i = 0; i < space_->variable_count(); ++i) {
        if (m.exps[i] != 0) return false;
    }
    return true;
}

Polynomial Polynomial::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!is_invertible()) {
        throw std::domain_error("polynomial has no inverse in the ring (not a constant or parameter monomial)");
    }
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& e : inv.exps) e = -e;
    Polynomial out(space_);
    out.terms_.emplace(std::move(inv), Rational(1) / c);
    return out;
}

Polynomial Polynomial::derivative(const Symbol& v) const {
    if (v.kind != SymbolKind::variable) {
        throw std::invalid_argument("cannot differentiate with respect to parameter '" + v.name + "'");
    }
    if (v.index < 0 || v.index >= space_->symbol_count() || space_->name_of(v.index) != v.name) {
        throw std::invalid_argument("symbol '" + v.name + "' is not declared in the space");
    }
    return derivative_index(v.index);
}

Polynomial Polynomial::derivative_index(int var_index) const {
    if (!space_->index_is_variable(var_index)) {
        throw std::invalid_argument("cannot differentiate with respect to parameter '" +
                                    space_->name_of(var_index) + "'");
    }
    Polynomial out(space_);
    for (const auto& [m, c] : terms_) {
        const std::int32_t e = m.exps[var_index];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[var_index] = e - 1;
        out.insert_term(std::move(dm), c * e);
    }
    return out;
}

bool Polynomial::depends_on_index(int index) const {
    for (const auto& [m, c] : terms_) {
        if (m.exps[index] != 0) return true;
    }
    return false;
}

std::int32_t Polynomial::degree_in(int index) const {
    std::int32_t d = 0;
    for (const auto& [m, c] : terms_) {
        if (m.exps[index] > d) d = m.exps[index];
    }
    return d;
}

std::int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.grade();  // leading term has the top grade
}

Polynomial Polynomial::substitute(int index, const Rational& value) const {
    Polynomial out(space_);
    const Rational v = canon(value);
    for (const auto& [m, c] : terms_) {
        const std::int32_t e = m.exps[index];
        if (e == 0) {
            out.insert_term(m, c);
            continue;
        }
        if (v == 0 && e > 0) continue;
        Monomial sub = m;
        sub.exps[index] = 0;
        out.insert_term(std::move(sub), c * rational_pow(v, e));
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<Symbol, Rational>& assignment) const {
    std::vector<std::optional<Rational>> by_index(space_->symbol_count());
    for (const auto& [sym, val] : assignment) {
        if (sym.index >= 0 && sym.index < space_->symbol_count()) by_index[sym.index] = canon(val);
    }
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!by_index[i]) {
                throw std::invalid_argument("missing assignment for symbol '" + space_->name_of(static_cast<int>(i)) + "'");
            }
            term *= rational_pow(*by_index[i], m.exps[i]);
        }
        total += term;
    }
    return total;
}

double Polynomial::evaluate(const std::map<Symbol, double>& assignment) const {
    std::vector<const double*> by_index(space_->symbol_count(), nullptr);
    for (const auto& [sym, val] : assignment) {
        if (sym.index >= 0 && sym.index < space_->symbol_count()) by_index[sym.index] = &val;
    }
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!by_index[i]) {
                throw std::invalid_argument("missing assignment for symbol '" + space_->name_of(static_cast<int>(i)) + "'");
            }
            term *= double_pow(*by_index[i], m.exps[i]);
        }
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        const Rational mag = negative ? Rational(-c) : c;

        // Factors sorted alphabetically by symbol name.
        std::vector<int> factor_indices;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] != 0) factor_indices.push_back(static_cast<int>(i));
        }
        std::sort(factor_indices.begin(), factor_indices.end(), [this](int a, int b) {
            return space_->name_of(a) < space_->name_of(b);
        });

        bool printed = false;
        if (mag != 1 || factor_indices.empty()) {
            out << to_string(mag);
            printed = true;
        }
        for (int idx : factor_indices) {
            if (printed) out << "*";
            out << space_->name_of(idx);
            if (m.exps[idx] != 1) out << "^" << m.exps[idx];
            printed = true;
        }
    }
    return out.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (space_ != o.space_ && !(space_ && o.space_ && *space_ == *o.space_)) return false;
    return terms_ == o.terms_;
}

}  // namespace nambu
