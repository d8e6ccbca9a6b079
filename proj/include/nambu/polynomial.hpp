#ifndef NAMBU_POLYNOMIAL_HPP
#define NAMBU_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nambu/rational.hpp"
#include "nambu/symbol.hpp"

namespace nambu {

// Exponent vector over all symbols of a space, variables first.
// Variable exponents are always >= 0; parameter exponents may be negative,
// so constants like 1/(2*m1) stay inside the ring.
struct Monomial {
    std::vector<std::int32_t> exps;

    std::int64_t grade() const;
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded-lex, highest first, so map iteration yields the leading term first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Canonical multivariate polynomial over Q: a map monomial -> nonzero
// coefficient. The zero polynomial is the empty map. All operations return
// canonical results, so equality is exact structural equality.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    static Polynomial zero(SpacePtr space);
    static Polynomial constant(SpacePtr space, const Rational& value);
    static Polynomial from_symbol(SpacePtr space, const Symbol& s, std::int32_t exponent = 1);

    const SpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::int32_t e) const;  // e < 0 requires an invertible polynomial

    // Single term whose variable part is empty (a rational times a parameter
    // monomial); exactly the elements with a multiplicative inverse here.
    bool is_invertible() const;
    Polynomial inverse() const;

    // Exact formal partial derivative. Throws std::invalid_argument when v is
    // a parameter or belongs to a different space.
    Polynomial derivative(const Symbol& v) const;
    Polynomial derivative_index(int var_index) const;

    bool depends_on_index(int index) const;
    std::int32_t degree_in(int index) const;  // largest exponent of that symbol
    std::int64_t total_degree() const;        // largest grade; 0 for the zero polynomial

    // Replace one symbol by a rational constant (exact).
    Polynomial substitute(int index, const Rational& value) const;

    // Every symbol occurring in the polynomial must be assigned, else
    // std::invalid_argument names the first missing one.
    Rational evaluate(const std::map<Symbol, Rational>& assignment) const;
    double evaluate(const std::map<Symbol, double>& assignment) const;

    // Deterministic text form: monomials in descending graded-lex order,
    // factors of each monomial alphabetical, coefficients as p/q.
    std::string str() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}
    void insert_term(Monomial m, Rational c);  // accumulates, drops zeros
    void check_same_space(const Polynomial& o) const;

    SpacePtr space_;
    TermMap terms_;
};

}  // namespace nambu

#endif
