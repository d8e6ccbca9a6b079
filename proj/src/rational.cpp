#include "nambu/rational.hpp"

#include <stdexcept>

namespace nambu {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("zero raised to a negative power");
    Rational out;
    const unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    if (e < 0) {
        out = Rational(1) / out;
    }
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        }
    }
    try {
        Rational r(text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
}

}  // namespace nambu
