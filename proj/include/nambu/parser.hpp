#ifndef NAMBU_PARSER_HPP
#define NAMBU_PARSER_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nambu/polynomial.hpp"

namespace nambu {

// Syntax or semantic error in an expression; position is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' '-'? INTEGER)?
//   base   := INTEGER | IDENT | '(' expr ')' | '-' base
//
// Division and negative exponents are only defined for invertible
// subexpressions (rational constants and parameter monomials); anything else
// raises ParseError. `bindings` resolves identifiers that are not declared
// symbols, e.g. binding "H" to a Hamiltonian polynomial.
Polynomial parse(std::string_view text, const SpacePtr& space,
                 const std::map<std::string, Polynomial>& bindings = {});

}  // namespace nambu

#endif
