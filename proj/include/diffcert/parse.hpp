#ifndef DIFFCERT_PARSE_HPP
#define DIFFCERT_PARSE_HPP

#include <stdexcept>
#include <string>

#include "diffcert/ratcore.hpp"

namespace diffcert {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' ['-'] integer)?
//   base   := 'x' | 'q' | integer | '(' expr ')'
// Whitespace is insignificant. 'q' is legal only when the constant field
// carries q; division by a zero expression is rejected.
RatFun parse_expression(const std::string& text, const ConstField& field);

// Canonical text form; parse_expression(render(f)) == f.
std::string render(const RatFun& f);
std::string render(const Poly& p);
std::string render_scalar(const Scalar& s);

}  // namespace diffcert

#endif
