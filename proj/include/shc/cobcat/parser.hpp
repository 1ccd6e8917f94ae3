#pragma once

#include <string>

#include "shc/cobcat/cobordism.hpp"

namespace shc::cob {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace is insignificant, '|' binds tighter than ';'):
//
//   expr      = product { ";" product } ;
//   product   = factor { "|" factor } ;
//   factor    = "(" expr ")" | atom | normal ;
//   atom      = "cyl" | "cap" | "cup" | "pants" | "copants" | "empty"
//             | "id" "(" int ")" | "genus" "(" int ";" int "," int ")" ;
//   normal    = ("nf" | "nf0") "(" { sign } "->" { sign } ")" { component } ;
//   component = "{" "g" int ":" { int } "->" { int } "}" ;
//   sign      = "+" | "-" ;
//
// "nf0" describes 1-dimensional cobordisms between signed points.
// Arity mismatches in ";" are reported as ParseError at the operator.
Cobordism parse(const std::string& text);

// Normal-form text; parse(print(c)) == c.
std::string print(const Cobordism& c);

}  // namespace shc::cob
