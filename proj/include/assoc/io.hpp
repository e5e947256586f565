#pragma once

#include <string>

#include "assoc/freelie.hpp"
#include "assoc/series.hpp"

namespace assoc {

// Canonical text form, bit-exact: header lines
//   alphabet: <names, space separated>
//   truncation: <N>
//   field: rational | quadratic <d>
//   basis: word | lyndon
//   terms: <count>
// followed by one "<word> <scalar>" line per term in canonical word order,
// zero coefficients omitted. A document round-trips to identical bytes; the
// readers reject anything the writers cannot produce.
std::string series_to_text(const Series& f);
std::string lie_to_text(const LiePolynomial& p);

Series series_from_text(const std::string& text);
LiePolynomial lie_from_text(const std::string& text);

// Peeks at the basis header of a well-formed document.
bool text_is_lyndon(const std::string& text);

// File helpers; failures surface as std::runtime_error naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace assoc
