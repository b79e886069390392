#pragma once

// Line-oriented text formats shared by the CLI and the test suites.
//
//   matrix         `<rows> <cols>` then `rows` lines of `cols` bits
//   form           `form <dim>`, `g <dim bits>`, then `dim` Gram rows
//   surface        `genus <n>`, `g <2n bits>` (standard intersection Gram)
//   word           one token per line: `twist <bits>`, `square <bits>`,
//                  `flip`, `umap`
//   decomposition  `u <0|1>` then one transvection vector per line, in
//                  application order
//
// Blank lines and lines starting with '#' are skipped. Malformed input
// throws ParseError naming the offending line.

#include <istream>
#include <string>
#include <string_view>

#include "arfe/gf2.hpp"
#include "arfe/mcg.hpp"
#include "arfe/orthogroup.hpp"
#include "arfe/quadform.hpp"

namespace arfe::io {

BitMatrix parse_matrix(std::istream& in);
std::string format_matrix(const BitMatrix& m);

// Rows as bit strings separated by commas, e.g. "01,10". A single row is a
// 1 x n matrix.
BitMatrix parse_inline_matrix(std::string_view text);
std::string format_inline_matrix(const BitMatrix& m);

QuadraticForm parse_form(std::istream& in);
std::string format_form(const QuadraticForm& form);

SurfacePinkallForm parse_surface(std::istream& in);
std::string format_surface(const SurfacePinkallForm& surface);

GeneratorWord parse_word(std::istream& in);
std::string format_word(const GeneratorWord& word);

Decomposition parse_decomposition(std::istream& in);
std::string format_decomposition(const Decomposition& decomposition);

}  // namespace arfe::io
