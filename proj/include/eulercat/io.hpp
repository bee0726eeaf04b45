#pragma once

#include <stdexcept>
#include <string>

#include "eulercat/category.hpp"
#include "eulercat/qmatrix.hpp"

namespace eulercat {

/// Input rejection, with 1-based line/column when the format has positions
/// (0 when not applicable, e.g. structural problems in a category document).
class ParseError : public std::runtime_error {
 public:
    explicit ParseError(const std::string& message, std::size_t line = 0, std::size_t col = 0);
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

 private:
    std::size_t line_, col_;
};

/// Matrix grammar: '#' starts a comment, whitespace-only lines are skipped,
/// the first significant line is the dimension m >= 1, followed by exactly
/// m lines of m space-separated nonnegative integers. Throws ParseError.
CountMatrix parse_matrix_file(const std::string& text);

std::string serialize_matrix(const CountMatrix& z);

/// Category document, JSON:
///   {"objects": ["a", ...],
///    "arrows": [{"name": "f", "src": "a", "tgt": "b"}, ...],
///    "identities": {"a": "1_a", ...},
///    "composition": [["g", "f", "gf"], ...]}
/// Arrows are referenced by name. Unknown names, missing fields, and
/// malformed JSON throw ParseError. The category laws are NOT checked here;
/// run validate() on the result.
CatPresentation parse_category_file(const std::string& text);

std::string serialize_category(const CatPresentation& c);

std::string read_file(const std::string& path);   // throws ParseError if unreadable
void write_file(const std::string& path, const std::string& content);

enum class InputFormat { matrix, category };

/// ".json" extension means a category document; everything else is a matrix.
InputFormat detect_format(const std::string& path);

}  // namespace eulercat
