#ifndef NCREP_EXPR_HPP
#define NCREP_EXPR_HPP

#include <string>
#include <string_view>
#include <variant>

#include "ncrep/algebra.hpp"
#include "ncrep/forms.hpp"

namespace ncrep
{

/// Expression grammar.
///
///     expr   := ['+' | '-'] term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := rational | 'e_'vertex | arrow | 'd' '(' expr ')' | '(' expr ')' | '-' factor
///     rational := digits ['/' digits]
///
/// A rational literal c stands for c times the unit. Arrow names include the
/// doubled ones (`x~`). `d` is expanded by the graded Leibniz rule, so the
/// result is a combination of form words.
///
/// Throws ParseError (line 1, 1-based column) on syntax errors, undefined
/// symbols and malformed rationals.
using ExprValue = std::variant<AlgebraElement, NCForm>;

// Degree-0 inputs (no `d`) yield an AlgebraElement, others an NCForm.
ExprValue parse_expr(std::string_view text, const QuiverPtr &q);
NCForm parse_form(std::string_view text, const QuiverPtr &q);
// Throws ParseError if the input contains `d(...)`.
AlgebraElement parse_element(std::string_view text, const QuiverPtr &q);

// Inverse of the parser, e.g. "x*d(x~) - 1/2*e_v". Zero prints as "0".
std::string print_expr(const AlgebraElement &x);
std::string print_expr(const NCForm &u);
std::string print_word(const Quiver &q, const FormWord &w);

} // namespace ncrep

#endif
