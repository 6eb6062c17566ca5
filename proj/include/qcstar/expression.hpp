#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcstar/algebra.hpp"

namespace qcstar {

class ExpressionError : public std::runtime_error {
public:
    ExpressionError(std::size_t column, const std::string& what)
        : std::runtime_error("column " + std::to_string(column + 1) + ": " + what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Parses the element micro-grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor factor*            (juxtaposition is multiplication)
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | 'q' | generator ['\'' | '*'] | '(' expr ')'
///
/// A trailing ' or * on a generator denotes its adjoint, so "T*T" is T^* T.
/// Negative powers are allowed only on scalar monomials such as q^-4.
Element parse_element(std::string_view text, const std::shared_ptr<const Alphabet>& alphabet);

}  // namespace qcstar
