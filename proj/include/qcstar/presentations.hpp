#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "qcstar/algebra.hpp"

namespace qcstar {

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

struct PresentationParams {
    std::optional<Rational> s;  // sphere only; defaults to 1
};

/// Podles sphere at rational s in [0, 1]. Generators K < L < L*, K = K*.
/// Normal monomials: K^a L^b and K^a (L*)^c.
PresentationPtr sphere_presentation(const Rational& s = Rational(1));

/// Quantum disc x^* x - Q x x^* = 1 - Q with Q = q^q_exponent. Generators x < x*.
PresentationPtr disc_presentation(int q_exponent = 1);

/// Real projective plane. Generators P < T < T* < R < R*, P = P*.
/// Normal monomials: P^k R^l, P^k (R*)^l, P^k T R^l, P^k T* (R*)^l.
PresentationPtr rp2_presentation();

/// Quotient of the SU_{q^2}(2) coordinate algebra by b = b*.
/// Generators a < a* < b. Normal monomials: a^i (a*)^j b^e with e in {0, 1}.
PresentationPtr suq2_mod_b_presentation();

/// Dispatch on "sphere", "disc", "rp2", "suq2_mod_b".
PresentationPtr presentation(std::string_view name, const PresentationParams& params = {});

/// Podles parameter change c -> s = 2 sqrt(c) / (1 + sqrt(1 + 4c)); c = +inf maps to 1.
double param_c_to_s(double c);

}  // namespace qcstar
