#pragma once

#include <map>
#include <string>

#include "qcstar/integer_matrix.hpp"

namespace qcstar {

/// Laurent polynomial sum_n c_n q^n with rational coefficients. The
/// deformation parameter q stays symbolic; zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Laurent(const Rational& c);               // NOLINT(google-explicit-constructor)

    static Laurent monomial(const Rational& c, int exponent);
    static Laurent q_power(int exponent) { return monomial(Rational(1), exponent); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;

    bool operator==(const Laurent&) const = default;

    /// q -> q^k.
    Laurent rescale_variable(int k) const;
    double evaluate(double q) const { return evaluate_as(q); }

    /// Evaluation in any real floating type constructible from Rational.
    template <typename Real>
    Real evaluate_as(const Real& q) const {
        Real sum(0);
        for (const auto& [e, c] : terms_) {
            Real t = static_cast<Real>(c);
            const Real base = e < 0 ? Real(1) / q : q;
            for (int i = 0; i < (e < 0 ? -e : e); ++i) t *= base;
            sum += t;
        }
        return sum;
    }
    /// Single-term coefficient without a q-dependence.
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Rendered in the expression grammar, e.g. "(3/2)q^-4 - q^2 + 1".
    std::string to_string() const;

private:
    std::map<int, Rational> terms_;
};

}  // namespace qcstar
