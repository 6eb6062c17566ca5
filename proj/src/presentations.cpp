#include "qcstar/presentations.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "qcstar/expression.hpp"

namespace qcstar {

namespace {

using AlphabetPtr = std::shared_ptr<const Alphabet>;

RewriteRule rule(const AlphabetPtr& a, std::string_view lhs, std::string_view rhs) {
    const Element l = parse_element(lhs, a);
    if (l.terms().size() != 1 || !(l.terms().begin()->second == Laurent(1)))
        throw std::logic_error("rule left side must be a bare word");
    return RewriteRule{l.terms().begin()->first, parse_element(rhs, a)};
}

// True iff the consecutive symbols of w only follow the allowed transitions.
template <typename Allowed>
bool follows(const Word& w, Allowed allowed) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!allowed(w[i - 1], w[i])) return false;
    return true;
}

}  // namespace

PresentationPtr sphere_presentation(const Rational& s) {
    if (s < 0 || s > 1) throw std::invalid_argument("sphere parameter s must lie in [0, 1]");
    auto a = std::make_shared<const Alphabet>(
        std::vector<Generator>{{"K", 0}, {"L", 2}, {"L*", 1}});
    const Element K(a, Word{0});
    const Laurent s2(s * s), one_minus_s2(1 - s * s);
    std::vector<RewriteRule> rules{
        rule(a, "L K", "q^2 K L"),
        rule(a, "L* K", "q^-2 K L*"),
        // L*L + K^2 = (1 - s^2) K + s^2
        RewriteRule{Word{2, 1}, one_minus_s2 * K + Element::unit(a, s2) - K * K},
        // LL* + q^4 K^2 = (1 - s^2) q^2 K + s^2
        RewriteRule{Word{1, 2}, (one_minus_s2 * Laurent::q_power(2)) * K + Element::unit(a, s2) -
                                    Laurent::q_power(4) * (K * K)},
    };
    // K^a L^b or K^a (L*)^c
    auto normal = [](const Word& w) {
        return follows(w, [](Symbol x, Symbol y) { return x == 0 || x == y; });
    };
    std::string name = "sphere";
    if (s != 1) name += "(s=" + s.str() + ")";
    return std::make_shared<const AlgebraPresentation>(name, a, std::move(rules), normal);
}

PresentationPtr disc_presentation(int q_exponent) {
    if (q_exponent <= 0) throw std::invalid_argument("disc exponent must be positive");
    auto a = std::make_shared<const Alphabet>(std::vector<Generator>{{"x", 1}, {"x*", 0}});
    const Laurent Q = Laurent::q_power(q_exponent);
    const Element x(a, Word{0}), xs(a, Word{1});
    std::vector<RewriteRule> rules{
        RewriteRule{Word{1, 0}, Q * (x * xs) + Element::unit(a, Laurent(1) - Q)},
    };
    auto normal = [](const Word& w) {
        return follows(w, [](Symbol x0, Symbol y) { return x0 <= y; });
    };
    std::string name = q_exponent == 1 ? "disc" : "disc(q^" + std::to_string(q_exponent) + ")";
    return std::make_shared<const AlgebraPresentation>(name, a, std::move(rules), normal);
}

PresentationPtr rp2_presentation() {
    // P=0, T=1, T*=2, R=3, R*=4
    auto a = std::make_shared<const Alphabet>(
        std::vector<Generator>{{"P", 0}, {"T", 2}, {"T*", 1}, {"R", 4}, {"R*", 3}});
    std::vector<RewriteRule> rules{
        // q-commutation and its adjoints
        rule(a, "T P", "q^4 P T"),
        rule(a, "T* P", "q^-4 P T*"),
        rule(a, "R P", "q^8 P R"),
        rule(a, "R* P", "q^-8 P R*"),
        rule(a, "R T", "q^4 T R"),
        rule(a, "R* T*", "q^-4 T* R*"),
        // T^2 = q^2 PR and adjoint (T*)^2 = q^2 R* P
        rule(a, "T T", "q^2 P R"),
        rule(a, "T* T*", "q^-6 P R*"),
        // R T* = q^2 T(-q^4 P + 1), R* T = q^-2 T*(-P + 1), and adjoints
        rule(a, "R T*", "q^2 T (-q^4 P + 1)"),
        rule(a, "T R*", "q^2 (-q^4 P + 1) T*"),
        rule(a, "R* T", "q^-2 T* (-P + 1)"),
        rule(a, "T* R", "q^-2 (-P + 1) T"),
        rule(a, "R R*", "q^12 P^2 - q^4 (1 + q^4) P + 1"),
        rule(a, "R* R", "q^-4 P^2 - (1 + q^-4) P + 1"),
        rule(a, "T T*", "-q^4 P^2 + P"),
        rule(a, "T* T", "q^-4 (P - P^2)"),
    };
    auto normal = [](const Word& w) {
        return follows(w, [](Symbol x, Symbol y) {
            if (x == 0) return true;                  // P -> anything
            if (x == 1 || x == 3) return y == 3;      // T, R -> R
            return y == 4;                            // T*, R* -> R*
        });
    };
    // Right sides above are not all in normal form; reduce them once so the
    // stored rules are canonical.
    AlgebraPresentation raw("rp2", a, rules, normal);
    for (auto& r : rules) r.rhs = normal_form(r.rhs, raw);
    return std::make_shared<const AlgebraPresentation>("rp2", a, std::move(rules), normal);
}

PresentationPtr suq2_mod_b_presentation() {
    // a=0, a*=1, b=2 (b = b*)
    auto a = std::make_shared<const Alphabet>(
        std::vector<Generator>{{"a", 1}, {"a*", 0}, {"b", 2}});
    std::vector<RewriteRule> rules{
        rule(a, "b a", "q^-2 a b"),
        rule(a, "b a*", "q^2 a* b"),
        // aa* + b^2 = 1 and a*a + q^-4 b^2 = 1
        rule(a, "b b", "1 - a a*"),
        rule(a, "a* a", "q^-4 a a* + 1 - q^-4"),
    };
    auto normal = [](const Word& w) {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] < w[i - 1] || w[i - 1] == 2) return false;
        return true;
    };
    return std::make_shared<const AlgebraPresentation>("suq2_mod_b", a, std::move(rules), normal);
}

PresentationPtr presentation(std::string_view name, const PresentationParams& params) {
    if (name == "sphere") return sphere_presentation(params.s.value_or(Rational(1)));
    if (params.s) throw std::invalid_argument("parameter s applies to the sphere only");
    if (name == "disc") return disc_presentation(1);
    if (name == "rp2") return rp2_presentation();
    if (name == "suq2_mod_b") return suq2_mod_b_presentation();
    throw std::invalid_argument("unknown presentation '" + std::string(name) + "'");
}

double param_c_to_s(double c) {
    if (std::isnan(c) || c < 0) throw std::invalid_argument("Podles parameter c must be >= 0");
    if (std::isinf(c)) return 1.0;
    return 2.0 * std::sqrt(c) / (1.0 + std::sqrt(1.0 + 4.0 * c));
}

}  // namespace qcstar
