#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcstar/laurent.hpp"

namespace qcstar {

/// Generator index. Indices double as precedence in the monomial order.
using Symbol = int;
using Word = std::vector<Symbol>;

/// Degree-lexicographic order on words: shorter first, then by symbol index.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct Generator {
    std::string name;  // display name, e.g. "L*"
    Symbol star;       // index of the adjoint symbol; itself when self-adjoint

    bool operator==(const Generator&) const = default;
};

/// Ordered generator table with an involution on symbols.
class Alphabet {
public:
    explicit Alphabet(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](Symbol s) const { return gens_.at(static_cast<std::size_t>(s)); }
    Symbol star(Symbol s) const { return (*this)[s].star; }
    /// Symbol by display name ("L*" or "L"), or -1.
    Symbol find(std::string_view name) const;
    std::string render(const Word& w) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Generator> gens_;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite linear combination of words with Laurent coefficients.
class Element {
public:
    using Terms = std::map<Word, Laurent, DegLex>;

    explicit Element(std::shared_ptr<const Alphabet> alphabet) : alphabet_(std::move(alphabet)) {}
    Element(std::shared_ptr<const Alphabet> alphabet, const Word& w, Laurent c = Laurent(1));

    static Element unit(std::shared_ptr<const Alphabet> alphabet, Laurent c = Laurent(1)) {
        return Element(std::move(alphabet), Word{}, std::move(c));
    }

    const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    void add_term(const Word& w, const Laurent& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Laurent& c, const Element& x);
    Element operator-() const { return Laurent(-1) * *this; }

    /// Exact equality of stored terms (compare normal forms for algebra equality).
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void check_compatible(const Element& o) const;

    std::shared_ptr<const Alphabet> alphabet_;
    Terms terms_;
};

Element scale(const Element& x, const Laurent& c);
Element power(const Element& x, unsigned n);
/// Antilinear antihomomorphism; coefficients are real so only words reverse.
Element involution(const Element& x);

struct RewriteRule {
    Word lhs;
    Element rhs;
};

class RewriteBudgetExceeded : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// *-algebra given by generators and oriented rewrite rules. Each rule's left
/// word is strictly larger in DegLex than every word on its right side.
class AlgebraPresentation {
public:
    using NormalFormPredicate = std::function<bool(const Word&)>;

    AlgebraPresentation(std::string name, std::shared_ptr<const Alphabet> alphabet,
                        std::vector<RewriteRule> rules, NormalFormPredicate normal_monomial);

    const std::string& name() const { return name_; }
    const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    bool is_normal_monomial(const Word& w) const { return normal_monomial_(w); }

    Element generator(std::string_view name) const;
    Element one() const { return Element::unit(alphabet_); }
    Element zero() const { return Element(alphabet_); }

    /// "LHS -> RHS" label for rule i.
    std::string rule_label(std::size_t i) const;

    /// Index of the rule matching at the leftmost reducible position of w;
    /// sets `pos`. Returns npos if w is irreducible.
    std::size_t match(const Word& w, std::size_t& pos) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::string name_;
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<RewriteRule> rules_;
    NormalFormPredicate normal_monomial_;
};

inline constexpr std::size_t kDefaultRewriteBudget = 1'000'000;

/// Rewrites until no rule applies. Throws RewriteBudgetExceeded after
/// `budget` rule applications.
Element normal_form(const Element& x, const AlgebraPresentation& p,
                    std::size_t budget = kDefaultRewriteBudget);

struct OverlapResult {
    std::size_t first_rule;
    std::size_t second_rule;
    Word overlap;
    Element difference;  // normal form of the two one-step reductions' difference
};

/// All overlap ambiguities between rule left sides whose two reductions do
/// not meet. Empty means the rule set is confluent.
std::vector<OverlapResult> unresolved_overlaps(const AlgebraPresentation& p);

}  // namespace qcstar
