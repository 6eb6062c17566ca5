#include "qcstar/expression.hpp"

#include <cctype>
#include <vector>

namespace qcstar {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::shared_ptr<const Alphabet> alphabet)
        : text_(text), alphabet_(std::move(alphabet)) {
        for (std::size_t i = 0; i < alphabet_->size(); ++i) {
            const std::string& n = (*alphabet_)[static_cast<Symbol>(i)].name;
            if (!n.empty() && n.back() != '*') bases_.push_back(n);
        }
    }

    Element parse() {
        Element e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ExpressionError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    Element expr() {
        Element sum(alphabet_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        for (;;) {
            Element t = term();
            sum += negate ? -t : t;
            if (peek('+')) {
                ++pos_;
                negate = false;
            } else if (peek('-')) {
                ++pos_;
                negate = true;
            } else {
                break;
            }
        }
        return sum;
    }

    Element term() {
        if (!at_atom_start()) fail("expected a factor");
        Element prod = factor();
        while (at_atom_start()) prod = prod * factor();
        return prod;
    }

    long integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
        try {
            return std::stol(digits);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    Element factor() {
        Element base = atom();
        if (!peek('^')) return base;
        ++pos_;
        const long n = integer();
        if (n >= 0) return power(base, static_cast<unsigned>(n));
        // Only scalar monomials c q^e are invertible here.
        const auto& terms = base.terms();
        if (terms.size() != 1 || !terms.begin()->first.empty() ||
            terms.begin()->second.terms().size() != 1)
            fail("negative power of a non-invertible factor");
        const auto& [e, c] = *terms.begin()->second.terms().begin();
        const Element inv = Element::unit(alphabet_, Laurent::monomial(Rational(1) / c, -e));
        return power(inv, static_cast<unsigned>(-n));
    }

    Element atom() {
        skip_ws();
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(integer());
            if (peek('/')) {
                ++pos_;
                const long den = integer();
                if (den == 0) fail("division by zero");
                value /= den;
            }
            return Element::unit(alphabet_, Laurent(value));
        }
        // Longest generator base name, else the scalar q.
        std::string best;
        for (const auto& b : bases_)
            if (b.size() > best.size() && text_.substr(pos_, b.size()) == b) best = b;
        if (best.empty()) {
            if (c == 'q') {
                ++pos_;
                return Element::unit(alphabet_, Laurent::q_power(1));
            }
            fail("unknown generator at '" + std::string(text_.substr(pos_, 1)) + "'");
        }
        pos_ += best.size();
        Symbol s = alphabet_->find(best);
        if (pos_ < text_.size() && (text_[pos_] == '\'' || text_[pos_] == '*')) {
            ++pos_;
            s = alphabet_->star(s);
        }
        return Element(alphabet_, Word{s});
    }

    std::string_view text_;
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<std::string> bases_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const std::shared_ptr<const Alphabet>& alphabet) {
    return Parser(text, alphabet).parse();
}

}  // namespace qcstar
