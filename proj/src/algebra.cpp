#include "qcstar/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qcstar {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Symbol s = gens_[i].star;
        if (s < 0 || static_cast<std::size_t>(s) >= gens_.size() ||
            gens_[static_cast<std::size_t>(s)].star != static_cast<Symbol>(i))
            throw std::invalid_argument("alphabet star table is not an involution");
    }
}

Symbol Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<Symbol>(i);
    return -1;
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i) out << ' ';
        out << (*this)[w[i]].name;
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

Element::Element(std::shared_ptr<const Alphabet> alphabet, const Word& w, Laurent c)
    : alphabet_(std::move(alphabet)) {
    add_term(w, c);
}

void Element::add_term(const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check_compatible(const Element& o) const {
    if (alphabet_ != o.alphabet_ && !(alphabet_ && o.alphabet_ && *alphabet_ == *o.alphabet_))
        throw AlgebraError("generator-set mismatch");
}

Element& Element::operator+=(const Element& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    a.check_compatible(b);
    Element out(a.alphabet_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

Element operator*(const Laurent& c, const Element& x) {
    Element out(x.alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [w, cx] : x.terms_) out.add_term(w, c * cx);
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        const std::string word = alphabet_->render(w);
        const bool single = c.terms().size() == 1;
        const bool negative = single && c.terms().begin()->second < 0;
        const Laurent mag = negative ? -c : c;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (w.empty()) {
            out << (single ? mag.to_string() : "(" + mag.to_string() + ")");
        } else if (mag == Laurent(1)) {
            out << word;
        } else {
            out << (single ? mag.to_string() : "(" + mag.to_string() + ")") << ' ' << word;
        }
    }
    return out.str();
}

Element scale(const Element& x, const Laurent& c) { return c * x; }

Element power(const Element& x, unsigned n) {
    Element out = Element::unit(x.alphabet());
    for (unsigned i = 0; i < n; ++i) out = out * x;
    return out;
}

Element involution(const Element& x) {
    Element out(x.alphabet());
    const Alphabet& a = *x.alphabet();
    for (const auto& [w, c] : x.terms()) {
        Word r(w.rbegin(), w.rend());
        for (Symbol& s : r) s = a.star(s);
        out.add_term(r, c);
    }
    return out;
}

AlgebraPresentation::AlgebraPresentation(std::string name, std::shared_ptr<const Alphabet> alphabet,
                                         std::vector<RewriteRule> rules,
                                         NormalFormPredicate normal_monomial)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      normal_monomial_(std::move(normal_monomial)) {
    DegLex less;
    for (const auto& r : rules_) {
        if (r.lhs.empty()) throw std::logic_error(name_ + ": empty rule left side");
        for (const auto& [w, c] : r.rhs.terms())
            if (!less(w, r.lhs))
                throw AlgebraError(name_ + ": rule " + alphabet_->render(r.lhs) +
                                   " is not order-decreasing");
    }
}

Element AlgebraPresentation::generator(std::string_view name) const {
    const Symbol s = alphabet_->find(name);
    if (s < 0) throw AlgebraError(name_ + ": unknown generator '" + std::string(name) + "'");
    return Element(alphabet_, Word{s});
}

std::string AlgebraPresentation::rule_label(std::size_t i) const {
    const auto& r = rules_.at(i);
    return alphabet_->render(r.lhs) + " -> " + r.rhs.to_string();
}

std::size_t AlgebraPresentation::match(const Word& w, std::size_t& pos) const {
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const Word& l = rules_[i].lhs;
            if (p + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) {
                pos = p;
                return i;
            }
        }
    return npos;
}

Element normal_form(const Element& x, const AlgebraPresentation& p, std::size_t budget) {
    if (x.alphabet() != p.alphabet() && !(*x.alphabet() == *p.alphabet()))
        throw AlgebraError("element does not belong to presentation " + p.name());

    // Rewriting strictly lowers words in DegLex, so processing the largest
    // pending word first combines like terms before they are expanded.
    Element::Terms pending = x.terms();
    Element out(p.alphabet());
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        Word w = top->first;
        Laurent c = std::move(top->second);
        pending.erase(top);

        std::size_t pos = 0;
        const std::size_t r = p.match(w, pos);
        if (r == AlgebraPresentation::npos) {
            out.add_term(w, c);
            continue;
        }
        if (++steps > budget)
            throw RewriteBudgetExceeded(p.name() + ": rewrite budget of " + std::to_string(budget) +
                                        " steps exceeded");
        const RewriteRule& rule = p.rules()[r];
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
            Laurent nc = c * rc;
            auto [it, inserted] = pending.emplace(std::move(nw), nc);
            if (!inserted) {
                it->second += nc;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return out;
}

namespace {

// One rewrite of w by rule r at pos.
Element rewrite_once(const AlgebraPresentation& p, const Word& w, std::size_t r, std::size_t pos) {
    const RewriteRule& rule = p.rules()[r];
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    return Element(p.alphabet(), prefix) * rule.rhs * Element(p.alphabet(), suffix);
}

}  // namespace

std::vector<OverlapResult> unresolved_overlaps(const AlgebraPresentation& p) {
    std::vector<OverlapResult> out;
    const auto& rules = p.rules();
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            // suffix of a equals prefix of b, proper overlap
            for (std::size_t k = 1; k < a.size() && k <= b.size(); ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Word w = a;
                w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
                Element left = rewrite_once(p, w, i, 0);
                Element right = rewrite_once(p, w, j, a.size() - k);
                Element diff = normal_form(left - right, p);
                if (!diff.is_zero()) out.push_back(OverlapResult{i, j, w, std::move(diff)});
            }
        }
    return out;
}

}  // namespace qcstar
