#include "qcstar/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qcstar {

Laurent::Laurent(const Rational& c) {
    if (c != 0) terms_.emplace(0, c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
    Laurent l;
    if (c != 0) l.terms_.emplace(exponent, c);
    return l;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.emplace(ea + eb, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Laurent Laurent::rescale_variable(int k) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
    return out;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || e == 0) {
            if (denominator(mag) == 1)
                out << numerator(mag);
            else
                out << '(' << numerator(mag) << '/' << denominator(mag) << ')';
        }
        if (e != 0) {
            out << 'q';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

}  // namespace qcstar
