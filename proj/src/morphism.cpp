#include "qcstar/morphism.hpp"

#include <algorithm>
#include <optional>

#include "qcstar/expression.hpp"

namespace qcstar {

GeneratorMap::GeneratorMap(std::string name, PresentationPtr source, PresentationPtr target,
                           const std::vector<std::pair<std::string, std::string>>& images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
    const Alphabet& sa = *source_->alphabet();
    std::vector<std::optional<Element>> slots(sa.size());
    for (const auto& [gen, expr] : images) {
        const Symbol s = sa.find(gen);
        if (s < 0) throw AlgebraError(name_ + ": unknown source generator '" + gen + "'");
        Element img = normal_form(parse_element(expr, target_->alphabet()), *target_);
        slots[static_cast<std::size_t>(sa.star(s))] = normal_form(involution(img), *target_);
        slots[static_cast<std::size_t>(s)] = std::move(img);
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i])
            throw AlgebraError(name_ + ": no image for generator '" + sa[static_cast<Symbol>(i)].name + "'");
        images_.push_back(std::move(*slots[i]));
    }
    // Self-adjoint generators must map to self-adjoint elements.
    star_compatible_ = true;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Symbol s = static_cast<Symbol>(i);
        if (normal_form(involution(images_[i]), *target_) != images_[static_cast<std::size_t>(sa.star(s))])
            star_compatible_ = false;
    }
}

bool GeneratorMap::is_endomorphism() const {
    return source_ == target_ ||
           (source_->name() == target_->name() && *source_->alphabet() == *target_->alphabet());
}

Element apply_morphism(const GeneratorMap& m, const Element& x) {
    if (!(*x.alphabet() == *m.source()->alphabet()))
        throw AlgebraError(m.name() + ": element is not in the source algebra");
    const AlgebraPresentation& target = *m.target();
    Element out = target.zero();
    for (const auto& [w, c] : x.terms()) {
        Element prod = Element::unit(target.alphabet(), c);
        for (Symbol s : w) prod = normal_form(prod * m.image(s), target);
        out += prod;
    }
    return normal_form(out, target);
}

bool MorphismReport::valid() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const RelationResidue& r) { return r.residue.is_zero(); });
}

MorphismReport verify_morphism(const GeneratorMap& m) {
    MorphismReport report{m.name(), {}};
    const AlgebraPresentation& src = *m.source();
    for (std::size_t i = 0; i < src.rules().size(); ++i) {
        const RewriteRule& r = src.rules()[i];
        const Element lhs(src.alphabet(), r.lhs);
        Element residue = normal_form(apply_morphism(m, lhs) - apply_morphism(m, r.rhs), *m.target());
        report.relations.push_back(RelationResidue{src.rule_label(i), std::move(residue)});
    }
    // Self-adjoint generators: g = g* must survive the map as well.
    const Alphabet& sa = *src.alphabet();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const Symbol s = static_cast<Symbol>(i);
        if (sa.star(s) != s) continue;
        const Element& img = m.image(s);
        report.relations.push_back(RelationResidue{
            sa[s].name + " = " + sa[s].name + "*",
            normal_form(img - involution(img), *m.target())});
    }
    return report;
}

bool is_fixed(const GeneratorMap& m, const Element& x) {
    if (!m.is_endomorphism()) throw AlgebraError(m.name() + " is not an endomorphism");
    return normal_form(apply_morphism(m, x) - x, *m.target()).is_zero();
}

bool is_involutive(const GeneratorMap& m) {
    if (!m.is_endomorphism()) return false;
    const Alphabet& a = *m.source()->alphabet();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Symbol s = static_cast<Symbol>(i);
        const Element twice = apply_morphism(m, m.image(s));
        if (twice != normal_form(Element(m.source()->alphabet(), Word{s}), *m.source())) return false;
    }
    return true;
}

GeneratorMap morphism_F() {
    return GeneratorMap("F", sphere_presentation(), suq2_mod_b_presentation(),
                        {{"K", "q^-2 b"}, {"L", "a"}});
}

GeneratorMap morphism_r1() {
    auto s = sphere_presentation();
    return GeneratorMap("r1", s, s, {{"K", "-K"}, {"L", "L"}});
}

GeneratorMap morphism_r2() {
    auto s = sphere_presentation();
    return GeneratorMap("r2", s, s, {{"K", "-K"}, {"L", "-L"}});
}

GeneratorMap morphism_rp2_inclusion() {
    return GeneratorMap("rp2-inclusion", rp2_presentation(), sphere_presentation(),
                        {{"P", "K^2"}, {"R", "L^2"}, {"T", "K L"}});
}

GeneratorMap morphism_disc_embedding() {
    return GeneratorMap("disc-embedding", disc_presentation(4), sphere_presentation(),
                        {{"x", "L*"}});
}

GeneratorMap named_morphism(std::string_view name) {
    if (name == "F") return morphism_F();
    if (name == "r1") return morphism_r1();
    if (name == "r2") return morphism_r2();
    if (name == "rp2-inclusion") return morphism_rp2_inclusion();
    if (name == "disc-embedding") return morphism_disc_embedding();
    throw std::invalid_argument("unknown morphism '" + std::string(name) + "'");
}

}  // namespace qcstar
