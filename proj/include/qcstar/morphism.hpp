#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcstar/algebra.hpp"
#include "qcstar/presentations.hpp"

namespace qcstar {

/// Algebra map given by images of the source generators. Images of adjoint
/// symbols are derived through the involution, which makes the map
/// star-compatible by construction.
class GeneratorMap {
public:
    /// `images` pairs a base generator name of the source with an expression
    /// in the target's grammar.
    GeneratorMap(std::string name, PresentationPtr source, PresentationPtr target,
                 const std::vector<std::pair<std::string, std::string>>& images);

    const std::string& name() const { return name_; }
    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }
    const Element& image(Symbol s) const { return images_.at(static_cast<std::size_t>(s)); }
    bool star_compatible() const { return star_compatible_; }
    bool is_endomorphism() const;

private:
    std::string name_;
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<Element> images_;
    bool star_compatible_ = false;
};

/// Linear multiplicative extension of the generator images, reduced in the target.
Element apply_morphism(const GeneratorMap& m, const Element& x);

struct RelationResidue {
    std::string relation;  // rendered source rule
    Element residue;       // normal_form(m(lhs) - m(rhs)) in the target
};

struct MorphismReport {
    std::string morphism;
    std::vector<RelationResidue> relations;
    bool valid() const;
};

MorphismReport verify_morphism(const GeneratorMap& m);

/// True iff m(x) - x reduces to zero; m must be an endomorphism.
bool is_fixed(const GeneratorMap& m, const Element& x);

/// True iff m∘m sends every generator to itself (after reduction).
bool is_involutive(const GeneratorMap& m);

/// F : sphere(s=1) -> suq2_mod_b, K -> q^-2 b, L -> a.
GeneratorMap morphism_F();
/// r1 : K -> -K, L -> L on sphere(s=1).
GeneratorMap morphism_r1();
/// r2 : K -> -K, L -> -L on sphere(s=1).
GeneratorMap morphism_r2();
/// rp2 -> sphere(s=1), P -> K^2, R -> L^2, T -> K L.
GeneratorMap morphism_rp2_inclusion();
/// disc(q^4) -> sphere(s=1), x -> L*. Its image is the r1-fixed subalgebra.
GeneratorMap morphism_disc_embedding();

/// Dispatch on "F", "r1", "r2", "rp2-inclusion", "disc-embedding".
GeneratorMap named_morphism(std::string_view name);

}  // namespace qcstar
