#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qcstar/morphism.hpp"
#include "qcstar/presentations.hpp"
#include "qcstar/scalar.hpp"

namespace qcstar {

template <typename Scalar>
using BasicSparseOperator = Eigen::SparseMatrix<Scalar>;
template <typename Scalar>
using BasicDenseOperator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using SparseOperator = BasicSparseOperator<Complex>;
using DenseOperator = BasicDenseOperator<Complex>;

/// Diagonal block of a (possibly direct-sum) representation space.
struct Block {
    Eigen::Index offset;
    Eigen::Index size;
};

/// Truncation of a *-representation to span{e_0, ..., e_{N-1}} per block.
/// Basis vectors outside the block are dropped. Scalar is the entry type of
/// the generator images; real scalars suffice for every representation
/// except rho_theta.
template <typename Scalar>
class BasicRepresentation {
public:
    using Real = typename ScalarTraits<Scalar>::Real;
    using Sparse = BasicSparseOperator<Scalar>;

    BasicRepresentation(std::string name, PresentationPtr presentation, Real q, std::vector<Sparse> images,
                        std::vector<Block> blocks)
        : name_(std::move(name)),
          presentation_(std::move(presentation)),
          q_(std::move(q)),
          images_(std::move(images)),
          blocks_(std::move(blocks)) {
        if (images_.size() != presentation_->alphabet()->size())
            throw std::invalid_argument(name_ + ": one image per generator symbol required");
        for (auto& m : images_) {
            m.makeCompressed();
            for (Eigen::Index c = 0; c < m.outerSize(); ++c)
                for (typename Sparse::InnerIterator it(m, c); it; ++it)
                    shift_bound_ = std::max(shift_bound_, static_cast<int>(std::abs(it.row() - it.col())));
        }
    }

    const std::string& name() const { return name_; }
    const PresentationPtr& presentation() const { return presentation_; }
    /// Numeric value substituted for the symbolic q in coefficients.
    const Real& q() const { return q_; }
    Eigen::Index dim() const { return images_.empty() ? 0 : images_.front().rows(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Sparse& image(Symbol s) const { return images_.at(static_cast<std::size_t>(s)); }
    const std::vector<Sparse>& images() const { return images_; }

    /// Largest |row - col| over nonzero entries of the generator images.
    int shift_bound() const { return shift_bound_; }

    /// Leading `size - margin` indices of every block, where a product of
    /// `margin / shift_bound + 1` generators cannot see the truncation.
    std::vector<Eigen::Index> compressed_indices(Eigen::Index margin) const {
        std::vector<Eigen::Index> idx;
        for (const Block& b : blocks_)
            for (Eigen::Index i = 0; i < b.size - margin; ++i) idx.push_back(b.offset + i);
        return idx;
    }

private:
    std::string name_;
    PresentationPtr presentation_;
    Real q_;
    std::vector<Sparse> images_;
    std::vector<Block> blocks_;
    int shift_bound_ = 0;
};

using Representation = BasicRepresentation<Complex>;

struct RepParams {
    double q = 0.5;
    Eigen::Index dim = 64;
    double theta = 0.0;
};

template <typename Scalar>
BasicSparseOperator<Scalar> evaluate_sparse(const Element& x, const BasicRepresentation<Scalar>& r) {
    using Real = typename ScalarTraits<Scalar>::Real;
    if (!(*x.alphabet() == *r.presentation()->alphabet()))
        throw AlgebraError("element does not match representation " + r.name());
    const Eigen::Index n = r.dim();
    BasicSparseOperator<Scalar> sum(n, n);
    for (const auto& [w, c] : x.terms()) {
        BasicSparseOperator<Scalar> prod(n, n);
        prod.setIdentity();
        for (Symbol s : w) prod = (prod * r.image(s)).pruned();
        sum += Scalar(c.evaluate_as(Real(r.q()))) * prod;
    }
    return sum;
}

template <typename Scalar>
BasicDenseOperator<Scalar> evaluate(const Element& x, const BasicRepresentation<Scalar>& r) {
    return BasicDenseOperator<Scalar>(evaluate_sparse(x, r));
}

/// Representation of m's source obtained by evaluating generator images in r.
template <typename Scalar>
BasicRepresentation<Scalar> compose(const GeneratorMap& m, const BasicRepresentation<Scalar>& r,
                                    std::string name) {
    if (!(*m.target()->alphabet() == *r.presentation()->alphabet()))
        throw AlgebraError(name + ": representation does not match the morphism target");
    std::vector<BasicSparseOperator<Scalar>> img;
    for (std::size_t i = 0; i < m.source()->alphabet()->size(); ++i)
        img.push_back(evaluate_sparse(m.image(static_cast<Symbol>(i)), r));
    return BasicRepresentation<Scalar>(std::move(name), m.source(), r.q(), std::move(img), r.blocks());
}

template <typename Scalar>
BasicRepresentation<Scalar> direct_sum(const BasicRepresentation<Scalar>& a, const BasicRepresentation<Scalar>& b,
                                       std::string name) {
    using Sparse = BasicSparseOperator<Scalar>;
    if (!(*a.presentation()->alphabet() == *b.presentation()->alphabet()) || a.q() != b.q())
        throw AlgebraError(name + ": summands must share presentation and q");
    const Eigen::Index na = a.dim(), nb = b.dim();
    std::vector<Sparse> img;
    for (std::size_t s = 0; s < a.images().size(); ++s) {
        std::vector<Eigen::Triplet<Scalar>> t;
        auto add = [&t](const Sparse& m, Eigen::Index off) {
            for (Eigen::Index c = 0; c < m.outerSize(); ++c)
                for (typename Sparse::InnerIterator it(m, c); it; ++it)
                    t.emplace_back(it.row() + off, it.col() + off, it.value());
        };
        add(a.images()[s], 0);
        add(b.images()[s], na);
        Sparse m(na + nb, na + nb);
        m.setFromTriplets(t.begin(), t.end());
        img.push_back(std::move(m));
    }
    std::vector<Block> blocks = a.blocks();
    for (Block blk : b.blocks()) blocks.push_back(Block{blk.offset + na, blk.size});
    return BasicRepresentation<Scalar>(std::move(name), a.presentation(), a.q(), std::move(img), std::move(blocks));
}

namespace detail {

// e_k -> weight(k) e_{k + shift}, dropping targets outside [0, n).
template <typename Scalar>
BasicSparseOperator<Scalar> weighted_shift(Eigen::Index n, Eigen::Index shift,
                                           const std::function<Scalar(Eigen::Index)>& weight) {
    std::vector<Eigen::Triplet<Scalar>> t;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index to = k + shift;
        if (to < 0 || to >= n) continue;
        const Scalar w = weight(k);
        if (w != Scalar(0)) t.emplace_back(to, k, w);
    }
    BasicSparseOperator<Scalar> m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

template <typename Real>
Real int_pow(const Real& q, Eigen::Index e) {
    if constexpr (std::is_floating_point_v<Real>) return std::pow(q, static_cast<Real>(e));
    Real r(1);
    const Real base = e < 0 ? Real(1) / q : q;
    for (Eigen::Index i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
}

void require_params(const RepParams& p);

// rho_+- of SU_{q^2}(2)/<b - b*>.
template <typename Scalar>
BasicRepresentation<Scalar> rho_sign(int sign, const typename ScalarTraits<Scalar>::Real& q, Eigen::Index n,
                                     std::string name) {
    using Real = typename ScalarTraits<Scalar>::Real;
    using std::sqrt;
    std::vector<BasicSparseOperator<Scalar>> img(3);
    img[0] = weighted_shift<Scalar>(n, -1, [&](Eigen::Index k) { return Scalar(sqrt(Real(1) - int_pow(q, 4 * k))); });
    img[1] = weighted_shift<Scalar>(
        n, +1, [&](Eigen::Index k) { return Scalar(sqrt(Real(1) - int_pow(q, 4 * (k + 1)))); });
    img[2] = weighted_shift<Scalar>(n, 0, [&](Eigen::Index k) { return Scalar(Real(sign) * int_pow(q, 2 * (k + 1))); });
    return BasicRepresentation<Scalar>(std::move(name), suq2_mod_b_presentation(), q, std::move(img), {Block{0, n}});
}

template <typename Scalar>
BasicRepresentation<Scalar> rho_rp2(const typename ScalarTraits<Scalar>::Real& q, Eigen::Index n) {
    using Real = typename ScalarTraits<Scalar>::Real;
    using std::sqrt;
    auto f = [&](Eigen::Index j) { return Real(1) - int_pow(q, 4 * j); };
    std::vector<BasicSparseOperator<Scalar>> img(5);
    img[0] = weighted_shift<Scalar>(n, 0, [&](Eigen::Index k) { return Scalar(int_pow(q, 4 * k)); });
    img[1] = weighted_shift<Scalar>(n, -1, [&](Eigen::Index k) { return Scalar(int_pow(q, 2 * (k - 1)) * sqrt(f(k))); });
    img[2] = weighted_shift<Scalar>(n, +1, [&](Eigen::Index k) { return Scalar(int_pow(q, 2 * k) * sqrt(f(k + 1))); });
    img[3] = weighted_shift<Scalar>(n, -2, [&](Eigen::Index k) { return Scalar(sqrt(f(k) * f(k - 1))); });
    img[4] = weighted_shift<Scalar>(n, +2, [&](Eigen::Index k) { return Scalar(sqrt(f(k + 1) * f(k + 2))); });
    return BasicRepresentation<Scalar>("rho", rp2_presentation(), q, std::move(img), {Block{0, n}});
}

}  // namespace detail

/// Names: rho_plus, rho_minus, rho_pm (suq2_mod_b); pi_plus, pi_minus, pi_pm
/// (sphere, through F); rho (alias rho_rp2), rho_theta (rp2, complex scalars
/// only); pi_disc (disc, through the embedding into the sphere).
template <typename Scalar = Complex>
BasicRepresentation<Scalar> build_rep(std::string_view name, const RepParams& params = {}) {
    using Real = typename ScalarTraits<Scalar>::Real;
    using detail::rho_sign;
    detail::require_params(params);
    const Real q(params.q);
    const Eigen::Index n = params.dim;
    if (name == "rho_plus") return rho_sign<Scalar>(+1, q, n, "rho_plus");
    if (name == "rho_minus") return rho_sign<Scalar>(-1, q, n, "rho_minus");
    if (name == "rho_pm")
        return direct_sum(rho_sign<Scalar>(+1, q, n, "rho_plus"), rho_sign<Scalar>(-1, q, n, "rho_minus"), "rho_pm");
    if (name == "pi_plus") return compose(morphism_F(), rho_sign<Scalar>(+1, q, n, "rho_plus"), "pi_plus");
    if (name == "pi_minus") return compose(morphism_F(), rho_sign<Scalar>(-1, q, n, "rho_minus"), "pi_minus");
    if (name == "pi_pm") {
        const GeneratorMap F = morphism_F();
        return direct_sum(compose(F, rho_sign<Scalar>(+1, q, n, "rho_plus"), "pi_plus"),
                          compose(F, rho_sign<Scalar>(-1, q, n, "rho_minus"), "pi_minus"), "pi_pm");
    }
    if (name == "rho" || name == "rho_rp2") return detail::rho_rp2<Scalar>(q, n);
    if (name == "rho_theta") {
        if constexpr (ScalarTraits<Scalar>::is_complex) {
            const Complex z = std::polar(1.0, params.theta);
            std::vector<BasicSparseOperator<Scalar>> img(5, BasicSparseOperator<Scalar>(1, 1));
            img[3].insert(0, 0) = Scalar(z);
            img[4].insert(0, 0) = Scalar(std::conj(z));
            return BasicRepresentation<Scalar>("rho_theta", rp2_presentation(), q, std::move(img), {Block{0, 1}});
        } else {
            throw std::invalid_argument("rho_theta needs a complex scalar type");
        }
    }
    if (name == "pi_disc") {
        // disc at Q realized inside the sphere at q = Q^{1/4} via x -> L*.
        using std::sqrt;
        const Real root = sqrt(sqrt(q));
        auto via = compose(morphism_disc_embedding(),
                           compose(morphism_F(), rho_sign<Scalar>(+1, root, n, "rho_plus"), "pi_plus"), "pi_disc");
        return BasicRepresentation<Scalar>("pi_disc", disc_presentation(1), q, via.images(), via.blocks());
    }
    throw std::invalid_argument("unknown representation '" + std::string(name) + "'");
}

/// Max |entry| of m restricted to rows and columns in `idx`.
template <typename Scalar>
double max_abs_on(const BasicDenseOperator<Scalar>& m, const std::vector<Eigen::Index>& idx) {
    double worst = 0.0;
    for (Eigen::Index i : idx)
        for (Eigen::Index j : idx) worst = std::max(worst, magnitude(m(i, j)));
    return worst;
}

/// Margin guarding the truncation for an element of the given degree. A word
/// of length d applied to e_j only passes through indices up to j + b(d - 1),
/// so that margin keeps every intermediate vector inside the truncation. Never
/// less than b, which gives the (N - b) corner for the quadratic relations.
template <typename Scalar>
Eigen::Index margin_for_degree(const BasicRepresentation<Scalar>& r, std::size_t degree) {
    const auto steps = static_cast<Eigen::Index>(std::max<std::size_t>(degree, 2) - 1);
    return static_cast<Eigen::Index>(r.shift_bound()) * steps;
}

struct RelationResidual {
    std::string relation;
    double residual;  // max |entry| of lhs - rhs on the compressed block
    Eigen::Index margin;
    bool block_empty;
};

struct ResidualReport {
    std::string representation;
    std::vector<RelationResidual> relations;

    double max_residual() const;
    bool any_block_empty() const;
};

template <typename Scalar>
ResidualReport relation_residuals(const AlgebraPresentation& p, const BasicRepresentation<Scalar>& r) {
    if (!(*p.alphabet() == *r.presentation()->alphabet()))
        throw AlgebraError("representation " + r.name() + " is not over " + p.name());
    ResidualReport report{r.name(), {}};
    for (std::size_t i = 0; i < p.rules().size(); ++i) {
        const RewriteRule& rule = p.rules()[i];
        const Element lhs(p.alphabet(), rule.lhs);
        const Eigen::Index margin = margin_for_degree(r, std::max(rule.lhs.size(), rule.rhs.degree()));
        const auto idx = r.compressed_indices(margin);
        const auto diff = evaluate(lhs - rule.rhs, r);
        report.relations.push_back(
            RelationResidual{p.rule_label(i), idx.empty() ? 0.0 : max_abs_on(diff, idx), margin, idx.empty()});
    }
    return report;
}

struct SpectrumReport {
    std::vector<double> diagonal;
    std::vector<double> expected;
    double max_deviation;
};

class NonDiagonalGenerator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real diagonal of a generator image. Throws NonDiagonalGenerator if the
/// image has off-diagonal or complex entries.
std::vector<double> diagonal_of(const Representation& r, std::string_view generator);

/// Compares the real diagonal of a diagonal generator against `expected`
/// entry by entry. Throws NonDiagonalGenerator otherwise.
SpectrumReport spectrum_check(const Representation& r, std::string_view generator,
                              const std::vector<double>& expected);

/// Closed-form diagonal for the diagonal generators of the built-in
/// representations: P under rho -> q^{4k}; b under rho_plus/minus ->
/// +-q^{2(k+1)}; K under pi_plus/minus -> +-q^{2k}.
std::vector<double> expected_spectrum(std::string_view rep, std::string_view generator, double q,
                                      Eigen::Index dim);

}  // namespace qcstar
