#include "qcstar/representation.hpp"

#include <algorithm>
#include <cmath>

namespace qcstar {

void detail::require_params(const RepParams& p) {
    if (!(p.q > 0.0 && p.q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
    if (p.dim < 4) throw std::invalid_argument("dimension must be at least 4");
}

double ResidualReport::max_residual() const {
    double worst = 0.0;
    for (const auto& r : relations) worst = std::max(worst, r.residual);
    return worst;
}

bool ResidualReport::any_block_empty() const {
    return std::any_of(relations.begin(), relations.end(),
                       [](const RelationResidual& r) { return r.block_empty; });
}

std::vector<double> diagonal_of(const Representation& r, std::string_view generator) {
    const Symbol s = r.presentation()->alphabet()->find(generator);
    if (s < 0) throw AlgebraError(r.name() + ": unknown generator '" + std::string(generator) + "'");
    const SparseOperator& m = r.image(s);
    std::vector<double> diagonal(static_cast<std::size_t>(r.dim()), 0.0);
    for (Eigen::Index c = 0; c < m.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(m, c); it; ++it) {
            if (it.row() != it.col() || it.value().imag() != 0.0)
                throw NonDiagonalGenerator(std::string(generator) + " is not real diagonal in " + r.name());
            diagonal[static_cast<std::size_t>(it.row())] = it.value().real();
        }
    return diagonal;
}

SpectrumReport spectrum_check(const Representation& r, std::string_view generator,
                              const std::vector<double>& expected) {
    SpectrumReport out{diagonal_of(r, generator), expected, 0.0};
    if (expected.size() != out.diagonal.size())
        throw std::invalid_argument("expected spectrum has the wrong length");
    for (std::size_t k = 0; k < expected.size(); ++k)
        out.max_deviation = std::max(out.max_deviation, std::abs(out.diagonal[k] - expected[k]));
    return out;
}

std::vector<double> expected_spectrum(std::string_view rep, std::string_view generator, double q,
                                      Eigen::Index dim) {
    std::vector<double> out;
    auto fill = [&](double sign, int step, int offset) {
        for (Eigen::Index k = 0; k < dim; ++k) out.push_back(sign * std::pow(q, step * k + offset));
    };
    if ((rep == "rho" || rep == "rho_rp2") && generator == "P")
        fill(1.0, 4, 0);
    else if (rep == "rho_plus" && generator == "b")
        fill(1.0, 2, 2);
    else if (rep == "rho_minus" && generator == "b")
        fill(-1.0, 2, 2);
    else if (rep == "pi_plus" && generator == "K")
        fill(1.0, 2, 0);
    else if (rep == "pi_minus" && generator == "K")
        fill(-1.0, 2, 0);
    else
        throw std::invalid_argument("no closed-form spectrum for " + std::string(generator) + " under " +
                                    std::string(rep));
    return out;
}

}  // namespace qcstar
