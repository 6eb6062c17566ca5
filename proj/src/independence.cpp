#include "qcstar/independence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <Eigen/SVD>

namespace qcstar {

namespace {

using Index = Eigen::Index;

// Offset d with rho(m) e_n proportional to e_{n+d}.
long coordinate_offset(BasisFamily f, int l) {
    switch (f) {
        case BasisFamily::PRT: return -1 - 2L * l;
        case BasisFamily::PRstarTstar: return 1 + 2L * l;
        case BasisFamily::PR: return -2L * l;
        case BasisFamily::PRstar: return 2L * l;
    }
    return 0;
}

// Smallest n with a nonzero image.
long first_index(BasisFamily f, int l) {
    switch (f) {
        case BasisFamily::PRT: return 2L * l + 1;
        case BasisFamily::PR: return 2L * l;
        default: return 0;
    }
}

template <typename Real>
Real sqrt_product(const Real& q, long from, long to) {
    using std::sqrt;
    Real w(1);
    for (long j = from; j <= to; ++j) w *= sqrt(Real(1) - detail::int_pow(q, 4 * j));
    return w;
}

// k-independent factor of <e_{n+d}, rho(P^k ...) e_n> / q^{4k(n+d)}.
template <typename Real>
Real shift_weight(BasisFamily f, long n, int l, const Real& q) {
    switch (f) {
        case BasisFamily::PRT:
            return detail::int_pow(q, 2 * (n - 1)) * sqrt_product(q, n, n) * sqrt_product(q, n - 2L * l, n - 1);
        case BasisFamily::PRstarTstar:
            return detail::int_pow(q, 2 * n) * sqrt_product(q, n + 1, n + 1) *
                   sqrt_product(q, n + 2, n + 1 + 2L * l);
        case BasisFamily::PR: return sqrt_product(q, n - 2L * l + 1, n);
        case BasisFamily::PRstar: return sqrt_product(q, n + 1, n + 2L * l);
    }
    return Real(0);
}

int max_l(const std::vector<BasisMonomial>& ms) {
    int l = 0;
    for (const auto& m : ms) l = std::max(l, m.l);
    return l;
}

int max_k(const std::vector<BasisMonomial>& ms) {
    int k = 0;
    for (const auto& m : ms) k = std::max(k, m.k);
    return k;
}

}  // namespace

std::string to_string(const BasisMonomial& m) {
    std::string s = "P^" + std::to_string(m.k);
    switch (m.family) {
        case BasisFamily::PRT: return s + " R^" + std::to_string(m.l) + " T";
        case BasisFamily::PRstarTstar: return s + " R*^" + std::to_string(m.l) + " T*";
        case BasisFamily::PR: return s + " R^" + std::to_string(m.l);
        case BasisFamily::PRstar: return s + " R*^" + std::to_string(m.l);
    }
    return s;
}

Element basis_element(const BasisMonomial& m, const std::shared_ptr<const Alphabet>& a) {
    constexpr Symbol P = 0, T = 1, Ts = 2, R = 3, Rs = 4;
    if (m.k < 0 || m.l < 0 || (m.family == BasisFamily::PRstar && m.l == 0))
        throw std::invalid_argument("not a basis monomial: " + to_string(m));
    Word w(static_cast<std::size_t>(m.k), P);
    const bool star = m.family == BasisFamily::PRstarTstar || m.family == BasisFamily::PRstar;
    w.insert(w.end(), static_cast<std::size_t>(m.l), star ? Rs : R);
    if (m.family == BasisFamily::PRT) w.push_back(T);
    if (m.family == BasisFamily::PRstarTstar) w.push_back(Ts);
    return Element(a, w);
}

std::vector<BasisMonomial> basis_family(int k_max, int l_max) {
    std::vector<BasisMonomial> out;
    for (BasisFamily f : {BasisFamily::PRT, BasisFamily::PRstarTstar, BasisFamily::PR, BasisFamily::PRstar})
        for (int l = f == BasisFamily::PRstar ? 1 : 0; l <= l_max; ++l)
            for (int k = 0; k <= k_max; ++k) out.push_back(BasisMonomial{f, k, l});
    return out;
}

template <typename Scalar>
std::vector<double> recover_coefficients(const BasicDenseOperator<Scalar>& rho_x,
                                         const std::vector<BasisMonomial>& monomials, double q_in) {
    using Real = typename ScalarTraits<Scalar>::Real;
    using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    const Real q(q_in);
    // Group by (family, l); each group is one Vandermonde system in k.
    std::map<std::pair<int, int>, int> group_kmax;
    for (const auto& m : monomials) {
        auto key = std::make_pair(static_cast<int>(m.family), m.l);
        auto [it, inserted] = group_kmax.emplace(key, m.k);
        if (!inserted) it->second = std::max(it->second, m.k);
    }
    std::map<std::pair<int, int>, Vector> solved;
    for (const auto& [key, kmax] : group_kmax) {
        const auto family = static_cast<BasisFamily>(key.first);
        const int l = key.second;
        const long off = coordinate_offset(family, l);
        const long n0 = first_index(family, l);
        const Index size = kmax + 1;
        // Nodes are x_0 t_i with t_i = q^{4i}; solving for a_k x_0^k keeps the
        // system as well conditioned as the one with x_0 = 1.
        const Real x0 = detail::int_pow(q, 4 * (n0 + off));
        Matrix vandermonde(size, size);
        Vector rhs(size);
        for (Index i = 0; i < size; ++i) {
            const long n = n0 + i;
            if (n + off >= rho_x.rows() || n >= rho_x.cols())
                throw InsufficientIndexBound("operator too small to recover " + to_string({family, kmax, l}));
            const Real t = detail::int_pow(q, 4 * i);
            for (Index k = 0; k < size; ++k) vandermonde(i, k) = detail::int_pow(t, k);
            rhs(i) = real_part(rho_x(n + off, n)) / shift_weight(family, n, l, q);
        }
        Vector a = vandermonde.fullPivLu().solve(rhs);
        for (Index k = 0; k < size; ++k) a(k) /= detail::int_pow(x0, k);
        solved.emplace(key, std::move(a));
    }
    std::vector<double> out;
    for (const auto& m : monomials)
        out.push_back(static_cast<double>(solved.at({static_cast<int>(m.family), m.l})(m.k)));
    return out;
}

template std::vector<double> recover_coefficients(const BasicDenseOperator<Complex>&,
                                                  const std::vector<BasisMonomial>&, double);
template std::vector<double> recover_coefficients(const BasicDenseOperator<HighPrecision>&,
                                                  const std::vector<BasisMonomial>&, double);

IndependenceReport independence_check(const std::vector<BasisMonomial>& monomials,
                                      const IndependenceOptions& options) {
    const int lmax = max_l(monomials), kmax = max_k(monomials);
    if (options.n_max < 2 * lmax + kmax + 2)
        throw InsufficientIndexBound("n_max must be at least 2*l_max + k_max + 2 = " +
                                     std::to_string(2 * lmax + kmax + 2));
    const Index cols = options.n_max + 1;
    RepParams params;
    params.q = options.q;
    params.dim = options.n_max + 2 * lmax + 2;
    const auto rho = build_rep<HighPrecision>("rho", params);
    const Index dim = rho.dim();

    std::vector<BasicSparseOperator<HighPrecision>> images;
    Eigen::MatrixXd stacked(dim * cols, static_cast<Index>(monomials.size()));
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        images.push_back(evaluate_sparse(basis_element(monomials[i], rho.presentation()->alphabet()), rho));
        const BasicDenseOperator<HighPrecision> block = BasicDenseOperator<HighPrecision>(images.back()).leftCols(cols);
        const HighPrecision norm = block.norm();
        const auto unit = (norm > 0 ? BasicDenseOperator<HighPrecision>(block / norm) : block);
        stacked.col(static_cast<Index>(i)) = unit.cast<double>().reshaped();
    }

    IndependenceReport report;
    report.monomials = monomials.size();
    if (!monomials.empty()) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked);
        const auto& sv = svd.singularValues();
        report.largest_singular_value = sv(0);
        report.smallest_singular_value = sv(sv.size() - 1);
        report.rank = static_cast<long>((sv.array() > options.rank_threshold * sv(0)).count());
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (std::size_t t = 0; t < options.trials; ++t) {
        std::vector<int> truth(monomials.size());
        BasicDenseOperator<HighPrecision> rho_x = BasicDenseOperator<HighPrecision>::Zero(dim, dim);
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            truth[i] = coeff(rng);
            rho_x += HighPrecision(truth[i]) * images[i];
        }
        const auto got = recover_coefficients(rho_x, monomials, options.q);
        for (std::size_t i = 0; i < monomials.size(); ++i)
            report.max_recovery_error =
                std::max(report.max_recovery_error, std::abs(got[i] - static_cast<double>(truth[i])));
        ++report.trials;
    }
    return report;
}

}  // namespace qcstar
