#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcstar/algebra.hpp"
#include "qcstar/representation.hpp"

namespace qcstar {

/// The four monomial families spanning the real projective plane algebra.
enum class BasisFamily {
    PRT,          // P^k R^l T
    PRstarTstar,  // P^k (R*)^l T*
    PR,           // P^k R^l
    PRstar,       // P^k (R*)^l, l >= 1
};

struct BasisMonomial {
    BasisFamily family;
    int k;
    int l;

    bool operator==(const BasisMonomial&) const = default;
};

std::string to_string(const BasisMonomial& m);

/// The monomial as an element of rp2_presentation().
Element basis_element(const BasisMonomial& m, const std::shared_ptr<const Alphabet>& rp2_alphabet);

/// Every family member with k <= k_max and l <= l_max; 4(k+1)(l+1) - (k+1) of them.
std::vector<BasisMonomial> basis_family(int k_max, int l_max);

struct IndependenceReport {
    std::size_t monomials = 0;
    long rank = 0;
    // Of the evaluation matrix after scaling every column to unit norm.
    double smallest_singular_value = 0.0;
    double largest_singular_value = 0.0;
    std::size_t trials = 0;
    double max_recovery_error = 0.0;
    bool full_rank() const { return rank == static_cast<long>(monomials); }
};

struct IndependenceOptions {
    double q = 0.5;
    int n_max = 40;
    double rank_threshold = 1e-10;  // relative to the largest singular value
    std::size_t trials = 100;       // random integer coefficient vectors in [-5, 5]
    std::uint64_t seed = 0;
};

class InsufficientIndexBound : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Stacks the coordinates of rho(m) e_n, n = 0..n_max, for every monomial and
/// reports the numerical rank. Then draws random coefficient vectors, forms
/// rho(x), and recovers every coefficient from the per-(family, l) Vandermonde
/// systems in the nodes q^{4(n + offset)}.
///
/// Columns for large k and l are smaller than the leading ones by factors like
/// q^{84}, so the rank is taken after normalizing every column, and rho is
/// evaluated in HighPrecision: in double the small terms vanish below the
/// rounding of the large ones before recovery can see them.
IndependenceReport independence_check(const std::vector<BasisMonomial>& monomials,
                                      const IndependenceOptions& options = {});

/// Recovers the coefficients of `monomials` from an operator rho(x) whose
/// expansion uses only family members. Instantiated for Complex and
/// HighPrecision.
template <typename Scalar>
std::vector<double> recover_coefficients(const BasicDenseOperator<Scalar>& rho_x,
                                         const std::vector<BasisMonomial>& monomials, double q);

}  // namespace qcstar
