#pragma once

// Independent reference computations used by the test and acceptance suites.
// Nothing here calls into the implementation paths they check.

#include <cstddef>
#include <optional>
#include <vector>

#include "qcstar/graph.hpp"
#include "qcstar/integer_matrix.hpp"

namespace qcstar::oracle {

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntegerMatrix& m);

/// Largest r with a nonzero r x r minor, by enumeration.
long rank_by_minors(const IntegerMatrix& m);

/// gcd of all r x r minors, r = rank: the order of the torsion subgroup of
/// Z^rows / image(m).
Integer torsion_order_by_minors(const IntegerMatrix& m);

/// Torsion order by enumerating the subgroup generated by the columns inside
/// (Z/N)^rows for N = torsion_order_by_minors(m). Returns nullopt when N^rows
/// exceeds `limit`.
std::optional<Integer> torsion_order_by_cosets(const IntegerMatrix& m, std::size_t limit = 1u << 18);

/// Every vertex subset satisfying the hereditary and saturated conditions,
/// checked directly against the edge list.
std::vector<VertexSet> hereditary_saturated_by_subsets(const Graph& g);

/// Inverse of the Podles parameter change: c = (1/s - s)^-2.
double podles_c_from_s(double s);

}  // namespace qcstar::oracle
