#pragma once

#include <string>
#include <vector>

#include "qcstar/graph.hpp"
#include "qcstar/integer_matrix.hpp"

namespace qcstar {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_t with
/// d_i >= 2 and d_i | d_{i+1}.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order of the torsion subgroup.
    Integer torsion_order() const;
    /// Human form such as "Z^2", "Z + Z_2", "0".
    std::string to_string() const;
};

/// U * M * V = S with U, V unimodular and S diagonal, nonnegative, with a
/// divisibility chain on its diagonal.
struct SNFResult {
    IntegerMatrix U;
    IntegerMatrix S;
    IntegerMatrix V;

    /// Diagonal of S (length min(rows, cols)).
    std::vector<Integer> diagonal() const;
    long rank() const;
};

/// Pivot is the nonzero entry of least absolute value in the active block;
/// ties go to the smallest (row, col). U, S, V are therefore reproducible.
SNFResult smith_normal_form(const IntegerMatrix& m);

long integer_rank(const IntegerMatrix& m);

AbelianGroup cokernel(const IntegerMatrix& m);
AbelianGroup kernel(const IntegerMatrix& m);

struct KGroups {
    AbelianGroup k0;
    AbelianGroup k1;
};

/// Cuntz formula: K0 = coker(A_G), K1 = ker(A_G).
KGroups k_groups(const Graph& g);

}  // namespace qcstar
