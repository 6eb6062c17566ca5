#include "qcstar/ktheory.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace qcstar {

namespace {

using Index = Eigen::Index;

struct Pivot {
    Index row;
    Index col;
};

// Nonzero entry of least |value| in S[t.., t..]; row-major scan keeps the
// first one found on ties.
std::optional<Pivot> min_abs_entry(const IntegerMatrix& s, Index t) {
    std::optional<Pivot> best;
    Integer best_abs;
    for (Index i = t; i < s.rows(); ++i)
        for (Index j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Integer a = abs(s(i, j));
            if (!best || a < best_abs) {
                best = Pivot{i, j};
                best_abs = a;
            }
        }
    return best;
}

void swap_rows(IntegerMatrix& s, IntegerMatrix& u, Index a, Index b) {
    if (a == b) return;
    s.row(a).swap(s.row(b));
    u.row(a).swap(u.row(b));
}

void swap_cols(IntegerMatrix& s, IntegerMatrix& v, Index a, Index b) {
    if (a == b) return;
    s.col(a).swap(s.col(b));
    v.col(a).swap(v.col(b));
}

// row_i -= f * row_t
void row_axpy(IntegerMatrix& s, IntegerMatrix& u, Index i, Index t, const Integer& f) {
    for (Index j = 0; j < s.cols(); ++j) s(i, j) -= f * s(t, j);
    for (Index j = 0; j < u.cols(); ++j) u(i, j) -= f * u(t, j);
}

void col_axpy(IntegerMatrix& s, IntegerMatrix& v, Index j, Index t, const Integer& f) {
    for (Index i = 0; i < s.rows(); ++i) s(i, j) -= f * s(i, t);
    for (Index i = 0; i < v.rows(); ++i) v(i, j) -= f * v(i, t);
}

}  // namespace

Integer AbelianGroup::torsion_order() const {
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) parts.push_back("Z_" + d.str());
    if (parts.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " + " : "") << parts[i];
    return out.str();
}

std::vector<Integer> SNFResult::diagonal() const {
    std::vector<Integer> d;
    for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

long SNFResult::rank() const {
    const auto d = diagonal();
    return static_cast<long>(std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

SNFResult smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix s = m;
    IntegerMatrix u = integer_identity(m.rows());
    IntegerMatrix v = integer_identity(m.cols());
    const Index n = std::min(m.rows(), m.cols());

    for (Index t = 0; t < n; ++t) {
        auto p = min_abs_entry(s, t);
        if (!p) break;
        swap_rows(s, u, t, p->row);
        swap_cols(s, v, t, p->col);

        for (;;) {
            // Clear column t and row t with Euclidean steps.
            for (Index i = t + 1; i < s.rows(); ++i)
                if (s(i, t) != 0) row_axpy(s, u, i, t, Integer(s(i, t) / s(t, t)));
            for (Index j = t + 1; j < s.cols(); ++j)
                if (s(t, j) != 0) col_axpy(s, v, j, t, Integer(s(t, j) / s(t, t)));

            // A nonzero remainder is smaller than the pivot: promote it.
            std::optional<Pivot> rem;
            Integer rem_abs;
            for (Index i = t + 1; i < s.rows(); ++i)
                if (s(i, t) != 0 && (!rem || abs(s(i, t)) < rem_abs)) {
                    rem = Pivot{i, t};
                    rem_abs = abs(s(i, t));
                }
            for (Index j = t + 1; j < s.cols(); ++j)
                if (s(t, j) != 0 && (!rem || abs(s(t, j)) < rem_abs)) {
                    rem = Pivot{t, j};
                    rem_abs = abs(s(t, j));
                }
            if (rem) {
                swap_rows(s, u, t, rem->row);
                swap_cols(s, v, t, rem->col);
                continue;
            }

            // Divisibility: fold an offending row into row t and repeat.
            std::optional<Index> bad_row;
            for (Index i = t + 1; i < s.rows() && !bad_row; ++i)
                for (Index j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            row_axpy(s, u, t, *bad_row, Integer(-1));
        }

        if (s(t, t) < 0) {
            s.row(t) *= Integer(-1);
            u.row(t) *= Integer(-1);
        }
    }
    return SNFResult{std::move(u), std::move(s), std::move(v)};
}

long integer_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

AbelianGroup cokernel(const IntegerMatrix& m) {
    const SNFResult r = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = static_cast<long>(m.rows()) - r.rank();
    for (const auto& d : r.diagonal())
        if (d > 1) g.torsion.push_back(d);
    return g;
}

AbelianGroup kernel(const IntegerMatrix& m) {
    AbelianGroup g;
    g.free_rank = static_cast<long>(m.cols()) - integer_rank(m);
    return g;
}

KGroups k_groups(const Graph& g) {
    const IntegerMatrix a = build_AG(g);
    return KGroups{cokernel(a), kernel(a)};
}

}  // namespace qcstar
