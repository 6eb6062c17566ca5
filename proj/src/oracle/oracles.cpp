#include "qcstar/oracle/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcstar::oracle {

namespace {

using Index = Eigen::Index;

Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Calls f(rows, cols) for every pair of r-subsets.
void for_each_minor(const IntegerMatrix& m, long r, const std::function<void(const IntegerMatrix&)>& f) {
    std::vector<Index> rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(r));
    std::function<void(std::vector<Index>&, std::size_t, Index, Index, const std::function<void()>&)> choose =
        [&](std::vector<Index>& sel, std::size_t at, Index from, Index n, const std::function<void()>& done) {
            if (at == sel.size()) {
                done();
                return;
            }
            for (Index i = from; i < n; ++i) {
                sel[at] = i;
                choose(sel, at + 1, i + 1, n, done);
            }
        };
    choose(rows, 0, 0, m.rows(), [&] {
        choose(cols, 0, 0, m.cols(), [&] {
            IntegerMatrix sub(r, r);
            for (Index i = 0; i < r; ++i)
                for (Index j = 0; j < r; ++j)
                    sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            f(sub);
        });
    });
}

}  // namespace

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Index n = m.rows();
    if (n == 0) return Integer(1);
    IntegerMatrix a = m;
    Integer sign = 1, prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Index swap = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return Integer(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

long rank_by_minors(const IntegerMatrix& m) {
    for (long r = std::min(m.rows(), m.cols()); r > 0; --r) {
        bool nonzero = false;
        for_each_minor(m, r, [&](const IntegerMatrix& sub) {
            if (!nonzero && determinant(sub) != 0) nonzero = true;
        });
        if (nonzero) return r;
    }
    return 0;
}

Integer torsion_order_by_minors(const IntegerMatrix& m) {
    const long r = rank_by_minors(m);
    if (r == 0) return Integer(1);
    Integer g = 0;
    for_each_minor(m, r, [&](const IntegerMatrix& sub) { g = gcd(g, determinant(sub)); });
    return g;
}

std::optional<Integer> torsion_order_by_cosets(const IntegerMatrix& m, std::size_t limit) {
    const Integer big_n = torsion_order_by_minors(m);
    const long r = rank_by_minors(m);
    const Index rows = m.rows();
    Integer space = 1;
    for (Index i = 0; i < rows; ++i) space *= big_n;
    if (space > limit) return std::nullopt;
    const auto n = big_n.convert_to<std::size_t>();
    const auto total = space.convert_to<std::size_t>();

    // Columns reduced mod N, encoded in base N.
    auto encode = [&](const std::vector<std::size_t>& v) {
        std::size_t code = 0;
        for (std::size_t x : v) code = code * n + x;
        return code;
    };
    auto decode = [&](std::size_t code) {
        std::vector<std::size_t> v(static_cast<std::size_t>(rows));
        for (Index i = rows - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = code % n;
            code /= n;
        }
        return v;
    };
    std::vector<std::vector<std::size_t>> gens;
    for (Index j = 0; j < m.cols(); ++j) {
        std::vector<std::size_t> g(static_cast<std::size_t>(rows));
        for (Index i = 0; i < rows; ++i) {
            Integer x = m(i, j) % big_n;
            if (x < 0) x += big_n;
            g[static_cast<std::size_t>(i)] = x.convert_to<std::size_t>();
        }
        gens.push_back(std::move(g));
    }
    // Closure of {0} under adding generators: the subgroup they generate.
    std::vector<bool> seen(total, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = decode(stack.back());
        stack.pop_back();
        for (const auto& g : gens) {
            std::vector<std::size_t> w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = (v[i] + g[i]) % n;
            const std::size_t code = encode(w);
            if (!seen[code]) {
                seen[code] = true;
                ++count;
                stack.push_back(code);
            }
        }
    }
    // |(Z/N)^rows / H| = N^(rows - r) * torsion when every invariant factor divides N.
    Integer quotient = space / count;
    for (long i = 0; i < static_cast<long>(rows) - r; ++i) quotient /= big_n;
    return quotient;
}

std::vector<VertexSet> hereditary_saturated_by_subsets(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("too many vertices for subset enumeration");
    std::vector<VertexSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto in = [mask](std::size_t v) { return (mask >> v) & 1u; };
        bool ok = true;
        for (const Edge& e : g.edges())
            if (in(e.source) && !in(e.range)) ok = false;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (in(v)) continue;
            std::size_t emitted = 0, inside = 0;
            for (const Edge& e : g.edges())
                if (e.source == v) {
                    ++emitted;
                    inside += in(e.range) ? 1 : 0;
                }
            if (emitted > 0 && emitted == inside) ok = false;
        }
        if (!ok) continue;
        VertexSet s;
        for (std::size_t v = 0; v < n; ++v)
            if (in(v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

double podles_c_from_s(double s) {
    const double d = 1.0 / s - s;
    return 1.0 / (d * d);
}

}  // namespace qcstar::oracle
