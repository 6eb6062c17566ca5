#include "qcstar/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace qcstar {

std::size_t Graph::find_vertex(std::string_view name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    return it == vertices_.end() ? npos : static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::add_vertex(std::string name) {
    if (find_vertex(name) != npos) throw std::invalid_argument("duplicate vertex '" + name + "'");
    for (const Edge& e : edges_)
        if (e.name == name) throw std::invalid_argument("duplicate name '" + name + "'");
    vertices_.push_back(std::move(name));
    return vertices_.size() - 1;
}

std::size_t Graph::add_edge(std::string name, std::string_view source, std::string_view range) {
    for (const Edge& e : edges_)
        if (e.name == name) throw std::invalid_argument("duplicate edge '" + name + "'");
    if (find_vertex(name) != npos) throw std::invalid_argument("duplicate name '" + name + "'");
    std::size_t s = find_vertex(source);
    if (s == npos) throw std::invalid_argument("undeclared vertex '" + std::string(source) + "'");
    std::size_t r = find_vertex(range);
    if (r == npos) throw std::invalid_argument("undeclared vertex '" + std::string(range) + "'");
    edges_.push_back(Edge{std::move(name), s, r});
    return edges_.size() - 1;
}

std::size_t Graph::out_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.source == v; }));
}

Graph parse_graph(std::string_view text) {
    Graph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;
        try {
            if (tok[0] == "vertex") {
                if (tok.size() != 2) throw GraphParseError(lineno, "expected 'vertex <name>'");
                g.add_vertex(tok[1]);
            } else if (tok[0] == "edge") {
                if (tok.size() != 4)
                    throw GraphParseError(lineno, "expected 'edge <name> <source> <target>'");
                g.add_edge(tok[1], tok[2], tok[3]);
            } else {
                throw GraphParseError(lineno, "unknown directive '" + tok[0] + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw GraphParseError(lineno, e.what());
        }
    }
    return g;
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
    for (const auto& e : g.edges())
        out << "edge " << e.name << ' ' << g.vertices()[e.source] << ' ' << g.vertices()[e.range]
            << '\n';
    return out.str();
}

Graph builtin_graph(std::string_view name) {
    Graph g;
    if (name == "G1") {
        g.add_vertex("v");
        g.add_vertex("w1");
        g.add_vertex("w2");
        g.add_edge("e", "v", "v");
        g.add_edge("f1", "v", "w1");
        g.add_edge("f2", "v", "w2");
    } else if (name == "G2") {
        g.add_vertex("v");
        g.add_vertex("w");
        g.add_edge("e", "v", "v");
        g.add_edge("f", "v", "w");
    } else if (name == "G3") {
        g.add_vertex("v");
        g.add_vertex("w");
        g.add_edge("e", "v", "v");
        g.add_edge("g1", "v", "w");
        g.add_edge("g2", "v", "w");
    } else {
        throw std::invalid_argument("unknown builtin graph '" + std::string(name) + "'");
    }
    return g;
}

VertexSet emitters(const Graph& g) {
    VertexSet out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) > 0) out.push_back(v);
    return out;
}

IntegerMatrix build_AG(const Graph& g) {
    const VertexSet em = emitters(g);
    IntegerMatrix a = integer_matrix(static_cast<Eigen::Index>(g.vertex_count()),
                                     static_cast<Eigen::Index>(em.size()));
    for (std::size_t c = 0; c < em.size(); ++c) {
        const auto col = static_cast<Eigen::Index>(c);
        for (const Edge& e : g.edges())
            if (e.source == em[c]) a(static_cast<Eigen::Index>(e.range), col) += 1;
        a(static_cast<Eigen::Index>(em[c]), col) -= 1;
    }
    return a;
}

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& h) {
    std::vector<bool> in(g.vertex_count(), false);
    for (std::size_t v : h) in.at(v) = true;
    return in;
}

VertexSet from_membership(const std::vector<bool>& in) {
    VertexSet out;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& h) {
    const auto in = membership(g, h);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return !in[e.source] || in[e.range]; });
}

bool is_saturated(const Graph& g, const VertexSet& h) {
    const auto in = membership(g, h);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (in[v] || g.out_degree(v) == 0) continue;
        bool all_inside = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return e.source != v || in[e.range];
        });
        if (all_inside) return false;
    }
    return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed) {
    auto in = membership(g, seed);
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : g.edges()) {
            if (in[e.source] && !in[e.range]) {
                in[e.range] = true;
                changed = true;
            }
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (in[v] || g.out_degree(v) == 0) continue;
            bool all_inside = true;
            for (const Edge& e : g.edges())
                if (e.source == v && !in[e.range]) all_inside = false;
            if (all_inside) {
                in[v] = true;
                changed = true;
            }
        }
    }
    return from_membership(in);
}

std::vector<VertexSet> hereditary_saturated_sets(const Graph& g) {
    // Every hereditary saturated set is reachable from closure(empty) by
    // repeatedly adjoining one vertex and closing.
    std::set<VertexSet> seen;
    std::vector<VertexSet> frontier{hereditary_saturated_closure(g, {})};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        VertexSet h = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (std::binary_search(h.begin(), h.end(), v)) continue;
            VertexSet seed = h;
            seed.insert(std::upper_bound(seed.begin(), seed.end(), v), v);
            VertexSet next = hereditary_saturated_closure(g, seed);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    return out;
}

bool inclusion_posets_isomorphic(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    auto subset = [](const VertexSet& x, const VertexSet& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = subset(a[i], a[j]) == subset(b[perm[i]], b[perm[j]]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::string> vertex_names(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (std::size_t v : s) out.push_back(g.vertices().at(v));
    return out;
}

}  // namespace qcstar
