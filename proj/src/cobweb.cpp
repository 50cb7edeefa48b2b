#include "fibcalc/cobweb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fibcalc/errors.hpp"

namespace fibcalc {

std::string to_string(const Vertex& v) {
    std::ostringstream out;
    out << "<" << v.j << "," << v.s << ">";
    return out.str();
}

void Digraph::add_arc(std::size_t from, std::size_t to) {
    if (from >= size() || to >= size()) {
        throw std::out_of_range("digraph arc endpoint out of range");
    }
    adjacency_[from].push_back(to);
}

std::vector<std::vector<char>> Digraph::reachability() const {
    const std::size_t n = size();
    std::vector<std::vector<char>> closure(n, std::vector<char>(n, 0));
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> stack = adjacency_[start];
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            if (closure[start][v]) continue;
            closure[start][v] = 1;
            for (std::size_t w : adjacency_[v]) {
                if (!closure[start][w]) stack.push_back(w);
            }
        }
    }
    return closure;
}

bool is_regular(const Digraph& g) {
    const auto closure = g.reachability();
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v : g.out(u)) {
            // A path of length >= 2 goes through some out-neighbor first.
            for (std::size_t w : g.out(u)) {
                if (closure[w][v]) return false;
            }
        }
    }
    return true;
}

bool is_admissible(const Digraph& g, const std::vector<std::size_t>& chain) {
    const std::size_t n = g.size();
    if (chain.size() != n) {
        throw std::invalid_argument("chain must be a permutation of the vertex set");
    }
    std::vector<char> seen(n, 0);
    for (std::size_t v : chain) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("chain must be a permutation of the vertex set");
        }
        seen[v] = 1;
    }
    const auto closure = g.reachability();
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i3 = i1 + 2; i3 < n; ++i3) {
            if (!closure[chain[i1]][chain[i3]]) continue;
            for (std::size_t i2 = i1 + 1; i2 < i3; ++i2) {
                if (!closure[chain[i1]][chain[i2]] && !closure[chain[i2]][chain[i3]]) {
                    return false;
                }
            }
        }
    }
    return true;
}

CobwebPoset::CobwebPoset(SequenceSpec spec, std::size_t max_level) : spec_(std::move(spec)) {
    level_sizes_.reserve(max_level + 1);
    level_sizes_.push_back(1);  // root convention
    for (std::size_t s = 1; s <= max_level; ++s) {
        const BigInt t = term(spec_, s);
        if (t <= 0) {
            std::ostringstream msg;
            msg << "degenerate sequence: level " << s << " would be empty";
            throw DegenerateSequenceError(msg.str());
        }
        if (!t.fits_ulong_p()) {
            throw std::overflow_error("level size too large to materialize");
        }
        level_sizes_.push_back(static_cast<std::size_t>(t.get_ui()));
    }
    level_offsets_.resize(level_sizes_.size());
    std::size_t offset = 0;
    for (std::size_t s = 0; s < level_sizes_.size(); ++s) {
        level_offsets_[s] = offset;
        offset += level_sizes_[s];
    }
}

std::size_t CobwebPoset::vertex_count() const {
    return level_offsets_.back() + level_sizes_.back();
}

std::size_t CobwebPoset::edge_count() const {
    std::size_t count = 0;
    for (std::size_t s = 0; s + 1 <= max_level(); ++s) {
        count += level_sizes_[s] * level_sizes_[s + 1];
    }
    return count;
}

bool CobwebPoset::contains(const Vertex& v) const {
    return v.s <= max_level() && v.j >= 1 && v.j <= level_sizes_[v.s];
}

std::vector<Vertex> CobwebPoset::vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    for (std::size_t s = 0; s <= max_level(); ++s) {
        for (std::size_t j = 1; j <= level_sizes_[s]; ++j) {
            out.push_back(Vertex{j, s});
        }
    }
    return out;
}

std::size_t CobwebPoset::vertex_index(const Vertex& v) const {
    if (!contains(v)) {
        throw std::out_of_range("vertex " + to_string(v) + " not in poset");
    }
    return level_offsets_[v.s] + (v.j - 1);
}

bool CobwebPoset::has_path(const Vertex& a, const Vertex& b) const {
    if (!contains(a) || !contains(b)) {
        throw std::out_of_range("path query outside the poset");
    }
    return a.s < b.s;
}

bool leq_p(const Vertex& x, const Vertex& y) { return x.s < y.s || x == y; }

Digraph materialize(const CobwebPoset& p) {
    Digraph g(p.vertex_count());
    for (std::size_t s = 0; s + 1 <= p.max_level(); ++s) {
        for (std::size_t j = 1; j <= p.level_size(s); ++j) {
            for (std::size_t q = 1; q <= p.level_size(s + 1); ++q) {
                g.add_arc(p.vertex_index(Vertex{j, s}), p.vertex_index(Vertex{q, s + 1}));
            }
        }
    }
    return g;
}

bool is_regular(const CobwebPoset& p) { return is_regular(materialize(p)); }

LinearChain chain_x(const CobwebPoset& p) { return p.vertices(); }

LinearChain chain_y(const CobwebPoset& p) {
    LinearChain out;
    out.reserve(p.vertex_count());
    for (std::size_t s = 0; s <= p.max_level(); ++s) {
        for (std::size_t j = p.level_size(s); j >= 1; --j) {
            out.push_back(Vertex{j, s});
        }
    }
    return out;
}

bool is_admissible(const CobwebPoset& p, const LinearChain& chain) {
    std::vector<std::size_t> ids;
    ids.reserve(chain.size());
    for (const Vertex& v : chain) ids.push_back(p.vertex_index(v));
    return is_admissible(materialize(p), ids);
}

bool verify_realizer(const CobwebPoset& p, const LinearChain& x, const LinearChain& y) {
    const std::size_t n = p.vertex_count();
    if (x.size() != n || y.size() != n) {
        throw std::invalid_argument("realizer chains must cover the vertex set");
    }
    std::vector<std::size_t> pos_x(n), pos_y(n);
    for (std::size_t i = 0; i < n; ++i) pos_x[p.vertex_index(x[i])] = i;
    for (std::size_t i = 0; i < n; ++i) pos_y[p.vertex_index(y[i])] = i;
    const std::vector<Vertex> verts = p.vertices();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const bool in_order = leq_p(verts[a], verts[b]);
            const bool in_chains = pos_x[a] <= pos_x[b] && pos_y[a] <= pos_y[b];
            if (in_order != in_chains) return false;
        }
    }
    return true;
}

bool verify_realizer(const CobwebPoset& p) {
    return verify_realizer(p, chain_x(p), chain_y(p));
}

std::string export_dot(const CobwebPoset& p) {
    std::ostringstream out;
    out << "digraph cobweb {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t s = 0; s <= p.max_level(); ++s) {
        out << "  { rank=same;";
        for (std::size_t j = 1; j <= p.level_size(s); ++j) {
            out << " v" << j << "_" << s << ";";
        }
        out << " }\n";
    }
    for (std::size_t s = 0; s + 1 <= p.max_level(); ++s) {
        for (std::size_t j = 1; j <= p.level_size(s); ++j) {
            for (std::size_t q = 1; q <= p.level_size(s + 1); ++q) {
                out << "  v" << j << "_" << s << " -> v" << q << "_" << s + 1 << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace fibcalc
