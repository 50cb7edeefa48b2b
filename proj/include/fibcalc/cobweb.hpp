#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibcalc/sequence.hpp"

namespace fibcalc {

/// Vertex <j,s>: position j (1-based, left to right) in level s.
struct Vertex {
    std::size_t j = 1;
    std::size_t s = 0;

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.j == b.j && a.s == b.s; }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
};

std::string to_string(const Vertex& v);

using LinearChain = std::vector<Vertex>;

/// Explicit digraph over vertex ids 0..n-1; used for reachability oracles
/// and for hand-built counterexamples in the regularity/admissibility checks.
class Digraph {
  public:
    explicit Digraph(std::size_t n) : adjacency_(n) {}

    std::size_t size() const { return adjacency_.size(); }
    void add_arc(std::size_t from, std::size_t to);
    const std::vector<std::size_t>& out(std::size_t v) const { return adjacency_.at(v); }

    /// closure[u][v] true iff a directed path of length >= 1 leads u -> v.
    std::vector<std::vector<char>> reachability() const;

  private:
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Contains no arc that duplicates a directed path of length >= 2.
bool is_regular(const Digraph& g);

/// No triple i1 < i2 < i3 in chain order with a path v1 -> v3 but neither
/// v1 -> v2 nor v2 -> v3. The chain is given as a permutation of 0..n-1.
bool is_admissible(const Digraph& g, const std::vector<std::size_t>& chain);

/// Leveled DAG with level sizes [1, a_1, a_2, ...] and complete bipartite
/// edges between consecutive levels. Level 0 always holds the single root
/// <1,0> (the displayed chains start there even though F_0 = 0). Edges are
/// implicit; reachability is level arithmetic.
class CobwebPoset {
  public:
    CobwebPoset(SequenceSpec spec, std::size_t max_level);

    const SequenceSpec& spec() const { return spec_; }
    std::size_t max_level() const { return level_sizes_.size() - 1; }
    std::size_t level_size(std::size_t s) const { return level_sizes_.at(s); }
    const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }
    std::size_t vertex_count() const;
    std::size_t edge_count() const;

    bool contains(const Vertex& v) const;
    /// All vertices, level ascending and position ascending within a level.
    std::vector<Vertex> vertices() const;
    /// Index of v in vertices() order.
    std::size_t vertex_index(const Vertex& v) const;

    /// Directed path of length >= 1 (every vertex of a lower level reaches
    /// every vertex of any higher level).
    bool has_path(const Vertex& a, const Vertex& b) const;

  private:
    SequenceSpec spec_;
    std::vector<std::size_t> level_sizes_;
    std::vector<std::size_t> level_offsets_;
};

/// Partial order: x <= y iff x lies on a strictly lower level or x = y.
bool leq_p(const Vertex& x, const Vertex& y);

/// Explicit edge materialization over vertices() ids; the test oracle for
/// the implicit reachability rule.
Digraph materialize(const CobwebPoset& p);

bool is_regular(const CobwebPoset& p);

/// Chain X: level ascending, position ascending.
LinearChain chain_x(const CobwebPoset& p);
/// Chain Y: level ascending, position descending.
LinearChain chain_y(const CobwebPoset& p);

bool is_admissible(const CobwebPoset& p, const LinearChain& chain);

/// Checks <=_P = X intersect Y over every ordered vertex pair.
bool verify_realizer(const CobwebPoset& p);
bool verify_realizer(const CobwebPoset& p, const LinearChain& x, const LinearChain& y);

/// Deterministic DOT rendering; one rank group per level, edges upward.
std::string export_dot(const CobwebPoset& p);

}  // namespace fibcalc
