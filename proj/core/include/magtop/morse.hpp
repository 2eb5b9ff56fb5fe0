#pragma once

#include <cstddef>
#include <vector>

namespace magtop {

/// A cell is a list of vertices (a simplex) or of points (a time-stamped
/// sequence with the times left implicit). Its faces drop one entry.
using Cell = std::vector<int>;

/// face is matched up to coface; coface has exactly one more entry.
struct MatchedPair {
    Cell face;
    Cell coface;
};

struct Matching {
    std::vector<MatchedPair> pairs;
};

struct AcyclicityResult {
    bool acyclic = true;
    /// On failure: a_1, b_1, a_2, b_2, ..., a_1 alternating between
    /// cofaces and faces along the cycle.
    std::vector<Cell> cycle;
    /// Unmatched cells in input order.
    std::vector<Cell> critical;
};

/// Checks that M is a partial matching on the cells (throws NotAMatching
/// otherwise) and searches the modified Hasse digraph for a directed cycle:
/// edges go up along matched pairs and down to every other face in the set.
AcyclicityResult verify_acyclic(const std::vector<Cell>& cells, const Matching& M);

struct BoundednessResult {
    bool bounded = true;
    /// N(a) per cell in input order: the longest a = a_1 > b_1 |- a_2 > ... > b_p,
    /// at least 1. Faces outside the cell set end a descent.
    std::vector<std::size_t> n;
    std::size_t max = 0;
};

/// On a finite complex every acyclic matching is bounded; returns the bounds.
/// A matching with a cycle is reported as unbounded.
BoundednessResult verify_bounded(const std::vector<Cell>& cells, const Matching& M);

}  // namespace magtop
