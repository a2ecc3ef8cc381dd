#ifndef NONSING_LEVELS_HPP
#define NONSING_LEVELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "nonsing/sset.hpp"

namespace nonsing {

/// Degreewise data handed to presentation_from_levels. Elements at degree m
/// are dense indices 0..sizes[m]-1 in a caller-chosen canonical order; the
/// caller guarantees every simplex in degrees > top is degenerate.
struct LevelData {
    int top = -1;
    std::vector<long long> sizes;
    /// face(m, e, i): index at degree m-1 of element e acted by delta_i (m >= 1).
    std::function<long long(int, long long, int)> face;
    /// degen(m, e, i): index at degree m+1 of element e acted by sigma_i (m < top).
    std::function<long long(int, long long, int)> degen;
    /// Canonical cell id for a non-degenerate element; empty -> auto c<d>.<k>.
    std::function<std::string(int, long long)> name;
};

struct LevelsResult {
    SSetPtr sset;
    /// Normal form of every level element, degrees 0..top.
    std::vector<std::vector<Simplex>> elem_simplex;
};

/// Converts degreewise sets with operator action into a cell presentation.
/// Throws if the input action is incoherent.
LevelsResult presentation_from_levels(const LevelData& data);

/// Splits a pair of degeneracy operators into (common collapse, residual pair).
/// pi collapses exactly the positions both a and b collapse; the residual pair
/// (a', b') satisfies a = a'.pi, b = b'.pi and shares no collapse.
struct JointSplit {
    Operator common;
    Operator left;
    Operator right;
};
JointSplit joint_degeneracy_split(const Operator& a, const Operator& b);

}  // namespace nonsing

#endif
