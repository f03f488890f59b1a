#pragma once

#include "tridecomp/assignment.hpp"
#include "tridecomp/planemap.hpp"

#include <array>
#include <string>
#include <vector>

namespace tridecomp {

/// Cyclic vertex sequence visiting every vertex once.
using HamCycle = std::vector<int>;

/// Edge partition T0 | T1 | T2 with its shape claims: T0 a spanning tree of
/// maximum degree `degree_bound`, T1 a tree spanning V - {w0, w2}, T2 a tree
/// spanning V - {w1}.
struct Decomposition {
    std::array<std::vector<Edge>, 3> parts;
    std::array<int, 3> w{};
    int degree_bound = 4;
    std::string pipeline;
};

/// Top-down induction along the separation tree. `w` labels the outer
/// triangle with w[0] = phi(outer triangle).
[[nodiscard]] Decomposition from_assignment(const PlaneMap& map, const Assignment& a,
                                            std::array<int, 3> w);

/// Two trees and a Hamiltonian path. Throws InputError naming a separating
/// triangle if the map is not 4-connected.
[[nodiscard]] Decomposition four_connected(const PlaneMap& map);

/// Two trees and a spanning tree of maximum degree 3, given a Hamiltonian cycle.
[[nodiscard]] Decomposition hamiltonian(const PlaneMap& map, const HamCycle& cycle);

/// Two trees and a spanning tree of maximum degree 4.
[[nodiscard]] Decomposition general(const PlaneMap& map);

/// Empty iff deg_T0(v) = 1 + |phi^-1(v)| for w0, w2 and every special vertex
/// opposing some phi(Δ), and 2 + |phi^-1(v)| for every other vertex.
[[nodiscard]] std::vector<std::string> degree_law_violations(const PlaneMap& map,
                                                             const Assignment& a,
                                                             const Decomposition& d);

/// Empty iff `cycle` is a Hamiltonian cycle of `map`.
[[nodiscard]] std::vector<std::string> ham_cycle_violations(const PlaneMap& map,
                                                            const HamCycle& cycle);

}  // namespace tridecomp
