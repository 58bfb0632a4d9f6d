#pragma once

#include "monopath/online_game.hpp"

namespace monopath {

// Translations between the online game on graphs (k = 2) and the lattice
// game. Vertex v_j corresponds to point p_j, the edge (v_j, v_t) to a step
// comparing with p_j, and color c to coordinate c. The adapters hold a
// shadow copy of the other game; the wrapped strategy must outlive them.

// A coordinator that asks the painter for each step's coordinate and plays
// the per-color longest path lengths at the new vertex.
std::unique_ptr<LatticeCoordinator> coordinator_from_painter(OnlinePainter& painter, int q, int n);

// A painter that colors (v_j, v_t) with the coordinate the coordinator
// answers for p_j; the coordinator chooses each point when the next stage
// begins.
std::unique_ptr<OnlinePainter> painter_from_coordinator(LatticeCoordinator& coordinator, int q, int n);

// An online builder driving a lattice builder whose points are the per-color
// path lengths at each vertex.
std::unique_ptr<OnlineBuilder> online_builder_from_lattice(LatticeBuilder& builder, int q, int n);

// A lattice builder driving an online builder on a shadow graph colored by
// the coordinator's answers.
std::unique_ptr<LatticeBuilder> lattice_builder_from_online(OnlineBuilder& builder, int q, int n);

} // namespace monopath
