#pragma once

#include "spintree/heisenberg.hpp"
#include "spintree/partition_tree.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace spintree {

// Rodrigues rotation about axis/|axis| by angle |axis|*t; the zero axis (and
// t = 0) give the identity.
Mat3 rotation_matrix(const Vec3& axis, double t);

// Closed-form evolution of a tree-coupled system: each spin mu is transformed
// by the product of rotations about the t=0 subsystem spins S_M over the
// nodes M on the path from {mu} to the root, node M turning by angle
// |S_M| (J(M) - J(parent)) t.  The leaf factor spins s_mu about itself and is
// skipped; the factors pairwise commute, and the leaf-most is applied first.
// A nonzero field applies the Larmor rotation D(field, t) last.
SpinConfiguration evolve(const BJSystem& sys, const SpinConfiguration& cfg0,
                         double t, const FieldVector& field = FieldVector{});

struct DegenerateFrameError : std::runtime_error {
  DegenerateFrameError(int node_idx, const std::string& what)
      : std::runtime_error(what), node(node_idx) {}
  int node;  // tree node index of the offending frame
};

// Action-angle coordinates of a tree system configuration.  Every internal
// node M carries an action |S_M| and a frame anchored on its own axis
// e_M = S_M/|S_M| with the parent axis (the field direction at the root) as
// reference:
//   e_theta = ((e_M . e_ref) e_M - e_ref) / |...|,   e_phi = e_M x e_theta,
// and (theta_M, phi_M) are the polar/azimuthal coordinates of the first
// child's direction e_M1 in the frame (e_theta, e_phi, e_M).  The remaining
// action is s0 = e_field . S.
struct ActionAngleChart {
  std::map<int, double> actions;  // internal node index -> |S_M|
  std::map<int, double> theta;    // internal node index -> theta_M in [0, pi]
  std::map<int, double> phi;      // internal node index -> phi_M in [0, 2pi)
  double s0 = 0.0;                // field-axis component of the total spin
};

// Throws DegenerateFrameError (naming the node) when a needed direction or
// cross product has norm below 1e-9; the chart is defined on the open dense
// subset of configurations away from those degeneracies.
ActionAngleChart action_angles(const BJSystem& sys, const SpinConfiguration& cfg,
                               const Vec3& field_direction);

}  // namespace spintree
