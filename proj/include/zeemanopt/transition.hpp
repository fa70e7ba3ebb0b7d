#pragma once

#include "zeemanopt/half_integer.hpp"

namespace zeemanopt {

// A dipole transition jg -> je driven at reduced Rabi frequency omega with
// detuning delta; the excited manifold decays back at rate gamma. All rates
// in rad/s. Construction enforces the dipole selection rules.
struct TransitionScheme {
  TransitionScheme(HalfInteger jg, HalfInteger je, double gamma, double omega,
                   double delta = 0.0);

  HalfInteger jg;
  HalfInteger je;
  double gamma;
  double omega;
  double delta;

  int ground_dim() const { return multiplicity(jg); }
  int excited_dim() const { return multiplicity(je); }
  int dim() const { return ground_dim() + excited_dim(); }

  // Basis order: ground m = -jg..jg, then excited m = -je..je.
  int ground_index(HalfInteger m) const;
  int excited_index(HalfInteger m) const;
  HalfInteger ground_m(int index) const;
  HalfInteger excited_m(int index) const;  // index relative to the excited block
};

}  // namespace zeemanopt
