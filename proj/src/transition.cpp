#include "zeemanopt/transition.hpp"

#include <cmath>
#include <stdexcept>

namespace zeemanopt {

TransitionScheme::TransitionScheme(HalfInteger jg, HalfInteger je, double gamma,
                                   double omega, double delta)
    : jg(jg), je(je), gamma(gamma), omega(omega), delta(delta) {
  require_in_range(jg);
  require_in_range(je);
  if ((jg.twice() - je.twice()) % 2 != 0)
    throw std::domain_error("jg and je must both be integer or both half-integer");
  if (std::abs(jg.twice() - je.twice()) > 2 || (jg.twice() == 0 && je.twice() == 0))
    throw std::domain_error("dipole selection requires |jg - je| <= 1 and not jg = je = 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("gamma must be finite and >= 0");
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw std::domain_error("omega must be finite and >= 0");
  if (!std::isfinite(delta)) throw std::domain_error("delta must be finite");
}

int TransitionScheme::ground_index(HalfInteger m) const {
  require_valid_pair(jg, m);
  return (m.twice() + jg.twice()) / 2;
}

int TransitionScheme::excited_index(HalfInteger m) const {
  require_valid_pair(je, m);
  return ground_dim() + (m.twice() + je.twice()) / 2;
}

HalfInteger TransitionScheme::ground_m(int index) const {
  return HalfInteger::from_twice(-jg.twice() + 2 * index);
}

HalfInteger TransitionScheme::excited_m(int index) const {
  return HalfInteger::from_twice(-je.twice() + 2 * index);
}

}  // namespace zeemanopt
