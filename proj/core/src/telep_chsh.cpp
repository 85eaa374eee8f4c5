#include "absteer/telep_chsh.hpp"

#include "absteer/steering.hpp"

namespace absteer {

AuxCriteria aux_criteria(const DensityMatrix& rho) {
  const auto s = singular_values_3x3(to_bloch(rho).t);
  AuxCriteria out;
  for (std::size_t i = 0; i < 3; ++i) out.u[i] = s[i] * s[i];
  out.n = s[0] + s[1] + s[2];
  out.m = out.u[0] + out.u[1];
  return out;
}

double teleportation_n(const DensityMatrix& rho) { return aux_criteria(rho).n; }
double chsh_m(const DensityMatrix& rho) { return aux_criteria(rho).m; }

bool steer_implies_teleport_check(const DensityMatrix& rho) {
  return !f3_max(rho).violated || aux_criteria(rho).teleportation_useful();
}

}  // namespace absteer
