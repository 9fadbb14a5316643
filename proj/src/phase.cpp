#include "mdsym/phase.hpp"

#include <stdexcept>

namespace mdsym {

int rho(const ScaledMat& m) { return (sgn(m.c()) == 0 && sgn(m.d()) < 0) ? 1 : 0; }

int omega_petersson(const ScaledMat& m, const ScaledMat& n) {
  const ScaledMat mn = m * n;
  const int cm = sgn(m.c()), cn = sgn(n.c()), cmn = sgn(mn.c());
  const int dm = sgn(m.d()), dn = sgn(n.d());
  int four_omega;
  if (cm != 0 && cn != 0 && cmn != 0)
    four_omega = cm + cn - cmn - cm * cn * cmn;
  else if (cm != 0 && cn != 0)
    four_omega = (cm - 1) * (1 - cn);
  else if (cn != 0 && cmn != 0)
    four_omega = (1 - dm) * (1 + cn);
  else if (cm != 0 && cmn != 0)
    four_omega = (1 + cm) * (1 - dn);
  else if (cm == 0 && cn == 0 && cmn == 0)
    four_omega = (1 - dm) * (1 - dn);
  else
    throw std::logic_error("omega: impossible sign pattern");  // two zeros cannot occur
  return four_omega / 4;
}

int omega_cases(const ScaledMat& m, const ScaledMat& n) {
  const ScaledMat mn = m * n;
  const int cm = sgn(m.c()), cn = sgn(n.c()), cmn = sgn(mn.c());
  if (cmn == -1 && ((cm == 1 && cn == 1) || (cm == 0 && cn == 1) || (cm == 1 && cn == 0)))
    return 1;
  if (cm == 0 && cn == 0 && cmn == 0 && sgn(m.d()) == -1 && sgn(n.d()) == -1) return 1;
  if (cm == -1 && cn == -1 && (cmn == 1 || cmn == 0)) return -1;
  return 0;
}

int omega_self(const ScaledMat& m) {
  const int c = sgn(m.c());
  const int tr = sgn(m.trace());
  if (c > 0 && tr < 0) return 1;
  if (c == 0 && sgn(m.d()) < 0) return 1;
  if (c < 0 && tr <= 0) return -1;
  return 0;
}

}  // namespace mdsym
