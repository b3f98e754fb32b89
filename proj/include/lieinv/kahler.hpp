#pragma once

#include <optional>
#include <vector>

#include "lieinv/complex_structure.hpp"
#include "lieinv/symplectic.hpp"

namespace lieinv {

// omega(J., J.) = omega(., .) on all basis pairs
bool is_compatible(const RationalForm& w, const RationalMatrix& j);

// Basis (canonical reduced echelon in Lambda^2 coordinates) of
// {omega closed : omega(J., J.) = omega}. J must satisfy J^2 = -Id;
// integrability is not required to compute the family.
std::vector<RationalForm> compatible_family(const LieAlgebra& g, const RationalMatrix& j);

enum class KahlerStatus {
  KAHLER,         // J integrable, witness compatible + closed + Pf != 0
  ALMOST_KAHLER,  // witness exists but J is not integrable
  NONE,           // Pf vanishes identically on the compatible family
};

struct KahlerDecision {
  KahlerStatus status = KahlerStatus::NONE;
  std::vector<RationalForm> family;
  std::optional<RationalForm> witness;  // set unless status == NONE
};

// Existence of a nondegenerate compatible closed form for this J, decided
// by the exact zero-quadratic-form certificate on the family.
KahlerDecision kahler_decision(const LieAlgebra& g, const RationalMatrix& j);

// phi(x, y) = omega(x, Jy) as a matrix, phi_ij = omega(e_i, J e_j).
// Symmetric exactly when omega is compatible with J; throws otherwise.
RationalMatrix metric_from(const RationalForm& w, const RationalMatrix& j);

Signature metric_signature(const RationalMatrix& phi);

// The transport argument, verified pointwise: x must be an automorphism of
// g intertwining x J1 = J2 x, and w must be compatible with J1; returns
// whether w is then compatible with J2 (always true mathematically; the
// check recomputes it rather than assuming it). Throws on a violated
// precondition.
bool compatibility_transport_check(const LieAlgebra& g, const RationalMatrix& j1,
                                   const RationalMatrix& j2, const RationalMatrix& x,
                                   const RationalForm& w);

}  // namespace lieinv
