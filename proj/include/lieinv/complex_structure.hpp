#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieinv/lie_algebra.hpp"

namespace lieinv {

using GaussianVector = std::vector<GaussianScalar>;

// Basis {U, V} of a complex 2-plane in the complexified algebra, the
// candidate -i eigenspace of an almost complex structure.
struct ComplexSubalgebra {
  GaussianVector u, v;
};

bool is_almost_complex(const RationalMatrix& j);  // J^2 = -Id

// N_J(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]. Computable for any J;
// callers that require J^2 = -Id check is_almost_complex first.
std::vector<Scalar> nijenhuis(const LieAlgebra& g, const RationalMatrix& j,
                              const std::vector<Scalar>& x, const std::vector<Scalar>& y);

// True iff N_J vanishes on all basis pairs (sufficient by bilinearity).
bool is_integrable(const LieAlgebra& g, const RationalMatrix& j);

// [U,V] = x U + y V certificate when span{U,V} is closed under the
// complexified bracket. Degenerate spans (rank < 2) count as closed.
std::optional<std::pair<GaussianScalar, GaussianScalar>> subalgebra_certificate(
    const LieAlgebra& g, const GaussianVector& u, const GaussianVector& v);

// {U, V, sigma(U), sigma(V)} spans the complexification, i.e. the four real
// vectors Re U, Im U, Re V, Im V are independent.
bool direct_sum_with_conjugate(const GaussianVector& u, const GaussianVector& v);

// J with -i eigenspace span{U,V}: writing U = X1 + iY1, V = X2 + iY2,
// J X1 = Y1, J Y1 = -X1 and likewise for V. Fails without the direct sum.
std::optional<RationalMatrix> j_from_subalgebra(const GaussianVector& u,
                                                const GaussianVector& v);

// -i eigenspace of an almost complex J (always a 2-plane); closure under
// the bracket holds exactly when J is integrable.
ComplexSubalgebra subalgebra_from_j(const RationalMatrix& j);

// eigenspace-closure route to integrability, independent of nijenhuis()
bool is_integrable_via_subalgebra(const LieAlgebra& g, const RationalMatrix& j);

bool is_abelian_structure(const LieAlgebra& g, const RationalMatrix& j);
bool is_biinvariant(const LieAlgebra& g, const RationalMatrix& j);  // J ad_X = ad_{JX}

// Exhaustive search for complex subalgebras over a coefficient grid. q is
// enumerated as the row space of 2x4 reduced-echelon matrices over Q(i);
// canonically one matrix per 2-plane, so hits are duplicate-free.
struct GridSearchOptions {
  std::vector<GaussianScalar> grid;  // default set if empty
  long long cap = 1'000'000;         // maximum enumerated instances
};

std::vector<GaussianScalar> default_coefficient_grid();

std::vector<ComplexSubalgebra> grid_search_subalgebras(const LieAlgebra& g,
                                                       const GridSearchOptions& opt = {});

// does some grid hit exist at all (a complex structure witness)?
std::optional<RationalMatrix> find_complex_structure(const LieAlgebra& g,
                                                     const GridSearchOptions& opt = {});

std::string to_string(const GaussianVector& v);  // "e1 + i*e2" style

}  // namespace lieinv
