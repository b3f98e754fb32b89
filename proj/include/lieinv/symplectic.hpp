#pragma once

#include <optional>
#include <vector>

#include "lieinv/cohomology.hpp"
#include "lieinv/kform.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

// Pfaffian of a 2-form on a 4-dimensional algebra:
// w ^ w = 2 Pf(w) e^{1234}, i.e. Pf = a12 a34 - a13 a24 + a14 a23.
Scalar pfaffian(const RationalForm& w);

// Basis (reduced echelon in coefficient coordinates) of the closed 2-forms.
std::vector<RationalForm> closed_two_form_basis(const LieAlgebra& g);

// Basis of the exact 2-forms, the image of d on 1-forms.
std::vector<RationalForm> exact_two_form_basis(const LieAlgebra& g);

// Is the Pfaffian identically zero on span{basis}? Decided exactly: a
// quadratic form over Q vanishes identically iff it vanishes on every basis
// vector and every sum of two basis vectors (polarization), so no sampling
// heuristics are involved.
bool pfaffian_vanishes_on(const std::vector<RationalForm>& basis);

// First element of span{basis} (basis vectors, then pairwise sums) with
// Pf != 0; deterministic, and exhaustive by the polarization argument above.
std::optional<RationalForm> nondegenerate_witness(const std::vector<RationalForm>& basis);

// A symplectic form exists iff Pf is nonzero somewhere on the closed
// 2-forms. Returns a witness: deterministically the first basis vector with
// Pf != 0, else the first pairwise sum with Pf != 0.
std::optional<RationalForm> find_symplectic_form(const LieAlgebra& g);

// Same decision on the exact 2-forms; a witness is d of a 1-form.
std::optional<RationalForm> find_exact_symplectic_form(const LieAlgebra& g);

bool is_symplectic(const LieAlgebra& g, const RationalForm& w);  // closed and Pf != 0

}  // namespace lieinv
