#pragma once

#include "pcolor/algebra.hpp"

namespace pcolor {

/// G = Z with epsilon(m,n) = (-1)^{mn} and degree -2: basis 1 (degree 0) and
/// xi (degree 1), unital product with xi*xi = 0, bracket {xi,xi} = 1.
ColorAlgebra odd_line(const FieldSpec& field);

/// The exterior algebra on two odd generators recast as a Z_2-graded Poisson
/// color algebra of degree 0: {theta_i, theta_j} = delta_ij, both identities
/// exercising a nontrivial sign.
ColorAlgebra grassmann_plane(const FieldSpec& field);

/// Group algebra of a finite G with the zero bracket: e_g e_h = e_{g+h},
/// trivial bicharacter, the given degree.  Requires free rank 0.
ColorAlgebra zero_bracket_group_algebra(const GroupSpec& group, const GroupElement& g0,
                                        const FieldSpec& field);

/// G = Z_m x Z_m over F_m (m an odd prime): e_u e_v = e_{u+v} and
/// {e_u, e_v} = c det(u|v) e_{u+v+g0}, trivial bicharacter.  The 2x2
/// Grassmann-Pluecker identity makes the Jacobi identity hold for every
/// degree g0; c must be nonzero mod m.
ColorAlgebra det_torus(std::uint64_t m, long long c, const std::vector<std::int64_t>& g0);

/// Blockwise direct sum on the product group: degrees embed per block, all
/// cross products vanish, the bicharacter is block diagonal, and the degree
/// is the pair of the two degrees.  Throws like ColorAlgebra::create when
/// the combined grading rejects a block's structure constants.
ColorAlgebra direct_sum(const ColorAlgebra& a, const ColorAlgebra& b);

const std::vector<std::string>& builtin_example_names();

/// One of the bundled examples, constructed over the given field:
/// "odd-line", "orthogonal-sum", "zero-bracket-group-algebra" (G = Z_3) or
/// "color-regrade".  Throws UnknownExample otherwise.
ColorAlgebra builtin_example(const std::string& name, const FieldSpec& field);

}  // namespace pcolor
