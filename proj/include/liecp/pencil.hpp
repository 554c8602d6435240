#pragma once

#include <cstdint>
#include <vector>

#include "liecp/exactnum.hpp"
#include "liecp/sparsepoly.hpp"

namespace liecp {

inline constexpr std::size_t kDefaultPencilCap = 12;

/// The data of det(z0*I + z1*G1 + ... + zm*Gm): the square generator
/// matrices G1..Gm, all of the same size.
struct MatrixPencil {
    std::size_t size = 0;
    std::vector<RationalMatrix> generators;
};

/// Matrices of the sl2 triple (h, e, f) on the (m+1)-dimensional
/// irreducible module with basis v_0..v_m, in the convention
/// h v_k = (m-2k) v_k, e v_k = (m-k+1) v_{k-1}, f v_k = (k+1) v_{k+1}.
/// The bracket identities [h,e] = 2e, [h,f] = -2f, [e,f] = h are verified
/// as exact matrix identities before returning.
MatrixPencil sl2_matrices(std::int64_t m);

/// Exact expanded determinant of the pencil, a homogeneous polynomial of
/// degree = size in variables z0..zm. Fraction-free elimination over the
/// polynomial ring at size >= 5, cofactor expansion below. Throws
/// SizeCapExceeded when size > size_cap or the variable count exceeds 8.
SparsePoly det_pencil(const MatrixPencil& p, std::size_t size_cap = kDefaultPencilCap);

/// f(zD) for a block substitution matrix D: D must be square with one row
/// and column per variable of f, D[0][0] = 1, and the rest of the first row
/// and column zero (z0 stays fixed). Variable z_j is replaced by
/// sum_i z_i * D[i][j]. Throws ShapeError when D violates that shape.
SparsePoly substitute_base_change(const SparsePoly& f, const RationalMatrix& D);

/// Rewrite the pencil generators through an invertible matrix B
/// (G'_i = sum_j B[i][j] G_j), compute both determinants, and check that
/// det(transformed) equals det(original) after the corresponding variable
/// substitution. Throws SingularB when B is not invertible.
bool verify_base_change(const MatrixPencil& p, const RationalMatrix& B,
                        std::size_t size_cap = kDefaultPencilCap);

}  // namespace liecp
