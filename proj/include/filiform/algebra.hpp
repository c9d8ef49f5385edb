#pragma once

#include <string>
#include <vector>

#include "filiform/params.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// Coordinate vector in the basis e_0 .. e_n.
using Vector = std::vector<Scalar>;

/// Dense structure-constant tensor: gamma(i,j,k) is the e_k coefficient of
/// the product e_i e_j. Dimensions here never exceed 9, so the cubic table
/// is tiny and clarity wins over sparsity.
struct StructureTensor {
  int dim = 0;
  std::vector<Scalar> gamma;  // dim^3 entries, index (i*dim + j)*dim + k

  explicit StructureTensor(int dim_)
      : dim(dim_),
        gamma(static_cast<std::size_t>(dim_) * dim_ * dim_) {}

  const Scalar& at(int i, int j, int k) const {
    return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Scalar& at(int i, int j, int k) {
    return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  /// Product of basis vectors e_i e_j as a coordinate vector.
  Vector basis_product(int i, int j) const;
};

/// Builds the first-class multiplication table from a parameter tuple:
///   e_0 e_0 = e_2;  e_i e_0 = e_{i+1} (1 <= i <= n-1);
///   e_0 e_1 = alpha_3 e_3 + ... + alpha_{n-1} e_{n-1} + theta e_n;
///   e_j e_1 = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n (1 <= j <= n-2);
/// all other products zero.
StructureTensor build_table_first_class(const ParamVector& p);

/// Bilinear extension of the table; throws DimensionMismatch.
Vector product(const StructureTensor& T, const Vector& x, const Vector& y);

/// One failing instance of the defining identity.
struct LeibnizViolation {
  int i, j, k;
  Vector lhs;  // e_i (e_j e_k)
  Vector rhs;  // (e_i e_j) e_k - (e_i e_k) e_j
};

/// Exhaustive check of e_i(e_j e_k) = (e_i e_j)e_k - (e_i e_k)e_j over all
/// basis triples. Returns every violation (empty means the identity holds);
/// callers use the list as a diagnostic when arbitrating table typos.
std::vector<LeibnizViolation> check_leibniz(const StructureTensor& T);

/// Dimensions [dim L^1, dim L^2, ...] of the lower central series
/// (L^{k+1} spanned by products of L^k-spanning vectors with basis vectors),
/// computed by exact elimination, ending with the first zero term.
/// Throws NotNilpotent if the series stabilizes at a nonzero dimension.
std::vector<int> lower_central_series(const StructureTensor& T);

/// True iff the series matches the filiform profile
/// [n+1, n-1, n-2, ..., 1, 0] for dim = n+1.
bool check_filiform(const StructureTensor& T);

/// Text rendering, one line per nonzero product: "e_i e_j = e_2 + (c)*e_3".
std::string render_table(const StructureTensor& T);

}  // namespace filiform
