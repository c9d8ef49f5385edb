#include "filiform/algebra.hpp"

#include <algorithm>

#include "filiform/errors.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

Vector StructureTensor::basis_product(int i, int j) const {
  Vector out(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) out[k] = at(i, j, k);
  return out;
}

StructureTensor build_table_first_class(const ParamVector& p) {
  const int n = p.n;
  StructureTensor T(n + 1);
  T.at(0, 0, 2) = Scalar(1);
  for (int i = 1; i <= n - 1; ++i) T.at(i, 0, i + 1) = Scalar(1);
  // e_0 e_1 runs alpha_3 .. alpha_{n-1} and finishes with theta (not alpha_n).
  for (int k = 3; k <= n - 1; ++k) T.at(0, 1, k) = p.a(k);
  T.at(0, 1, n) = p.theta;
  // e_j e_1 = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n.
  for (int j = 1; j <= n - 2; ++j)
    for (int k = 3; k <= n + 1 - j; ++k) T.at(j, 1, j + k - 1) = p.a(k);
  return T;
}

Vector product(const StructureTensor& T, const Vector& x, const Vector& y) {
  if (static_cast<int>(x.size()) != T.dim || static_cast<int>(y.size()) != T.dim)
    throw DimensionMismatch("product operands must have length dim");
  Vector out(static_cast<std::size_t>(T.dim));
  for (int i = 0; i < T.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < T.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar coef = x[i] * y[j];
      for (int k = 0; k < T.dim; ++k) {
        const Scalar& g = T.at(i, j, k);
        if (!g.is_zero()) out[k] += coef * g;
      }
    }
  }
  return out;
}

std::vector<LeibnizViolation> check_leibniz(const StructureTensor& T) {
  const int dim = T.dim;
  std::vector<LeibnizViolation> violations;
  // Cache all pairwise basis products once; each triple then needs three
  // vector-by-basis products.
  std::vector<Vector> pair(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      pair[static_cast<std::size_t>(i) * dim + j] = T.basis_product(i, j);

  auto basis_times = [&](int i, const Vector& w) {
    Vector out(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      if (w[j].is_zero()) continue;
      for (int k = 0; k < dim; ++k) {
        const Scalar& g = T.at(i, j, k);
        if (!g.is_zero()) out[k] += w[j] * g;
      }
    }
    return out;
  };
  auto times_basis = [&](const Vector& w, int j) {
    Vector out(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      if (w[i].is_zero()) continue;
      for (int k = 0; k < dim; ++k) {
        const Scalar& g = T.at(i, j, k);
        if (!g.is_zero()) out[k] += w[i] * g;
      }
    }
    return out;
  };

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Vector lhs = basis_times(i, pair[static_cast<std::size_t>(j) * dim + k]);
        Vector rhs = times_basis(pair[static_cast<std::size_t>(i) * dim + j], k);
        const Vector& sub = pair[static_cast<std::size_t>(i) * dim + k];
        Vector sub_j = times_basis(sub, j);
        for (int c = 0; c < dim; ++c) rhs[c] -= sub_j[c];
        if (lhs != rhs)
          violations.push_back({i, j, k, std::move(lhs), std::move(rhs)});
      }
  return violations;
}

std::vector<int> lower_central_series(const StructureTensor& T) {
  const int dim = T.dim;
  std::vector<int> dims = {dim};
  // L^1 = whole space, spanned by the basis.
  std::vector<Vector> span;
  for (int i = 0; i < dim; ++i) {
    Vector e(static_cast<std::size_t>(dim));
    e[i] = Scalar(1);
    span.push_back(std::move(e));
  }
  while (true) {
    std::vector<Vector> next;
    for (const Vector& u : span)
      for (int j = 0; j < dim; ++j) {
        Vector ej(static_cast<std::size_t>(dim));
        ej[j] = Scalar(1);
        Vector w = product(T, u, ej);
        if (std::any_of(w.begin(), w.end(),
                        [](const Scalar& s) { return !s.is_zero(); }))
          next.push_back(std::move(w));
      }
    int d = row_reduce(next);
    next.resize(static_cast<std::size_t>(d));  // keep the reduced spanning rows
    dims.push_back(d);
    if (d == 0) return dims;
    if (d == dims[dims.size() - 2])
      throw NotNilpotent("lower central series stabilized at dimension " +
                         std::to_string(d));
    span = std::move(next);
  }
}

bool check_filiform(const StructureTensor& T) {
  const int n = T.dim - 1;
  std::vector<int> expected = {n + 1};
  for (int i = 2; i <= n; ++i) expected.push_back(n + 1 - i);
  expected.push_back(0);
  try {
    return lower_central_series(T) == expected;
  } catch (const NotNilpotent&) {
    return false;
  }
}

std::string render_table(const StructureTensor& T) {
  std::string out;
  for (int i = 0; i < T.dim; ++i)
    for (int j = 0; j < T.dim; ++j) {
      bool any = false;
      std::string line =
          "e_" + std::to_string(i) + " e_" + std::to_string(j) + " = ";
      for (int k = 0; k < T.dim; ++k) {
        const Scalar& c = T.at(i, j, k);
        if (c.is_zero()) continue;
        if (any) line += " + ";
        std::string text = format_scalar(c);
        if (text == "1") {
          line += "e_" + std::to_string(k);
        } else if (text.find_first_of("+-/i") != std::string::npos) {
          line += "(" + text + ")*e_" + std::to_string(k);
        } else {
          line += text + "*e_" + std::to_string(k);
        }
        any = true;
      }
      if (any) {
        out += line;
        out += '\n';
      }
    }
  return out;
}

}  // namespace filiform
