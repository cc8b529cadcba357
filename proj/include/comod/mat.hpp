#pragma once

#include <comod/field.hpp>
#include <optional>
#include <vector>

namespace comod {

// Dense matrix over an exact field. A linear map V -> W with dim V = c,
// dim W = r is an r x c matrix acting on column vectors; composition is
// matrix product. Tensor indexing is i-major throughout: the basis vector
// e_i (x) e_j of V (x) W sits at index i*dim(W) + j.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Scalar(0)) {}

  Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool operator==(const Mat&) const = default;
};

Mat identity(int n);
Mat zero_mat(int r, int c);
Mat basis_vec(int n, int i);

Mat add(const Field& F, const Mat& A, const Mat& B);
Mat sub(const Field& F, const Mat& A, const Mat& B);
Mat mul(const Field& F, const Mat& A, const Mat& B);
Mat scl(const Field& F, const Scalar& c, const Mat& A);
Mat neg(const Field& F, const Mat& A);
Mat transpose(const Mat& A);
Mat norm_mat(const Field& F, const Mat& A);
bool is_zero_mat(const Field& F, const Mat& A);

// Kronecker product, realizing f (x) g on tensor factors in i-major order.
Mat kron(const Field& F, const Mat& A, const Mat& B);

Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat direct_sum(const Mat& A, const Mat& B);

// Permutation matrix V (x) W -> W (x) V, e_i (x) e_j -> e_j (x) e_i,
// where dim V = m, dim W = n.
Mat swap_tensor(int m, int n);

struct Rref {
  Mat R;
  std::vector<int> pivots;  // pivot column of each nonzero row
};
Rref rref(const Field& F, const Mat& A);
int rank(const Field& F, const Mat& A);

// Columns form a basis of the null space (canonical rref parametrization).
Mat kernel_basis(const Field& F, const Mat& A);
// Canonical column-echelon basis of the column space.
Mat image_basis(const Field& F, const Mat& A);

// One solution X of A X = B, free variables set to zero.
std::optional<Mat> solve(const Field& F, const Mat& A, const Mat& B);
Mat inverse(const Field& F, const Mat& A);

// Subspaces of K^n are canonical column-echelon basis matrices (n x k).
Mat subspace_canon(const Field& F, const Mat& gens);
Mat subspace_sum(const Field& F, const Mat& A, const Mat& B);
Mat subspace_intersect(const Field& F, const Mat& A, const Mat& B);
bool subspace_contains(const Field& F, const Mat& A, const Mat& B);
bool subspace_eq(const Field& F, const Mat& A, const Mat& B);

// Quotient of K^n by span(U): proj is (n-k) x n, sect its right inverse,
// proj * U = 0 and proj * sect = identity.
struct Quotient {
  Mat proj;
  Mat sect;
};
Quotient quotient(const Field& F, int n, const Mat& U);

// Equalizer of parallel maps f, g : V -> W as a subspace inclusion of V.
Mat equalizer(const Field& F, const Mat& f, const Mat& g);
// Coequalizer: quotient of W by the image of f - g.
Quotient coequalizer(const Field& F, const Mat& f, const Mat& g);

// Coordinates of vecs in the column basis incl; throws if not contained.
Mat coords_in(const Field& F, const Mat& incl, const Mat& vecs);
Mat from_cols(const std::vector<Mat>& cols);

std::string str(const Field& F, const Mat& A);

}  // namespace comod
