#include <comod/mat.hpp>

#include <algorithm>
#include <stdexcept>

namespace comod {

static void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Mat identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; i++) I.at(i, i) = Scalar(1);
  return I;
}

Mat zero_mat(int r, int c) { return Mat(r, c); }

Mat basis_vec(int n, int i) {
  Mat v(n, 1);
  v.at(i, 0) = Scalar(1);
  return v;
}

Mat add(const Field& F, const Mat& A, const Mat& B) {
  require(A.rows == B.rows && A.cols == B.cols, "add: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); k++) C.a[k] = F.add(A.a[k], B.a[k]);
  return C;
}

Mat sub(const Field& F, const Mat& A, const Mat& B) {
  require(A.rows == B.rows && A.cols == B.cols, "sub: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); k++) C.a[k] = F.sub(A.a[k], B.a[k]);
  return C;
}

Mat mul(const Field& F, const Mat& A, const Mat& B) {
  require(A.cols == B.rows, "mul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; i++)
    for (int k = 0; k < A.cols; k++) {
      const Scalar& aik = A.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < B.cols; j++)
        C.at(i, j) += aik * B.at(k, j);
    }
  for (auto& x : C.a) x = F.norm(x);
  return C;
}

Mat scl(const Field& F, const Scalar& c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); k++) C.a[k] = F.mul(c, A.a[k]);
  return C;
}

Mat neg(const Field& F, const Mat& A) { return scl(F, Scalar(-1), A); }

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++) T.at(j, i) = A.at(i, j);
  return T;
}

Mat norm_mat(const Field& F, const Mat& A) {
  Mat C = A;
  for (auto& x : C.a) x = F.norm(x);
  return C;
}

bool is_zero_mat(const Field& F, const Mat& A) {
  for (auto& x : A.a)
    if (!F.is_zero(x)) return false;
  return true;
}

Mat kron(const Field& F, const Mat& A, const Mat& B) {
  Mat C(A.rows * B.rows, A.cols * B.cols);
  for (int i1 = 0; i1 < A.rows; i1++)
    for (int j1 = 0; j1 < A.cols; j1++) {
      if (F.is_zero(A.at(i1, j1))) continue;
      for (int i2 = 0; i2 < B.rows; i2++)
        for (int j2 = 0; j2 < B.cols; j2++)
          C.at(i1 * B.rows + i2, j1 * B.cols + j2) =
              F.mul(A.at(i1, j1), B.at(i2, j2));
    }
  return C;
}

Mat hcat(const Mat& A, const Mat& B) {
  require(A.rows == B.rows, "hcat: row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; i++) {
    for (int j = 0; j < A.cols; j++) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; j++) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

Mat vcat(const Mat& A, const Mat& B) {
  require(A.cols == B.cols, "vcat: col mismatch");
  Mat C(A.rows + B.rows, A.cols);
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; i++)
    for (int j = 0; j < A.cols; j++) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

Mat direct_sum(const Mat& A, const Mat& B) {
  Mat C(A.rows + B.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; i++)
    for (int j = 0; j < B.cols; j++) C.at(A.rows + i, A.cols + j) = B.at(i, j);
  return C;
}

Mat swap_tensor(int m, int n) {
  Mat S(m * n, m * n);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < n; j++) S.at(j * m + i, i * n + j) = Scalar(1);
  return S;
}

Rref rref(const Field& F, const Mat& A) {
  Rref out;
  out.R = norm_mat(F, A);
  Mat& R = out.R;
  int r = 0;
  for (int c = 0; c < R.cols && r < R.rows; c++) {
    int pr = -1;
    for (int i = r; i < R.rows; i++)
      if (!F.is_zero(R.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < R.cols; j++) std::swap(R.at(pr, j), R.at(r, j));
    Scalar s = F.inv(R.at(r, c));
    for (int j = c; j < R.cols; j++) R.at(r, j) = F.mul(s, R.at(r, j));
    for (int i = 0; i < R.rows; i++) {
      if (i == r || F.is_zero(R.at(i, c))) continue;
      Scalar f = R.at(i, c);
      for (int j = c; j < R.cols; j++)
        R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
    }
    out.pivots.push_back(c);
    r++;
  }
  return out;
}

int rank(const Field& F, const Mat& A) { return int(rref(F, A).pivots.size()); }

Mat kernel_basis(const Field& F, const Mat& A) {
  Rref E = rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : E.pivots) is_pivot[c] = true;
  Mat K(A.cols, A.cols - int(E.pivots.size()));
  int k = 0;
  for (int f = 0; f < A.cols; f++) {
    if (is_pivot[f]) continue;
    K.at(f, k) = Scalar(1);
    for (size_t i = 0; i < E.pivots.size(); i++)
      K.at(E.pivots[i], k) = F.neg(E.R.at(int(i), f));
    k++;
  }
  return K;
}

Mat subspace_canon(const Field& F, const Mat& gens) {
  Rref E = rref(F, transpose(gens));
  Mat B(gens.rows, int(E.pivots.size()));
  for (size_t i = 0; i < E.pivots.size(); i++)
    for (int j = 0; j < gens.rows; j++) B.at(j, int(i)) = E.R.at(int(i), j);
  return B;
}

Mat image_basis(const Field& F, const Mat& A) { return subspace_canon(F, A); }

std::optional<Mat> solve(const Field& F, const Mat& A, const Mat& B) {
  require(A.rows == B.rows, "solve: shape mismatch");
  Rref E = rref(F, hcat(A, B));
  for (int c : E.pivots)
    if (c >= A.cols) return std::nullopt;
  Mat X(A.cols, B.cols);
  for (size_t i = 0; i < E.pivots.size(); i++)
    for (int j = 0; j < B.cols; j++)
      X.at(E.pivots[i], j) = E.R.at(int(i), A.cols + j);
  return X;
}

Mat inverse(const Field& F, const Mat& A) {
  require(A.rows == A.cols, "inverse: not square");
  auto X = solve(F, A, identity(A.rows));
  if (!X || rank(F, A) != A.rows) throw std::domain_error("matrix not invertible");
  return *X;
}

Mat subspace_sum(const Field& F, const Mat& A, const Mat& B) {
  return subspace_canon(F, hcat(A, B));
}

Mat subspace_intersect(const Field& F, const Mat& A, const Mat& B) {
  require(A.rows == B.rows, "intersect: ambient mismatch");
  Mat K = kernel_basis(F, hcat(A, neg(F, B)));
  Mat xpart(A.cols, K.cols);
  for (int i = 0; i < A.cols; i++)
    for (int j = 0; j < K.cols; j++) xpart.at(i, j) = K.at(i, j);
  return subspace_canon(F, mul(F, A, xpart));
}

bool subspace_contains(const Field& F, const Mat& A, const Mat& B) {
  require(A.rows == B.rows, "contains: ambient mismatch");
  return solve(F, A, B).has_value();
}

bool subspace_eq(const Field& F, const Mat& A, const Mat& B) {
  return subspace_canon(F, A) == subspace_canon(F, B);
}

Quotient quotient(const Field& F, int n, const Mat& U) {
  require(U.rows == n, "quotient: ambient mismatch");
  Mat B = subspace_canon(F, U);
  int k = B.cols;
  std::vector<bool> piv(n, false);
  for (int j = 0; j < k; j++)
    for (int i = 0; i < n; i++)
      if (!F.is_zero(B.at(i, j))) {
        piv[i] = true;
        break;
      }
  Mat sect(n, n - k);
  int c = 0;
  for (int i = 0; i < n; i++)
    if (!piv[i]) sect.at(i, c++) = Scalar(1);
  Mat T = hcat(B, sect);
  Mat Tinv = inverse(F, T);
  Mat proj(n - k, n);
  for (int i = 0; i < n - k; i++)
    for (int j = 0; j < n; j++) proj.at(i, j) = Tinv.at(k + i, j);
  return {proj, sect};
}

Mat equalizer(const Field& F, const Mat& f, const Mat& g) {
  return kernel_basis(F, sub(F, f, g));
}

Quotient coequalizer(const Field& F, const Mat& f, const Mat& g) {
  return quotient(F, f.rows, image_basis(F, sub(F, f, g)));
}

Mat coords_in(const Field& F, const Mat& incl, const Mat& vecs) {
  auto X = solve(F, incl, vecs);
  if (!X) throw std::domain_error("vectors not contained in subspace");
  return *X;
}

Mat from_cols(const std::vector<Mat>& cols) {
  if (cols.empty()) return Mat(0, 0);
  Mat C(cols[0].rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); j++)
    for (int i = 0; i < C.rows; i++) C.at(i, int(j)) = cols[j].at(i, 0);
  return C;
}

std::string str(const Field& F, const Mat& A) {
  std::string s = "[";
  for (int i = 0; i < A.rows; i++) {
    if (i) s += "; ";
    for (int j = 0; j < A.cols; j++) {
      if (j) s += " ";
      s += F.str(A.at(i, j));
    }
  }
  return s + "]";
}

}  // namespace comod
