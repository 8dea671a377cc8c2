#include "gradedalg/matrix.hpp"

namespace gradedalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw InternalError("matrix product: shape mismatch");
  Matrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw InternalError("mat_vec: shape mismatch");
  Vec out(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

Matrix rref(Matrix m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

int rank(Matrix m) {
  std::vector<int> piv;
  rref(std::move(m), &piv);
  return static_cast<int>(piv.size());
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(m.cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), c);
    out.push_back(std::move(v));
  }
  return out;
}

bool solve(const Matrix& m, const Vec& b, Vec& x) {
  if (static_cast<int>(b.size()) != m.rows)
    throw InternalError("solve: shape mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv;
  Matrix r = rref(std::move(aug), &piv);
  for (int c : piv)
    if (c == m.cols) return false;  // inconsistent
  x.assign(m.cols, Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[piv[i]] = r.at(static_cast<int>(i), m.cols);
  return true;
}

int quotient_dim(const Matrix& d_prev, const Matrix& d_cur) {
  if (d_prev.rows != d_cur.cols)
    throw InputError("quotient_dim: boundary maps do not compose");
  if (!(d_cur * d_prev).is_zero())
    throw InputError("quotient_dim: d.d != 0, input is not a complex");
  int nullity = d_cur.cols - rank(d_cur);
  return nullity - rank(d_prev);
}

std::vector<Vec> echelonize(const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Matrix m(static_cast<int>(vs.size()), static_cast<int>(vs[0].size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = vs[i][j];
  std::vector<int> piv;
  Matrix r = rref(std::move(m), &piv);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Vec v(r.cols);
    for (int j = 0; j < r.cols; ++j) v[j] = r.at(static_cast<int>(i), j);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> reduce_mod(const std::vector<Vec>& vs,
                            const std::vector<Vec>& mod) {
  std::vector<Vec> base = echelonize(mod);
  // Reduce each vector against the echelon basis of the submodule, then
  // echelonize what survives.
  std::vector<Vec> reduced;
  for (Vec v : vs) {
    for (const Vec& b : base) {
      int lead = -1;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) {
          lead = static_cast<int>(j);
          break;
        }
      if (lead >= 0 && v[lead] != 0) {
        Rat f = v[lead] / b[lead];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
      }
    }
    if (!vec_is_zero(v)) reduced.push_back(std::move(v));
  }
  return echelonize(reduced);
}

}  // namespace gradedalg
