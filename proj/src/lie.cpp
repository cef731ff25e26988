#include "semiclass/lie.hpp"

#include <stdexcept>

#include "semiclass/matrix.hpp"

namespace semiclass {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat zero_mat(std::size_t n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

Mat commutator(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i][j] != 0) c[i][k] += a[i][j] * b[j][k];
        if (b[i][j] != 0) c[i][k] -= b[i][j] * a[j][k];
      }
    }
  return c;
}

bool is_sl(const std::string& name, unsigned& n_out) {
  if (name == "sl2") return n_out = 2, true;
  if (name == "sl3") return n_out = 3, true;
  if (name == "sl4") return n_out = 4, true;
  return false;
}

// Expands a commutator of basis matrices back into basis coefficients.
// sl_n: off-diagonal entries are E_ij coefficients; the traceless diagonal d
// expands over h_a = E_aa - E_{a+1,a+1} with c_a = d_1 + ... + d_a.
std::vector<Rational> expand_sln(unsigned n, const Mat& M) {
  std::vector<Rational> coeff;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) coeff.push_back(M[i][j]);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) coeff.push_back(M[j][i]);
  Rational partial = 0;
  for (unsigned a = 0; a + 1 < n; ++a) {
    partial += M[a][a];
    coeff.push_back(partial);
  }
  return coeff;
}

std::vector<Rational> expand_so5(const Mat& M) {
  std::vector<Rational> coeff;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) coeff.push_back(M[i][j]);
  return coeff;
}

std::vector<Rational> expand_b2(const Mat& M) {
  return {M[0][0], M[0][1]};  // H = diag(1,0), X = E12
}

std::vector<Rational> expand_in_basis(const std::string& name, const Mat& M) {
  unsigned n = 0;
  if (is_sl(name, n)) return expand_sln(n, M);
  if (name == "so5") return expand_so5(M);
  if (name == "b2") return expand_b2(M);
  throw std::invalid_argument("expand_in_basis: unknown preset '" + name + "'");
}

std::vector<std::string> preset_names(const std::string& name) {
  unsigned n = 0;
  if (name == "sl2") return {"e+", "e-", "e3"};
  if (is_sl(name, n)) {
    std::vector<std::string> out;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        out.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        out.push_back("f" + std::to_string(i + 1) + std::to_string(j + 1));
    for (unsigned a = 0; a + 1 < n; ++a) out.push_back("h" + std::to_string(a + 1));
    return out;
  }
  if (name == "so5") {
    std::vector<std::string> out;
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = i + 1; j < 5; ++j)
        out.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
    return out;
  }
  if (name == "b2") return {"H", "X"};
  throw std::invalid_argument("preset_algebra: unknown preset '" + name + "'");
}

}  // namespace

std::vector<Mat> fundamental_matrices(const std::string& name) {
  unsigned n = 0;
  if (is_sl(name, n)) {
    std::vector<Mat> mats;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        Mat e = zero_mat(n);
        e[i][j] = 1;
        mats.push_back(e);
      }
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        Mat e = zero_mat(n);
        e[j][i] = 1;
        mats.push_back(e);
      }
    for (unsigned a = 0; a + 1 < n; ++a) {
      Mat h = zero_mat(n);
      h[a][a] = 1;
      h[a + 1][a + 1] = -1;
      mats.push_back(h);
    }
    return mats;
  }
  if (name == "so5") {
    std::vector<Mat> mats;
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = i + 1; j < 5; ++j) {
        Mat m = zero_mat(5);
        m[i][j] = 1;
        m[j][i] = -1;
        mats.push_back(m);
      }
    return mats;
  }
  if (name == "b2") {
    Mat h = zero_mat(2), x = zero_mat(2);
    h[0][0] = 1;
    x[0][1] = 1;
    return {h, x};
  }
  throw std::invalid_argument("fundamental_matrices: unknown preset '" + name + "'");
}

LieAlgebra preset_algebra(const std::string& name) {
  std::vector<Mat> mats = fundamental_matrices(name);
  const unsigned dim = static_cast<unsigned>(mats.size());
  const std::size_t msize = mats[0].size();

  LieAlgebra L;
  L.name = name;
  L.dim = dim;
  L.basis_names = preset_names(name);
  L.f = Tensor(dim, 3);
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = a + 1; b < dim; ++b) {
      Mat M = commutator(mats[a], mats[b]);
      std::vector<Rational> coeff = expand_in_basis(name, M);
      // Guard the expansion: the coefficients must reproduce the commutator.
      Mat check = zero_mat(msize);
      for (unsigned c = 0; c < dim; ++c)
        for (std::size_t i = 0; i < msize; ++i)
          for (std::size_t j = 0; j < msize; ++j) check[i][j] += coeff[c] * mats[c][i][j];
      if (check != M)
        throw std::logic_error("preset_algebra: basis expansion failed for " + name);
      for (unsigned c = 0; c < dim; ++c) {
        L.f.at({a, b, c}) = coeff[c];
        L.f.at({b, a, c}) = -coeff[c];
      }
    }
  return L;
}

LieAlgebra abelian_algebra(unsigned dim) {
  LieAlgebra L;
  L.name = "abelian" + std::to_string(dim);
  L.dim = dim;
  for (unsigned i = 1; i <= dim; ++i) L.basis_names.push_back("a" + std::to_string(i));
  L.f = Tensor(dim, 3);
  return L;
}

Tensor jacobi_residual(const LieAlgebra& L) {
  // J(a,b,c,d) = f_{ab}^s f_{sc}^d, then the cyclic sum over (a,b,c).
  Tensor J = tensor_contract(L.f, L.f, {{2, 0}});
  return J + tensor_permute(J, {2, 0, 1, 3}) + tensor_permute(J, {1, 2, 0, 3});
}

Tensor killing(const LieAlgebra& L) {
  // K(a,b) = f_{as}^t f_{bt}^s.
  return tensor_contract(L.f, L.f, {{1, 2}, {2, 1}});
}

Tensor ad_invariance_residual(const LieAlgebra& L, const Tensor& T) {
  const unsigned d = L.dim, k = T.rank();
  if (T.dim() != d) throw std::invalid_argument("ad_invariance_residual: dimension mismatch");
  Tensor out(d, k + 1);
  std::vector<unsigned> oidx(k + 1);
  for (std::size_t ft = 0; ft < T.size(); ++ft) {
    const Rational& tv = T.flat(ft);
    if (tv == 0) continue;
    std::vector<unsigned> idx = T.multi_index(ft);
    for (unsigned j = 0; j < k; ++j) {
      const unsigned s = idx[j];
      for (unsigned v = 0; v < d; ++v)
        for (unsigned t = 0; t < d; ++t) {
          const Rational& fv = L.f.at({v, s, t});
          if (fv == 0) continue;
          oidx[0] = v;
          for (unsigned l = 0; l < k; ++l) oidx[l + 1] = idx[l];
          oidx[j + 1] = t;
          out.at(oidx) += fv * tv;
        }
    }
  }
  return out;
}

RMatrix standard_r(const LieAlgebra& L) {
  unsigned n = 0;
  if (!is_sl(L.name, n))
    throw std::invalid_argument("standard_r: preset '" + L.name +
                                "' has no stored standard r");
  const unsigned npos = n * (n - 1) / 2;
  const unsigned ncartan = n - 1;
  std::vector<Mat> mats = fundamental_matrices(L.name);

  Tensor r(L.dim, 2);
  for (unsigned p = 0; p < npos; ++p) r.at({p, npos + p}) = 1;

  // Cartan block: 1/2 of the inverse Gram matrix of tr(h_a h_b).
  Mat gram = zero_mat(ncartan);
  for (unsigned a = 0; a < ncartan; ++a)
    for (unsigned b = 0; b < ncartan; ++b) {
      Rational tr = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) tr += mats[2 * npos + a][i][j] * mats[2 * npos + b][j][i];
      gram[a][b] = tr;
    }
  Mat ginv = invert_dense(gram);
  for (unsigned a = 0; a < ncartan; ++a)
    for (unsigned b = 0; b < ncartan; ++b)
      r.at({2 * npos + a, 2 * npos + b}) = ginv[a][b] * frac(1, 2);

  return RMatrix{L, std::move(r)};
}

RMatrix triangular_r_b2() {
  LieAlgebra L = preset_algebra("b2");
  Tensor r(2, 2);
  r.at({1, 0}) = 1;   // X (x) H
  r.at({0, 1}) = -1;  // - H (x) X
  return RMatrix{std::move(L), std::move(r)};
}

namespace {

void check_same_algebra(const RMatrix& a, const RMatrix& b) {
  if (a.algebra.dim != b.algebra.dim || a.algebra.f != b.algebra.f)
    throw std::invalid_argument("schouten: r-matrices live over different algebras");
}

}  // namespace

Tensor schouten(const RMatrix& a, const RMatrix& b) {
  check_same_algebra(a, b);
  const Tensor& f = a.algebra.f;
  const Tensor& A = a.value;
  const Tensor& B = b.value;

  // [a12,b13]^{ust} = a^{ps} b^{qt} f_{pq}^u
  Tensor c1 = tensor_contract(A, f, {{0, 0}});        // (s,q,u)
  Tensor t1 = tensor_contract(c1, B, {{1, 0}});       // (s,u,t)
  t1 = tensor_permute(t1, {1, 0, 2});                 // -> (u,s,t)

  // [a12,b23]^{sut} = a^{sp} b^{qt} f_{pq}^u
  Tensor c2 = tensor_contract(A, f, {{1, 0}});        // (s,q,u)
  Tensor t2 = tensor_contract(c2, B, {{1, 0}});       // (s,u,t)

  // [a13,b23]^{stu} = a^{sp} b^{tq} f_{pq}^u
  Tensor t3 = tensor_contract(c2, B, {{1, 1}});       // (s,u,t)
  t3 = tensor_permute(t3, {0, 2, 1});                 // -> (s,t,u)

  return t1 + t2 + t3;
}

RMatrix r_plus(const RMatrix& r) { return RMatrix{r.algebra, symmetrize(r.value, 0, 1)}; }

RMatrix r_minus(const RMatrix& r) { return RMatrix{r.algebra, antisymmetrize(r.value, 0, 1)}; }

Tensor cybe_residual(const RMatrix& r) { return schouten(r, r); }

Tensor n_tensor(const RMatrix& r) {
  RMatrix rm = r_minus(r);
  return schouten(rm, rm);
}

Tensor m_tensor(const RMatrix& r) {
  RMatrix rm = r_minus(r);
  const Tensor& f = r.algebra.f;
  // m^{stu} = r-^{sp} r-^{tq} f_{pq}^u
  Tensor c = tensor_contract(rm.value, f, {{1, 0}});  // (s,q,u)
  Tensor m = tensor_contract(c, rm.value, {{1, 1}});  // (s,u,t)
  return tensor_permute(m, {0, 2, 1});                // -> (s,t,u)
}

Cobracket cobracket_from_r(const RMatrix& r) {
  const Tensor& f = r.algebra.f;
  const unsigned d = r.algebra.dim;
  Tensor delta(d, 3);
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned c = 0; c < d; ++c) {
        Rational acc = 0;
        for (unsigned p = 0; p < d; ++p)
          acc += f.at({a, p, b}) * r.value.at({p, c}) + r.value.at({b, p}) * f.at({a, p, c});
        delta.at({a, b, c}) = acc;
      }
  return Cobracket{r.algebra, std::move(delta)};
}

Tensor cocycle_residual(const Cobracket& delta) {
  const LieAlgebra& L = delta.algebra;
  const Tensor& f = L.f;
  const Tensor& dl = delta.value;
  const unsigned d = L.dim;
  Tensor out(d, 4);
  for (unsigned v = 0; v < d; ++v)
    for (unsigned w = 0; w < d; ++w)
      for (unsigned b = 0; b < d; ++b)
        for (unsigned c = 0; c < d; ++c) {
          Rational acc = 0;
          for (unsigned s = 0; s < d; ++s) {
            acc += f.at({v, w, s}) * dl.at({s, b, c});
            acc -= f.at({v, s, b}) * dl.at({w, s, c}) + f.at({v, s, c}) * dl.at({w, b, s});
            acc += f.at({w, s, b}) * dl.at({v, s, c}) + f.at({w, s, c}) * dl.at({v, b, s});
          }
          out.at({v, w, b, c}) = acc;
        }
  return out;
}

Tensor cojacobi_residual(const Cobracket& delta) {
  const Tensor& dl = delta.value;
  // X(v,p,q,c) = delta_v^{ac} delta_a^{pq}: contract input leg of the inner
  // delta with the first output leg of the outer one.
  Tensor X = tensor_contract(dl, dl, {{1, 0}});       // (v,c,p,q)
  X = tensor_permute(X, {0, 3, 1, 2});                // -> (v,p,q,c)
  return X + tensor_permute(X, {0, 2, 3, 1}) + tensor_permute(X, {0, 3, 1, 2});
}

Tensor r_minus_from_cochain(const Tensor& f) {
  if (f.rank() != 2) throw std::invalid_argument("r_minus_from_cochain: rank-2 input required");
  return tensor_permute(f, {1, 0}) - f;
}

}  // namespace semiclass
