#include "semiclass/moduli.hpp"

#include <cstdint>
#include <stdexcept>

namespace semiclass {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_mul(const Mat& A, const Mat& B) {
  const std::size_t n = A.size();
  Mat C(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(A[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

Rational mat_trace(const Mat& A) {
  Rational t(0);
  for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return t;
}

}  // namespace

RationalMatrix invariant_constraint_matrix(const LieAlgebra& L) {
  const unsigned d = L.dim;
  auto col = [d](unsigned a, unsigned b, unsigned c) -> std::uint32_t {
    return (static_cast<std::uint32_t>(a) * d + b) * d + c;
  };
  RationalMatrix M(0, static_cast<std::size_t>(d) * d * d);

  // Invariance under the ordered basis pair (v,w): the equation
  //   sum_a f(v,w,a) X(a,b,c) - sum_s f(s,w,b) X(v,s,c)
  //                           - sum_s f(s,w,c) X(v,b,s) = 0
  // for every output index (b,c). add_row merges coincident columns.
  // Every ordered pair is needed, diagonal included: the (v,w) and (w,v)
  // equations are not proportional (only their first terms flip sign), and
  // the diagonal states that X(v) is killed by ad_v. Restricting to v < w
  // admits spurious solutions already on sl2; the regression test pins this.
  for (unsigned v = 0; v < d; ++v)
    for (unsigned w = 0; w < d; ++w)
      for (unsigned b = 0; b < d; ++b)
        for (unsigned c = 0; c < d; ++c) {
          SparseRow row;
          for (unsigned a = 0; a < d; ++a) {
            const Rational& f = L.f.at({v, w, a});
            if (!is_zero(f)) row.push_back({col(a, b, c), f});
          }
          for (unsigned s = 0; s < d; ++s) {
            const Rational& fb = L.f.at({s, w, b});
            if (!is_zero(fb)) row.push_back({col(v, s, c), -fb});
            const Rational& fc = L.f.at({s, w, c});
            if (!is_zero(fc)) row.push_back({col(v, b, s), -fc});
          }
          M.add_row(std::move(row));
        }

  // Output symmetry X(a,b,c) = X(a,c,b).
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned c = b + 1; c < d; ++c)
        M.add_row({{col(a, b, c), Rational(1)}, {col(a, c, b), Rational(-1)}});

  return M;
}

ModuliResult moduli_dimension(const LieAlgebra& L) {
  const unsigned d = L.dim;
  NullspaceResult ns = nullspace(invariant_constraint_matrix(L));
  ModuliResult out;
  out.algebra = L.name;
  out.dimension = ns.basis.size();
  for (const auto& vec : ns.basis) {
    Tensor t(d, 3);
    for (std::size_t i = 0; i < vec.size(); ++i) t.flat(i) = vec[i];
    out.basis.push_back(XiHat{std::move(t)});
  }
  return out;
}

XiHat cubic_casimir(unsigned n) {
  if (n < 3)
    throw std::invalid_argument(
        "cubic_casimir: needs sl_n with n >= 3 (the sl2 d-symbol vanishes)");
  LieAlgebra L = preset_algebra("sl" + std::to_string(n));
  const unsigned d = L.dim;
  std::vector<Mat> T = fundamental_matrices(L.name);

  // d(a,b,c) = tr(T_a (T_b T_c + T_c T_b)), totally symmetric by trace
  // cyclicity. Anticommutators are cached per (b,c) with b <= c.
  Tensor dsym(d, 3);
  for (unsigned b = 0; b < d; ++b)
    for (unsigned c = b; c < d; ++c) {
      Mat anti = mat_mul(T[b], T[c]);
      Mat cb = mat_mul(T[c], T[b]);
      for (std::size_t i = 0; i < anti.size(); ++i)
        for (std::size_t j = 0; j < anti.size(); ++j) anti[i][j] += cb[i][j];
      for (unsigned a = 0; a < d; ++a) {
        Rational tr = mat_trace(mat_mul(T[a], anti));
        dsym.at({a, b, c}) = tr;
        if (b != c) dsym.at({a, c, b}) = tr;
      }
    }

  // Raise the output legs with the inverse Killing form.
  Tensor K = killing(L);
  Mat kd(d, std::vector<Rational>(d));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) kd[i][j] = K.at({i, j});
  Mat kinv = invert_dense(kd);

  Tensor hat(d, 3);
  for (unsigned a = 0; a < d; ++a)
    for (unsigned s = 0; s < d; ++s)
      for (unsigned t = 0; t < d; ++t) {
        const Rational& ds = dsym.at({a, s, t});
        if (is_zero(ds)) continue;
        for (unsigned b = 0; b < d; ++b) {
          if (is_zero(kinv[s][b])) continue;
          for (unsigned c = 0; c < d; ++c)
            hat.at({a, b, c}) += ds * kinv[s][b] * kinv[t][c];
        }
      }
  return XiHat{hat};
}

}  // namespace semiclass
