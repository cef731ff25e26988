#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "semiclass/lie.hpp"
#include "semiclass/matrix.hpp"

using namespace semiclass;

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat zero_mat(std::size_t n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

Mat identity(std::size_t n) {
  Mat m = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (b[j][k] != 0) c[i][k] += a[i][j] * b[j][k];
    }
  return c;
}

Mat sub(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) c[i][j] += b[i][j];
  return c;
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), m = b.size();
  Mat c = zero_mat(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (b[k][l] != 0) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
    }
  return c;
}

// Independent oracle: represent g^(x)3 faithfully inside End(V (x) V (x) V)
// using the defining representation, and evaluate the Schouten bracket as
// honest matrix commutators of the three leg embeddings.
struct Rep3 {
  std::vector<Mat> basis;  // defining rep of each basis element
  std::size_t n;           // defining dimension

  explicit Rep3(const std::string& preset) : basis(fundamental_matrices(preset)) {
    n = basis[0].size();
  }

  Mat embed2(const Tensor& a, int leg1, int leg2) const {
    const std::size_t N = n * n * n;
    Mat out = zero_mat(N);
    for (unsigned p = 0; p < a.dim(); ++p)
      for (unsigned q = 0; q < a.dim(); ++q) {
        const Rational& v = a.at({p, q});
        if (v == 0) continue;
        std::vector<Mat> legs(3, identity(n));
        legs[leg1] = basis[p];
        legs[leg2] = basis[q];
        Mat term = kron(kron(legs[0], legs[1]), legs[2]);
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j)
            if (term[i][j] != 0) out[i][j] += v * term[i][j];
      }
    return out;
  }

  Mat embed3(const Tensor& t) const {
    const std::size_t N = n * n * n;
    Mat out = zero_mat(N);
    for (std::size_t f = 0; f < t.size(); ++f) {
      const Rational& v = t.flat(f);
      if (v == 0) continue;
      std::vector<unsigned> idx = t.multi_index(f);
      Mat term = kron(kron(basis[idx[0]], basis[idx[1]]), basis[idx[2]]);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (term[i][j] != 0) out[i][j] += v * term[i][j];
    }
    return out;
  }

  Mat schouten_matrix(const Tensor& a, const Tensor& b) const {
    Mat a12 = embed2(a, 0, 1), a13 = embed2(a, 0, 2);
    Mat b13 = embed2(b, 0, 2), b23 = embed2(b, 1, 2);
    auto comm = [](const Mat& x, const Mat& y) { return sub(mul(x, y), mul(y, x)); };
    return add(add(comm(a12, b13), comm(a12, b23)), comm(a13, b23));
  }
};

Tensor rotate_legs(const Tensor& t) { return tensor_permute(t, {1, 2, 0}); }

}  // namespace

TEST_CASE("preset sl2 carries the expected bracket table") {
  LieAlgebra L = preset_algebra("sl2");
  CHECK(L.dim == 3);
  CHECK(L.basis_names == std::vector<std::string>{"e+", "e-", "e3"});
  Tensor expect(3, 3);
  expect.at({0, 1, 2}) = 1;   // [e+,e-] = e3
  expect.at({1, 0, 2}) = -1;
  expect.at({2, 0, 0}) = 2;   // [e3,e+] = 2e+
  expect.at({0, 2, 0}) = -2;
  expect.at({2, 1, 1}) = -2;  // [e3,e-] = -2e-
  expect.at({1, 2, 1}) = 2;
  CHECK(L.f == expect);
}

TEST_CASE("preset b2 has [H,X] = X and nothing else") {
  LieAlgebra L = preset_algebra("b2");
  CHECK(L.dim == 2);
  Tensor expect(2, 3);
  expect.at({0, 1, 1}) = 1;
  expect.at({1, 0, 1}) = -1;
  CHECK(L.f == expect);
  CHECK_THROWS_AS(preset_algebra("e8"), std::invalid_argument);
}

TEST_CASE("jacobi_residual vanishes on presets and flags corruption") {
  for (const char* name : {"sl2", "sl3", "sl4", "so5", "b2"})
    CHECK(jacobi_residual(preset_algebra(name)).is_zero());
  CHECK(jacobi_residual(abelian_algebra(3)).is_zero());

  // A single corrupted entry (antisymmetric partner left alone) breaks Jacobi.
  LieAlgebra bad = preset_algebra("sl2");
  bad.f.at({0, 1, 2}) = 2;
  CHECK_FALSE(jacobi_residual(bad).is_zero());
}

TEST_CASE("killing form of sl2 is the paper table and sl3's is nondegenerate") {
  Tensor K = killing(preset_algebra("sl2"));
  CHECK(K.at({2, 2}) == 8);
  CHECK(K.at({0, 1}) == 4);
  CHECK(K.at({1, 0}) == 4);
  CHECK(K.at({0, 0}) == 0);
  CHECK(K.at({0, 2}) == 0);
  CHECK(K.at({2, 1}) == 0);

  CHECK(killing(abelian_algebra(4)).is_zero());

  Tensor K3 = killing(preset_algebra("sl3"));
  Mat k3(8, std::vector<Rational>(8));
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) k3[i][j] = K3.at({i, j});
  CHECK_NOTHROW(invert_dense(k3));  // nondegenerate
}

TEST_CASE("standard_r reproduces the sl2 form and satisfies CYBE on sl_n") {
  RMatrix r2 = standard_r(preset_algebra("sl2"));
  Tensor expect(3, 2);
  expect.at({0, 1}) = 1;
  expect.at({2, 2}) = frac(1, 4);
  CHECK(r2.value == expect);

  for (const char* name : {"sl2", "sl3", "sl4"}) {
    RMatrix r = standard_r(preset_algebra(name));
    CHECK(cybe_residual(r).is_zero());
    CHECK(ad_invariance_residual(r.algebra, r_plus(r).value).is_zero());
  }

  CHECK_THROWS_AS(standard_r(preset_algebra("so5")), std::invalid_argument);
  CHECK_THROWS_AS(standard_r(preset_algebra("b2")), std::invalid_argument);
}

TEST_CASE("triangular b2 witness: r+ = 0, CYBE holds, n vanishes") {
  RMatrix r = triangular_r_b2();
  CHECK(r_plus(r).value.is_zero());
  CHECK(cybe_residual(r).is_zero());
  CHECK(n_tensor(r).is_zero());
}

TEST_CASE("schouten bracket matches the matrix-representation oracle") {
  for (const char* name : {"sl2", "sl3", "sl4"}) {
    LieAlgebra L = preset_algebra(name);
    RMatrix r = standard_r(L);
    RMatrix rm = r_minus(r);
    Rep3 rep(name);
    CHECK(rep.schouten_matrix(r.value, r.value) == rep.embed3(schouten(r, r)));
    CHECK(rep.schouten_matrix(rm.value, rm.value) == rep.embed3(schouten(rm, rm)));
  }
  RMatrix rb = triangular_r_b2();
  Rep3 repb("b2");
  CHECK(repb.schouten_matrix(rb.value, rb.value) == repb.embed3(schouten(rb, rb)));
}

TEST_CASE("schouten special values on sl2") {
  LieAlgebra L = preset_algebra("sl2");
  RMatrix zero{L, Tensor(3, 2)};
  RMatrix r = standard_r(L);
  CHECK(schouten(zero, r).is_zero());
  CHECK(schouten(r, r).is_zero());

  Tensor n = n_tensor(r);
  CHECK_FALSE(n.is_zero());
  // Totally antisymmetric: odd under both adjacent transpositions.
  CHECK(tensor_permute(n, {1, 0, 2}) == -n);
  CHECK(tensor_permute(n, {0, 2, 1}) == -n);
  CHECK(ad_invariance_residual(L, n).is_zero());
}

TEST_CASE("n equals -schouten(r+, r+) and m's cyclic sum rebuilds n") {
  for (const char* name : {"sl2", "sl3", "sl4"}) {
    RMatrix r = standard_r(preset_algebra(name));
    RMatrix rp = r_plus(r);
    CHECK(n_tensor(r) == -schouten(rp, rp));
    CHECK(ad_invariance_residual(r.algebra, n_tensor(r)).is_zero());

    // For antisymmetric r-, the three Schouten terms are the cyclic rotations
    // of m = [r-13, r-23], so m + rot(m) + rot^2(m) = n exactly.
    Tensor m = m_tensor(r);
    CHECK(m + rotate_legs(m) + rotate_legs(rotate_legs(m)) == n_tensor(r));
  }
  RMatrix rb = triangular_r_b2();
  Tensor mb = m_tensor(rb);
  CHECK((mb + rotate_legs(mb) + rotate_legs(rotate_legs(mb))) == n_tensor(rb));
}

TEST_CASE("cobracket of the standard sl2 r matches the paper's delta") {
  RMatrix r = standard_r(preset_algebra("sl2"));
  Cobracket d = cobracket_from_r(r);
  Tensor expect(3, 3);
  expect.at({0, 0, 2}) = frac(1, 2);   // delta e+ = 1/2 (e+ (x) e3 - e3 (x) e+)
  expect.at({0, 2, 0}) = frac(-1, 2);
  expect.at({1, 1, 2}) = frac(1, 2);   // delta e- = 1/2 (e- (x) e3 - e3 (x) e-)
  expect.at({1, 2, 1}) = frac(-1, 2);
  CHECK(d.value == expect);
}

TEST_CASE("cobracket output is antisymmetric and passes both residuals") {
  for (const char* name : {"sl2", "sl3", "sl4"}) {
    Cobracket d = cobracket_from_r(standard_r(preset_algebra(name)));
    CHECK(tensor_permute(d.value, {0, 2, 1}) == -d.value);
    CHECK(cocycle_residual(d).is_zero());
    CHECK(cojacobi_residual(d).is_zero());
  }
  Cobracket db = cobracket_from_r(triangular_r_b2());
  CHECK(tensor_permute(db.value, {0, 2, 1}) == -db.value);
  CHECK(cocycle_residual(db).is_zero());
  CHECK(cojacobi_residual(db).is_zero());
}

TEST_CASE("degenerate and perturbed cobrackets") {
  LieAlgebra ab = abelian_algebra(3);
  Tensor anyr(3, 2);
  anyr.at({0, 1}) = 5;
  anyr.at({2, 0}) = frac(-2, 7);
  Cobracket dab = cobracket_from_r(RMatrix{ab, anyr});
  CHECK(dab.value.is_zero());

  LieAlgebra L = preset_algebra("sl2");
  Cobracket zero{L, Tensor(3, 3)};
  CHECK(cocycle_residual(zero).is_zero());
  CHECK(cojacobi_residual(zero).is_zero());

  Cobracket d = cobracket_from_r(standard_r(L));
  d.value.at({0, 0, 2}) += 1;
  bool flagged = !cocycle_residual(d).is_zero() || !cojacobi_residual(d).is_zero();
  CHECK(flagged);
}

TEST_CASE("r_minus_from_cochain is flip minus identity") {
  Tensor sym(3, 2);
  sym.at({0, 1}) = 2;
  sym.at({1, 0}) = 2;
  sym.at({2, 2}) = frac(-1, 3);
  CHECK(r_minus_from_cochain(sym).is_zero());

  Tensor rminus(3, 2);
  rminus.at({0, 1}) = frac(1, 2);
  rminus.at({1, 0}) = frac(-1, 2);
  CHECK(r_minus_from_cochain(rminus * frac(-1, 2)) == rminus);

  Tensor f(3, 2);
  f.at({0, 1}) = 1;  // e+ (x) e-
  Tensor expect(3, 2);
  expect.at({1, 0}) = 1;
  expect.at({0, 1}) = -1;
  CHECK(r_minus_from_cochain(f) == expect);
  CHECK(tensor_permute(r_minus_from_cochain(f), {1, 0}) == -r_minus_from_cochain(f));
}
