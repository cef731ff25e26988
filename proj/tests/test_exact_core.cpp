#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "semiclass/matrix.hpp"
#include "semiclass/multipoly.hpp"
#include "semiclass/rational.hpp"
#include "semiclass/tensor.hpp"

using namespace semiclass;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return frac(num(rng), den(rng));
}

Tensor random_tensor(std::mt19937& rng, unsigned dim, unsigned rank) {
  Tensor t(dim, rank);
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = random_rational(rng);
  return t;
}

// sl2 in the basis (e+, e-, e3): [e3,e+]=2e+, [e3,e-]=-2e-, [e+,e-]=e3.
Tensor sl2_structure() {
  Tensor f(3, 3);
  f.at({0, 1, 2}) = 1;
  f.at({1, 0, 2}) = -1;
  f.at({2, 0, 0}) = 2;
  f.at({0, 2, 0}) = -2;
  f.at({2, 1, 1}) = -2;
  f.at({1, 2, 1}) = 2;
  return f;
}

Tensor sl2_standard_r() {
  Tensor r(3, 2);
  r.at({0, 1}) = 1;            // e+ (x) e-
  r.at({2, 2}) = frac(1, 4);   // (1/4) e3 (x) e3
  return r;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK(rat_to_string(frac(4, -6)) == "-2/3");
  CHECK(rat_to_string(frac(8, 4)) == "2");
  CHECK(rat_from_string("-21/14") == frac(-3, 2));
  CHECK(rat_from_string("0") == 0);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("polynomial ring axioms hold exactly") {
  std::mt19937 rng(777);
  auto vars = chart_variables(3);
  auto random_poly = [&]() {
    MultiPoly p(vars);
    std::uniform_int_distribution<unsigned> e(0, 3);
    for (int t = 0; t < 6; ++t) p.add_term({e(rng), e(rng), e(rng)}, random_rational(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == MultiPoly(vars));
  }
}

TEST_CASE("polynomial parse/print round-trips bit-exactly") {
  auto vars = chart_variables(2);
  MultiPoly p = parse_poly("3/2*x1^2 - 1*x2 + 5", vars);
  CHECK(p.to_string() == "3/2*x1^2 - 1*x2 + 5");
  CHECK(parse_poly(p.to_string(), vars) == p);

  // Lenient input forms normalize to the canonical printing.
  CHECK(parse_poly("x1", vars).to_string() == "1*x1");
  CHECK(parse_poly("-x1*x2 + x1*x2", vars).is_zero());
  CHECK(parse_poly("2*x1^0", vars).to_string() == "2");
  CHECK(parse_poly("1/2*x2*x1", vars).to_string() == "1/2*x1*x2");

  std::mt19937 rng(424242);
  auto vars4 = chart_variables(4);
  std::uniform_int_distribution<unsigned> e(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly q(vars4);
    for (int t = 0; t < 8; ++t)
      q.add_term({e(rng), e(rng), e(rng), e(rng)}, random_rational(rng));
    CHECK(parse_poly(q.to_string(), vars4) == q);
  }
}

TEST_CASE("polynomial parse errors carry positions") {
  auto vars = chart_variables(2);
  CHECK_THROWS_AS(parse_poly("2*y1", vars), ParseError);
  try {
    parse_poly("2*y1", vars);
  } catch (const ParseError& err) {
    CHECK(err.pos == 2);
  }
  CHECK_THROWS_AS(parse_poly("", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x1", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 + ", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 x2", vars), ParseError);
}

TEST_CASE("poly_partial satisfies the examples and the Leibniz rule") {
  auto vars = chart_variables(2);
  CHECK(poly_partial(parse_poly("1*x1^2*x2", vars), "x1").to_string() == "2*x1*x2");
  CHECK(poly_partial(parse_poly("7/3", vars), "x1").is_zero());
  CHECK(poly_partial(parse_poly("3/2*x1^3 - 1*x2", vars), "x2").to_string() == "-1");
  CHECK_THROWS_AS(poly_partial(parse_poly("1*x1", vars), "q"), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p(vars), q(vars);
    for (int t = 0; t < 5; ++t) {
      p.add_term({e(rng), e(rng)}, random_rational(rng));
      q.add_term({e(rng), e(rng)}, random_rational(rng));
    }
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(poly_partial(p * q, v) == poly_partial(p, v) * q + p * poly_partial(q, v));
  }
}

TEST_CASE("tensor_contract identity and bracket examples") {
  Tensor id3(3, 2), v(3, 1);
  for (unsigned i = 0; i < 3; ++i) id3.at({i, i}) = 1;
  v.at({0}) = 1;
  Tensor w = tensor_contract(id3, v, {{1, 0}});
  CHECK(w == v);

  // Contracting the structure tensor with e3 on the first axis gives ad_{e3}
  // as a matrix: eigenvalues 2, -2, 0 on e+, e-, e3.
  Tensor f = sl2_structure();
  Tensor e3(3, 1);
  e3.at({2}) = 1;
  Tensor ad = tensor_contract(e3, f, {{0, 0}});  // ad(b,c) = f_{3b}^c
  Tensor expect(3, 2);
  expect.at({0, 0}) = 2;
  expect.at({1, 1}) = -2;
  CHECK(ad == expect);

  CHECK_THROWS_AS(tensor_contract(id3, Tensor(4, 1), {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(tensor_contract(id3, v, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(tensor_contract(id3, id3, {{0, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("tensor_contract matches a naive quadruple loop on the Schouten assembly") {
  // m^{stu} = r^{sp} r^{tq} f_{pq}^u for r = r-(sl2), assembled by chained
  // contractions, versus a direct index loop.
  Tensor f = sl2_structure();
  Tensor r(3, 2);
  r.at({0, 1}) = frac(1, 2);
  r.at({1, 0}) = frac(-1, 2);
  Tensor c = tensor_contract(r, f, {{1, 0}});       // c(s,q,u) = sum_p r(s,p) f(p,q,u)
  Tensor m = tensor_contract(c, r, {{1, 1}});       // m(s,u,t) = sum_q c(s,q,u) r(t,q)
  m = tensor_permute(m, {0, 2, 1});                 // legs (s,t,u)

  Tensor naive(3, 3);
  for (unsigned s = 0; s < 3; ++s)
    for (unsigned t = 0; t < 3; ++t)
      for (unsigned u = 0; u < 3; ++u) {
        Rational acc = 0;
        for (unsigned p = 0; p < 3; ++p)
          for (unsigned q = 0; q < 3; ++q)
            acc += r.at({s, p}) * r.at({t, q}) * f.at({p, q, u});
        naive.at({s, t, u}) = acc;
      }
  CHECK(m == naive);
  CHECK_FALSE(m.is_zero());
}

TEST_CASE("tensor_permute examples and group identities") {
  std::mt19937 rng(2024);
  Tensor v = random_tensor(rng, 4, 1);
  CHECK(tensor_permute(v, {0}) == v);

  Tensor r(3, 2);
  r.at({0, 1}) = frac(1, 2);
  r.at({1, 0}) = frac(-1, 2);
  CHECK(tensor_permute(r, {1, 0}) == -r);

  Tensor t = random_tensor(rng, 3, 3);
  Tensor cycled = tensor_permute(tensor_permute(tensor_permute(t, {1, 2, 0}), {1, 2, 0}), {1, 2, 0});
  CHECK(cycled == t);

  CHECK_THROWS_AS(tensor_permute(t, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tensor_permute(t, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("antisymmetrize and symmetrize split the standard r of sl2") {
  Tensor r = sl2_standard_r();
  Tensor rminus = antisymmetrize(r, 0, 1);
  Tensor rplus = symmetrize(r, 0, 1);

  Tensor expect_minus(3, 2);
  expect_minus.at({0, 1}) = frac(1, 2);
  expect_minus.at({1, 0}) = frac(-1, 2);
  CHECK(rminus == expect_minus);

  Tensor expect_plus(3, 2);
  expect_plus.at({0, 1}) = frac(1, 2);
  expect_plus.at({1, 0}) = frac(1, 2);
  expect_plus.at({2, 2}) = frac(1, 4);
  CHECK(rplus == expect_plus);

  CHECK(rminus + rplus == r);
  CHECK(symmetrize(rminus, 0, 1).is_zero());

  std::mt19937 rng(31337);
  Tensor t = random_tensor(rng, 3, 3);
  CHECK(antisymmetrize(symmetrize(t, 0, 2), 0, 2).is_zero());
}

TEST_CASE("contract and permute commute under axis relabeling") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor a = random_tensor(rng, 3, 3);
    Tensor b = random_tensor(rng, 3, 2);
    // Move A's leg 2 to slot 1, contract there, and compare with contracting
    // the original leg 2 directly (output legs land swapped).
    Tensor lhs = tensor_contract(tensor_permute(a, {2, 0, 1}), b, {{1, 0}});
    Tensor rhs = tensor_permute(tensor_contract(a, b, {{2, 0}}), {1, 0, 2});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("nullspace handles the degenerate shapes") {
  RationalMatrix zero(2, 3);
  zero.add_row({});
  NullspaceResult nz = nullspace(zero);
  CHECK(nz.rank == 0);
  REQUIRE(nz.basis.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(nz.basis[k][j] == (j == k ? 1 : 0));

  RationalMatrix id(0, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    SparseRow row;
    row.emplace_back(static_cast<std::uint32_t>(i), Rational(1));
    id.add_row(std::move(row));
  }
  NullspaceResult ni = nullspace(id);
  CHECK(ni.rank == 4);
  CHECK(ni.basis.empty());
}

TEST_CASE("nullspace returns the canonical reduced basis") {
  // Rows (1,2,3) and (2,4,6) span a rank-1 space; the canonical kernel basis
  // follows the free columns 1 and 2.
  RationalMatrix m(0, 3);
  m.add_row({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}});
  m.add_row({{0, Rational(2)}, {1, Rational(4)}, {2, Rational(6)}});
  NullspaceResult n = nullspace(m);
  CHECK(n.rank == 1);
  REQUIRE(n.basis.size() == 2);
  CHECK(n.basis[0] == std::vector<Rational>{frac(-2, 1), Rational(1), Rational(0)});
  CHECK(n.basis[1] == std::vector<Rational>{frac(-3, 1), Rational(0), Rational(1)});
}

TEST_CASE("nullspace vectors annihilate the matrix and rank+nullity = cols") {
  std::mt19937 rng(8842);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 1 + trial % 7, cols = 2 + trial % 6;
    RationalMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(rng) != 0) row.emplace_back(static_cast<std::uint32_t>(c), random_rational(rng));
      m.add_row(std::move(row));
    }
    NullspaceResult n = nullspace(m);
    CHECK(n.rank + n.basis.size() == cols);
    for (const auto& v : n.basis) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (const auto& [c, val] : m.row(r)) dot += val * v[c];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("nullspace output is deterministic and row-order independent") {
  RationalMatrix m1(0, 5), m2(0, 5);
  std::vector<SparseRow> rows = {
      {{1, frac(2, 3)}, {3, Rational(1)}},
      {{0, Rational(1)}, {1, Rational(4)}, {4, frac(-1, 2)}},
      {{0, Rational(2)}, {2, Rational(1)}, {4, Rational(5)}},
  };
  for (const auto& r : rows) m1.add_row(r);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) m2.add_row(*it);
  NullspaceResult a = nullspace(m1);
  NullspaceResult b = nullspace(m1);
  NullspaceResult c = nullspace(m2);
  CHECK(a.rank == b.rank);
  CHECK(a.basis == b.basis);
  CHECK(a.rank == c.rank);
  CHECK(a.basis == c.basis);
}

TEST_CASE("invert_dense inverts exactly and rejects singular input") {
  std::vector<std::vector<Rational>> k = {{Rational(0), Rational(4)}, {Rational(4), Rational(0)}};
  auto inv = invert_dense(k);
  CHECK(inv[0][1] == frac(1, 4));
  CHECK(inv[1][0] == frac(1, 4));
  CHECK(inv[0][0] == 0);

  std::mt19937 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = random_rational(rng);
    std::vector<std::vector<Rational>> a;
    try {
      a = invert_dense(m);
    } catch (const std::invalid_argument&) {
      continue;  // singular draw
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational dot = 0;
        for (std::size_t s = 0; s < n; ++s) dot += m[i][s] * a[s][j];
        CHECK(dot == (i == j ? 1 : 0));
      }
  }
  CHECK_THROWS_AS(invert_dense({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}),
                  std::invalid_argument);
}
