#include "semiclass/xi.hpp"

#include <stdexcept>

namespace semiclass {

namespace {

void check_rank3(const Tensor& t, std::size_t dim, const char* what) {
  if (t.rank() != 3 || t.dim() != dim)
    throw std::invalid_argument(std::string(what) +
                                ": expected a rank-3 tensor over the algebra");
}

// r-^{bp} f_{pv}^c, the correction term that turns Xi into Xi-hat.
Tensor hat_correction(const RMatrix& r) {
  const std::size_t d = r.algebra.dim;
  Tensor rm = r_minus(r).value;
  Tensor corr(d, 3);
  for (unsigned v = 0; v < d; ++v)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned p = 0; p < d; ++p) {
        const Rational& rbp = rm.at({b, p});
        if (is_zero(rbp)) continue;
        for (unsigned c = 0; c < d; ++c) {
          const Rational& f = r.algebra.f.at({p, v, c});
          if (!is_zero(f)) corr.at({v, b, c}) += rbp * f;
        }
      }
  return corr;
}

}  // namespace

Xi canonical_xi(const RMatrix& r) {
  // Xi(v) = -r-^[1] (x) [r-^[2], v] is minus the hat correction.
  Tensor corr = hat_correction(r);
  return Xi{corr * Rational(-1)};
}

XiHat hat_from_xi(const Xi& xi, const RMatrix& r) {
  check_rank3(xi.value, r.algebra.dim, "hat_from_xi");
  return XiHat{xi.value + hat_correction(r)};
}

Xi xi_from_hat(const XiHat& hat, const RMatrix& r) {
  check_rank3(hat.value, r.algebra.dim, "xi_from_hat");
  return Xi{hat.value - hat_correction(r)};
}

Tensor compatibility_residual(const Xi& xi, const Cobracket& delta) {
  check_rank3(xi.value, delta.algebra.dim, "compatibility_residual");
  // Output-leg flip: legs (v,b,c) -> (v,c,b) is the permutation fixing leg 0
  // and swapping legs 1 and 2.
  Tensor flipped = tensor_permute(xi.value, {0, 2, 1});
  return xi.value - flipped - delta.value;
}

Tensor symmetry_residual(const XiHat& hat) {
  return hat.value - tensor_permute(hat.value, {0, 2, 1});
}

Tensor bicovariance_residual(const XiHat& hat, const LieAlgebra& L) {
  check_rank3(hat.value, L.dim, "bicovariance_residual");
  const std::size_t d = L.dim;
  const Tensor& X = hat.value;
  Tensor res(d, 4);
  for (unsigned v = 0; v < d; ++v)
    for (unsigned w = 0; w < d; ++w)
      for (unsigned b = 0; b < d; ++b)
        for (unsigned c = 0; c < d; ++c) {
          Rational sum(0);
          for (unsigned s = 0; s < d; ++s) {
            sum += L.f.at({v, w, s}) * X.at({s, b, c});
            sum -= L.f.at({s, w, b}) * X.at({v, s, c});
            sum -= L.f.at({s, w, c}) * X.at({v, b, s});
          }
          if (!is_zero(sum)) res.at({v, w, b, c}) = sum;
        }
  return res;
}

Tensor j1_obstruction(const XiHat& hat, const RMatrix& r) {
  check_rank3(hat.value, r.algebra.dim, "j1_obstruction");
  const std::size_t d = r.algebra.dim;
  const Tensor& X = hat.value;
  const Tensor n = n_tensor(r);
  Tensor res(d, 4);
  for (unsigned v = 0; v < d; ++v)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned c = 0; c < d; ++c)
        for (unsigned e = 0; e < d; ++e) {
          Rational sum(0);
          for (unsigned s = 0; s < d; ++s) {
            sum += X.at({v, b, s}) * X.at({s, c, e});
            sum -= X.at({v, c, s}) * X.at({s, b, e});
            sum += n.at({b, c, s}) * r.algebra.f.at({v, s, e});
          }
          if (!is_zero(sum)) res.at({v, b, c, e}) = sum;
        }
  return res;
}

Tensor hat_flatness_residual(const XiHat& hat, const RMatrix& r) {
  check_rank3(hat.value, r.algebra.dim, "hat_flatness_residual");
  const std::size_t d = r.algebra.dim;
  const Tensor& X = hat.value;
  const Tensor n = n_tensor(r);
  Tensor rm = r_minus(r).value;
  Tensor res(d, 4);
  for (unsigned v = 0; v < d; ++v)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned p = 0; p < d; ++p)
        for (unsigned q = 0; q < d; ++q) {
          Rational sum(0);
          // The invariant-gauge part: Xi-hat composition commutator + n-term.
          for (unsigned c = 0; c < d; ++c) {
            sum += X.at({v, b, c}) * X.at({c, p, q});
            sum -= X.at({v, p, c}) * X.at({c, b, q});
            sum += n.at({b, p, c}) * r.algebra.f.at({v, c, q});
          }
          // Invariance-defect corrections contracted with r-minus:
          // +phi(r-^[1]) D_{r-^[2]}(psi,zeta) - psi(r-^[1]) D_{r-^[2]}(phi,zeta).
          for (unsigned t = 0; t < d; ++t) {
            const Rational& rbt = rm.at({b, t});
            if (!is_zero(rbt)) {
              Rational defect(0);
              for (unsigned c = 0; c < d; ++c) {
                defect += X.at({c, p, q}) * r.algebra.f.at({v, t, c});
                defect -= r.algebra.f.at({c, t, q}) * X.at({v, p, c});
                defect -= r.algebra.f.at({c, t, p}) * X.at({v, c, q});
              }
              sum += rbt * defect;
            }
            const Rational& rpt = rm.at({p, t});
            if (!is_zero(rpt)) {
              Rational defect(0);
              for (unsigned c = 0; c < d; ++c) {
                defect += X.at({c, b, q}) * r.algebra.f.at({v, t, c});
                defect -= r.algebra.f.at({c, t, q}) * X.at({v, b, c});
                defect -= r.algebra.f.at({c, t, b}) * X.at({v, c, q});
              }
              sum -= rpt * defect;
            }
          }
          if (!is_zero(sum)) res.at({v, b, p, q}) = sum;
        }
  return res;
}

Tensor propj1_residual(const Xi& xi, const RMatrix& r) {
  check_rank3(xi.value, r.algebra.dim, "propj1_residual");
  const std::size_t d = r.algebra.dim;
  const Tensor& X = xi.value;
  Tensor rm = r_minus(r).value;
  Tensor res(d, 4);
  // Components of the statement at (phi,psi,zeta) = (eps^b, eps^p, eps^q)
  // evaluated on e_v, term by term in the printed order.
  for (unsigned v = 0; v < d; ++v)
    for (unsigned b = 0; b < d; ++b)
      for (unsigned p = 0; p < d; ++p)
        for (unsigned q = 0; q < d; ++q) {
          Rational sum(0);
          // Xi(phi, Xi(psi,zeta)) - Xi(psi, Xi(phi,zeta))
          for (unsigned c = 0; c < d; ++c) {
            sum += X.at({v, b, c}) * X.at({c, p, q});
            sum -= X.at({v, p, c}) * X.at({c, b, q});
          }
          // - phi(r-^[1]) Xi(ad*_{r-^[2]} psi, zeta):
          //   phi(r-^[1]) picks r-^{b t}; ad*_{e_t} eps^p = f_{ct}^p eps^c.
          for (unsigned t = 0; t < d; ++t) {
            const Rational& rbt = rm.at({b, t});
            if (is_zero(rbt)) continue;
            for (unsigned c = 0; c < d; ++c)
              sum -= rbt * r.algebra.f.at({c, t, p}) * X.at({v, c, q});
          }
          // - psi(r-^[2]) Xi(ad*_{r-^[1]} phi, zeta):
          //   psi(r-^[2]) picks r-^{s p}; ad*_{e_s} eps^b = f_{cs}^b eps^c.
          for (unsigned s = 0; s < d; ++s) {
            const Rational& rsp = rm.at({s, p});
            if (is_zero(rsp)) continue;
            for (unsigned c = 0; c < d; ++c)
              sum -= rsp * r.algebra.f.at({c, s, b}) * X.at({v, c, q});
          }
          if (!is_zero(sum)) res.at({v, b, p, q}) = sum;
        }
  return res;
}

Xi su2_3d_xi(const Rational& lambda3) {
  // Basis order e+, e-, e3. Xi(e_i) = 1/2 lambda_i e3 (x) e_i with
  // lambda_+ = lambda_- = -1.
  Tensor X(3, 3);
  X.at({0, 2, 0}) = frac(-1, 2);
  X.at({1, 2, 1}) = frac(-1, 2);
  X.at({2, 2, 2}) = lambda3 / 2;
  return Xi{X};
}

Tensor e_tensor(const XiHat& hat) {
  // A(v,b,c,e) = sum_s Xi-hat(v,b,s) Xi-hat(s,c,e); e = A - A with legs
  // (b,c) swapped. Built on tensor_contract/tensor_permute rather than
  // explicit loops so it exercises a separate code path from j1_obstruction.
  Tensor A = tensor_contract(hat.value, hat.value, {{2, 0}});
  return A - tensor_permute(A, {0, 2, 1, 3});
}

}  // namespace semiclass
