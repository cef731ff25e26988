// Dense rank-k tensors of exact rationals over a single index dimension.
// Dims stay small (<= 15) and ranks <= 4, so dense row-major storage wins.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semiclass/rational.hpp"

namespace semiclass {

class Tensor {
 public:
  Tensor() : dim_(1), rank_(0), data_(1, Rational(0)) {}
  Tensor(unsigned dim, unsigned rank);

  unsigned dim() const { return dim_; }
  unsigned rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  Rational& at(const std::vector<unsigned>& idx);
  const Rational& at(const std::vector<unsigned>& idx) const;
  Rational& flat(std::size_t i) { return data_[i]; }
  const Rational& flat(std::size_t i) const { return data_[i]; }

  std::size_t flat_index(const std::vector<unsigned>& idx) const;
  std::vector<unsigned> multi_index(std::size_t flat) const;

  bool is_zero() const;

  Tensor operator-() const;
  Tensor operator+(const Tensor& other) const;
  Tensor operator-(const Tensor& other) const;
  Tensor operator*(const Rational& scalar) const;
  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  bool operator==(const Tensor& other) const;
  bool operator!=(const Tensor& other) const { return !(*this == other); }

 private:
  unsigned dim_, rank_;
  std::vector<Rational> data_;

  void check_shape(const Tensor& other) const;
};

// Standard multilinear contraction of A with B over the given (axis-of-A,
// axis-of-B) pairs. Output legs are A's free legs in order, then B's.
Tensor tensor_contract(const Tensor& A, const Tensor& B,
                       const std::vector<std::pair<unsigned, unsigned>>& pairs);

// Leg relabeling: input leg j of T becomes output leg perm[j], so
//   result(i_{perm[0]}, ..., i_{perm[r-1]}) = T(i_0, ..., i_{r-1}).
// Example: perm = {1,2,0} gives result(a,b,c) = T(b,c,a).
Tensor tensor_permute(const Tensor& T, const std::vector<unsigned>& perm);

// (A -+ A with the two axes swapped) / 2.
Tensor antisymmetrize(const Tensor& A, unsigned axis1, unsigned axis2);
Tensor symmetrize(const Tensor& A, unsigned axis1, unsigned axis2);

}  // namespace semiclass
