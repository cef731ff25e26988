#include "semiclass/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiclass {

namespace {

std::size_t pow_size(unsigned dim, unsigned rank) {
  std::size_t s = 1;
  for (unsigned k = 0; k < rank; ++k) s *= dim;
  return s;
}

}  // namespace

Tensor::Tensor(unsigned dim, unsigned rank)
    : dim_(dim), rank_(rank), data_(pow_size(dim, rank), Rational(0)) {
  if (dim == 0) throw std::invalid_argument("Tensor: dim must be positive");
}

std::size_t Tensor::flat_index(const std::vector<unsigned>& idx) const {
  if (idx.size() != rank_) throw std::invalid_argument("Tensor: index rank mismatch");
  std::size_t f = 0;
  for (unsigned k = 0; k < rank_; ++k) {
    if (idx[k] >= dim_) throw std::out_of_range("Tensor: index out of range");
    f = f * dim_ + idx[k];
  }
  return f;
}

std::vector<unsigned> Tensor::multi_index(std::size_t flat) const {
  std::vector<unsigned> idx(rank_, 0);
  for (unsigned k = rank_; k-- > 0;) {
    idx[k] = static_cast<unsigned>(flat % dim_);
    flat /= dim_;
  }
  return idx;
}

Rational& Tensor::at(const std::vector<unsigned>& idx) { return data_[flat_index(idx)]; }

const Rational& Tensor::at(const std::vector<unsigned>& idx) const {
  return data_[flat_index(idx)];
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return q == 0; });
}

void Tensor::check_shape(const Tensor& other) const {
  if (dim_ != other.dim_ || rank_ != other.rank_)
    throw std::invalid_argument("Tensor: shape mismatch");
}

Tensor Tensor::operator-() const {
  Tensor out(dim_, rank_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

Tensor Tensor::operator+(const Tensor& other) const {
  Tensor out = *this;
  out += other;
  return out;
}

Tensor Tensor::operator-(const Tensor& other) const {
  Tensor out = *this;
  out -= other;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  check_shape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  check_shape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor Tensor::operator*(const Rational& scalar) const {
  Tensor out(dim_, rank_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

bool Tensor::operator==(const Tensor& other) const {
  return dim_ == other.dim_ && rank_ == other.rank_ && data_ == other.data_;
}

Tensor tensor_contract(const Tensor& A, const Tensor& B,
                       const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  const unsigned rA = A.rank(), rB = B.rank(), d = A.dim();
  if (B.dim() != d) throw std::invalid_argument("tensor_contract: dimension mismatch");
  std::vector<bool> usedA(rA, false), usedB(rB, false);
  for (const auto& [a, b] : pairs) {
    if (a >= rA || b >= rB) throw std::invalid_argument("tensor_contract: axis out of range");
    if (usedA[a] || usedB[b]) throw std::invalid_argument("tensor_contract: overlapping pairs");
    usedA[a] = usedB[b] = true;
  }
  std::vector<unsigned> freeA, freeB;
  for (unsigned k = 0; k < rA; ++k)
    if (!usedA[k]) freeA.push_back(k);
  for (unsigned k = 0; k < rB; ++k)
    if (!usedB[k]) freeB.push_back(k);

  const unsigned rOut = static_cast<unsigned>(freeA.size() + freeB.size());
  Tensor out(d, rOut);

  // Walk A's nonzero entries; for each, sweep B's free legs with the paired
  // legs pinned by A's index. Strides keep the inner loop on flat offsets.
  std::vector<std::size_t> strideB(rB, 1);
  for (unsigned k = rB; k-- > 1;) strideB[k - 1] = strideB[k] * d;
  std::vector<std::size_t> strideOut(rOut, 1);
  for (unsigned k = rOut; k-- > 1;) strideOut[k - 1] = strideOut[k] * d;

  std::vector<unsigned> idxB(rB, 0), idxA;
  for (std::size_t fa = 0; fa < A.size(); ++fa) {
    const Rational& av = A.flat(fa);
    if (av == 0) continue;
    idxA = A.multi_index(fa);
    std::size_t baseB = 0;
    for (const auto& [a, b] : pairs) baseB += strideB[b] * idxA[a];
    std::size_t baseOut = 0;
    for (std::size_t k = 0; k < freeA.size(); ++k) baseOut += strideOut[k] * idxA[freeA[k]];

    // Odometer over B's free legs.
    std::vector<unsigned> free_val(freeB.size(), 0);
    while (true) {
      std::size_t fb = baseB, fo = baseOut;
      for (std::size_t k = 0; k < freeB.size(); ++k) {
        fb += strideB[freeB[k]] * free_val[k];
        fo += strideOut[freeA.size() + k] * free_val[k];
      }
      const Rational& bv = B.flat(fb);
      if (bv != 0) out.flat(fo) += av * bv;
      std::size_t k = freeB.size();
      while (k > 0) {
        if (++free_val[k - 1] < d) break;
        free_val[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

Tensor tensor_permute(const Tensor& T, const std::vector<unsigned>& perm) {
  const unsigned r = T.rank();
  if (perm.size() != r) throw std::invalid_argument("tensor_permute: permutation size mismatch");
  std::vector<bool> seen(r, false);
  for (unsigned p : perm) {
    if (p >= r || seen[p]) throw std::invalid_argument("tensor_permute: not a permutation");
    seen[p] = true;
  }
  Tensor out(T.dim(), r);
  std::vector<unsigned> idxOut(r, 0);
  for (std::size_t f = 0; f < T.size(); ++f) {
    const Rational& v = T.flat(f);
    if (v == 0) continue;
    std::vector<unsigned> idx = T.multi_index(f);
    for (unsigned k = 0; k < r; ++k) idxOut[perm[k]] = idx[k];
    out.at(idxOut) = v;
  }
  return out;
}

namespace {

Tensor swap_axes(const Tensor& A, unsigned axis1, unsigned axis2) {
  std::vector<unsigned> perm(A.rank());
  for (unsigned k = 0; k < A.rank(); ++k) perm[k] = k;
  if (axis1 >= A.rank() || axis2 >= A.rank())
    throw std::invalid_argument("symmetrize: axis out of range");
  std::swap(perm[axis1], perm[axis2]);
  return tensor_permute(A, perm);
}

}  // namespace

Tensor antisymmetrize(const Tensor& A, unsigned axis1, unsigned axis2) {
  return (A - swap_axes(A, axis1, axis2)) * Rational(1, 2);
}

Tensor symmetrize(const Tensor& A, unsigned axis1, unsigned axis2) {
  return (A + swap_axes(A, axis1, axis2)) * Rational(1, 2);
}

}  // namespace semiclass
