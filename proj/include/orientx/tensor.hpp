#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace orientx {

using Complex = std::complex<double>;

/// Dense rank-r tensor over {0, ..., dim-1}^r, row-major (last index fastest).
/// Indices are 0-based here; files and printed output use 1-based indices.
template <class T>
class DenseTensor {
 public:
  DenseTensor() : DenseTensor(3, 0) {}
  DenseTensor(int dim, int rank);

  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(std::span<const int> idx) { return data_[flat_index(idx)]; }
  const T& operator()(std::span<const int> idx) const { return data_[flat_index(idx)]; }
  T& at(std::initializer_list<int> idx) { return (*this)(std::span<const int>(idx.begin(), idx.size())); }
  const T& at(std::initializer_list<int> idx) const {
    return (*this)(std::span<const int>(idx.begin(), idx.size()));
  }

  T& flat(std::size_t k) { return data_[k]; }
  const T& flat(std::size_t k) const { return data_[k]; }
  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  std::size_t flat_index(std::span<const int> idx) const;
  std::vector<int> unflatten(std::size_t k) const;

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator*=(T s);

 private:
  int dim_;
  int rank_;
  std::vector<T> data_;
};

using RealTensor = DenseTensor<double>;
using ComplexTensor = DenseTensor<Complex>;

/// Calls fn(idx) for every multi-index of a dim^rank tensor, in flat order.
void for_each_index(int dim, int rank, const std::function<void(std::span<const int>)>& fn);

std::string format_index(std::span<const int> idx);  // 1-based, e.g. "(1,3,3)"

/// Promote a real tensor.
ComplexTensor to_complex(const RealTensor& t);

// Fully symmetric tensors (uniaxial Cartesian coefficients, tensor polynomials).

/// Average over all index permutations.
ComplexTensor symmetrize(const ComplexTensor& t);
/// Largest |t(idx) - t(perm idx)| over all transpositions.
double symmetry_defect(const ComplexTensor& t);
/// Largest |trace over any index pair| (0 for rank < 2).
double trace_defect(const ComplexTensor& t);
/// Symmetric traceless projection (rank <= 3 closed form).
ComplexTensor detrace_symmetric(const ComplexTensor& t);

// Pair tensors (biaxial): rank 2l with layout (i1 j1 i2 j2 ... il jl).
// Symmetric under permutations of the i-group and of the j-group separately,
// traceless over any two i indices and over any two j indices.

/// Average over all permutations of the i-group times all of the j-group.
ComplexTensor symmetrize_pairs(const ComplexTensor& t);
double pair_symmetry_defect(const ComplexTensor& t);
double pair_trace_defect(const ComplexTensor& t);
/// Symmetric traceless projection in both groups (l <= 3).
ComplexTensor detrace_pairs(const ComplexTensor& t);

double max_abs(const ComplexTensor& t);
double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b);

}  // namespace orientx
