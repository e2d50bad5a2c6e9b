#include "orientx/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>

namespace orientx {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) {
    r *= static_cast<std::size_t>(base);
  }
  return r;
}

// All permutations of {0..n-1}.
std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

template <class T>
DenseTensor<T>::DenseTensor(int dim, int rank) : dim_(dim), rank_(rank), data_(ipow(dim, rank), T{}) {
  if (dim < 1 || rank < 0) {
    throw std::invalid_argument("tensor dimension must be positive and rank non-negative");
  }
}

template <class T>
std::size_t DenseTensor<T>::flat_index(std::span<const int> idx) const {
  assert(static_cast<int>(idx.size()) == rank_);
  std::size_t k = 0;
  for (int i : idx) {
    assert(i >= 0 && i < dim_);
    k = k * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return k;
}

template <class T>
std::vector<int> DenseTensor<T>::unflatten(std::size_t k) const {
  std::vector<int> idx(static_cast<std::size_t>(rank_));
  for (int p = rank_ - 1; p >= 0; --p) {
    idx[static_cast<std::size_t>(p)] = static_cast<int>(k % static_cast<std::size_t>(dim_));
    k /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

template <class T>
DenseTensor<T>& DenseTensor<T>::operator+=(const DenseTensor& o) {
  if (o.dim_ != dim_ || o.rank_ != rank_) {
    throw std::invalid_argument("tensor shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] += o.data_[k];
  }
  return *this;
}

template <class T>
DenseTensor<T>& DenseTensor<T>::operator*=(T s) {
  for (auto& v : data_) {
    v *= s;
  }
  return *this;
}

template class DenseTensor<double>;
template class DenseTensor<Complex>;

void for_each_index(int dim, int rank, const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  const std::size_t total = ipow(dim, rank);
  for (std::size_t k = 0; k < total; ++k) {
    fn(idx);
    for (int p = rank - 1; p >= 0; --p) {
      auto& v = idx[static_cast<std::size_t>(p)];
      if (++v < dim) {
        break;
      }
      v = 0;
    }
  }
}

std::string format_index(std::span<const int> idx) {
  std::ostringstream s;
  s << '(';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    s << (k ? "," : "") << idx[k] + 1;
  }
  s << ')';
  return s.str();
}

ComplexTensor to_complex(const RealTensor& t) {
  ComplexTensor c(t.dim(), t.rank());
  for (std::size_t k = 0; k < t.size(); ++k) {
    c.flat(k) = t.flat(k);
  }
  return c;
}

ComplexTensor symmetrize(const ComplexTensor& t) {
  if (t.rank() < 2) {
    return t;
  }
  const auto perms = permutations(t.rank());
  ComplexTensor out(t.dim(), t.rank());
  std::vector<int> permuted(static_cast<std::size_t>(t.rank()));
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    Complex acc = 0.0;
    for (const auto& p : perms) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        permuted[k] = idx[static_cast<std::size_t>(p[k])];
      }
      acc += t(permuted);
    }
    out(idx) = acc / static_cast<double>(perms.size());
  });
  return out;
}

double symmetry_defect(const ComplexTensor& t) {
  double worst = 0.0;
  std::vector<int> swapped(static_cast<std::size_t>(t.rank()));
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    for (int a = 0; a < t.rank(); ++a) {
      for (int b = a + 1; b < t.rank(); ++b) {
        std::copy(idx.begin(), idx.end(), swapped.begin());
        std::swap(swapped[static_cast<std::size_t>(a)], swapped[static_cast<std::size_t>(b)]);
        worst = std::max(worst, std::abs(t(idx) - t(swapped)));
      }
    }
  });
  return worst;
}

namespace {

// Largest |sum_k t(..k..k..)| with the repeated index at positions a and b,
// over all positions in `slots`.
double contraction_defect(const ComplexTensor& t, const std::vector<int>& slots) {
  const int r = t.rank();
  double worst = 0.0;
  std::vector<int> full(static_cast<std::size_t>(r));
  for (std::size_t sa = 0; sa < slots.size(); ++sa) {
    for (std::size_t sb = sa + 1; sb < slots.size(); ++sb) {
      const int a = slots[sa], b = slots[sb];
      for_each_index(t.dim(), r - 2, [&](std::span<const int> rest) {
        Complex acc = 0.0;
        for (int k = 0; k < t.dim(); ++k) {
          std::size_t q = 0;
          for (int p = 0; p < r; ++p) {
            full[static_cast<std::size_t>(p)] = (p == a || p == b) ? k : rest[q++];
          }
          acc += t(full);
        }
        worst = std::max(worst, std::abs(acc));
      });
    }
  }
  return worst;
}

std::vector<int> iota_slots(int start, int count, int stride) {
  std::vector<int> s;
  for (int k = 0; k < count; ++k) {
    s.push_back(start + k * stride);
  }
  return s;
}

}  // namespace

double trace_defect(const ComplexTensor& t) {
  if (t.rank() < 2) {
    return 0.0;
  }
  return contraction_defect(t, iota_slots(0, t.rank(), 1));
}

ComplexTensor detrace_symmetric(const ComplexTensor& t) {
  const int d = t.dim();
  switch (t.rank()) {
    case 0:
    case 1:
      return t;
    case 2: {
      ComplexTensor out = t;
      Complex tr = 0.0;
      for (int i = 0; i < d; ++i) {
        tr += t.at({i, i});
      }
      for (int i = 0; i < d; ++i) {
        out.at({i, i}) -= tr / static_cast<double>(d);
      }
      return out;
    }
    case 3: {
      std::vector<Complex> v(static_cast<std::size_t>(d), 0.0);
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          v[static_cast<std::size_t>(k)] += t.at({l, l, k});
        }
      }
      ComplexTensor out = t;
      const double c = 1.0 / (d + 2.0);
      for_each_index(d, 3, [&](std::span<const int> idx) {
        const int i = idx[0], j = idx[1], k = idx[2];
        Complex corr = 0.0;
        if (i == j) corr += v[static_cast<std::size_t>(k)];
        if (i == k) corr += v[static_cast<std::size_t>(j)];
        if (j == k) corr += v[static_cast<std::size_t>(i)];
        out(idx) -= c * corr;
      });
      return out;
    }
    default:
      throw std::invalid_argument("detrace_symmetric supports rank <= 3");
  }
}

namespace {

int pair_order(const ComplexTensor& t) {
  if (t.rank() % 2 != 0) {
    throw std::invalid_argument("pair tensors have even rank");
  }
  return t.rank() / 2;
}

// Projector onto symmetric traceless rank-l tensors, as a 3^l x 3^l matrix.
Eigen::MatrixXd group_projector(int dim, int l) {
  const auto n = static_cast<Eigen::Index>(ipow(dim, l));
  Eigen::MatrixXd p(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    ComplexTensor e(dim, l);
    e.flat(static_cast<std::size_t>(c)) = 1.0;
    const ComplexTensor img = detrace_symmetric(symmetrize(e));
    for (Eigen::Index r = 0; r < n; ++r) {
      p(r, c) = img.flat(static_cast<std::size_t>(r)).real();
    }
  }
  return p;
}

// Pair layout (i1 j1 ... il jl) <-> matrix rows (i1..il), cols (j1..jl).
Eigen::MatrixXcd to_pair_matrix(const ComplexTensor& t) {
  const int l = pair_order(t);
  const auto n = static_cast<Eigen::Index>(ipow(t.dim(), l));
  Eigen::MatrixXcd m(n, n);
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    Eigen::Index r = 0, c = 0;
    for (int k = 0; k < l; ++k) {
      r = r * t.dim() + idx[static_cast<std::size_t>(2 * k)];
      c = c * t.dim() + idx[static_cast<std::size_t>(2 * k + 1)];
    }
    m(r, c) = t(idx);
  });
  return m;
}

ComplexTensor from_pair_matrix(const Eigen::MatrixXcd& m, int dim, int l) {
  ComplexTensor t(dim, 2 * l);
  for_each_index(dim, 2 * l, [&](std::span<const int> idx) {
    Eigen::Index r = 0, c = 0;
    for (int k = 0; k < l; ++k) {
      r = r * dim + idx[static_cast<std::size_t>(2 * k)];
      c = c * dim + idx[static_cast<std::size_t>(2 * k + 1)];
    }
    t(idx) = m(r, c);
  });
  return t;
}

}  // namespace

ComplexTensor symmetrize_pairs(const ComplexTensor& t) {
  const int l = pair_order(t);
  if (l < 2) {
    return t;
  }
  const auto perms = permutations(l);
  ComplexTensor out(t.dim(), t.rank());
  std::vector<int> permuted(static_cast<std::size_t>(t.rank()));
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    Complex acc = 0.0;
    for (const auto& pi : perms) {
      for (const auto& pj : perms) {
        for (int k = 0; k < l; ++k) {
          permuted[static_cast<std::size_t>(2 * k)] = idx[static_cast<std::size_t>(2 * pi[static_cast<std::size_t>(k)])];
          permuted[static_cast<std::size_t>(2 * k + 1)] =
              idx[static_cast<std::size_t>(2 * pj[static_cast<std::size_t>(k)] + 1)];
        }
        acc += t(permuted);
      }
    }
    out(idx) = acc / static_cast<double>(perms.size() * perms.size());
  });
  return out;
}

double pair_symmetry_defect(const ComplexTensor& t) {
  const int l = pair_order(t);
  double worst = 0.0;
  std::vector<int> swapped(static_cast<std::size_t>(t.rank()));
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    for (int a = 0; a < l; ++a) {
      for (int b = a + 1; b < l; ++b) {
        for (int group = 0; group < 2; ++group) {
          std::copy(idx.begin(), idx.end(), swapped.begin());
          std::swap(swapped[static_cast<std::size_t>(2 * a + group)], swapped[static_cast<std::size_t>(2 * b + group)]);
          worst = std::max(worst, std::abs(t(idx) - t(swapped)));
        }
      }
    }
  });
  return worst;
}

double pair_trace_defect(const ComplexTensor& t) {
  const int l = pair_order(t);
  if (l < 2) {
    return 0.0;
  }
  return std::max(contraction_defect(t, iota_slots(0, l, 2)), contraction_defect(t, iota_slots(1, l, 2)));
}

ComplexTensor detrace_pairs(const ComplexTensor& t) {
  const int l = pair_order(t);
  if (l < 2) {
    return t;
  }
  if (l > 3) {
    throw std::invalid_argument("detrace_pairs supports l <= 3");
  }
  const Eigen::MatrixXd p = group_projector(t.dim(), l);
  const Eigen::MatrixXcd m = to_pair_matrix(t);
  const Eigen::MatrixXcd projected = p.cast<Complex>() * m * p.transpose().cast<Complex>();
  return from_pair_matrix(projected, t.dim(), l);
}

double max_abs(const ComplexTensor& t) {
  double worst = 0.0;
  for (const auto& v : t.data()) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) {
    throw std::invalid_argument("tensor shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a.flat(k) - b.flat(k)));
  }
  return worst;
}

}  // namespace orientx
