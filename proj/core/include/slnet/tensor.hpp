#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "slnet/errors.hpp"

namespace slnet {

// Dense row-major tensor, last axis fastest. The whole numeric stack is
// templated on the scalar so training runs in float while gradient checks
// instantiate double.
template <typename T>
class TensorT {
 public:
  TensorT() = default;

  explicit TensorT(std::vector<std::size_t> dims)
      : dims_(std::move(dims)), data_(checked_size(dims_), T(0)) {}

  TensorT(std::initializer_list<std::size_t> dims)
      : TensorT(std::vector<std::size_t>(dims)) {}

  static TensorT zeros(std::vector<std::size_t> dims) { return TensorT(std::move(dims)); }

  static TensorT full(std::vector<std::size_t> dims, T value) {
    TensorT t(std::move(dims));
    for (auto& v : t.data_) v = value;
    return t;
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  // Flat index helpers for the layouts used throughout: (C,W,H), (C,T,W,H)
  // and (N,C,T,W,H).
  std::size_t idx3(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * dims_[1] + b) * dims_[2] + c;
  }
  std::size_t idx4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * dims_[1] + b) * dims_[2] + c) * dims_[3] + d;
  }
  std::size_t idx5(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                   std::size_t e) const {
    return (((a * dims_[1] + b) * dims_[2] + c) * dims_[3] + d) * dims_[4] + e;
  }

  T& at3(std::size_t a, std::size_t b, std::size_t c) { return data_[idx3(a, b, c)]; }
  const T& at3(std::size_t a, std::size_t b, std::size_t c) const { return data_[idx3(a, b, c)]; }
  T& at4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[idx4(a, b, c, d)];
  }
  const T& at4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[idx4(a, b, c, d)];
  }
  T& at5(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e) {
    return data_[idx5(a, b, c, d, e)];
  }
  const T& at5(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
               std::size_t e) const {
    return data_[idx5(a, b, c, d, e)];
  }

  bool same_dims(const TensorT& o) const { return dims_ == o.dims_; }

  void fill(T v) {
    for (auto& x : data_) x = v;
  }

  bool all_finite() const {
    for (const T& v : data_)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename U>
  TensorT<U> cast() const {
    TensorT<U> out(dims_);
    for (std::size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
    return out;
  }

  friend bool operator==(const TensorT& a, const TensorT& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

 private:
  static std::size_t checked_size(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) {
      check(d > 0, "tensor dims must be positive");
      n *= d;
    }
    return dims.empty() ? 0 : n;
  }

  std::vector<std::size_t> dims_;
  std::vector<T> data_;
};

using Tensor = TensorT<float>;
using TensorD = TensorT<double>;

inline std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace slnet
