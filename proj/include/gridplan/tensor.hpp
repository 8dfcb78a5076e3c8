#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridplan::ad {

// Dense row-major tensor of doubles. Rank 1 (vectors) and rank 2 (matrices)
// are the only shapes the engine's primitives accept.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> v;

  Tensor() = default;
  Tensor(std::vector<std::size_t> s, std::vector<double> vals) : shape(std::move(s)), v(std::move(vals)) {
    if (v.size() != count(shape)) throw std::invalid_argument("Tensor: value count does not match shape");
  }

  static std::size_t count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (auto e : s) n *= e;
    return n;
  }

  static Tensor zeros(std::vector<std::size_t> s) {
    auto n = count(s);
    return Tensor(std::move(s), std::vector<double>(n, 0.0));
  }
  static Tensor vec(std::vector<double> vals) {
    auto n = vals.size();
    return Tensor({n}, std::move(vals));
  }
  static Tensor full(std::vector<std::size_t> s, double x) {
    auto n = count(s);
    return Tensor(std::move(s), std::vector<double>(n, x));
  }
  static Tensor scalar(double x) { return Tensor({1}, {x}); }

  template <class Rng>
  static Tensor randn(std::vector<std::size_t> s, Rng& rng, double sd = 1.0) {
    std::normal_distribution<double> n01(0.0, sd);
    auto n = count(s);
    std::vector<double> vals(n);
    for (auto& x : vals) x = n01(rng);
    return Tensor(std::move(s), std::move(vals));
  }

  std::size_t size() const { return v.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const { return shape.at(0); }
  std::size_t cols() const { return shape.at(1); }

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  double& at2(std::size_t r, std::size_t c) { return v[r * cols() + c]; }
  double at2(std::size_t r, std::size_t c) const { return v[r * cols() + c]; }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }

  std::string shape_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(shape[i]);
    }
    return s + ")";
  }
};

}  // namespace gridplan::ad
