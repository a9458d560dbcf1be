#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "rlsuite/errors.hpp"
#include "rlsuite/rng.hpp"

namespace rlsuite {

/// One element of a space: discrete index, multi-discrete vector, or a flat
/// real vector for box spaces.
using SpaceValue = std::variant<int64_t, std::vector<int64_t>, std::vector<double>>;

inline int64_t as_discrete(const SpaceValue& v) {
  if (const auto* p = std::get_if<int64_t>(&v)) return *p;
  throw UnsupportedError("expected a discrete space value");
}

inline const std::vector<int64_t>& as_multi(const SpaceValue& v) {
  if (const auto* p = std::get_if<std::vector<int64_t>>(&v)) return *p;
  throw UnsupportedError("expected a multi-discrete space value");
}

inline const std::vector<double>& as_box(const SpaceValue& v) {
  if (const auto* p = std::get_if<std::vector<double>>(&v)) return *p;
  throw UnsupportedError("expected a box space value");
}

enum class SpaceKind { discrete, multi_discrete, box };

/// Declares an observation or action space: discrete(n), multi_discrete(dims)
/// or box(low, high, shape). contains() is decidable for every kind and any
/// sampled value satisfies it.
class SpaceDescriptor {
 public:
  static SpaceDescriptor discrete(int64_t n) {
    if (n < 1) throw ConfigError("discrete space needs n >= 1");
    SpaceDescriptor s;
    s.kind_ = SpaceKind::discrete;
    s.n_ = n;
    return s;
  }

  static SpaceDescriptor multi_discrete(std::vector<int64_t> dims) {
    if (dims.empty()) throw ConfigError("multi_discrete space needs at least one dim");
    for (int64_t d : dims)
      if (d < 1) throw ConfigError("multi_discrete dims must be >= 1");
    SpaceDescriptor s;
    s.kind_ = SpaceKind::multi_discrete;
    s.dims_ = std::move(dims);
    return s;
  }

  static SpaceDescriptor box(std::vector<double> low, std::vector<double> high,
                             std::vector<int64_t> shape) {
    int64_t size = 1;
    for (int64_t d : shape) size *= d;
    if (low.size() == 1) low.assign(static_cast<size_t>(size), low[0]);
    if (high.size() == 1) high.assign(static_cast<size_t>(size), high[0]);
    if (static_cast<int64_t>(low.size()) != size || static_cast<int64_t>(high.size()) != size)
      throw ConfigError("box bounds do not match shape");
    for (size_t i = 0; i < low.size(); ++i)
      if (low[i] > high[i]) throw ConfigError("box requires low <= high elementwise");
    SpaceDescriptor s;
    s.kind_ = SpaceKind::box;
    s.low_ = std::move(low);
    s.high_ = std::move(high);
    s.shape_ = std::move(shape);
    return s;
  }

  SpaceKind kind() const { return kind_; }
  int64_t n() const { return n_; }
  const std::vector<int64_t>& dims() const { return dims_; }
  const std::vector<double>& low() const { return low_; }
  const std::vector<double>& high() const { return high_; }
  const std::vector<int64_t>& shape() const { return shape_; }

  /// Flat element count (box) or digit count (multi_discrete).
  size_t size() const {
    switch (kind_) {
      case SpaceKind::discrete: return 1;
      case SpaceKind::multi_discrete: return dims_.size();
      case SpaceKind::box: return low_.size();
    }
    return 0;
  }

  bool contains(const SpaceValue& v) const {
    switch (kind_) {
      case SpaceKind::discrete: {
        const auto* p = std::get_if<int64_t>(&v);
        return p && *p >= 0 && *p < n_;
      }
      case SpaceKind::multi_discrete: {
        const auto* p = std::get_if<std::vector<int64_t>>(&v);
        if (!p || p->size() != dims_.size()) return false;
        for (size_t i = 0; i < dims_.size(); ++i)
          if ((*p)[i] < 0 || (*p)[i] >= dims_[i]) return false;
        return true;
      }
      case SpaceKind::box: {
        const auto* p = std::get_if<std::vector<double>>(&v);
        if (!p || p->size() != low_.size()) return false;
        for (size_t i = 0; i < low_.size(); ++i)
          if ((*p)[i] < low_[i] || (*p)[i] > high_[i]) return false;
        return true;
      }
    }
    return false;
  }

  SpaceValue sample(RngStream& rng) const {
    switch (kind_) {
      case SpaceKind::discrete: return rng.uniform_int(n_);
      case SpaceKind::multi_discrete: {
        std::vector<int64_t> v(dims_.size());
        for (size_t i = 0; i < dims_.size(); ++i) v[i] = rng.uniform_int(dims_[i]);
        return v;
      }
      case SpaceKind::box: {
        std::vector<double> v(low_.size());
        for (size_t i = 0; i < low_.size(); ++i) {
          v[i] = low_[i] == high_[i] ? low_[i] : rng.uniform_real(low_[i], high_[i]);
        }
        return v;
      }
    }
    throw UnsupportedError("unknown space kind");
  }

  /// Number of distinct elements for countable spaces; -1 when it does not
  /// fit in 62 bits. Throws for box spaces.
  int64_t cardinality() const {
    switch (kind_) {
      case SpaceKind::discrete: return n_;
      case SpaceKind::multi_discrete: {
        __int128 card = 1;
        for (int64_t d : dims_) {
          card *= d;
          if (card > (static_cast<__int128>(1) << 62)) return -1;
        }
        return static_cast<int64_t>(card);
      }
      case SpaceKind::box: throw UnsupportedError("box spaces are not countable");
    }
    return -1;
  }

 private:
  SpaceKind kind_ = SpaceKind::discrete;
  int64_t n_ = 1;
  std::vector<int64_t> dims_;
  std::vector<double> low_, high_;
  std::vector<int64_t> shape_;
};

}  // namespace rlsuite
