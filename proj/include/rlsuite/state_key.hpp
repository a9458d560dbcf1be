#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rlsuite/errors.hpp"
#include "rlsuite/space.hpp"

namespace rlsuite {

namespace detail {

inline int64_t fnv1a64_digits(const std::vector<int64_t>& digits) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (int64_t d : digits) {
    auto u = static_cast<uint64_t>(d);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return static_cast<int64_t>(h);
}

/// Mixed-radix encoding, first digit least significant; falls back to a
/// 64-bit FNV-1a hash when the space has more than 2^62 elements (in that
/// regime injectivity is only statistical).
inline int64_t mixed_radix_key(const std::vector<int64_t>& value,
                               const std::vector<int64_t>& dims) {
  if (value.size() != dims.size())
    throw UnsupportedError("value arity does not match space dims");
  __int128 card = 1;
  for (int64_t d : dims) {
    card *= d;
    if (card > (static_cast<__int128>(1) << 62)) return fnv1a64_digits(value);
  }
  int64_t key = 0;
  int64_t radix = 1;
  for (size_t i = 0; i < dims.size(); ++i) {
    key += value[i] * radix;
    radix *= dims[i];
  }
  return key;
}

}  // namespace detail

/// Canonical integer key of an observation from a countable space. Injective
/// and deterministic; discrete observations map to themselves.
inline int64_t state_key(const SpaceValue& observation, const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::discrete:
      return as_discrete(observation);
    case SpaceKind::multi_discrete:
      return detail::mixed_radix_key(as_multi(observation), space.dims());
    case SpaceKind::box:
      throw UnsupportedError(
          "state_key on a box observation requires a configured discretizer (KeyEncoder)");
  }
  throw UnsupportedError("unknown space kind");
}

/// Turns observations into table keys. Box observations are quantized into
/// `box_bins` uniform bins per element first; countable spaces are encoded
/// directly via state_key.
class KeyEncoder {
 public:
  KeyEncoder() = default;

  explicit KeyEncoder(SpaceDescriptor space, int box_bins = 0)
      : space_(std::move(space)), box_bins_(box_bins) {
    if (space_.kind() == SpaceKind::box && box_bins_ < 1)
      throw UnsupportedError("box observations need box_bins >= 1");
  }

  int64_t key(const SpaceValue& observation) const {
    if (space_.kind() != SpaceKind::box) return state_key(observation, space_);
    const auto& v = as_box(observation);
    std::vector<int64_t> digits(v.size());
    std::vector<int64_t> dims(v.size(), box_bins_);
    for (size_t i = 0; i < v.size(); ++i) {
      const double lo = space_.low()[i];
      const double hi = space_.high()[i];
      int64_t bin = 0;
      if (hi > lo) {
        bin = static_cast<int64_t>(std::floor((v[i] - lo) / (hi - lo) * box_bins_));
        if (bin < 0) bin = 0;
        if (bin >= box_bins_) bin = box_bins_ - 1;
      }
      digits[i] = bin;
    }
    return detail::mixed_radix_key(digits, dims);
  }

  const SpaceDescriptor& space() const { return space_; }

 private:
  SpaceDescriptor space_ = SpaceDescriptor::discrete(1);
  int box_bins_ = 0;
};

}  // namespace rlsuite
