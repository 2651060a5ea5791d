#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hgk/errors.hpp"

namespace hgk {

// A bijection of {1..degree}. Points are 0-based internally; cycle notation
// is 1-based to match the usual conventions.
class Perm {
 public:
  explicit Perm(unsigned degree);  // identity
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm parse(std::string_view cycles, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  // (p * q)(i) = p(q(i)): q is applied first
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g * (*this) * g^-1

  bool is_identity() const;
  unsigned order() const;
  unsigned fixed_point_count() const;
  bool is_even() const;

  std::string cycle_string() const;  // "()" for the identity

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm& rhs) const  // lex on images
  {
    return images_ <=> rhs.images_;
  }

 private:
  std::vector<std::uint8_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hgk
