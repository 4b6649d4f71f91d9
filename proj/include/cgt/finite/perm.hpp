#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cgt::fin {

/// Permutation of {0, ..., degree-1} in one-line form. Products act on the
/// right: (p * q)[x] = q[p[x]], i.e. p first.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int degree);
  /// From 0-based images; throws InvalidInput unless a bijection.
  static Perm from_images(std::vector<int> images);
  /// From 1-based one-line images, the catalog convention.
  static Perm from_one_line(const std::vector<int>& one_based);
  /// Accepts cycle notation "(1,2,3)(4,5)" / "(1 2 3)" or one-line "[2,1,3]",
  /// both 1-based. The degree is padded to at least `degree`.
  static Perm parse(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  int order() const;
  bool is_identity() const;
  /// Same permutation on a larger point set.
  Perm extended(int degree) const;

  std::vector<int> one_line() const;  // 1-based
  std::string to_cycle_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace cgt::fin
