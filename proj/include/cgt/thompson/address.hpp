#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace cgt::vn {

/// A vertex of the infinite n-ary rooted tree: a finite sequence of digits
/// in {0, ..., n-1}. The empty sequence is the root.
///
/// Ordering is lexicographic with a proper prefix sorting before its
/// extensions, which is the leaf order used throughout the tree-pair code.
class Address {
 public:
  Address() = default;

  /// Builds from printable text ("012", "" for the root). Digits above 9 use
  /// the letters a-z. Throws InvalidInput when a digit is not below `arity`.
  static Address parse(std::string_view text, int arity);
  static Address repeat(int digit, std::size_t count);
  /// The depth-`depth` address whose base-n value is `index`.
  static Address from_index(long long index, int arity, int depth);

  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(digits_[i]); }

  Address child(int digit) const;
  Address parent() const;
  Address prefix(std::size_t len) const { return Address(digits_.substr(0, len)); }
  Address suffix_from(std::size_t pos) const { return Address(digits_.substr(pos)); }
  Address concat(const Address& tail) const { return Address(digits_ + tail.digits_); }

  /// True when *this is a (not necessarily proper) prefix of `other`.
  bool is_prefix_of(const Address& other) const {
    return digits_.size() <= other.digits_.size() &&
           other.digits_.compare(0, digits_.size(), digits_) == 0;
  }
  /// Neither address is a prefix of the other.
  bool incomparable_with(const Address& other) const {
    return !is_prefix_of(other) && !other.is_prefix_of(*this);
  }

  long long to_index(int arity) const;
  std::string to_string() const;

  std::strong_ordering operator<=>(const Address& other) const {
    int c = digits_.compare(other.digits_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  bool operator==(const Address& other) const = default;

  const std::string& raw() const { return digits_; }

 private:
  explicit Address(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

}  // namespace cgt::vn
