#include "cgt/thompson/address.hpp"

#include "cgt/error.hpp"

namespace cgt::vn {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char digit_char(int d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

}  // namespace

Address Address::parse(std::string_view text, int arity) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    int d = digit_value(c);
    if (d < 0 || d >= arity) {
      throw InvalidInput("address '" + std::string(text) + "' has a digit outside 0.." +
                         std::to_string(arity - 1));
    }
    digits.push_back(static_cast<char>(d));
  }
  return Address(std::move(digits));
}

Address Address::repeat(int digit, std::size_t count) {
  return Address(std::string(count, static_cast<char>(digit)));
}

Address Address::from_index(long long index, int arity, int depth) {
  std::string digits(static_cast<std::size_t>(depth), '\0');
  for (int i = depth - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<char>(index % arity);
    index /= arity;
  }
  return Address(std::move(digits));
}

Address Address::child(int digit) const {
  std::string d = digits_;
  d.push_back(static_cast<char>(digit));
  return Address(std::move(d));
}

Address Address::parent() const {
  if (digits_.empty()) throw InvalidInput("the root has no parent");
  return Address(digits_.substr(0, digits_.size() - 1));
}

long long Address::to_index(int arity) const {
  long long v = 0;
  for (char c : digits_) v = v * arity + static_cast<unsigned char>(c);
  return v;
}

std::string Address::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (char c : digits_) out.push_back(digit_char(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace cgt::vn
