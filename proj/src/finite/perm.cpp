#include "cgt/finite/perm.hpp"

#include <cctype>
#include <numeric>

#include "cgt/error.hpp"

namespace cgt::fin {

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("image list is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> img;
  img.reserve(one_based.size());
  for (int x : one_based) img.push_back(x - 1);
  return from_images(std::move(img));
}

Perm Perm::parse(std::string_view text, int degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InvalidInput("expected a number in permutation '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<int> one;
    skip_ws();
    while (pos < text.size() && text[pos] != ']') {
      one.push_back(read_int());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
      skip_ws();
    }
    if (pos >= text.size()) throw InvalidInput("unterminated one-line permutation");
    Perm p = from_one_line(one);
    return p.degree() < degree ? p.extended(degree) : p;
  }
  std::vector<std::vector<int>> cycles;
  int max_point = degree;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw InvalidInput("bad permutation text '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      int x = read_int();
      if (x < 1) throw InvalidInput("permutation points are 1-based");
      cyc.push_back(x - 1);
      max_point = std::max(max_point, x);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
      skip_ws();
    }
    if (pos >= text.size()) throw InvalidInput("unterminated cycle");
    ++pos;
    cycles.push_back(std::move(cyc));
  }
  std::vector<int> img(static_cast<std::size_t>(max_point));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(img.size(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto x = static_cast<std::size_t>(c[i]);
      if (used[x]) throw InvalidInput("point repeated across cycles");
      used[x] = 1;
      img[x] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& q) const {
  if (q.img_.size() != img_.size()) {
    int d = std::max(degree(), q.degree());
    return extended(d) * q.extended(d);
  }
  std::vector<int> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[i] = q.img_[static_cast<std::size_t>(img_[i])];
  return Perm(std::move(r));
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Perm(std::move(r));
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1ULL) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

int Perm::order() const {
  long long o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return static_cast<int>(o);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw InvalidInput("cannot shrink a permutation");
  std::vector<int> r = img_;
  for (int i = this->degree(); i < degree; ++i) r.push_back(i);
  return Perm(std::move(r));
}

std::vector<int> Perm::one_line() const {
  std::vector<int> r;
  r.reserve(img_.size());
  for (int x : img_) r.push_back(x + 1);
  return r;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

}  // namespace cgt::fin
