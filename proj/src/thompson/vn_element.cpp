#include "cgt/thompson/vn_element.hpp"

#include <algorithm>
#include <set>

#include "cgt/error.hpp"

namespace cgt::vn {

namespace {

void require_arity(int n) {
  if (n < 2 || n > 36) throw InvalidInput("arity must lie in 2..36, got " + std::to_string(n));
}

// Recursive descent over a sorted leaf list: every internal node must have
// all n children present, and the list must be consumed exactly.
bool consume_subtree(std::span<const Address> leaves, std::size_t& pos, const Address& node, int n) {
  if (pos >= leaves.size()) return false;
  if (leaves[pos] == node) {
    ++pos;
    return true;
  }
  if (!node.is_prefix_of(leaves[pos])) return false;
  for (int i = 0; i < n; ++i) {
    if (!consume_subtree(leaves, pos, node.child(i), n)) return false;
  }
  return true;
}

bool is_complete_leaf_set(std::span<const Address> sorted_leaves, int n) {
  std::size_t pos = 0;
  return consume_subtree(sorted_leaves, pos, Address{}, n) && pos == sorted_leaves.size();
}

// Sibling block a0..a(n-1) in order, returns the shared parent.
std::optional<Address> sibling_parent(std::span<const Address> block, int n) {
  const Address& first = block.front();
  if (first.empty()) return std::nullopt;
  std::size_t len = first.length();
  for (int i = 0; i < n; ++i) {
    const Address& a = block[static_cast<std::size_t>(i)];
    if (a.length() != len || a[len - 1] != i) return std::nullopt;
    if (i > 0 && a.raw().compare(0, len - 1, first.raw(), 0, len - 1) != 0) return std::nullopt;
  }
  return first.parent();
}

std::vector<std::string> split_list(std::string_view body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string_view field_value(std::string_view text, std::string_view key) {
  auto pos = text.find(key);
  if (pos == std::string_view::npos) throw InvalidInput("missing field '" + std::string(key) + "'");
  pos += key.size();
  auto end = text.find(';', pos);
  auto v = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
  while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
  while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
  return v;
}

std::string_view bracket_body(std::string_view v) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw InvalidInput("expected a [..] list");
  return v.substr(1, v.size() - 2);
}

}  // namespace

VnElement VnElement::identity(int n) {
  require_arity(n);
  return VnElement(n, {Address{}}, {Address{}});
}

VnElement VnElement::from_pairs(int n, std::vector<std::pair<Address, Address>> pairs) {
  require_arity(n);
  std::sort(pairs.begin(), pairs.end());
  std::vector<Address> dom, img;
  dom.reserve(pairs.size());
  img.reserve(pairs.size());
  for (auto& [a, b] : pairs) {
    for (std::size_t i = 0; i < a.length(); ++i)
      if (a[i] >= n) throw InvalidInput("domain leaf digit exceeds arity");
    for (std::size_t i = 0; i < b.length(); ++i)
      if (b[i] >= n) throw InvalidInput("image leaf digit exceeds arity");
    dom.push_back(std::move(a));
    img.push_back(std::move(b));
  }
  if (!is_complete_leaf_set(dom, n)) throw InvalidInput("domain leaves do not form a complete tree");
  std::vector<Address> sorted_img = img;
  std::sort(sorted_img.begin(), sorted_img.end());
  if (!is_complete_leaf_set(sorted_img, n)) throw InvalidInput("range leaves do not form a complete tree");
  return VnElement(n, std::move(dom), std::move(img));
}

VnElement VnElement::on_complete_tree(int n, int depth, std::span<const int> perm) {
  require_arity(n);
  long long count = 1;
  for (int i = 0; i < depth; ++i) count *= n;
  if (static_cast<long long>(perm.size()) != count)
    throw InvalidInput("permutation size does not match n^depth");
  std::vector<char> seen(perm.size(), 0);
  std::vector<Address> dom, img;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int t = perm[i];
    if (t < 0 || t >= count || seen[static_cast<std::size_t>(t)])
      throw InvalidInput("not a permutation of the depth-k leaves");
    seen[static_cast<std::size_t>(t)] = 1;
    dom.push_back(Address::from_index(static_cast<long long>(i), n, depth));
    img.push_back(Address::from_index(t, n, depth));
  }
  return VnElement(n, std::move(dom), std::move(img));
}

VnElement VnElement::parse(std::string_view text) {
  std::string_view nv = field_value(text, "n=");
  int n = 0;
  try {
    n = std::stoi(std::string(nv));
  } catch (const std::exception&) {
    throw InvalidInput("bad arity field '" + std::string(nv) + "'");
  }
  require_arity(n);
  auto dom = split_list(bracket_body(field_value(text, "dom=")));
  auto map = split_list(bracket_body(field_value(text, "map=")));
  if (dom.size() != map.size()) throw InvalidInput("dom and map lengths differ");
  std::vector<std::pair<Address, Address>> pairs;
  for (std::size_t i = 0; i < dom.size(); ++i)
    pairs.emplace_back(Address::parse(dom[i], n), Address::parse(map[i], n));
  return from_pairs(n, std::move(pairs));
}

std::vector<Address> VnElement::range_leaves() const {
  std::vector<Address> r = image_;
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<Address> VnElement::apply(const Address& a) const {
  auto it = std::upper_bound(domain_.begin(), domain_.end(), a);
  if (it == domain_.begin()) return std::nullopt;
  --it;
  if (!it->is_prefix_of(a)) return std::nullopt;
  auto idx = static_cast<std::size_t>(it - domain_.begin());
  return image_[idx].concat(a.suffix_from(it->length()));
}

bool VnElement::is_canonical() const {
  return canonicalize(*this).leaf_count() == leaf_count();
}

bool VnElement::is_identity() const {
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] != image_[i]) return false;
  return true;
}

std::string VnElement::to_string() const {
  std::string out = "n=" + std::to_string(n_) + "; dom=[";
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out += ',';
    out += domain_[i].to_string();
  }
  out += "]; map=[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += image_[i].to_string();
  }
  out += ']';
  return out;
}

VnElement canonicalize(const VnElement& x) {
  const int n = x.n_;
  const auto un = static_cast<std::size_t>(n);
  std::vector<Address> dom, img;
  dom.reserve(x.domain_.size());
  img.reserve(x.domain_.size());
  for (std::size_t k = 0; k < x.domain_.size(); ++k) {
    dom.push_back(x.domain_[k]);
    img.push_back(x.image_[k]);
    // Siblings are consecutive in lexicographic order, so a reducible caret
    // always sits on top of the stack once its last child has been pushed.
    while (dom.size() >= un) {
      std::span<const Address> dtop(dom.data() + dom.size() - un, un);
      std::span<const Address> itop(img.data() + img.size() - un, un);
      auto dp = sibling_parent(dtop, n);
      if (!dp) break;
      auto ip = sibling_parent(itop, n);
      if (!ip) break;
      dom.resize(dom.size() - un);
      img.resize(img.size() - un);
      dom.push_back(std::move(*dp));
      img.push_back(std::move(*ip));
    }
  }
  return VnElement(n, std::move(dom), std::move(img));
}

VnElement compose(const VnElement& x, const VnElement& y) {
  if (x.n_ != y.n_) throw InvalidInput("arity mismatch in compose");
  std::vector<Address> dom, img;
  dom.reserve(std::max(x.leaf_count(), y.leaf_count()));
  img.reserve(dom.capacity());
  const auto& yd = y.domain_;
  for (std::size_t k = 0; k < x.domain_.size(); ++k) {
    const Address& a = x.domain_[k];
    const Address& r = x.image_[k];
    auto it = std::lower_bound(yd.begin(), yd.end(), r);
    if (it != yd.end() && *it == r) {
      dom.push_back(a);
      img.push_back(y.image_[static_cast<std::size_t>(it - yd.begin())]);
      continue;
    }
    if (it != yd.begin() && std::prev(it)->is_prefix_of(r)) {
      auto j = static_cast<std::size_t>(std::prev(it) - yd.begin());
      dom.push_back(a);
      img.push_back(y.image_[j].concat(r.suffix_from(yd[j].length())));
      continue;
    }
    // r is an internal node of y's domain tree: refine x below a.
    for (; it != yd.end() && r.is_prefix_of(*it); ++it) {
      auto j = static_cast<std::size_t>(it - yd.begin());
      dom.push_back(a.concat(it->suffix_from(r.length())));
      img.push_back(y.image_[j]);
    }
  }
  // Cones of distinct x-leaves are disjoint and ordered like the leaves, so
  // `dom` is already sorted.
  return canonicalize(VnElement(x.n_, std::move(dom), std::move(img)));
}

VnElement invert(const VnElement& x) {
  std::vector<std::size_t> order(x.leaf_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x.image_[a] < x.image_[b]; });
  std::vector<Address> dom, img;
  dom.reserve(order.size());
  img.reserve(order.size());
  for (std::size_t i : order) {
    dom.push_back(x.image_[i]);
    img.push_back(x.domain_[i]);
  }
  return canonicalize(VnElement(x.n_, std::move(dom), std::move(img)));
}

VnElement expand(const VnElement& x, const Address& leaf) {
  auto it = std::lower_bound(x.domain_.begin(), x.domain_.end(), leaf);
  if (it == x.domain_.end() || *it != leaf)
    throw InvalidInput("address " + leaf.to_string() + " is not a domain leaf");
  auto idx = static_cast<std::size_t>(it - x.domain_.begin());
  std::vector<Address> dom, img;
  dom.reserve(x.leaf_count() + static_cast<std::size_t>(x.n_));
  img.reserve(dom.capacity());
  for (std::size_t k = 0; k < x.leaf_count(); ++k) {
    if (k == idx) {
      for (int i = 0; i < x.n_; ++i) {
        dom.push_back(x.domain_[k].child(i));
        img.push_back(x.image_[k].child(i));
      }
    } else {
      dom.push_back(x.domain_[k]);
      img.push_back(x.image_[k]);
    }
  }
  return VnElement(x.n_, std::move(dom), std::move(img));
}

bool equals(const VnElement& x, const VnElement& y) {
  if (x.arity() != y.arity()) throw InvalidInput("arity mismatch in equals");
  return canonicalize(x) == canonicalize(y);
}

VnElement power(const VnElement& x, long long k) {
  VnElement base = k < 0 ? invert(x) : canonicalize(x);
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  VnElement acc = VnElement::identity(x.arity());
  while (e) {
    if (e & 1ULL) acc = compose(acc, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return acc;
}

namespace {

long long count_inversions(std::vector<Address>& v, std::vector<Address>& tmp, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  long long inv = count_inversions(v, tmp, lo, mid) + count_inversions(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += static_cast<long long>(mid - i);
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  for (std::size_t t = lo; t < hi; ++t) v[t] = tmp[t];
  return inv;
}

}  // namespace

Parity parity(const VnElement& x) {
  std::vector<Address> v(x.images().begin(), x.images().end());
  std::vector<Address> tmp(v.size());
  return count_inversions(v, tmp, 0, v.size()) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity class_parity(const VnElement& x) {
  if (x.arity() % 2 == 0)
    throw InvalidInput("class parity is only defined for odd arity (n=" + std::to_string(x.arity()) + ")");
  return parity(canonicalize(x));
}

std::optional<int> element_order(const VnElement& x, int bound) {
  if (bound < 1) throw InvalidInput("order bound must be at least 1");
  VnElement c = canonicalize(x);
  VnElement p = c;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    if (k < bound) p = compose(p, c);
  }
  return std::nullopt;
}

namespace {

void require_synthesis_arity(int n) {
  require_arity(n);
  if (n < 3) throw InvalidInput("the four-involution construction needs n >= 3");
}


}  // namespace

VnElement generator(int n, int which) {
  require_synthesis_arity(n);
  const int big = n * n;
  std::vector<int> perm(static_cast<std::size_t>(big));
  switch (which) {
    case 1:
      for (int i = 0; i < big; ++i) perm[static_cast<std::size_t>(i)] = big - 1 - i;
      return canonicalize(VnElement::on_complete_tree(n, 2, perm));
    case 2:
      for (int i = 0; i < big; ++i) perm[static_cast<std::size_t>(i)] = (big - i) % big;
      return canonicalize(VnElement::on_complete_tree(n, 2, perm));
    case 3:
      for (int i = 0; i < big; ++i) perm[static_cast<std::size_t>(i)] = i;
      std::swap(perm[0], perm[1]);
      return canonicalize(VnElement::on_complete_tree(n, 2, perm));
    case 4:
      return transposition_element(n, Address::parse("00", n), Address::parse("1", n));
    default:
      throw InvalidInput("generator index must be 1..4");
  }
}

VnElement pull_up(int n) {
  require_synthesis_arity(n);
  std::vector<std::pair<Address, Address>> p;
  const Address zero = Address::repeat(0, 1), one = Address::repeat(1, 1);
  p.emplace_back(zero.child(0), zero);
  p.emplace_back(zero.child(1), one.child(0));
  for (int i = 2; i < n; ++i) p.emplace_back(zero.child(i), one.child(i));
  p.emplace_back(one, one.child(1));
  for (int j = 2; j < n; ++j) p.emplace_back(Address::repeat(j, 1), Address::repeat(j, 1));
  return VnElement::from_pairs(n, std::move(p));
}

VnElement pull_up2(int n) {
  require_synthesis_arity(n);
  std::vector<std::pair<Address, Address>> p;
  const Address zero = Address::repeat(0, 1), two = Address::repeat(2, 1);
  p.emplace_back(zero.child(0), zero);
  p.emplace_back(zero.child(2), two.child(0));
  for (int i = 1; i < n; ++i)
    if (i != 2) p.emplace_back(zero.child(i), two.child(i));
  p.emplace_back(two, two.child(2));
  for (int j = 1; j < n; ++j)
    if (j != 2) p.emplace_back(Address::repeat(j, 1), Address::repeat(j, 1));
  return VnElement::from_pairs(n, std::move(p));
}

VnElement d_element(int n, int m, int p) {
  require_synthesis_arity(n);
  if (m < 1 || p < 0) throw InvalidInput("d_element needs m >= 1 and p >= 0");
  Address a = Address::repeat(0, static_cast<std::size_t>(p + m));
  Address b = Address::repeat(0, static_cast<std::size_t>(p)).child(1);
  return transposition_element(n, a, b);
}

VnElement transposition_element(int n, const Address& a, const Address& b) {
  require_arity(n);
  if (!a.incomparable_with(b))
    throw InvalidInput("transposition needs incomparable addresses, got " + a.to_string() + " and " +
                       b.to_string());
  std::set<Address> internal;
  for (const Address* x : {&a, &b})
    for (std::size_t len = 0; len < x->length(); ++len) internal.insert(x->prefix(len));
  std::vector<std::pair<Address, Address>> pairs;
  for (const Address& node : internal) {
    for (int i = 0; i < n; ++i) {
      Address c = node.child(i);
      if (internal.count(c)) continue;
      if (c == a)
        pairs.emplace_back(c, b);
      else if (c == b)
        pairs.emplace_back(c, a);
      else
        pairs.emplace_back(c, c);
    }
  }
  return canonicalize(VnElement::from_pairs(n, std::move(pairs)));
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace cgt::vn
