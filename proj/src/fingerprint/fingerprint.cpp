#include "cgt/fingerprint/fingerprint.hpp"

#include <algorithm>

#include "json.hpp"

#include "cgt/error.hpp"
#include "cgt/fingerprint/homsearch.hpp"

namespace cgt::fp {

using nlohmann::json;

namespace {

bool isomorphic(const fin::PermGroup& a, const fin::PermGroup& b) {
  fin::IsoOptions opts;
  opts.confirm_below = SIZE_MAX;
  return fin::are_isomorphic(a, b, opts).value_or(false);
}

fin::PermGroup group_of(const std::vector<fin::Perm>& images, int degree) {
  std::vector<fin::Perm> gens;
  for (const auto& p : images) gens.push_back(p.extended(std::max(degree, 1)));
  return fin::PermGroup(std::max(degree, 1), std::move(gens));
}

// Index into `classes` of a class isomorphic to g, if any.
std::optional<std::size_t> find_class(const std::vector<QuotientClass>& classes, int degree,
                                      const fin::IsoSignature& sig, const fin::PermGroup& g) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].signature == sig && isomorphic(group_of(classes[i].images, degree), g)) return i;
  return std::nullopt;
}

}  // namespace

fin::PermGroup Fingerprint::group(std::size_t i) const { return group_of(classes.at(i).images, degree); }

std::string Fingerprint::to_json(int indent) const {
  json j;
  j["bound"] = bound;
  j["degree"] = degree;
  j["complete"] = complete;
  j["generators"] = generators;
  j["classes"] = json::array();
  for (const auto& c : classes) {
    json cj;
    cj["order"] = c.signature.order;
    cj["name"] = c.name;
    cj["signature"] = c.signature.to_string();
    cj["images"] = json::array();
    for (const auto& p : c.images) cj["images"].push_back(p.one_line());
    j["classes"].push_back(cj);
  }
  j["epimorphisms"] = epimorphisms;
  return j.dump(indent);
}

Fingerprint Fingerprint::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("fingerprint JSON: ") + e.what());
  }
  try {
    Fingerprint f;
    f.bound = j.at("bound").get<std::size_t>();
    f.degree = j.at("degree").get<int>();
    f.complete = j.value("complete", true);
    f.generators = j.value("generators", std::vector<std::string>{});
    for (const auto& cj : j.at("classes")) {
      QuotientClass c;
      c.name = cj.value("name", std::string());
      for (const auto& img : cj.at("images")) c.images.push_back(fin::Perm::from_one_line(img.get<std::vector<int>>()));
      c.signature = fin::iso_signature(group_of(c.images, f.degree));
      f.classes.push_back(std::move(c));
    }
    if (j.contains("epimorphisms")) f.epimorphisms = j.at("epimorphisms").get<std::map<std::string, std::size_t>>();
    return f;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("fingerprint JSON: ") + e.what());
  }
}

Fingerprint quotients_up_to(const fin::GroupPresentation& p, const FingerprintOptions& opts,
                            const graph::GroupCatalog& cat) {
  HomSearchOptions hs;
  hs.degree = opts.degree;
  hs.max_image_order = opts.bound;
  hs.max_nodes = opts.max_nodes;
  hs.jobs = opts.jobs;
  auto found = search_homomorphisms(p, hs);

  Fingerprint f;
  f.bound = opts.bound;
  f.degree = opts.degree;
  f.complete = found.complete;
  f.generators = p.generators;
  f.homomorphisms = found.homomorphisms;
  for (auto& images : found.images) {
    fin::PermGroup g = group_of(images, opts.degree);
    fin::IsoSignature sig = fin::iso_signature(g);
    if (find_class(f.classes, opts.degree, sig, g)) continue;
    QuotientClass c;
    c.signature = std::move(sig);
    c.name = cat.identify(g).value_or("");
    c.images = std::move(images);
    f.classes.push_back(std::move(c));
  }
  std::stable_sort(f.classes.begin(), f.classes.end(),
                   [](const QuotientClass& a, const QuotientClass& b) { return a.signature < b.signature; });
  for (const auto& name : opts.count_targets) {
    fin::PermGroup q = cat.group(name);
    f.epimorphisms[name] = epimorphism_count(p, q.generators(), q.degree(), opts.max_nodes);
  }
  return f;
}

Comparison compare(const Fingerprint& a, const Fingerprint& b) {
  Comparison c;
  if (a.bound != b.bound || a.degree != b.degree) {
    c.verdict = Verdict::Incomparable;
    c.reason = "fingerprints were taken with different bounds";
    return c;
  }
  if (!a.complete || !b.complete) {
    c.verdict = Verdict::Incomparable;
    c.reason = "a fingerprint is incomplete";
    return c;
  }
  for (const auto& [name, count] : a.epimorphisms) {
    auto it = b.epimorphisms.find(name);
    if (it == b.epimorphisms.end()) continue;
    if (c.counts == Verdict::Incomparable) c.counts = Verdict::Equal;
    if (it->second != count && c.counts == Verdict::Equal) {
      c.counts = Verdict::Differ;
      c.count_witness = name;
    }
  }
  auto missing = [](const Fingerprint& x, const Fingerprint& y) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < x.classes.size(); ++i)
      if (!find_class(y.classes, y.degree, x.classes[i].signature, x.group(i))) return i;
    return std::nullopt;
  };
  if (auto i = missing(a, b)) {
    c.verdict = Verdict::Differ;
    c.witness = a.classes[*i];
    c.witness_in_first = true;
  } else if (auto k = missing(b, a)) {
    c.verdict = Verdict::Differ;
    c.witness = b.classes[*k];
  }
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Differ: return "differ";
    case Verdict::Incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace cgt::fp
