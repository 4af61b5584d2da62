#include "itdist/term.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "itdist/errors.hpp"

namespace itdist {

struct TermNode {
  bool is_gen = false;
  std::uint32_t gen = 0;
  Layer layer = Layer::Seq;
  bool point = false;
  std::vector<Entry> entries;
  std::uint64_t size = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t magnitude(std::int64_t c) {
  return c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
}

int compare_nodes(const TermNode& a, const TermNode& b);

int compare_terms(const Term& a, const Term& b) {
  auto r = a <=> b;
  return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

// Coefficient key for IntComb ordering: +1 < -1 < +2 < -2 ...
int compare_coeff(std::int64_t a, std::int64_t b) {
  auto ma = magnitude(a), mb = magnitude(b);
  if (ma != mb) return ma < mb ? -1 : 1;
  bool na = a < 0, nb = b < 0;
  if (na != nb) return na ? 1 : -1;
  return 0;
}

// Lexicographic comparison of multisets as expanded sorted sequences.
int compare_expanded(const std::vector<Entry>& a, const std::vector<Entry>& b) {
  std::size_t ia = 0, ib = 0;
  std::int64_t ua = 0, ub = 0;
  while (ia < a.size() && ib < b.size()) {
    if (int c = compare_terms(a[ia].term, b[ib].term); c != 0) return c;
    if (++ua == a[ia].coeff) ++ia, ua = 0;
    if (++ub == b[ib].coeff) ++ib, ub = 0;
  }
  if (ia == a.size() && ib == b.size()) return 0;
  return ia == a.size() ? -1 : 1;
}

int compare_nodes(const TermNode& a, const TermNode& b) {
  if (a.is_gen != b.is_gen) return a.is_gen ? -1 : 1;
  if (a.is_gen) return a.gen == b.gen ? 0 : (a.gen < b.gen ? -1 : 1);
  if (a.layer != b.layer) return a.layer < b.layer ? -1 : 1;
  switch (a.layer) {
    case Layer::Pointed:
    case Layer::AdjoinZero:
      if (a.point != b.point) return a.point ? 1 : -1;
      if (a.point) return 0;
      return compare_terms(a.entries[0].term, b.entries[0].term);
    case Layer::Multiset:
    case Layer::NonemptyMultiset:
      return compare_expanded(a.entries, b.entries);
    case Layer::IntComb: {
      std::size_t n = std::min(a.entries.size(), b.entries.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (int c = compare_terms(a.entries[k].term, b.entries[k].term); c != 0) return c;
        if (int c = compare_coeff(a.entries[k].coeff, b.entries[k].coeff); c != 0) return c;
      }
      if (a.entries.size() == b.entries.size()) return 0;
      return a.entries.size() < b.entries.size() ? -1 : 1;
    }
    case Layer::Seq:
    case Layer::NonemptySeq: {
      std::size_t n = std::min(a.entries.size(), b.entries.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (int c = compare_terms(a.entries[k].term, b.entries[k].term); c != 0) return c;
      }
      if (a.entries.size() == b.entries.size()) return 0;
      return a.entries.size() < b.entries.size() ? -1 : 1;
    }
  }
  return 0;
}

void finish(TermNode& n) {
  std::size_t h = std::hash<int>{}(static_cast<int>(n.layer) + 17);
  h = mix(h, n.point ? 0x51 : 0x17);
  std::uint64_t size = n.point ? 1 : 0;
  for (const Entry& e : n.entries) {
    h = mix(h, e.term.hash());
    h = mix(h, std::hash<std::int64_t>{}(e.coeff));
    size += magnitude(e.coeff) * e.term.weight();
  }
  n.size = size;
  n.hash = h;
}

std::string coeff_string(std::int64_t c) { return std::to_string(c); }

}  // namespace

std::string_view layer_name(Layer layer) {
  switch (layer) {
    case Layer::Seq: return "Seq";
    case Layer::NonemptySeq: return "NESeq";
    case Layer::Multiset: return "MSet";
    case Layer::NonemptyMultiset: return "NEMSet";
    case Layer::IntComb: return "Z";
    case Layer::Pointed: return "Pt";
    case Layer::AdjoinZero: return "Zr";
  }
  return "?";
}

bool is_adjoined(Layer layer) { return layer == Layer::Pointed || layer == Layer::AdjoinZero; }

bool is_commutative(Layer layer) {
  return layer == Layer::Multiset || layer == Layer::NonemptyMultiset || layer == Layer::IntComb;
}

Term Term::gen(std::uint32_t index) {
  auto n = std::make_shared<TermNode>();
  n->is_gen = true;
  n->gen = index;
  n->size = 1;
  n->hash = mix(0x6a09e667f3bcc909ULL, index);
  return Term(std::move(n));
}

Term Term::node(Layer layer, std::vector<Entry> entries) {
  auto n = std::make_shared<TermNode>();
  n->layer = layer;
  switch (layer) {
    case Layer::Seq:
    case Layer::NonemptySeq:
      for (const Entry& e : entries) {
        if (e.coeff != 1) throw ShapeMismatch("sequence entries carry no multiplicity");
      }
      break;
    case Layer::Multiset:
    case Layer::NonemptyMultiset:
    case Layer::IntComb: {
      bool multiset = layer != Layer::IntComb;
      for (const Entry& e : entries) {
        if (multiset && e.coeff < 1) throw ShapeMismatch("multiset multiplicity must be positive");
      }
      std::stable_sort(entries.begin(), entries.end(),
                       [](const Entry& a, const Entry& b) { return a.term < b.term; });
      std::vector<Entry> merged;
      merged.reserve(entries.size());
      for (Entry& e : entries) {
        if (!merged.empty() && merged.back().term == e.term) {
          merged.back().coeff += e.coeff;
        } else {
          merged.push_back(std::move(e));
        }
      }
      std::erase_if(merged, [](const Entry& e) { return e.coeff == 0; });
      entries = std::move(merged);
      break;
    }
    case Layer::Pointed:
    case Layer::AdjoinZero:
      if (entries.size() != 1 || entries[0].coeff != 1) {
        throw ShapeMismatch(std::string(layer_name(layer)) + " node holds exactly one element");
      }
      break;
  }
  if ((layer == Layer::NonemptySeq || layer == Layer::NonemptyMultiset) && entries.empty()) {
    throw ShapeMismatch(std::string(layer_name(layer)) + " node must be nonempty");
  }
  n->entries = std::move(entries);
  finish(*n);
  return Term(std::move(n));
}

Term Term::point(Layer layer) {
  if (!is_adjoined(layer)) throw ShapeMismatch("only Pointed/AdjoinZero have an adjoined point");
  auto n = std::make_shared<TermNode>();
  n->layer = layer;
  n->point = true;
  finish(*n);
  return Term(std::move(n));
}

Term Term::inject(Layer layer, Term inner) {
  if (!is_adjoined(layer)) throw ShapeMismatch("inject needs Pointed/AdjoinZero");
  std::vector<Entry> e;
  e.push_back(Entry{std::move(inner), 1});
  return node(layer, std::move(e));
}

bool Term::is_gen() const { return node_->is_gen; }

std::uint32_t Term::gen_index() const {
  if (!node_->is_gen) throw ShapeMismatch("not a generator");
  return node_->gen;
}

Layer Term::layer() const {
  if (node_->is_gen) throw ShapeMismatch("generator has no layer");
  return node_->layer;
}

bool Term::is_point() const { return !node_->is_gen && node_->point; }

std::span<const Entry> Term::entries() const { return node_->entries; }

const Term& Term::injected() const {
  if (node_->is_gen || !is_adjoined(node_->layer) || node_->point) {
    throw ShapeMismatch("not an injected element");
  }
  return node_->entries[0].term;
}

std::uint64_t Term::size() const { return node_->size; }

std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return compare_nodes(*a.node_, *b.node_) == 0;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  int c = compare_nodes(*a.node_, *b.node_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
  }
}

Carrier Carrier::generated(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    std::string name;
    std::size_t v = i;
    do {
      name.insert(name.begin(), static_cast<char>('a' + v % 26));
      v /= 26;
    } while (v-- > 0);
    names.push_back(name);
  }
  return Carrier(std::move(names));
}

const std::string& Carrier::name(std::uint32_t index) const {
  if (index >= names_.size()) throw UnknownGenerator("generator index out of range");
  return names_[index];
}

std::optional<std::uint32_t> Carrier::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::vector<Term> Carrier::terms() const {
  std::vector<Term> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Term::gen(static_cast<std::uint32_t>(i)));
  return out;
}

Term Carrier::term(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
  return Term::gen(*idx);
}

std::string to_string(const Term& t, const Carrier* carrier) {
  if (t.is_gen()) {
    if (carrier && t.gen_index() < carrier->size()) return carrier->name(t.gen_index());
    return "g" + std::to_string(t.gen_index());
  }
  Layer layer = t.layer();
  if (is_adjoined(layer)) {
    if (t.is_point()) return layer == Layer::Pointed ? "*1" : "*0";
    return std::string(layer_name(layer)) + "(" + to_string(t.injected(), carrier) + ")";
  }
  bool braces = is_commutative(layer);
  std::string out(layer_name(layer));
  out += braces ? "{" : "[";
  bool first = true;
  for (const Entry& e : t.entries()) {
    if (!first) out += ",";
    first = false;
    out += to_string(e.term, carrier);
    if (layer == Layer::IntComb) {
      out += ":" + coeff_string(e.coeff);
    } else if (e.coeff != 1) {
      out += "^" + coeff_string(e.coeff);
    }
  }
  out += braces ? "}" : "]";
  return out;
}

}  // namespace itdist
