#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itdist {

/// The seven concrete term shapes. Every element of M(Y) for a base monad M is
/// a node of M's layer whose entries are elements of Y.
enum class Layer : std::uint8_t {
  Seq,               // possibly empty list
  NonemptySeq,       // list of length >= 1
  Multiset,          // sorted, multiplicities >= 1
  NonemptyMultiset,  // as Multiset, at least one entry
  IntComb,           // sorted, nonzero integer coefficients
  Pointed,           // Y + {1}
  AdjoinZero,        // Y + {0}
};

std::string_view layer_name(Layer layer);

bool is_adjoined(Layer layer);
bool is_commutative(Layer layer);

struct TermNode;
struct Entry;

/// An immutable, structurally shared term. Either a generator (an index into
/// some Carrier) or a layer node holding entries of the layer below.
///
/// Terms are always stored in normal form: the constructors sort and merge
/// commutative entries and drop zero coefficients, so structural equality is
/// equality of the denoted free-algebra elements.
class Term {
 public:
  static Term gen(std::uint32_t index);
  /// Normalizing constructor. Throws ShapeMismatch if the entries cannot form
  /// a valid node of `layer` (empty nonempty-shape, bad coefficient, ...).
  static Term node(Layer layer, std::vector<Entry> entries);
  static Term point(Layer layer);
  static Term inject(Layer layer, Term inner);

  bool is_gen() const;
  std::uint32_t gen_index() const;
  Layer layer() const;
  bool is_point() const;
  std::span<const Entry> entries() const;
  /// Injected element of a Pointed/AdjoinZero node.
  const Term& injected() const;

  /// Generator occurrences plus adjoined constants; IntComb counts |coeff|.
  /// Entries weigh at least 1 so that nested enumeration stays finite.
  std::uint64_t size() const;
  std::uint64_t weight() const { return size() == 0 ? 1 : size(); }
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct Entry {
  Term term;
  std::int64_t coeff = 1;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Ordered finite set of generator names; order is used for canonical sorting.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names);
  /// `k` generators named a, b, c, ...
  static Carrier generated(std::size_t k);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  /// Generator terms in carrier order.
  std::vector<Term> terms() const;
  /// The generator term for `name`; throws UnknownGenerator.
  Term term(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Debug/witness rendering, e.g. `NESeq[a,Z{b:2}]`.
std::string to_string(const Term& t, const Carrier* carrier = nullptr);

}  // namespace itdist

template <>
struct std::hash<itdist::Term> {
  std::size_t operator()(const itdist::Term& t) const noexcept { return t.hash(); }
};
