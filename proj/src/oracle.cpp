// Independent construction of the free strict n-category: close the base
// cells under identities and binary composites, computing each composite's
// nested-string normal form by structural recursion and tracking boundaries
// algebraically rather than through boundary().

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "itdist/errors.hpp"
#include "itdist/globular.hpp"

namespace itdist {

namespace {

struct Item {
  Cell nf;
  std::vector<Cell> src;  // src[d] for d < dim
  std::vector<Cell> tgt;
};

[[noreturn]] void inconsistent(const std::string& what) {
  throw std::logic_error("oracle inconsistency: " + what);
}

Cell wrap(const Cell& base) {
  Cell x = base;
  for (std::size_t l = base.dim(); l-- > 0;) x = Cell::string(base.dim(), l, {x});
  return x;
}

Cell identity(const Cell& x, std::size_t k, std::size_t layer) {
  if (layer == k) return Cell::string(k + 1, k, {}, x);
  if (x.is_base() || x.along() != layer) inconsistent("identity on a non-normal form");
  if (x.empty()) return Cell::string(k + 1, layer, {}, x.anchor());
  std::vector<Cell> entries;
  for (const Cell& e : x.entries()) entries.push_back(identity(e, k, layer + 1));
  return Cell::string(k + 1, layer, std::move(entries));
}

Cell compose(const Cell& x, const Cell& y, std::size_t k, std::size_t layer) {
  if (x.is_base() || y.is_base() || x.along() != layer || y.along() != layer) {
    inconsistent("composite of non-normal forms");
  }
  std::size_t m = x.dim();
  if (layer == k) {
    if (x.empty() && y.empty()) {
      if (x.anchor() != y.anchor()) inconsistent("identities on different cells");
      return x;
    }
    std::vector<Cell> entries = x.entries();
    entries.insert(entries.end(), y.entries().begin(), y.entries().end());
    return Cell::string(m, layer, std::move(entries));
  }
  if (x.entries().size() != y.entries().size()) inconsistent("zip of unequal lengths");
  if (x.empty()) {
    if (x.anchor() != y.anchor()) inconsistent("zip of differently anchored identities");
    return x;
  }
  std::vector<Cell> entries;
  for (std::size_t r = 0; r < x.entries().size(); ++r) {
    entries.push_back(compose(x.entries()[r], y.entries()[r], k, layer + 1));
  }
  return Cell::string(m, layer, std::move(entries));
}

bool within(const Cell& c, std::size_t bound) {
  if (c.is_base()) return true;
  if (c.entries().size() > bound) return false;
  if (c.empty()) return within(c.anchor(), bound);
  for (const Cell& e : c.entries()) {
    if (!within(e, bound)) return false;
  }
  return true;
}

std::uint32_t iterate(const GlobularSet& g, std::size_t m, std::uint32_t k, std::size_t d,
                      bool source) {
  for (; m > d; --m) k = (source ? g.src : g.tgt)[m - 1][k];
  return k;
}

class Closure {
 public:
  Closure(const GlobularSet& g, std::size_t bound) : g_(g), bound_(bound), items_(g.n + 1) {}

  std::vector<std::size_t> run() {
    for (std::uint32_t k = 0; k < g_.cells[0].size(); ++k) add(0, Item{Cell::base(0, k), {}, {}});
    pending_.clear();
    for (std::size_t m = 1; m <= g_.n; ++m) {
      for (std::uint32_t b = 0; b < g_.cells[m].size(); ++b) add(m, atom(m, b));
      for (std::size_t z = 0; z < items_[m - 1].size(); ++z) add(m, identity_item(items_[m - 1][z]));
      saturate(m);
    }
    std::vector<std::size_t> counts;
    for (const auto& dim : items_) counts.push_back(dim.size());
    return counts;
  }

 private:
  Item atom(std::size_t m, std::uint32_t b) const {
    Item it{wrap(Cell::base(m, b)), {}, {}};
    for (std::size_t d = 0; d < m; ++d) {
      it.src.push_back(wrap(Cell::base(d, iterate(g_, m, b, d, true))));
      it.tgt.push_back(wrap(Cell::base(d, iterate(g_, m, b, d, false))));
    }
    return it;
  }

  static Item identity_item(const Item& x) {
    std::size_t k = x.nf.dim();
    Item it{identity(x.nf, k, 0), x.src, x.tgt};
    it.src.push_back(x.nf);
    it.tgt.push_back(x.nf);
    return it;
  }

  Item composite(const Item& x, const Item& y, std::size_t k) const {
    std::size_t m = x.nf.dim();
    Item it{compose(x.nf, y.nf, k, 0), {}, {}};
    for (std::size_t d = 0; d < m; ++d) {
      if (d <= k) {
        it.src.push_back(x.src[d]);
        it.tgt.push_back(y.tgt[d]);
      } else {
        it.src.push_back(compose(x.src[d], y.src[d], k, 0));
        it.tgt.push_back(compose(x.tgt[d], y.tgt[d], k, 0));
      }
    }
    return it;
  }

  bool add(std::size_t m, Item it) {
    if (!within(it.nf, bound_)) return false;
    auto [pos, fresh] = index_.emplace(it.nf, items_[m].size());
    if (!fresh) {
      const Item& old = items_[m][pos->second];
      if (old.src != it.src || old.tgt != it.tgt) inconsistent("one normal form, two boundaries");
      return false;
    }
    if (index_.size() > kCeiling) {
      throw BoundTooLarge("brute-force oracle exceeded " + std::to_string(kCeiling) + " cells");
    }
    items_[m].push_back(std::move(it));
    pending_.push_back(items_[m].size() - 1);
    return true;
  }

  void saturate(std::size_t m) {
    auto& items = items_[m];
    while (!pending_.empty()) {
      std::size_t a = pending_.front();
      pending_.pop_front();
      for (std::size_t b = 0; b < items.size(); ++b) {
        for (std::size_t k = 0; k < m; ++k) {
          if (items[a].tgt[k] == items[b].src[k]) {
            Item it = composite(items[a], items[b], k);
            add(m, std::move(it));
          }
          if (a != b && items[b].tgt[k] == items[a].src[k]) {
            Item it = composite(items[b], items[a], k);
            add(m, std::move(it));
          }
        }
      }
    }
  }

  static constexpr std::size_t kCeiling = 1'000'000;

  const GlobularSet& g_;
  std::size_t bound_;
  std::vector<std::vector<Item>> items_;
  std::unordered_map<Cell, std::size_t> index_;
  std::deque<std::size_t> pending_;
};

}  // namespace

std::vector<std::size_t> brute_force_oracle(const GlobularSet& g, std::size_t bound) {
  return Closure(g, bound).run();
}

}  // namespace itdist
