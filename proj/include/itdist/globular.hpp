#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itdist/check_report.hpp"

namespace itdist {

/// Finite n-globular set. cells[d] names the d-cells; src[d][k] / tgt[d][k]
/// index the d-cell bounding the k-th (d+1)-cell.
struct GlobularSet {
  std::size_t n = 0;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::uint32_t>> src;
  std::vector<std::vector<std::uint32_t>> tgt;

  std::size_t cell_count() const;
  std::optional<std::uint32_t> index_of(std::size_t dim, std::string_view name) const;
};

/// Builds a globular set from per-dimension names and boundary maps given by
/// name; throws FormatError on unknown names or non-total maps.
GlobularSet make_globular(
    std::size_t n, std::vector<std::vector<std::string>> cells,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& src,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& tgt);

/// One cell per dimension.
GlobularSet terminal_globular(std::size_t n);

/// ss = st and ts = tt on every cell of dimension >= 2.
CheckReport validate_globular(const GlobularSet& g);

/// JSON with fields n, cells, src, tgt (src/tgt: one name -> name object per
/// dimension 1..n). Throws FormatError, and GlobularityError naming the
/// offending cell unless `require_globular` is false.
GlobularSet parse_globular(std::string_view json_text, bool require_globular = true);
GlobularSet load_globular(const std::filesystem::path& path, bool require_globular = true);

enum class Side { Src, Tgt };

/// A cell of a nested free-composition construction over a globular set:
/// either a cell of the base set, or a string of dim-m cells composed along
/// dimension i < m. An empty string carries its anchor, an i-cell.
class Cell {
 public:
  static Cell base(std::size_t dim, std::uint32_t index);
  /// Throws ShapeMismatch if entries have the wrong dimension or the anchor
  /// is missing/superfluous or of the wrong dimension.
  static Cell string(std::size_t dim, std::size_t along, std::vector<Cell> entries,
                     std::optional<Cell> anchor = std::nullopt);

  bool is_base() const;
  std::size_t dim() const;
  std::uint32_t index() const;
  std::size_t along() const;
  const std::vector<Cell>& entries() const;
  bool empty() const { return entries().empty(); }
  const Cell& anchor() const;
  std::size_t hash() const;

  friend bool operator==(const Cell& a, const Cell& b);
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);

 private:
  struct Node;
  explicit Cell(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Base cells print as their names; strings as [e1,e2]_i, empty ones as
/// []_i@anchor.
std::string to_string(const GlobularSet& g, const Cell& c);

/// The d-dimensional source or target. Base cells follow the globular maps;
/// a string along i is bounded componentwise above i and by its first (src)
/// or last (tgt) entry, or its anchor, at and below i. Throws DimensionError
/// unless d < dim(c).
Cell boundary(const GlobularSet& g, const Cell& c, Side side, std::size_t d);

/// Cells of a globular set built over g, indexed by dimension, each sorted.
using CellSet = std::vector<std::vector<Cell>>;

CellSet base_cells(const GlobularSet& g);

using CellFn = std::function<Cell(const Cell&)>;

// The free i-composition monad T_i. Cells of dimension <= i are untouched.
Cell ti_unit(const Cell& c, std::size_t i);
/// Concatenation; throws ShapeMismatch on a non-nested input and
/// ComposabilityError when adjacent entries do not meet.
Cell ti_mult(const GlobularSet& g, const Cell& c, std::size_t i);
Cell ti_map(const Cell& c, std::size_t i, const CellFn& f);

/// T_i applied to a cell set: dimensions <= i copied, each dimension m > i
/// replaced by the i-composable strings of length <= bound (including one
/// empty string per i-cell). Throws BoundTooLarge past `ceiling` cells.
CellSet apply_Ti(const GlobularSet& g, const CellSet& y, std::size_t i, std::size_t bound,
                 std::size_t ceiling = 1'000'000);

/// T_0 T_1 ... T_{n-1} applied to the base cells, T_{n-1} first.
CellSet free_ncat(const GlobularSet& g, std::size_t bound);

std::vector<std::size_t> cell_counts(const CellSet& cells);

/// Every cell's boundaries lie in the set and satisfy globularity.
CheckReport validate_cells(const GlobularSet& g, const CellSet& cells, const std::string& id);

/// Interchange T_i T_j => T_j T_i (i > j): transposes a string along i of
/// strings along j. Throws RaggedGrid when the inner strings differ in
/// length, IndexOrder unless i > j.
Cell interchange_law(const Cell& c, std::size_t i, std::size_t j);

/// Transposes a nonempty grid given as a string along `outer` of nonempty
/// strings along `inner` of equal length; either direction.
Cell transpose_grid(const Cell& c, std::size_t outer, std::size_t inner);

/// Unit and associativity laws of T_i on g at the given string bound.
CheckReport check_ti_monad(const GlobularSet& g, std::size_t i, std::size_t bound);

/// The four distributive-law diagrams for interchange T_i T_j => T_j T_i on
/// g, plus naturality along the map to the terminal globular set.
CheckReport check_interchange(const GlobularSet& g, std::size_t i, std::size_t j,
                              std::size_t bound);

/// Hexagon for (T_i, T_j, T_k), i > j > k, built from interchange laws.
CheckReport check_interchange_yang_baxter(const GlobularSet& g, std::size_t i, std::size_t j,
                                          std::size_t k, std::size_t bound);

/// Per-dimension counts of distinct normal forms reached by closing the
/// base cells under identities and binary compositions, keeping every
/// nested string within the bound.
std::vector<std::size_t> brute_force_oracle(const GlobularSet& g, std::size_t bound);

/// A 2-globular set with a formal identity 2-cell id_f added for each
/// 1-cell f.
struct ReflexiveSet {
  GlobularSet g;
  std::vector<std::uint32_t> identity_of;  // 1-cell index -> 2-cell index
};
ReflexiveSet add_identities(const GlobularSet& g);

/// Candidate reverse law T_0 T_1 => T_1 T_0 on a 2-globular carrier that
/// pads shorter columns at the top with identity 2-cells before
/// transposing. `carrier_layers` lists the T_k stacked on the reflexive base,
/// outermost first; identities are formal at the base, empty columns under
/// T_1, and componentwise under T_0.
Cell padding_candidate(const ReflexiveSet& r, const Cell& c,
                       const std::vector<std::size_t>& carrier_layers);

/// Distributive-law diagrams for padding_candidate on the reflexive set.
CheckReport check_padding_candidate(const ReflexiveSet& r, std::size_t bound);

}  // namespace itdist

template <>
struct std::hash<itdist::Cell> {
  std::size_t operator()(const itdist::Cell& c) const noexcept { return c.hash(); }
};
