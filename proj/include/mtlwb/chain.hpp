#ifndef MTLWB_CHAIN_HPP
#define MTLWB_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtlwb/rational.hpp"

namespace mtlwb {

class Formula;

/// Position of an element in a finite chain; 0 is bottom, size()-1 is top.
using Index = std::uint16_t;

inline constexpr std::size_t kMaxChainSize = 256;

enum class ChainKind { finite_table, rational_family };

/// Named constructions. `wnm` and `ordinal_sum` and `custom` only occur on
/// finite tables; `product` only as a rational family.
enum class Family { boolean, lukasiewicz, godel, product, nm, dp, wnm, ordinal_sum, custom };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A totally ordered residuated structure (an MTL-chain), optionally with the
/// Baaz delta. Finite chains carry their monoid table; the residuum is always
/// derived from it. Rational families compute their operations on exact
/// rationals and support evaluation only.
///
/// Chains are immutable once built.
class Chain {
 public:
  /// Builds and validates a finite chain. Throws Error(law_violation) naming the
  /// first broken law and its witness.
  static Chain from_table(std::string id, std::vector<Rational> labels,
                          std::vector<Index> star, bool has_delta = false);

  /// Same construction without validation; the residuum is the max-scan of the
  /// table even where that is not a true residuum. Used to inspect broken input.
  static Chain from_table_unchecked(std::string id, std::vector<Rational> labels,
                                    std::vector<Index> star, bool has_delta = false);

  /// Rational-valued chain of a standard family (lukasiewicz, godel, product, nm, dp).
  static Chain rational_family(Family family, bool has_delta = false);

  ChainKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == ChainKind::finite_table; }
  Family family() const noexcept { return family_; }
  bool has_delta() const noexcept { return has_delta_; }

  /// Canonical identifier, e.g. `lukasiewicz:2`, `sum(lukasiewicz:2,godel:2)+delta`.
  const std::string& id() const noexcept { return id_; }

  // Finite-table accessors; calling these on a rational family throws unsupported.
  std::size_t size() const;
  Index top() const { return static_cast<Index>(size() - 1); }
  const std::vector<Rational>& labels() const;
  const Rational& label(Index i) const { return labels().at(i); }
  std::optional<Index> index_of(const Rational& value) const;
  std::span<const Index> star_table() const;
  std::span<const Index> residuum_table() const;

  Index star(Index x, Index y) const { return star_[x * size_ + y]; }
  Index residuum(Index x, Index y) const { return residuum_[x * size_ + y]; }
  Index neg(Index x) const { return residuum(x, 0); }
  Index delta(Index x) const { return x == top() ? x : Index{0}; }

  // Value-level operations, valid for both kinds.
  bool contains(const Rational& value) const;
  Rational star(const Rational& x, const Rational& y) const;
  Rational residuum(const Rational& x, const Rational& y) const;
  Rational delta(const Rational& x) const;

  /// Copy with a different identifier or delta flag.
  Chain with_id(std::string id) const;
  Chain with_delta(bool on) const;

  friend bool operator==(const Chain& a, const Chain& b);

 private:
  Chain() = default;

  ChainKind kind_ = ChainKind::finite_table;
  Family family_ = Family::custom;
  std::string id_;
  bool has_delta_ = false;
  std::size_t size_ = 0;
  std::vector<Rational> labels_;
  std::vector<Index> star_;
  std::vector<Index> residuum_;
};

// ---------------------------------------------------------------------------
// Construction

/// Named finite families. lukasiewicz(n) is the (n+1)-element chain with labels
/// i/n; godel, nm and dp take n as the number of elements (equally spaced).
/// boolean ignores n. n == 0 is rejected with invalid_parameter.
Chain make_chain(Family family, unsigned n);

/// Weak-negation-determined chain on neg.size() equally spaced points:
/// x*y = 0 if x <= neg(y), min(x,y) otherwise.
Chain make_wnm_chain(std::span<const Index> neg);

/// residuum(x,y) = max{z : star(z,x) <= y}; throws no_residuum if that set is
/// not a down-set (the table cannot be residuated).
std::vector<Index> residuum_from_star(std::span<const Index> star, std::size_t k);

/// Ordinal sum of an MV-chain `first` and any finite chain `second`. The result
/// is relabeled to equally spaced points.
Chain ordinal_sum(const Chain& first, const Chain& second);

Chain delta_expand(const Chain& c);

/// Rebuilds a chain from an identifier produced by Chain::id(). Also accepts
/// the aliases `L<n>`, `Ł<n>`, `G<n>`, `NM<n>`, `DP<n>`, `B` and rational
/// families written `<family>:rational`.
Chain chain_from_id(std::string_view id);

// ---------------------------------------------------------------------------
// Inspection

struct LawViolation {
  std::string law;
  std::vector<Index> witness;
  std::string detail;
};

struct ChainReport {
  std::vector<LawViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks bounds, table range, commutativity, associativity, unit, monotonicity
/// and residuation exhaustively. Rational families are sampled on the grid of
/// denominators <= 6.
ChainReport check_chain(const Chain& c);

struct NegationProfile {
  std::vector<Index> a_plus;  // {x : x > ~x}, ascending
  std::optional<Index> fixpoint;
};

NegationProfile negation_profile(const Chain& c);

/// Every subuniverse containing bottom and top, as ascending index sets, in
/// lexicographic order of their membership bitmasks.
std::vector<std::vector<Index>> subchains(const Chain& c);

/// The subalgebra on `carrier` (ascending indices closed under the operations),
/// keeping the original labels.
Chain restrict_chain(const Chain& c, std::span<const Index> carrier);

/// On chains the only order isomorphism between equal-size carriers is the
/// index identity, so this compares sizes, tables and delta flags.
bool isomorphic(const Chain& a, const Chain& b);

/// True iff every assignment of carrier values to the variables of `identity`
/// evaluates to top. Rational families are rejected (unsupported).
bool satisfies_identity(const Chain& c, const Formula& identity);

/// Named schemata: wnm id dp s rdp nmg inv div c prelinearity a1..a9 f
/// delta1..delta5, and the indexed families g<n>, c<n>, d<n>_<m>.
Formula identity(std::string_view name);
std::vector<std::string> identity_names();

// ---------------------------------------------------------------------------
// File format `mtlchain 1`

void write_chain(std::ostream& out, const Chain& c);
std::string chain_to_text(const Chain& c);
/// Parses and validates; law violations are reported as Error(law_violation)
/// with the law name and witness triple.
Chain read_chain(std::istream& in, std::string id = "file");

/// 16 hex digits of FNV-1a over the canonical chain text.
std::string chain_hash(const Chain& c);

}  // namespace mtlwb

#endif  // MTLWB_CHAIN_HPP
