#ifndef SIGBASIS_MONOMIAL_HPP
#define SIGBASIS_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sigbasis {

using Exponent = std::uint32_t;

/// Exponent vector with an optional module index. Index 0 means "no index"
/// (a ring monomial or a multiplier); module monomials use 1..rank. The zero
/// monomial is a distinguished value that sorts below everything.
class Monomial {
public:
  using Exponents = boost::container::small_vector<Exponent, 8>;

  /// The zero monomial.
  Monomial() = default;
  Monomial(std::initializer_list<Exponent> exps, std::uint32_t index = 0);
  Monomial(std::span<const Exponent> exps, std::uint32_t index = 0);

  static Monomial zero() { return Monomial(); }
  static Monomial one(std::size_t width, std::uint32_t index = 0);

  bool is_zero() const { return zero_; }
  /// Nonzero, all exponents zero. Module basis vectors count as identity here.
  bool is_one() const { return !zero_ && degree_ == 0; }
  std::size_t width() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }
  std::uint64_t degree() const { return degree_; }
  std::uint32_t index() const { return index_; }
  bool has_index() const { return index_ != 0; }

  Monomial with_index(std::uint32_t index) const;
  Monomial without_index() const { return with_index(0); }

  /// this * a where a carries no index. Exponent overflow is a structural error.
  Monomial times(const Monomial& a) const;
  /// Componentwise divisibility, indices must agree. Ignores any monoid restriction.
  bool divides(const Monomial& n) const;
  /// n / this as an index-free multiplier, if this divides n componentwise.
  std::optional<Monomial> quotient_into(const Monomial& n) const;
  /// Componentwise maximum, index-free.
  Monomial lcm(const Monomial& n) const;

  bool operator==(const Monomial& o) const {
    if (zero_ || o.zero_)
      return zero_ == o.zero_;
    return index_ == o.index_ && exps_ == o.exps_;
  }

  std::size_t hash() const;

private:
  void recompute_degree();

  Exponents exps_;
  std::uint64_t degree_ = 0;
  std::uint32_t index_ = 0;
  bool zero_ = true;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term order on index-free exponent vectors. Variables are ranked by
/// `ascending`: ascending[0] is the position of the smallest variable.
class ScalarOrder {
public:
  enum class Kind { lex, degrevlex };

  ScalarOrder(Kind kind, std::vector<std::size_t> ascending);
  /// Smallest variable first in declaration order.
  static ScalarOrder degrevlex(std::size_t width);
  static ScalarOrder lex(std::size_t width);

  Kind kind() const { return kind_; }
  std::size_t width() const { return ascending_.size(); }
  const std::vector<std::size_t>& ascending() const { return ascending_; }

  std::strong_ordering compare(const Monomial& m, const Monomial& n) const;
  bool operator==(const ScalarOrder& o) const { return kind_ == o.kind_ && ascending_ == o.ascending_; }

private:
  Kind kind_;
  std::vector<std::size_t> ascending_;
};

/// Order on monomials of a free module of the given rank. Rank 0 means the
/// ring itself, where monomials carry no index.
class ModuleOrder {
public:
  enum class Kind { pot, top };

  explicit ModuleOrder(ScalarOrder base, std::uint32_t rank = 0, Kind kind = Kind::top);

  const ScalarOrder& base() const { return base_; }
  std::uint32_t rank() const { return rank_; }
  Kind kind() const { return kind_; }

  std::strong_ordering compare(const Monomial& m, const Monomial& n) const;
  bool less(const Monomial& m, const Monomial& n) const { return compare(m, n) < 0; }
  /// Throws unless m is a legal monomial of this module.
  void check(const Monomial& m) const;

  bool operator==(const ModuleOrder& o) const {
    return base_ == o.base_ && rank_ == o.rank_ && kind_ == o.kind_;
  }

private:
  ScalarOrder base_;
  std::uint32_t rank_;
  Kind kind_;
};

/// The multiplier monoid A. `full` is all of N^n; `degree_truncated` is the
/// identity together with every monomial of degree at least d, minus an
/// explicit exclusion list; `generated` is the monoid generated by a finite list.
class MonoidSpec {
public:
  enum class Kind { full, degree_truncated, generated };

  static MonoidSpec full() { return MonoidSpec(); }
  static MonoidSpec degree_truncated(std::uint64_t min_degree, std::vector<Monomial> exclusions = {});
  static MonoidSpec generated(std::vector<Monomial> generators);

  Kind kind() const { return kind_; }
  std::uint64_t min_degree() const { return min_degree_; }
  const std::vector<Monomial>& exclusions() const { return exclusions_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  /// Membership of an index-free monomial.
  bool contains(const Monomial& a) const;

  bool operator==(const MonoidSpec& o) const {
    return kind_ == o.kind_ && min_degree_ == o.min_degree_ && exclusions_ == o.exclusions_ &&
           generators_ == o.generators_;
  }

private:
  Kind kind_ = Kind::full;
  std::uint64_t min_degree_ = 0;
  std::vector<Monomial> exclusions_;
  std::vector<Monomial> generators_;
};

bool monoid_member(const Monomial& a, const MonoidSpec& spec);

/// The multiplier a in A with a*m = n, if there is one.
std::optional<Monomial> divide(const Monomial& m, const Monomial& n, const MonoidSpec& spec);

/// Divisibility within the monoid: some a in A has a*m = n.
inline bool monoid_divides(const Monomial& m, const Monomial& n, const MonoidSpec& spec) {
  return divide(m, n, spec).has_value();
}

struct CommonMultiples {
  /// Pairs (a, b) with a*m = b*n, minimal under divisibility by A.
  std::vector<std::pair<Monomial, Monomial>> pairs;
  /// False when a bounded search could not certify that no larger minimal
  /// multiplier exists.
  bool complete = true;
};

CommonMultiples minimal_common_multiples(const Monomial& m, const Monomial& n, const MonoidSpec& spec);

/// Calls fn on every index-free monomial of the given width with degree <= max_degree,
/// in increasing degree.
void for_each_monomial_up_to(std::size_t width, std::uint64_t max_degree,
                             const std::function<void(const Monomial&)>& fn);

} // namespace sigbasis

template <>
struct std::hash<sigbasis::Monomial> {
  std::size_t operator()(const sigbasis::Monomial& m) const { return m.hash(); }
};

#endif
