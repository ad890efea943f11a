#ifndef SIGBASIS_ECHELON_HPP
#define SIGBASIS_ECHELON_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sigbasis/element.hpp"

namespace sigbasis {

/// Dense row echelon form built one row at a time. Column 0 is the most
/// significant. Rational rows are kept as primitive integer vectors and
/// eliminated fraction-free; prime-field rows use plain residues.
class Echelon {
public:
  using Row = std::vector<Coefficient>;

  Echelon(const Field& field, std::size_t columns);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivot_columns_.size(); }
  /// Pivot columns in insertion order.
  const std::vector<std::size_t>& pivot_columns() const { return pivot_columns_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// Reduces and stores the row. Returns the new pivot column, or nothing when
  /// the row was already in the span.
  std::optional<std::size_t> add(const Row& row);
  bool in_span(const Row& row) const;
  /// Whether the remainders of a and b modulo the span are nonzero multiples of
  /// each other, or both zero.
  bool congruent_up_to_scalar(const Row& a, const Row& b) const;

private:
  Field field_;
  std::size_t columns_;
  std::vector<std::vector<mpz_class>> qrows_;
  std::vector<std::vector<std::uint64_t>> prows_;
  std::vector<long> pivot_row_;
  std::vector<std::size_t> pivot_columns_;

  std::vector<mpz_class> to_integers(const Row& row) const;
  std::vector<std::uint64_t> to_residues(const Row& row) const;
  // Leading-column elimination; returns first nonzero column or columns_.
  std::size_t reduce_top(std::vector<mpz_class>& r) const;
  std::size_t reduce_top(std::vector<std::uint64_t>& r) const;
  void reduce_full(std::vector<mpz_class>& r) const;
  void reduce_full(std::vector<std::uint64_t>& r) const;
};

/// Column map for a set of monomials of one space, most significant first.
class ColumnIndex {
public:
  ColumnIndex(const Space& space, std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t column) const { return monomials_[column]; }
  std::optional<std::size_t> find(const Monomial& m) const;
  Echelon::Row row(const Element& f) const;

private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> lookup_;
};

/// Multipliers a in A with deg(a) <= max_degree, increasing degree.
std::vector<Monomial> multipliers_up_to(const Ring& ring, std::uint64_t max_degree);

/// Leading monomials of the span of {a*g : a in A, deg(a*g) <= D}, descending.
std::vector<Monomial> bounded_span_pivots(const std::vector<Element>& gens, std::uint64_t max_degree);

/// Whether f lies in the span of {a*g : a in A, deg(a*g) <= D}.
bool membership_bounded(const Element& f, const std::vector<Element>& gens, std::uint64_t max_degree);

} // namespace sigbasis

#endif
