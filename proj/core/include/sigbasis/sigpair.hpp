#ifndef SIGBASIS_SIGPAIR_HPP
#define SIGBASIS_SIGPAIR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigbasis/element.hpp"

namespace sigbasis {

/// A part in M together with the leading monomial of some preimage in S.
/// Signatures carry no scalar: rescaling the part leaves the signature alone.
struct SigPair {
  Element part;
  Monomial signature;
  /// Provenance rank; inputs get 1..r in input order.
  std::size_t id = 0;
};

/// Ordered collection of sigpairs over a fixed part space M and signature space S.
class SigSet {
public:
  SigSet(SpacePtr part_space, SpacePtr sig_space);

  const SpacePtr& part_space() const { return part_space_; }
  const SpacePtr& sig_space() const { return sig_space_; }
  const MonoidSpec& monoid() const { return part_space_->monoid(); }

  const std::vector<SigPair>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const SigPair& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Validates spaces and id uniqueness, then appends.
  const SigPair& add(SigPair p);
  const SigPair* find_id(std::size_t id) const;

  bool sig_less(const Monomial& a, const Monomial& b) const { return sig_space_->less(a, b); }

private:
  SpacePtr part_space_;
  SpacePtr sig_space_;
  std::vector<SigPair> members_;
};

/// a * f with a in A. The id is kept.
SigPair multiply(const Monomial& a, const SigPair& f);

/// Signature space for `count` generators over the part space, with module
/// indices flattened as (generator - 1) * max(1, rank M) + part index.
SpacePtr make_signature_space(const Space& part_space, std::size_t count, ModuleOrder::Kind kind);
std::uint32_t flattened_index(const Space& part_space, std::size_t generator, std::uint32_t part_index);

/// (g_i, lm g_i (x) e_i).
SigSet make_prebasis_shifted(const std::vector<Element>& gens, ModuleOrder::Kind kind);
/// (g_i, 1 (x) e_i). Needs an identity monomial in M, so ring settings only.
SigSet make_prebasis_unshifted(const std::vector<Element>& gens, ModuleOrder::Kind kind);
/// (g, lm g (x) e_1) for g in g_list and (h, lm h (x) e_2) for h in h_list.
SigSet make_prebasis_sum(const std::vector<Element>& g_list, const std::vector<Element>& h_list,
                         ModuleOrder::Kind kind);

struct RegularReducer {
  std::size_t member = 0;   ///< position in the sigset
  Monomial multiplier;      ///< b with b * lm(part) equal to the target
  Monomial signature;       ///< b * sig, strictly below the bound
};

/// Member g and b in A with b*lm(g) == target and b*sig(g) < bound. Prefers
/// the smallest b*sig(g), then the smallest id. Members at positions from
/// `whole_from` on may only be used with b = 1.
std::optional<RegularReducer> find_regular_reducer(const Monomial& target, const Monomial& bound, const SigSet& g,
                                                   std::size_t whole_from = static_cast<std::size_t>(-1));

bool is_regular_reducible(const SigPair& f, const SigSet& g);

struct RegularNormalForm {
  SigPair result;  ///< part made monic, signature and id unchanged
  std::size_t steps = 0;
};

RegularNormalForm regular_normal_form(const SigPair& f, const SigSet& g);

enum class Domination { none, same_signature, smaller_signature };

/// Whether g dominates f: a*sig g == sig f with a*lm g <= lm f, or
/// a*sig g < sig f with a*lm g == lm f != 0.
Domination dominates(const SigPair& g, const SigPair& f, const SigSet& context);

/// A sigset that passed the rewrite-basis certificate.
class CertifiedBasis {
public:
  /// Runs the certificate; nothing when some critical signature fails.
  static std::optional<CertifiedBasis> certify(SigSet set);
  const SigSet& sigset() const { return set_; }

private:
  explicit CertifiedBasis(SigSet set) : set_(std::move(set)) {}
  SigSet set_;
};

enum class SignatureClass { empty, syzygy, regular };

std::string to_string(SignatureClass c);

SignatureClass classify_signature(const Monomial& sigma, const CertifiedBasis& g);

/// Signatures of the members with zero part.
std::vector<Monomial> syzygy_signatures(const SigSet& g);

std::string format_sigpair(const SigPair& p, const SigSet& context);
SigPair parse_sigpair(std::string_view text, const SigSet& context, std::size_t id);

} // namespace sigbasis

#endif
