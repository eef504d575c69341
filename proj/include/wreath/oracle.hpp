#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreath/cyclotomic.hpp"
#include "wreath/decomp.hpp"
#include "wreath/partition.hpp"

// Brute-force character theory for Z_{p-1}, Z_p x| Z_{p-1} and their wreath
// products with S_w. Everything here is built from explicit element sets and
// is meant to check the label-level engine in decomp.hpp.
namespace wreath::oracle {

inline constexpr std::uint64_t kDefaultElementGuard = 1'000'000;
inline constexpr int kMaxOraclePrime = 17;

/// c * zeta_m^e with m = p - 1: the shape of every character value of the
/// base groups and of the inducing characters built from them.
struct Monomial {
  std::int64_t coeff = 0;
  int exponent = 0;
};

/// A small finite group given by its multiplication table, with a chosen
/// ordering of its irreducible characters.
struct FiniteGroup {
  std::string name;
  int root_order = 1;  // m: character values live in Q(zeta_m)
  int order = 0;
  int identity = 0;
  std::vector<int> table;  // table[x * order + y] = x * y
  std::vector<int> inverse;
  std::vector<int> class_of;  // element -> conjugacy class index
  std::vector<int> class_size;
  /// irr[c][x]: value of the c-th irreducible character at element x.
  std::vector<std::vector<Monomial>> irr;
  /// Label position of irr[c] (1..p for G, I for H).
  std::vector<int> irr_position;

  int mul(int x, int y) const { return table[static_cast<std::size_t>(x) * order + y]; }
  int class_count() const { return static_cast<int>(class_size.size()); }
  Cyclotomic value(int irr_index, int x) const;
};

/// G = Z_p x| Z_{p-1} with (a1,b1)(a2,b2) = (a1 + g^{b1} a2, b1 + b2), g the
/// smallest primitive root mod p; element (a,b) has index a*(p-1) + b.
/// H = Z_{p-1} embedded as a = 0.
struct BaseModel {
  int p = 0;
  int primitive_root = 0;
  FiniteGroup G;
  FiniteGroup H;
  std::vector<int> h_to_g;  // embedding
  std::vector<int> g_to_h;  // projection varpi
};

int smallest_primitive_root(int p);
/// theta_i = zeta^{e(i) b}: e(1) = 0, e(i) = i-1 for 1 < i < r, e(i) = i-2 for i > r.
int theta_exponent(int position, int p);

/// Throws std::invalid_argument unless p is an odd prime <= kMaxOraclePrime.
BaseModel base_group(int p);

/// Thrown when an element set would exceed the configured guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (h; sigma) with sigma stored as images sigma[i] (0-based).
struct WreathElement {
  std::vector<int> h;
  std::vector<int> sigma;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

struct ClassData {
  /// Cycle structure: one partition per base class.
  MultiPartition label;
  WreathElement representative;
  std::uint64_t size = 0;
};

/// N wr S_w over an explicit base group N. Product:
/// (h; s)(h'; t) = (i -> h_i * h'_{s^-1(i)}; s o t).
class WreathGroup {
 public:
  WreathGroup(std::shared_ptr<const FiniteGroup> base, int w,
              std::uint64_t guard = kDefaultElementGuard);

  const FiniteGroup& base() const { return *base_; }
  int w() const { return w_; }
  std::uint64_t order() const { return order_; }

  WreathElement element(std::uint64_t index) const;
  std::uint64_t index(const WreathElement& e) const;
  WreathElement multiply(const WreathElement& x, const WreathElement& y) const;
  WreathElement inverse(const WreathElement& x) const;
  WreathElement conjugate(const WreathElement& x, const WreathElement& g) const;  // x g x^-1

  /// Cycles of sigma, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles(const std::vector<int>& sigma) const;
  /// g_nu = h_j h_{s^-1 j} h_{s^-2 j} ... for each cycle.
  std::vector<int> cycle_products(const WreathElement& e) const;
  MultiPartition cycle_structure(const WreathElement& e) const;

  /// Classes from conjugation orbits, ordered by least element index.
  const std::vector<ClassData>& classes() const { return classes_; }
  int class_of(std::uint64_t index) const { return class_of_[index]; }
  int class_of(const WreathElement& e) const { return class_of_[index(e)]; }
  int class_of_label(const MultiPartition& label) const;

  /// Orbit classes and cycle-structure classes are the same partition.
  bool orbits_match_cycle_structure() const;
  /// |C(g)| = prod over (base class c, cycle length m) of m^a a! |C_N(g_c)|^a.
  std::uint64_t centralizer_order_formula(const MultiPartition& label) const;

 private:
  void build_classes();

  std::shared_ptr<const FiniteGroup> base_;
  int w_;
  std::uint64_t base_power_;  // |N|^w
  std::uint64_t order_;
  std::vector<std::vector<int>> perms_;
  std::vector<int> class_of_;
  std::vector<ClassData> classes_;
  std::map<MultiPartition, int> class_by_label_;
};

/// Values on the classes of one specific group.
struct ClassFunction {
  const WreathGroup* group = nullptr;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at(const WreathElement& e) const { return values[group->class_of(e)]; }
  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

/// One factor of a Young-subgroup character: the block N wr S_{|shape|} carries
/// (tilde omega_c) (x) chi_shape where omega_c = base().irr[irr_index].
struct YoungBlock {
  int irr_index = 0;
  Partition shape;
};

/// Product over blocks of (tilde omega) (x) chi on the Young subgroup whose
/// blocks occupy consecutive coordinates. Empty blocks are dropped. Throws
/// std::out_of_range on an element outside the Young subgroup.
Monomial young_factor_value(const WreathGroup& group, const std::vector<YoungBlock>& blocks,
                            const WreathElement& e);

/// Ind from the Young subgroup by whole-group averaging:
/// Ind(f)(g) = (1/|K|) sum_{x in group} f°(x g x^-1).
ClassFunction induced_young_character(const WreathGroup& group,
                                      const std::vector<YoungBlock>& blocks);

/// aleph^label: blocks taken in component order. label must have one
/// component per irreducible character of the base group.
ClassFunction parametrized_character(const WreathGroup& group, const MultiPartition& label);

/// Exact (1/|group|) sum_classes size * a * conj(b). Throws on group mismatch
/// or if the value is not rational.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Res to the wreath product over a subgroup of the base group;
/// base_embedding maps sub-base elements into big-base elements.
ClassFunction restrict_to(const ClassFunction& f, const WreathGroup& sub,
                          const std::vector<int>& base_embedding);
/// Ind from such a subgroup by whole-group averaging.
ClassFunction induce_from(const ClassFunction& f, const WreathGroup& big,
                          const std::vector<int>& base_embedding);

/// Groups and characters for one (p, w), built lazily and cached.
class Oracle {
 public:
  Oracle(int p, int w, std::uint64_t guard = kDefaultElementGuard);

  int p() const { return model_.p; }
  int w() const { return w_; }
  const BaseModel& model() const { return model_; }
  const WreathGroup& G_w() const { return *gw_; }
  const WreathGroup& H_w() const { return *hw_; }

  const ClassFunction& chi(const GLabel& gamma);
  const ClassFunction& xi(const HLabel& alpha);

  /// <Res chi^gamma, xi^alpha>_{H_w} for every alpha with nonzero value.
  std::map<HLabel, std::uint64_t> restriction(const GLabel& gamma);

  /// psi~_i^k (x) phi_lambda on G_w (k = w), as a class function.
  ClassFunction psi_tilde(int position, const Partition& lambda);
  /// theta~_i^k (x) zeta_lambda on H_w.
  ClassFunction theta_tilde(int position, const Partition& lambda);
  /// Ind_{G_j x G_{w-j}}^{G_w}((psi~_r^j (x) phi_beta) x (psi~_i^{w-j} (x) phi_gamma)).
  ClassFunction mackey_target(int position, const Partition& beta, const Partition& gamma);
  /// Ind_{H_w}^{G_w}(theta~_i^w (x) zeta_alpha).
  ClassFunction induced_theta(int position, const Partition& alpha);

  /// Left-hand side of the multiplicity formula <Ind theta~, Ind(...)>_{G_w};
  /// requires |alpha| = w = |beta| + |gamma|.
  Rational mackey_multiplicity(int position, const Partition& alpha, const Partition& beta,
                               const Partition& gamma);

 private:
  int irr_index_G(int position) const { return position - 1; }
  int irr_index_H(int position) const;

  BaseModel model_;
  int w_;
  std::unique_ptr<WreathGroup> gw_;
  std::unique_ptr<WreathGroup> hw_;
  std::map<GLabel, ClassFunction> chi_cache_;
  std::map<HLabel, ClassFunction> xi_cache_;
};

/// Convenience wrappers matching the standalone operations.
std::vector<int> cycle_products(const WreathGroup& group, const WreathElement& e);
const std::vector<ClassData>& conjugacy_classes(const WreathGroup& group);
std::map<HLabel, std::uint64_t> oracle_restriction(const GLabel& gamma,
                                                   std::uint64_t guard = kDefaultElementGuard);
/// Computes the Mackey-side multiplicity at k = |alpha| and returns it; callers
/// compare against lr_coefficient(alpha, beta, gamma).
std::int64_t verify_mackey_multiplicities(int position, const Partition& alpha,
                                          const Partition& beta, const Partition& gamma, int p,
                                          std::uint64_t guard = kDefaultElementGuard);

}  // namespace wreath::oracle
