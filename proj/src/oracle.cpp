#include "wreath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wreath/lr.hpp"
#include "wreath/sn_char.hpp"

namespace wreath::oracle {

Cyclotomic FiniteGroup::value(int irr_index, int x) const {
  const Monomial m = irr[irr_index][x];
  return root_of_unity(root_order, m.exponent) * Rational(m.coeff);
}

int smallest_primitive_root(int p) {
  for (int g = 1; g < p; ++g) {
    int x = 1;
    int period = 0;
    do {
      x = x * g % p;
      ++period;
    } while (x != 1);
    if (period == p - 1) return g;
  }
  throw std::logic_error("no primitive root");
}

int theta_exponent(int position, int p) {
  const int r = middle_index(p);
  if (position == 1) return 0;
  if (position < r) return position - 1;
  if (position > r) return position - 2;
  throw std::invalid_argument("theta_exponent: position r is not in I");
}

namespace {

void fill_classes(FiniteGroup& grp) {
  grp.class_of.assign(grp.order, -1);
  for (int x = 0; x < grp.order; ++x) {
    if (grp.class_of[x] >= 0) continue;
    const int c = grp.class_count();
    grp.class_size.push_back(0);
    for (int y = 0; y < grp.order; ++y) {
      const int conj = grp.mul(grp.mul(y, x), grp.inverse[y]);
      if (grp.class_of[conj] < 0) {
        grp.class_of[conj] = c;
        ++grp.class_size[c];
      }
    }
  }
}

void fill_inverses(FiniteGroup& grp) {
  grp.inverse.assign(grp.order, -1);
  for (int x = 0; x < grp.order; ++x)
    for (int y = 0; y < grp.order; ++y)
      if (grp.mul(x, y) == grp.identity) grp.inverse[x] = y;
}

}  // namespace

BaseModel base_group(int p) {
  require_odd_prime(p);
  if (p > kMaxOraclePrime)
    throw std::invalid_argument("oracle supports p <= " + std::to_string(kMaxOraclePrime));
  BaseModel model;
  model.p = p;
  model.primitive_root = smallest_primitive_root(p);
  const int m = p - 1;
  const int r = middle_index(p);

  std::vector<int> gpow(m);
  gpow[0] = 1;
  for (int b = 1; b < m; ++b) gpow[b] = gpow[b - 1] * model.primitive_root % p;

  FiniteGroup& G = model.G;
  G.name = "Z" + std::to_string(p) + " x| Z" + std::to_string(m);
  G.root_order = m;
  G.order = p * m;
  G.identity = 0;
  G.table.resize(static_cast<std::size_t>(G.order) * G.order);
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a2 = 0; a2 < p; ++a2)
        for (int b2 = 0; b2 < m; ++b2) {
          const int a = (a1 + gpow[b1] * a2) % p;
          const int b = (b1 + b2) % m;
          G.table[static_cast<std::size_t>(a1 * m + b1) * G.order + a2 * m + b2] = a * m + b;
        }
  fill_inverses(G);
  fill_classes(G);

  FiniteGroup& H = model.H;
  H.name = "Z" + std::to_string(m);
  H.root_order = m;
  H.order = m;
  H.identity = 0;
  H.table.resize(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) H.table[static_cast<std::size_t>(x) * m + y] = (x + y) % m;
  fill_inverses(H);
  fill_classes(H);

  for (int b = 0; b < m; ++b) model.h_to_g.push_back(b);
  for (int x = 0; x < G.order; ++x) model.g_to_h.push_back(x % m);

  for (int position = 1; position <= p; ++position) {
    std::vector<Monomial> psi(G.order);
    for (int x = 0; x < G.order; ++x) {
      const int a = x / m;
      const int b = x % m;
      if (position == r) {
        psi[x] = {b != 0 ? 0 : (a == 0 ? m : -1), 0};
      } else {
        psi[x] = {1, theta_exponent(position, p) * b % m};
      }
    }
    G.irr.push_back(std::move(psi));
    G.irr_position.push_back(position);
    if (position == r) continue;
    std::vector<Monomial> theta(m);
    for (int b = 0; b < m; ++b) theta[b] = {1, theta_exponent(position, p) * b % m};
    H.irr.push_back(std::move(theta));
    H.irr_position.push_back(position);
  }
  return model;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t lehmer_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

}  // namespace

WreathGroup::WreathGroup(std::shared_ptr<const FiniteGroup> base, int w, std::uint64_t guard)
    : base_(std::move(base)), w_(w) {
  if (w_ < 0) throw std::invalid_argument("wreath product needs w >= 0");
  unsigned __int128 total = factorial(w_);
  base_power_ = 1;
  for (int i = 0; i < w_; ++i) {
    base_power_ *= static_cast<std::uint64_t>(base_->order);
    total *= static_cast<unsigned>(base_->order);
    if (total > guard)
      throw GuardExceeded(base_->name + " wr S_" + std::to_string(w_) + " exceeds the guard of " +
                          std::to_string(guard) + " elements");
  }
  if (total > guard) throw GuardExceeded("S_" + std::to_string(w_) + " exceeds the guard");
  order_ = static_cast<std::uint64_t>(total);

  std::vector<int> perm(w_);
  std::iota(perm.begin(), perm.end(), 0);
  do perms_.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  build_classes();
}

WreathElement WreathGroup::element(std::uint64_t index) const {
  WreathElement e;
  e.sigma = perms_[index / base_power_];
  std::uint64_t rest = index % base_power_;
  e.h.resize(w_);
  for (int i = 0; i < w_; ++i) {
    e.h[i] = static_cast<int>(rest % base_->order);
    rest /= base_->order;
  }
  return e;
}

std::uint64_t WreathGroup::index(const WreathElement& e) const {
  std::uint64_t idx = 0;
  for (int i = w_; i-- > 0;) idx = idx * base_->order + static_cast<std::uint64_t>(e.h[i]);
  return lehmer_rank(e.sigma) * base_power_ + idx;
}

WreathElement WreathGroup::multiply(const WreathElement& x, const WreathElement& y) const {
  WreathElement out;
  out.h.resize(w_);
  out.sigma.resize(w_);
  std::vector<int> xinv(w_);
  for (int i = 0; i < w_; ++i) xinv[x.sigma[i]] = i;
  for (int i = 0; i < w_; ++i) {
    out.h[i] = base_->mul(x.h[i], y.h[xinv[i]]);
    out.sigma[i] = x.sigma[y.sigma[i]];
  }
  return out;
}

WreathElement WreathGroup::inverse(const WreathElement& x) const {
  // (h; s)^-1 = (i -> h_{s(i)}^-1; s^-1)
  WreathElement out;
  out.h.resize(w_);
  out.sigma.resize(w_);
  for (int i = 0; i < w_; ++i) {
    out.sigma[x.sigma[i]] = i;
    out.h[i] = base_->inverse[x.h[x.sigma[i]]];
  }
  return out;
}

WreathElement WreathGroup::conjugate(const WreathElement& x, const WreathElement& g) const {
  return multiply(multiply(x, g), inverse(x));
}

std::vector<std::vector<int>> WreathGroup::cycles(const std::vector<int>& sigma) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    auto& cyc = out.emplace_back();
    for (int j = static_cast<int>(start); !seen[j]; j = sigma[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
  }
  return out;
}

std::vector<int> WreathGroup::cycle_products(const WreathElement& e) const {
  std::vector<int> inv(w_);
  for (int i = 0; i < w_; ++i) inv[e.sigma[i]] = i;
  std::vector<int> out;
  for (const auto& cyc : cycles(e.sigma)) {
    int j = cyc.front();
    int prod = e.h[j];
    for (std::size_t step = 1; step < cyc.size(); ++step) {
      j = inv[j];
      prod = base_->mul(prod, e.h[j]);
    }
    out.push_back(prod);
  }
  return out;
}

MultiPartition WreathGroup::cycle_structure(const WreathElement& e) const {
  std::vector<std::vector<int>> lengths(base_->class_count());
  const auto prods = cycle_products(e);
  const auto cycs = cycles(e.sigma);
  for (std::size_t nu = 0; nu < cycs.size(); ++nu)
    lengths[base_->class_of[prods[nu]]].push_back(static_cast<int>(cycs[nu].size()));
  std::vector<Partition> comps;
  for (auto& l : lengths) {
    std::sort(l.begin(), l.end(), std::greater<>());
    comps.emplace_back(std::move(l));
  }
  return MultiPartition(std::move(comps));
}

void WreathGroup::build_classes() {
  // Generators: one base element in coordinate 0, a transposition, a w-cycle.
  std::vector<WreathElement> gens;
  WreathElement id{std::vector<int>(w_, base_->identity), perms_.front()};
  if (w_ >= 1) {
    for (int x = 0; x < base_->order; ++x) {
      if (x == base_->identity) continue;
      WreathElement g = id;
      g.h[0] = x;
      gens.push_back(std::move(g));
    }
  }
  if (w_ >= 2) {
    WreathElement t = id;
    std::swap(t.sigma[0], t.sigma[1]);
    gens.push_back(t);
    WreathElement c = id;
    for (int i = 0; i < w_; ++i) c.sigma[i] = (i + 1) % w_;
    gens.push_back(c);
  }
  std::vector<WreathElement> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(inverse(g));

  class_of_.assign(order_, -1);
  for (std::uint64_t start = 0; start < order_; ++start) {
    if (class_of_[start] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    ClassData data{cycle_structure(element(start)), element(start), 0};
    std::deque<std::uint64_t> queue{start};
    class_of_[start] = c;
    while (!queue.empty()) {
      const WreathElement x = element(queue.front());
      queue.pop_front();
      ++data.size;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::uint64_t y = index(multiply(multiply(gens[k], x), gen_inv[k]));
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          queue.push_back(y);
        }
      }
    }
    class_by_label_.emplace(data.label, c);
    classes_.push_back(std::move(data));
  }
}

int WreathGroup::class_of_label(const MultiPartition& label) const {
  const auto it = class_by_label_.find(label);
  if (it == class_by_label_.end()) throw std::out_of_range("no class with label " + label.to_string());
  return it->second;
}

bool WreathGroup::orbits_match_cycle_structure() const {
  if (class_by_label_.size() != classes_.size()) return false;  // two orbits share a label
  for (std::uint64_t idx = 0; idx < order_; ++idx)
    if (!(cycle_structure(element(idx)) == classes_[class_of_[idx]].label)) return false;
  return true;
}

std::uint64_t WreathGroup::centralizer_order_formula(const MultiPartition& label) const {
  std::uint64_t z = 1;
  for (int c = 0; c < label.length(); ++c) {
    const std::uint64_t cent = base_->order / base_->class_size[c];
    std::map<int, int> mult;
    for (int part : label[c].parts()) ++mult[part];
    for (auto [m, a] : mult) {
      z *= factorial(a);
      for (int i = 0; i < a; ++i) z *= static_cast<std::uint64_t>(m) * cent;
    }
  }
  return z;
}

// ---------------------------------------------------------------------------

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (group != other.group) throw std::invalid_argument("class functions on different groups");
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += other.values[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values) v *= scalar;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group == b.group && a.values == b.values;
}

namespace {

struct BlockLayout {
  std::vector<int> block_of;  // coordinate -> block
  std::vector<YoungBlock> blocks;
  std::uint64_t subgroup_order = 1;
};

BlockLayout layout(const WreathGroup& group, const std::vector<YoungBlock>& blocks) {
  BlockLayout out;
  int total = 0;
  for (const auto& b : blocks) {
    if (b.shape.empty()) continue;
    for (int i = 0; i < b.shape.size(); ++i)
      out.block_of.push_back(static_cast<int>(out.blocks.size()));
    out.subgroup_order *= factorial(b.shape.size());
    total += b.shape.size();
    out.blocks.push_back(b);
  }
  if (total != group.w())
    throw std::invalid_argument("Young blocks cover " + std::to_string(total) + " of " +
                                std::to_string(group.w()) + " coordinates");
  for (int i = 0; i < group.w(); ++i) out.subgroup_order *= group.base().order;
  return out;
}

bool in_young_subgroup(const BlockLayout& lay, const WreathElement& e) {
  for (std::size_t i = 0; i < e.sigma.size(); ++i)
    if (lay.block_of[e.sigma[i]] != lay.block_of[i]) return false;
  return true;
}

Monomial evaluate(const WreathGroup& group, const BlockLayout& lay, const WreathElement& e) {
  const FiniteGroup& base = group.base();
  const int m = base.root_order;
  const auto cycs = group.cycles(e.sigma);
  const auto prods = group.cycle_products(e);
  std::vector<std::vector<int>> lengths(lay.blocks.size());
  Monomial out{1, 0};
  for (std::size_t nu = 0; nu < cycs.size(); ++nu) {
    const int b = lay.block_of[cycs[nu].front()];
    const Monomial v = base.irr[lay.blocks[b].irr_index][prods[nu]];
    out.coeff *= v.coeff;
    out.exponent = (out.exponent + v.exponent) % m;
    if (out.coeff == 0) return out;
    lengths[b].push_back(static_cast<int>(cycs[nu].size()));
  }
  for (std::size_t b = 0; b < lay.blocks.size(); ++b) {
    std::sort(lengths[b].begin(), lengths[b].end(), std::greater<>());
    out.coeff *= mn_value(lay.blocks[b].shape, Partition(std::move(lengths[b])));
    if (out.coeff == 0) return out;
  }
  return out;
}

}  // namespace

Monomial young_factor_value(const WreathGroup& group, const std::vector<YoungBlock>& blocks,
                            const WreathElement& e) {
  const BlockLayout lay = layout(group, blocks);
  if (!in_young_subgroup(lay, e)) throw std::out_of_range("element outside the Young subgroup");
  return evaluate(group, lay, e);
}

ClassFunction induced_young_character(const WreathGroup& group,
                                      const std::vector<YoungBlock>& blocks) {
  const BlockLayout lay = layout(group, blocks);
  const int m = group.base().root_order;
  ClassFunction out{&group, {}};
  for (const auto& cls : group.classes()) {
    std::vector<std::int64_t> acc(m, 0);
    for (std::uint64_t xi = 0; xi < group.order(); ++xi) {
      const WreathElement y = group.conjugate(group.element(xi), cls.representative);
      if (!in_young_subgroup(lay, y)) continue;
      const Monomial v = evaluate(group, lay, y);
      acc[v.exponent] += v.coeff;
    }
    std::vector<Rational> powers(acc.begin(), acc.end());
    out.values.push_back(Cyclotomic::from_powers(m, powers) /
                         Rational(static_cast<unsigned long>(lay.subgroup_order)));
  }
  return out;
}

ClassFunction parametrized_character(const WreathGroup& group, const MultiPartition& label) {
  if (label.length() != static_cast<int>(group.base().irr.size()))
    throw std::invalid_argument("label needs one component per irreducible character of " +
                                group.base().name);
  if (label.size() != group.w()) throw std::invalid_argument("label weight differs from w");
  std::vector<YoungBlock> blocks;
  for (int c = 0; c < label.length(); ++c) blocks.push_back({c, label[c]});
  return induced_young_character(group, blocks);
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group || a.group == nullptr)
    throw std::invalid_argument("inner product of class functions on different groups");
  const auto& classes = a.group->classes();
  Cyclotomic sum(a.group->base().root_order);
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += a.values[c] * b.values[c].conjugate() * Rational(static_cast<unsigned long>(classes[c].size));
  sum /= Rational(static_cast<unsigned long>(a.group->order()));
  const auto value = sum.as_rational();
  if (!value) throw std::logic_error("inner product is irrational: " + sum.to_string());
  return *value;
}

namespace {

WreathElement push_forward(const WreathElement& e, const std::vector<int>& base_embedding) {
  WreathElement out = e;
  for (auto& x : out.h) x = base_embedding[x];
  return out;
}

}  // namespace

ClassFunction restrict_to(const ClassFunction& f, const WreathGroup& sub,
                          const std::vector<int>& base_embedding) {
  if (sub.w() != f.group->w()) throw std::invalid_argument("restrict_to: w mismatch");
  ClassFunction out{&sub, {}};
  for (const auto& cls : sub.classes())
    out.values.push_back(f.at(push_forward(cls.representative, base_embedding)));
  return out;
}

ClassFunction induce_from(const ClassFunction& f, const WreathGroup& big,
                          const std::vector<int>& base_embedding) {
  const WreathGroup& sub = *f.group;
  if (sub.w() != big.w()) throw std::invalid_argument("induce_from: w mismatch");
  std::vector<int> pull(big.base().order, -1);
  for (std::size_t x = 0; x < base_embedding.size(); ++x) pull[base_embedding[x]] = static_cast<int>(x);

  ClassFunction out{&big, {}};
  for (const auto& cls : big.classes()) {
    Cyclotomic acc(big.base().root_order);
    for (std::uint64_t xi = 0; xi < big.order(); ++xi) {
      WreathElement y = big.conjugate(big.element(xi), cls.representative);
      bool inside = true;
      for (auto& x : y.h) {
        x = pull[x];
        inside = inside && x >= 0;
      }
      if (inside) acc += f.at(y);
    }
    out.values.push_back(acc / Rational(static_cast<unsigned long>(sub.order())));
  }
  return out;
}

// ---------------------------------------------------------------------------

Oracle::Oracle(int p, int w, std::uint64_t guard) : model_(base_group(p)), w_(w) {
  gw_ = std::make_unique<WreathGroup>(std::make_shared<const FiniteGroup>(model_.G), w, guard);
  hw_ = std::make_unique<WreathGroup>(std::make_shared<const FiniteGroup>(model_.H), w, guard);
}

int Oracle::irr_index_H(int position) const {
  const int r = middle_index(p());
  if (position == r || position < 1 || position > p())
    throw std::invalid_argument("position " + std::to_string(position) + " is not in I");
  return position < r ? position - 1 : position - 2;
}

const ClassFunction& Oracle::chi(const GLabel& gamma) {
  if (gamma.prime() != p()) throw std::invalid_argument("label for a different prime");
  auto it = chi_cache_.find(gamma);
  if (it == chi_cache_.end())
    it = chi_cache_.emplace(gamma, parametrized_character(*gw_, gamma.value())).first;
  return it->second;
}

const ClassFunction& Oracle::xi(const HLabel& alpha) {
  if (alpha.prime() != p()) throw std::invalid_argument("label for a different prime");
  auto it = xi_cache_.find(alpha);
  if (it == xi_cache_.end())
    it = xi_cache_.emplace(alpha, parametrized_character(*hw_, alpha.value())).first;
  return it->second;
}

std::map<HLabel, std::uint64_t> Oracle::restriction(const GLabel& gamma) {
  const ClassFunction res = restrict_to(chi(gamma), *hw_, model_.h_to_g);
  std::map<HLabel, std::uint64_t> out;
  for (const auto& alpha : h_labels(p(), w_)) {
    const Rational mult = inner_product(res, xi(alpha));
    if (mult.get_den() != 1 || mult < 0)
      throw std::logic_error("multiplicity " + mult.get_str() + " is not a nonnegative integer");
    if (mult != 0) out.emplace(alpha, mult.get_num().get_ui());
  }
  return out;
}

ClassFunction Oracle::psi_tilde(int position, const Partition& lambda) {
  return induced_young_character(*gw_, {{irr_index_G(position), lambda}});
}

ClassFunction Oracle::theta_tilde(int position, const Partition& lambda) {
  return induced_young_character(*hw_, {{irr_index_H(position), lambda}});
}

ClassFunction Oracle::mackey_target(int position, const Partition& beta, const Partition& gamma) {
  irr_index_H(position);
  return induced_young_character(
      *gw_, {{irr_index_G(middle_index(p())), beta}, {irr_index_G(position), gamma}});
}

ClassFunction Oracle::induced_theta(int position, const Partition& alpha) {
  return induce_from(theta_tilde(position, alpha), *gw_, model_.h_to_g);
}

Rational Oracle::mackey_multiplicity(int position, const Partition& alpha, const Partition& beta,
                                     const Partition& gamma) {
  return inner_product(induced_theta(position, alpha), mackey_target(position, beta, gamma));
}

std::vector<int> cycle_products(const WreathGroup& group, const WreathElement& e) {
  return group.cycle_products(e);
}

const std::vector<ClassData>& conjugacy_classes(const WreathGroup& group) {
  return group.classes();
}

std::map<HLabel, std::uint64_t> oracle_restriction(const GLabel& gamma, std::uint64_t guard) {
  Oracle oracle(gamma.prime(), gamma.weight(), guard);
  return oracle.restriction(gamma);
}

std::int64_t verify_mackey_multiplicities(int position, const Partition& alpha,
                                          const Partition& beta, const Partition& gamma, int p,
                                          std::uint64_t guard) {
  if (beta.size() + gamma.size() != alpha.size())
    throw std::invalid_argument("need |beta| + |gamma| = |alpha|");
  Oracle oracle(p, alpha.size(), guard);
  const Rational value = oracle.mackey_multiplicity(position, alpha, beta, gamma);
  if (value.get_den() != 1) throw std::logic_error("non-integral multiplicity " + value.get_str());
  return value.get_num().get_si();
}

}  // namespace wreath::oracle
