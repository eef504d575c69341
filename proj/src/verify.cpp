#include "wreath/verify.hpp"

#include <map>
#include <tuple>

#include "wreath/lr.hpp"
#include "wreath/sn_char.hpp"

namespace wreath::oracle {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Skipped:
      return "skipped";
  }
  return "?";
}

bool all_passed(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records)
    if (r.outcome == Outcome::Fail) return false;
  return true;
}

namespace {

template <class T>
std::string str(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return v.get_str();
  else if constexpr (std::is_convertible_v<T, std::string>)
    return std::string(v);
  else if constexpr (requires { v.to_string(); })
    return v.to_string();
  else
    return std::to_string(v);
}

std::string str(const std::map<HLabel, std::uint64_t>& m) {
  std::string out = "{";
  for (const auto& [label, value] : m) {
    if (out.size() > 1) out += ", ";
    out += label.to_string() + ": " + std::to_string(value);
  }
  return out + "}";
}

class Recorder {
 public:
  explicit Recorder(int p, int w) : prefix_("p=" + std::to_string(p) + " w=" + std::to_string(w)) {}

  template <class E, class C>
  void check(std::string claim, std::string params, const E& expected, const C& computed,
             bool ok) {
    records_.push_back({std::move(claim), params.empty() ? prefix_ : prefix_ + " " + params,
                        str(expected), str(computed), ok ? Outcome::Pass : Outcome::Fail});
  }
  template <class T>
  void equal(std::string claim, std::string params, const T& expected, const T& computed) {
    check(std::move(claim), std::move(params), expected, computed, expected == computed);
  }
  void skip(std::string claim, std::string reason) {
    records_.push_back({std::move(claim), prefix_, "", std::move(reason), Outcome::Skipped});
  }

  std::vector<VerificationRecord> take() { return std::move(records_); }

 private:
  std::string prefix_;
  std::vector<VerificationRecord> records_;
};

Cyclotomic base_inner(const FiniteGroup& grp, int a, int b) {
  Cyclotomic sum(grp.root_order);
  for (int x = 0; x < grp.order; ++x) sum += grp.value(a, x) * grp.value(b, x).conjugate();
  return sum;
}

void check_base(Recorder& rec, const BaseModel& model) {
  const int p = model.p;
  const int m = p - 1;
  const int r = middle_index(p);
  for (const FiniteGroup* grp : {&model.G, &model.H}) {
    bool ok = true;
    for (std::size_t a = 0; a < grp->irr.size(); ++a)
      for (std::size_t b = 0; b < grp->irr.size(); ++b)
        ok = ok && base_inner(*grp, a, b) == Cyclotomic(grp->root_order, a == b ? grp->order : 0);
    rec.check("base.irr_orthogonality", grp->name, "orthonormal", ok ? "orthonormal" : "not orthonormal",
              ok);
    rec.equal("base.class_count", grp->name, static_cast<int>(grp->irr.size()), grp->class_count());
  }

  bool eq2 = true, eq3 = true, eq4 = true;
  for (int b = 0; b < m; ++b) {
    const int g = model.h_to_g[b];
    for (std::size_t c = 0; c < model.G.irr.size(); ++c) {
      const int pos = model.G.irr_position[c];
      if (pos == r) {
        eq3 = eq3 && model.G.value(c, g) == Cyclotomic(m, b == 0 ? m : 0);
      } else {
        const int hc = pos < r ? pos - 1 : pos - 2;
        eq2 = eq2 && model.G.value(c, g) == model.H.value(hc, b);
      }
    }
    Cyclotomic sum(m);
    for (std::size_t c = 0; c < model.H.irr.size(); ++c) sum += model.H.value(c, b);
    eq4 = eq4 && sum == Cyclotomic(m, b == 0 ? m : 0);
  }
  rec.check("base.res_psi_i_is_theta_i", "", "true", eq2 ? "true" : "false", eq2);
  rec.check("base.res_psi_r_is_(p-1)delta_1", "", "true", eq3 ? "true" : "false", eq3);
  rec.check("base.sum_theta_i_is_(p-1)delta_1", "", "true", eq4 ? "true" : "false", eq4);
}

void check_classes(Recorder& rec, const WreathGroup& grp) {
  const std::string name = grp.base().name + " wr S_" + std::to_string(grp.w());
  rec.check("classes.orbits_equal_cycle_structure", name, "true",
            grp.orbits_match_cycle_structure() ? "true" : "false",
            grp.orbits_match_cycle_structure());
  rec.equal("classes.count", name,
            generate_multipartitions(grp.w(), grp.base().class_count()).size(),
            grp.classes().size());
  std::uint64_t total = 0;
  bool formula = true;
  for (const auto& cls : grp.classes()) {
    total += cls.size;
    formula = formula && grp.order() / grp.centralizer_order_formula(cls.label) == cls.size &&
              grp.order() % grp.centralizer_order_formula(cls.label) == 0;
  }
  rec.equal("classes.size_sum", name, grp.order(), total);
  rec.check("classes.centralizer_formula", name, "true", formula ? "true" : "false", formula);
}

template <class Label>
void check_characters(Recorder& rec, Oracle& oracle, const std::vector<Label>& labels,
                      const WreathGroup& grp) {
  const std::string name = grp.base().name + " wr S_" + std::to_string(grp.w());
  bool norms = true, orth = true, degrees = true;
  Rational square_sum = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    const ClassFunction* fa;
    std::uint64_t engine_degree;
    if constexpr (std::is_same_v<Label, GLabel>) {
      fa = &oracle.chi(labels[a]);
      engine_degree = degree_G(labels[a]);
    } else {
      fa = &oracle.xi(labels[a]);
      engine_degree = degree_H(labels[a]);
    }
    const int id_class = grp.class_of(std::uint64_t{0});
    const auto deg = fa->values[id_class].as_rational();
    degrees = degrees && deg && *deg == Rational(static_cast<unsigned long>(engine_degree));
    if (deg) square_sum += *deg * *deg;
    norms = norms && inner_product(*fa, *fa) == 1;
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      const ClassFunction& fb = [&]() -> const ClassFunction& {
        if constexpr (std::is_same_v<Label, GLabel>)
          return oracle.chi(labels[b]);
        else
          return oracle.xi(labels[b]);
      }();
      orth = orth && inner_product(*fa, fb) == 0;
    }
  }
  rec.check("characters.norm_one", name, "true", norms ? "true" : "false", norms);
  rec.check("characters.pairwise_orthogonal", name, "true", orth ? "true" : "false", orth);
  rec.equal("characters.degree_square_sum", name,
            Rational(static_cast<unsigned long>(grp.order())), square_sum);
  rec.check("characters.degree_matches_engine", name, "true", degrees ? "true" : "false", degrees);
}

void check_restriction_identities(Recorder& rec, Oracle& oracle) {
  const int p = oracle.p();
  const int k = oracle.w();
  const int r = middle_index(p);
  const auto& model = oracle.model();
  const auto positions = index_set(p);
  const Partition full_row(std::vector<int>{k});

  // Restriction of psi~_i^k and phi_lambda to H_k.
  for (int i : positions) {
    const auto res = restrict_to(oracle.psi_tilde(i, full_row), oracle.H_w(), model.h_to_g);
    const bool ok = res == oracle.theta_tilde(i, full_row);
    rec.check("restriction.psi_tilde_i", "i=" + std::to_string(i), "theta~_i",
              ok ? "theta~_i" : "differs", ok);
  }
  for (const auto& lambda : generate_partitions(k)) {
    const auto res = restrict_to(oracle.psi_tilde(1, lambda), oracle.H_w(), model.h_to_g);
    const bool ok = res == oracle.theta_tilde(1, lambda);
    rec.check("restriction.phi_lambda", "lambda=" + lambda.to_string(), "zeta_lambda",
              ok ? "zeta_lambda" : "differs", ok);
  }

  // psi~_r^k on H_k: (p-1)^{c(pi)} when every cycle product is 1, else 0.
  {
    const auto res = restrict_to(oracle.psi_tilde(r, full_row), oracle.H_w(), model.h_to_g);
    bool ok = true;
    for (std::size_t c = 0; c < oracle.H_w().classes().size(); ++c) {
      const auto& rep = oracle.H_w().classes()[c].representative;
      const auto prods = oracle.H_w().cycle_products(rep);
      bool trivial = true;
      for (int g : prods) trivial = trivial && g == model.H.identity;
      mpz_class expected = 0;
      if (trivial) mpz_ui_pow_ui(expected.get_mpz_t(), p - 1, prods.size());
      ok = ok && res.values[c] == Cyclotomic(p - 1, Rational(expected));
    }
    rec.check("restriction.psi_tilde_r_closed_form", "", "closed form", ok ? "closed form" : "mismatch", ok);
  }

  // Multiplicities A, B, C.
  const auto res_r = restrict_to(oracle.psi_tilde(r, full_row), oracle.H_w(), model.h_to_g);
  for (int i : positions)
    rec.equal("multiplicity.A", "i=" + std::to_string(i), Rational(1),
              inner_product(res_r, oracle.theta_tilde(i, full_row)));

  const auto parts_k = generate_partitions(k);
  for (int i : positions)
    for (const auto& alpha : parts_k)
      for (const auto& beta : parts_k) {
        const auto res = restrict_to(oracle.psi_tilde(r, beta), oracle.H_w(), model.h_to_g);
        rec.equal("multiplicity.B",
                  "i=" + std::to_string(i) + " alpha=" + alpha.to_string() +
                      " beta=" + beta.to_string(),
                  Rational(alpha == beta ? 1 : 0), inner_product(res, oracle.theta_tilde(i, alpha)));
      }

  std::map<std::tuple<int, Partition, Partition>, ClassFunction> targets;
  auto target = [&](int i, const Partition& beta, const Partition& gamma) -> const ClassFunction& {
    auto key = std::make_tuple(i, beta, gamma);
    auto it = targets.find(key);
    if (it == targets.end()) it = targets.emplace(key, oracle.mackey_target(i, beta, gamma)).first;
    return it->second;
  };

  for (int i : positions) {
    for (const auto& alpha : parts_k) {
      const ClassFunction lhs = oracle.induced_theta(i, alpha);
      ClassFunction rhs{&oracle.G_w(), std::vector<Cyclotomic>(oracle.G_w().classes().size(),
                                                               Cyclotomic(p - 1))};
      for (int j = 0; j <= k; ++j)
        for (const auto& beta : generate_partitions(j))
          for (const auto& gamma : generate_partitions(k - j)) {
            const auto& t = target(i, beta, gamma);
            const auto c = lr_coefficient(alpha, beta, gamma);
            rec.equal("multiplicity.C_is_lr",
                      "i=" + std::to_string(i) + " j=" + std::to_string(j) + " alpha=" +
                          alpha.to_string() + " beta=" + beta.to_string() +
                          " gamma=" + gamma.to_string(),
                      Rational(static_cast<unsigned long>(c)), inner_product(lhs, t));
            if (c) {
              ClassFunction term = t;
              term *= Rational(static_cast<unsigned long>(c));
              rhs += term;
            }
          }
      rec.check("induction.theta_reconstruction",
                "i=" + std::to_string(i) + " alpha=" + alpha.to_string(), "equal class functions",
                lhs == rhs ? "equal class functions" : "differ", lhs == rhs);
    }
  }
}

void check_main(Recorder& rec, Oracle& oracle) {
  for (const auto& gamma : g_labels(oracle.p(), oracle.w())) {
    const auto computed = oracle.restriction(gamma);
    rec.equal("restriction.engine_agreement", "gamma=" + gamma.to_string(), restrict_G_to_H(gamma),
              computed);
    if (gamma.middle().empty()) {
      std::map<HLabel, std::uint64_t> indicator{{HLabel(unhat(gamma.value(), oracle.p()), oracle.p()), 1}};
      rec.equal("restriction.hat_labels", "gamma=" + gamma.to_string(), indicator, computed);
    }
  }
}

}  // namespace

std::vector<VerificationRecord> run_verification(int p, int w, std::uint64_t guard) {
  require_odd_prime(p);
  Recorder rec(p, w);
  if (p > kMaxOraclePrime) {
    rec.skip("all", "p > " + std::to_string(kMaxOraclePrime) + " is not supported by the oracle");
    return rec.take();
  }
  if (w < 0) throw std::invalid_argument("w must be nonnegative");

  const BaseModel model = base_group(p);
  check_base(rec, model);

  std::unique_ptr<Oracle> oracle;
  try {
    oracle = std::make_unique<Oracle>(p, w, guard);
  } catch (const GuardExceeded& e) {
    rec.skip("wreath", e.what());
    return rec.take();
  }
  check_classes(rec, oracle->G_w());
  check_classes(rec, oracle->H_w());
  check_characters(rec, *oracle, g_labels(p, w), oracle->G_w());
  check_characters(rec, *oracle, h_labels(p, w), oracle->H_w());
  if (w >= 1) check_restriction_identities(rec, *oracle);
  check_main(rec, *oracle);
  return rec.take();
}

}  // namespace wreath::oracle
