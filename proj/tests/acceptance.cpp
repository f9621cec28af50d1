// Acceptance sweep: one PASS/FAIL line per criterion, exact arithmetic only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ehalg/fixtures.hpp"

using namespace ehalg;

namespace {

// Counts checks; keeps the first failure for the report line.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::vector<Field> fields() { return {Field::prime(2), Field::prime(3), Field::rationals()}; }

Representation regular_mod(const CrossedProductPtr& cp, const Subspace& j) { return left_regular_mod(cp->algebra(), j); }

std::string where(const std::string& fixture, const Field& f, const std::string& rest = "") {
  return fixture + " over " + f.name() + (rest.empty() ? "" : ", " + rest);
}

// Sparse random vector with entries in {-1, 0, 1}; sparse generators give a spread of ideal sizes.
Vec sparse_random(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 2), sign(0, 1);
  Vec v = f.zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng) == 0) v[i] = f.from_int(sign(rng) ? 1 : -1);
  return v;
}

std::vector<Subspace> random_ideals(const CrossedProductPtr& cp, std::size_t count, std::mt19937& rng) {
  std::vector<Subspace> out;
  std::uniform_int_distribution<int> ngens(1, 2);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Vec> gens;
    for (int g = ngens(rng); g > 0; --g) gens.push_back(sparse_random(cp->field(), cp->dim(), rng));
    out.push_back(ideal_generate(*cp->algebra(), gens));
  }
  return out;
}

void criterion_1(Tally& t) {
  std::mt19937 rng(20240601);
  for (const auto& f : fields())
    for (const auto& fx : standard_fixtures()) {
      auto cp = CrossedProduct::build(fx.system, f);
      auto ideals = f == Field::prime(2) ? enumerate_ideals(*cp->algebra(), 6) : random_ideals(cp, 50, rng);
      for (const auto& j : ideals) {
        auto cert = effros_hahn_decompose(cp, j);
        Subspace meet = Subspace::full(f, cp->dim());
        for (const auto& e : cert.entries) {
          InductionContext ctx(cp, e.point);
          meet = subspace_intersect(meet, induced_ideal(ctx, gamma_image(ctx, j)));
        }
        t.expect(cert.intersection == j && meet == j, where(fx.name, f, "ideal of dim " + std::to_string(j.dim())));
      }
    }
}

void criterion_2(Tally& t) {
  for (const auto& f : fields())
    for (const auto& fx : all_fixtures()) {
      auto cp = CrossedProduct::build(fx.system, f);
      auto phi = phi_iso(cp);
      t.expect(cp->dim() == fx.system.germs().size(), where(fx.name, f, "dimension differs from germ count"));
      t.expect(inverse(phi.map).has_value(), where(fx.name, f, "map not invertible"));
      t.expect(!homomorphism_violation(*cp->algebra(), *phi.steinberg, phi.map), where(fx.name, f, "not multiplicative"));
    }
}

void criterion_3(Tally& t) {
  for (const auto& f : fields())
    for (const auto& ng : standard_groupoids()) {
      const auto& g = ng.groupoid;
      auto iso = steinberg_as_crossed_product(g, f);
      t.expect(inverse(iso.map).has_value(), where(ng.name, f, "map not invertible"));
      t.expect(!homomorphism_violation(*iso.cp->algebra(), *iso.steinberg, iso.map), where(ng.name, f, "not multiplicative"));
      const auto& h = iso.gg.groupoid;
      bool table = h.size() == g.size();
      for (std::size_t a = 0; table && a < h.size(); ++a)
        for (std::size_t b = 0; b < h.size(); ++b) {
          std::size_t c = h.compose(a, b);
          table = table && (c == npos ? npos : iso.groupoid_map[c]) == g.compose(iso.groupoid_map[a], iso.groupoid_map[b]);
        }
      t.expect(table, where(ng.name, f, "germ groupoid table differs"));
    }
}

void criterion_4(Tally& t) {
  for (const auto& f : fields()) {
    for (const auto& fx : all_fixtures()) {
      auto res = semidirect_bundle(function_action(fx.system, f));
      t.expect(res.bundle.has_value() && validate_bundle(*res.bundle).ok, where(fx.name, f, "function action rejected"));
    }
    auto nilp = fix_nilp(f);
    auto res = semidirect_bundle(nilp);
    t.expect(!res.bundle && res.witness == std::size_t{0} && res.product_span && res.product_span->dim() == 0,
             where("NILP", f, "not rejected with the idempotency witness"));
    t.expect(!validate_bundle(semidirect_triple(nilp)).ok, where("NILP", f, "triple passes the bundle axioms"));
  }
}

void criterion_5(Tally& t) {
  Field f2 = Field::prime(2);
  for (const auto& fx : all_fixtures()) {
    auto cp = CrossedProduct::build(fx.system, f2);
    for (const auto& j : enumerate_ideals(*cp->algebra(), 6)) {
      auto rep = regular_mod(cp, j);
      t.expect(kernel(rep) == j, where(fx.name, f2, "regular module kernel"));
      auto dd = discretize(cp, rep);
      t.expect(kernel(dd.discretized) == j, where(fx.name, f2, "discretized kernel"));
    }
  }
}

void criterion_6(Tally& t) {
  Field f2 = Field::prime(2);
  for (const auto& fx : all_fixtures()) {
    auto cp = CrossedProduct::build(fx.system, f2);
    for (const auto& j : enumerate_ideals(*cp->algebra(), 6)) {
      auto dd = discretize(cp, regular_mod(cp, j));
      for (auto x : fx.system.orbit_representatives()) {
        auto ti = tau_iso(dd, x);
        std::size_t n = ti.tau.rows();
        bool ok = ti.tau.cols() == n && ti.upsilon * ti.tau == Matrix::identity(f2, n) &&
                  ti.tau * ti.upsilon == Matrix::identity(f2, n);
        for (std::size_t k = 0; ok && k < cp->dim(); ++k) ok = ti.tau * ti.induced.image(k) == ti.rho.image(k) * ti.tau;
        t.expect(ok, where(fx.name, f2, "tau at " + fx.system.point_name(x)));

        InductionContext ctx(cp, x);
        auto v = isotropy_module(dd, ctx);
        t.expect(kernel(induced_module(ctx, v)) == induced_ideal(ctx, kernel(v)),
                 where(fx.name, f2, "annihilator at " + fx.system.point_name(x)));
      }
    }
  }
}

void criterion_7(Tally& t) {
  Field f2 = Field::prime(2);
  auto cp = CrossedProduct::build(fix_z2fix(), f2);
  InductionContext ctx(cp, 0);
  auto kg_ideals = enumerate_ideals(*ctx.group_algebra(), 6);
  auto cp_ideals = enumerate_ideals(*cp->algebra(), 6);
  for (const auto& i : kg_ideals) {
    auto hull = admissible_hull(ctx, i);
    t.expect(hull.is_subset_of(i), "hull not inside I");
    t.expect(induced_ideal(ctx, hull) == induced_ideal(ctx, i), "hull induces a different ideal");
    t.expect(is_admissible(ctx, hull), "hull not admissible");
    for (const auto& k : kg_ideals)
      if (is_admissible(ctx, i) && is_admissible(ctx, k) && induced_ideal(ctx, i) == induced_ideal(ctx, k))
        t.expect(i == k, "two admissible ideals induce the same ideal");
    // ind(I) is the largest ideal whose gamma image lies in I.
    t.expect(gamma_image(ctx, induced_ideal(ctx, i)).is_subset_of(i), "gamma(ind I) not inside I");
    for (const auto& j : cp_ideals)
      t.expect(gamma_image(ctx, j).is_subset_of(i) == j.is_subset_of(induced_ideal(ctx, i)), "maximality");
  }
  for (const auto& j : cp_ideals) {
    auto g = gamma_image(ctx, j);
    t.expect(is_admissible(ctx, g), "gamma image not admissible");
    t.expect(j.is_subset_of(induced_ideal(ctx, g)), "J not inside ind(gamma J)");
  }
}

void criterion_8(Tally& t) {
  for (const auto& f : fields())
    for (const auto& fx : all_fixtures()) {
      const auto& sys = fx.system;
      const auto& S = sys.semigroup();
      std::size_t n = sys.space_size();
      auto cp = CrossedProduct::build(sys, f);
      for (std::size_t x = 0; x < n; ++x) {
        InductionContext ctx(cp, x);
        std::size_t m = ctx.module_dim(), g = ctx.isotropy().size();
        const auto& kg = *ctx.group_algebra();
        for (std::size_t k = 0; k < m; ++k) {
          Vec dk = f.unit_vec(m, k), sum = f.zero_vec(m);
          for (auto r : ctx.representatives()) {
            Vec dr = f.unit_vec(m, r);
            sum = vec_add(f, sum, ctx.right_action(ctx.pairing(dr, dk)).apply(dr));
          }
          t.expect(sum == dk, where(fx.name, f, "reconstruction"));
          for (std::size_t l = 0; l < m; ++l)
            for (std::size_t a = 0; a < g; ++a) {
              Vec dl = f.unit_vec(m, l), ea = f.unit_vec(g, a);
              t.expect(ctx.pairing(dk, ctx.right_action(ea).apply(dl)) == kg.multiply(ctx.pairing(dk, dl), ea),
                       where(fx.name, f, "balanced form"));
            }
        }
      }
      for (std::size_t s = 0; s < S.size(); ++s)
        for (std::size_t u = 0; u < S.size(); ++u) {
          if (!S.leq(s, u)) continue;
          for (std::size_t x = 0; x < n; ++x)
            if (sys.in_domain(s, x))
              t.expect(sys.in_domain(u, x) && sys.germ_of(s, x) == sys.germ_of(u, x), where(fx.name, f, "hereditary"));
        }
      auto cr = disintegrate(*cp, regular_mod(cp, Subspace::zero(f, cp->dim())));
      for (auto e : S.idempotents())
        for (auto x : sys.theta(e).domain()) {
          Matrix p = cr.pi_of(f, f.unit_vec(n, x));
          t.expect(cr.sigma[e] * p == p && p * cr.sigma[e] == p, where(fx.name, f, "idempotent covariance"));
        }
      for (std::size_t s = 0; s < S.size(); ++s)
        for (std::size_t x = 0; x < n; ++x) {
          Vec fx_ = f.unit_vec(n, x);
          t.expect(cr.sigma[s] * cr.pi_of(f, fx_) == cr.pi_of(f, bar_alpha(sys, f, s, fx_)) * cr.sigma[s],
                   where(fx.name, f, "covariance"));
        }
      for (std::size_t k = 0; k < cp->dim(); ++k) {
        Vec b = f.unit_vec(cp->dim(), k), u = local_unit(*cp, b);
        t.expect(cp->multiply(u, u) == u && cp->multiply(u, b) == b && cp->multiply(b, u) == b,
                 where(fx.name, f, "local unit"));
      }
      auto iso = unitization_iso(sys, f);
      t.expect(inverse(iso.map).has_value() && !homomorphism_violation(*iso.cp->algebra(), *iso.unitized->algebra(), iso.map),
               where(fx.name, f, "unitization"));
    }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"Effros-Hahn exactness", criterion_1},
      {"isomorphism with the Steinberg algebra of germs", criterion_2},
      {"Steinberg algebras as crossed products", criterion_3},
      {"semi-direct product bundle iff idempotent fibers", criterion_4},
      {"kernel chain", criterion_5},
      {"induced-module equivalence", criterion_6},
      {"admissibility lattice on F2[Z/2]", criterion_7},
      {"structural identities", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = t.failures == 0 && t.checks > 0;
    failed += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name << ": " << t.checks << " checks";
    if (!pass) line << ", " << t.failures << " failed, first: " << t.first;
    line.precision(2);
    line << std::fixed << " (" << secs << "s)";
    std::puts(line.str().c_str());
  }
  return failed == 0 ? 0 : 1;
}
