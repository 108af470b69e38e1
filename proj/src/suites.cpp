#include "chev/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <cstdlib>
#include <random>
#include <thread>

#include "chev/decomposer.hpp"
#include "chev/json_io.hpp"
#include "chev/recover.hpp"

namespace chev {

using nlohmann::json;

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

json SuiteReport::to_json() const {
  json cs = json::array();
  std::int64_t cases = 0, failures = 0;
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"status", c.failures ? "fail" : "pass"}};
    if (c.failures) j["counterexample"] = c.counterexample;
    cs.push_back(std::move(j));
    cases += c.cases;
    failures += c.failures;
  }
  return json{{"suite", suite},   {"system", system},     {"ring", ring},
              {"checks", cs},     {"cases", cases},       {"failures", failures},
              {"status", passed() ? "pass" : "fail"}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"laws", "eq1", "weyl", "jacobi", "commutator", "recover"};
  return names;
}

int default_threads() {
  if (const char* env = std::getenv("CHEV_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next++) < count;) task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

std::vector<Elem> parameters(const Ring& ring) {
  std::vector<Elem> out;
  if (!ring.finite()) {
    for (Elem t = -3; t <= 3; ++t) out.push_back(t);
    return out;
  }
  for (Elem a = 0; a < ring.size(); ++a) out.push_back(a);
  return out;
}

std::vector<Elem> units(const Ring& ring) {
  if (!ring.finite()) return {1, -1};
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a)
    if (ring.is_unit(a)) out.push_back(a);
  return out;
}

struct Tally {
  CheckResult result;
  void record(bool ok, const std::function<json()>& witness) {
    ++result.cases;
    if (ok) return;
    if (result.failures++ == 0) result.counterexample = witness();
  }
};

CheckResult merge(const std::string& name, const std::vector<Tally>& parts) {
  CheckResult out{name, 0, 0, {}};
  for (const auto& p : parts) {
    out.cases += p.result.cases;
    if (p.result.failures && out.failures == 0) out.counterexample = p.result.counterexample;
    out.failures += p.result.failures;
  }
  return out;
}

json base_witness(const std::string& suite, const AdjointAlgebra& alg, const Ring& ring) {
  return json{{"suite", suite}, {"system", alg.system().name()}, {"ring", ring.descriptor()}};
}

std::vector<CheckResult> run_laws(const AdjointAlgebra& alg, const Ring& ring, int threads) {
  const auto params = parameters(ring);
  std::vector<Tally> additive(alg.num_roots()), det(alg.num_roots());
  parallel_for(alg.num_roots(), threads, [&](std::size_t a) {
    const int alpha = static_cast<int>(a);
    std::vector<GroupElement> x;
    for (Elem t : params) x.push_back(unipotent(alg, ring, alpha, t));
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (!ring.finite())
        det[a].record(determinant(ring, x[i].matrix()) == 1, [&] {
          json w = base_witness("laws", alg, ring);
          w["root"] = alg.system().root(alpha);
          w["t"] = params[i];
          return w;
        });
      for (std::size_t j = 0; j < params.size(); ++j) {
        Elem s = params[i], t = params[j];
        additive[a].record((x[i] * x[j]).matrix() == unipotent(alg, ring, alpha, ring.add(s, t)).matrix(), [&] {
          json w = base_witness("laws", alg, ring);
          w["root"] = alg.system().root(alpha);
          w["s"] = elem_to_json(ring, s);
          w["t"] = elem_to_json(ring, t);
          return w;
        });
      }
    }
  });
  std::vector<CheckResult> out{merge("one-parameter law x(s)x(t) = x(s+t)", additive)};
  if (!ring.finite()) out.push_back(merge("determinant of x(t) is 1", det));
  return out;
}

std::vector<CheckResult> run_eq1(const AdjointAlgebra& alg, const Ring& ring, int threads) {
  const RootSystem& sys = alg.system();
  const auto us = units(ring);
  const auto params = parameters(ring);
  std::vector<Character> chars(1);
  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<Character> next;
    for (const auto& c : chars)
      for (Elem u : us) {
        Character d = c;
        d.values.push_back(u);
        next.push_back(std::move(d));
      }
    chars = std::move(next);
  }
  std::vector<Tally> tallies(chars.size());
  parallel_for(chars.size(), threads, [&](std::size_t c) {
    GroupElement h = torus(alg, ring, chars[c]);
    GroupElement h_inv = h.inverse();
    for (int b = 0; b < alg.num_roots(); ++b) {
      Elem chi = chars[c].evaluate(ring, sys.root(b));
      for (Elem xi : params) {
        bool ok = (h * unipotent(alg, ring, b, xi) * h_inv).matrix() ==
                  unipotent(alg, ring, b, ring.mul(chi, xi)).matrix();
        tallies[c].record(ok, [&] {
          json w = base_witness("eq1", alg, ring);
          json vals = json::array();
          for (Elem v : chars[c].values) vals.push_back(elem_to_json(ring, v));
          w["character"] = vals;
          w["beta"] = sys.root(b);
          w["xi"] = elem_to_json(ring, xi);
          return w;
        });
      }
    }
  });
  return {merge("h(chi) x_beta(xi) h(chi)^-1 = x_beta(chi(beta) xi)", tallies)};
}

std::vector<CheckResult> run_weyl(const AdjointAlgebra& alg, const Ring& ring, int threads) {
  const RootSystem& sys = alg.system();
  const auto params = parameters(ring);
  std::vector<Tally> tallies(alg.num_roots());
  parallel_for(alg.num_roots(), threads, [&](std::size_t a) {
    const int alpha = static_cast<int>(a);
    GroupElement w = weyl(alg, ring, alpha, ring.one());
    GroupElement w_inv = w.inverse();
    for (int b = 0; b < alg.num_roots(); ++b) {
      const int target = sys.reflect(alpha, b);
      auto c = weyl_sign(alg, alpha, b);
      for (Elem u : params) {
        bool ok = c && (w * unipotent(alg, ring, b, u) * w_inv).matrix() ==
                           unipotent(alg, ring, target, ring.mul(ring.from_int(*c), u)).matrix();
        tallies[a].record(ok, [&] {
          json wt = base_witness("weyl", alg, ring);
          wt["alpha"] = sys.root(alpha);
          wt["beta"] = sys.root(b);
          wt["u"] = elem_to_json(ring, u);
          return wt;
        });
      }
    }
  });
  return {merge("w_alpha(1) x_beta(u) w_alpha(1)^-1 = x_{s_alpha(beta)}(c u)", tallies)};
}

SparseVector unit_vector(int i) { return {{i, 1}}; }

SparseVector add(const SparseVector& a, const SparseVector& b) {
  std::map<int, std::int64_t> acc;
  for (auto [k, c] : a) acc[k] += c;
  for (auto [k, c] : b) acc[k] += c;
  SparseVector out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return out;
}

std::vector<CheckResult> run_jacobi(const AdjointAlgebra& alg, int threads, std::uint64_t seed) {
  const RootSystem& sys = alg.system();
  const int n = alg.dimension();
  const bool exhaustive = n <= 20;
  const std::size_t tasks = exhaustive ? static_cast<std::size_t>(n) : 100;
  const int per_task = 1000;
  std::vector<Tally> jac(tasks);
  parallel_for(tasks, threads, [&](std::size_t task) {
    auto check = [&](int a, int b, int c) {
      auto ea = unit_vector(a), eb = unit_vector(b), ec = unit_vector(c);
      auto s = add(add(alg.bracket(alg.bracket(ea, eb), ec), alg.bracket(alg.bracket(eb, ec), ea)),
                   alg.bracket(alg.bracket(ec, ea), eb));
      jac[task].record(s.empty(), [&] { return json{{"suite", "jacobi"}, {"system", sys.name()}, {"triple", {a, b, c}}}; });
    };
    if (exhaustive) {
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(static_cast<int>(task), b, c);
    } else {
      std::mt19937_64 rng(seed + task);
      for (int k = 0; k < per_task; ++k)
        check(static_cast<int>(draw_below(rng(), n)), static_cast<int>(draw_below(rng(), n)),
              static_cast<int>(draw_below(rng(), n)));
    }
  });

  Tally chain, anti, divided, nil;
  const int nr = alg.num_roots();
  const Ring z = Ring::integers();
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      if (b == sys.negative(a) || b == a) continue;
      if (sys.sum_index(a, b) < 0) continue;
      int p = sys.root_chain(b, a).first;
      chain.record(std::abs(alg.structure_constant(a, b)) == p + 1,
                   [&] { return json{{"suite", "jacobi"}, {"system", sys.name()}, {"alpha", sys.root(a)}, {"beta", sys.root(b)}}; });
      anti.record(alg.structure_constant(a, b) == -alg.structure_constant(b, a),
                  [&] { return json{{"suite", "jacobi"}, {"system", sys.name()}, {"alpha", sys.root(a)}, {"beta", sys.root(b)}}; });
    }
    IntMatrix p = alg.adjoint_matrix(a);
    std::int64_t fact = 1;
    int k = 1;
    for (; !is_zero(p); ++k) {
      fact *= k;
      bool ok = true;
      for (auto e : p.data) ok = ok && e % fact == 0;
      divided.record(ok, [&] { return json{{"suite", "jacobi"}, {"system", sys.name()}, {"alpha", sys.root(a)}, {"k", k}}; });
      p = mat_mul(z, p, alg.adjoint_matrix(a));
    }
    // k is now the first power with X_alpha^k = 0
    const int limit = sys.kind() == 'G' && !sys.is_long(a) ? 4 : 3;
    nil.record(k == alg.nilpotency_index(a) && k == limit,
               [&] { return json{{"suite", "jacobi"}, {"system", sys.name()}, {"alpha", sys.root(a)}}; });
  }
  std::vector<CheckResult> out{merge(exhaustive ? "Jacobi identity (exhaustive)" : "Jacobi identity (sampled)", jac)};
  chain.result.name = "|N_{alpha,beta}| = p + 1";
  anti.result.name = "N_{alpha,beta} = -N_{beta,alpha}";
  divided.result.name = "X_alpha^k / k! is integral";
  nil.result.name = "nilpotency index";
  for (auto* t : {&chain, &anti, &divided, &nil}) out.push_back(t->result);
  return out;
}

std::vector<CheckResult> run_commutator(const AdjointAlgebra& alg, const Ring& ring, int threads) {
  const RootSystem& sys = alg.system();
  auto params = parameters(ring);
  std::vector<Tally> tallies(alg.num_roots());
  parallel_for(alg.num_roots(), threads, [&](std::size_t a) {
    const int alpha = static_cast<int>(a);
    std::vector<GroupElement> xa;
    for (Elem s : params) xa.push_back(unipotent(alg, ring, alpha, s));
    for (int b = 0; b < alg.num_roots(); ++b) {
      if (b == alpha || b == sys.negative(alpha)) continue;
      auto terms = commutator_coefficients(alg, alpha, b);
      for (Elem t : params) {
        GroupElement xb = unipotent(alg, ring, b, t);
        for (std::size_t i = 0; i < params.size(); ++i) {
          bool ok = commutator(xa[i], xb).matrix() == commutator_product(alg, ring, terms, params[i], t).matrix();
          tallies[a].record(ok, [&] {
            json w = base_witness("commutator", alg, ring);
            w["alpha"] = sys.root(alpha);
            w["beta"] = sys.root(b);
            w["s"] = elem_to_json(ring, params[i]);
            w["t"] = elem_to_json(ring, t);
            return w;
          });
        }
      }
    }
  });
  return {merge("[x_alpha(s), x_beta(t)] = prod x_{i alpha + j beta}(C_ij s^i t^j)", tallies)};
}

std::vector<CheckResult> run_recover(const AdjointAlgebra& alg, const Ring& ring, int threads) {
  const RootSystem& sys = alg.system();
  if (!ring.finite()) throw UnsupportedCombination("recover suite needs a finite ring");
  for (int a = 0; a < alg.num_roots(); ++a)
    if (!select_regime(sys, ring, a))
      throw UnsupportedCombination("no recovery regime for " + sys.name() + " over " + ring.descriptor() +
                                   " (root " + json(sys.root(a)).dump() + ")");
  std::vector<GroupElement> family;
  for (int a = 0; a < alg.num_roots(); ++a) family.push_back(unipotent(alg, ring, a, ring.one()));
  std::vector<Tally> tallies(alg.num_roots());
  parallel_for(alg.num_roots(), threads, [&](std::size_t a) {
    const int alpha = static_cast<int>(a);
    Matrix got;
    switch (*select_regime(sys, ring, alpha)) {
      case RecoveryRegime::WithHalf: got = recover_with_half(alg, family[a], alpha); break;
      case RecoveryRegime::G2ShortWithSixth: got = recover_g2_short(alg, family[a], alpha); break;
      case RecoveryRegime::SimplyLacedNoHalf: got = recover_no_half(alg, family, alpha); break;
    }
    tallies[a].record(got == map_integers(ring, alg.adjoint_matrix(alpha)), [&] {
      json w = base_witness("recover", alg, ring);
      w["root"] = sys.root(alpha);
      w["regime"] = regime_name(*select_regime(sys, ring, alpha));
      return w;
    });
  });
  return {merge("recovered X_alpha equals the reduced adjoint matrix", tallies)};
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const AdjointAlgebra& alg, const Ring& ring, int threads,
                      std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport report{suite, alg.system().name(), ring.descriptor(), {}, 0};
  if (suite == "laws") report.checks = run_laws(alg, ring, threads);
  else if (suite == "eq1") report.checks = run_eq1(alg, ring, threads);
  else if (suite == "weyl") report.checks = run_weyl(alg, ring, threads);
  else if (suite == "jacobi") report.checks = run_jacobi(alg, threads, seed);
  else if (suite == "commutator") report.checks = run_commutator(alg, ring, threads);
  else if (suite == "recover") report.checks = run_recover(alg, ring, threads);
  else throw std::invalid_argument("unknown suite: " + suite);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace chev
