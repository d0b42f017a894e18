// Copyright 2026 The cwpot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds and seeds are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cwpot/decomposition.h"
#include "cwpot/dynamics.h"
#include "cwpot/potential.h"
#include "test_support.h"

namespace cwpot {
namespace {

using testing::shape_of;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Vector vec(std::initializer_list<double> v) {
  Vector r(v.size());
  Eigen::Index j = 0;
  for (double x : v) r(j++) = x;
  return r;
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<GameShape> oracle_shapes() {
  return {shape_of({2, 2}), shape_of({2, 3}), shape_of({3, 3}),
          shape_of({2, 2, 2})};
}

std::vector<GameShape> decomposition_shapes() {
  return {shape_of({2, 2}), shape_of({2, 3}), shape_of({3, 3}),
          shape_of({2, 2, 2}), shape_of({2, 3, 4})};
}

// Coset weighted potential games gathered while checking the oracle and
// decomposition suites; the dynamics criterion replays all of them.
struct PotentialCase {
  Game game;
  CosetWeights weights;
};
std::vector<PotentialCase>& potential_cases() {
  static std::vector<PotentialCase> cases;
  return cases;
}

Outcome weighted_potential_golden() {
  Outcome o;
  const Game g = testing::reference_game();
  const auto t0 = Clock::now();
  const auto sol = solve_potential(g, testing::potential_weights());
  const PotentialSolve uni = solve_potential_detailed(
      g, CosetWeights::uniform(g.shape()));
  const double elapsed = ms_since(t0);
  o.require(sol.has_value(), "weighted game not solvable");
  if (sol) {
    const RowVector expected = vec({1.5, 1.5, 2.5, 2}).transpose();
    const RowVector diff = sol->potential - expected;
    const double dev =
        (diff.array() - diff(0)).abs().maxCoeff();
    o.require(dev <= 1e-9, fmt("potential deviation %.3g", dev));
  }
  o.require(!uni.solvable(), "uniform weights reported solvable");
  o.require(uni.residual > 1e-4, fmt("uniform residual %.3g", uni.residual));
  o.require(elapsed < 10.0, fmt("took %.3f ms", elapsed));
  if (o.ok) o.detail = fmt("%.3f ms", elapsed);
  return o;
}

Outcome decomposition_golden() {
  Outcome o;
  const CosetWeights w = testing::decomposition_weights();
  Matrix bp(8, 4);
  bp << 0.5, 0, -0.5, 0, 0, 1, 0, -1, -0.5, 0, 0.5, 0, 0, -1, 0, 1,  //
      2, -2, 0, 0, -2, 2, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1;
  const DecompositionBasis b = assemble_basis(w);
  o.require(max_abs(b.pure_potential_full() - bp) <= 1e-12, "B^P mismatch");
  const Vector bh = vec({1, -0.5, -1, 0.5, -0.25, 0.25, 0.5, -0.5});
  const bool shape_ok = b.pure_harmonic().cols() == 1;
  o.require(shape_ok, "B^H column count");
  if (shape_ok) {
    const double err = std::min(max_abs(b.pure_harmonic().col(0) - bh),
                                max_abs(b.pure_harmonic().col(0) + bh));
    o.require(err <= 1e-12, fmt("B^H deviation %.3g", err));
  }
  const Decomposition d = decompose(b, testing::reference_game());
  o.require(max_abs(d.x_pure_potential - vec({-0.5, -0.5, 0.5})) <= 1e-9,
            "X^P mismatch");
  o.require(max_abs(d.x_nonstrategic - vec({-0.5, 2.5, 3, 4.5})) <= 1e-9,
            "X^N mismatch");
  o.require(max_abs(d.x_pure_harmonic) <= 1e-9, "X^H not zero");
  const Vector ns = vec({-0.5, 2.5, -0.5, 2.5, 3, 3, 4.5, 4.5});
  const Vector vg = vec({-1, 2, 0, 3, 3, 3, 5, 4});
  o.require(max_abs(d.pure_potential.transpose() -
                    vec({-0.5, -0.5, 0.5, 0.5, 0, 0, 0.5, -0.5})) <= 1e-9,
            "pure-potential projection");
  o.require(max_abs(d.nonstrategic.transpose() - ns) <= 1e-9,
            "non-strategic projection");
  o.require(max_abs(d.pure_harmonic) <= 1e-9, "pure-harmonic projection");
  o.require(max_abs(d.potential.transpose() - vg) <= 1e-9,
            "potential projection");
  o.require(max_abs(d.harmonic.transpose() - ns) <= 1e-9,
            "harmonic projection");
  if (o.ok) o.detail = "basis, coefficients and projections match";
  return o;
}

Outcome closed_form_2x2() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  const GameShape shape = shape_of({2, 2});
  int disagreements = 0, solvable = 0;
  const auto t0 = Clock::now();
  for (int t = 0; t < 1000; ++t) {
    const CosetWeights w = testing::random_weights(shape, rng);
    // Half the draws are constructed to be weighted potential games, so both
    // sides of the equivalence get exercised.
    const Game g = t % 2 == 0 ? testing::random_potential_game(w, rng)
                              : testing::random_game(shape, rng);
    const bool closed = std::abs(boolean_2x2_residual(g, w)) <= 1e-8;
    const bool solver = solve_potential(g, w).has_value();
    disagreements += closed != solver;
    solvable += solver;
  }
  const double elapsed = ms_since(t0);
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(solvable >= 500, "too few solvable draws");
  o.require(elapsed < 2000.0, fmt("took %.1f ms", elapsed));
  if (o.ok) {
    o.detail = "1000 draws, " + std::to_string(solvable) + " solvable, " +
               fmt("%.1f ms", elapsed);
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(4242);
  int disagreements = 0, checked = 0;
  for (const GameShape& shape : oracle_shapes()) {
    const CosetWeights w = testing::random_weights(shape, rng);
    const DecompositionBasis b = assemble_basis(w);
    const SubspaceDims dims = b.dims();
    for (int t = 0; t < 200; ++t) {
      // Mix of unstructured games and constructed potential games.
      const CosetWeights wt = testing::random_weights(shape, rng);
      const Game g = t % 2 == 0 ? testing::random_game(shape, rng)
                                : testing::random_potential_game(wt, rng);
      const auto sol = solve_potential(g, wt);
      const bool oracle = testing::potential_by_propagation(g, wt, 1e-7).has_value();
      const bool verified =
          sol && verify_potential_bruteforce(g, wt, sol->potential, 1e-7);
      disagreements += sol.has_value() != oracle;
      disagreements += sol.has_value() != verified;
      ++checked;
      if (sol) potential_cases().push_back({g, wt});

      Vector x = Vector::Zero(dims.total());
      x.head(dims.pure_potential + dims.nonstrategic) =
          testing::random_vector(dims.pure_potential + dims.nonstrategic, rng);
      const Game pot =
          Game::from_structure_vector(shape, (b.assembled() * x).transpose());
      const auto psol = solve_potential(pot, w);
      disagreements += !psol.has_value();
      disagreements +=
          psol && !verify_potential_bruteforce(pot, w, psol->potential, 1e-7);
      if (psol) potential_cases().push_back({pot, w});

      Vector y = Vector::Zero(dims.total());
      Vector h = testing::random_vector(dims.pure_harmonic, rng);
      if (h.norm() < 1.0) h *= (1.0 + 1e-3) / h.norm();
      y.tail(dims.pure_harmonic) = h;
      const Game harm =
          Game::from_structure_vector(shape, (b.assembled() * y).transpose());
      disagreements += solve_potential(harm, w).has_value();
      checked += 2;
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok) o.detail = std::to_string(checked) + " games";
  return o;
}

Outcome decomposition_properties() {
  Outcome o;
  std::mt19937_64 rng(777);
  double worst_orth = 0, worst_rec = 0, worst_idem = 0;
  for (const GameShape& shape : decomposition_shapes()) {
    const CosetWeights w = testing::random_weights(shape, rng);
    const DecompositionBasis b = assemble_basis(w);
    const SubspaceDims dims = b.dims();
    const std::size_t n = shape.players(), k = shape.profile_count();
    std::size_t ns = 0;
    for (std::size_t j = 1; j <= n; ++j) ns += k / shape.card(static_cast<int>(j));
    o.require(dims.pure_potential == k - 1 && dims.nonstrategic == ns &&
                  dims.pure_harmonic == (n - 1) * k - ns + 1 &&
                  dims.total() == n * k,
              "dimension split");
    o.require(b.pure_potential().cols() == static_cast<Eigen::Index>(k - 1) &&
                  b.nonstrategic().cols() == static_cast<Eigen::Index>(ns) &&
                  b.pure_harmonic().cols() ==
                      static_cast<Eigen::Index>(dims.pure_harmonic),
              "basis column counts");
    worst_orth = std::max(
        {worst_orth, max_abs(b.pure_potential().transpose() * b.nonstrategic()),
         max_abs(b.pure_potential().transpose() * b.pure_harmonic()),
         max_abs(b.nonstrategic().transpose() * b.pure_harmonic())});
    for (int t = 0; t < 100; ++t) {
      const Game g = testing::random_game(shape, rng);
      const Decomposition d = decompose(b, g);
      worst_rec = std::max(worst_rec, max_abs(d.pure_potential + d.nonstrategic +
                                              d.pure_harmonic - structure_vector(g)));
      const RowVector parts[3] = {d.pure_potential, d.nonstrategic,
                                  d.pure_harmonic};
      for (int c = 0; c < 3; ++c) {
        const Decomposition again =
            decompose(b, Game::from_structure_vector(shape, parts[c]));
        const RowVector same = c == 0   ? again.pure_potential
                               : c == 1 ? again.nonstrategic
                                        : again.pure_harmonic;
        worst_idem = std::max(worst_idem, max_abs(same - parts[c]));
        worst_idem = std::max(
            worst_idem, max_abs(again.pure_potential + again.nonstrategic +
                                again.pure_harmonic - same));
      }
      const Game pot =
          Game::from_structure_vector(shape, d.potential);
      if (t < 20) potential_cases().push_back({pot, w});
    }
  }
  o.require(worst_orth <= 1e-10, fmt("orthogonality %.3g", worst_orth));
  o.require(worst_rec <= 1e-8, fmt("reconstruction %.3g", worst_rec));
  o.require(worst_idem <= 1e-8, fmt("idempotence %.3g", worst_idem));
  if (o.ok) {
    o.detail = fmt("orth %.2g", worst_orth) + fmt(", rec %.2g", worst_rec) +
               fmt(", idem %.2g", worst_idem);
  }
  return o;
}

Outcome harmonic_identities() {
  Outcome o;
  std::mt19937_64 rng(31337);
  double worst_h = 0, worst_p = 0;
  for (const GameShape& shape : decomposition_shapes()) {
    const CosetWeights w = testing::random_weights(shape, rng);
    const DecompositionBasis b = assemble_basis(w);
    for (int t = 0; t < 100; ++t) {
      const Game h = Game::from_structure_vector(
          shape, (b.pure_harmonic() *
                  testing::random_vector(b.pure_harmonic().cols(), rng))
                     .transpose());
      worst_h = std::max({worst_h, weighted_zero_sum_residual(h, w),
                          weighted_coset_sum_residual(h, w)});
      const Vector gamma = testing::random_vector(shape.profile_count(), rng);
      const Game p = Game::from_structure_vector(
          shape, (b.pure_potential_full() * gamma).transpose());
      worst_p = std::max({worst_p,
                          pure_potential_identity_residual(p, w, gamma.transpose()),
                          coset_sum_residual(p)});
    }
  }
  o.require(worst_h <= 1e-8, fmt("pure-harmonic identities %.3g", worst_h));
  o.require(worst_p <= 1e-8, fmt("pure-potential identities %.3g", worst_p));
  if (o.ok) o.detail = fmt("harmonic %.2g", worst_h) + fmt(", potential %.2g", worst_p);
  return o;
}

Outcome dynamics_convergence() {
  Outcome o;
  // Extend the collected suites up to k = 81 profiles.
  std::mt19937_64 rng(8181);
  for (const GameShape& shape : {shape_of({3, 3, 3, 3}), shape_of({2, 2, 2, 2, 2, 2})}) {
    for (int t = 0; t < 25; ++t) {
      const CosetWeights w = testing::random_weights(shape, rng);
      potential_cases().push_back({testing::random_potential_game(w, rng), w});
    }
  }
  const auto t0 = Clock::now();
  std::size_t paths = 0;
  int failures = 0;
  for (const PotentialCase& c : potential_cases()) {
    const GameShape& shape = c.game.shape();
    const auto sol = solve_potential(c.game, c.weights);
    if (!sol) {
      ++failures;
      continue;
    }
    const RowVector& pot = sol->potential;
    const auto ne = pure_nash_equilibria(c.game);
    for (const StrategyProfile& s : potential_argmax(pot, shape)) {
      failures += std::find(ne.begin(), ne.end(), s) == ne.end();
    }
    for (const StrategyProfile& start : all_profiles(shape)) {
      const PathRecord path =
          best_response_path(c.game, start, 10 * shape.players() * shape.profile_count());
      ++paths;
      failures += !path.terminated || path.cycle_detected ||
                  !is_nash(c.game, path.states.back());
      for (std::size_t s = 0; s + 1 < path.states.size(); ++s) {
        const double before = pot(
            static_cast<Eigen::Index>(profile_index(path.states[s], shape) - 1));
        const double after = pot(static_cast<Eigen::Index>(
            profile_index(path.states[s + 1], shape) - 1));
        failures += !(after > before);
      }
    }
  }
  const double elapsed = ms_since(t0);
  o.require(failures == 0, std::to_string(failures) + " failures");
  o.require(!potential_cases().empty(), "no potential games collected");
  o.require(elapsed < 30000.0, fmt("took %.0f ms", elapsed));
  if (o.ok) {
    o.detail = std::to_string(potential_cases().size()) + " games, " +
               std::to_string(paths) + " paths, " + fmt("%.0f ms", elapsed);
  }
  return o;
}

Outcome uniform_regression() {
  Outcome o;
  std::vector<GameShape> shapes = decomposition_shapes();
  for (const GameShape& shape : shapes) {
    const DecompositionBasis b = assemble_basis(CosetWeights::uniform(shape));
    const testing::UnweightedBases u = testing::unweighted_bases(shape);
    o.require(testing::same_span(b.pure_potential(), u.pure_potential),
              "pure-potential span differs");
    o.require(testing::same_span(b.nonstrategic(), u.nonstrategic),
              "non-strategic span differs");
    o.require(testing::same_span(b.pure_harmonic(), u.pure_harmonic),
              "pure-harmonic span differs");
  }
  if (o.ok) o.detail = std::to_string(shapes.size()) + " shapes";
  return o;
}

}  // namespace
}  // namespace cwpot

int main() {
  using namespace cwpot;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"2x2 weighted potential golden values", weighted_potential_golden},
      {"2x2 decomposition golden values", decomposition_golden},
      {"2x2 closed-form condition vs solver", closed_form_2x2},
      {"solver vs brute-force oracle", oracle_equivalence},
      {"decomposition properties", decomposition_properties},
      {"algebraic identities of pure components", harmonic_identities},
      {"best-response dynamics in potential games", dynamics_convergence},
      {"uniform weights reduce to the unweighted decomposition",
       uniform_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
