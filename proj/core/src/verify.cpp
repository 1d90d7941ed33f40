#include "rcoptoric/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

#include "rcoptoric/parallel.hpp"

namespace rcoptoric {

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RCOP_TORIC_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned budget = thread_budget();
  if (n <= 1 || budget <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= n) return;
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(budget, n); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

void require_usable(const ColoredGraph& g) {
  if (!g.structurally_valid()) throw PreconditionError("graph failed validation");
  if (!g.connected()) throw PreconditionError("graph must be connected");
}

bool strictly_diagonally_dominant(const RationalMatrix& k) {
  for (int i = 0; i < k.rows(); ++i) {
    Rational off(0);
    for (int j = 0; j < k.cols(); ++j)
      if (j != i) off += abs(k.at(i, j));
    if (!(k.at(i, i) > off)) return false;
  }
  return true;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, int trial) {
  return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
}

ConcentrationSample sample_concentration(const ColoredGraph& g, std::uint64_t seed) {
  require_usable(g);
  const int n = g.vertex_count();

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, attempt) + static_cast<std::uint64_t>(attempt));

    // One value per edge color class: a rational in (-1, 1) with denominator
    // at most 1000. Drawn straight from the generator so the stream is
    // identical on every platform.
    std::vector<Rational> edge_value;
    for (int k = 0; k < g.edge_class_count(); ++k) {
      long num = static_cast<long>(rng() % 1999) - 999;
      edge_value.emplace_back(num, 1000);
      edge_value.back().canonicalize();
    }

    RationalMatrix k_matrix(n, n);
    for (const Edge& e : g.edges()) {
      const Rational& value = edge_value[static_cast<std::size_t>(g.edge_class_of(e))];
      k_matrix.at(e.u - 1, e.v - 1) = value;
      k_matrix.at(e.v - 1, e.u - 1) = value;
    }

    // Diagonal: one value per vertex color class, one unit above the largest
    // off-diagonal row sum, plus a distinct small per-class offset. Strict
    // diagonal dominance certifies positive definiteness exactly.
    Rational max_row(0);
    for (int i = 0; i < n; ++i) {
      Rational row(0);
      for (int j = 0; j < n; ++j)
        if (j != i) row += abs(k_matrix.at(i, j));
      max_row = std::max(max_row, row);
    }
    std::vector<Rational> diag_value;
    for (int k = 0; k < g.vertex_class_count(); ++k)
      diag_value.push_back(Rational(1) + max_row + Rational(k + 1, 97));
    for (VertexId v = 1; v <= n; ++v)
      k_matrix.at(v - 1, v - 1) = diag_value[static_cast<std::size_t>(g.vertex_class_of(v))];

    if (!strictly_diagonally_dominant(k_matrix)) continue; // redraw (cannot happen)

    ConcentrationSample sample;
    sample.k = std::move(k_matrix);
    for (int k = 0; k < g.vertex_class_count(); ++k)
      sample.class_values.emplace_back(ColorId{ColorKind::vertex, g.vertex_class_label(k)},
                                       diag_value[static_cast<std::size_t>(k)]);
    for (int k = 0; k < g.edge_class_count(); ++k)
      sample.class_values.emplace_back(ColorId{ColorKind::edge, g.edge_class_label(k)},
                                       edge_value[static_cast<std::size_t>(k)]);
    return sample;
  }
  throw InternalCheckError("diagonally dominant sample failed to materialize in 8 attempts");
}

RationalMatrix covariance_from(const ConcentrationSample& sample) {
  RationalMatrix sigma = invert_exact(sample.k);
  if (!sample.k.multiply(sigma).is_identity())
    throw InternalCheckError("exact inverse failed its identity check");
  return sigma;
}

VanishingReport verify_vanishing(const ColoredGraph& g, const std::vector<MarkovMove>& moves,
                                 int trials, std::uint64_t seed) {
  require_usable(g);
  if (trials < 1) throw PreconditionError("at least one trial required");

  VanishingReport report;
  report.trials = trials;

  struct TrialOutcome {
    std::optional<VanishingReport::Witness> witness;
    long long evaluations = 0;
  };
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
    ConcentrationSample sample = sample_concentration(g, derive_seed(seed, static_cast<int>(t)));
    RationalMatrix sigma = covariance_from(sample);
    TrialOutcome& outcome = outcomes[t];
    for (std::size_t m = 0; m < moves.size(); ++m) {
      Rational lhs(1), rhs(1);
      for (const SigmaIndex& s : moves[m].plus) lhs *= sigma.at(s.i - 1, s.j - 1);
      for (const SigmaIndex& s : moves[m].minus) rhs *= sigma.at(s.i - 1, s.j - 1);
      ++outcome.evaluations;
      if (lhs != rhs) {
        outcome.witness = VanishingReport::Witness{static_cast<int>(t), m, to_string(lhs - rhs)};
        break;
      }
    }
  });

  report.all_zero = true;
  for (const TrialOutcome& outcome : outcomes) {
    report.evaluations += outcome.evaluations;
    if (outcome.witness && report.all_zero) {
      report.all_zero = false;
      report.witness = outcome.witness;
    }
  }
  return report;
}

JordanReport jordan_square_closed(const ColoredGraph& g, int trials, std::uint64_t seed) {
  require_usable(g);
  if (trials < 1) throw PreconditionError("at least one trial required");
  const int n = g.vertex_count();
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j)
      if (!g.has_edge(i, j))
        throw PreconditionError("square-closure check requires a complete graph");

  JordanReport report;
  report.trials = trials;
  std::vector<std::optional<JordanReport::Witness>> outcomes(static_cast<std::size_t>(trials));

  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
    ConcentrationSample sample = sample_concentration(g, derive_seed(seed, static_cast<int>(t)));
    RationalMatrix square = sample.k.multiply(sample.k);

    // The square stays in the pattern space iff it is constant on every
    // vertex class diagonal and every edge class off-diagonal.
    for (int k = 0; k < g.vertex_class_count(); ++k) {
      const auto& members = g.vertex_class(k);
      for (std::size_t m = 1; m < members.size(); ++m) {
        const Rational& a = square.at(members[0] - 1, members[0] - 1);
        const Rational& b = square.at(members[m] - 1, members[m] - 1);
        if (a != b) {
          outcomes[t] = JordanReport::Witness{static_cast<int>(t), "vertex", members[0],
                                              members[0], members[m], members[m], to_string(a),
                                              to_string(b)};
          return;
        }
      }
    }
    for (int k = 0; k < g.edge_class_count(); ++k) {
      const auto& members = g.edge_class(k);
      for (std::size_t m = 1; m < members.size(); ++m) {
        const Rational& a = square.at(members[0].u - 1, members[0].v - 1);
        const Rational& b = square.at(members[m].u - 1, members[m].v - 1);
        if (a != b) {
          outcomes[t] = JordanReport::Witness{static_cast<int>(t), "edge", members[0].u,
                                              members[0].v, members[m].u, members[m].v,
                                              to_string(a), to_string(b)};
          return;
        }
      }
    }
  });

  report.closed = true;
  for (const auto& outcome : outcomes)
    if (outcome && report.closed) {
      report.closed = false;
      report.witness = outcome;
    }
  return report;
}

DimensionReport rank_dimension_check(const ColoredGraph& g) {
  require_usable(g);
  ExponentMatrix a = exponent_matrix_endpoint(g);
  DimensionReport report;
  report.rank = rational_rank(a.as_rational());
  report.color_count = g.color_count();
  report.matches = report.rank == report.color_count;
  return report;
}

} // namespace rcoptoric
