#include "braidmono/classify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

namespace braidmono {

namespace {

MonodromyRep conjugate_rep(const MonodromyRep& rep, const Perm& g) {
  return MonodromyRep{rep.degree,        conjugate(rep.sigma, g), conjugate(rep.a1, g),
                      conjugate(rep.a2, g), conjugate(rep.b1, g),    conjugate(rep.b2, g)};
}

std::vector<Perm> all_transpositions(int n) {
  std::vector<Perm> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Perm::transposition(n, i, j));
  return out;
}

// Generators of the centralizer of (1 2): the transposition itself plus the
// transpositions of the remaining points.
std::vector<Perm> centralizer_generators(int n) {
  std::vector<Perm> out{Perm::transposition(n, 0, 1)};
  for (int i = 2; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Perm::transposition(n, i, j));
  return out;
}

// BFS orbit of `seed` under conjugation by `gens`; sorted ascending.
std::set<MonodromyRep> orbit_of(const MonodromyRep& seed, const std::vector<Perm>& gens) {
  std::set<MonodromyRep> orbit{seed};
  std::deque<MonodromyRep> queue{seed};
  while (!queue.empty()) {
    MonodromyRep cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      MonodromyRep next = conjugate_rep(cur, g);
      if (orbit.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return orbit;
}

std::uint64_t exact_divide(std::uint64_t num, std::uint64_t den, const char* what) {
  if (den == 0 || num % den != 0)
    throw std::logic_error(std::string("orbit-stabilizer violation in ") + what);
  return num / den;
}

}  // namespace

std::vector<ConjugacyClassRecord> classify(const std::vector<MonodromyRep>& solutions,
                                           const ClassifyOptions& options) {
  std::vector<ConjugacyClassRecord> records;
  if (solutions.empty()) return records;

  const int n = solutions.front().degree;
  for (const MonodromyRep& rep : solutions)
    if (rep.degree != n)
      throw std::invalid_argument("classify: input mixes degrees " + std::to_string(n) +
                                  " and " + std::to_string(rep.degree));

  std::set<MonodromyRep> input(solutions.begin(), solutions.end());

  const Perm sigma0 = n >= 2 ? Perm::transposition(n, 0, 1) : Perm();
  const bool fixed_sigma_input =
      n >= 2 && std::all_of(input.begin(), input.end(),
                            [&](const MonodromyRep& r) { return r.sigma == sigma0; });

  ClosurePolicy policy = options.policy;
  if (policy == ClosurePolicy::Auto)
    policy = fixed_sigma_input ? ClosurePolicy::Close : ClosurePolicy::RequireClosed;

  const bool centralizer_method =
      fixed_sigma_input && n > options.explicit_closure_max_degree;
  const bool collect_members = n <= options.collect_members_max_degree;
  const std::uint64_t n_fact = factorial(n);

  std::set<MonodromyRep> remaining = input;

  if (centralizer_method) {
    // Orbits of the fixed-sigma set under the centralizer of (1 2) are in
    // bijection with full Sn-orbits; sizes scale by the transposition count.
    const std::vector<Perm> gens = centralizer_generators(n);
    // g0 maps (1 2) to the lex-minimal transposition (n-1 n), where the
    // global minimum of each full orbit lives.
    std::vector<int> g0_img(n);
    g0_img[0] = n - 2;
    g0_img[1] = n - 1;
    for (int k = 2; k < n; ++k) g0_img[k] = k - 2;
    const Perm g0 = Perm::from_images(std::move(g0_img));

    while (!remaining.empty()) {
      const MonodromyRep seed = *remaining.begin();
      std::set<MonodromyRep> orbit = orbit_of(seed, gens);
      ConjugacyClassRecord rec;
      rec.orbit_size = orbit.size() * transposition_count(n);
      rec.stabilizer_order = exact_divide(n_fact, rec.orbit_size, "classify");
      bool have_rep = false;
      for (const MonodromyRep& member : orbit) {
        if (!input.count(member)) {
          if (policy == ClosurePolicy::RequireClosed)
            throw ClosureError("input set is not conjugation-closed: orbit of " +
                               rep_key(seed) + " leaves it at " + rep_key(member));
          input.insert(member);
        }
        remaining.erase(member);
        MonodromyRep candidate = conjugate_rep(member, g0);
        if (!have_rep || candidate < rec.representative) {
          rec.representative = std::move(candidate);
          have_rep = true;
        }
      }
      records.push_back(std::move(rec));
    }
  } else {
    const std::vector<Perm> gens = n >= 2 ? all_transpositions(n) : std::vector<Perm>{};

    while (!remaining.empty()) {
      const MonodromyRep seed = *remaining.begin();
      std::set<MonodromyRep> orbit =
          n >= 2 ? orbit_of(seed, gens) : std::set<MonodromyRep>{seed};
      ConjugacyClassRecord rec;
      rec.orbit_size = orbit.size();
      rec.stabilizer_order = exact_divide(n_fact, rec.orbit_size, "classify");
      rec.representative = *orbit.begin();
      for (const MonodromyRep& member : orbit) {
        if (!input.count(member)) {
          if (policy == ClosurePolicy::RequireClosed)
            throw ClosureError("input set is not conjugation-closed: orbit of " +
                               rep_key(seed) + " leaves it at " + rep_key(member));
          input.insert(member);
        }
        remaining.erase(member);
        if (collect_members) rec.member_keys.push_back(rep_key(member));
      }
      records.push_back(std::move(rec));
    }
  }

  std::sort(records.begin(), records.end(),
            [](const ConjugacyClassRecord& a, const ConjugacyClassRecord& b) {
              return a.representative < b.representative;
            });
  return records;
}

SurfaceReport surface_report(const ConjugacyClassRecord& record) {
  const MonodromyRep& rep = record.representative;
  SurfaceReport report;
  report.degree = rep.degree;
  report.chi = 1;
  report.k_squared = 10 - rep.degree;
  const GroupSummary image =
      summarize_generated_group({rep.a1, rep.a2, rep.b1, rep.b2, rep.sigma});
  report.image_order = image.order;
  report.image_transitive = image.transitive;
  report.galois = image.transitive && image.order == static_cast<std::uint64_t>(rep.degree);
  report.general_type_claimed = rep.degree >= 2 && rep.degree <= 9;
  return report;
}

std::vector<TableRow> table_report(int max_degree, int worker_count) {
  if (max_degree < 2)
    throw std::invalid_argument("table_report: max_degree must be >= 2");
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_degree; ++n) {
    TableRow row;
    row.degree = n;
    row.k_squared = 10 - n;

    SearchConfig config;
    config.degree = n;
    config.fix_sigma = true;
    config.worker_count = worker_count;
    EnumerationResult result = enumerate(config);
    row.total = result.total_count;
    row.fixed_sigma = result.fixed_sigma_count;
    row.enumerate_seconds = result.elapsed.count();

    const auto t0 = std::chrono::steady_clock::now();
    row.class_count = classify(result.solutions).size();
    row.classify_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace braidmono
