#include "jlog/fuzz.hpp"

#include "jlog/axioms.hpp"

#include <atomic>
#include <random>
#include <thread>

namespace jlog {

namespace {

constexpr unsigned kBound = 3;

struct TrialResult {
  std::size_t redrawn = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_scheme;
  std::vector<FuzzFailure> failures;
};

class Trial {
public:
  Trial(Dialect d, std::size_t trial, std::uint64_t seed)
      : d_(d), trial_(trial) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed),
                     static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(trial),
                     static_cast<std::uint32_t>(trial >> 32)};
    rng_.seed(ss);
  }

  TrialResult run() {
    TrialResult r;
    for (int i = 0; i < 3; ++i)
      pool_.push_back(prop(2));
    proof_leaves_ = {Term::proof_var(0), Term::proof_var(1)};
    auto ids = scheme_ids(d_);
    proof_leaves_.push_back(Term::constant("c_" + ids[pick(ids.size())]));
    if (d_ == Dialect::JEM)
      just_leaves_ = {Term::just_var(0), Term::just_var(1)};
    pool_.push_back(Formula::proof_of(proof_leaves_[pick(2)], prop(1)));
    pool_.push_back(Formula::just_of(just_term(1), prop(1)));

    // CS seeding over the propositional part of the pool keeps the tables
    // small; the instances below still draw from the whole pool.
    SaturationOptions options;
    options.bound = kBound;
    options.pool.assign(pool_.begin(), pool_.begin() + 3);
    options.cs_depth = 4;
    FiniteBasicEvaluation model;
    for (;;) {
      model = draw();
      Saturation s = saturate(model, cs_, options);
      if (check_basic_model(s.evaluation, cs_, options).empty()) {
        model = std::move(s.evaluation);
        break;
      }
      ++r.redrawn;
    }

    for (const auto &id : ids) {
      const AxiomScheme *scheme = find_scheme(id);
      for (int k = 0; k < 4; ++k) {
        Formula f = instantiate(scheme->pattern, binding());
        if (max_term_depth(f) > kBound)
          continue;
        ++r.instances;
        ++r.per_scheme[id];
        if (!eval_basic(model, f))
          r.failures.push_back({trial_, id, f});
      }
    }
    return r;
  }

private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return pick(2) == 0; }

  Formula prop(unsigned depth) {
    static const char *atoms[] = {"A", "B", "C"};
    if (depth == 0 || pick(3) == 0)
      return pick(10) == 0 ? Formula::bottom() : Formula::atom(atoms[pick(3)]);
    switch (pick(4)) {
    case 0:
      return Formula::implies(prop(depth - 1), prop(depth - 1));
    case 1:
      return Formula::conj(prop(depth - 1), prop(depth - 1));
    case 2:
      return Formula::disj(prop(depth - 1), prop(depth - 1));
    default:
      return Formula::neg(prop(depth - 1));
    }
  }

  Term proof_term(unsigned depth) {
    Term leaf = proof_leaves_[pick(proof_leaves_.size())];
    if (depth <= 1 || coin())
      return leaf;
    switch (pick(d_ == Dialect::JE ? 3 : 2)) {
    case 0:
      return Term::app(proof_term(depth - 1), proof_term(depth - 1));
    case 1:
      return Term::bang(proof_term(depth - 1));
    default:
      return Term::sum(proof_term(depth - 1), proof_term(depth - 1));
    }
  }

  Term just_term(unsigned depth) {
    if (d_ == Dialect::JE)
      return Term::e(proof_term(depth));
    Term leaf = just_leaves_[pick(just_leaves_.size())];
    if (depth <= 1 || coin())
      return leaf;
    if (coin())
      return Term::m(proof_term(depth - 1), just_term(depth - 1));
    return Term::just_sum(just_term(depth - 1), just_term(depth - 1));
  }

  Formula from_pool() {
    if (coin())
      return pool_[pick(pool_.size())];
    return prop(2);
  }

  FiniteBasicEvaluation draw() {
    FiniteBasicEvaluation e;
    e.dialect = d_;
    for (const char *a : {"A", "B", "C"})
      if (coin())
        e.true_atoms.insert(a);
    for (const auto &t : proof_leaves_)
      e.table[t];
    for (const auto &t : just_leaves_)
      e.table[t];
    // Proof variables only justify truths, which keeps ε factive.
    for (std::size_t i = 0; i < 2; ++i)
      for (const auto &f : pool_)
        if (f.kind() != Formula::Kind::ProofOf &&
            f.kind() != Formula::Kind::JustOf && eval_basic(e, f) && coin())
          e.table[proof_leaves_[i]].insert(f);
    for (int i = 0; i < 2; ++i) {
      Term t = just_term(d_ == Dialect::JE ? 1 : 2);
      for (const auto &f : pool_)
        if (coin())
          e.table[t].insert(f);
    }
    return e;
  }

  Binding binding() {
    Binding b;
    for (const char *f : {"F", "G", "H"})
      b.formulas[f] = from_pool();
    for (const char *t : {"L", "K"})
      b.terms[t] = proof_term(2);
    if (d_ == Dialect::JEM)
      for (const char *t : {"T", "S"})
        b.terms[t] = just_term(2);
    return b;
  }

  static unsigned max_term_depth(const Formula &f) {
    unsigned d = 0;
    if (f.kind() == Formula::Kind::ProofOf || f.kind() == Formula::Kind::JustOf)
      d = f.term().depth();
    for (std::size_t i = 0; i < f.child_count(); ++i)
      d = std::max(d, max_term_depth(f.child(i)));
    return d;
  }

  Dialect d_;
  std::size_t trial_;
  std::mt19937_64 rng_;
  ConstantSpec cs_ = ConstantSpec::total();
  std::vector<Formula> pool_;
  std::vector<Term> proof_leaves_;
  std::vector<Term> just_leaves_;
};

} // namespace

FuzzReport soundness_fuzz(Dialect dialect, std::size_t trials,
                          std::uint64_t seed, unsigned threads) {
  std::vector<TrialResult> results(trials);
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < trials;)
      results[i] = Trial(dialect, i, seed).run();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < trials; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  FuzzReport report;
  report.dialect = dialect;
  report.trials = trials;
  for (auto &r : results) {
    report.redrawn += r.redrawn;
    report.instances += r.instances;
    for (const auto &[id, n] : r.per_scheme)
      report.per_scheme[id] += n;
    for (auto &f : r.failures)
      report.failures.push_back(std::move(f));
  }
  return report;
}

} // namespace jlog
