#include "bicext/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "bicext/errors.hpp"
#include "bicext/semigroup.hpp"
#include "bicext/window.hpp"

namespace bicext {

namespace {

/// P3..P5 for the image of (0, 0, [a)), given the images already chosen for
/// the lower levels (front() is the identity).
std::optional<PruneRule> level_rule(const Element& image, const std::vector<Element>& lower,
                                    const OmegaClosedFamily& fam) {
  if (!is_idempotent(image)) return PruneRule::Idempotent;
  if (!natural_leq(image, lower.back(), fam)) return PruneRule::Order;
  if (std::find(lower.begin(), lower.end(), image) != lower.end()) return PruneRule::Distinct;
  return std::nullopt;
}

struct PartitionResult {
  std::vector<Candidate> candidates;
  std::map<PruneRule, std::uint64_t> pruned;
  std::map<std::string, std::uint64_t> rejected;
};

class Partition {
public:
  Partition(const OmegaClosedFamily& fam, const SearchBounds& b, const std::vector<Element>& pool,
            bool pruning)
      : fam_(fam), bounds_(b), pool_(pool), pruning_(pruning), identity_(fam.identity()) {
    const auto& levels = fam.lower_bounds();
    upper_levels_.assign(levels.begin() + 1, levels.end());
  }

  PartitionResult run(const Element& plus) {
    plus_ = plus;
    if (pruning_) {
      for (const Element& minus : pool_) {
        if (product(minus, plus) != identity_) {
          ++result_.pruned[PruneRule::Relation];
          continue;
        }
        minus_ = minus;
        chosen_ = {identity_};
        descend_pruned();
      }
    } else {
      for (const Element& base : pool_) {
        for (const Element& minus : pool_) {
          minus_ = minus;
          chosen_ = {base};
          descend_exhaustive();
        }
      }
    }
    return std::move(result_);
  }

private:
  void descend_pruned() {
    if (chosen_.size() == fam_.size()) {
      finish();
      return;
    }
    for (const Element& image : pool_) {
      if (auto rule = level_rule(image, chosen_, fam_)) {
        ++result_.pruned[*rule];
        continue;
      }
      chosen_.push_back(image);
      descend_pruned();
      chosen_.pop_back();
    }
  }

  void descend_exhaustive() {
    if (chosen_.size() == fam_.size()) {
      finish();
      return;
    }
    for (const Element& image : pool_) {
      chosen_.push_back(image);
      descend_exhaustive();
      chosen_.pop_back();
    }
  }

  void finish() {
    std::map<Nat, Element> idempotents;
    idempotents.emplace(fam_.min_bound(), chosen_.front());
    for (std::size_t idx = 0; idx < upper_levels_.size(); ++idx) {
      idempotents.emplace(upper_levels_[idx], chosen_[idx + 1]);
    }
    GeneratorTable table(fam_, plus_, minus_, std::move(idempotents));
    if (!check_monoid(table)) {
      ++result_.rejected["monoid"];
      return;
    }
    if (!check_homomorphism_on_window(table, bounds_.window)) {
      ++result_.rejected["homomorphism"];
      return;
    }
    if (!check_injective_on_window(table, bounds_.window)) {
      ++result_.rejected["injective"];
      return;
    }
    auto matched = match_named(table, bounds_.window);
    result_.candidates.push_back({std::move(table), std::move(matched)});
  }

  const OmegaClosedFamily& fam_;
  SearchBounds bounds_;
  const std::vector<Element>& pool_;
  bool pruning_;
  Element identity_;
  std::vector<Nat> upper_levels_;

  Element plus_ = Element::zero();
  Element minus_ = Element::zero();
  std::vector<Element> chosen_;
  PartitionResult result_;
};

bool fits(const EndoSpec& e, Nat bound) {
  const GeneratorTable t = as_table(e);
  auto within = [bound](const Element& x) {
    return !x.is_zero() && x.i() <= bound && x.j() <= bound;
  };
  if (!within(t.plus_image()) || !within(t.minus_image())) return false;
  return std::all_of(t.idempotent_images().begin(), t.idempotent_images().end(),
                     [&](const auto& kv) { return within(kv.second); });
}

std::string join_specs(const std::vector<EndoSpec>& specs) {
  std::string out;
  for (const auto& s : specs) {
    if (!out.empty()) out += ", ";
    out += to_string(s);
  }
  return out.empty() ? "none" : out;
}

bool passes_window_checks(const GeneratorTable& t, Nat window) {
  return check_monoid(t) && check_homomorphism_on_window(t, window) &&
         check_injective_on_window(t, window);
}

} // namespace

void validate_bounds(const SearchBounds& b) {
  if (b.image_bound < 1) {
    throw BoundsTooSmall("image bound must be at least 1, got " + std::to_string(b.image_bound));
  }
  if (b.window < 2) {
    throw BoundsTooSmall("verification window must be at least 2, got " + std::to_string(b.window));
  }
}

std::string to_string(PruneRule rule) {
  switch (rule) {
  case PruneRule::Monoid: return "P1_monoid";
  case PruneRule::Relation: return "P2_relation";
  case PruneRule::Idempotent: return "P3_idempotent";
  case PruneRule::Order: return "P4_order";
  case PruneRule::Distinct: return "P5_distinct";
  }
  return "unknown";
}

std::optional<PruneRule> first_pruning_rule(const GeneratorTable& t) {
  const OmegaClosedFamily& fam = t.family();
  const Element one = fam.identity();
  const auto& images = t.idempotent_images();
  if (images.at(fam.min_bound()) != one) return PruneRule::Monoid;
  if (product(t.minus_image(), t.plus_image()) != one) return PruneRule::Relation;
  std::vector<Element> lower{one};
  for (auto it = std::next(images.begin()); it != images.end(); ++it) {
    if (auto rule = level_rule(it->second, lower, fam)) return rule;
    lower.push_back(it->second);
  }
  return std::nullopt;
}

bool ClassificationReport::all_matched() const {
  return std::all_of(candidates.begin(), candidates.end(),
                     [](const Candidate& c) { return c.matched.has_value(); });
}

ClassificationReport enumerate_monoid_endos(const OmegaClosedFamily& fam, const SearchBounds& b,
                                            const SearchOptions& options) {
  validate_bounds(b);
  if (!fam.is_normalized()) {
    throw InvalidFamily("classification needs a normalized family containing [0)");
  }
  if (fam.size() > 3) {
    throw InvalidFamily("classification supports families of at most three inductive sets");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Element> pool = elements_up_to(fam, b.image_bound);

  std::vector<PartitionResult> parts(pool.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < pool.size(); idx = next++) {
      try {
        parts[idx] = Partition(fam, b, pool, options.pruning).run(pool[idx]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(pool.size(), 1)));
  {
    std::vector<std::jthread> pool_threads;
    for (unsigned t = 1; t < threads; ++t) pool_threads.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  ClassificationReport report{fam, b, options.pruning, {}, {}, {}, {}};
  if (options.pruning) {
    // The identity's image is fixed instead of ranging over the pool.
    report.pruned_counts[PruneRule::Monoid] = pool.size() - 1;
  }
  for (auto& part : parts) {
    for (auto& c : part.candidates) report.candidates.push_back(std::move(c));
    for (const auto& [rule, n] : part.pruned) report.pruned_counts[rule] += n;
    for (const auto& [key, n] : part.rejected) report.rejected_counts[key] += n;
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.table < y.table; });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::optional<EndoSpec> match_named(const GeneratorTable& t, Nat window) {
  const OmegaClosedFamily& fam = t.family();
  const Element& plus = t.plus_image();
  if (plus.is_zero() || plus.i() < 1) return std::nullopt;
  const Nat k = plus.i();

  std::optional<EndoSpec> guess;
  if (fam == families::f3()) {
    guess = AlphaBracket(k);
  } else if (fam == families::single(0)) {
    guess = Scale(k);
  } else if (fam == families::f2()) {
    const Element& e1 = t.idempotent_image(1);
    if (e1.is_zero()) return std::nullopt;
    const Nat p = e1.i();
    if (e1.level() == 1 && p <= k - 1) {
      guess = AlphaKP(k, p);
    } else if (e1.level() == 0 && k >= 2 && p >= 1 && p <= k - 1) {
      guess = BetaKP(k, p);
    }
  }
  if (guess && agree_on_window(*guess, t, window)) return guess;
  return std::nullopt;
}

std::vector<EndoSpec> named_specs_fitting(const OmegaClosedFamily& fam, Nat image_bound) {
  std::vector<EndoSpec> out;
  auto keep = [&](EndoSpec s) {
    if (fits(s, image_bound)) out.push_back(std::move(s));
  };
  for (Nat k = 1; k <= image_bound; ++k) {
    if (fam == families::f3()) {
      keep(AlphaBracket(k));
    } else if (fam == families::single(0)) {
      keep(Scale(k));
    } else if (fam == families::f2()) {
      for (Nat p = 0; p <= k - 1; ++p) keep(AlphaKP(k, p));
      for (Nat p = 1; p <= k - 1; ++p) keep(BetaKP(k, p));
    }
  }
  return out;
}

OracleResult verify_classification(const OmegaClosedFamily& fam, const SearchBounds& b,
                                   const SearchOptions& options) {
  OracleResult result{"classification {" + to_string(fam) + "}", false, {}, std::nullopt};
  ClassificationReport report = enumerate_monoid_endos(fam, b, options);

  std::vector<EndoSpec> matched;
  std::vector<GeneratorTable> unmatched;
  for (const auto& c : report.candidates) {
    if (c.matched) {
      matched.push_back(*c.matched);
    } else {
      unmatched.push_back(c.table);
    }
  }
  const std::vector<EndoSpec> expected = named_specs_fitting(fam, b.image_bound);
  std::vector<EndoSpec> missing;
  for (const auto& s : expected) {
    if (std::find(matched.begin(), matched.end(), s) == matched.end()) missing.push_back(s);
  }
  std::vector<EndoSpec> extra;
  for (const auto& s : matched) {
    if (std::find(expected.begin(), expected.end(), s) == expected.end()) extra.push_back(s);
  }

  result.passed = unmatched.empty() && missing.empty() && extra.empty() &&
                  matched.size() == expected.size();
  std::ostringstream summary;
  summary << report.candidates.size() << " candidates at image bound " << b.image_bound
          << ", window " << b.window << "; matched: " << join_specs(matched);
  if (!unmatched.empty()) {
    summary << "; UNMATCHED:";
    for (const auto& t : unmatched) summary << " " << to_string(EndoSpec(t));
  }
  if (!missing.empty()) summary << "; missing: " << join_specs(missing);
  if (!extra.empty()) summary << "; unexpected: " << join_specs(extra);
  result.summary = summary.str();
  result.report = std::move(report);
  return result;
}

OracleResult verify_classification_f3(const SearchBounds& b, const SearchOptions& options) {
  OracleResult result = verify_classification(families::f3(), b, options);
  result.name = "classification_f3";
  return result;
}

OracleResult verify_composition_monoid(Nat max_k) {
  if (max_k < 2) throw InvalidParameters("max k must be at least 2");
  constexpr Nat window = 8;
  OracleResult result{"composition_monoid", true, {}, std::nullopt};
  std::ostringstream failures;

  for (Nat k1 = 1; k1 <= max_k; ++k1) {
    for (Nat k2 = 1; k2 <= max_k; ++k2) {
      const EndoSpec a = AlphaBracket(k1);
      const EndoSpec b = AlphaBracket(k2);
      const EndoSpec expected = AlphaBracket(k1 * k2);
      const EndoSpec symbolic = compose_endo(a, b);
      // The table route composes generator images without the closed form.
      const EndoSpec tabulated = compose_endo(as_table(a), as_table(b));
      bool pointwise = agree_on_window(tabulated, expected, window);
      for (const Element& x : elements_up_to(families::f3(), window)) {
        pointwise = pointwise && apply_endo(symbolic, x) == apply_endo(b, apply_endo(a, x));
      }
      if (symbolic != expected || !pointwise) {
        result.passed = false;
        failures << " (" << k1 << "," << k2 << ")";
      }
    }
  }
  for (Nat k1 = 1; k1 <= max_k; ++k1) {
    for (Nat k2 = k1 + 1; k2 <= max_k; ++k2) {
      if (agree_on_window(AlphaBracket(k1), AlphaBracket(k2), window)) {
        result.passed = false;
        failures << " collision " << k1 << "~" << k2;
      }
    }
  }
  std::ostringstream summary;
  summary << "alpha_[k1] alpha_[k2] = alpha_[k1 k2] for k1, k2 <= " << max_k << " on window "
          << window << ", k -> alpha_[k] injective";
  if (!result.passed) summary << "; failures:" << failures.str();
  result.summary = summary.str();
  return result;
}

OracleResult verify_non_extension(const SearchBounds& b, const SearchOptions& options) {
  OracleResult result{"non_extension", true, {}, std::nullopt};
  const OmegaClosedFamily f3 = families::f3();
  const OmegaClosedFamily f01 = families::f2();
  ClassificationReport report = enumerate_monoid_endos(f3, b, options);
  std::ostringstream failures;

  std::vector<EndoSpec> restrictions;
  for (const auto& c : report.candidates) {
    try {
      const GeneratorTable r = restrict_to(c.table, f01);
      const auto m = match_named(r, b.window);
      const auto* alpha = m ? std::get_if<AlphaKP>(&*m) : nullptr;
      if (alpha == nullptr || alpha->p() != 0) {
        result.passed = false;
        failures << " " << to_string(EndoSpec(c.table)) << " restricts to "
                 << (m ? to_string(*m) : "an unnamed map");
      } else {
        restrictions.push_back(*m);
      }
    } catch (const NotClosedUnderRestriction& err) {
      result.passed = false;
      failures << " " << to_string(EndoSpec(c.table)) << ": " << err.what();
    }
  }

  // Replay: no extension of a forbidden {0,1} map survives, whatever the
  // image of (0, 0, [2)).
  const std::vector<Element> level2_images = elements_up_to(f3, b.image_bound);
  std::size_t replayed = 0;
  for (const EndoSpec& s : named_specs_fitting(f01, b.image_bound)) {
    const auto* alpha = std::get_if<AlphaKP>(&s);
    if (alpha != nullptr && alpha->p() == 0) continue;
    const GeneratorTable base = as_table(s);
    for (const Element& e2 : level2_images) {
      GeneratorTable ext(f3, base.plus_image(), base.minus_image(),
                         {{0, base.idempotent_image(0)}, {1, base.idempotent_image(1)}, {2, e2}});
      ++replayed;
      if (passes_window_checks(ext, b.window)) {
        result.passed = false;
        failures << " extension " << to_string(EndoSpec(ext)) << " of " << to_string(s) << " survives";
      }
    }
  }

  std::ostringstream summary;
  summary << report.candidates.size() << " candidates restrict to: " << join_specs(restrictions)
          << "; " << replayed << " extensions of alpha_{k,p>=1}/beta_{k,p} rejected";
  if (!result.passed) summary << "; failures:" << failures.str();
  result.summary = summary.str();
  result.report = std::move(report);
  return result;
}

OracleResult verify_fixed_point_criterion(Nat max_k, Nat window) {
  if (max_k < 2) throw InvalidParameters("max k must be at least 2");
  OracleResult result{"fixed_point_criterion", true, {}, std::nullopt};
  std::ostringstream failures;

  const auto all = elements_up_to(families::f3(), window);
  if (fixed_points_in_window(AlphaBracket(1), window) != all) {
    result.passed = false;
    failures << " alpha_[1] is not the identity on the window";
  }
  for (Nat k = 2; k <= max_k; ++k) {
    const auto fixed = fixed_points_in_window(AlphaBracket(k), window);
    const bool idempotent_only = std::all_of(fixed.begin(), fixed.end(), is_idempotent);
    if (!idempotent_only || fixed.size() >= 3) {
      result.passed = false;
      failures << " alpha_[" << k << "] has " << fixed.size() << " fixed points";
    }
  }
  std::ostringstream summary;
  summary << "alpha_[k], 2 <= k <= " << max_k << ": fewer than three fixed points, all idempotent, on window "
          << window << "; alpha_[1] fixes all " << all.size();
  if (!result.passed) summary << "; failures:" << failures.str();
  result.summary = summary.str();
  return result;
}

} // namespace bicext
