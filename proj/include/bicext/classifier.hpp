#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicext/endomorphism.hpp"

namespace bicext {

/// image_bound caps every coordinate of a generator image; window is the
/// verification window. A window below 2 cannot reach the products where a
/// level-2 set shifts down by exactly one level.
struct SearchBounds {
  Nat image_bound = 4;
  Nat window = 6;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Throws BoundsTooSmall unless image_bound >= 1 and window >= 2.
void validate_bounds(const SearchBounds& b);

enum class PruneRule {
  Monoid,     // P1: the identity is fixed
  Relation,   // P2: (0,1,[m)) · (1,0,[m)) = identity is preserved
  Idempotent, // P3: idempotent generators map to idempotents
  Order,      // P4: (0,0,[a)) ≼ (0,0,[a-1)) is preserved
  Distinct,   // P5: distinct idempotent generators have distinct images
};

std::string to_string(PruneRule rule);

/// The first rule a complete table violates, in search order: P1, P2, then
/// P3, P4, P5 for each level in turn. A violated rule implies a failing
/// direct check on every window >= 1: P1 -> check_monoid, P2..P4 ->
/// homomorphism, P5 -> injectivity.
std::optional<PruneRule> first_pruning_rule(const GeneratorTable& t);

struct Candidate {
  GeneratorTable table;
  std::optional<EndoSpec> matched;
};

struct ClassificationReport {
  OmegaClosedFamily family;
  SearchBounds bounds;
  bool pruning = true;
  std::vector<Candidate> candidates; // sorted by table
  std::map<PruneRule, std::uint64_t> pruned_counts;
  /// Complete tables that reached the direct checks and failed one, keyed by
  /// "monoid", "homomorphism" or "injective".
  std::map<std::string, std::uint64_t> rejected_counts;
  std::chrono::milliseconds elapsed{0};

  bool all_matched() const;
};

struct SearchOptions {
  bool pruning = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Every generator table with images in elements_up_to(fam, image_bound) that
/// passes check_monoid, check_homomorphism_on_window and
/// check_injective_on_window at the bounds' window, each matched against the
/// named families of the domain. The search is partitioned by the image of
/// (1,0,[0)); partitions run concurrently and merge in canonical order.
///
/// Requires a normalized family with 1 to 3 inductive sets.
ClassificationReport enumerate_monoid_endos(const OmegaClosedFamily& fam, const SearchBounds& b,
                                            const SearchOptions& options = {});

/// Named spec over the table's family that agrees with it on the window:
/// α_[k] over {0,1,2}, α_{k,p} or β_{k,p} over {0,1}, scale k over {0}.
/// k is read from the image of (1,0,[0)) and p from the image of (0,0,[1)).
std::optional<EndoSpec> match_named(const GeneratorTable& t, Nat window);

/// All named specs over fam whose generator images fit the bound, in
/// increasing (k, p) with α before β.
std::vector<EndoSpec> named_specs_fitting(const OmegaClosedFamily& fam, Nat image_bound);

struct OracleResult {
  std::string name;
  bool passed = false;
  std::string summary;
  std::optional<ClassificationReport> report;
};

/// Every candidate over fam matches a named spec and every named spec that
/// fits the bound is among the matches.
OracleResult verify_classification(const OmegaClosedFamily& fam, const SearchBounds& b,
                                   const SearchOptions& options = {});

/// verify_classification over {[0), [1), [2)}.
OracleResult verify_classification_f3(const SearchBounds& b, const SearchOptions& options = {});

/// α_[k1] α_[k2] = α_[k1 k2] symbolically and on the window 8, for all
/// k1, k2 <= max_k, and k -> α_[k] is injective on {1, ..., max_k}.
OracleResult verify_composition_monoid(Nat max_k);

/// Every {0,1,2} candidate restricts on {[0), [1)} to α_{k,0}; additionally
/// no table extending α_{k,p} (p >= 1) or β_{k,p} within the bound survives
/// the window checks, for any level-2 image.
OracleResult verify_non_extension(const SearchBounds& b, const SearchOptions& options = {});

/// For k in 2..max_k the window fixed points of α_[k] are idempotent and fewer
/// than three; for k = 1 every window element is fixed.
OracleResult verify_fixed_point_criterion(Nat max_k, Nat window);

} // namespace bicext
