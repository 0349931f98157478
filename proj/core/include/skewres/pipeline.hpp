#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewres/serialize.hpp"

namespace skewres {

/// Outcome of comparing a computed colon ideal with its conjectured value.
struct ConjectureReport {
  int conjecture = 0;
  int n = 0;
  std::string field;
  std::vector<std::string> computed;
  std::vector<std::string> conjectured;
  bool equal = false;
  /// Conjecture 2 for even n: the Pfaffian vanishes and there is nothing to check.
  bool vacuous = false;
  std::size_t computed_basis_size = 0;
  std::size_t conjectured_basis_size = 0;
  double seconds = 0;
  std::string note;

  bool holds() const { return equal || vacuous; }
};

nlohmann::json to_json(const ConjectureReport& r);

/// Thrown when a stage of the pipeline finds its premise false.
class ConjectureFailure : public MathError {
 public:
  explicit ConjectureFailure(ConjectureReport report);
  const ConjectureReport& report() const { return report_; }

 private:
  ConjectureReport report_;
};

/// (I_i : g_ii) against <g_1(i-1) .. g_(i-1)(i-1), y_i> (+ Delta_(i)i for odd i),
/// computed in the model's ring. i defaults to the model's n.
template <class K>
ConjectureReport verify_conjecture1(const SkewModel<K>& model, int i = 0);

/// (<g_1(i-1) .. g_(i-1)(i-1)> : Delta_(i)i) against <y_1 .. y_(i-1)>; vacuous for even i.
template <class K>
ConjectureReport verify_conjecture2(const SkewModel<K>& model, int i = 0);

enum class ResolveMode { pipeline, direct };
std::string to_string(ResolveMode m);
ResolveMode parse_mode(std::string_view text);

/// Part of every cache key; bump when results may change.
inline constexpr const char* kCodeVersion = "1.0.0";

/// On-disk store of final resolutions keyed by (n, field, mode, code version).
/// Writes go to a temporary file that is renamed into place.
class ResolutionCache {
 public:
  explicit ResolutionCache(std::filesystem::path dir);

  /// Directory from SKEWRES_CACHE_DIR, if set and nonempty.
  static std::optional<ResolutionCache> from_environment();

  std::filesystem::path path_for(int n, const FieldSpec& field, ResolveMode mode) const;

  /// Cached complex, accepted only if it parses and passes the probabilistic rank check.
  template <class K>
  std::optional<ChainComplex<K>> load(int n, const FieldSpec& field, ResolveMode mode) const;

  template <class K>
  void store(int n, const FieldSpec& field, ResolveMode mode, const ChainComplex<K>& c) const;

 private:
  std::filesystem::path dir_;
};

template <class K>
struct StageRecord {
  int i = 0;
  /// "seed", "T", "C", "L" or "direct".
  std::string name;
  /// Even-i T stage: reuses the previous L resolution unchanged.
  bool identity = false;
  /// Ranks of the mapping cone before minimalization; empty for stages without a cone.
  std::vector<std::size_t> cone_ranks;
  std::size_t cancellations = 0;
  ChainComplex<K> complex;
  /// Generators of the ideal this stage resolves.
  std::vector<Polynomial<K>> ideal;
  double seconds = 0;
};

template <class K>
nlohmann::json stage_to_json(const StageRecord<K>& s);

struct PipelineOptions {
  /// Run verify_resolution on the final complex.
  bool verify = true;
  ResolutionCheckOptions check{};
  /// Called as each stage finishes.
  std::function<void(const std::string&)> log;
  /// Final resolutions are read from and written to this cache when set.
  std::optional<ResolutionCache> cache;
};

template <class K>
struct PipelineRun {
  int n = 0;
  FieldSpec field;
  ResolveMode mode = ResolveMode::pipeline;
  std::vector<StageRecord<K>> stages;
  std::vector<ConjectureReport> conjectures;
  std::optional<ResolutionReport> verification;
  bool from_cache = false;
  double seconds = 0;

  const ChainComplex<K>& resolution() const { return stages.back().complex; }
};

/// Minimal resolution of the ideal generated by `gens` by iterated minimal syzygies.
template <class K>
ChainComplex<K> direct_resolution(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens);

/// Minimal free resolution of R/L_n, either through the inductive cone
/// construction or directly. Throws ConjectureFailure when a premise fails.
/// The computation runs in the degree reverse lexicographic ring of the n-system.
template <class K>
PipelineRun<K> resolve_L(int n, FieldSpec field, ResolveMode mode, const PipelineOptions& options = {});

}  // namespace skewres
