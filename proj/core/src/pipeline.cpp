#include "skewres/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace skewres {

namespace {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class K>
std::vector<std::string> texts(const std::vector<Polynomial<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

template <class K>
int stage_index(const SkewModel<K>& model, int i) {
  if (i == 0) i = model.n();
  if (i < 3 || i > model.n()) throw MathError("conjecture index must lie in [3, n]");
  return i;
}

}  // namespace

nlohmann::json to_json(const ConjectureReport& r) {
  return {{"conjecture", r.conjecture},
          {"n", r.n},
          {"field", r.field},
          {"computed", r.computed},
          {"conjectured", r.conjectured},
          {"equal", r.equal},
          {"vacuous", r.vacuous},
          {"computed_basis_size", r.computed_basis_size},
          {"conjectured_basis_size", r.conjectured_basis_size},
          {"seconds", r.seconds},
          {"note", r.note}};
}

namespace {

std::string failure_message(const ConjectureReport& r) {
  return "conjecture " + std::to_string(r.conjecture) + " fails at n = " + std::to_string(r.n) +
         (r.note.empty() ? "" : ": " + r.note);
}

}  // namespace

ConjectureFailure::ConjectureFailure(ConjectureReport report)
    : MathError(failure_message(report)), report_(std::move(report)) {}

template <class K>
ConjectureReport verify_conjecture1(const SkewModel<K>& model, int i) {
  i = stage_index(model, i);
  Stopwatch clock;
  const auto& ring = model.ring();
  ConjectureReport report;
  report.conjecture = 1;
  report.n = i;
  report.field = ring->field().name();
  std::vector<Polynomial<K>> ig;
  for (int k = 1; k < i; ++k) ig.push_back(model.generator(k, i));
  std::vector<Polynomial<K>> conj;
  for (int k = 1; k < i; ++k) conj.push_back(model.generator(k, i - 1));
  conj.push_back(model.y(i));
  if (i % 2 == 1) conj.push_back(model.pfaffian_minor(i, i));
  Ideal<K> computed = colon(Ideal<K>(ring, ig), model.generator(i, i));
  Ideal<K> conjectured(ring, conj);
  report.computed = texts(computed.generators());
  report.conjectured = texts(conjectured.generators());
  report.equal = ideal_equal(computed, conjectured);
  report.computed_basis_size = computed.groebner_basis()->size();
  report.conjectured_basis_size = conjectured.groebner_basis()->size();
  if (!report.equal) {
    report.note = conjectured.contains(computed) ? "computed colon is strictly smaller than conjectured"
                  : computed.contains(conjectured) ? "computed colon is strictly larger than conjectured"
                                                   : "computed and conjectured ideals are incomparable";
  }
  report.seconds = clock.seconds();
  return report;
}

template <class K>
ConjectureReport verify_conjecture2(const SkewModel<K>& model, int i) {
  i = stage_index(model, i);
  Stopwatch clock;
  const auto& ring = model.ring();
  ConjectureReport report;
  report.conjecture = 2;
  report.n = i;
  report.field = ring->field().name();
  Polynomial<K> delta = model.pfaffian_minor(i, i);
  std::vector<Polynomial<K>> ys;
  for (int j = 1; j < i; ++j) ys.push_back(model.y(j));
  Ideal<K> conjectured(ring, ys);
  report.conjectured = texts(conjectured.generators());
  if (i % 2 == 0) {
    report.vacuous = delta.is_zero();
    report.note = report.vacuous ? "Delta_(" + std::to_string(i) + ")" + std::to_string(i) +
                                       " = 0 (odd-order Pfaffian); conjecture vacuous for even n"
                                 : "Delta is nonzero for even n, contrary to expectation";
  } else if (delta.is_zero()) {
    report.note = "Delta vanishes for odd n";
  } else {
    std::vector<Polynomial<K>> base;
    for (int k = 1; k < i; ++k) base.push_back(model.generator(k, i - 1));
    Ideal<K> computed = colon(Ideal<K>(ring, base), delta);
    report.computed = texts(computed.generators());
    report.equal = ideal_equal(computed, conjectured);
    report.computed_basis_size = computed.groebner_basis()->size();
    report.conjectured_basis_size = conjectured.groebner_basis()->size();
    if (!report.equal) report.note = "computed colon differs from <y_1 .. y_(n-1)>";
  }
  report.seconds = clock.seconds();
  return report;
}

std::string to_string(ResolveMode m) { return m == ResolveMode::pipeline ? "pipeline" : "direct"; }

ResolveMode parse_mode(std::string_view text) {
  if (text == "pipeline") return ResolveMode::pipeline;
  if (text == "direct") return ResolveMode::direct;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

template <class K>
nlohmann::json stage_to_json(const StageRecord<K>& s) {
  nlohmann::json doc{{"i", s.i},
                     {"stage", s.name},
                     {"identity", s.identity},
                     {"ranks", s.complex.ranks()},
                     {"cancellations", s.cancellations},
                     {"seconds", s.seconds}};
  if (!s.cone_ranks.empty()) doc["cone_ranks"] = s.cone_ranks;
  return doc;
}

template <class K>
ChainComplex<K> direct_resolution(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens) {
  std::vector<ModuleElement<K>> elems;
  for (const auto& g : gens) {
    auto moved = g.in_ring(ring);
    if (moved.is_zero()) continue;
    if (!moved.is_homogeneous()) throw MathError("direct resolution needs homogeneous generators");
    elems.push_back({moved});
  }
  if (elems.empty()) throw MathError("direct resolution of the zero ideal");
  auto keep = minimal_generator_indices(ring, 1, elems, {0});
  PolyMatrix<K> d1(ring, 1, keep.size());
  std::vector<int> degrees;
  for (std::size_t c = 0; c < keep.size(); ++c) {
    d1(0, c) = elems[keep[c]][0];
    degrees.push_back(d1(0, c).degree());
  }
  std::vector<GradedFreeModule> modules{GradedFreeModule({0}), GradedFreeModule(degrees)};
  std::vector<PolyMatrix<K>> ds{std::move(d1)};
  while (true) {
    const auto& d = ds.back();
    auto kernel = syzygies(d, modules[modules.size() - 2].degrees(), modules.back().degrees());
    if (kernel.generators.cols() == 0) break;
    modules.emplace_back(kernel.degrees);
    ds.push_back(std::move(kernel.generators));
  }
  return ChainComplex<K>(ring, std::move(modules), std::move(ds));
}

template <class K>
PipelineRun<K> resolve_L(int n, FieldSpec field, ResolveMode mode, const PipelineOptions& options) {
  if (n < 3) throw MathError("resolutions are built for n >= 3");
  Stopwatch total;
  SkewModel<K> model(n, field, MonomialOrder::degrevlex());
  const auto& ring = model.ring();
  auto log = [&](const std::string& msg) {
    if (options.log) options.log(msg);
  };
  PipelineRun<K> run;
  run.n = n;
  run.field = field;
  run.mode = mode;

  std::optional<ChainComplex<K>> cached;
  if (options.cache) cached = options.cache->template load<K>(n, field, mode);
  if (cached) {
    run.from_cache = true;
    run.stages.push_back(StageRecord<K>{n, "cached", false, {}, 0, *cached, model.generators(n), 0});
    log("loaded L" + std::to_string(n) + " from cache, ranks " + join_sizes(cached->ranks()));
  } else if (mode == ResolveMode::direct) {
    Stopwatch clock;
    auto c = direct_resolution(ring, model.generators(n));
    run.stages.push_back(StageRecord<K>{n, "direct", false, {}, 0, c, model.generators(n), clock.seconds()});
    log("direct L" + std::to_string(n) + ": ranks " + join_sizes(c.ranks()));
  } else {
    Stopwatch seed_clock;
    auto seed = direct_resolution(ring, model.generators(3));
    run.stages.push_back(StageRecord<K>{3, "seed", false, {}, 0, seed, model.generators(3), seed_clock.seconds()});
    log("seed L3: ranks " + join_sizes(seed.ranks()));
    ChainComplex<K> previous = seed;
    for (int i = 4; i <= n; ++i) {
      const std::string is = std::to_string(i);
      // T_i = L_(i-1) + <Delta_(i)i>
      Stopwatch t_clock;
      auto t_ideal = model.generators(i - 1);
      std::optional<ChainComplex<K>> t_complex;
      if (i % 2 == 1) {
        auto rep = verify_conjecture2(model, i);
        run.conjectures.push_back(rep);
        log("conjecture 2 at n = " + is + ": " + (rep.equal ? "equal" : "NOT equal"));
        if (!rep.holds()) throw ConjectureFailure(rep);
        auto delta = model.pfaffian_minor(i, i);
        std::vector<Polynomial<K>> ys;
        for (int j = 1; j < i; ++j) ys.push_back(model.y(j));
        auto phi = lift_chain_map(koszul(ys), previous, delta);
        auto cone = mapping_cone(phi);
        auto mr = minimalize(cone);
        t_ideal.push_back(delta);
        run.stages.push_back(StageRecord<K>{i, "T", false, cone.ranks(), mr.total_cancellations(), mr.complex, t_ideal,
                                            t_clock.seconds()});
        log("T" + is + ": cone " + join_sizes(cone.ranks()) + " -> " + join_sizes(mr.complex.ranks()) + ", " +
            std::to_string(mr.total_cancellations()) + " cancellations");
        t_complex = mr.complex;
      } else {
        run.stages.push_back(StageRecord<K>{i, "T", true, {}, 0, previous, t_ideal, t_clock.seconds()});
        log("T" + is + " = L" + std::to_string(i - 1) + " (identity stage)");
        t_complex = previous;
      }

      // C_i = T_i + <y_i>
      Stopwatch c_clock;
      auto rep1 = verify_conjecture1(model, i);
      run.conjectures.push_back(rep1);
      log("conjecture 1 at n = " + is + ": " + (rep1.equal ? "equal" : "NOT equal"));
      if (!rep1.holds()) throw ConjectureFailure(rep1);
      auto c_complex = tensor_length_one(*t_complex, model.y(i));
      auto c_ideal = t_ideal;
      c_ideal.push_back(model.y(i));
      run.stages.push_back(StageRecord<K>{i, "C", false, {}, 0, c_complex, c_ideal, c_clock.seconds()});
      log("C" + is + ": ranks " + join_sizes(c_complex.ranks()));

      // L_i = I_i + <g_ii>
      Stopwatch l_clock;
      auto gens = model.generators(i);
      std::vector<Polynomial<K>> ig(gens.begin(), gens.end() - 1);
      auto phi = lift_chain_map(c_complex, koszul(ig), gens.back());
      auto cone = mapping_cone(phi);
      auto mr = minimalize(cone);
      run.stages.push_back(StageRecord<K>{i, "L", false, cone.ranks(), mr.total_cancellations(), mr.complex, gens,
                                          l_clock.seconds()});
      log("L" + is + ": cone " + join_sizes(cone.ranks()) + " -> " + join_sizes(mr.complex.ranks()) + ", " +
          std::to_string(mr.total_cancellations()) + " cancellations");
      previous = mr.complex;
    }
  }

  if (options.cache && !run.from_cache) options.cache->store(n, field, mode, run.resolution());
  if (options.verify) {
    run.verification = verify_resolution(run.resolution(), Ideal<K>(ring, model.generators(n)), options.check);
    log(std::string("verification: ") + (run.verification->passed() ? "pass" : "FAIL"));
  }
  run.seconds = total.seconds();
  return run;
}

// ---------------------------------------------------------------------------
// Cache

ResolutionCache::ResolutionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResolutionCache> ResolutionCache::from_environment() {
  const char* dir = std::getenv("SKEWRES_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return ResolutionCache(dir);
}

std::filesystem::path ResolutionCache::path_for(int n, const FieldSpec& field, ResolveMode mode) const {
  std::string tag = field.kind == FieldKind::rational ? "QQ" : "ZZp" + std::to_string(field.prime);
  return dir_ / ("L" + std::to_string(n) + "-" + tag + "-" + to_string(mode) + "-v" + kCodeVersion + ".json");
}

template <class K>
std::optional<ChainComplex<K>> ResolutionCache::load(int n, const FieldSpec& field, ResolveMode mode) const {
  auto path = path_for(n, field, mode);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto c = parse_complex<K>(buf.str());
    SkewModel<K> model(n, field, MonomialOrder::degrevlex());
    if (!c.ring()->same_as(*model.ring())) return std::nullopt;
    ResolutionCheckOptions quick;
    quick.symbolic = false;
    if (!verify_resolution(c, Ideal<K>(model.ring(), model.generators(n)), quick).passed()) return std::nullopt;
    return c;
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <class K>
void ResolutionCache::store(int n, const FieldSpec& field, ResolveMode mode, const ChainComplex<K>& c) const {
  std::filesystem::create_directories(dir_);
  auto path = path_for(n, field, mode);
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << serialize_complex(c);
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

#define SKEWRES_INSTANTIATE(K)                                                                                   \
  template ConjectureReport verify_conjecture1(const SkewModel<K>&, int);                                        \
  template ConjectureReport verify_conjecture2(const SkewModel<K>&, int);                                        \
  template nlohmann::json stage_to_json(const StageRecord<K>&);                                                  \
  template ChainComplex<K> direct_resolution(const RingPtr<K>&, const std::vector<Polynomial<K>>&);              \
  template PipelineRun<K> resolve_L(int, FieldSpec, ResolveMode, const PipelineOptions&);                        \
  template std::optional<ChainComplex<K>> ResolutionCache::load<K>(int, const FieldSpec&, ResolveMode) const;    \
  template void ResolutionCache::store<K>(int, const FieldSpec&, ResolveMode, const ChainComplex<K>&) const;

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
