#include "catx/suite.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace catx {

namespace {

const std::vector<std::string> kChecks{"algebra", "biclosed", "filtration", "order-axioms"};

const char* convention_name(JPrimeConvention c) {
  return c == JPrimeConvention::kIthetaMinusJ ? "itheta-minus-j" : "i-minus-j";
}

const char* nabla_weight_name(NablaWeight w) { return w == NablaWeight::kWInverse ? "w-inverse" : "wj-w-inverse"; }

bool selected(const SuiteConfig& cfg, const std::string& check) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), check) != cfg.checks.end();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json weights_json(const RootSystem& rs, const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(weight_to_json(rs, w));
  return out;
}

std::vector<IndexSet> itheta_models(const SuiteConfig& cfg, const CartanType& t) {
  std::vector<IndexSet> out;
  if (cfg.itheta.empty()) {
    out = IndexSet::full(t.rank()).subsets();
  } else {
    for (IndexSet s : cfg.itheta) {
      if (s.subset_of(IndexSet::full(t.rank()))) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FormalCharacter model(IndexSet itheta) { return FormalCharacter{"theta", itheta}; }

// J as a vertex of A_k, k = |I(theta)|: position p of I(theta) becomes index p.
IndexSet relabel(IndexSet J, IndexSet itheta) {
  IndexSet Y;
  const auto idx = itheta.indices();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (J.contains(idx[p])) Y.insert(static_cast<int>(p) + 1);
  }
  return Y;
}

void biclosed_records(const SuiteConfig& cfg, const WeylGroup& W, std::vector<SuiteRecord>& out) {
  Stopwatch clock;
  const auto& rs = W.root_system();
  const auto sets = enumerate_biclosed(W, Guard{cfg.override_limits});
  std::set<std::size_t> witnesses;
  Json missing = Json::array();
  for (const auto& b : sets) {
    if (b.witness) {
      witnesses.insert(W.index_of(*b.witness));
    } else {
      Json roots = Json::array();
      for (const auto& r : rs.to_roots(b.set)) roots.push_back(r.coords());
      missing.push_back(std::move(roots));
    }
  }
  SuiteRecord rec;
  rec.check = "biclosed";
  rec.params = {{"type", rs.cartan_type().name()}};
  rec.details = {{"biclosed_sets", sets.size()}, {"weyl_order", W.order()}, {"distinct_witnesses", witnesses.size()}};
  rec.pass = missing.empty() && sets.size() == W.order() && witnesses.size() == W.order();
  if (!rec.pass) rec.counterexample = {{"unwitnessed", missing}};
  rec.seconds = clock.seconds();
  out.push_back(std::move(rec));
}

void filtration_records(const SuiteConfig& cfg, const WeylGroup& W, std::map<int, IncidenceAlgebra>& algebras,
                        std::vector<SuiteRecord>& out) {
  const auto& rs = W.root_system();
  for (IndexSet itheta : itheta_models(cfg, rs.cartan_type())) {
    const FormalCharacter theta = model(itheta);
    const int k = itheta.size();
    if (!algebras.count(k)) algebras.emplace(k, build_incidence_algebra(k, Guard{cfg.override_limits}));
    std::map<std::uint32_t, std::size_t> injective;
    for (const auto& v : projective_injective_dims(algebras.at(k))) injective[v.vertex.mask()] = v.injective_dim;

    Stopwatch clock;
    const auto checks = verify_filtration(W, theta, cfg.convention, cfg.nabla_weight);
    const double per_check = clock.seconds() / static_cast<double>(std::max<std::size_t>(checks.size(), 1));

    std::map<std::uint32_t, std::vector<const FiltrationCheck*>> by_j;
    for (const auto& c : checks) by_j[c.J.mask()].push_back(&c);
    std::vector<IndexSet> js = itheta.subsets();
    std::sort(js.begin(), js.end());
    for (IndexSet J : js) {
      SuiteRecord rec;
      rec.check = "filtration";
      rec.params = {{"type", rs.cartan_type().name()}, {"itheta", index_set_to_json(itheta)},
                    {"J", index_set_to_json(J)}};
      Json verdicts = Json::object();
      Json failures = Json::object();
      long nabla_length = 0;
      for (const FiltrationCheck* c : by_j[J.mask()]) {
        verdicts[c->check] = c->pass;
        if (c->check == "nabla_factors") nabla_length = c->length;
        if (!c->pass) failures[c->check] = {{"detail", c->detail}, {"witnesses", weights_json(rs, c->witnesses)}};
        rec.seconds += per_check;
      }
      const long expected = 1L << J.size();
      const long incidence = static_cast<long>(injective.at(relabel(J, itheta).mask()));
      const bool bridge = nabla_length == expected && incidence == expected;
      verdicts["bridge"] = bridge;
      if (!bridge) {
        failures["bridge"] = {{"detail", "composition length " + std::to_string(nabla_length) + ", 2^|J| = " +
                                             std::to_string(expected) + ", dim I(Y) = " +
                                             std::to_string(incidence)}};
      }
      rec.details = {{"checks", verdicts}, {"nabla_length", nabla_length}, {"injective_dim", incidence}};
      rec.pass = failures.empty();
      if (!rec.pass) rec.counterexample = failures;
      out.push_back(std::move(rec));
    }
  }
}

void order_records(const SuiteConfig& cfg, const WeylGroup& W, std::vector<SuiteRecord>& out) {
  const auto& rs = W.root_system();
  for (IndexSet itheta : itheta_models(cfg, rs.cartan_type())) {
    Stopwatch clock;
    const auto weights = sweep_weights(W, model(itheta), cfg.convention, cfg.nabla_weight);
    const std::size_t samples = rs.rank() <= 2 ? 0 : cfg.order_samples;
    const OrderAxiomStats stats = check_order_axioms(W, weights, samples, cfg.seed);
    SuiteRecord rec;
    rec.check = "order-axioms";
    rec.params = {{"type", rs.cartan_type().name()}, {"itheta", index_set_to_json(itheta)}};
    rec.details = {{"weights", stats.weights},       {"related_pairs", stats.related_pairs},
                   {"exhaustive", stats.exhaustive}, {"chains_checked", stats.triples},
                   {"reflexive", stats.reflexive},   {"intransitive", stats.intransitive}};
    rec.pass = stats.pass();
    if (!rec.pass) rec.counterexample = {{"weights", weights_json(rs, stats.counterexample)}};
    rec.seconds = clock.seconds();
    out.push_back(std::move(rec));
  }
}

SuiteRecord algebra_record(int n, const std::string& name, bool pass, Json details, Json counterexample,
                           double seconds) {
  SuiteRecord rec;
  rec.check = "algebra";
  rec.params = {{"n", n}, {"property", name}};
  rec.pass = pass;
  rec.details = std::move(details);
  if (!pass) rec.counterexample = std::move(counterexample);
  rec.seconds = seconds;
  return rec;
}

void algebra_records(const SuiteConfig& cfg, std::vector<SuiteRecord>& out) {
  for (int n = 0; n <= cfg.algebra_n; ++n) {
    Stopwatch clock;
    const IncidenceAlgebra A = build_incidence_algebra(n, Guard{cfg.override_limits});
    std::size_t three_n = 1;
    for (int k = 0; k < n; ++k) three_n *= 3;
    out.push_back(algebra_record(n, "dimension", A.dim() == three_n, {{"dim", A.dim()}, {"expected", three_n}},
                                 nullptr, clock.seconds()));

    clock = Stopwatch();
    const RadicalInfo rad = algebra_radical(A);
    bool depth_ok = !rad.series.empty() && rad.series.back() == 0;
    if (n >= 1) {
      // rad^n != 0 and rad^{n+1} = 0.
      depth_ok = depth_ok && rad.series.size() == static_cast<std::size_t>(n) + 1 && rad.series[n - 1] != 0;
    }
    const bool rad_ok = rad.nilpotent && rad.split_semisimple_top && depth_ok;
    out.push_back(algebra_record(n, "radical", rad_ok, {{"series", rad.series}, {"rad_dim", rad.basis.size()}},
                                 {{"series", rad.series}}, clock.seconds()));

    clock = Stopwatch();
    const CartanExt ce = cartan_and_ext(A);
    bool containment = true;
    for (std::size_t y = 0; y < ce.vertices.size(); ++y) {
      for (std::size_t z = 0; z < ce.vertices.size(); ++z) {
        containment = containment && ce.cartan[y][z] == (ce.vertices[y].subset_of(ce.vertices[z]) ? 1 : 0);
      }
    }
    out.push_back(algebra_record(n, "cartan", containment && ce.determinant == 1,
                                 {{"determinant", to_string(ce.determinant)}, {"containment_pattern", containment}},
                                 {{"determinant", to_string(ce.determinant)}}, clock.seconds()));

    std::size_t arrows = 0;
    Json bad = Json::array();
    for (const auto& [yz, m] : ce.ext1) {
      arrows += static_cast<std::size_t>(m);
      const auto& [Y, Z] = yz;
      if (m != 1 || !Y.proper_subset_of(Z) || Z.size() != Y.size() + 1) {
        bad.push_back({Y.to_string(), Z.to_string(), m});
      }
    }
    const std::size_t expected_arrows = n == 0 ? 0 : static_cast<std::size_t>(n) << (n - 1);
    out.push_back(algebra_record(n, "ext1", bad.empty() && arrows == expected_arrows,
                                 {{"arrows", arrows}, {"expected", expected_arrows}}, {{"arrows", bad}},
                                 clock.seconds()));

    clock = Stopwatch();
    const HeredityReport her = heredity_chain_check(A);
    Json layers = Json::array();
    for (const auto& l : her.layers) {
      layers.push_back({{"level", l.level},
                        {"ideal_dim", l.ideal_dim},
                        {"idempotent", l.idempotent},
                        {"kills_radical", l.kills_radical},
                        {"semisimple_corner", l.semisimple_corner},
                        {"tensor_dim", l.tensor_dim},
                        {"image_dim", l.image_dim},
                        {"pass", l.pass()}});
    }
    out.push_back(algebra_record(n, "heredity", her.pass(), {{"layers", layers}}, {{"layers", layers}},
                                 clock.seconds()));

    clock = Stopwatch();
    bool pi_ok = true;
    Json rows = Json::array();
    for (const auto& v : projective_injective_dims(A)) {
      const std::size_t p = std::size_t{1} << (n - v.vertex.size());
      const std::size_t i = std::size_t{1} << v.vertex.size();
      const bool ok = v.projective_dim == p && v.injective_dim == i && v.projective_length == p &&
                      v.injective_length == i && v.multiplicity_free;
      pi_ok = pi_ok && ok;
      rows.push_back({{"vertex", v.vertex.to_string()}, {"projective", v.projective_dim}, {"injective", v.injective_dim}});
    }
    out.push_back(algebra_record(n, "projective_injective", pi_ok, {{"vertices", rows}}, {{"vertices", rows}},
                                 clock.seconds()));

    if (n <= 2) {
      clock = Stopwatch();
      const AlgebraModule reg = regular_module(A);
      std::multiset<std::vector<std::size_t>> expected;
      for (IndexSet Y : A.vertices()) {
        std::vector<std::size_t> dv(std::size_t{1} << n, 0);
        for (IndexSet Z : A.vertices()) {
          if (Y.subset_of(Z)) dv[Z.mask()] = 1;
        }
        expected.insert(dv);
      }
      bool ks_ok = true;
      Json seeds = Json::array();
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto parts = krull_schmidt_decompose(A, reg, cfg.seed + s, Guard{cfg.override_limits});
        std::multiset<std::vector<std::size_t>> got;
        bool local = true;
        for (const auto& p : parts) {
          for (int m = 0; m < p.multiplicity; ++m) got.insert(p.module.dim_vector());
          local = local && p.certified_local;
        }
        ks_ok = ks_ok && local && got == expected;
        seeds.push_back({{"seed", cfg.seed + s}, {"summands", got.size()}, {"certified_local", local}});
      }
      out.push_back(algebra_record(n, "krull_schmidt_regular", ks_ok, {{"runs", seeds}}, {{"runs", seeds}},
                                   clock.seconds()));
    }
  }
}

}  // namespace

const char* tool_version() {
#ifdef CATX_VERSION
  return CATX_VERSION;
#else
  return "unknown";
#endif
}

void SuiteConfig::validate() const {
  if (max_rank > 4 && !override_limits) throw InputError("max_rank > 4 needs the override flag");
  for (const auto& c : checks) {
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) throw InputError("unknown check '" + c + "'");
  }
  for (const auto& t : types) {
    if (t.rank() > max_rank) throw InputError("type " + t.name() + " exceeds max_rank " + std::to_string(max_rank));
    for (IndexSet s : itheta) {
      if (!s.subset_of(IndexSet::full(t.rank()))) {
        throw InputError("I(theta) = " + s.to_string() + " is not a subset of I for " + t.name());
      }
    }
  }
  const bool needs_types = selected(*this, "biclosed") || selected(*this, "filtration") || selected(*this, "order-axioms");
  if (needs_types && types.empty()) throw InputError("no Cartan types given");
  if (algebra_n < 0) throw InputError("algebra n must be non-negative");
}

SuiteConfig parse_suite_config(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  SuiteConfig cfg;
  auto get_int = [&](const char* key, auto& target) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    target = j.at(key).get<std::decay_t<decltype(target)>>();
  };
  if (j.contains("override")) {
    if (!j.at("override").is_boolean()) throw InputError("field 'override' must be a boolean");
    cfg.override_limits = j.at("override").get<bool>();
  }
  get_int("max_rank", cfg.max_rank);
  get_int("seed", cfg.seed);
  get_int("algebra_n", cfg.algebra_n);
  get_int("order_samples", cfg.order_samples);

  if (j.contains("types")) {
    if (!j.at("types").is_array()) throw InputError("field 'types' must be an array of strings");
    for (const auto& t : j.at("types")) {
      if (!t.is_string()) throw InputError("field 'types' must be an array of strings");
      cfg.types.push_back(CartanType::parse(t.get<std::string>()));
    }
  }
  if (j.contains("itheta")) {
    const Json& it = j.at("itheta");
    if (it.is_string()) {
      if (it.get<std::string>() != "all-subsets") throw InputError("itheta must be \"all-subsets\" or a list");
    } else if (it.is_array()) {
      for (const auto& s : it) cfg.itheta.push_back(index_set_from_json(s, 32));
      if (cfg.itheta.empty()) throw InputError("itheta list is empty");
    } else {
      throw InputError("itheta must be \"all-subsets\" or a list");
    }
  }
  if (j.contains("checks")) {
    if (!j.at("checks").is_array()) throw InputError("field 'checks' must be an array of strings");
    for (const auto& c : j.at("checks")) {
      if (!c.is_string()) throw InputError("field 'checks' must be an array of strings");
      cfg.checks.push_back(c.get<std::string>());
    }
  }
  if (cfg.checks.empty()) cfg.checks = kChecks;
  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw InputError("field 'output' must be a string");
    cfg.output_path = j.at("output").get<std::string>();
  }
  if (j.contains("jprime_convention")) {
    const Json& c = j.at("jprime_convention");
    const std::string name = c.is_string() ? c.get<std::string>() : "";
    if (name == "itheta-minus-j") {
      cfg.convention = JPrimeConvention::kIthetaMinusJ;
    } else if (name == "i-minus-j") {
      cfg.convention = JPrimeConvention::kIMinusJ;
    } else {
      throw InputError("jprime_convention must be \"itheta-minus-j\" or \"i-minus-j\"");
    }
  }
  if (j.contains("nabla_weight")) {
    const Json& c = j.at("nabla_weight");
    const std::string name = c.is_string() ? c.get<std::string>() : "";
    if (name == "w-inverse") {
      cfg.nabla_weight = NablaWeight::kWInverse;
    } else if (name == "wj-w-inverse") {
      cfg.nabla_weight = NablaWeight::kWJWInverse;
    } else {
      throw InputError("nabla_weight must be \"w-inverse\" or \"wj-w-inverse\"");
    }
  }
  cfg.validate();
  return cfg;
}

Json config_to_json(const SuiteConfig& cfg) {
  Json types = Json::array();
  for (const auto& t : cfg.types) types.push_back(t.name());
  Json itheta;
  if (cfg.itheta.empty()) {
    itheta = "all-subsets";
  } else {
    itheta = Json::array();
    for (IndexSet s : cfg.itheta) itheta.push_back(index_set_to_json(s));
  }
  return {{"types", types},
          {"max_rank", cfg.max_rank},
          {"itheta", itheta},
          {"checks", cfg.checks},
          {"output", cfg.output_path},
          {"seed", cfg.seed},
          {"jprime_convention", convention_name(cfg.convention)},
          {"nabla_weight", nabla_weight_name(cfg.nabla_weight)},
          {"algebra_n", cfg.algebra_n},
          {"order_samples", cfg.order_samples},
          {"override", cfg.override_limits}};
}

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const SuiteRecord& r) { return r.pass; });
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "catx-report/1";
  j["tool_version"] = tool_version();
  j["stabilizer_model"] = "Stab_W(theta) = W_{I(theta)}";
  j["config"] = config_to_json(config);
  j["status"] = pass() ? "pass" : "fail";
  const auto failed = std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return !r.pass; });
  j["summary"] = {{"records", records.size()}, {"failed", failed}};
  Json recs = Json::array();
  Json seconds = Json::array();
  for (const auto& r : records) {
    recs.push_back({{"check", r.check},
                    {"params", r.params},
                    {"pass", r.pass},
                    {"details", r.details},
                    {"counterexample", r.counterexample}});
    seconds.push_back(r.seconds);
  }
  j["records"] = std::move(recs);
  j["timing"] = {{"timestamp", timestamp}, {"total_seconds", total_seconds}, {"record_seconds", seconds}};
  return j;
}

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Stopwatch clock;
  Report report;
  report.config = cfg;
  report.timestamp = utc_timestamp();

  std::map<int, IncidenceAlgebra> algebras;
  for (const auto& t : cfg.types) {
    const WeylGroup W(t, Guard{cfg.override_limits});
    if (selected(cfg, "biclosed")) biclosed_records(cfg, W, report.records);
    if (selected(cfg, "filtration")) filtration_records(cfg, W, algebras, report.records);
    if (selected(cfg, "order-axioms")) order_records(cfg, W, report.records);
  }
  if (selected(cfg, "algebra")) algebra_records(cfg, report.records);

  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const SuiteRecord& a, const SuiteRecord& b) { return a.check < b.check; });
  report.total_seconds = clock.seconds();
  return report;
}

int exit_code(const Report& report) { return report.pass() ? 0 : 1; }

}  // namespace catx
