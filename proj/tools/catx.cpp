// catx: command-line front end for the root-system, character and incidence
// algebra computations. Exit codes: 0 success, 1 a check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catx/suite.hpp"

namespace {

using namespace catx;

struct Common {
  std::string type = "A2";
  std::string itheta;
  bool itheta_given = false;
  std::string j;
  std::string kind = "M";
  std::string label = "theta";
  int n = -1;  // unset
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
  bool csv = false;
  bool strict = false;
  bool override_limits = false;
  std::string convention = "itheta-minus-j";
  std::string nabla_weight = "w-inverse";
  std::string tie_break = "default";
  std::string config;
  std::vector<std::string> types;
  std::vector<std::string> checks;
  std::vector<std::string> itheta_list;
  int max_rank = 4;
  int algebra_n = -1;
  std::string input;
};

// "1,3", "[1,3]" or "" (the empty set).
IndexSet parse_subset(const std::string& text, int rank) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InputError("malformed subset '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  IndexSet out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("malformed subset '" + text + "'");
    }
    if (k < 1 || k > rank) throw InputError("index " + std::to_string(k) + " outside 1.." + std::to_string(rank));
    out.insert(k);
  }
  return out;
}

JPrimeConvention parse_convention(const std::string& s) {
  return s == "i-minus-j" ? JPrimeConvention::kIMinusJ : JPrimeConvention::kIthetaMinusJ;
}

NablaWeight parse_nabla_weight(const std::string& s) {
  return s == "wj-w-inverse" ? NablaWeight::kWJWInverse : NablaWeight::kWInverse;
}

void emit(const Common& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw InputError("cannot write '" + opt.out + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string coords_string(const Root& r) {
  std::string s = "(";
  for (std::size_t k = 0; k < r.coords().size(); ++k) s += (k ? "," : "") + std::to_string(r.coords()[k]);
  return s + ")";
}

int cmd_roots(const Common& opt) {
  const RootSystem rs = build_root_system(CartanType::parse(opt.type), Guard{opt.override_limits});
  if (opt.csv) {
    std::ostringstream s;
    cartan_csv(s, rs);
    emit(opt, s.str());
    return 0;
  }
  if (opt.json) {
    Json j;
    j["type"] = rs.cartan_type().name();
    j["cartan_matrix"] = rs.cartan_matrix();
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots()) roots.push_back(r.coords());
    j["positive_roots"] = roots;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << rs.cartan_type().name() << ": " << rs.num_positive() << " positive roots\n";
  for (const auto& r : rs.positive_roots()) s << "  ht " << r.height() << "  " << coords_string(r) << "\n";
  emit(opt, s.str());
  return 0;
}

int cmd_weyl(const Common& opt) {
  const WeylGroup W(CartanType::parse(opt.type), Guard{opt.override_limits});
  const auto& rs = W.root_system();
  const IndexSet J = parse_subset(opt.j, rs.rank());
  const auto reps = min_coset_reps(W, J);
  const WeylElement wJ = longest_element(rs, J);
  if (opt.json) {
    Json j;
    j["type"] = rs.cartan_type().name();
    j["order"] = W.order();
    j["J"] = index_set_to_json(J);
    j["longest_element"] = weyl_to_json(rs, wJ);
    Json elems = Json::array();
    for (const auto& w : reps) {
      elems.push_back({{"word", weyl_to_json(rs, w)}, {"length", w.length()},
                       {"descents", index_set_to_json(w.descent_set())}});
    }
    j["min_coset_reps"] = elems;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << rs.cartan_type().name() << ": |W| = " << W.order() << ", J = " << J.to_string() << ", w_J = ["
    << word_string(wJ.reduced_word(rs)) << "], |X_J| = " << reps.size() << "\n";
  for (const auto& w : reps) {
    s << "  [" << word_string(w.reduced_word(rs)) << "]  length " << w.length() << "  descents "
      << w.descent_set().to_string() << "\n";
  }
  emit(opt, s.str());
  return 0;
}

int cmd_char(const Common& opt) {
  const WeylGroup W(CartanType::parse(opt.type), Guard{opt.override_limits});
  const int rank = W.rank();
  const IndexSet itheta = opt.itheta_given ? parse_subset(opt.itheta, rank) : W.simple_indices();
  const IndexSet J = parse_subset(opt.j, rank);
  const FormalCharacter theta{opt.label, itheta};
  ModuleCharacter c;
  if (opt.kind == "M") {
    c = ch_M(W, theta, J);
  } else if (opt.kind == "E") {
    c = ch_E(W, theta, J);
  } else {
    c = ch_nabla(W, theta, J, parse_convention(opt.convention), parse_nabla_weight(opt.nabla_weight));
  }
  if (opt.csv) {
    std::ostringstream s;
    multiplicity_csv(s, W, c);
    emit(opt, s.str());
  } else {
    emit(opt, write_character(W, c));
  }
  return 0;
}

std::string factors_text(const Decomposition& d) {
  std::ostringstream s;
  for (const auto& [k, m] : d.factors) s << "  E(" << k.theta.label << ")_" << k.J.to_string() << " : " << m << "\n";
  return s.str();
}

int cmd_decompose(const Common& opt) {
  const CharacterFile file = read_character(read_file(opt.input), opt.strict);
  if (file.canonicalized) std::cerr << "warning: non-canonical coset_rep replaced by its minimal representative\n";
  const WeylGroup W(file.type, Guard{opt.override_limits});
  DecomposeOptions options;
  options.seed = opt.seed;
  options.tie_break = opt.tie_break == "reversed" ? TieBreak::kReversed
                      : opt.tie_break == "seeded" ? TieBreak::kSeeded
                                                  : TieBreak::kDefault;
  const Decomposition d = decompose_character(W, file.character, options);
  const auto& rs = W.root_system();
  if (opt.json) {
    Json j;
    j["type"] = file.type.name();
    j["canonicalized"] = file.canonicalized;
    Json factors = Json::array();
    for (const auto& [k, m] : d.factors) {
      factors.push_back({{"label", k.theta.label}, {"itheta", index_set_to_json(k.theta.itheta)},
                         {"J", index_set_to_json(k.J)}, {"mult", m}});
    }
    j["factors"] = factors;
    j["complete"] = d.complete();
    j["negative_multiplicity"] = d.negative_multiplicity;
    j["missing_weight"] = d.missing_weight ? weight_to_json(rs, *d.missing_weight) : Json(nullptr);
    j["remainder"] = character_to_json(W, d.remainder)["weights"];
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "factors:\n" << factors_text(d);
    if (!d.complete()) {
      s << "remainder: " << d.remainder.total() << " weight(s)";
      if (d.negative_multiplicity) s << " (a simple character did not fit)";
      s << "\n";
    }
    emit(opt, s.str());
  }
  return d.complete() ? 0 : 1;
}

int cmd_verify(const Common& opt) {
  SuiteConfig cfg;
  if (!opt.config.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(opt.config));
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("malformed config: ") + e.what());
    }
    cfg = parse_suite_config(j);
  } else {
    cfg.checks = opt.checks.empty() ? std::vector<std::string>{"biclosed", "filtration", "order-axioms", "algebra"}
                                    : opt.checks;
    cfg.max_rank = opt.max_rank;
    cfg.override_limits = opt.override_limits;
    for (const auto& t : opt.types) cfg.types.push_back(CartanType::parse(t));
    for (const auto& s : opt.itheta_list) cfg.itheta.push_back(parse_subset(s, 32));
  }
  // Command-line values refine a config file.
  if (!opt.out.empty()) cfg.output_path = opt.out;
  if (opt.seed != 0) cfg.seed = opt.seed;
  if (opt.convention != "itheta-minus-j") cfg.convention = parse_convention(opt.convention);
  if (opt.nabla_weight != "w-inverse") cfg.nabla_weight = parse_nabla_weight(opt.nabla_weight);
  if (opt.override_limits) cfg.override_limits = true;
  if (opt.algebra_n >= 0) cfg.algebra_n = opt.algebra_n;
  cfg.validate();

  const Report report = run_suite(cfg);
  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output_path);
    if (!f) throw InputError("cannot write '" + cfg.output_path + "'");
    f << text;
    std::cerr << (report.pass() ? "PASS" : "FAIL") << ": " << report.records.size() << " records -> "
              << cfg.output_path << "\n";
  }
  return exit_code(report);
}

int cmd_algebra(Common opt) {
  if (!opt.input.empty()) {
    const AlgebraModule M = module_from_json(Json::parse(read_file(opt.input)));
    if (opt.n >= 0 && M.n() != opt.n) {
      throw InputError("module is over A_" + std::to_string(M.n()) + ", not A_" + std::to_string(opt.n));
    }
    opt.n = M.n();
    const IncidenceAlgebra A = build_incidence_algebra(opt.n, Guard{opt.override_limits});
    const auto parts = krull_schmidt_decompose(A, M, opt.seed, Guard{opt.override_limits});
    Json j;
    j["n"] = opt.n;
    j["total_dim"] = M.total_dim();
    Json summands = Json::array();
    bool local = true;
    for (const auto& p : parts) {
      summands.push_back({{"multiplicity", p.multiplicity}, {"certified_local", p.certified_local},
                          {"module", module_to_json(p.module)}});
      local = local && p.certified_local;
    }
    j["summands"] = summands;
    emit(opt, j.dump(2) + "\n");
    return local ? 0 : 1;
  }

  if (opt.n < 0) opt.n = 2;
  const IncidenceAlgebra A = build_incidence_algebra(opt.n, Guard{opt.override_limits});
  const RadicalInfo rad = algebra_radical(A);
  const CartanExt ce = cartan_and_ext(A);
  const HeredityReport her = heredity_chain_check(A);
  if (opt.csv) {
    std::vector<std::string> header{""};
    for (IndexSet Y : ce.vertices) header.push_back(Y.to_string());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t y = 0; y < ce.vertices.size(); ++y) {
      std::vector<std::string> row{ce.vertices[y].to_string()};
      for (long v : ce.cartan[y]) row.push_back(std::to_string(v));
      rows.push_back(std::move(row));
    }
    std::ostringstream s;
    write_csv(s, header, rows);
    emit(opt, s.str());
    return 0;
  }
  Json j;
  j["n"] = opt.n;
  j["dim"] = A.dim();
  j["radical_series"] = rad.series;
  j["cartan_determinant"] = to_string(ce.determinant);
  Json arrows = Json::array();
  for (const auto& [yz, m] : ce.ext1) arrows.push_back({yz.first.to_string(), yz.second.to_string(), m});
  j["ext1"] = arrows;
  Json layers = Json::array();
  for (const auto& l : her.layers) layers.push_back({{"level", l.level}, {"ideal_dim", l.ideal_dim}, {"pass", l.pass()}});
  j["heredity"] = {{"pass", her.pass()}, {"layers", layers}};
  if (opt.json) {
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "A_" << opt.n << ": dim " << A.dim() << ", rad series " << j["radical_series"].dump() << ", det C = "
      << to_string(ce.determinant) << ", " << arrows.size() << " Ext^1 arrows, heredity chain "
      << (her.pass() ? "passes" : "FAILS") << " (" << her.layers.size() << " layers)\n";
    emit(opt, s.str());
  }
  return her.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catx: Weyl-group combinatorics, characters and incidence algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(catx::tool_version()));
  Common opt;

  auto add_type = [&](CLI::App* c) { c->add_option("--type", opt.type, "Cartan type, e.g. A2, B3, G2"); };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", opt.out, "write to this file instead of stdout");
    c->add_flag("--override", opt.override_limits, "lift the size guards");
  };
  auto add_convention = [&](CLI::App* c) {
    c->add_option("--jprime-convention", opt.convention, "indexing of nabla")
        ->check(CLI::IsMember({"itheta-minus-j", "i-minus-j"}));
    c->add_option("--nabla-weight", opt.nabla_weight, "v-component of the nabla weights")
        ->check(CLI::IsMember({"w-inverse", "wj-w-inverse"}));
  };

  auto* roots = app.add_subcommand("roots", "positive roots and Cartan matrix");
  add_type(roots);
  add_output(roots);
  roots->add_flag("--json", opt.json);
  roots->add_flag("--csv", opt.csv, "Cartan matrix as CSV");

  auto* weyl = app.add_subcommand("weyl", "Weyl group order, w_J and X_J");
  add_type(weyl);
  add_output(weyl);
  weyl->add_option("--j", opt.j, "subset J, e.g. 1,2");
  weyl->add_flag("--json", opt.json);

  auto* chr = app.add_subcommand("char", "character of M, E or nabla as JSON");
  add_type(chr);
  add_output(chr);
  add_convention(chr);
  chr->add_option("--itheta", opt.itheta, "I(theta), e.g. 1 or [] (default: all of I)");
  chr->add_option("--j", opt.j, "subset J of I(theta)");
  chr->add_option("--kind", opt.kind)->check(CLI::IsMember({"M", "E", "nabla"}));
  chr->add_option("--label", opt.label, "label of theta");
  chr->add_flag("--csv", opt.csv, "multiplicity table as CSV");

  auto* dec = app.add_subcommand("decompose", "decompose a character file into simple characters");
  dec->add_option("file", opt.input, "character JSON")->required();
  add_output(dec);
  dec->add_flag("--json", opt.json);
  dec->add_flag("--strict", opt.strict, "reject non-canonical coset representatives");
  dec->add_option("--tie-break", opt.tie_break)->check(CLI::IsMember({"default", "reversed", "seeded"}));
  dec->add_option("--seed", opt.seed);

  auto* ver = app.add_subcommand("verify", "run the verification suite and write a JSON report");
  ver->add_option("--config", opt.config, "suite config JSON");
  ver->add_option("--type", opt.types, "Cartan types (repeatable)");
  ver->add_option("--itheta", opt.itheta_list, "I(theta) models (repeatable; default all subsets)");
  ver->add_option("--checks", opt.checks, "biclosed, filtration, order-axioms, algebra");
  ver->add_option("--max-rank", opt.max_rank);
  ver->add_option("--n", opt.algebra_n, "largest n for the algebra check");
  ver->add_option("--seed", opt.seed);
  add_output(ver);
  add_convention(ver);

  auto* alg = app.add_subcommand("algebra", "structure of A_n, or Krull-Schmidt of a module");
  alg->add_option("--n", opt.n, "n for A_n (default 2, or the module's n)");
  alg->add_option("--module", opt.input, "module JSON to decompose");
  alg->add_option("--seed", opt.seed);
  alg->add_flag("--json", opt.json);
  alg->add_flag("--csv", opt.csv, "Cartan matrix as CSV");
  add_output(alg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.itheta_given = chr->count("--itheta") > 0;

  try {
    if (*roots) return cmd_roots(opt);
    if (*weyl) return cmd_weyl(opt);
    if (*chr) return cmd_char(opt);
    if (*dec) return cmd_decompose(opt);
    if (*ver) return cmd_verify(opt);
    if (*alg) return cmd_algebra(opt);
  } catch (const catx::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const catx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
