#include "catx/io.hpp"

#include <ostream>
#include <set>

namespace catx {

namespace {

std::vector<int> int_array(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

IndexSet parse_subset_key(std::string_view key, int n) {
  Json parsed;
  try {
    parsed = Json::parse(key);
  } catch (const Json::parse_error&) {
    throw InputError("malformed subset '" + std::string(key) + "'");
  }
  return index_set_from_json(parsed, n);
}

Rational rational_from_json(const Json& e) {
  if (e.is_number_integer()) return Rational(e.get<long>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

Json weyl_to_json(const RootSystem& rs, const WeylElement& w) { return Json(w.reduced_word(rs)); }

WeylElement weyl_from_json(const RootSystem& rs, const Json& word) {
  const auto letters = int_array(word, "Weyl word");
  return WeylElement::from_word(rs, letters);
}

Json index_set_to_json(IndexSet s) { return Json(s.indices()); }

IndexSet index_set_from_json(const Json& j, int n) {
  const auto idx = int_array(j, "index set");
  IndexSet s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > n) {
      throw InputError("index " + std::to_string(idx[k]) + " outside 1.." + std::to_string(n));
    }
    if (k > 0 && idx[k] <= idx[k - 1]) throw InputError("index set must be sorted without repeats");
    s.insert(idx[k]);
  }
  return s;
}

Json weight_to_json(const RootSystem& rs, const Weight& w) {
  Json j;
  j["coset_rep"] = weyl_to_json(rs, w.tchar.coset_rep);
  j["v"] = weyl_to_json(rs, w.v);
  return j;
}

Json character_to_json(const WeylGroup& W, const ModuleCharacter& c) {
  const auto& rs = W.root_system();
  std::set<FormalCharacter> bases;
  for (const auto& e : c.entries()) bases.insert(e.first.tchar.base);
  const bool mixed = bases.size() > 1;
  const FormalCharacter head = bases.empty() ? FormalCharacter{"theta", W.simple_indices()} : *bases.begin();

  Json j;
  j["type"] = rs.cartan_type().name();
  j["itheta"] = index_set_to_json(head.itheta);
  j["label"] = head.label;
  Json weights = Json::array();
  for (const auto& [w, m] : c.entries()) {
    Json e;
    if (mixed) {
      e["label"] = w.tchar.base.label;
      e["itheta"] = index_set_to_json(w.tchar.base.itheta);
    }
    e["coset_rep"] = weyl_to_json(rs, w.tchar.coset_rep);
    e["v"] = weyl_to_json(rs, w.v);
    e["mult"] = m;
    weights.push_back(std::move(e));
  }
  j["weights"] = std::move(weights);
  return j;
}

CharacterFile character_from_json(const Json& j, bool strict) {
  if (!j.is_object()) throw InputError("character file must be a JSON object");
  const CartanType type = CartanType::parse(require_string(j, "type"));
  const RootSystem rs = build_root_system(type);
  const int rank = rs.rank();
  const FormalCharacter head{require_string(j, "label"), index_set_from_json(require(j, "itheta"), rank)};

  const Json& weights = require(j, "weights");
  if (!weights.is_array()) throw InputError("field 'weights' must be an array");

  CharacterFile out{type, {}, false};
  for (const auto& e : weights) {
    FormalCharacter base = head;
    if (e.is_object() && e.contains("label")) base.label = require_string(e, "label");
    if (e.is_object() && e.contains("itheta")) base.itheta = index_set_from_json(e.at("itheta"), rank);

    const Json& mult = require(e, "mult");
    if (!mult.is_number_integer()) throw InputError("field 'mult' must be an integer");
    if (mult.get<long>() <= 0) throw InputError("nonpositive multiplicity");

    const WeylElement raw = weyl_from_json(rs, require(e, "coset_rep"));
    const WeylElement rep = min_coset_rep(raw, rs, base.itheta);
    if (rep != raw) {
      if (strict) {
        throw InputError("non-canonical coset_rep " + require(e, "coset_rep").dump() + " for I(theta) = " +
                         base.itheta.to_string());
      }
      out.canonicalized = true;
    }
    const WeylElement v = weyl_from_json(rs, require(e, "v"));
    out.character.add(Weight{TwistedCharacter{base, rep}, v}, mult.get<int>());
  }
  return out;
}

std::string write_character(const WeylGroup& W, const ModuleCharacter& c) {
  return character_to_json(W, c).dump(2) + "\n";
}

CharacterFile read_character(std::string_view text, bool strict) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return character_from_json(j, strict);
}

Json module_to_json(const AlgebraModule& M) {
  const int n = M.n();
  Json j;
  j["n"] = n;
  Json dims = Json::object();
  std::vector<IndexSet> verts = IndexSet::full(n).subsets();
  std::sort(verts.begin(), verts.end());
  for (IndexSet Y : verts) dims[Y.to_string()] = M.dim(Y);
  j["dims"] = std::move(dims);

  Json maps = Json::object();
  for (IndexSet Y : verts) {
    for (IndexSet Z : verts) {
      if (!Y.proper_subset_of(Z) || Z.size() != Y.size() + 1) continue;
      const Matrix& a = M.action(Y, Z);
      if (a.empty() || a.is_zero()) continue;
      Json rows = Json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
        rows.push_back(std::move(row));
      }
      maps[Y.to_string() + "->" + Z.to_string()] = std::move(rows);
    }
  }
  j["maps"] = std::move(maps);
  return j;
}

AlgebraModule module_from_json(const Json& j) {
  const Json& nj = require(j, "n");
  if (!nj.is_number_integer()) throw InputError("field 'n' must be an integer");
  const int n = nj.get<int>();
  if (n < 0 || n > 10) throw InputError("field 'n' must lie in 0..10");

  std::vector<std::size_t> dims(std::size_t{1} << n, 0);
  const Json& dj = require(j, "dims");
  if (!dj.is_object()) throw InputError("field 'dims' must be an object");
  for (const auto& [key, value] : dj.items()) {
    if (!value.is_number_integer() || value.get<long>() < 0) {
      throw InputError("dimension at " + key + " must be a non-negative integer");
    }
    dims[parse_subset_key(key, n).mask()] = value.get<std::size_t>();
  }

  std::map<AlgebraModule::MapKey, Matrix> maps;
  if (j.contains("maps")) {
    const Json& mj = j.at("maps");
    if (!mj.is_object()) throw InputError("field 'maps' must be an object");
    for (const auto& [key, value] : mj.items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) throw InputError("map key '" + key + "' must read \"[Y]->[Z]\"");
      const IndexSet Y = parse_subset_key(std::string_view(key).substr(0, arrow), n);
      const IndexSet Z = parse_subset_key(std::string_view(key).substr(arrow + 2), n);
      if (!value.is_array()) throw InputError("map " + key + " must be an array of rows");
      const std::size_t rows = value.size();
      const std::size_t cols = rows == 0 ? 0 : (value.at(0).is_array() ? value.at(0).size() : 0);
      Matrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = value.at(r);
        if (!row.is_array() || row.size() != cols) throw InputError("map " + key + " is not rectangular");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row.at(c));
      }
      if (!maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, std::move(m)).second) {
        throw InputError("map " + key + " given twice");
      }
    }
  }
  return AlgebraModule(n, std::move(dims), std::move(maps));
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) s += ' ';
    s += std::to_string(word[k]);
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k > 0) out << ',';
      out << csv_field(fields[k]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void cartan_csv(std::ostream& out, const RootSystem& rs) {
  std::vector<std::string> header{""};
  for (int i = 1; i <= rs.rank(); ++i) header.push_back("a" + std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  const auto& a = rs.cartan_matrix();
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<std::string> row{"a" + std::to_string(i + 1)};
    for (int v : a[i]) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  write_csv(out, header, rows);
}

void multiplicity_csv(std::ostream& out, const WeylGroup& W, const ModuleCharacter& c) {
  const auto& rs = W.root_system();
  std::vector<std::vector<std::string>> rows;
  for (const auto& [w, m] : c.entries()) {
    rows.push_back({w.tchar.base.label, w.tchar.base.itheta.to_string(),
                    word_string(w.tchar.coset_rep.reduced_word(rs)), word_string(w.v.reduced_word(rs)),
                    std::to_string(m)});
  }
  write_csv(out, {"label", "itheta", "coset_rep", "v", "mult"}, rows);
}

}  // namespace catx
