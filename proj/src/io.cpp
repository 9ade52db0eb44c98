#include "pcolor/io.hpp"

#include <json.hpp>

namespace pcolor {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string item_path(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

const ordered_json& expect(const ordered_json& doc, const std::string& path,
                           const std::string& key) {
  if (!doc.is_object()) throw ValidationError(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(path + "/" + key, "missing field");
  return *it;
}

std::int64_t expect_int(const ordered_json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ValidationError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string expect_string(const ordered_json& v, const std::string& path) {
  if (!v.is_string()) throw ValidationError(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::int64_t> expect_coords(const ordered_json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path, "expected a coordinate array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(expect_int(v[i], item_path(path, i)));
  return out;
}

Scalar parse_scalar(const FieldSpec& field, const ordered_json& v, const std::string& path) {
  try {
    return Scalar::parse(field, expect_string(v, path));
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(path, e.what());
  }
}

FieldSpec parse_field(const ordered_json& v, const std::string& path) {
  const std::string kind = expect_string(expect(v, path, "kind"), path + "/kind");
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    const std::string p = expect_string(expect(v, path, "p"), path + "/p");
    std::uint64_t value = 0;
    for (char c : p) {
      if (c < '0' || c > '9' || value > (std::uint64_t(1) << 62)) {
        throw ValidationError(path + "/p", "expected a decimal prime, got '" + p + "'");
      }
      value = value * 10 + (c - '0');
    }
    try {
      return FieldSpec::prime_field(value);
    } catch (const Error& e) {
      throw ValidationError(path + "/p", e.what());
    }
  }
  throw ValidationError(path + "/kind", "expected 'rational' or 'prime', got '" + kind + "'");
}

SCMap parse_constants(const ordered_json& doc, const FieldSpec& field,
                      const std::string& key) {
  SCMap out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  const std::string base = "/" + key;
  if (!it->is_array()) throw ValidationError(base, "expected an array of entries");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const ordered_json& entry = (*it)[i];
    const std::string path = item_path(base, i);
    const int left = static_cast<int>(expect_int(expect(entry, path, "left"), path + "/left"));
    const int right =
        static_cast<int>(expect_int(expect(entry, path, "right"), path + "/right"));
    const ordered_json& terms = expect(entry, path, "terms");
    if (!terms.is_array()) throw ValidationError(path + "/terms", "expected an array");
    std::vector<std::pair<int, Scalar>> parsed;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tpath = item_path(path + "/terms", t);
      const ordered_json& term = terms[t];
      const int index =
          static_cast<int>(expect_int(expect(term, tpath, "index"), tpath + "/index"));
      parsed.emplace_back(index,
                          parse_scalar(field, expect(term, tpath, "coeff"), tpath + "/coeff"));
    }
    if (!out.emplace(std::pair{left, right}, std::move(parsed)).second) {
      throw ValidationError(path, "duplicate entry for this basis pair");
    }
  }
  return out;
}

}  // namespace

ColorAlgebra parse_algebra(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    if (const auto cut = what.find("] "); cut != std::string::npos) what = what.substr(cut + 2);
    throw ParseError("", what);
  }
  if (!doc.is_object()) throw ValidationError("", "expected a JSON object");

  const ordered_json& jgroup = expect(doc, "", "group");
  const int free_rank = static_cast<int>(
      expect_int(expect(jgroup, "/group", "free_rank"), "/group/free_rank"));
  std::vector<std::int64_t> torsion;
  if (auto it = jgroup.find("torsion"); it != jgroup.end()) {
    torsion = expect_coords(*it, "/group/torsion");
  }
  GroupSpec group(free_rank, std::move(torsion));

  const FieldSpec field = parse_field(expect(doc, "", "field"), "/field");

  GroupElement g0;
  try {
    g0 = group.element(expect_coords(expect(doc, "", "g0"), "/g0"));
  } catch (const SpecMismatch& e) {
    throw ValidationError("/g0", e.what());
  }

  const ordered_json& jbic = expect(doc, "", "bicharacter");
  if (!jbic.is_array()) throw ValidationError("/bicharacter", "expected a matrix");
  Bicharacter::Matrix values;
  for (std::size_t i = 0; i < jbic.size(); ++i) {
    const std::string rpath = item_path("/bicharacter", i);
    if (!jbic[i].is_array()) throw ValidationError(rpath, "expected a matrix row");
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < jbic[i].size(); ++j) {
      row.push_back(parse_scalar(field, jbic[i][j], item_path(rpath, j)));
    }
    values.push_back(std::move(row));
  }
  const Bicharacter eps = Bicharacter::create(group, field, std::move(values));

  const ordered_json& jbasis = expect(doc, "", "basis");
  if (!jbasis.is_array()) throw ValidationError("/basis", "expected an array");
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < jbasis.size(); ++i) {
    const std::string bpath = item_path("/basis", i);
    const std::string name =
        expect_string(expect(jbasis[i], bpath, "name"), bpath + "/name");
    GroupElement degree;
    try {
      degree = group.element(
          expect_coords(expect(jbasis[i], bpath, "degree"), bpath + "/degree"));
    } catch (const SpecMismatch& e) {
      throw ValidationError(bpath + "/degree", e.what());
    }
    basis.push_back({name, std::move(degree)});
  }

  SCMap bracket = parse_constants(doc, field, "bracket");
  SCMap product = parse_constants(doc, field, "product");
  return ColorAlgebra::create(group, field, eps, g0, std::move(basis), std::move(bracket),
                              std::move(product));
}

std::string serialize_algebra(const ColorAlgebra& algebra) {
  ordered_json doc;
  doc["group"] = {{"free_rank", algebra.group().free_rank},
                  {"torsion", algebra.group().torsion}};
  if (algebra.field().is_prime_field()) {
    doc["field"] = {{"kind", "prime"}, {"p", std::to_string(algebra.field().p)}};
  } else {
    doc["field"] = {{"kind", "rational"}};
  }
  doc["g0"] = algebra.g0().coords;
  ordered_json matrix = ordered_json::array();
  for (const auto& row : algebra.epsilon().values()) {
    ordered_json jrow = ordered_json::array();
    for (const Scalar& v : row) jrow.push_back(v.str());
    matrix.push_back(std::move(jrow));
  }
  doc["bicharacter"] = std::move(matrix);
  ordered_json jbasis = ordered_json::array();
  for (const BasisVector& v : algebra.basis()) {
    jbasis.push_back({{"name", v.name}, {"degree", v.degree.coords}});
  }
  doc["basis"] = std::move(jbasis);
  const auto constants = [](const SCMap& sc) {
    ordered_json entries = ordered_json::array();
    for (const auto& [key, out] : sc) {
      ordered_json terms = ordered_json::array();
      for (const auto& [k, c] : out) terms.push_back({{"index", k}, {"coeff", c.str()}});
      entries.push_back(
          {{"left", key.first}, {"right", key.second}, {"terms", std::move(terms)}});
    }
    return entries;
  };
  doc["bracket"] = constants(algebra.bracket_constants());
  doc["product"] = constants(algebra.product_constants());
  return doc.dump(2) + "\n";
}

}  // namespace pcolor
