#pragma once

// Reading and writing variety data as JSON documents:
//
//   { "A": [["1","0","-1"], ...], "P": [[-3,4,0], ...],
//     "blocks": {"n": [1,1,1], "m": 0}, "l": [[3],[4],[4]],
//     "sigma_max": [[0,1,2]] }            or  "ample": {"free": [..], "torsion": [..]}
//
// Rationals are "p/q" strings (plain integers are accepted too), ray indices
// are 0-based. Unknown keys are ignored so that reports can be read back.

#include <json.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "acx/arrangement.hpp"

namespace acx {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

/// A malformed document; `where` is "line L, column C" or a JSON pointer.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct Document {
  std::string name;
  GavData data;
  Json raw;
};

namespace detail {

inline std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
inline std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

inline Int parse_int(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>()))
                                                             : Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex re("[+-]?[0-9]+");
    const std::string& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, re)) return Int(s[0] == '+' ? s.substr(1) : s);
    throw DocumentError(ptr, "malformed integer \"" + s + "\"");
  }
  throw DocumentError(ptr, "expected an integer, got " + std::string(j.type_name()));
}

inline Rat parse_rat(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rat(parse_int(j, ptr));
  if (!j.is_string()) throw DocumentError(ptr, "expected a rational \"p/q\", got " + std::string(j.type_name()));
  static const std::regex re("([+-]?[0-9]+)(?:/([+-]?[0-9]+))?");
  const std::string& s = j.get_ref<const std::string&>();
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw DocumentError(ptr, "malformed rational \"" + s + "\"");
  auto strip = [](std::string t) { return t[0] == '+' ? t.substr(1) : t; };
  Int num(strip(m[1].str()));
  Int den = m[2].matched ? Int(strip(m[2].str())) : Int(1);
  if (den == 0) throw DocumentError(ptr, "malformed rational \"" + s + "\": zero denominator");
  return make_rat(num, den);
}

inline const Json& array_at(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw DocumentError(ptr, "expected an array, got " + std::string(j.type_name()));
  return j;
}

inline std::vector<Int> parse_int_list(const Json& j, const std::string& ptr) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < array_at(j, ptr).size(); ++i) out.push_back(parse_int(j[i], child(ptr, i)));
  return out;
}

inline int parse_small(const Json& j, const std::string& ptr, int lo) {
  Int v = parse_int(j, ptr);
  if (v < lo || !v.fits_sint_p()) throw DocumentError(ptr, "value " + v.get_str() + " out of range");
  return static_cast<int>(v.get_si());
}

template <class T, class F>
Matrix<T> parse_matrix(const Json& j, const std::string& ptr, F entry) {
  array_at(j, ptr);
  if (j.empty()) throw DocumentError(ptr, "empty matrix");
  const std::size_t cols = array_at(j[0], child(ptr, 0)).size();
  Matrix<T> M(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row = child(ptr, i);
    if (array_at(j[i], row).size() != cols)
      throw DocumentError(row, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) M(i, k) = entry(j[i][k], child(row, k));
  }
  return M;
}

inline const Json& require_key(const Json& j, const std::string& ptr, const std::string& key) {
  if (!j.contains(key)) throw DocumentError(ptr.empty() ? "/" : ptr, "missing key \"" + key + "\"");
  return j[key];
}

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline Document document_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) throw DocumentError("/", "expected an object");
  Document doc;
  doc.raw = j;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("/name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  GavData& d = doc.data;

  const Json& blocks = require_key(j, "", "blocks");
  if (!blocks.is_object()) throw DocumentError("/blocks", "expected an object with keys n and m");
  for (const auto& x : parse_int_list(require_key(blocks, "/blocks", "n"), "/blocks/n")) {
    if (x < 1 || !x.fits_sint_p()) throw DocumentError("/blocks/n", "block sizes must be positive");
    d.n.push_back(static_cast<int>(x.get_si()));
  }
  if (d.n.size() < 2) throw DocumentError("/blocks/n", "need at least two blocks");
  d.m = blocks.contains("m") ? parse_small(blocks["m"], "/blocks/m", 0) : 0;
  d.r = static_cast<int>(d.n.size()) - 1;

  d.A = parse_matrix<Rat>(require_key(j, "", "A"), "/A", parse_rat);
  d.c = static_cast<int>(d.A.rows()) - 1;
  d.P = parse_matrix<Int>(require_key(j, "", "P"), "/P", parse_int);
  if (d.P.rows() < static_cast<std::size_t>(d.r))
    throw DocumentError("/P", "P has " + std::to_string(d.P.rows()) + " rows, need at least r = " + std::to_string(d.r));
  d.s = static_cast<int>(d.P.rows()) - d.r;

  const Json& l = array_at(require_key(j, "", "l"), "/l");
  for (std::size_t i = 0; i < l.size(); ++i) d.l.push_back(parse_int_list(l[i], child("/l", i)));

  const bool has_sigma = j.contains("sigma_max"), has_ample = j.contains("ample");
  if (has_sigma == has_ample) throw DocumentError("/", "exactly one of \"sigma_max\" and \"ample\" is required");
  if (has_sigma) {
    const Json& s = array_at(j["sigma_max"], "/sigma_max");
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<std::size_t> cone;
      const std::string ptr = child("/sigma_max", i);
      for (std::size_t k = 0; k < array_at(s[i], ptr).size(); ++k)
        cone.push_back(static_cast<std::size_t>(parse_small(s[i][k], child(ptr, k), 0)));
      cones.push_back(std::move(cone));
    }
    d.sigma_max = std::move(cones);
  } else if (j["ample"].is_string()) {
    if (j["ample"].get<std::string>() != "anticanonical")
      throw DocumentError("/ample", "expected a class or the string \"anticanonical\"");
    d.ample_anticanonical = true;
  } else {
    const Json& a = j["ample"];
    if (!a.is_object()) throw DocumentError("/ample", "expected an object with keys free and torsion");
    ClassElem u;
    u.free = parse_int_list(require_key(a, "/ample", "free"), "/ample/free");
    if (a.contains("torsion")) u.torsion = parse_int_list(a["torsion"], "/ample/torsion");
    d.ample = std::move(u);
  }
  return doc;
}

inline Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw DocumentError(detail::line_column(text, e.byte), pos == std::string::npos ? msg : msg.substr(pos));
  }
  return document_from_json(j);
}

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

// ---------------------------------------------------------------------------
// Writing. Integers that fit a machine word become numbers, others strings.

inline OJson to_json(const Int& x) {
  if (x.fits_slong_p()) return OJson(x.get_si());
  return OJson(x.get_str());
}

inline OJson to_json(const Rat& x) { return OJson(x.get_str()); }

template <class T>
OJson to_json(const std::vector<T>& v) {
  OJson a = OJson::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

template <class T>
OJson to_json(const Matrix<T>& M) {
  OJson a = OJson::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(to_json(M.row(i)));
  return a;
}

inline OJson to_json(const ClassElem& e) {
  OJson o;
  o["free"] = to_json(e.free);
  o["torsion"] = to_json(e.torsion);
  return o;
}

inline OJson to_json(const AbelianGroup& g) {
  OJson o;
  o["free_rank"] = g.free_rank;
  o["torsion"] = to_json(g.torsion);
  o["text"] = g.to_string();
  return o;
}

/// The input schema of a variety.
inline OJson document_json(const GavData& d, const std::string& name = "") {
  OJson o;
  if (!name.empty()) o["name"] = name;
  o["A"] = to_json(d.A);
  o["P"] = to_json(d.P);
  o["blocks"] = OJson{{"n", d.n}, {"m", d.m}};
  OJson l = OJson::array();
  for (const auto& li : d.l) l.push_back(to_json(li));
  o["l"] = l;
  if (d.sigma_max) {
    o["sigma_max"] = *d.sigma_max;
  } else if (d.ample_anticanonical) {
    o["ample"] = "anticanonical";
  } else if (d.ample) {
    o["ample"] = to_json(*d.ample);
  }
  return o;
}

}  // namespace acx
