#pragma once

// Command layer behind the numgk executable. Every command returns a
// Document; rendering to json, csv or markdown is a separate step so the
// commands stay testable without a process boundary.

#include "numgk/entropy.hpp"
#include "numgk/errors.hpp"
#include "numgk/explorer.hpp"
#include "numgk/factor.hpp"
#include "numgk/surfaces.hpp"
#include "numgk/tables.hpp"

#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace numgk::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw ParseError("unknown format: " + std::string(s));
}

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Document {
  Json json;                    // single object, unless lines is non-empty
  std::vector<Json> lines;      // JSON-lines payload (search)
  std::vector<Table> tables;    // csv / markdown payload
};

// ---------------------------------------------------------------- options

/// Precedence: explicit flag, then NUMGK_DIGITS, then the default.
inline unsigned resolve_digits(std::optional<long long> flag, const char* env = std::getenv("NUMGK_DIGITS")) {
  long long v = kDefaultDigits;
  if (flag) {
    v = *flag;
  } else if (env && *env) {
    try {
      v = detail::parse_int(env);
    } catch (const ParseError&) {
      throw ParseError("NUMGK_DIGITS must be an integer, got '" + std::string(env) + "'");
    }
  }
  if (v < 1 || v > static_cast<long long>(kMaxDigits))
    throw ParseError("digits must be in [1, " + std::to_string(kMaxDigits) + "], got " + std::to_string(v));
  return static_cast<unsigned>(v);
}

/// Surface grammar:
///   bielliptic:<t>            t in 1..7
///   k3[:d=<d>]                d >= 1, default 1
///   enriques:l=<l>[,d=<d>]    K3 base, cover order 2
///   abelian:type=<t>,l=<l>    bielliptic base, cover order n
/// Block surfaces take gram_K from `gram_k` when given, else -I_l.
inline SurfaceModel parse_surface(std::string_view spec, const std::optional<Matrix>& gram_k = std::nullopt) {
  const std::string text(detail::trim(spec));
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);

  std::vector<std::pair<std::string, long long>> kv;
  long long bare = 0;
  bool has_bare = false;
  if (!rest.empty()) {
    for (auto part : detail::split_top(rest, ',')) {
      part = detail::trim(part);
      auto eq = part.find('=');
      if (eq == std::string_view::npos) {
        if (has_bare || !kv.empty()) throw ParseError("malformed surface spec: " + text);
        bare = detail::parse_int(part);
        has_bare = true;
        continue;
      }
      kv.emplace_back(std::string(detail::trim(part.substr(0, eq))), detail::parse_int(part.substr(eq + 1)));
    }
  }
  auto take = [&](const std::string& key) -> std::optional<long long> {
    for (auto it = kv.begin(); it != kv.end(); ++it)
      if (it->first == key) {
        long long v = it->second;
        kv.erase(it);
        return v;
      }
    return std::nullopt;
  };
  auto finish = [&] {
    if (!kv.empty()) throw ParseError("unknown surface parameter '" + kv.front().first + "' in " + text);
  };
  auto block_gram = [&](std::optional<long long> l) {
    if (gram_k) {
      if (l && static_cast<std::size_t>(*l) != gram_k->rows())
        throw ParseError("l = " + std::to_string(*l) + " does not match the " + std::to_string(gram_k->rows()) +
                         "x" + std::to_string(gram_k->rows()) + " gram_K");
      return *gram_k;
    }
    if (!l) throw ParseError("block surface needs l=<rank of K>: " + text);
    if (*l < 0 || *l > 64) throw ParseError("l must be in [0, 64]");
    return Scalar(-1) * Matrix::identity(static_cast<std::size_t>(*l));
  };
  auto check_type = [&](long long t) {
    if (t < 1 || t > 7) throw ParseError("bielliptic type must be in 1..7, got " + std::to_string(t));
    return static_cast<int>(t);
  };

  if (kind == "bielliptic") {
    std::optional<long long> t = has_bare ? std::optional<long long>(bare) : take("type");
    finish();
    if (!t) throw ParseError("bielliptic surface needs a type: bielliptic:<1..7>");
    return bielliptic(check_type(*t));
  }
  if (has_bare) throw ParseError("malformed surface spec: " + text);
  if (kind == "k3") {
    long long d = take("d").value_or(1);
    finish();
    if (d < 1) throw ParseError("k3 needs d >= 1");
    return k3(static_cast<int>(d));
  }
  if (kind == "enriques") {
    auto l = take("l");
    long long d = take("d").value_or(1);
    finish();
    if (d < 1) throw ParseError("enriques needs d >= 1");
    return *cover_block_model(k3(static_cast<int>(d)), block_gram(l)).model;
  }
  if (kind == "abelian") {
    auto t = take("type");
    auto l = take("l");
    finish();
    if (!t) throw ParseError("abelian surface needs type=<1..7>");
    return *cover_block_model(bielliptic(check_type(*t)), block_gram(l)).model;
  }
  throw ParseError("unknown surface kind '" + kind + "' (expected bielliptic, k3, enriques or abelian)");
}

inline Matrix parse_matrix_option(std::string_view text) {
  try {
    return parse_matrix_literal(text);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------- json

inline Json scalar_json(const Scalar& q) { return to_string(q); }

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json poly_coefficients_json(const IntPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(x.str());
  return c;
}

/// {min_poly, coefficients, interval, decimal, closed_form}; the interval
/// is refined to width 10^-digits unless the number is rational.
inline Json algebraic_json(const RealAlgebraic& x, unsigned digits) {
  const RealAlgebraic r = x.refine(Scalar(1, pow(Integer(10), digits)));
  Json j;
  j["min_poly"] = r.polynomial().to_string();
  j["coefficients"] = poly_coefficients_json(r.polynomial());
  j["interval"] = Json::array({scalar_json(r.lower()), scalar_json(r.upper())});
  j["decimal"] = x.decimal(digits);
  j["closed_form"] = real_root_label(x);
  return j;
}

inline Matrix matrix_from_json(const Json& j) {
  Matrix m(j.size(), j.empty() ? 0 : j.at(0).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (j.at(i).size() != m.cols()) throw ParseError("ragged matrix in JSON");
    for (std::size_t jj = 0; jj < m.cols(); ++jj) m(i, jj) = parse_scalar(j.at(i).at(jj).get<std::string>());
  }
  return m;
}

inline RealAlgebraic algebraic_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j.at("coefficients")) c.emplace_back(x.get<std::string>());
  return RealAlgebraic(IntPolynomial(std::move(c)), parse_scalar(j.at("interval").at(0).get<std::string>()),
                       parse_scalar(j.at("interval").at(1).get<std::string>()));
}

inline Json surface_json(const SurfaceModel& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  j["spec"] = m.describe();
  j["type_id"] = m.root().kind == SurfaceKind::Bielliptic ? Json(m.root().type_id) : Json(nullptr);
  j["n"] = m.n;
  j["k"] = m.k;
  j["d"] = m.root().kind == SurfaceKind::K3 ? Json(m.root().d) : Json(nullptr);
  j["l"] = m.l;
  j["gram_K"] = matrix_json(m.gram_K);
  j["rank"] = m.rank();
  j["basis"] = m.basis;
  j["cover_order"] = m.cover_order;
  return j;
}

/// Rebuilds the model from the fields that determine it (kind, type_id or
/// d, gram_K); the remaining fields are checked for consistency.
inline SurfaceModel surface_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  SurfaceModel m;
  if (kind == to_string(SurfaceKind::Bielliptic)) {
    m = bielliptic(j.at("type_id").get<int>());
  } else if (kind == to_string(SurfaceKind::K3)) {
    m = k3(j.at("d").get<int>());
  } else if (kind == to_string(SurfaceKind::EnriquesBlock)) {
    m = *cover_block_model(k3(j.at("d").get<int>()), matrix_from_json(j.at("gram_K"))).model;
  } else if (kind == to_string(SurfaceKind::AbelianBlock)) {
    m = *cover_block_model(bielliptic(j.at("type_id").get<int>()), matrix_from_json(j.at("gram_K"))).model;
  } else {
    throw ParseError("unknown surface kind in JSON: " + kind);
  }
  if (surface_json(m) != j) throw ParseError("surface JSON is inconsistent with its kind and parameters");
  return m;
}

// ---------------------------------------------------------------- table 1

inline Document cmd_table1() {
  Document doc;
  Table t{"Classification of bielliptic surfaces", {"type", "tau", "G_S", "action_on_F", "ord_K_S", "n", "k"}, {}};
  Json rows = Json::array();
  for (const auto& b : kBiellipticTypes) {
    Json r;
    r["type"] = b.type_id;
    r["tau"] = b.tau;
    r["group"] = b.group;
    r["action_on_F"] = b.action_on_f;
    r["ord_K_S"] = b.n;
    r["n"] = b.n;
    r["k"] = b.k;
    rows.push_back(r);
    t.rows.push_back({std::to_string(b.type_id), b.tau, b.group, b.action_on_f, std::to_string(b.n),
                      std::to_string(b.n), std::to_string(b.k)});
  }
  doc.json["table"] = "table1";
  doc.json["rows"] = std::move(rows);
  doc.tables.push_back(std::move(t));
  return doc;
}

// ---------------------------------------------------------------- table 2

inline std::string eigen_set_label(const std::vector<EigenFactor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += f.label;
    if (f.multiplicity > 1) out += " (x" + std::to_string(f.multiplicity) + ")";
  }
  return out;
}

inline std::string matrix_text(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(m(i, j));
  }
  return out + "]";
}

inline Document cmd_table2(std::optional<long long> type_filter, unsigned digits) {
  if (type_filter && (*type_filter < 1 || *type_filter > 7))
    throw ParseError("unknown bielliptic type " + std::to_string(*type_filter) + " (expected 1..7)");
  Document doc;
  Table t{"Spectral radii of the relative Fourier-Mukai transform after tensoring by O(-H)",
          {"type", "eigenvalues", "rho", "rho_min_poly", "rho_decimal", "char_poly", "M2M1"},
          {}};
  Json rows = Json::array();
  for (int type = 1; type <= 7; ++type) {
    if (type_filter && *type_filter != type) continue;
    const Table2Row row = table2_row(type);
    Json r;
    r["type"] = type;
    r["n"] = row.n;
    r["k"] = row.k;
    r["word"] = to_string(table2_word());
    r["m2m1"] = matrix_json(row.printed_m2m1);
    r["matches_printed"] = row.printed_m2m1 == printed_m2m1(row.n, row.k);
    r["char_poly"] = row.char_poly.to_string();
    Json eig = Json::array();
    for (const auto& f : row.eigenvalues)
      eig.push_back({{"min_poly", f.min_poly.to_string()}, {"multiplicity", f.multiplicity}, {"label", f.label}});
    r["eigenvalues"] = std::move(eig);
    r["rho"] = algebraic_json(row.rho, digits);
    rows.push_back(std::move(r));
    t.rows.push_back({std::to_string(type), eigen_set_label(row.eigenvalues), real_root_label(row.rho),
                      row.rho.polynomial().to_string(), row.rho.decimal(digits), row.char_poly.to_string(),
                      matrix_text(row.printed_m2m1)});
  }
  doc.json["table"] = "table2";
  doc.json["digits"] = digits;
  doc.json["rows"] = std::move(rows);
  doc.tables.push_back(std::move(t));
  return doc;
}

// ---------------------------------------------------------------- entropy

inline GeneratorWord parse_word_checked(std::string_view text) {
  try {
    return parse_word(text);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// With a K block the whole word becomes one lift token lift(word|K).
inline GeneratorWord word_with_kblock(std::string_view text, const std::optional<Matrix>& kblock) {
  GeneratorWord w = parse_word_checked(text);
  if (!kblock) return w;
  return {GeneratorToken::lift(std::move(w), *kblock)};
}

inline Json entropy_json(const EntropyReport& r) {
  Json j;
  j["surface"] = r.surface;
  j["word"] = r.word;
  j["rho"] = algebraic_json(r.rho, r.digits);
  j["log_rho"] = r.log_rho.decimal;
  j["log_rho_interval"] = Json::array({scalar_json(r.log_rho.lower), scalar_json(r.log_rho.upper)});
  j["positive"] = r.positive;
  j["gy_status"] = to_string(r.gy_status);
  j["h_cat"] = r.gy_status == GyStatus::Equality ? Json(r.log_rho.decimal) : Json(nullptr);
  j["equality_family"] = r.equality_family.empty() ? Json(nullptr) : Json(r.equality_family);
  j["citations"] = r.citations;
  j["digits"] = r.digits;
  return j;
}

inline std::string h_cat_text(const EntropyReport& r) {
  switch (r.gy_status) {
    case GyStatus::Equality: return r.log_rho.decimal;
    case GyStatus::KnownStrictGap: return "> " + r.log_rho.decimal;
    case GyStatus::LowerBoundOnly: return ">= " + r.log_rho.decimal;
  }
  return "";
}

inline Document cmd_entropy(const SurfaceModel& model, std::string_view word_text, unsigned digits,
                            const std::optional<Matrix>& kblock = std::nullopt) {
  const EntropyReport r = gy_gap_report(compose(word_with_kblock(word_text, kblock), model), digits);
  Document doc;
  doc.json = entropy_json(r);
  doc.tables.push_back({"Categorical entropy",
                        {"surface", "word", "rho", "rho_min_poly", "rho_decimal", "log_rho", "h_cat", "positive",
                         "gy_status"},
                        {{r.surface, r.word, real_root_label(r.rho), r.rho.polynomial().to_string(),
                          r.rho.decimal(digits), r.log_rho.decimal, h_cat_text(r), r.positive ? "true" : "false",
                          to_string(r.gy_status)}}});
  Table cites{"Citations", {"citation"}, {}};
  for (const auto& c : r.citations) cites.rows.push_back({c});
  doc.tables.push_back(std::move(cites));
  return doc;
}

// ---------------------------------------------------------------- search

inline GeneratorWord default_generators(const SurfaceModel& model) {
  if (model.root().kind == SurfaceKind::K3) return {GeneratorToken::twist_o(), GeneratorToken::tensor_h_k3(-1)};
  return {GeneratorToken::tensor_h(-1), GeneratorToken::fm_p()};
}

inline Json hit_json(const SearchHit& h, unsigned digits) {
  Json j;
  j["record"] = "hit";
  j["word"] = to_string(h.word);
  j["length"] = h.length;
  j["rho"] = algebraic_json(h.rho, digits);
  return j;
}

inline Document cmd_search(const SurfaceModel& model, const SearchConfig& config, unsigned digits) {
  const SearchResult r = search(model, config);
  Document doc;
  Table hits{"Hits", {"length", "word", "rho", "rho_min_poly", "rho_decimal"}, {}};
  for (const auto& h : r.hits) {
    doc.lines.push_back(hit_json(h, digits));
    hits.rows.push_back({std::to_string(h.length), to_string(h.word), real_root_label(h.rho),
                         h.rho.polynomial().to_string(), h.rho.decimal(digits)});
  }
  Json s;
  s["record"] = "summary";
  s["surface"] = model.describe();
  s["generators"] = to_string(config.generators);
  s["include_inverses"] = config.include_inverses;
  s["max_len"] = config.max_len;
  s["max_states"] = config.max_states;
  s["report_all"] = config.report_all;
  s["hits"] = r.hits.size();
  s["states"] = r.states;
  s["words_examined"] = r.words_examined;
  s["max_length_reached"] = r.max_length_reached;
  s["status"] = to_string(r.status);
  doc.lines.push_back(s);
  doc.tables.push_back(std::move(hits));
  doc.tables.push_back({"Summary",
                        {"surface", "hits", "states", "words_examined", "max_length_reached", "status"},
                        {{model.describe(), std::to_string(r.hits.size()), std::to_string(r.states),
                          std::to_string(r.words_examined), std::to_string(r.max_length_reached),
                          to_string(r.status)}}});
  return doc;
}

// ---------------------------------------------------------------- check

/// Exponent e when the word is a product of fm_p and inv(fm_p) only.
inline std::optional<long long> fm_power(const GeneratorWord& w) {
  if (w.empty()) return std::nullopt;
  long long e = 0;
  for (const auto& t : w) {
    if (t.tag != GeneratorToken::Tag::RelativeFMPotter) return std::nullopt;
    e += t.inverse ? -1 : 1;
  }
  return e;
}

inline Document cmd_check(const SurfaceModel& model, std::string_view word_text,
                          const std::optional<Matrix>& kblock = std::nullopt) {
  const ActionMatrix act = compose(word_with_kblock(word_text, kblock), model);
  const IsometryVerdict iso = is_numerical_isometry(act);
  const Scalar det = determinant(act.matrix);
  Document doc;
  Json& j = doc.json;
  j["surface"] = model.describe();
  j["model"] = surface_json(model);
  j["word"] = to_string(act.word);
  j["images"] = matrix_json(image_rows(act.matrix));
  j["det"] = scalar_json(det);
  j["det_unit"] = det == 1 || det == -1;
  Json ij;
  ij["holds"] = iso.isometry;
  if (iso.isometry) {
    ij["witness"] = nullptr;
  } else {
    ij["witness"] = {{"pair", {model.basis[iso.i], model.basis[iso.j]}},
                     {"before", scalar_json(iso.before)},
                     {"after", scalar_json(iso.after)}};
  }
  j["isometry"] = ij;
  Table t{"Checks", {"check", "result", "detail"}, {}};
  t.rows.push_back({"det", det == 1 || det == -1 ? "pass" : "fail", to_string(det)});
  t.rows.push_back({"isometry", iso.isometry ? "pass" : "fail",
                    iso.isometry ? std::string()
                                 : "chi(" + model.basis[iso.i] + ", " + model.basis[iso.j] + "): " +
                                       to_string(iso.before) + " -> " + to_string(iso.after)});
  const auto e = fm_power(act.word);
  if (e && model.kind == SurfaceKind::Bielliptic) {
    const Matrix p = Matrix::from_integers({{1, *e}, {0, 1}});
    const FiberProjectionVerdict f = fiber_projection_check(act, p);
    j["fiber_projection"] = {{"P", matrix_json(p)}, {"consistent", f.consistent},
                             {"detail", f.detail.empty() ? Json(nullptr) : Json(f.detail)}};
    t.rows.push_back({"fiber_projection", f.consistent ? "pass" : "fail", "P = " + matrix_text(p) +
                                                                            (f.detail.empty() ? "" : "; " + f.detail)});
  } else {
    j["fiber_projection"] = nullptr;
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

// ---------------------------------------------------------------- render

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

inline std::string render(const Document& doc, Format format) {
  std::ostringstream out;
  if (format == Format::Json) {
    if (!doc.lines.empty()) {
      for (const auto& l : doc.lines) out << l.dump(-1, ' ', false) << '\n';
    } else {
      out << doc.json.dump(2, ' ', false) << '\n';
    }
    return out.str();
  }
  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) out << '\n';
    first = false;
    if (format == Format::Csv) {
      for (std::size_t i = 0; i < t.headers.size(); ++i) out << (i ? "," : "") << csv_field(t.headers[i]);
      out << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
        out << '\n';
      }
    } else {
      out << "### " << t.title << "\n\n|";
      for (const auto& h : t.headers) out << ' ' << md_cell(h) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.headers.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : t.rows) {
        out << '|';
        for (const auto& c : r) out << ' ' << md_cell(c) << " |";
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace numgk::cli
