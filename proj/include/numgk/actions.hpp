#pragma once

#include "numgk/errors.hpp"
#include "numgk/matrix.hpp"
#include "numgk/surfaces.hpp"

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace numgk {

// Convention: classes are column vectors; column j of a matrix is the image
// of basis vector j; a word t1;t2;...;tn acts as M(t1) M(t2) ... M(tn), so
// the rightmost token is applied first.

struct GeneratorToken;
using GeneratorWord = std::vector<GeneratorToken>;

struct GeneratorToken {
  enum class Tag { TensorLineBundle, TensorH, Shift, RelativeFMPotter, SphericalTwistO, TensorHK3, LiftBlock };

  Tag tag = Tag::Shift;
  long long a = 0;  // TensorLineBundle: a; TensorH / TensorHK3: multiple of H
  long long b = 0;
  bool inverse = false;
  // LiftBlock only. An empty k_block means the identity on K.
  std::shared_ptr<const GeneratorWord> base_word;
  Matrix k_block;

  static GeneratorToken make(Tag tag, long long a = 0, long long b = 0) {
    GeneratorToken t;
    t.tag = tag;
    t.a = a;
    t.b = b;
    return t;
  }
  static GeneratorToken tensor(long long a, long long b) { return make(Tag::TensorLineBundle, a, b); }
  static GeneratorToken tensor_h(long long m = -1) { return make(Tag::TensorH, m); }
  static GeneratorToken shift() { return make(Tag::Shift); }
  static GeneratorToken fm_p() { return make(Tag::RelativeFMPotter); }
  static GeneratorToken twist_o() { return make(Tag::SphericalTwistO); }
  static GeneratorToken tensor_h_k3(long long m = -1) { return make(Tag::TensorHK3, m); }
  static GeneratorToken lift(GeneratorWord word, Matrix k_block = {}) {
    GeneratorToken t = make(Tag::LiftBlock);
    t.base_word = std::make_shared<const GeneratorWord>(std::move(word));
    t.k_block = std::move(k_block);
    return t;
  }

  GeneratorToken inverted() const {
    GeneratorToken t = *this;
    t.inverse = !t.inverse;
    return t;
  }

  std::string to_string() const;

  friend bool operator==(const GeneratorToken& x, const GeneratorToken& y) { return x.to_string() == y.to_string(); }
};

inline std::string matrix_literal(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += numgk::to_string(m(i, j));
    }
  }
  return out;
}

inline std::string to_string(const GeneratorWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ';';
    out += word[i].to_string();
  }
  return out;
}

inline std::string GeneratorToken::to_string() const {
  std::string body;
  switch (tag) {
    case Tag::TensorLineBundle: body = "tensor(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
    case Tag::TensorH: body = "tensorH(" + std::to_string(a) + ")"; break;
    case Tag::Shift: body = "shift"; break;
    case Tag::RelativeFMPotter: body = "fm_p"; break;
    case Tag::SphericalTwistO: body = "twistO"; break;
    case Tag::TensorHK3: body = "tensorHK3(" + std::to_string(a) + ")"; break;
    case Tag::LiftBlock:
      body = "lift(" + numgk::to_string(*base_word) + (k_block.rows() ? "|" + matrix_literal(k_block) : "") + ")";
      break;
  }
  return inverse ? "inv(" + body + ")" : body;
}

inline GeneratorWord inverse_word(const GeneratorWord& word) {
  GeneratorWord out(word.rbegin(), word.rend());
  for (auto& t : out) t = t.inverted();
  return out;
}

// ---------------------------------------------------------------- parsing

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits on `sep` at parenthesis depth zero.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in: " + std::string(s));
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in: " + std::string(s));
  parts.push_back(s.substr(start));
  return parts;
}

inline long long parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected an integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("expected an integer: " + std::string(s));
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("expected an integer: " + std::string(s));
  try {
    return std::stoll(std::string(s));
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: " + std::string(s));
  }
}

/// If s is name(args), returns args.
inline std::optional<std::string_view> call_args(std::string_view s, std::string_view name) {
  if (s.size() < name.size() + 2 || s.substr(0, name.size()) != name) return std::nullopt;
  std::string_view rest = trim(s.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  return rest.substr(1, rest.size() - 2);
}

}  // namespace detail

/// Matrix literal "a,b;c,d" (rows separated by ';').
inline Matrix parse_matrix_literal(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  for (auto row : detail::split_top(text, ';')) {
    std::vector<Scalar> r;
    for (auto cell : detail::split_top(row, ',')) {
      try {
        r.push_back(parse_scalar(detail::trim(cell)));
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
    if (!rows.empty() && r.size() != rows.front().size()) throw ParseError("ragged matrix literal: " + std::string(text));
    rows.push_back(std::move(r));
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline GeneratorWord parse_word(std::string_view text);

inline GeneratorToken parse_token(std::string_view text) {
  using detail::call_args;
  std::string_view s = detail::trim(text);
  if (s == "shift") return GeneratorToken::shift();
  if (s == "fm_p") return GeneratorToken::fm_p();
  if (s == "twistO") return GeneratorToken::twist_o();
  if (auto args = call_args(s, "inv")) return parse_token(*args).inverted();
  if (auto args = call_args(s, "tensorHK3")) return GeneratorToken::tensor_h_k3(detail::parse_int(*args));
  if (auto args = call_args(s, "tensorH")) return GeneratorToken::tensor_h(detail::parse_int(*args));
  if (auto args = call_args(s, "tensor")) {
    auto parts = detail::split_top(*args, ',');
    if (parts.size() != 2) throw ParseError("tensor expects two integers: " + std::string(s));
    return GeneratorToken::tensor(detail::parse_int(parts[0]), detail::parse_int(parts[1]));
  }
  if (auto args = call_args(s, "lift")) {
    auto parts = detail::split_top(*args, '|');
    if (parts.size() > 2) throw ParseError("lift expects word[|k_block]: " + std::string(s));
    Matrix k = parts.size() == 2 ? parse_matrix_literal(parts[1]) : Matrix{};
    return GeneratorToken::lift(parse_word(parts[0]), std::move(k));
  }
  throw ParseError("unknown generator token: '" + std::string(s) + "'");
}

/// ';'-separated tokens; an empty or blank text is the empty word.
inline GeneratorWord parse_word(std::string_view text) {
  GeneratorWord word;
  if (detail::trim(text).empty()) return word;
  for (auto part : detail::split_top(text, ';')) word.push_back(parse_token(part));
  return word;
}

// ---------------------------------------------------------------- matrices

struct ActionMatrix {
  Matrix matrix;
  GeneratorWord word;
  std::shared_ptr<const SurfaceModel> model;
};

inline void require_kind(const SurfaceModel& model, SurfaceKind kind, const char* what) {
  if (model.kind != kind)
    throw IncompatibleError(std::string(what) + " acts on " + to_string(kind) + " models, not " + to_string(model.kind));
}

/// -(x) O(aA + bB): ch multiplication by (1, aA + bB, ab).
inline Matrix tensor_line_bundle(const SurfaceModel& model, long long a, long long b) {
  require_kind(model, SurfaceKind::Bielliptic, "tensor");
  Matrix m = Matrix::identity(4);
  m(1, 0) = a;
  m(2, 0) = b;
  m(3, 0) = Scalar(a) * Scalar(b);
  m(3, 1) = b;
  m(3, 2) = a;
  return m;
}

/// Relative Fourier-Mukai transform along p with P = [[1,1],[0,1]]:
/// A -> n[S] + A, [pt] -> kB + [pt], [S] and B fixed.
inline Matrix relative_fm_potter(const SurfaceModel& model) {
  require_kind(model, SurfaceKind::Bielliptic, "fm_p");
  Matrix m = Matrix::identity(4);
  m(0, 1) = model.n;
  m(2, 3) = model.k;
  return m;
}

inline Matrix shift(const SurfaceModel& model) { return Scalar(-1) * Matrix::identity(model.rank()); }

/// Reflection v -> v + <v, delta> delta, delta = v(O_X) = (1, 0, 1).
inline Matrix spherical_twist_O(const SurfaceModel& model) {
  require_kind(model, SurfaceKind::K3, "twistO");
  const NumClass delta{1, 0, 1};
  Matrix m(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    NumClass e = basis_vector(model, j);
    Scalar c = mukai_pairing(model, e, delta);
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = e[i] + c * delta[i];
  }
  return m;
}

/// -(x) O(tH) on Mukai vectors: multiplication by (1, t, t^2 d);
/// (r, m, s) -> (r, m + t r, s + 2d t m + t^2 d r).
inline Matrix tensor_H_K3(const SurfaceModel& model, long long t = -1) {
  require_kind(model, SurfaceKind::K3, "tensorHK3");
  const Scalar d = model.d;
  const Scalar tt = t;
  Matrix m = Matrix::identity(3);
  m(1, 0) = tt;
  m(2, 0) = tt * tt * d;
  m(2, 1) = 2 * d * tt;
  return m;
}

inline Matrix tensor_minus_H_K3(const SurfaceModel& model) { return tensor_H_K3(model, -1); }

/// Block-diagonal [[base, 0], [0, k_block]] on a block model. Requires
/// k_block^T gram_K k_block = gram_K.
inline Matrix lift_block_matrix(const Matrix& base, const Matrix& k_block, const SurfaceModel& cover) {
  if (!cover.is_block()) throw IncompatibleError("lift acts on block models, not " + to_string(cover.kind));
  if (base.rows() != cover.base_rank() || base.cols() != cover.base_rank())
    throw IncompatibleError("base action does not match the cover's base lattice");
  if (k_block.rows() != cover.l || k_block.cols() != cover.l)
    throw std::invalid_argument("K-block must be " + std::to_string(cover.l) + "x" + std::to_string(cover.l));
  if (!(k_block.transpose() * cover.gram_K * k_block == cover.gram_K))
    throw std::invalid_argument("K-block must be unitary");
  return Matrix::direct_sum(base, k_block);
}

inline Matrix compose_matrix(const GeneratorWord& word, const SurfaceModel& model);

/// Matrix of a single token on `model`. On block models, tokens of the base
/// kind lift with the identity on K.
inline Matrix generator_matrix(const GeneratorToken& token, const SurfaceModel& model) {
  using Tag = GeneratorToken::Tag;
  Matrix m;
  if (token.tag == Tag::Shift) {
    m = shift(model);
  } else if (token.tag == Tag::LiftBlock) {
    if (!model.is_block()) throw IncompatibleError("lift acts on block models, not " + to_string(model.kind));
    Matrix k = token.k_block.rows() ? token.k_block : Matrix::identity(model.l);
    m = lift_block_matrix(compose_matrix(*token.base_word, *model.base), k, model);
  } else if (model.is_block()) {
    GeneratorToken plain = token;
    plain.inverse = false;
    m = lift_block_matrix(generator_matrix(plain, *model.base), Matrix::identity(model.l), model);
  } else {
    switch (token.tag) {
      case Tag::TensorLineBundle: m = tensor_line_bundle(model, token.a, token.b); break;
      case Tag::TensorH:
        require_kind(model, SurfaceKind::Bielliptic, "tensorH");
        m = tensor_line_bundle(model, token.a * model.n, token.a * model.k);
        break;
      case Tag::RelativeFMPotter: m = relative_fm_potter(model); break;
      case Tag::SphericalTwistO: m = spherical_twist_O(model); break;
      case Tag::TensorHK3: m = tensor_H_K3(model, token.a); break;
      default: break;
    }
  }
  return token.inverse ? inverse(m) : m;
}

inline Matrix compose_matrix(const GeneratorWord& word, const SurfaceModel& model) {
  Matrix m = Matrix::identity(model.rank());
  for (const auto& t : word) m = m * generator_matrix(t, model);
  return m;
}

inline ActionMatrix compose(const GeneratorWord& word, std::shared_ptr<const SurfaceModel> model) {
  return {compose_matrix(word, *model), word, std::move(model)};
}

inline ActionMatrix compose(const GeneratorWord& word, const SurfaceModel& model) {
  return compose(word, std::make_shared<const SurfaceModel>(model));
}

inline ActionMatrix lift_block(const ActionMatrix& base, const Matrix& k_block,
                               std::shared_ptr<const SurfaceModel> cover) {
  Matrix m = lift_block_matrix(base.matrix, k_block, *cover);
  return {std::move(m), {GeneratorToken::lift(base.word, k_block)}, std::move(cover)};
}

/// Transpose: rows are images of basis vectors, the layout the printed
/// matrices use.
inline Matrix image_rows(const Matrix& m) { return m.transpose(); }

// ---------------------------------------------------------------- checks

struct IsometryVerdict {
  bool isometry = true;
  // First failing basis pair in row-major order, when !isometry.
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar before = 0;
  Scalar after = 0;
};

/// chi(M e_i, M e_j) == chi(e_i, e_j) for all basis pairs.
inline IsometryVerdict is_numerical_isometry(const Matrix& m, const SurfaceModel& model) {
  if (m.rows() != model.rank() || m.cols() != model.rank()) throw IncompatibleError("action rank does not match model");
  const Matrix image_gram = m.transpose() * model.gram * m;
  for (std::size_t i = 0; i < model.rank(); ++i)
    for (std::size_t j = 0; j < model.rank(); ++j)
      if (image_gram(i, j) != model.gram(i, j)) return {false, i, j, model.gram(i, j), image_gram(i, j)};
  return {};
}

inline IsometryVerdict is_numerical_isometry(const ActionMatrix& act) { return is_numerical_isometry(act.matrix, *act.model); }

struct FiberProjectionVerdict {
  bool consistent = true;
  std::string detail;
};

/// Projection v -> (rank, c_1 . f) with the fiber functional f = nB, so
/// (r, aA + bB) -> (r, n a). Consistent iff proj(M e_j) = P proj(e_j) for
/// every basis vector.
inline FiberProjectionVerdict fiber_projection_check(const Matrix& m, const SurfaceModel& model, const Matrix& p) {
  if (model.kind != SurfaceKind::Bielliptic) return {false, "fiber projection needs a bielliptic model"};
  if (p.rows() != 2 || p.cols() != 2 || !p.is_integral()) return {false, "P must be a 2x2 integer matrix"};
  if (determinant(p) != 1) return {false, "det(P) must be 1"};
  if (m.rows() != 4 || m.cols() != 4) return {false, "action rank does not match model"};
  const Scalar n = model.n;
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<Scalar> src{j == 0 ? Scalar(1) : Scalar(0), j == 1 ? n : Scalar(0)};
    std::vector<Scalar> expect = p * std::span<const Scalar>(src);
    std::vector<Scalar> got{m(0, j), n * m(1, j)};
    if (expect != got)
      return {false, "basis vector " + model.basis[j] + ": projection (" + to_string(got[0]) + ", " +
                         to_string(got[1]) + ") but P gives (" + to_string(expect[0]) + ", " + to_string(expect[1]) + ")"};
  }
  return {};
}

inline FiberProjectionVerdict fiber_projection_check(const ActionMatrix& act, const Matrix& p) {
  return fiber_projection_check(act.matrix, *act.model, p);
}

}  // namespace numgk
