#pragma once

#include "numgk/forms.hpp"
#include "numgk/matrix.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace numgk {

enum class SurfaceKind { Bielliptic, K3, EnriquesBlock, AbelianBlock };

inline std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Bielliptic: return "Bielliptic";
    case SurfaceKind::K3: return "K3";
    case SurfaceKind::EnriquesBlock: return "EnriquesBlock";
    case SurfaceKind::AbelianBlock: return "AbelianBlock";
  }
  return "?";
}

/// One row of the bielliptic classification. n = ord(K_S), k = |G_S| / n.
struct BiellipticType {
  int type_id;
  int n;
  int k;
  const char* tau;
  const char* group;
  const char* action_on_f;
};

inline constexpr std::array<BiellipticType, 7> kBiellipticTypes{{
    {1, 2, 1, "any", "Z/2Z", "x -> -x"},
    {2, 2, 2, "any", "Z/2Z x Z/2Z", "x -> -x, x -> x + e (e in Z/2Z)"},
    {3, 4, 1, "i", "Z/4Z", "x -> ix"},
    {4, 4, 2, "i", "Z/4Z x Z/2Z", "x -> ix, x -> x + (1+i)/2"},
    {5, 3, 1, "ω", "Z/3Z", "x -> ωx"},
    {6, 3, 3, "ω", "Z/3Z x Z/3Z", "x -> ωx, x -> x + (1-ω)/3"},
    {7, 6, 1, "ω", "Z/6Z", "x -> -ωx"},
}};

inline const BiellipticType& bielliptic_type(int type_id) {
  if (type_id < 1 || type_id > 7) throw std::out_of_range("bielliptic type must be in 1..7");
  return kBiellipticTypes[static_cast<std::size_t>(type_id - 1)];
}

/// Numerical lattice of a surface with its Euler pairing.
///
/// Block kinds carry the base model, the lattice K of the cover and the
/// cover degree; their basis is the base basis followed by K's basis.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::Bielliptic;
  int type_id = 0;  // bielliptic type (also of the base of an abelian block)
  int n = 1;
  int k = 1;
  int d = 0;  // K3 polarization, H^2 = 2d
  std::size_t l = 0;
  Matrix gram_K;
  std::vector<std::string> basis;
  Matrix gram;  // Euler pairing chi in the basis
  int cover_order = 1;
  std::shared_ptr<const SurfaceModel> base;

  std::size_t rank() const { return basis.size(); }
  bool is_block() const { return kind == SurfaceKind::EnriquesBlock || kind == SurfaceKind::AbelianBlock; }
  std::size_t base_rank() const { return is_block() ? base->rank() : rank(); }

  /// The underlying bielliptic or K3 model.
  const SurfaceModel& root() const { return is_block() ? *base : *this; }

  std::string describe() const {
    switch (kind) {
      case SurfaceKind::Bielliptic: return "bielliptic:" + std::to_string(type_id);
      case SurfaceKind::K3: return "k3:d=" + std::to_string(d);
      case SurfaceKind::EnriquesBlock: return "enriques:l=" + std::to_string(l) + ",d=" + std::to_string(base->d);
      case SurfaceKind::AbelianBlock: return "abelian:type=" + std::to_string(base->type_id) + ",l=" + std::to_string(l);
    }
    return "?";
  }
};

using NumClass = std::vector<Scalar>;

inline SurfaceModel bielliptic(int type_id) {
  const BiellipticType& t = bielliptic_type(type_id);
  SurfaceModel m;
  m.kind = SurfaceKind::Bielliptic;
  m.type_id = type_id;
  m.n = t.n;
  m.k = t.k;
  m.cover_order = t.n;
  m.basis = {"[S]", "A", "B", "[pt]"};
  // chi(v, w) = r s' + s r' - (a b' + a' b)
  m.gram = Matrix::from_integers({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  return m;
}

/// K3 lattice of Picard rank one in Mukai coordinates
/// (r, m, s), v = (r, mH, s).
inline SurfaceModel k3(int d = 1) {
  if (d < 1) throw std::out_of_range("K3 polarization d must be positive");
  SurfaceModel m;
  m.kind = SurfaceKind::K3;
  m.d = d;
  m.n = 1;
  m.k = 1;
  m.basis = {"r", "H", "s"};
  // chi = -<v, w>, <v, w> = 2d m m' - r s' - s r'
  m.gram = Matrix::from_integers({{0, 0, 1}, {0, -2LL * d, 0}, {1, 0, 0}});
  return m;
}

/// Mukai pairing on a K3 model.
inline Scalar mukai_pairing(const SurfaceModel& model, std::span<const Scalar> v, std::span<const Scalar> w) {
  if (model.kind != SurfaceKind::K3) throw std::invalid_argument("Mukai pairing needs a K3 model");
  if (v.size() != 3 || w.size() != 3) throw std::invalid_argument("rank mismatch");
  return Scalar(2 * model.d) * v[1] * w[1] - v[0] * w[2] - v[2] * w[0];
}

/// Gram matrix of the Mukai pairing; equals -gram on K3 models.
inline Matrix mukai_gram(const SurfaceModel& model) {
  if (model.kind != SurfaceKind::K3) throw std::invalid_argument("Mukai pairing needs a K3 model");
  return Scalar(-1) * model.gram;
}

/// Intersection of divisor parts c = aA + bB (A^2 = B^2 = 0, A.B = 1).
inline Scalar intersection(const SurfaceModel& model, std::span<const Scalar> c, std::span<const Scalar> c2) {
  if (model.kind != SurfaceKind::Bielliptic) throw std::invalid_argument("intersection needs a bielliptic model");
  if (c.size() != 2 || c2.size() != 2) throw std::invalid_argument("divisor part must be (a, b)");
  return c[0] * c2[1] + c[1] * c2[0];
}

inline Scalar euler_pairing(const SurfaceModel& model, std::span<const Scalar> v, std::span<const Scalar> w) {
  const std::size_t r = model.rank();
  if (v.size() != r || w.size() != r) throw std::invalid_argument("rank mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) acc += v[i] * model.gram(i, j) * w[j];
  }
  return acc;
}

inline NumClass basis_vector(const SurfaceModel& model, std::size_t i) {
  NumClass v(model.rank());
  v.at(i) = 1;
  return v;
}

/// Block lattice of the canonical cover with its pullback/pushforward maps.
struct CoverModel {
  std::shared_ptr<const SurfaceModel> model;
  Matrix pullback;     // rank x base_rank
  Matrix pushforward;  // base_rank x rank; pushforward * pullback = ord * I
};

/// N(X) = pi^* N(base) + K with K negative definite of size l. A K3 base
/// gives an Enriques-type block (ord 2); a bielliptic base gives an
/// abelian-type block (ord n).
inline CoverModel cover_block_model(const SurfaceModel& base, const Matrix& gram_K) {
  if (base.is_block()) throw std::invalid_argument("cover base must be bielliptic or K3");
  const std::size_t l = gram_K.rows();
  if (gram_K.cols() != l) throw std::invalid_argument("gram_K must be square");
  if (l > 0 && !is_negative_definite(gram_K)) throw std::invalid_argument("K must be negative definite");
  auto shared_base = std::make_shared<const SurfaceModel>(base);
  SurfaceModel m;
  m.kind = base.kind == SurfaceKind::K3 ? SurfaceKind::EnriquesBlock : SurfaceKind::AbelianBlock;
  m.type_id = base.type_id;
  m.n = base.n;
  m.k = base.k;
  m.d = base.d;
  m.l = l;
  m.gram_K = gram_K;
  m.cover_order = base.kind == SurfaceKind::K3 ? 2 : base.n;
  m.basis = base.basis;
  for (std::size_t i = 0; i < l; ++i) m.basis.push_back("K" + std::to_string(i + 1));
  m.gram = Matrix::direct_sum(base.gram, gram_K);
  m.base = shared_base;

  const std::size_t br = base.rank();
  CoverModel out;
  out.pullback = Matrix(br + l, br);
  out.pushforward = Matrix(br, br + l);
  for (std::size_t i = 0; i < br; ++i) {
    out.pullback(i, i) = 1;
    out.pushforward(i, i) = m.cover_order;
  }
  out.model = std::make_shared<const SurfaceModel>(std::move(m));
  return out;
}

}  // namespace numgk
