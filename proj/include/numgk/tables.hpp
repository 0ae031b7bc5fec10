#pragma once

#include "numgk/actions.hpp"
#include "numgk/charpoly.hpp"
#include "numgk/factor.hpp"
#include "numgk/spectral.hpp"
#include "numgk/surfaces.hpp"

#include <string>
#include <vector>

namespace numgk {

/// The word Phi_P o (- (x) O(-H)): tensor first, then the relative FM
/// transform.
inline GeneratorWord table2_word() { return {GeneratorToken::fm_p(), GeneratorToken::tensor_h(-1)}; }

struct EigenFactor {
  IntPolynomial min_poly;
  int multiplicity = 0;
  std::string label;
};

struct Table2Row {
  int type_id = 0;
  int n = 0;
  int k = 0;
  Matrix composite;      // compose(table2_word()), columns are images
  Matrix printed_m2m1;   // rows are images: image_rows(M(tensorH(-1)) M(fm_p))
  IntPolynomial char_poly;
  std::vector<EigenFactor> eigenvalues;
  RealAlgebraic rho;     // defining polynomial is the minimal polynomial
};

/// The 4x4 literal of the displayed product for given (n, k), rows as
/// basis images.
inline Matrix printed_m2m1(long long n, long long k) {
  return Matrix::from_integers({{1, -n, -k, k * n},
                                {n, 1 - n * n, -k * n, -k + k * n * n},
                                {0, 0, 1, -n},
                                {0, 0, k, 1 - k * n}});
}

inline std::vector<EigenFactor> eigen_factors(const IntPolynomial& p) {
  std::vector<EigenFactor> out;
  for (const auto& f : factor(p)) out.push_back({f.factor, f.multiplicity, root_label(f.factor)});
  return out;
}

inline Table2Row table2_row(int type_id) {
  const SurfaceModel model = bielliptic(type_id);
  Table2Row row;
  row.type_id = type_id;
  row.n = model.n;
  row.k = model.k;
  row.composite = compose_matrix(table2_word(), model);
  row.printed_m2m1 = image_rows(compose_matrix({GeneratorToken::tensor_h(-1), GeneratorToken::fm_p()}, model));
  row.char_poly = char_poly(row.composite);
  row.eigenvalues = eigen_factors(row.char_poly);
  row.rho = spectral_radius_minimal(row.composite);
  return row;
}

}  // namespace numgk
