#pragma once

#include "eulerhaar/matrix.hpp"

namespace eulerhaar {

/// Index decomposition for the su(N) spanning family lambda_1..lambda_{N^2-1}:
/// either i = j^2 - 1 + k with 1 <= k <= 2j (off-diagonal pair in the plane
/// (ceil(k/2), j+1)), or i = (j+1)^2 - 1 (diagonal, rows j and j+1). Every
/// index in 1..N^2-1 decomposes exactly one way.
struct GeneratorIndex {
  enum class Kind {
    symmetric_pair,   // k odd:  i*(E_ab + E_ba)
    rotation_pair,    // k even: E_ab - E_ba
    diagonal,         // i*(E_jj - E_{j+1,j+1})
  };

  Kind kind;
  int j;  // 1-based family row, 1 <= j <= n-1
  int k;  // 1..2j for the pair kinds; unused for diagonal
  int a;  // 1-based plane coordinates: pair kinds act in the plane (a, b)
  int b;
};

/// Decomposes i; throws std::out_of_range unless 1 <= i <= n^2 - 1.
GeneratorIndex decompose_generator_index(int n, int i);

/// The spanning generator lambda_i of su(n). Entries are exactly in
/// {0, +1, -1, +i, -i}; the result is anti-Hermitian and traceless.
ComplexMatrix generator(int n, int i);

/// exp(t * lambda_i) in closed form for diagonal and rotation-pair indices
/// (the two kinds the Euler parametrization uses); symmetric-pair indices
/// fall back to mat_exp. Always a valid GroupElement.
GroupElement exp_generator(int n, int i, double t);

/// Dense matrix exponential by Pade-13 scaling and squaring.
/// Validation fallback only; the parametrization itself uses exp_generator.
ComplexMatrix mat_exp(const ComplexMatrix& m);

}  // namespace eulerhaar
