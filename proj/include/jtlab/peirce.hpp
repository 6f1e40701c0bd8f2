#pragma once

#include <utility>
#include <vector>

#include "jtlab/triple.hpp"

namespace jtlab {

enum class OpKind { D, QQ, B, Bminus };

// Spectral projector of D(e,e) onto eigenvalue i in {0,1,2}, computed as the
// exact quadratic Lagrange polynomial in D(e,e).
Mat peirce_projection(const Element& e, int i);

// Projector onto V_jk for a pairwise orthogonal tripotent sequence, indices
// 0 <= j <= k <= s with 0 the annihilator slot:
//   V_jj = P2(e_j), V_jk = P1(e_j) P1(e_k), V_0j = P1(e_j) prod_{k != j} P0(e_k),
//   V_00 = prod_k P0(e_k).
Mat simultaneous_projection(const std::vector<Element>& es, int j, int k);

// v in V_2(e) split into the +1/-1 eigenvectors of the conjugation Q(e):
// v_pm = (v pm Q(e)v)/2.
std::pair<Element, Element> v2_plus_split(const Element& e, const Element& v);

// Eigenvalue of the operator on V_jk for z = sum lambda_j e_j (lambda_0 = 0):
//   D: l_j^2 + l_k^2, QQ: (l_j l_k)^2, B: (1-l_j^2)(1-l_k^2), Bminus: (1+l_j^2)(1+l_k^2).
double predicted_eigenvalues(const std::vector<double>& lambdas, int j, int k, OpKind which);

} // namespace jtlab
