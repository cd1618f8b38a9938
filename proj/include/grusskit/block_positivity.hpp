// Copyright 2026 The grusskit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <utility>

#include "grusskit/map_rep.hpp"
#include "grusskit/matrix.hpp"
#include "grusskit/rng.hpp"

namespace grusskit {

/// Two-by-two operator block [[P, R], [R*, Q]] with P (p x p), Q (q x q)
/// and R (p x q).
struct Block2x2 {
    Matrix p;
    Matrix q;
    Matrix r;

    /// (p+q) x (p+q) assembly
    Matrix assemble() const;
};

struct BlockPairingReport {
    bool block_psd;
    bool pairing_ok;
    bool norm_ok;
};

/// Cauchy-Schwarz structure of a PSD 2x2 block: samples the pairing
/// inequality |<R y, x>|^2 <= <P x, x> <Q y, y> (x in C^p, y in C^q) on
/// `trials` Gaussian pairs, and checks ||R||^2 <= ||P|| ||Q||. If the
/// assembled block is PSD, both must come out true.
BlockPairingReport check_block_pairing(const Block2x2& blk, double tol,
                                       std::size_t trials, std::uint64_t seed);

/// Pivot form [[T, S], [S*, R]] with invertible R.
struct SchurTriple {
    Matrix t;
    Matrix s;
    Matrix r;

    Matrix assemble() const;
};

/// PSD test through the Schur complement: T, R PSD and T - S R^{-1} S*
/// PSD. Also evaluates the direct eigenvalue verdict on the assembled
/// block and raises an internal error if the two routes disagree away
/// from the PSD boundary (|relative margin| > 1e-6). PreconditionError
/// when R is singular (smallest singular value <= 1e-12) or T, R are not
/// Hermitian.
bool schur_positivity(const SchurTriple& triple, const Tolerance& tol = {});

/// The 4n x 4n Gram-patterned operator block whose positivity encodes
/// the Cauchy-Schwarz bound on the multiplicative defect at unitaries:
/// rows built from a*a, a*b, a*, a*(a*b) and friends. Hermitian for any
/// square a, b of equal size; PSD when a and b are unitary.
Matrix defect_schwarz_block(const Matrix& a, const Matrix& b);

struct ChoiLemmaReport {
    bool premise;    // [[x, y], [y*, x]] PSD
    bool conclusion; // [[phi(x), phi(y)], [phi(y*), phi(x)]] PSD
};

/// Structured-block positivity transport: for positive phi,
/// premise implies conclusion. Both sides are reported; a non-Hermitian
/// assembly counts as "not PSD" rather than an error.
ChoiLemmaReport choi_lemma_check(const MapRep& phi, const Matrix& x,
                                 const Matrix& y, const Tolerance& tol = {});

/// (x, y) with [[x, y], [y*, x]] PSD by construction: the Gram matrix of
/// [C, WC] for Gaussian C and unitary W has equal diagonal blocks C*C and
/// off-diagonal block C*WC.
std::pair<Matrix, Matrix> random_premise_pair(std::size_t n, Rng& rng);

} // namespace grusskit
