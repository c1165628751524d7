/*
   Copyright 2026 The zzuv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZZUV_FACTORIZE_HPP
#define ZZUV_FACTORIZE_HPP

#include <cstdint>
#include <vector>

#include "zzuv/fp_poly.hpp"

namespace zzuv {

struct IrreducibleFactor {
    FpPoly poly;
    std::uint32_t multiplicity;
};

/// Irreducible factorization of x^n - 1 over Z_p, found deterministically
/// by degree-by-degree trial division (candidates enumerated in
/// lexicographic coefficient order). When p | n the repeated-factor
/// multiplicity p^e is applied to the squarefree part's factors.
/// Guards: n <= 64 and a fixed candidate budget; both throw
/// std::invalid_argument("search bound exceeded").
std::vector<IrreducibleFactor> factorize_xn_minus_1(PrimeField f, std::uint32_t n);

/// All monic divisors of x^n - 1 over Z_p (the full multiplicity lattice
/// of the factorization), sorted by (degree, ascending-coefficient lex
/// order) and duplicate-free.
std::vector<FpPoly> divisors_of_xn_minus_1(PrimeField f, std::uint32_t n);

/// The sub-lattice of divisors of x^n - 1 that also divide g.
std::vector<FpPoly> divisors_of_divisor(PrimeField f, std::uint32_t n, const FpPoly& g);

}  // namespace zzuv

#endif
