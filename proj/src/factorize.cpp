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

#include "zzuv/factorize.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzuv {

namespace {

constexpr std::uint32_t kMaxN = 64;
constexpr std::uint64_t kCandidateBudget = 1u << 22;

// Candidates must divide x^m - 1 with gcd(m, p) = 1, so they are monic
// with nonzero constant term. Enumerated ascending in the coefficient
// vector read as a base-p number (constant term least significant).
bool next_candidate(std::vector<std::int64_t>& c, std::uint32_t p) {
    // c has fixed size d+1 with c[d] = 1; increments positions 0..d-1
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

bool lex_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

}  // namespace

std::vector<IrreducibleFactor> factorize_xn_minus_1(PrimeField f, std::uint32_t n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("search bound exceeded");
    const std::uint32_t p = f.p();

    // n = m * p^e with gcd(m, p) = 1; x^n - 1 = (x^m - 1)^(p^e)
    std::uint32_t m = n, pe = 1;
    while (m % p == 0) {
        m /= p;
        pe *= p;
    }

    std::vector<IrreducibleFactor> out;
    FpPoly cofactor = FpPoly::x_pow_n_minus_1(f, m);
    std::uint64_t budget = kCandidateBudget;

    for (std::uint32_t d = 1; cofactor.degree() > 0; ++d) {
        if (2 * static_cast<std::int64_t>(d) > cofactor.degree()) {
            // nothing of degree <= deg/2 divides: the cofactor is irreducible
            out.push_back({cofactor, pe});
            cofactor = FpPoly::one(f);
            break;
        }
        std::vector<std::int64_t> c(d + 1, 0);
        c[0] = 1;  // constant term ranges over 1..p-1
        c[d] = 1;
        do {
            if (budget-- == 0) throw std::invalid_argument("search bound exceeded");
            if (c[0] == 0) continue;
            FpPoly cand(f, c);
            if (divides(cand, cofactor)) {
                // x^m - 1 is squarefree, so each factor appears once and the
                // candidate is automatically irreducible (smaller-degree
                // factors were already divided out)
                out.push_back({cand, pe});
                cofactor = poly_divmod(cofactor, cand).first;
                if (2 * static_cast<std::int64_t>(d) > cofactor.degree()) break;
            }
        } while (next_candidate(c, p));
    }

    std::sort(out.begin(), out.end(),
              [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
                  return lex_less(a.poly, b.poly);
              });
    return out;
}

std::vector<FpPoly> divisors_of_xn_minus_1(PrimeField f, std::uint32_t n) {
    const std::vector<IrreducibleFactor> fac = factorize_xn_minus_1(f, n);

    std::uint64_t count = 1;
    for (const auto& ff : fac) {
        count *= ff.multiplicity + 1;
        if (count > kCandidateBudget) throw std::invalid_argument("search bound exceeded");
    }

    std::vector<FpPoly> out{FpPoly::one(f)};
    for (const auto& ff : fac) {
        const std::size_t base = out.size();
        FpPoly power = ff.poly;
        for (std::uint32_t e = 1; e <= ff.multiplicity; ++e) {
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
            if (e < ff.multiplicity) power = power * ff.poly;
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<FpPoly> divisors_of_divisor(PrimeField f, std::uint32_t n, const FpPoly& g) {
    std::vector<FpPoly> out;
    for (const FpPoly& d : divisors_of_xn_minus_1(f, n))
        if (divides(d, g)) out.push_back(d);
    return out;
}

}  // namespace zzuv
