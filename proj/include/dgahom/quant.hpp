#pragma once

#include "dgahom/linalg.hpp"
#include "dgahom/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgahom {

/// Finitely generated abelian group Z^r + sum Z/d_i with d_1 | d_2 | ...
struct FGGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    Int torsion_order() const {
        Int o = 1;
        for (const auto& d : torsion) o *= d;
        return o;
    }
};

/// Homomorphism from an FGGroup to a normed rational vector space (l-infinity);
/// torsion generators necessarily map to zero.
struct NormedHom {
    FGGroup source;
    std::size_t target_dim = 0;
    std::vector<std::vector<Rat>> images;  // per free generator
};

/// #h^{-1}(B) <= C for every closed 1-ball B, decided exactly through the
/// image lattice.  Returns false (with a witness) when the kernel has positive
/// rank, since some ball preimage is then infinite.
bool c_injective(const NormedHom& h, const Rat& c, std::string* witness = nullptr);

/// Every point of the target within C of the image, decided exactly by a
/// covering test; target dimension is capped at 4.
bool c_surjective(const NormedHom& h, const Rat& c);

/// Exact best constants for the diagonal-style homs used by the fuzz suite
/// (and handy on their own): smallest C that works.
Rat best_injectivity_constant(const NormedHom& h);  // throws on infinite kernel
Rat best_surjectivity_constant(const NormedHom& h); // throws when not full rank

enum class FourLemmaKind { Injective, Surjective };

Rat four_lemma_predict(FourLemmaKind kind, const Rat& c1, const Rat& c2, const Rat& c3,
                       const Rat& c4, const Rat& tau, std::size_t rk_m1, std::size_t rk_m2,
                       std::size_t rk_m3);

/// Two exact rows with commuting lattice-embedding verticals.
struct QuadDiagram {
    std::uint64_t seed = 0;
    std::size_t r1 = 0, r2 = 0, r3 = 0;  // free ranks of A1..A3
    FGGroup a4;
    ZMatrix f1;       // r2 x r1, exact image = ker f2
    ZMatrix f2;       // r3 x r2
    ZMatrix f3_free;  // a4.free_rank x r3 (coker projection, free part)
    QMatrix m1, m2, m3;
    std::vector<Rat> phi1, phi2, phi3, phi4;  // diagonal vertical scalings
    Rat tau;                                  // exact lifting constant of m2

    bool validate(std::string* why = nullptr) const;
};

QuadDiagram random_quad_diagram(std::uint64_t seed);

/// Exact minimal tau with min{|u| : u in m2^{-1}(v)} <= tau |v| on the image,
/// via coset_norm_min over the vertices of the unit section.
Rat lifting_constant(const QMatrix& m2);

struct FourLemmaReport {
    FourLemmaKind kind = FourLemmaKind::Injective;
    Rat predicted;
    Rat measured;
    long window = 20;
    std::uint64_t seed = 0;
    bool ok = false;
    bool inconclusive = false;
};

FourLemmaReport four_lemma_verify(const QuadDiagram& d, FourLemmaKind kind, long window = 20);

std::string four_lemma_report_json(const FourLemmaReport& r);

// ---------------------------------------------------------------------------
// Finite-to-one bound through cohomology orders with finite coefficients.

struct CellComplexZ {
    std::vector<std::size_t> cells;  // per degree 0..dim
    std::vector<ZMatrix> boundary;   // boundary[k]: C_{k+1} -> C_k (rows cells[k], cols cells[k+1])
};

/// |H^k(X; Z/m)| via universal coefficients on the integer cochain complex.
Int cohomology_order_mod(const CellComplexZ& x, unsigned k, const Int& m);

/// Product over k = 1..dim of |H^k(X; pi_k)| where pi_k is the finite abelian
/// group with the given cyclic orders.
Int finite_to_one_bound(const CellComplexZ& x, const std::vector<std::vector<Int>>& coefficients);

CellComplexZ disjoint_union(const CellComplexZ& a, const CellComplexZ& b);

}  // namespace dgahom
