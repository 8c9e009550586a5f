#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncs/matrix.hpp"
#include "ncs/presentation.hpp"

namespace ncs {

// Quantum 2-sphere A(S^2_{q,s}): generators x, y, z, precedence y > x > z,
// involution z* = z, x* = -y, y* = -x. Confluence-verified at construction.
Presentation make_sphere2();

// Quantum 4-sphere A(S^4_{p,q,s}): generators xi, eta, zeta, U, V,
// precedence eta > xi > U > V > zeta, involution zeta* = zeta, xi* = -eta,
// U* = V.
Presentation make_sphere4();

// The *-presentation on xi, xi*, zeta, U, U* (starred generators are
// independent symbols tied together by the involution table).
Presentation make_sphere4_star();

// Adjoin a self-adjoint central generator Z with Z^2 = squareOf. `rank`
// places Z in the precedence (0 = below every existing generator).
// squareOf must be central; the extension is confluence-verified.
Presentation extend_with_Z(const Presentation& P, const NCPoly& squareOf, int rank,
                           const std::string& name = "Z");

// sphere4 extended with central Z, Z^2 = UV, Z placed below V and above zeta.
Presentation make_sphere4_z();

struct CatalogEntry {
    std::string name;
    std::string description;
    const Presentation& presentation;
};

// Stable directory of the built-in presentations.
const std::vector<CatalogEntry>& list_catalog();
const Presentation& catalog_presentation(const std::string& name);

// Charge-1 monopole projector f in Mat_2(A(S^2_{q,s})).
AlgMatrix projector_f(const Presentation& sphere2);

// The 4x4 projector e over A(S^4_{p,q,s}), entered from its closed form.
AlgMatrix projector_e(const Presentation& sphere4);

// The 4x4 projector etilde over the Z-extension of A(S^4_{p,q,s}).
AlgMatrix projector_etilde(const Presentation& sphere4_z);

// Block data behind etilde: t = ttilde = (2/(1+s^2)) [[1-zeta, xi],
// [-eta, s^2+q^2 zeta]] - 1, and the central element 2Z/(1+s^2).
struct MonopoleBlockData {
    AlgMatrix t;
    AlgMatrix ttilde;
    NCPoly z_element;
};
MonopoleBlockData etilde_block_data(const Presentation& sphere4_z);

// Structured text document: generators, precedence, rules, involution.
std::string export_presentation(const Presentation& P, const std::string& name);

} // namespace ncs
