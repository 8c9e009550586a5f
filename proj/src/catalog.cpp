#include "ncs/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "ncs/errors.hpp"
#include "ncs/exprio.hpp"

namespace ncs {

namespace {

const ParamScalar one = ParamScalar::of(1L);
ParamScalar qq() { return ParamScalar::var(Param::q, 2); }
ParamScalar pp(int e = 1) { return ParamScalar::var(Param::p, e); }
ParamScalar ss() { return ParamScalar::var(Param::s, 2); }

} // namespace

Presentation make_sphere2() {
    PresentationBuilder b({"x", "y", "z"}, {"y", "x", "z"});
    NCPoly x = b.gen("x"), y = b.gen("y"), z = b.gen("z");

    b.add_relation(z * x - qq() * (x * z));
    b.add_relation(y * z - qq() * (z * y));
    b.add_relation(x * y - (z - one) * (z + ss()));
    b.add_relation(y * x - (qq() * z - one) * (qq() * z + ss()));

    b.set_involution_image("x", -y);
    b.set_involution_image("y", -x);
    b.set_involution_image("z", z);
    return b.build();
}

Presentation make_sphere4() {
    PresentationBuilder b({"xi", "eta", "zeta", "U", "V"}, {"eta", "xi", "U", "V", "zeta"});
    NCPoly xi = b.gen("xi"), eta = b.gen("eta"), zeta = b.gen("zeta");
    NCPoly U = b.gen("U"), V = b.gen("V");

    b.add_relation(zeta * xi - qq() * (xi * zeta));
    b.add_relation(eta * zeta - qq() * (zeta * eta));
    b.add_relation(xi * U - pp() * (U * xi));
    b.add_relation(V * xi - pp() * (xi * V));
    b.add_relation(eta * V - pp() * (V * eta));
    b.add_relation(U * eta - pp() * (eta * U));
    b.add_relation(U * V - V * U);
    b.add_relation(U * zeta - zeta * U);
    b.add_relation(V * zeta - zeta * V);
    b.add_relation(xi * eta - ((zeta - one) * (zeta + ss()) + U * V));
    b.add_relation(eta * xi - ((qq() * zeta - one) * (qq() * zeta + ss()) + U * V));

    b.set_involution_image("xi", -eta);
    b.set_involution_image("eta", -xi);
    b.set_involution_image("zeta", zeta);
    b.set_involution_image("U", V);
    b.set_involution_image("V", U);
    return b.build();
}

Presentation make_sphere4_star() {
    PresentationBuilder b({"xi", "xistar", "zeta", "U", "Ustar"},
                          {"xistar", "xi", "U", "Ustar", "zeta"});
    NCPoly xi = b.gen("xi"), xis = b.gen("xistar"), zeta = b.gen("zeta");
    NCPoly U = b.gen("U"), Us = b.gen("Ustar");

    // The published relations...
    b.add_relation(zeta * xi - qq() * (xi * zeta));
    b.add_relation(xi * U - pp() * (U * xi));
    b.add_relation(Us * xi - pp() * (xi * Us));
    b.add_relation(U * Us - Us * U);
    b.add_relation(U * zeta - zeta * U);
    b.add_relation(xi * xis + (zeta - one) * (zeta + ss()) + U * Us);
    b.add_relation(xis * xi + (qq() * zeta - one) * (qq() * zeta + ss()) + U * Us);
    // ...plus their images under the involution (independent as rewrite
    // rules over the free algebra on the five symbols).
    b.add_relation(xis * zeta - qq() * (zeta * xis));
    b.add_relation(xis * Us - pp() * (Us * xis));
    b.add_relation(xis * U - pp(-1) * (U * xis));
    b.add_relation(Us * zeta - zeta * Us);

    b.set_involution_image("xi", xis);
    b.set_involution_image("xistar", xi);
    b.set_involution_image("zeta", zeta);
    b.set_involution_image("U", Us);
    b.set_involution_image("Ustar", U);
    return b.build();
}

Presentation extend_with_Z(const Presentation& P, const NCPoly& squareOf, int rank,
                           const std::string& name) {
    NCPoly sq = normal_form(P, squareOf);
    if (auto g = centrality_witness(P, sq))
        throw construction_error("Z^2 candidate is not central: fails to commute with '" + *g + "'");
    if (P.find_generator(name))
        throw construction_error("generator name '" + name + "' already in use");
    if (rank < 0 || static_cast<std::size_t>(rank) > P.generator_count())
        throw construction_error("Z precedence rank out of range");

    std::vector<std::string> names = P.generator_names();
    names.push_back(name);

    // Existing generators ordered by descending rank, Z spliced in so that
    // exactly `rank` of them stay below it.
    std::vector<GenId> by_rank(P.generator_count());
    for (std::size_t g = 0; g < P.generator_count(); ++g) by_rank[g] = static_cast<GenId>(g);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](GenId a, GenId b) { return P.order().rank(a) > P.order().rank(b); });
    std::vector<std::string> precedence;
    for (std::size_t i = 0; i < by_rank.size(); ++i) {
        if (by_rank.size() - i == static_cast<std::size_t>(rank)) precedence.push_back(name);
        precedence.push_back(P.name_of(by_rank[i]));
    }
    if (rank == 0) precedence.push_back(name);

    PresentationBuilder b(names, precedence);
    for (const NCPoly& rel : P.defining_relations()) b.add_relation(rel);
    NCPoly Z = b.gen(name);
    for (std::size_t g = 0; g < P.generator_count(); ++g) {
        NCPoly gp = NCPoly::gen(static_cast<GenId>(g));
        b.add_relation(gp * Z - Z * gp);
    }
    b.add_relation(Z * Z - sq);

    if (P.has_involution()) {
        for (std::size_t g = 0; g < P.generator_count(); ++g)
            b.set_involution_image(P.name_of(static_cast<GenId>(g)),
                                   P.involution_image(static_cast<GenId>(g)));
        b.set_involution_image(name, Z);
    }
    return b.build();
}

Presentation make_sphere4_z() {
    Presentation s4 = make_sphere4();
    NCPoly UV = NCPoly::gen(*s4.find_generator("U")) * NCPoly::gen(*s4.find_generator("V"));
    return extend_with_Z(s4, UV, 1);
}

const std::vector<CatalogEntry>& list_catalog() {
    static const Presentation sphere2 = make_sphere2();
    static const Presentation sphere4 = make_sphere4();
    static const Presentation sphere4_star = make_sphere4_star();
    static const Presentation sphere4_z = [] {
        NCPoly UV = NCPoly::gen(*sphere4.find_generator("U")) * NCPoly::gen(*sphere4.find_generator("V"));
        return extend_with_Z(sphere4, UV, 1);
    }();
    static const std::vector<CatalogEntry> entries = {
        {"sphere2", "quantum 2-sphere A(S2_{q,s}); *-algebra for real q^2, s^2", sphere2},
        {"sphere4", "quantum 4-sphere A(S4_{p,q,s}); *-algebra for real q^2, s^2 and |p| = 1", sphere4},
        {"sphere4_star", "*-presentation of the 4-sphere on xi, xi*, zeta, U, U*", sphere4_star},
        {"sphere4_z", "A(S4_{p,q,s}) with central self-adjoint Z, Z^2 = UV", sphere4_z},
    };
    return entries;
}

const Presentation& catalog_presentation(const std::string& name) {
    for (const CatalogEntry& e : list_catalog())
        if (e.name == name) return e.presentation;
    throw construction_error("unknown catalog presentation '" + name + "'");
}

AlgMatrix projector_f(const Presentation& P2) {
    NCPoly x = NCPoly::gen(*P2.find_generator("x"));
    NCPoly y = NCPoly::gen(*P2.find_generator("y"));
    NCPoly z = NCPoly::gen(*P2.find_generator("z"));
    ParamScalar c = ParamScalar::of(one + ss()).inv();
    std::vector<NCPoly> entries = {
        NCPoly::one() - z, x,
        -y, NCPoly::unit(ss()) + qq() * z,
    };
    for (auto& e : entries) e = c * e;
    return AlgMatrix::from_entries(P2, 2, 2, std::move(entries));
}

AlgMatrix projector_e(const Presentation& P4) {
    NCPoly xi = NCPoly::gen(*P4.find_generator("xi"));
    NCPoly eta = NCPoly::gen(*P4.find_generator("eta"));
    NCPoly zeta = NCPoly::gen(*P4.find_generator("zeta"));
    NCPoly U = NCPoly::gen(*P4.find_generator("U"));
    NCPoly V = NCPoly::gen(*P4.find_generator("V"));
    NCPoly zero;
    ParamScalar c = ParamScalar::of(one + ss()).inv();
    std::vector<NCPoly> entries = {
        NCPoly::one() - zeta, zero,                        U,                  xi,
        zero,                 NCPoly::one() - qq() * zeta, -eta,               -(pp() * V),
        V,                    xi,                          NCPoly::unit(ss()) + zeta, zero,
        -eta,                 -(pp(-1) * U),               zero,               NCPoly::unit(ss()) + qq() * zeta,
    };
    for (auto& e : entries) e = c * e;
    return AlgMatrix::from_entries(P4, 4, 4, std::move(entries));
}

AlgMatrix projector_etilde(const Presentation& P4Z) {
    NCPoly xi = NCPoly::gen(*P4Z.find_generator("xi"));
    NCPoly eta = NCPoly::gen(*P4Z.find_generator("eta"));
    NCPoly zeta = NCPoly::gen(*P4Z.find_generator("zeta"));
    NCPoly Z = NCPoly::gen(*P4Z.find_generator("Z"));
    NCPoly zero;
    ParamScalar two = ParamScalar::of(2L);
    NCPoly plus = NCPoly::unit(one + ss()) + two * Z;   // 1 + s^2 + 2Z
    NCPoly minus = NCPoly::unit(one + ss()) - two * Z;  // 1 + s^2 - 2Z
    NCPoly a = NCPoly::unit(one - ss()) - two * zeta;   // 1 - s^2 - 2 zeta
    NCPoly d = NCPoly::unit(ss() - one) + two * (qq() * zeta); // s^2 - 1 + 2 q^2 zeta
    ParamScalar c = (ParamScalar::of(2L) * (one + ss())).inv();
    std::vector<NCPoly> entries = {
        plus, zero,  a,     two * xi,
        zero, plus,  -(two * eta), d,
        a,    two * xi, minus, zero,
        -(two * eta), d, zero, minus,
    };
    for (auto& e : entries) e = c * e;
    return AlgMatrix::from_entries(P4Z, 4, 4, std::move(entries));
}

MonopoleBlockData etilde_block_data(const Presentation& P4Z) {
    NCPoly xi = NCPoly::gen(*P4Z.find_generator("xi"));
    NCPoly eta = NCPoly::gen(*P4Z.find_generator("eta"));
    NCPoly zeta = NCPoly::gen(*P4Z.find_generator("zeta"));
    NCPoly Z = NCPoly::gen(*P4Z.find_generator("Z"));
    ParamScalar two_over = ParamScalar::of(2L) / ParamScalar::of(one + ss());
    std::vector<NCPoly> entries = {
        two_over * (NCPoly::one() - zeta) - NCPoly::one(), two_over * xi,
        -(two_over * eta), two_over * (NCPoly::unit(ss()) + qq() * zeta) - NCPoly::one(),
    };
    AlgMatrix t = AlgMatrix::from_entries(P4Z, 2, 2, entries);
    return MonopoleBlockData{t, t, normal_form(P4Z, two_over * Z)};
}

std::string export_presentation(const Presentation& P, const std::string& name) {
    std::ostringstream os;
    os << "# ncsphere presentation schema v1\n";
    os << "name " << name << "\n";
    os << "generators";
    for (auto& n : P.generator_names()) os << " " << n;
    os << "\n";

    std::vector<GenId> by_rank(P.generator_count());
    for (std::size_t g = 0; g < P.generator_count(); ++g) by_rank[g] = static_cast<GenId>(g);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](GenId a, GenId b) { return P.order().rank(a) > P.order().rank(b); });
    os << "precedence";
    for (GenId g : by_rank) os << " " << P.name_of(g);
    os << "\n";

    for (const RewriteRule& r : P.rules())
        os << "rule " << format_word(r.lhs, P) << " -> " << format_element(r.rhs, P) << "\n";
    if (P.has_involution())
        for (std::size_t g = 0; g < P.generator_count(); ++g)
            os << "involution " << P.name_of(static_cast<GenId>(g)) << " -> "
               << format_element(P.involution_image(static_cast<GenId>(g)), P) << "\n";
    os << "confluence "
       << (P.confluence_status() == Confluence::verified ? "verified" : "unchecked") << "\n";
    return os.str();
}

} // namespace ncs
