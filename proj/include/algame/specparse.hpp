#ifndef ALGAME_SPECPARSE_HPP
#define ALGAME_SPECPARSE_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "algame/abelian.hpp"
#include "algame/engine.hpp"
#include "algame/finite_group.hpp"
#include "algame/finite_ring.hpp"

namespace algame {

/// Abelian group spec: `term (+ term)*`, term one of `Z`, `Z/<int>`,
/// `(Z/<int>)^<int>`. Whitespace is ignored.
FinGenAbGroup parse_abelian_spec(const std::string& text);

/// Element of an abelian group: comma-separated integers, torsion
/// coordinates first, then one per Z summand.
AbElement parse_abelian_element(const FinGenAbGroup& g, const std::string& text);

/// Group spec: `C<n>`, `D<n>`, `Dic<n>`, `S<n>`, `A<n>`, `Q8`, `SG16_<id>`,
/// `PQ(<p>,<q>)`, joined with `x` for direct products. A string starting
/// with `{` (or `@file`) is the JSON permutation form
/// {"degree": d, "generators": [[...], ...]} with 0-based images.
FiniteGroup parse_group_spec(const std::string& text);

/// Ring spec: `Z/<n>`, `GF(<p>)`, `SqZero(<p>,<d>)`, `Cusp(<p>,<n>)`,
/// `DualTrunc(<p>,<n>)`, `Mon(<p>,<n>,<m>)`, joined with `x`. A string
/// starting with `{` (or `@file`) is the JSON structure-constant form
/// {"additive_orders": [...], "one": [...], "basis_products": [[[...]]]}.
FiniteCommRing parse_ring_spec(const std::string& text);

/// Nim spec: `*<k>` or a plain integer.
std::shared_ptr<const NimPile> parse_nim_spec(const std::string& text);

/// One parsed structure of any kind.
struct StructureSpec {
    enum class Kind { Abelian, Group, Ring, Nim, Compound } kind;
    std::string text; // original input

    // Filled according to kind.
    FinGenAbGroup abelian;
    std::shared_ptr<const FiniteGroup> group;
    std::shared_ptr<const FiniteCommRing> ring;
    std::shared_ptr<const NimPile> nim;
    std::vector<StructureSpec> components; // for compounds

    /// Engine position for this structure (for groups: the quotient game).
    PositionPtr position() const;
};

/// Compound spec: components separated by `|`, each prefixed with its kind,
/// e.g. `abelian:Z/4 + Z/8 | nim:*2 | ring:GF(2)`.
StructureSpec parse_compound_spec(const std::string& text);

StructureSpec make_abelian_spec(const std::string& text);
StructureSpec make_group_spec(const std::string& text);
StructureSpec make_ring_spec(const std::string& text);
StructureSpec make_nim_spec(const std::string& text);

} // namespace algame

#endif
