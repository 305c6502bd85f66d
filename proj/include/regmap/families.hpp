#pragma once

// Constructors for the explicit groups and maps of the classification, and
// the text form "tag:key=value,..." used to name them.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "regmap/group.hpp"
#include "regmap/maps.hpp"

namespace regmap {

/// D_{2j} x D_{2k}, j and k odd.
struct G1Params {
  std::int64_t j = 0, k = 0;
  friend bool operator==(const G1Params&, const G1Params&) = default;
};
/// (Z_p)^2 x| D_{2n} with the action fixed by x.
struct G2Params {
  std::int64_t x = 0, n = 0, p = 0;
  friend bool operator==(const G2Params&, const G2Params&) = default;
};
/// (Z_2)^2 x| D_{2u}, u = 3 mod 6.
struct G3Params {
  std::int64_t u = 0;
  friend bool operator==(const G3Params&, const G3Params&) = default;
};
struct PslParams {
  std::int64_t f = 0;
  friend bool operator==(const PslParams&, const PslParams&) = default;
};
struct PglParams {
  std::int64_t f = 0;
  friend bool operator==(const PglParams&, const PglParams&) = default;
};
/// Z_d x| PGL(2,f), outer elements inverting Z_d.
struct ZdPglParams {
  std::int64_t d = 0, f = 0;
  friend bool operator==(const ZdPglParams&, const ZdPglParams&) = default;
};
struct DihedralParams {
  std::int64_t n = 0;
  friend bool operator==(const DihedralParams&, const DihedralParams&) = default;
};
struct CyclicParams {
  std::int64_t n = 0;
  friend bool operator==(const CyclicParams&, const CyclicParams&) = default;
};

using GroupSpec =
    std::variant<G1Params, G2Params, G3Params, PslParams, PglParams, ZdPglParams, DihedralParams, CyclicParams>;

struct M1Params {
  std::int64_t j = 0, k = 0;
  friend bool operator==(const M1Params&, const M1Params&) = default;
};
struct M2Params {
  std::int64_t x = 0, n = 0, p = 0;
  friend bool operator==(const M2Params&, const M2Params&) = default;
};
struct M3Params {
  std::int64_t u = 0;
  friend bool operator==(const M3Params&, const M3Params&) = default;
};

using MapSpec = std::variant<M1Params, M2Params, M3Params>;

/// A lift to Z_d x| PGL(2,f) of a base map of ordered type (m, n).
struct LiftParams {
  std::int64_t d = 0, f = 0, m = 0, n = 0;
  friend bool operator==(const LiftParams&, const LiftParams&) = default;
};

/// Strict parser for "psl:f=11", "g2:x=1,n=6,p=5", ... Values may also be
/// given positionally ("g1:3,5"). Throws ParseError with the offending span.
GroupSpec parse_group_spec(std::string_view text);
MapSpec parse_map_spec(std::string_view text);
/// Parses the parameter list of `tag` alone, e.g. ("m2", "1,6,5").
MapSpec parse_map_params(std::string_view tag, std::string_view params);

/// "d=5,f=7,m=3,n=8" or "5,7,3,8".
LiftParams parse_lift_params(std::string_view params);

std::string to_text(const GroupSpec& spec);
std::string to_text(const MapSpec& spec);
/// "lift:d=5,f=7,m=3,n=8"
std::string to_text(const LiftParams& spec);

FiniteGroup build_group(const GroupSpec& spec, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
AlgebraicMap build_map(const MapSpec& spec, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Generators a, b (ab of order j) and c, d (cd of order k).
FiniteGroup build_g1(std::int64_t j, std::int64_t k, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
/// Triple (bc, a, d); type (2j, 2k).
AlgebraicMap build_m1(std::int64_t j, std::int64_t k, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Generators a, b of the normal (Z_p)^2 and reflections c, d with
/// a^c = a^-1, b^c = a^x b, a^d = b, b^d = a. Requires x in S(n,p).
FiniteGroup build_g2(std::int64_t x, std::int64_t n, std::int64_t p,
                     std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
/// Triple (c, ab(cd)^{n/2}, d); type (2p, n).
AlgebraicMap build_m2(std::int64_t x, std::int64_t n, std::int64_t p,
                      std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Generators a, b of the normal (Z_2)^2 and reflections c, d with
/// a^c = b, b^c = a, a^d = a, b^d = ab.
FiniteGroup build_g3(std::int64_t u, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
/// Triple (c, d, a); type (u, 4).
AlgebraicMap build_m3(std::int64_t u, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Generators x = [[1,1],[0,1]], y = [[0,1],[-1,0]] (and z = diag(g,1) with g
/// the smallest non-residue for PGL).
FiniteGroup build_psl2(std::int64_t f, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
FiniteGroup build_pgl2(std::int64_t f, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Generators alpha (of order d) and the PGL(2,f) generators.
FiniteGroup build_zd_pgl2(std::int64_t d, std::int64_t f, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

FiniteGroup build_dihedral(std::int64_t n, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);
FiniteGroup build_cyclic(std::int64_t n, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// Lifts a map (x, y, z) on PGL(2,f) with x, y outside PSL(2,f) and z inside
/// to (alpha^e x, y, z) on Z_d x| PGL(2,f), e = alpha_power. The result has
/// type (d|xy|, |xz|). Requires gcd(d, |xy|) = gcd(d, e) = 1.
AlgebraicMap lift_map(std::int64_t d, const AlgebraicMap& base, std::int64_t alpha_power = 1);

/// Image of a PGL(2,f) element inside Z_d x| PGL(2,f).
Element embed_in_lift(const FiniteGroup& lifted, const Element& pgl_element);

}  // namespace regmap
