#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace regmap {

/// Top-level tag of a group element. Nested families (the factors of a
/// product, the two parts of a semidirect product) are encoded in the words.
enum class Family : std::uint8_t {
  Cyclic = 1,
  Dihedral = 2,
  Product = 3,
  Semidirect = 4,
  Projective = 5,
  Quotient = 6,
};

std::string_view family_name(Family f);

inline constexpr std::size_t kMaxWords = 8;

/// Version of the byte layout produced by Element::bytes().
inline constexpr std::uint8_t kElementSerializationVersion = 1;

/// A group element as a short fixed-capacity word vector plus its family tag.
///
/// Word layouts (all residues non-negative):
///   Cyclic      [k]                      k mod n
///   Dihedral    [s, k]                   rho^k sigma^s, s in {0,1}
///   Product     [left words..., right words...]
///   Semidirect  [v_0, (v_1), acting words...]   normal part is (Z_m)^dim
///   Projective  [a, b, c, d]             first nonzero entry equal to 1
///   Quotient    [coset index]
class Element {
 public:
  Element() = default;
  Element(Family family, std::span<const std::int32_t> words);

  Family family() const noexcept { return family_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::int32_t> words() const noexcept { return {words_.data(), size_}; }
  std::int32_t operator[](std::size_t i) const noexcept { return words_[i]; }

  /// Canonical byte serialization: version, tag, word count, then each word
  /// as 4 little-endian bytes.
  std::string bytes() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  Family family_ = Family::Cyclic;
  std::uint8_t size_ = 0;
  std::array<std::int32_t, kMaxWords> words_{};
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

using ElementSet = std::unordered_set<Element, ElementHash>;
template <class V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

}  // namespace regmap
