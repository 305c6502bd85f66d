#include "regmap/element.hpp"

#include "regmap/errors.hpp"

namespace regmap {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Product: return "product";
    case Family::Semidirect: return "semidirect";
    case Family::Projective: return "projective";
    case Family::Quotient: return "quotient";
  }
  return "unknown";
}

Element::Element(Family family, std::span<const std::int32_t> words) : family_(family) {
  if (words.size() > kMaxWords) throw InternalError("element wider than kMaxWords");
  size_ = static_cast<std::uint8_t>(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) words_[i] = words[i];
}

std::string Element::bytes() const {
  std::string out;
  out.reserve(3 + 4 * size_);
  out.push_back(static_cast<char>(kElementSerializationVersion));
  out.push_back(static_cast<char>(family_));
  out.push_back(static_cast<char>(size_));
  for (std::size_t i = 0; i < size_; ++i) {
    auto w = static_cast<std::uint32_t>(words_[i]);
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  }
  return out;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  // FNV-1a over the same bytes as Element::bytes(), without materializing them.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(kElementSerializationVersion);
  mix(static_cast<std::uint8_t>(e.family()));
  mix(static_cast<std::uint8_t>(e.size()));
  for (std::int32_t w : e.words()) {
    auto u = static_cast<std::uint32_t>(w);
    for (int b = 0; b < 4; ++b) mix(static_cast<std::uint8_t>((u >> (8 * b)) & 0xff));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace regmap
