#pragma once

// Concrete finite-group models behind a single element interface. Every group
// the classification needs has a faithful model built from five pieces:
// cyclic, dihedral, direct product, (Z_m)^dim semidirect products with a
// linear action, and projective 2x2 matrices. Quotients are added on top by
// coset tables.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regmap/element.hpp"

namespace regmap {

using Words = std::span<const std::int32_t>;
using MutableWords = std::span<std::int32_t>;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

/// Arithmetic of one group family. Implementations are immutable; `out`
/// never aliases the inputs.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual Family family() const = 0;
  virtual std::size_t width() const = 0;
  virtual std::uint64_t order() const = 0;
  virtual void identity(MutableWords out) const = 0;
  virtual void multiply(Words a, Words b, MutableWords out) const = 0;
  virtual void invert(Words a, MutableWords out) const = 0;
  /// Word vector is a canonical encoding of an element of this group.
  virtual bool contains(Words a) const = 0;
  virtual std::string format(Words a) const = 0;
  virtual std::string describe() const = 0;
};

using ModelPtr = std::shared_ptr<const GroupModel>;

class CyclicModel final : public GroupModel {
 public:
  explicit CyclicModel(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }

  Family family() const override { return Family::Cyclic; }
  std::size_t width() const override { return 1; }
  std::uint64_t order() const override { return n_; }
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  std::uint32_t n_;
};

/// D_{2n}: words [s, k] meaning rho^k sigma^s with sigma rho sigma = rho^{-1}.
class DihedralModel final : public GroupModel {
 public:
  explicit DihedralModel(std::uint32_t n);

  std::uint32_t rotations() const { return n_; }

  Family family() const override { return Family::Dihedral; }
  std::size_t width() const override { return 2; }
  std::uint64_t order() const override { return 2ull * n_; }
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  std::uint32_t n_;
};

class ProductModel final : public GroupModel {
 public:
  ProductModel(ModelPtr left, ModelPtr right);

  const GroupModel& left() const { return *left_; }
  const GroupModel& right() const { return *right_; }

  Family family() const override { return Family::Product; }
  std::size_t width() const override { return left_->width() + right_->width(); }
  std::uint64_t order() const override { return left_->order() * right_->order(); }
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  ModelPtr left_, right_;
};

/// dim x dim matrix over Z_m, row-major (dim <= 2).
struct ModMatrix {
  std::uint32_t dim = 2;
  std::uint32_t modulus = 1;
  std::array<std::int64_t, 4> e{};

  static ModMatrix identity(std::uint32_t dim, std::uint32_t modulus);
  ModMatrix operator*(const ModMatrix& o) const;
  std::array<std::int64_t, 2> apply(std::array<std::int64_t, 2> v) const;
  bool is_identity() const;
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

/// Homomorphism from an acting group into GL(dim, Z_m): the automorphism of
/// the normal part attached to each acting element.
class LinearAction {
 public:
  virtual ~LinearAction() = default;
  virtual std::uint32_t dim() const = 0;
  virtual std::uint32_t modulus() const = 0;
  virtual ModMatrix matrix(Words acting) const = 0;
  /// Short identifier used in group descriptions (e.g. "phi_x=1").
  virtual std::string id() const = 0;
};

using ActionPtr = std::shared_ptr<const LinearAction>;

/// Action of D_{2n} = <c, d> given by the matrices of the generating
/// reflections c = sigma and d = rho^{-1} sigma (so cd = rho).
class DihedralLinearAction final : public LinearAction {
 public:
  /// Throws InvalidArgument unless C^2 = D^2 = (CD)^n = I.
  DihedralLinearAction(std::string id, std::uint32_t n, ModMatrix c, ModMatrix d);

  std::uint32_t dim() const override { return c_.dim; }
  std::uint32_t modulus() const override { return c_.modulus; }
  ModMatrix matrix(Words acting) const override;
  std::string id() const override { return id_; }

  const ModMatrix& c_matrix() const { return c_; }
  const ModMatrix& d_matrix() const { return d_; }

 private:
  std::string id_;
  std::uint32_t n_;
  ModMatrix c_, d_;
  std::vector<ModMatrix> rho_powers_;  // (CD)^k
};

/// Scalar action of PGL(2,f) on Z_m: elements of PSL(2,f) act trivially,
/// the rest invert.
class InvertOutsidePslAction final : public LinearAction {
 public:
  InvertOutsidePslAction(std::uint32_t modulus, std::uint32_t field);

  std::uint32_t dim() const override { return 1; }
  std::uint32_t modulus() const override { return m_; }
  ModMatrix matrix(Words acting) const override;
  std::string id() const override { return "invert_outside_psl"; }

 private:
  std::uint32_t m_;
  std::uint32_t f_;
  std::vector<bool> square_;
};

/// (Z_m)^dim x| A with (v, a)(w, b) = (v + M(a) w, ab).
class SemidirectModel final : public GroupModel {
 public:
  SemidirectModel(ModelPtr acting, ActionPtr action);

  const GroupModel& acting() const { return *acting_; }
  const LinearAction& action() const { return *action_; }
  std::uint32_t normal_dim() const { return action_->dim(); }
  std::uint32_t normal_modulus() const { return action_->modulus(); }
  std::uint64_t normal_order() const;

  Family family() const override { return Family::Semidirect; }
  std::size_t width() const override { return action_->dim() + acting_->width(); }
  std::uint64_t order() const override { return normal_order() * acting_->order(); }
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  ModelPtr acting_;
  ActionPtr action_;
};

/// PGL(2,f) (or its PSL subgroup when `special`) on normalized matrices.
class ProjectiveModel final : public GroupModel {
 public:
  ProjectiveModel(std::uint32_t f, bool special);

  std::uint32_t field() const { return f_; }
  bool special() const { return special_; }
  /// Determinant of the stored representative is a square.
  bool in_psl(Words a) const;
  /// Canonical representative of the class of the given matrix.
  std::array<std::int32_t, 4> normalize(std::array<std::int64_t, 4> m) const;

  Family family() const override { return Family::Projective; }
  std::size_t width() const override { return 4; }
  std::uint64_t order() const override;
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  std::uint32_t f_;
  bool special_;
  std::vector<std::uint32_t> inverse_;
  std::vector<bool> square_;
};

struct NamedElement {
  std::string name;
  Element element;
};

/// Three group elements (r, t, l) of an algebraic map.
struct Triple {
  Element r, t, l;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A finite group: a model, a generating list, and its canonical family spec.
class FiniteGroup {
 public:
  FiniteGroup(ModelPtr model, std::string family, std::vector<NamedElement> generators,
              std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

  const GroupModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  /// Canonical spec text, e.g. "psl:f=11" or "g2:x=1,n=6,p=5".
  const std::string& family() const { return family_; }
  std::string describe() const { return model_->describe(); }
  std::uint64_t order() const { return model_->order(); }
  const std::vector<NamedElement>& generators() const { return generators_; }
  std::vector<Element> generator_elements() const;
  /// Throws InvalidArgument for an unknown name.
  const Element& generator(std::string_view name) const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  Element power(const Element& a, std::int64_t e) const;
  /// by * g * by^{-1}
  Element conjugate(const Element& g, const Element& by) const;
  Element commutator(const Element& a, const Element& b) const;
  bool contains(const Element& a) const;
  /// Builds an element from raw words; throws InvalidArgument if not canonical.
  Element make(std::initializer_list<std::int32_t> words) const;
  Element make(Words words) const;
  std::string format(const Element& a) const;

  std::uint64_t enumeration_limit() const { return enumeration_limit_; }
  FiniteGroup with_enumeration_limit(std::uint64_t limit) const;
  /// Throws OrderLimitExceeded when order() > enumeration_limit().
  void require_enumerable(std::string_view operation) const;

  /// Field size f for PSL(2,f)/PGL(2,f) models, empty otherwise.
  std::optional<std::uint32_t> projective_field() const;
  bool projective_special() const;
  /// Membership of a PGL(2,f) element in PSL(2,f); throws for other families.
  bool in_psl(const Element& a) const;

 private:
  void check_family(const Element& a) const;

  ModelPtr model_;
  std::string family_;
  std::vector<NamedElement> generators_;
  std::uint64_t enumeration_limit_;
};

/// Quotient G/N as coset indices; cosets are numbered by ascending minimal
/// representative and multiplied through their representatives.
class QuotientModel final : public GroupModel {
 public:
  /// `elements` lists all of the parent group; `normal` must already be
  /// verified to be a normal subgroup.
  QuotientModel(const FiniteGroup& parent, const std::vector<Element>& elements,
                const std::vector<Element>& normal);

  std::size_t index_of(const Element& g) const;
  const FiniteGroup& parent() const { return parent_; }
  const Element& representative(std::size_t index) const { return reps_[index]; }
  std::uint64_t normal_order() const { return normal_order_; }

  Family family() const override { return Family::Quotient; }
  std::size_t width() const override { return 1; }
  std::uint64_t order() const override { return reps_.size(); }
  void identity(MutableWords out) const override;
  void multiply(Words a, Words b, MutableWords out) const override;
  void invert(Words a, MutableWords out) const override;
  bool contains(Words a) const override;
  std::string format(Words a) const override;
  std::string describe() const override;

 private:
  FiniteGroup parent_;
  std::uint64_t normal_order_;
  std::vector<Element> reps_;
  ElementMap<std::uint32_t> coset_of_;
};

}  // namespace regmap
