#include "regmap/group.hpp"

#include <algorithm>
#include <sstream>

#include "regmap/errors.hpp"
#include "regmap/fields.hpp"

namespace regmap {

namespace {

std::int32_t mod(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::int32_t>(r);
}

bool in_range(std::int32_t v, std::uint32_t m) { return v >= 0 && static_cast<std::uint32_t>(v) < m; }

}  // namespace

// ------------------------------------------------------------------ cyclic

CyclicModel::CyclicModel(std::uint32_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
}

void CyclicModel::identity(MutableWords out) const { out[0] = 0; }

void CyclicModel::multiply(Words a, Words b, MutableWords out) const {
  out[0] = mod(static_cast<std::int64_t>(a[0]) + b[0], n_);
}

void CyclicModel::invert(Words a, MutableWords out) const { out[0] = mod(-static_cast<std::int64_t>(a[0]), n_); }

bool CyclicModel::contains(Words a) const { return a.size() == 1 && in_range(a[0], n_); }

std::string CyclicModel::format(Words a) const { return "a^" + std::to_string(a[0]); }

std::string CyclicModel::describe() const { return "Z_" + std::to_string(n_); }

// ---------------------------------------------------------------- dihedral

DihedralModel::DihedralModel(std::uint32_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("dihedral group needs n >= 1");
}

void DihedralModel::identity(MutableWords out) const {
  out[0] = 0;
  out[1] = 0;
}

void DihedralModel::multiply(Words a, Words b, MutableWords out) const {
  // rho^k1 sigma^s1 rho^k2 sigma^s2 = rho^(k1 + (-1)^s1 k2) sigma^(s1+s2)
  const std::int64_t k2 = a[0] ? -static_cast<std::int64_t>(b[1]) : b[1];
  out[0] = (a[0] + b[0]) & 1;
  out[1] = mod(a[1] + k2, n_);
}

void DihedralModel::invert(Words a, MutableWords out) const {
  out[0] = a[0];
  out[1] = a[0] ? a[1] : mod(-static_cast<std::int64_t>(a[1]), n_);
}

bool DihedralModel::contains(Words a) const {
  return a.size() == 2 && (a[0] == 0 || a[0] == 1) && in_range(a[1], n_);
}

std::string DihedralModel::format(Words a) const {
  std::string out = "rho^" + std::to_string(a[1]);
  if (a[0]) out += " sigma";
  return out;
}

std::string DihedralModel::describe() const { return "D_" + std::to_string(2ull * n_); }

// ----------------------------------------------------------------- product

ProductModel::ProductModel(ModelPtr left, ModelPtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (width() > kMaxWords) throw InvalidArgument("product group too wide to encode");
}

void ProductModel::identity(MutableWords out) const {
  const std::size_t w = left_->width();
  left_->identity(out.first(w));
  right_->identity(out.subspan(w));
}

void ProductModel::multiply(Words a, Words b, MutableWords out) const {
  const std::size_t w = left_->width();
  left_->multiply(a.first(w), b.first(w), out.first(w));
  right_->multiply(a.subspan(w), b.subspan(w), out.subspan(w));
}

void ProductModel::invert(Words a, MutableWords out) const {
  const std::size_t w = left_->width();
  left_->invert(a.first(w), out.first(w));
  right_->invert(a.subspan(w), out.subspan(w));
}

bool ProductModel::contains(Words a) const {
  const std::size_t w = left_->width();
  return a.size() == width() && left_->contains(a.first(w)) && right_->contains(a.subspan(w));
}

std::string ProductModel::format(Words a) const {
  const std::size_t w = left_->width();
  return "(" + left_->format(a.first(w)) + ", " + right_->format(a.subspan(w)) + ")";
}

std::string ProductModel::describe() const { return left_->describe() + " x " + right_->describe(); }

// --------------------------------------------------------------- ModMatrix

ModMatrix ModMatrix::identity(std::uint32_t dim, std::uint32_t modulus) {
  ModMatrix m{dim, modulus, {}};
  if (dim == 1) {
    m.e[0] = 1 % modulus;
  } else {
    m.e = {1 % modulus, 0, 0, 1 % modulus};
  }
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (o.dim != dim || o.modulus != modulus) throw InternalError("ModMatrix shape mismatch");
  ModMatrix r{dim, modulus, {}};
  if (dim == 1) {
    r.e[0] = mod(e[0] * o.e[0], modulus);
    return r;
  }
  r.e[0] = mod(e[0] * o.e[0] + e[1] * o.e[2], modulus);
  r.e[1] = mod(e[0] * o.e[1] + e[1] * o.e[3], modulus);
  r.e[2] = mod(e[2] * o.e[0] + e[3] * o.e[2], modulus);
  r.e[3] = mod(e[2] * o.e[1] + e[3] * o.e[3], modulus);
  return r;
}

std::array<std::int64_t, 2> ModMatrix::apply(std::array<std::int64_t, 2> v) const {
  if (dim == 1) return {mod(e[0] * v[0], modulus), 0};
  return {mod(e[0] * v[0] + e[1] * v[1], modulus), mod(e[2] * v[0] + e[3] * v[1], modulus)};
}

bool ModMatrix::is_identity() const { return *this == identity(dim, modulus); }

// ----------------------------------------------------------------- actions

DihedralLinearAction::DihedralLinearAction(std::string id, std::uint32_t n, ModMatrix c, ModMatrix d)
    : id_(std::move(id)), n_(n), c_(c), d_(d) {
  if (c.dim != d.dim || c.modulus != d.modulus) throw InvalidArgument("action matrices differ in shape");
  for (auto& m : {&c_, &d_})
    for (auto& x : m->e) x = mod(x, m->modulus);
  if (!(c_ * c_).is_identity() || !(d_ * d_).is_identity())
    throw InvalidArgument(id_ + ": reflection matrices must be involutions");
  const ModMatrix rho = c_ * d_;
  rho_powers_.reserve(n);
  ModMatrix power = ModMatrix::identity(c.dim, c.modulus);
  for (std::uint32_t k = 0; k < n; ++k) {
    rho_powers_.push_back(power);
    power = power * rho;
  }
  if (!power.is_identity()) throw InvalidArgument(id_ + ": (CD)^n is not the identity");
}

ModMatrix DihedralLinearAction::matrix(Words acting) const {
  const ModMatrix& rk = rho_powers_[static_cast<std::size_t>(acting[1])];
  return acting[0] ? rk * c_ : rk;
}

InvertOutsidePslAction::InvertOutsidePslAction(std::uint32_t modulus, std::uint32_t field)
    : m_(modulus), f_(field), square_(field, false) {
  if (modulus == 0) throw InvalidArgument("cyclic modulus must be positive");
  for (std::uint64_t y = 0; y < field; ++y) square_[y * y % field] = true;
}

ModMatrix InvertOutsidePslAction::matrix(Words acting) const {
  const std::int64_t det = mod(static_cast<std::int64_t>(acting[0]) * acting[3] -
                                   static_cast<std::int64_t>(acting[1]) * acting[2], f_);
  ModMatrix m{1, m_, {}};
  m.e[0] = square_[static_cast<std::size_t>(det)] ? 1 % m_ : mod(-1, m_);
  return m;
}

// -------------------------------------------------------------- semidirect

SemidirectModel::SemidirectModel(ModelPtr acting, ActionPtr action)
    : acting_(std::move(acting)), action_(std::move(action)) {
  if (action_->dim() < 1 || action_->dim() > 2) throw InvalidArgument("normal part must have dimension 1 or 2");
  if (width() > kMaxWords) throw InvalidArgument("semidirect product too wide to encode");
}

std::uint64_t SemidirectModel::normal_order() const {
  std::uint64_t m = action_->modulus();
  return action_->dim() == 1 ? m : m * m;
}

void SemidirectModel::identity(MutableWords out) const {
  const std::size_t k = action_->dim();
  for (std::size_t i = 0; i < k; ++i) out[i] = 0;
  acting_->identity(out.subspan(k));
}

void SemidirectModel::multiply(Words a, Words b, MutableWords out) const {
  const std::size_t k = action_->dim();
  const std::uint32_t m = action_->modulus();
  const ModMatrix act = action_->matrix(a.subspan(k));
  const auto w = act.apply({b[0], k == 2 ? b[1] : 0});
  for (std::size_t i = 0; i < k; ++i) out[i] = mod(a[i] + w[i], m);
  acting_->multiply(a.subspan(k), b.subspan(k), out.subspan(k));
}

void SemidirectModel::invert(Words a, MutableWords out) const {
  // (v, a)^{-1} = (-M(a^{-1}) v, a^{-1})
  const std::size_t k = action_->dim();
  const std::uint32_t m = action_->modulus();
  acting_->invert(a.subspan(k), out.subspan(k));
  const ModMatrix act = action_->matrix(Words(out.subspan(k)));
  const auto w = act.apply({a[0], k == 2 ? a[1] : 0});
  for (std::size_t i = 0; i < k; ++i) out[i] = mod(-w[i], m);
}

bool SemidirectModel::contains(Words a) const {
  const std::size_t k = action_->dim();
  if (a.size() != width()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!in_range(a[i], action_->modulus())) return false;
  return acting_->contains(a.subspan(k));
}

std::string SemidirectModel::format(Words a) const {
  const std::size_t k = action_->dim();
  std::string v = std::to_string(a[0]);
  if (k == 2) v += "," + std::to_string(a[1]);
  return "(" + v + " | " + acting_->format(a.subspan(k)) + ")";
}

std::string SemidirectModel::describe() const {
  std::string normal = "Z_" + std::to_string(action_->modulus());
  if (action_->dim() == 2) normal += "^2";
  return normal + " x|_" + action_->id() + " (" + acting_->describe() + ")";
}

// -------------------------------------------------------------- projective

ProjectiveModel::ProjectiveModel(std::uint32_t f, bool special)
    : f_(f), special_(special), inverse_(f, 0), square_(f, false) {
  require_odd_prime(f, "f");
  for (std::uint64_t y = 0; y < f; ++y) square_[y * y % f] = true;
  for (std::uint32_t x = 1; x < f; ++x) inverse_[x] = FpElement(x, f).inverse().value();
}

std::uint64_t ProjectiveModel::order() const {
  const std::uint64_t full = static_cast<std::uint64_t>(f_) * (static_cast<std::uint64_t>(f_) * f_ - 1);
  return special_ ? full / 2 : full;
}

std::array<std::int32_t, 4> ProjectiveModel::normalize(std::array<std::int64_t, 4> m) const {
  std::array<std::int32_t, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = mod(m[i], f_);
  std::size_t lead = 0;
  while (lead < 4 && r[lead] == 0) ++lead;
  if (lead == 4) throw InvalidArgument("zero matrix has no projective class");
  const std::int64_t scale = inverse_[static_cast<std::size_t>(r[lead])];
  for (auto& x : r) x = mod(x * scale, f_);
  return r;
}

bool ProjectiveModel::in_psl(Words a) const {
  const std::int64_t det = mod(static_cast<std::int64_t>(a[0]) * a[3] - static_cast<std::int64_t>(a[1]) * a[2], f_);
  return det != 0 && square_[static_cast<std::size_t>(det)];
}

void ProjectiveModel::identity(MutableWords out) const {
  out[0] = 1;
  out[1] = 0;
  out[2] = 0;
  out[3] = 1;
}

void ProjectiveModel::multiply(Words a, Words b, MutableWords out) const {
  const std::int64_t a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
  const auto r = normalize({a0 * b[0] + a1 * b[2], a0 * b[1] + a1 * b[3], a2 * b[0] + a3 * b[2], a2 * b[1] + a3 * b[3]});
  std::copy(r.begin(), r.end(), out.begin());
}

void ProjectiveModel::invert(Words a, MutableWords out) const {
  const auto r = normalize({a[3], -static_cast<std::int64_t>(a[1]), -static_cast<std::int64_t>(a[2]), a[0]});
  std::copy(r.begin(), r.end(), out.begin());
}

bool ProjectiveModel::contains(Words a) const {
  if (a.size() != 4) return false;
  for (auto x : a)
    if (!in_range(x, f_)) return false;
  const std::int64_t det = mod(static_cast<std::int64_t>(a[0]) * a[3] - static_cast<std::int64_t>(a[1]) * a[2], f_);
  if (det == 0) return false;
  const auto n = normalize({a[0], a[1], a[2], a[3]});
  if (!std::equal(n.begin(), n.end(), a.begin())) return false;
  return !special_ || square_[static_cast<std::size_t>(det)];
}

std::string ProjectiveModel::format(Words a) const {
  std::ostringstream os;
  os << "[[" << a[0] << "," << a[1] << "],[" << a[2] << "," << a[3] << "]]";
  return os.str();
}

std::string ProjectiveModel::describe() const {
  return std::string(special_ ? "PSL(2," : "PGL(2,") + std::to_string(f_) + ")";
}

// ------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(ModelPtr model, std::string family, std::vector<NamedElement> generators,
                         std::uint64_t enumeration_limit)
    : model_(std::move(model)),
      family_(std::move(family)),
      generators_(std::move(generators)),
      enumeration_limit_(enumeration_limit) {
  if (!model_) throw InvalidArgument("group model is null");
  if (enumeration_limit_ == 0) throw InvalidArgument("enumeration limit must be positive");
  for (const auto& g : generators_)
    if (!contains(g.element)) throw InvalidArgument("generator " + g.name + " is not in " + describe());
}

std::vector<Element> FiniteGroup::generator_elements() const {
  std::vector<Element> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.element);
  return out;
}

const Element& FiniteGroup::generator(std::string_view name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.element;
  throw InvalidArgument("no generator named '" + std::string(name) + "' in " + family_);
}

void FiniteGroup::check_family(const Element& a) const {
  if (a.family() != model_->family() || a.size() != model_->width())
    throw FamilyMismatch("element of family " + std::string(family_name(a.family())) + " used in " + describe());
}

Element FiniteGroup::identity() const {
  std::array<std::int32_t, kMaxWords> buf{};
  MutableWords out(buf.data(), model_->width());
  model_->identity(out);
  return Element(model_->family(), out);
}

Element FiniteGroup::multiply(const Element& a, const Element& b) const {
  check_family(a);
  check_family(b);
  std::array<std::int32_t, kMaxWords> buf{};
  MutableWords out(buf.data(), model_->width());
  model_->multiply(a.words(), b.words(), out);
  return Element(model_->family(), out);
}

Element FiniteGroup::invert(const Element& a) const {
  check_family(a);
  std::array<std::int32_t, kMaxWords> buf{};
  MutableWords out(buf.data(), model_->width());
  model_->invert(a.words(), out);
  return Element(model_->family(), out);
}

Element FiniteGroup::power(const Element& a, std::int64_t e) const {
  Element base = e < 0 ? invert(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Element result = identity();
  while (n) {
    if (n & 1) result = multiply(result, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return result;
}

Element FiniteGroup::conjugate(const Element& g, const Element& by) const {
  return multiply(multiply(by, g), invert(by));
}

Element FiniteGroup::commutator(const Element& a, const Element& b) const {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

bool FiniteGroup::contains(const Element& a) const {
  return a.family() == model_->family() && model_->contains(a.words());
}

Element FiniteGroup::make(std::initializer_list<std::int32_t> words) const {
  return make(Words(words.begin(), words.size()));
}

Element FiniteGroup::make(Words words) const {
  if (words.size() > kMaxWords) throw InvalidArgument("too many words for an element");
  Element e(model_->family(), words);
  if (!contains(e)) throw InvalidArgument("words do not encode an element of " + describe());
  return e;
}

std::string FiniteGroup::format(const Element& a) const {
  check_family(a);
  return model_->format(a.words());
}

FiniteGroup FiniteGroup::with_enumeration_limit(std::uint64_t limit) const {
  return FiniteGroup(model_, family_, generators_, limit);
}

void FiniteGroup::require_enumerable(std::string_view operation) const {
  if (order() > enumeration_limit_)
    throw OrderLimitExceeded(std::string(operation) + ": |G| = " + std::to_string(order()) +
                             " exceeds the enumeration limit " + std::to_string(enumeration_limit_));
}

std::optional<std::uint32_t> FiniteGroup::projective_field() const {
  if (const auto* p = dynamic_cast<const ProjectiveModel*>(model_.get())) return p->field();
  return std::nullopt;
}

bool FiniteGroup::projective_special() const {
  const auto* p = dynamic_cast<const ProjectiveModel*>(model_.get());
  return p && p->special();
}

bool FiniteGroup::in_psl(const Element& a) const {
  const auto* p = dynamic_cast<const ProjectiveModel*>(model_.get());
  if (!p) throw InvalidArgument("in_psl needs a projective group, got " + describe());
  check_family(a);
  return p->in_psl(a.words());
}

// ---------------------------------------------------------------- quotient

QuotientModel::QuotientModel(const FiniteGroup& parent, const std::vector<Element>& elements,
                             const std::vector<Element>& normal)
    : parent_(parent), normal_order_(normal.size()) {
  if (normal.empty() || elements.size() % normal.size() != 0)
    throw InvalidArgument("normal subgroup order must divide the group order");
  std::vector<Element> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  coset_of_.reserve(sorted.size());
  for (const auto& g : sorted) {
    if (coset_of_.contains(g)) continue;
    const auto index = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (const auto& n : normal) coset_of_.emplace(parent_.multiply(g, n), index);
  }
  if (coset_of_.size() != sorted.size()) throw InternalError("cosets do not partition the group");
}

std::size_t QuotientModel::index_of(const Element& g) const {
  auto it = coset_of_.find(g);
  if (it == coset_of_.end()) throw FamilyMismatch("element is not in the parent group");
  return it->second;
}

void QuotientModel::identity(MutableWords out) const {
  out[0] = static_cast<std::int32_t>(index_of(parent_.identity()));
}

void QuotientModel::multiply(Words a, Words b, MutableWords out) const {
  out[0] = static_cast<std::int32_t>(index_of(parent_.multiply(reps_[a[0]], reps_[b[0]])));
}

void QuotientModel::invert(Words a, MutableWords out) const {
  out[0] = static_cast<std::int32_t>(index_of(parent_.invert(reps_[a[0]])));
}

bool QuotientModel::contains(Words a) const {
  return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < reps_.size();
}

std::string QuotientModel::format(Words a) const {
  return parent_.format(reps_[static_cast<std::size_t>(a[0])]) + "N";
}

std::string QuotientModel::describe() const {
  return "(" + parent_.describe() + ") / N_" + std::to_string(normal_order_);
}

}  // namespace regmap
