#pragma once

// Template definitions for extension.hpp; include that header instead.

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace dvf {
namespace detail {

enum class Tri { No, Yes, Unknown };

inline Tri all_of(std::initializer_list<Tri> parts) {
  bool unknown = false;
  for (Tri t : parts) {
    if (t == Tri::No) return Tri::No;
    unknown |= t == Tri::Unknown;
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

inline Tri and_tri(Tri a, Tri b) { return all_of({a, b}); }

/// Decides v >= k.
inline Tri at_least(const ValBound& v, std::int64_t k) {
  switch (v.kind()) {
    case ValBound::Kind::Infinite: return Tri::Yes;
    case ValBound::Kind::Exact: return v.value() >= k ? Tri::Yes : Tri::No;
    case ValBound::Kind::AtLeast: return v.value() >= k ? Tri::Yes : Tri::Unknown;
  }
  return Tri::Unknown;
}

/// Decides v == k.
inline Tri exactly(const ValBound& v, std::int64_t k) {
  switch (v.kind()) {
    case ValBound::Kind::Infinite: return Tri::No;
    case ValBound::Kind::Exact: return v.value() == k ? Tri::Yes : Tri::No;
    case ValBound::Kind::AtLeast: return v.value() > k ? Tri::No : Tri::Unknown;
  }
  return Tri::Unknown;
}

template <class Base>
std::optional<std::uint64_t> try_residue(const Base& x) {
  try {
    return BaseTraits<Base>::residue(x);
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::Undecidable) return std::nullopt;
    throw;
  }
}

}  // namespace detail

template <class Base>
ExtField<Base> ExtField<Base>::make(const Context& ctx, std::vector<Base> modulus, std::size_t max_degree) {
  if (modulus.size() < 2) throw MathError(ErrorKind::NonMonic, "modulus must have degree at least 1");
  const std::size_t n = modulus.size() - 1;
  if (n > max_degree) {
    throw MathError(ErrorKind::DegreeTooLarge,
                    "degree " + std::to_string(n) + " exceeds the cap " + std::to_string(max_degree));
  }
  for (const Base& c : modulus) {
    if (!Traits::belongs(ctx, c)) {
      throw MathError(ErrorKind::ContextMismatch, "modulus coefficient outside " + Traits::name(ctx));
    }
  }
  if (!(modulus.back() - Traits::from_rat(ctx, 1)).is_zero_approx()) {
    throw MathError(ErrorKind::NonMonic, "leading coefficient " + modulus.back().to_string());
  }

  auto impl = std::make_shared<Impl>(Impl{ctx, std::move(modulus), Certificate::None, std::nullopt, std::nullopt});
  const auto& a = impl->modulus;
  const std::uint64_t p = Traits::residue_characteristic(ctx);

  detail::Tri eisenstein = detail::exactly(a[0].valuation(), 1);
  detail::Tri integral = detail::at_least(a[0].valuation(), 0);
  for (std::size_t i = 1; i < n; ++i) {
    eisenstein = detail::and_tri(eisenstein, detail::at_least(a[i].valuation(), 1));
    integral = detail::and_tri(integral, detail::at_least(a[i].valuation(), 0));
  }

  detail::Tri unramified = integral;
  if (eisenstein == detail::Tri::Yes) {
    impl->cert = Certificate::Eisenstein;
    impl->residue_field.emplace(FpPoly::x(p));
  } else if (integral == detail::Tri::Yes) {
    std::vector<std::uint64_t> reduced;
    reduced.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      auto r = detail::try_residue(a[i]);
      if (!r) {
        unramified = detail::Tri::Unknown;
        break;
      }
      reduced.push_back(*r);
    }
    if (unramified == detail::Tri::Yes) {
      reduced.push_back(1);
      FpPoly residual(p, std::move(reduced));
      if (is_irreducible(residual)) {
        impl->cert = Certificate::Unramified;
        impl->residue_field.emplace(residual);
        impl->residual = std::move(residual);
      } else {
        unramified = detail::Tri::No;
      }
    }
  }
  if (impl->cert == Certificate::None &&
      (eisenstein == detail::Tri::Unknown || unramified == detail::Tri::Unknown)) {
    throw MathError(ErrorKind::InsufficientPrecision,
                    "modulus coefficients too imprecise to decide their valuations");
  }
  return ExtField(std::move(impl));
}

template <class Base>
ExtField<Base> ExtField<Base>::make(const Context& ctx, std::span<const Rational> modulus, std::size_t max_degree) {
  std::vector<Base> coeffs;
  coeffs.reserve(modulus.size());
  for (const Rational& q : modulus) coeffs.push_back(Traits::from_rat(ctx, q));
  return make(ctx, std::move(coeffs), max_degree);
}

template <class Base>
void ExtField<Base>::require_certificate(const char* what) const {
  if (certificate() == Certificate::None) {
    throw MathError(ErrorKind::NoCertificate, std::string(what) + " needs an Eisenstein or unramified modulus");
  }
}

template <class Base>
std::size_t ExtField<Base>::ramification_index() const {
  require_certificate("ramification index");
  return certificate() == Certificate::Eisenstein ? degree() : 1;
}

template <class Base>
std::size_t ExtField<Base>::residue_degree() const {
  require_certificate("residue degree");
  return certificate() == Certificate::Unramified ? degree() : 1;
}

template <class Base>
const FiniteField& ExtField<Base>::residue_field() const {
  require_certificate("residue field");
  return *impl_->residue_field;
}

template <class Base>
ExtElem<Base> ExtField<Base>::zero() const {
  return Element(*this, std::vector<Base>(degree(), Traits::exact_zero(context())));
}

template <class Base>
ExtElem<Base> ExtField<Base>::one() const {
  return embed_rat(1);
}

template <class Base>
ExtElem<Base> ExtField<Base>::generator() const {
  if (degree() == 1) {
    // a is the root of x + a_0.
    return embed_base(-impl_->modulus[0]);
  }
  std::vector<Base> coords(degree(), Traits::exact_zero(context()));
  coords[1] = Traits::from_rat(context(), 1);
  return Element(*this, std::move(coords));
}

template <class Base>
ExtElem<Base> ExtField<Base>::embed_base(const Base& c) const {
  if (!Traits::belongs(context(), c)) {
    throw MathError(ErrorKind::ContextMismatch, "element outside " + Traits::name(context()));
  }
  std::vector<Base> coords(degree(), Traits::exact_zero(context()));
  coords[0] = c;
  return Element(*this, std::move(coords));
}

template <class Base>
ExtElem<Base> ExtField<Base>::embed_rat(const Rational& q) const {
  return embed_base(Traits::from_rat(context(), q));
}

template <class Base>
ExtElem<Base> ExtField<Base>::element(std::vector<Base> coords) const {
  if (coords.size() != degree()) {
    throw std::invalid_argument("expected " + std::to_string(degree()) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  for (const Base& c : coords) {
    if (!Traits::belongs(context(), c)) {
      throw MathError(ErrorKind::ContextMismatch, "coordinate outside " + Traits::name(context()));
    }
  }
  return Element(*this, std::move(coords));
}

template <class Base>
ExtElem<Base> ExtField<Base>::uniformizer() const {
  require_certificate("uniformizer");
  if (certificate() == Certificate::Eisenstein) return generator();
  return embed_base(Traits::uniformizer(context()));
}

template <class Base>
LocalFieldData ExtField<Base>::local_field_data() const {
  require_certificate("local field data");
  LocalFieldData out;
  out.certificate = certificate();
  out.degree = degree();
  out.ramification_index = ramification_index();
  out.residue_degree = residue_degree();
  out.residue_field_order = residue_field().order();
  out.uniformizer = certificate() == Certificate::Eisenstein ? "a" : Traits::uniformizer_symbol(context());
  return out;
}

template <class Base>
std::string ExtField<Base>::to_string() const {
  return "degree-" + std::to_string(degree()) + " extension of " + Traits::name(context()) + " (" +
         std::string(dvf::to_string(certificate())) + ")";
}

namespace detail {

template <class Base>
void check_parent(const ExtElem<Base>& x, const ExtElem<Base>& y) {
  if (!(x.parent() == y.parent())) {
    throw MathError(ErrorKind::ContextMismatch, "elements of different extensions");
  }
}

}  // namespace detail

template <class Base>
bool ExtElem<Base>::is_exact_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Base& c) { return c.is_exact_zero(); });
}

template <class B>
ExtElem<B> operator+(const ExtElem<B>& x, const ExtElem<B>& y) {
  detail::check_parent(x, y);
  std::vector<B> out;
  out.reserve(x.coords_.size());
  for (std::size_t i = 0; i < x.coords_.size(); ++i) out.push_back(x.coords_[i] + y.coords_[i]);
  return ExtElem<B>(x.parent_, std::move(out));
}

template <class Base>
ExtElem<Base> ExtElem<Base>::operator-() const {
  std::vector<Base> out;
  out.reserve(coords_.size());
  for (const Base& c : coords_) out.push_back(-c);
  return ExtElem(parent_, std::move(out));
}

template <class B>
ExtElem<B> operator-(const ExtElem<B>& x, const ExtElem<B>& y) {
  return x + (-y);
}

template <class Base>
ExtElem<Base> ExtElem<Base>::times_generator() const {
  const std::size_t n = coords_.size();
  const auto modulus = parent_.modulus();
  // a * (c_0 + ... + c_{n-1} a^{n-1}) with a^n = -(a_0 + ... + a_{n-1} a^{n-1}).
  const Base& top = coords_[n - 1];
  std::vector<Base> out;
  out.reserve(n);
  out.push_back(-(top * modulus[0]));
  for (std::size_t i = 1; i < n; ++i) out.push_back(coords_[i - 1] - top * modulus[i]);
  return ExtElem(parent_, std::move(out));
}

template <class B>
ExtElem<B> operator*(const ExtElem<B>& x, const ExtElem<B>& y) {
  detail::check_parent(x, y);
  const std::size_t n = x.coords_.size();
  const auto modulus = x.parent_.modulus();
  const B zero = BaseTraits<B>::exact_zero(x.parent_.context());
  std::vector<B> prod(2 * n - 1, zero);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = prod[i + j] + x.coords_[i] * y.coords_[j];
  }
  for (std::size_t k = 2 * n - 1; k-- > n;) {
    const B top = prod[k];
    if (top.is_exact_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = prod[k - n + i] - top * modulus[i];
  }
  prod.erase(prod.begin() + static_cast<std::ptrdiff_t>(n), prod.end());
  return ExtElem<B>(x.parent_, std::move(prod));
}

template <class Base>
std::vector<std::vector<Base>> multiplication_matrix(const ExtElem<Base>& x) {
  const std::size_t n = x.coords().size();
  std::vector<std::vector<Base>> m(n, std::vector<Base>(n, BaseTraits<Base>::exact_zero(x.parent().context())));
  ExtElem<Base> column = x;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column.coords()[i];
    if (j + 1 < n) column = column.times_generator();
  }
  return m;
}

template <class Base>
Base determinant(const std::vector<std::vector<Base>>& m, const typename BaseTraits<Base>::Context& ctx) {
  using Traits = BaseTraits<Base>;
  const std::size_t n = m.size();
  if (n == 0) return Traits::from_rat(ctx, 1);
  // partial[rows] = signed sum over bijections rows -> first |rows| columns.
  std::vector<Base> partial(std::size_t{1} << n, Traits::exact_zero(ctx));
  partial[0] = Traits::from_rat(ctx, 1);
  for (std::size_t rows = 0; rows + 1 < partial.size(); ++rows) {
    if (partial[rows].is_exact_zero()) continue;
    const auto col = static_cast<std::size_t>(std::popcount(rows));
    for (std::size_t i = 0; i < n; ++i) {
      if (rows & (std::size_t{1} << i)) continue;
      if (m[i][col].is_exact_zero()) continue;
      Base term = m[i][col] * partial[rows];
      if (std::popcount(rows >> (i + 1)) % 2 == 1) term = -term;
      auto& slot = partial[rows | (std::size_t{1} << i)];
      slot = slot + term;
    }
  }
  return partial.back();
}

template <class Base>
Base norm(const ExtElem<Base>& x) {
  return determinant(multiplication_matrix(x), x.parent().context());
}

template <class Base>
ExtElem<Base> ExtElem<Base>::inv() const {
  const auto m = multiplication_matrix(*this);
  const Base n = determinant(m, parent_.context());
  if (n.is_exact_zero()) throw MathError(ErrorKind::ZeroInversion, to_string() + " has norm 0");
  if (n.is_zero_approx()) {
    throw MathError(ErrorKind::ZeroIndistinguishable, "norm of " + to_string() + " is " + n.to_string());
  }
  // Coordinates of x^-1 form the first column of M^-1 = adj(M) / det(M).
  const std::size_t size = m.size();
  const Base n_inv = n.inv();
  std::vector<Base> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::vector<Base>> minor;
    minor.reserve(size - 1);
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<Base> row;
      row.reserve(size - 1);
      for (std::size_t c = 0; c < size; ++c) {
        if (c != i) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Base cofactor = determinant(minor, parent_.context());
    if (i % 2 == 1) cofactor = -cofactor;
    out.push_back(cofactor * n_inv);
  }
  return ExtElem(parent_, std::move(out));
}

template <class B>
ExtElem<B> operator/(const ExtElem<B>& x, const ExtElem<B>& y) {
  detail::check_parent(x, y);
  return x * y.inv();
}

template <class Base>
ExtElem<Base> ExtElem<Base>::pow(std::int64_t n) const {
  if (n < 0) return inv().pow(-n);
  ExtElem result = parent_.one();
  ExtElem base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class Base>
std::string ExtElem<Base>::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_exact_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coords_[i].to_string() + ")";
    if (i == 1) out += "*a";
    if (i > 1) out += "*a^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

template <class Base>
QVal add_val_ext(const ExtElem<Base>& x) {
  const ValBound v = norm(x).valuation();
  const std::size_t n = x.parent().degree();
  switch (v.kind()) {
    case ValBound::Kind::Infinite: return QVal::infinity();
    case ValBound::Kind::Exact: return QVal::fin(Rational(Integer(v.value()), Integer(static_cast<unsigned long>(n))), n);
    case ValBound::Kind::AtLeast: break;
  }
  throw MathError(ErrorKind::InsufficientPrecision,
                  "norm of " + x.to_string() + " has valuation " + v.to_string());
}

template <class Base>
ValBound normalized_val(const ExtElem<Base>& x) {
  const std::size_t e = x.parent().ramification_index();
  const QVal w = add_val_ext(x);
  if (w.is_infinite()) return ValBound::infinite();
  const Rational scaled = w.value() * Integer(static_cast<unsigned long>(e));
  if (scaled.get_den() != 1) throw std::logic_error("normalized valuation is not an integer");
  return ValBound::exact(to_int64(scaled));
}

template <class Base>
bool is_integral(const ExtElem<Base>& x) {
  const ValBound v = norm(x).valuation();
  switch (detail::at_least(v, 0)) {
    case detail::Tri::Yes: return true;
    case detail::Tri::No: return false;
    case detail::Tri::Unknown: break;
  }
  throw MathError(ErrorKind::Undecidable, "integrality of " + x.to_string());
}

template <class Base>
FFElem residue_map(const ExtElem<Base>& x) {
  const ExtField<Base>& ext = x.parent();
  const FiniteField& k = ext.residue_field();
  if (!is_integral(x)) throw MathError(ErrorKind::NotIntegral, x.to_string());
  const auto coords = x.coords();
  if (ext.certificate() == Certificate::Eisenstein) {
    return k.from_int(static_cast<std::int64_t>(BaseTraits<Base>::residue(coords[0]) % k.characteristic()));
  }
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coords.size());
  for (const Base& c : coords) reduced.push_back(BaseTraits<Base>::residue(c));
  return k.element(FpPoly(k.characteristic(), std::move(reduced)));
}

template <class Base>
NormValue spectral_norm(const ExtElem<Base>& x, const NormBase& base) {
  const QVal w = add_val_ext(x);
  if (w.is_infinite()) return NormValue{base, NormValue::Kind::Zero, Rational(0)};
  return NormValue{base, NormValue::Kind::Value, Rational(-w.value())};
}

template <class Base>
std::size_t value_group_generator(const ExtField<Base>& ext, std::span<const ExtElem<Base>> samples) {
  if (samples.empty()) throw MathError(ErrorKind::EmptySample, "value_group_generator needs samples");
  const std::size_t n = ext.degree();
  // The base uniformizer has norm pi^n, hence n * w = n.
  std::int64_t g = static_cast<std::int64_t>(n);
  for (const auto& s : samples) {
    if (!(s.parent() == ext)) throw MathError(ErrorKind::ContextMismatch, "sample from another extension");
    const ValBound v = norm(s).valuation();
    if (!v.is_exact()) {
      throw MathError(ErrorKind::ZeroIndistinguishable, "sample " + s.to_string() + " has norm valuation " +
                                                            v.to_string());
    }
    g = std::gcd(g, v.value());
  }
  return n / static_cast<std::size_t>(g);
}

extern template class ExtField<PAdicNum>;
extern template class ExtElem<PAdicNum>;
extern template class ExtField<LaurentSeries>;
extern template class ExtElem<LaurentSeries>;

}  // namespace dvf
