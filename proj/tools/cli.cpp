#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <variant>

#include "dvf/errors.hpp"
#include "dvf/expr.hpp"
#include "dvf/extension.hpp"
#include "dvf/laurent.hpp"
#include "dvf/padic.hpp"
#include "dvf/ratfunc.hpp"
#include "dvf/valuation.hpp"

namespace dvf::cli {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void unknown_variable(std::string_view name, std::size_t offset, std::string_view allowed) {
  std::string msg = "unknown identifier '" + std::string(name) + "'";
  if (!allowed.empty()) msg += " (only " + std::string(allowed) + " is allowed here)";
  throw expr::SyntaxError(offset, msg);
}

// Exact rationals; used for p-adic valuations on Q.
struct RationalAlgebra {
  using value_type = Rational;
  Rational number(const Integer& n) const { return Rational(n); }
  Rational variable(std::string_view name, std::size_t offset) const { unknown_variable(name, offset, ""); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational div(const Rational& a, const Rational& b) const {
    if (b == 0) throw MathError(ErrorKind::DivisionByZero, "division by 0");
    return a / b;
  }
  Rational neg(const Rational& a) const { return -a; }
  Rational pow(const Rational& a, std::int64_t k) const {
    if (a == 0 && k < 0) throw MathError(ErrorKind::DivisionByZero, "0 to a negative power");
    return ipow(a, k);
  }
};

struct RatFuncAlgebra {
  using value_type = RatFunc;
  CoefField field;
  RatFunc number(const Integer& n) const { return RatFunc::constant(field, Rational(n)); }
  RatFunc variable(std::string_view name, std::size_t offset) const {
    if (name != "X") unknown_variable(name, offset, "X");
    return RatFunc::x(field);
  }
  RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
  RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
  RatFunc div(const RatFunc& a, const RatFunc& b) const { return a / b; }
  RatFunc neg(const RatFunc& a) const { return -a; }
  RatFunc pow(const RatFunc& a, std::int64_t k) const { return a.pow(k); }
};

struct PAdicAlgebra {
  using value_type = PAdicNum;
  PAdicCtx ctx;
  PAdicNum number(const Integer& n) const { return PAdicNum::from_rat(ctx, Rational(n)); }
  PAdicNum variable(std::string_view name, std::size_t offset) const { unknown_variable(name, offset, ""); }
  PAdicNum add(const PAdicNum& a, const PAdicNum& b) const { return a + b; }
  PAdicNum sub(const PAdicNum& a, const PAdicNum& b) const { return a - b; }
  PAdicNum mul(const PAdicNum& a, const PAdicNum& b) const { return a * b; }
  PAdicNum div(const PAdicNum& a, const PAdicNum& b) const { return a / b; }
  PAdicNum neg(const PAdicNum& a) const { return -a; }
  PAdicNum pow(const PAdicNum& a, std::int64_t k) const { return a.pow(k); }
};

// Polynomials in x over the base of an extension, ascending coefficients.
template <class Base>
struct ModulusAlgebra {
  using Traits = BaseTraits<Base>;
  using value_type = std::vector<Base>;
  typename Traits::Context ctx;

  value_type constant(Base c) const { return {std::move(c)}; }
  value_type number(const Integer& n) const { return constant(Traits::from_rat(ctx, Rational(n))); }
  value_type variable(std::string_view name, std::size_t offset) const {
    if (name == "x") return {Traits::exact_zero(ctx), Traits::from_rat(ctx, 1)};
    if constexpr (std::is_same_v<Base, LaurentSeries>) {
      if (name == "X") return constant(Traits::uniformizer(ctx));
      unknown_variable(name, offset, "x or X");
    } else {
      unknown_variable(name, offset, "x");
    }
  }
  value_type add(const value_type& a, const value_type& b) const {
    value_type out(std::max(a.size(), b.size()), Traits::exact_zero(ctx));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    return trim(std::move(out));
  }
  value_type neg(const value_type& a) const {
    value_type out;
    for (const auto& c : a) out.push_back(-c);
    return out;
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type out(a.size() + b.size() - 1, Traits::exact_zero(ctx));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return trim(std::move(out));
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (b.size() != 1) throw expr::SyntaxError(0, "the modulus must be a polynomial in x");
    const Base inv = b[0].inv();
    value_type out;
    for (const auto& c : a) out.push_back(c * inv);
    return out;
  }
  value_type pow(const value_type& a, std::int64_t k) const {
    if (k < 0) throw expr::SyntaxError(0, "negative power in the modulus");
    value_type out = number(1);
    for (std::int64_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }
  static value_type trim(value_type v) {
    while (v.size() > 1 && v.back().is_exact_zero()) v.pop_back();
    return v;
  }
};

template <class Base>
struct ExtElemAlgebra {
  using Traits = BaseTraits<Base>;
  using value_type = ExtElem<Base>;
  ExtField<Base> ext;

  value_type number(const Integer& n) const { return ext.embed_rat(Rational(n)); }
  value_type variable(std::string_view name, std::size_t offset) const {
    if (name == "a") return ext.generator();
    if constexpr (std::is_same_v<Base, LaurentSeries>) {
      if (name == "X") return ext.embed_base(Traits::uniformizer(ext.context()));
      unknown_variable(name, offset, "a or X");
    } else {
      unknown_variable(name, offset, "a");
    }
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type pow(const value_type& a, std::int64_t k) const { return a.pow(k); }
};

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json valbound_json(const ValBound& v) { return v.is_infinite() ? Json(nullptr) : Json(v.value()); }

std::string_view valbound_kind(const ValBound& v) {
  switch (v.kind()) {
    case ValBound::Kind::Exact: return "exact";
    case ValBound::Kind::AtLeast: return "at_least";
    case ValBound::Kind::Infinite: return "infinite";
  }
  return "infinite";
}

struct Options {
  bool json = false;
  std::int64_t prec = 20;
  std::uint64_t p = 0;
  std::string field;
  std::string poly;
  std::string expr;
};

ValuationDescriptor descriptor(const Options& o) {
  if (o.p != 0 && !o.field.empty()) throw std::invalid_argument("give either --p or --field, not both");
  if (o.p != 0) return PAdicValuation(o.p);
  if (!o.field.empty()) return XAdicValuation(CoefField::parse(o.field));
  throw std::invalid_argument("one of --p or --field is required");
}

void emit(std::ostream& out, const Options& o, const std::string& text, const Json& json) {
  if (o.json) {
    out << json.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

int cmd_val(const Options& o, std::ostream& out) {
  const ValuationDescriptor v = descriptor(o);
  const expr::Expr e = expr::parse(o.expr);
  std::visit(
      [&](const auto& valuation) {
        using V = std::decay_t<decltype(valuation)>;
        typename V::element_type x;
        if constexpr (std::is_same_v<V, PAdicValuation>) {
          x = expr::evaluate(e, RationalAlgebra{});
        } else {
          x = expr::evaluate(e, RatFuncAlgebra{valuation.coef_field()});
        }
        const MultZ0 m = val(valuation, x);
        const AddVal a = to_addval(m);
        Json j;
        j["result"] = m.to_string();
        j["valuation"] = a.is_infinite() ? Json(nullptr) : Json(to_int64(a.value()));
        j["precision"] = nullptr;
        j["in_unit_ball"] = is_in_unit_ball(valuation, x);
        j["is_uniformizer"] = is_uniformizer(valuation, x);
        emit(out, o, m.to_string() + "  (additive: " + a.to_string() + ")", j);
      },
      v);
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const ValuationDescriptor v = descriptor(o);
  const expr::Expr e = expr::parse(o.expr);
  std::visit(
      [&](const auto& valuation) {
        using V = std::decay_t<decltype(valuation)>;
        typename V::element_type x;
        std::string pi_text;
        std::string unit_text;
        const auto pi = canonical_uniformizer(valuation);
        std::int64_t n = 0;
        if constexpr (std::is_same_v<V, PAdicValuation>) {
          x = expr::evaluate(e, RationalAlgebra{});
          const auto f = pow_uniformizer(valuation, x, pi);
          n = f.n;
          pi_text = pi.element().get_str();
          unit_text = f.unit.get_str();
        } else {
          x = expr::evaluate(e, RatFuncAlgebra{valuation.coef_field()});
          const auto f = pow_uniformizer(valuation, x, pi);
          n = f.n;
          pi_text = pi.element().to_string();
          unit_text = f.unit.to_string();
        }
        const std::string result = pi_text + "^" + std::to_string(n) + " * (" + unit_text + ")";
        Json j;
        j["result"] = result;
        j["valuation"] = n;
        j["precision"] = nullptr;
        j["uniformizer"] = pi_text;
        j["unit"] = unit_text;
        emit(out, o, result, j);
      },
      v);
  return kExitOk;
}

template <class X>
void emit_series_like(std::ostream& out, const Options& o, const X& x) {
  const ValBound v = x.valuation();
  Json j;
  j["result"] = x.to_string();
  j["valuation"] = valbound_json(v);
  j["valuation_kind"] = valbound_kind(v);
  j["precision"] = optional_int(x.absolute_precision());
  emit(out, o, x.to_string(), j);
}

int cmd_padic(const Options& o, std::ostream& out) {
  if (o.p == 0) throw std::invalid_argument("padic requires --p");
  const PAdicCtx ctx(o.p, o.prec);
  const expr::Expr e = expr::parse(o.expr);
  emit_series_like(out, o, expr::evaluate(e, PAdicAlgebra{ctx}));
  return kExitOk;
}

int cmd_laurent(const Options& o, std::ostream& out) {
  if (o.field.empty()) throw std::invalid_argument("laurent requires --field");
  const CoefField field = CoefField::parse(o.field);
  const expr::Expr e = expr::parse(o.expr);
  const RatFunc rf = expr::evaluate(e, RatFuncAlgebra{field});
  emit_series_like(out, o, from_ratfunc(rf, o.prec));
  return kExitOk;
}

template <class Base>
int run_ext(const typename BaseTraits<Base>::Context& ctx, const Options& o, const std::string& action,
            std::ostream& out) {
  const expr::Expr modulus_expr = expr::parse(o.poly);
  auto modulus = expr::evaluate(modulus_expr, ModulusAlgebra<Base>{ctx});
  const ExtField<Base> ext = ExtField<Base>::make(ctx, std::move(modulus));

  if (action == "info") {
    const LocalFieldData d = ext.local_field_data();
    Json j;
    j["certificate"] = std::string(to_string(d.certificate));
    j["n"] = d.degree;
    j["e"] = d.ramification_index;
    j["f"] = d.residue_degree;
    j["residue_order"] = to_int64(d.residue_field_order);
    j["uniformizer"] = d.uniformizer;
    std::string text;
    for (const auto& [key, value] : j.items()) {
      text += key + ": " + (value.is_string() ? value.template get<std::string>() : value.dump());
      if (key != "uniformizer") text += "\n";
    }
    emit(out, o, text, j);
    return kExitOk;
  }

  const expr::Expr e = expr::parse(o.expr);
  const ExtElem<Base> x = expr::evaluate(e, ExtElemAlgebra<Base>{ext});

  if (action == "val") {
    const QVal w = add_val_ext(x);
    std::optional<ValBound> normalized;
    if (ext.certificate() != Certificate::None) normalized = normalized_val(x);
    const NormBase base = NormBase::residue_field(BaseTraits<Base>::residue_characteristic(ctx), 1);
    Json j;
    j["result"] = w.to_string();
    j["valuation"] = normalized ? valbound_json(*normalized) : Json(nullptr);
    j["precision"] = nullptr;
    j["spectral_norm"] = spectral_norm(x, base).to_string();
    emit(out, o, w.to_string() + "  (normalized: " + (normalized ? normalized->to_string() : "unavailable") + ")",
         j);
  } else if (action == "norm") {
    emit_series_like(out, o, norm(x));
  } else if (action == "integral") {
    const bool integral = is_integral(x);
    Json j;
    j["result"] = integral;
    j["valuation"] = add_val_ext(x).to_string();
    j["precision"] = nullptr;
    emit(out, o, integral ? "true" : "false", j);
  } else if (action == "residue") {
    const FFElem r = residue_map(x);
    Json j;
    j["result"] = r.to_string();
    j["valuation"] = nullptr;
    j["precision"] = nullptr;
    j["residue_field"] = r.field().to_string();
    emit(out, o, r.to_string(), j);
  }
  return kExitOk;
}

int cmd_ext(const Options& o, const std::string& action, std::ostream& out) {
  if (o.p != 0 && !o.field.empty()) throw std::invalid_argument("give either --p or --field, not both");
  if (o.p != 0) return run_ext<PAdicNum>(PAdicCtx(o.p, o.prec), o, action, out);
  if (!o.field.empty()) {
    const CoefField field = CoefField::parse(o.field);
    if (!field.is_prime_field()) throw std::invalid_argument("ext over a series field needs --field F<p>");
    return run_ext<LaurentSeries>(LaurentCtx(field, o.prec), o, action, out);
  }
  throw std::invalid_argument("ext requires --p or --field");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in discretely valued fields", "dvf"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit one JSON object per result");
  app.add_option("--prec", o.prec, "Relative precision in digits or coefficients")->check(CLI::Range(1, 1000000));

  auto add_base = [&](CLI::App* sub, bool p, bool field) {
    sub->fallthrough();
    CLI::Option* po = p ? sub->add_option("--p", o.p, "Prime p") : nullptr;
    CLI::Option* fo = field ? sub->add_option("--field", o.field, "Coefficient field: Q or F<p>") : nullptr;
    if (po && fo) po->excludes(fo);
  };

  auto* val = app.add_subcommand("val", "Valuation of a rational (--p) or rational function (--field)");
  add_base(val, true, true);
  val->add_option("expr", o.expr, "Expression")->required();

  auto* factor = app.add_subcommand("factor", "Write a unit-ball element as uniformizer^n * unit");
  add_base(factor, true, true);
  factor->add_option("expr", o.expr, "Expression")->required();

  auto* padic = app.add_subcommand("padic", "Evaluate an expression in Q_p");
  add_base(padic, true, false);
  padic->add_option("expr", o.expr, "Expression")->required();

  auto* laurent = app.add_subcommand("laurent", "Laurent expansion at X = 0 of a rational function");
  add_base(laurent, false, true);
  laurent->add_option("expr", o.expr, "Expression in X")->required();

  auto* ext = app.add_subcommand("ext", "Finite extension K[x]/(f) of Q_p (--p) or F_p((X)) (--field)");
  add_base(ext, true, true);
  ext->add_option("--poly", o.poly, "Monic modulus in x")->required();
  ext->require_subcommand(1);
  std::string action;
  for (const char* name : {"info", "val", "norm", "integral", "residue"}) {
    auto* sub = ext->add_subcommand(name);
    sub->fallthrough();
    if (std::string_view(name) != "info") sub->add_option("expr", o.expr, "Element, a polynomial in a")->required();
    sub->callback([&action, name] { action = name; });
  }
  ext->description("Finite extension K[x]/(f); actions: info, val, norm, integral, residue");

  std::vector<const char*> argv{"dvf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dvf: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (val->parsed()) return cmd_val(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    if (padic->parsed()) return cmd_padic(o, out);
    if (laurent->parsed()) return cmd_laurent(o, out);
    if (ext->parsed()) return cmd_ext(o, action, out);
  } catch (const expr::SyntaxError& e) {
    err << "dvf: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::invalid_argument& e) {
    err << "dvf: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const MathError& e) {
    err << "dvf: " << e.what() << '\n';
    return kExitMathError;
  }
  return kExitUsageError;
}

}  // namespace dvf::cli
