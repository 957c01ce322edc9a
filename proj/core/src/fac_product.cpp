#include "kplab/fac_product.hpp"

#include <cstdlib>
#include <optional>

#include "kplab/errors.hpp"

namespace kplab::sym {

const char* fac_kind_name(FacKind k) {
  switch (k) {
    case FacKind::factorial:
      return "factorial";
    case FacKind::superfactorial:
      return "superfactorial";
    case FacKind::linear:
      return "linear";
  }
  return "?";
}

std::string FacFactor::str() const {
  std::string out = "(" + arg.str() + ")";
  if (kind == FacKind::factorial) {
    out += "!";
  } else if (kind == FacKind::superfactorial) {
    out += "!!";
  }
  if (!(exp.is_constant() && exp.constant == 1)) {
    if (exp.is_constant()) {
      out += "^" + std::to_string(exp.constant);
    } else {
      out += "^(" + exp.str() + ")";
    }
  }
  return out;
}

namespace {

// Value of a constant-argument factorial-type factor, when defined.
std::optional<ApInt> constant_value(FacKind kind, long long arg) {
  if (kind == FacKind::factorial && arg >= 0) {
    return factorial(arg);
  }
  if (kind == FacKind::superfactorial && arg >= -1) {
    return superfactorial(arg);
  }
  return std::nullopt;
}

}  // namespace

void FacProduct::fold_in(FacKind kind, LinearForm arg, LinearForm exp) {
  if (exp.is_zero()) {
    return;
  }
  if (kind != FacKind::linear && arg.is_constant()) {
    // 0!, 1!, (-1)!!, 0!!, 1!! are identically 1; other defined constants
    // become linear-kind constants when they fit a machine word.
    if (auto value = constant_value(kind, arg.constant)) {
      if (*value == 1) {
        return;
      }
      if (value->fits_slong_p()) {
        kind = FacKind::linear;
        arg = LinearForm::of(value->get_si());
      }
    }
  }
  if (kind == FacKind::linear && arg.is_constant() && arg.constant == 1) {
    return;
  }
  const auto key = std::make_pair(kind, arg);
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    factors_.emplace(key, exp);
    return;
  }
  it->second = it->second + exp;
  if (it->second.is_zero()) {
    factors_.erase(it);
  }
}

FacProduct FacProduct::from_factors(const std::vector<FacFactor>& factors) {
  FacProduct out;
  for (const FacFactor& f : factors) {
    out.fold_in(f.kind, f.arg, f.exp);
  }
  return out;
}

FacProduct& FacProduct::operator*=(const FacFactor& f) {
  fold_in(f.kind, f.arg, f.exp);
  return *this;
}

FacProduct& FacProduct::operator*=(const FacProduct& o) {
  for (const auto& [key, exp] : o.factors_) {
    fold_in(key.first, key.second, exp);
  }
  return *this;
}

FacProduct FacProduct::inverse() const {
  FacProduct out;
  for (const auto& [key, exp] : factors_) {
    out.factors_.emplace(key, -exp);
  }
  return out;
}

std::vector<FacFactor> FacProduct::factors() const {
  std::vector<FacFactor> out;
  out.reserve(factors_.size());
  for (const auto& [key, exp] : factors_) {
    out.push_back({key.first, key.second, exp});
  }
  return out;
}

std::string FacProduct::str() const {
  if (factors_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [key, exp] : factors_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += FacFactor{key.first, key.second, exp}.str();
  }
  return out;
}

FacProduct ratio(const FacProduct& num, const FacProduct& den) {
  FacProduct out = num;
  out *= den.inverse();
  return out;
}

namespace {

// arg1 - arg2 when the difference is a pure integer constant.
std::optional<long long> constant_gap(const LinearForm& x, const LinearForm& y) {
  const LinearForm d = x - y;
  if (!d.is_constant()) {
    return std::nullopt;
  }
  return d.constant;
}

struct Rewrite {
  FacFactor high;       // factor with the larger argument
  FacFactor low;        // factor with the smaller argument
  LinearForm transfer;  // exponent moved: high loses it, low gains it
  long long gap = 0;    // argument difference, >= 1
};

// The exponent piece the footnote-2 rule can move between two factors whose
// arguments differ by an integer: the full exponent when they oppose exactly
// as linear forms, else (for integer constants of opposite sign) the
// min-magnitude piece, signed like the high factor's exponent.
std::optional<LinearForm> transferable(const LinearForm& high_exp,
                                       const LinearForm& low_exp) {
  if ((high_exp + low_exp).is_zero()) {
    return high_exp;
  }
  if (high_exp.is_constant() && low_exp.is_constant()) {
    const long long h = high_exp.constant;
    const long long l = low_exp.constant;
    if ((h > 0 && l < 0) || (h < 0 && l > 0)) {
      const long long t = std::min(std::llabs(h), std::llabs(l));
      return LinearForm::of(h > 0 ? t : -t);
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> find_rewrite(const std::vector<FacFactor>& factors,
                                    FacKind kind) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].kind != kind) {
      continue;
    }
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[j].kind != kind) {
        continue;
      }
      const auto gap = constant_gap(factors[i].arg, factors[j].arg);
      if (!gap || *gap == 0) {
        continue;
      }
      const FacFactor& high = *gap > 0 ? factors[i] : factors[j];
      const FacFactor& low = *gap > 0 ? factors[j] : factors[i];
      if (auto t = transferable(high.exp, low.exp)) {
        return Rewrite{high, low, *t, std::llabs(*gap)};
      }
    }
  }
  return std::nullopt;
}

// x!!^t (x-k)!!^-t -> x!^t ... (x-k+1)!^t, and likewise factorial -> linear.
FacProduct apply_rewrite(const FacProduct& fp, const Rewrite& rw, FacKind lower) {
  std::vector<FacFactor> factors = fp.factors();
  factors.push_back({rw.high.kind, rw.high.arg, -rw.transfer});
  factors.push_back({rw.low.kind, rw.low.arg, rw.transfer});
  for (long long d = 0; d < rw.gap; ++d) {
    factors.push_back({lower, rw.high.arg - d, rw.transfer});
  }
  return FacProduct::from_factors(factors);
}

// One kind's rule to fixpoint; each application removes at least one factor
// of that kind and adds only lower-kind factors, so this terminates.
long rewrite_phase(FacProduct& fp, FacKind kind, FacKind lower) {
  long steps = 0;
  while (auto rw = find_rewrite(fp.factors(), kind)) {
    fp = apply_rewrite(fp, *rw, lower);
    ++steps;
  }
  return steps;
}

}  // namespace

SimplifyResult simplify(const FacProduct& fp) {
  SimplifyResult out{fp, 0};
  bool progressed = true;
  while (progressed) {
    progressed = false;
    const long sf_steps =
        rewrite_phase(out.product, FacKind::superfactorial, FacKind::factorial);
    const long fact_steps =
        rewrite_phase(out.product, FacKind::factorial, FacKind::linear);
    out.steps += sf_steps + fact_steps;
    progressed = sf_steps > 0 || fact_steps > 0;
  }
  return out;
}

ApRat eval(const FacFactor& f, const Point& point) {
  const long long arg = f.arg.eval(point);
  const long long exp = f.exp.eval(point);
  ApInt base;
  switch (f.kind) {
    case FacKind::factorial:
      if (arg < 0) {
        throw DomainError("factorial argument " + std::to_string(arg) +
                          " negative while evaluating " + f.str());
      }
      base = factorial(arg);
      break;
    case FacKind::superfactorial:
      if (arg < -1) {
        throw DomainError("superfactorial argument " + std::to_string(arg) +
                          " below -1 while evaluating " + f.str());
      }
      base = superfactorial(arg);
      break;
    case FacKind::linear:
      base = ApInt(static_cast<long>(arg));
      break;
  }
  return pow_rat(base, static_cast<long>(exp));
}

ApRat eval(const FacProduct& fp, const Point& point) {
  ApRat out(1);
  for (const FacFactor& f : fp.factors()) {
    out *= eval(f, point);
  }
  return out;
}

}  // namespace kplab::sym
