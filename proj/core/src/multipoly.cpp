#include "kplab/multipoly.hpp"

#include "kplab/errors.hpp"

namespace kplab::sym {

void MultiPoly::add_term(const Monomial& mono, const ApInt& c) {
  if (c == 0) {
    return;
  }
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(ApInt c) {
  MultiPoly out;
  out.add_term(Monomial{}, c);
  return out;
}

MultiPoly MultiPoly::from_linear(const LinearForm& f) {
  MultiPoly out;
  for (int i = 0; i < kVarCount; ++i) {
    Monomial mono{};
    mono[i] = 1;
    out.add_term(mono, ApInt(static_cast<long>(f.coeff[i])));
  }
  out.add_term(Monomial{}, ApInt(static_cast<long>(f.constant)));
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [mono, c] : o.terms_) {
    out.add_term(mono, c);
  }
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [mono, c] : o.terms_) {
    out.add_term(mono, ApInt(-c));
  }
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial mono;
      for (int i = 0; i < kVarCount; ++i) {
        mono[i] = m1[i] + m2[i];
      }
      out.add_term(mono, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(ApInt(1));
  for (unsigned i = 0; i < e; ++i) {
    out = out * *this;
  }
  return out;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (int e : mono) {
      d += e;
    }
    if (d > deg) {
      deg = d;
    }
  }
  return deg;
}

ApInt MultiPoly::eval(const Point& point) const {
  ApInt out(0);
  for (const auto& [mono, c] : terms_) {
    ApInt term = c;
    for (int i = 0; i < kVarCount; ++i) {
      for (int e = 0; e < mono[i]; ++e) {
        term *= static_cast<long>(point[i]);
      }
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += c.get_str();
    for (int i = 0; i < kVarCount; ++i) {
      if (mono[i] > 0) {
        out += std::string("*") + var_name(static_cast<Var>(i));
        if (mono[i] > 1) {
          out += "^" + std::to_string(mono[i]);
        }
      }
    }
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> to_rational_function(const FacProduct& fp) {
  MultiPoly num = MultiPoly::constant(ApInt(1));
  MultiPoly den = MultiPoly::constant(ApInt(1));
  for (const FacFactor& f : fp.factors()) {
    if (f.kind != FacKind::linear) {
      throw StallError("unreduced factor " + f.str() +
                       " prevents conversion to a rational function");
    }
    if (!f.exp.is_constant()) {
      throw StallError("non-constant exponent in " + f.str() +
                       " prevents conversion to a rational function");
    }
    const long long e = f.exp.constant;
    const MultiPoly base = MultiPoly::from_linear(f.arg);
    if (e > 0) {
      num = num * base.pow(static_cast<unsigned>(e));
    } else {
      den = den * base.pow(static_cast<unsigned>(-e));
    }
  }
  return {num, den};
}

}  // namespace kplab::sym
