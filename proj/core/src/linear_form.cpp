#include "kplab/linear_form.hpp"

namespace kplab::sym {

const char* var_name(Var v) {
  static const char* const names[kVarCount] = {"n", "m", "a", "b"};
  return names[static_cast<int>(v)];
}

LinearForm LinearForm::operator-() const {
  LinearForm out;
  for (int i = 0; i < kVarCount; ++i) {
    out.coeff[i] = -coeff[i];
  }
  out.constant = -constant;
  return out;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm out;
  for (int i = 0; i < kVarCount; ++i) {
    out.coeff[i] = coeff[i] + o.coeff[i];
  }
  out.constant = constant + o.constant;
  return out;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator+(long long c) const {
  LinearForm out = *this;
  out.constant += c;
  return out;
}

LinearForm LinearForm::operator-(long long c) const { return *this + (-c); }

LinearForm LinearForm::operator*(long long s) const {
  LinearForm out;
  for (int i = 0; i < kVarCount; ++i) {
    out.coeff[i] = coeff[i] * s;
  }
  out.constant = constant * s;
  return out;
}

bool LinearForm::is_zero() const { return is_constant() && constant == 0; }

bool LinearForm::is_constant() const {
  for (long long c : coeff) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

long long LinearForm::eval(const Point& point) const {
  long long out = constant;
  for (int i = 0; i < kVarCount; ++i) {
    out += coeff[i] * point[i];
  }
  return out;
}

LinearForm LinearForm::substitute(Var v, long long value) const {
  LinearForm out = *this;
  const int i = static_cast<int>(v);
  out.constant += out.coeff[i] * value;
  out.coeff[i] = 0;
  return out;
}

std::string LinearForm::str() const {
  std::string out;
  for (int i = 0; i < kVarCount; ++i) {
    const long long c = coeff[i];
    if (c == 0) {
      continue;
    }
    if (c > 0 && !out.empty()) {
      out += '+';
    }
    if (c == -1) {
      out += '-';
    } else if (c != 1) {
      out += std::to_string(c);
    }
    out += var_name(static_cast<Var>(i));
  }
  if (constant != 0 || out.empty()) {
    if (constant >= 0 && !out.empty()) {
      out += '+';
    }
    out += std::to_string(constant);
  }
  return out;
}

}  // namespace kplab::sym
