// Copyright 2026 The toposim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toposim/pauli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace toposim {

namespace {

int mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void check_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("qudit dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

}  // namespace

PauliOperator::PauliOperator(int dim, std::size_t num_sites) : dim_(dim), x_(num_sites, 0), z_(num_sites, 0) {
  check_dim(dim);
}

PauliOperator PauliOperator::single_site(int dim, std::size_t num_sites, std::size_t site, int x_power,
                                         int z_power) {
  PauliOperator p(dim, num_sites);
  p.set_site(site, x_power, z_power);
  return p;
}

void PauliOperator::set_phase(int phase) { phase_ = static_cast<Phase>(mod(phase, 4)); }

void PauliOperator::set_x(std::size_t site, int power) {
  x_.at(site) = static_cast<std::uint8_t>(mod(power, dim_));
}

void PauliOperator::set_z(std::size_t site, int power) {
  z_.at(site) = static_cast<std::uint8_t>(mod(power, dim_));
}

void PauliOperator::set_site(std::size_t site, int x_power, int z_power) {
  set_x(site, x_power);
  set_z(site, z_power);
}

std::uint8_t PauliOperator::symplectic(std::size_t column) const {
  const std::size_t n = x_.size();
  return column < n ? x_[column] : z_[column - n];
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    w += (x_[j] | z_[j]) != 0;
  }
  return w;
}

bool PauliOperator::is_identity_up_to_phase() const {
  return std::all_of(x_.begin(), x_.end(), [](auto v) { return v == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto v) { return v == 0; });
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (x_[j] != 0 || z_[j] != 0) out.push_back(j);
  }
  return out;
}

void require_compatible(const PauliOperator& p, const PauliOperator& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("Pauli dimension mismatch");
  }
  if (p.num_sites() != q.num_sites()) {
    throw std::invalid_argument("Pauli site-count mismatch");
  }
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  require_compatible(*this, rhs);
  // Moving Z^b (ours) past X^a (theirs) on each site: Z^b X^a = omega^{ab} X^a Z^b.
  const int step = 4 / dim_;
  int acc = phase_ + rhs.phase_;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    acc += step * z_[j] * rhs.x_[j];
    x_[j] = static_cast<std::uint8_t>((x_[j] + rhs.x_[j]) % dim_);
    z_[j] = static_cast<std::uint8_t>((z_[j] + rhs.z_[j]) % dim_);
  }
  phase_ = static_cast<Phase>(mod(acc, 4));
  return *this;
}

void PauliOperator::multiply_site(std::size_t site, int x_power, int z_power) {
  const int a = mod(x_power, dim_);
  const int b = mod(z_power, dim_);
  const int step = 4 / dim_;
  phase_ = static_cast<Phase>(mod(phase_ + step * z_.at(site) * a, 4));
  x_[site] = static_cast<std::uint8_t>((x_[site] + a) % dim_);
  z_[site] = static_cast<std::uint8_t>((z_[site] + b) % dim_);
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  PauliOperator out = p;
  out *= q;
  return out;
}

int commutation_exponent(const PauliOperator& p, const PauliOperator& q) {
  require_compatible(p, q);
  // PQ = omega^{sum b_P a_Q - a_P b_Q} QP.
  long acc = 0;
  const auto px = p.x_exponents();
  const auto pz = p.z_exponents();
  const auto qx = q.x_exponents();
  const auto qz = q.z_exponents();
  for (std::size_t j = 0; j < px.size(); ++j) {
    acc += static_cast<long>(pz[j]) * qx[j] - static_cast<long>(px[j]) * qz[j];
  }
  return mod(static_cast<int>((acc * (4 / p.dim())) % 4), 4);
}

PauliOperator adjoint(const PauliOperator& p) {
  // (i^f X^a Z^b)^dagger = i^{-f} Z^{-b} X^{-a} = i^{-f} omega^{ab} X^{-a} Z^{-b}.
  PauliOperator out(p.dim(), p.num_sites());
  const int step = 4 / p.dim();
  int acc = -static_cast<int>(p.phase());
  for (std::size_t j = 0; j < p.num_sites(); ++j) {
    const int a = p.x(j);
    const int b = p.z(j);
    acc += step * a * b;
    out.set_site(j, -a, -b);
  }
  out.set_phase(acc);
  return out;
}

PauliOperator power(const PauliOperator& p, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  PauliOperator out = PauliOperator::identity(p.dim(), p.num_sites());
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

BellSigns bell_stabilizer_signs(BellState state) {
  switch (state) {
    case BellState::PhiPlus:
      return {+1, -1, +1};
    case BellState::PhiMinus:
      return {-1, +1, +1};
    case BellState::PsiPlus:
      return {+1, +1, -1};
    case BellState::PsiMinus:
      return {-1, -1, -1};
  }
  throw std::invalid_argument("unknown Bell state");
}

std::vector<PauliOperator> bell_stabilizers(BellState state) {
  const BellSigns s = bell_stabilizer_signs(state);
  auto signed_pair = [](int x, int z, int sign, int y_phase) {
    PauliOperator p(2, 2);
    p.set_site(0, x, z);
    p.set_site(1, x, z);
    p.set_phase(y_phase + (sign < 0 ? 2 : 0));
    return p;
  };
  // Y1 Y2 = (i X Z)(i X Z) = i^2 X1 Z1 X2 Z2.
  return {signed_pair(1, 0, s.xx, 0), signed_pair(1, 1, s.yy, 2), signed_pair(0, 1, s.zz, 0)};
}

std::string to_literal(const PauliOperator& p) {
  std::ostringstream out;
  out << "i^" << static_cast<int>(p.phase());
  bool any = false;
  for (std::size_t j = 0; j < p.num_sites(); ++j) {
    const int a = p.x(j);
    const int b = p.z(j);
    if (a == 0 && b == 0) continue;
    any = true;
    if (a != 0) {
      out << " X" << a;
      if (b == 0) out << "@e" << j;
    }
    if (b != 0) out << " Z" << b << "@e" << j;
  }
  if (!any) out << " I";
  return out.str();
}

namespace {

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad Pauli literal '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) bad_literal(whole, "expected integer");
  return value;
}

}  // namespace

PauliOperator parse_literal(std::string_view text, int dim, std::size_t num_sites) {
  PauliOperator out(dim, num_sites);
  std::vector<std::pair<char, int>> pending;
  std::istringstream in{std::string(text)};
  std::string token;
  bool first = true;
  bool saw_identity = false;
  while (in >> token) {
    std::string_view tok = token;
    if (first && tok.starts_with("i^")) {
      out.set_phase(parse_int(tok.substr(2), text));
      first = false;
      continue;
    }
    first = false;
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    std::string_view factors = tok;
    std::optional<std::size_t> site;
    if (auto at = tok.find("@e"); at != std::string_view::npos) {
      factors = tok.substr(0, at);
      const int s = parse_int(tok.substr(at + 2), text);
      if (s < 0 || static_cast<std::size_t>(s) >= num_sites) bad_literal(text, "site out of range");
      site = static_cast<std::size_t>(s);
    }
    std::size_t i = 0;
    while (i < factors.size()) {
      const char kind = factors[i];
      if (kind != 'X' && kind != 'Z') bad_literal(text, "unexpected character");
      std::size_t j = i + 1;
      while (j < factors.size() && std::isdigit(static_cast<unsigned char>(factors[j]))) ++j;
      const int exponent = j == i + 1 ? 1 : parse_int(factors.substr(i + 1, j - i - 1), text);
      pending.emplace_back(kind, exponent);
      i = j;
    }
    if (site) {
      for (auto [kind, exponent] : pending) {
        if (kind == 'X') {
          out.multiply_site(*site, exponent, 0);
        } else {
          out.multiply_site(*site, 0, exponent);
        }
      }
      pending.clear();
    }
  }
  if (!pending.empty()) bad_literal(text, "factor without site");
  if (saw_identity && !out.is_identity_up_to_phase()) bad_literal(text, "identity mixed with factors");
  return out;
}

}  // namespace toposim
