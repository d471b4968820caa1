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

#include "toposim/syndrome.h"

#include <algorithm>
#include <stdexcept>

namespace toposim {

bool SyndromeRecord::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](auto v) { return v == 0; });
}

std::size_t SyndromeRecord::num_violated() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](auto v) { return v != 0; }));
}

SyndromeRecord extract_syndrome(const StabilizerCode& code, const PauliOperator& frame) {
  SyndromeRecord rec;
  rec.values.reserve(code.generators.size());
  rec.kinds.reserve(code.generators.size());
  for (const auto& g : code.generators) {
    rec.values.push_back(static_cast<std::uint8_t>(commutation_exponent(g.op, frame)));
    rec.kinds.push_back(g.kind);
  }
  return rec;
}

SyndromeTracker::SyndromeTracker(const StabilizerCode& code)
    : code_(&code), incidence_(code.num_sites()), values_(code.generators.size(), 0),
      frame_(code.dim, code.num_sites()) {
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    for (std::size_t site : code.generators[g].op.support()) incidence_[site].push_back(g);
  }
}

void SyndromeTracker::reset() {
  std::fill(values_.begin(), values_.end(), 0);
  frame_ = PauliOperator(code_->dim, code_->num_sites());
  violated_ = 0;
}

void SyndromeTracker::load(const SyndromeRecord& syndrome) {
  if (syndrome.values.size() != values_.size()) throw std::invalid_argument("syndrome size mismatch");
  reset();
  values_ = syndrome.values;
  violated_ = static_cast<int>(syndrome.num_violated());
}

void SyndromeTracker::apply_site(std::size_t site, int x_power, int z_power) {
  update_values(site, x_power, z_power);
  frame_.multiply_site(site, x_power, z_power);
}

void SyndromeTracker::update_values(std::size_t site, int x_power, int z_power) {
  const int dim = code_->dim;
  const int step = 4 / dim;
  const int a = ((x_power % dim) + dim) % dim;
  const int b = ((z_power % dim) + dim) % dim;
  if (a == 0 && b == 0) return;
  for (std::size_t g : incidence_[site]) {
    const auto& op = code_->generators[g].op;
    const int delta = step * (op.z(site) * a - op.x(site) * b);
    const int before = values_[g];
    const int after = (((before + delta) % 4) + 4) % 4;
    values_[g] = static_cast<std::uint8_t>(after);
    violated_ += (after != 0) - (before != 0);
  }
}

void SyndromeTracker::apply(const PauliOperator& op) {
  for (std::size_t site : op.support()) update_values(site, op.x(site), op.z(site));
  frame_ *= op;
}

}  // namespace toposim
