// Copyright 2026 The ksub Authors
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

#include "ksub/assignment.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "ksub/errors.h"

namespace ksub {

void Dims::Validate() const {
  if (n < 1) throw InputError("n must be >= 1, got " + std::to_string(n));
  if (k < 1) throw InputError("k must be >= 1, got " + std::to_string(k));
  if (r && (*r < 1 || *r > k)) {
    throw InputError("r must lie in [1, k], got r=" + std::to_string(*r) +
                     " with k=" + std::to_string(k));
  }
}

Assignment::Assignment(int n) : labels_(static_cast<size_t>(n), kUnassigned) {}

Assignment::Assignment(std::vector<Label> labels) : labels_(std::move(labels)) {}

Assignment::Assignment(std::initializer_list<Label> labels) : labels_(labels) {}

Assignment Assignment::With(int e, Label label) const {
  Assignment out = *this;
  out.labels_[e] = label;
  return out;
}

std::string Assignment::ToString() const {
  std::ostringstream os;
  os << '(';
  for (size_t e = 0; e < labels_.size(); ++e) {
    if (e > 0) os << ',';
    os << labels_[e];
  }
  os << ')';
  return os.str();
}

namespace {

void CheckSameLength(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) {
    throw InputError("assignment length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
}

bool Conflict(Label a, Label b) {
  return a != kUnassigned && b != kUnassigned && a != b;
}

}  // namespace

Assignment Min0(const Assignment& a, const Assignment& b) {
  CheckSameLength(a, b);
  Assignment out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    out[e] = Conflict(a[e], b[e]) ? kUnassigned : std::min(a[e], b[e]);
  }
  return out;
}

Assignment Max0(const Assignment& a, const Assignment& b) {
  CheckSameLength(a, b);
  Assignment out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    out[e] = Conflict(a[e], b[e]) ? kUnassigned : std::max(a[e], b[e]);
  }
  return out;
}

Assignment Id0(const Assignment& a, const Assignment& b) {
  CheckSameLength(a, b);
  Assignment out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    out[e] = a[e] == b[e] ? a[e] : kUnassigned;
  }
  return out;
}

Assignment Restrict(const Assignment& x, std::span<const int> elements) {
  Assignment out(x.size());
  for (int e : elements) {
    if (e < 0 || e >= x.size()) {
      throw InputError("restrict: element " + std::to_string(e) +
                       " out of range [0, " + std::to_string(x.size()) + ")");
    }
    out[e] = x[e];
  }
  return out;
}

bool IsOrthant(const Assignment& x) {
  return std::none_of(x.begin(), x.end(),
                      [](Label l) { return l == kUnassigned; });
}

std::vector<int> Support(const Assignment& x) {
  std::vector<int> out;
  for (int e = 0; e < x.size(); ++e) {
    if (x[e] != kUnassigned) out.push_back(e);
  }
  return out;
}

std::uint64_t SaturatingPow(std::uint64_t base, int exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

std::uint64_t StateCount(const Dims& dims) {
  return SaturatingPow(static_cast<std::uint64_t>(dims.k) + 1, dims.n);
}

std::uint64_t OrthantCount(const Dims& dims) {
  return SaturatingPow(static_cast<std::uint64_t>(dims.k), dims.n);
}

std::uint64_t EncodeIndex(const Assignment& x, int k) {
  std::uint64_t index = 0;
  for (int e = x.size() - 1; e >= 0; --e) {
    index = index * static_cast<std::uint64_t>(k + 1) +
            static_cast<std::uint64_t>(x[e]);
  }
  return index;
}

Assignment DecodeIndex(std::uint64_t index, const Dims& dims) {
  Assignment x(dims.n);
  const auto radix = static_cast<std::uint64_t>(dims.k + 1);
  for (int e = 0; e < dims.n; ++e) {
    x[e] = static_cast<Label>(index % radix);
    index /= radix;
  }
  return x;
}

bool NextAssignment(Assignment& x, Label lo, Label hi) {
  for (int e = 0; e < x.size(); ++e) {
    if (x[e] < hi) {
      ++x[e];
      return true;
    }
    x[e] = lo;
  }
  return false;
}

}  // namespace ksub
