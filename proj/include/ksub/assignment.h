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

#ifndef KSUB_ASSIGNMENT_H_
#define KSUB_ASSIGNMENT_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ksub {

// Label 0 means "unassigned"; labels 1..k name the k parts.
using Label = int;
inline constexpr Label kUnassigned = 0;

// Default tolerance for every floating point comparison in the library.
inline constexpr double kDefaultEps = 1e-9;

// Problem dimensions: ground set size n, number of parts k and, optionally,
// the monotonicity arity r an instance declares.
struct Dims {
  int n = 1;
  int k = 1;
  std::optional<int> r;

  // Throws InputError unless n >= 1, k >= 1 and 1 <= r <= k when present.
  void Validate() const;

  bool operator==(const Dims&) const = default;
};

// Enumeration caps. Exhaustive routines refuse work above these sizes
// instead of silently sampling.
struct Limits {
  std::uint64_t max_states = 1'000'000;
  std::uint64_t max_pairs = 100'000'000;
};

// A partial assignment of labels to the n ground set elements, i.e. a
// k-tuple of pairwise disjoint subsets in vector form.
class Assignment {
 public:
  Assignment() = default;
  // All-zero assignment of length n.
  explicit Assignment(int n);
  explicit Assignment(std::vector<Label> labels);
  Assignment(std::initializer_list<Label> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Label operator[](int e) const { return labels_[e]; }
  Label& operator[](int e) { return labels_[e]; }

  std::span<const Label> labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  // Copy with coordinate e set to `label`.
  Assignment With(int e, Label label) const;

  // "(1,2,0)"
  std::string ToString() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Label> labels_;
};

// Coordinate-wise min0: 0 where both are nonzero and differ, min otherwise.
Assignment Min0(const Assignment& a, const Assignment& b);
// Coordinate-wise max0: 0 where both are nonzero and differ, max otherwise.
Assignment Max0(const Assignment& a, const Assignment& b);
// Coordinate-wise id0: a_e where a_e == b_e, 0 otherwise.
Assignment Id0(const Assignment& a, const Assignment& b);

// x restricted to the element set S: x_e on S, 0 elsewhere.
Assignment Restrict(const Assignment& x, std::span<const int> elements);

// True iff every element carries a nonzero label.
bool IsOrthant(const Assignment& x);

// Elements with a nonzero label, ascending.
std::vector<int> Support(const Assignment& x);

// base^exp, saturating at UINT64_MAX.
std::uint64_t SaturatingPow(std::uint64_t base, int exp);

// (k+1)^n, saturating.
std::uint64_t StateCount(const Dims& dims);
// k^n, saturating.
std::uint64_t OrthantCount(const Dims& dims);

// Mixed-radix index sum_e x_e (k+1)^e, element 0 least significant.
std::uint64_t EncodeIndex(const Assignment& x, int k);
Assignment DecodeIndex(std::uint64_t index, const Dims& dims);

// Advances x to the next assignment with every label in [lo, hi], in
// increasing index order. Returns false (leaving x at all-lo) after the last.
bool NextAssignment(Assignment& x, Label lo, Label hi);

}  // namespace ksub

#endif  // KSUB_ASSIGNMENT_H_
