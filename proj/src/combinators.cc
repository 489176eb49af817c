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

#include <algorithm>
#include <string>
#include <utility>

#include "ksub/errors.h"
#include "ksub/zoo.h"

namespace ksub {
namespace {

class WeightedSum final : public ValueOracle {
 public:
  WeightedSum(Dims dims, std::vector<OraclePtr> terms,
              std::vector<double> weights)
      : ValueOracle(std::move(dims)),
        terms_(std::move(terms)),
        weights_(std::move(weights)) {}

 protected:
  double Evaluate(const Assignment& x) const override {
    double total = 0.0;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (weights_[i] != 0.0) total += weights_[i] * (*terms_[i])(x);
    }
    return total;
  }

 private:
  std::vector<OraclePtr> terms_;
  std::vector<double> weights_;
};

class Lifted final : public ValueOracle {
 public:
  Lifted(OraclePtr base, int n, std::vector<int> elements)
      : ValueOracle(Dims{n, base->k(), base->dims().r}),
        base_(std::move(base)),
        elements_(std::move(elements)) {}

 protected:
  double Evaluate(const Assignment& x) const override {
    Assignment projected(static_cast<int>(elements_.size()));
    for (size_t j = 0; j < elements_.size(); ++j) {
      projected[static_cast<int>(j)] = x[elements_[j]];
    }
    return (*base_)(projected);
  }

 private:
  OraclePtr base_;
  std::vector<int> elements_;
};

}  // namespace

OraclePtr SumCombine(std::vector<OraclePtr> terms, std::vector<double> weights) {
  if (terms.empty()) throw InputError("sum needs at least one term");
  if (terms.size() != weights.size()) {
    throw InputError("sum: " + std::to_string(terms.size()) + " terms but " +
                     std::to_string(weights.size()) + " weights");
  }
  const Dims& first = terms.front()->dims();
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i]->n() != first.n || terms[i]->k() != first.k) {
      throw InputError("sum: term " + std::to_string(i) +
                       " has dims different from term 0");
    }
    if (!(weights[i] >= 0.0)) {
      throw InputError("sum: weight " + std::to_string(i) + " is negative");
    }
  }
  return std::make_shared<WeightedSum>(Dims{first.n, first.k, std::nullopt},
                                       std::move(terms), std::move(weights));
}

OraclePtr Lift(OraclePtr base, int n, std::vector<int> elements) {
  if (static_cast<int>(elements.size()) != base->n()) {
    throw InputError("lift: need one target element per base element");
  }
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("lift: target elements must be distinct");
  }
  for (int e : elements) {
    if (e < 0 || e >= n) throw InputError("lift: target element out of range");
  }
  return std::make_shared<Lifted>(std::move(base), n, std::move(elements));
}

EmbeddedBisubmodular::EmbeddedBisubmodular(OraclePtr base)
    : ValueOracle(Dims{base->n(), 2, std::nullopt}),
      base_(std::move(base)),
      g_of_ground_set_(0.0) {
  if (base_->k() != 1) {
    throw InputError("embedding needs a set function (k = 1), got k=" +
                     std::to_string(base_->k()));
  }
  g_of_ground_set_ = (*base_)(Assignment(std::vector<Label>(
      static_cast<size_t>(base_->n()), Label{1})));
}

double EmbeddedBisubmodular::Evaluate(const Assignment& x) const {
  Assignment s(n());
  Assignment complement_of_t(n());
  for (int e = 0; e < n(); ++e) {
    if (x[e] == 1) s[e] = 1;
    if (x[e] != 2) complement_of_t[e] = 1;
  }
  return (*base_)(s) + (*base_)(complement_of_t) - g_of_ground_set_;
}

std::shared_ptr<const EmbeddedBisubmodular> EmbedSubmodular(OraclePtr base) {
  return std::make_shared<EmbeddedBisubmodular>(std::move(base));
}

}  // namespace ksub
