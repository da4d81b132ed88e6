// Copyright 2026 The SpecGap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECGAP_TESTS_ORACLES_H_
#define SPECGAP_TESTS_ORACLES_H_

// Slow reference implementations used as test oracles. None of them call
// into the library code they check.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "specgap/graph.h"
#include "specgap/laplacian.h"
#include "specgap/metrics.h"

namespace specgap::oracle {

// Dense Laplacian straight from an edge list (duplicates and self-loops
// ignored).
Eigen::MatrixXd laplacian(std::size_t n, const std::vector<Edge>& edges,
                          LaplacianVariant variant);

// Cyclic Jacobi; eigenvalues descending.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd m);

double auc(const std::vector<ScoredSample>& s);
double aupr(const std::vector<ScoredSample>& s);
double fpr95(const std::vector<ScoredSample>& s);

std::vector<double> lof(const Eigen::MatrixXd& train, const Eigen::MatrixXd& test,
                        std::size_t k);
std::vector<double> ssd(const Eigen::MatrixXd& train, const Eigen::MatrixXd& test);

// Minimum balanced error over every threshold and orientation.
double best_balanced_error(const std::vector<double>& id, const std::vector<double>& ood);

// Random simple graph for property tests (ER, SBM or regular-ish).
Graph random_graph(std::uint64_t seed, std::size_t min_n, std::size_t max_n);

}  // namespace specgap::oracle

#endif  // SPECGAP_TESTS_ORACLES_H_
