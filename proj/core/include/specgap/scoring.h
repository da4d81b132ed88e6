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

#ifndef SPECGAP_SCORING_H_
#define SPECGAP_SCORING_H_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace specgap {

// Rows are embeddings. All scorers follow "higher = more OOD".

// Single-Gaussian Mahalanobis score. Fits mean and covariance (unbiased) on
// `train`, adds a ridge gamma = 1e-4 * trace(Sigma) / d, and returns
// (x - mu)^T (Sigma + gamma I)^{-1} (x - mu) for each test row.
// Throws InvalidArgument with fewer than two training rows and
// DimensionError when column counts differ.
std::vector<double> ssd_scores(const Eigen::MatrixXd& train,
                               const Eigen::MatrixXd& test);

// Local outlier factor of each test row against the training set, with
// exact brute-force Euclidean neighbor search (k nearest, ties broken by
// training index). Training points use their k nearest other training
// points. Throws InvalidArgument unless train.rows() > k_neighbors.
std::vector<double> lof_scores(const Eigen::MatrixXd& train,
                               const Eigen::MatrixXd& test,
                               std::size_t k_neighbors = 20);

}  // namespace specgap

#endif  // SPECGAP_SCORING_H_
