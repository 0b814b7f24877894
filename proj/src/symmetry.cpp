// Copyright 2026 The projgraph Authors
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

#include "projgraph/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "projgraph/edge_list.hpp"

namespace projgraph {
namespace {

constexpr double kRotationTolerance = 1e-10;

double apply_swap(const DyadicSwap& s, double x) {
  const std::int64_t idx = dyadic_index(x, s.k);
  if (idx == s.i) return x + std::ldexp(static_cast<double>(s.j - s.i), -s.k);
  if (idx == s.j) return x + std::ldexp(static_cast<double>(s.i - s.j), -s.k);
  return x;
}

// Right end of the support of a swap word, i.e. max(i, j) / 2^k over all swaps.
double support_end(const DyadicSwapWord& w) {
  double end = 0.0;
  for (const auto& s : w.swaps) end = std::max(end, std::ldexp(static_cast<double>(std::max(s.i, s.j)), -s.k));
  return end;
}

Permutation padded(const Permutation& p, std::size_t n) {
  Permutation out = p;
  for (std::size_t i = p.image.size(); i < n; ++i) out.image.push_back(static_cast<std::int64_t>(i + 1));
  return out;
}

}  // namespace

GroupElement GroupElement::permutation(std::vector<std::int64_t> image) {
  const auto n = static_cast<std::int64_t>(image.size());
  std::vector<bool> seen(image.size(), false);
  for (auto v : image) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("permutation is not a bijection of [n]");
    seen[v - 1] = true;
  }
  return GroupElement(Permutation{std::move(image)});
}

GroupElement GroupElement::identity_permutation(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<std::int64_t> image(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) image[i] = i + 1;
  return GroupElement(Permutation{std::move(image)});
}

GroupElement GroupElement::transposition(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw std::invalid_argument("bad transposition");
  auto g = identity_permutation(n);
  auto& image = std::get<Permutation>(g.value_).image;
  std::swap(image[a - 1], image[b - 1]);
  return g;
}

GroupElement GroupElement::dyadic(std::vector<DyadicSwap> swaps) {
  for (const auto& s : swaps) {
    if (s.i < 1 || s.j < 1 || s.i == s.j || s.k < 0 || s.k > 52) {
      throw std::invalid_argument("dyadic swap needs distinct i, j >= 1 and 0 <= k <= 52");
    }
  }
  return GroupElement(DyadicSwapWord{std::move(swaps)});
}

GroupElement GroupElement::rotation(Eigen::MatrixXd matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 2) {
    throw std::invalid_argument("rotation must be a square matrix of size >= 2");
  }
  const auto n = matrix.rows();
  const double residual = (matrix.transpose() * matrix - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (residual > kRotationTolerance) throw std::invalid_argument("rotation matrix is not orthogonal");
  if (std::abs(matrix.determinant() - 1.0) > kRotationTolerance) {
    throw std::invalid_argument("rotation matrix must have determinant +1");
  }
  return GroupElement(Rotation{std::move(matrix)});
}

GroupElement GroupElement::identity_rotation(int dim) {
  if (dim < 2) throw std::invalid_argument("rotation dimension must be >= 2");
  return GroupElement(Rotation{Eigen::MatrixXd::Identity(dim, dim)});
}

std::int64_t dyadic_index(double x, int k) {
  if (!(x > 0.0)) return 0;
  return static_cast<std::int64_t>(std::ceil(std::ldexp(x, k)));
}

Label apply_label(const GroupElement& g, const Label& label) {
  if (g.is_permutation()) {
    const auto* x = std::get_if<std::int64_t>(&label);
    if (!x) throw std::invalid_argument("permutation applied to a " + label_kind_name(label) + " label");
    const auto& image = g.as_permutation().image;
    if (*x >= 1 && *x <= static_cast<std::int64_t>(image.size())) return image[*x - 1];
    return *x;
  }
  if (g.is_dyadic()) {
    const auto* x = std::get_if<double>(&label);
    if (!x) throw std::invalid_argument("dyadic swap applied to a " + label_kind_name(label) + " label");
    double y = *x;
    for (const auto& s : g.as_dyadic().swaps) y = apply_swap(s, y);
    return y;
  }
  const auto* p = std::get_if<Point>(&label);
  if (!p) throw std::invalid_argument("rotation applied to a " + label_kind_name(label) + " label");
  const auto& q = g.as_rotation().matrix;
  if (static_cast<Eigen::Index>(p->size()) != q.rows()) throw std::invalid_argument("rotation dimension mismatch");
  Point out(p->size());
  Eigen::Map<Eigen::VectorXd>(out.data(), q.rows()) = q * Eigen::Map<const Eigen::VectorXd>(p->data(), q.rows());
  return out;
}

PairConfiguration apply_pairs(const GroupElement& g, const PairConfiguration& config) {
  std::vector<LabelPair> out;
  out.reserve(config.size());
  for (const auto& [x, y] : config.pairs()) out.emplace_back(apply_label(g, x), apply_label(g, y));
  PairConfiguration result(std::move(out), config.allows_loops());
  if (result.size() != config.size()) throw std::logic_error("group action merged distinct pairs");
  return result;
}

Graph apply_graph(const GroupElement& g, const Graph& graph) {
  const auto& vs = graph.vertices();
  std::vector<std::pair<Label, std::size_t>> mapped;
  mapped.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) mapped.emplace_back(apply_label(g, vs[i]), i);
  std::sort(mapped.begin(), mapped.end());
  std::vector<std::size_t> position(vs.size());
  std::vector<Label> vertices;
  std::vector<double> latents;
  vertices.reserve(vs.size());
  for (std::size_t r = 0; r < mapped.size(); ++r) {
    position[mapped[r].second] = r;
    vertices.push_back(mapped[r].first);
    if (!graph.latents().empty()) latents.push_back(graph.latents()[mapped[r].second]);
  }
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (const auto& [u, v] : graph.edges()) edges.emplace_back(position[u], position[v]);
  Graph out(graph.window(), std::move(vertices), std::move(edges), std::move(latents));
  out.set_fingerprint(graph.fingerprint());
  return out;
}

GroupElement extend_element(const GroupElement& g, const Window& window_n, const Window& window_m) {
  if (!window_n.nested_in(window_m)) throw std::invalid_argument("windows are not nested");
  if (g.is_permutation()) {
    if (window_n.kind() != WindowKind::IntegerPrefix) throw std::invalid_argument("permutations act on integer windows");
    const auto& p = g.as_permutation();
    if (static_cast<double>(p.image.size()) > window_n.size()) {
      throw std::invalid_argument("permutation support exceeds the source window");
    }
    return GroupElement::permutation(padded(p, static_cast<std::size_t>(window_m.size())).image);
  }
  if (g.is_dyadic()) {
    if (window_n.kind() != WindowKind::RealInterval) throw std::invalid_argument("dyadic swaps act on interval windows");
    if (support_end(g.as_dyadic()) > window_n.size()) {
      throw std::invalid_argument("dyadic swap support exceeds the source window");
    }
    return g;
  }
  if (window_n.kind() != WindowKind::EuclideanBall || g.as_rotation().matrix.rows() != window_n.dim()) {
    throw std::invalid_argument("rotation does not match the ball dimension");
  }
  return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.is_permutation() && h.is_permutation()) {
    const std::size_t n = std::max(g.as_permutation().image.size(), h.as_permutation().image.size());
    const Permutation pg = padded(g.as_permutation(), n);
    const Permutation ph = padded(h.as_permutation(), n);
    std::vector<std::int64_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = pg.image[ph.image[i] - 1];
    return GroupElement::permutation(std::move(image));
  }
  if (g.is_dyadic() && h.is_dyadic()) {
    // h acts first
    std::vector<DyadicSwap> swaps = h.as_dyadic().swaps;
    const auto& gs = g.as_dyadic().swaps;
    swaps.insert(swaps.end(), gs.begin(), gs.end());
    return GroupElement::dyadic(std::move(swaps));
  }
  if (g.is_rotation() && h.is_rotation()) {
    if (g.as_rotation().matrix.rows() != h.as_rotation().matrix.rows()) {
      throw std::invalid_argument("rotation dimension mismatch");
    }
    return GroupElement::rotation(g.as_rotation().matrix * h.as_rotation().matrix);
  }
  throw std::invalid_argument("cannot compose elements of different groups");
}

GroupElement inverse(const GroupElement& g) {
  if (g.is_permutation()) {
    const auto& image = g.as_permutation().image;
    std::vector<std::int64_t> inv(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv[image[i] - 1] = static_cast<std::int64_t>(i + 1);
    return GroupElement::permutation(std::move(inv));
  }
  if (g.is_dyadic()) {
    // every swap is an involution
    std::vector<DyadicSwap> swaps(g.as_dyadic().swaps.rbegin(), g.as_dyadic().swaps.rend());
    return GroupElement::dyadic(std::move(swaps));
  }
  return GroupElement::rotation(g.as_rotation().matrix.transpose());
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  if (g.is_permutation()) {
    os << "perm:[";
    const auto& image = g.as_permutation().image;
    for (std::size_t i = 0; i < image.size(); ++i) os << (i ? "," : "") << image[i];
    os << ']';
  } else if (g.is_dyadic()) {
    os << "dyadic:[";
    const auto& swaps = g.as_dyadic().swaps;
    for (std::size_t i = 0; i < swaps.size(); ++i) {
      os << (i ? "," : "") << '(' << swaps[i].i << ',' << swaps[i].j << ',' << swaps[i].k << ')';
    }
    os << ']';
  } else {
    const auto& q = g.as_rotation().matrix;
    os << "rot:d=" << q.rows() << ";rows=";
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
      os << (r ? ";" : "") << '[';
      for (Eigen::Index c = 0; c < q.cols(); ++c) os << (c ? "," : "") << format_real(q(r, c));
      os << ']';
    }
  }
  return os.str();
}

std::string to_string(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::Transpositions:
      return "transpositions";
    case GeneratorFamily::DyadicSwaps:
      return "dyadic_swaps";
    case GeneratorFamily::RandomRotations:
      return "random_rotations";
  }
  return "unknown";
}

GeneratorSet GeneratorSet::transpositions(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("transposition set needs n >= 1");
  return GeneratorSet{GeneratorFamily::Transpositions, static_cast<double>(n), 1, 2, false};
}

GeneratorSet GeneratorSet::dyadic_swaps(double n, int k_max) {
  if (!(n > 0.0) || k_max < 0 || k_max > kLabelGridBits) {
    throw std::invalid_argument("dyadic swap set needs n > 0 and 0 <= k_max <= 40");
  }
  return GeneratorSet{GeneratorFamily::DyadicSwaps, n, k_max, 2, false};
}

GeneratorSet GeneratorSet::random_rotations(int dim) {
  if (dim < 2) throw std::invalid_argument("rotation set needs dim >= 2");
  return GeneratorSet{GeneratorFamily::RandomRotations, 1.0, 1, dim, false};
}

Eigen::MatrixXd haar_rotation(int dim, CoinStream& rng) {
  Eigen::MatrixXd a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd& rmat = qr.matrixQR();
  for (int c = 0; c < dim; ++c) {
    if (rmat(c, c) < 0.0) q.col(c) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

GroupElement sample_generator(const GeneratorSet& set, CoinStream& rng) {
  switch (set.family) {
    case GeneratorFamily::Transpositions: {
      const auto n = static_cast<std::int64_t>(set.n);
      if (set.identity_only || n < 2) return GroupElement::identity_permutation(n);
      const auto a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
      auto b = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (b >= a) ++b;
      return GroupElement::transposition(n, std::min(a, b) + 1, std::max(a, b) + 1);
    }
    case GeneratorFamily::DyadicSwaps: {
      if (set.identity_only) return GroupElement::dyadic({});
      std::vector<int> levels;
      for (int k = 0; k <= set.k_max; ++k) {
        if (std::floor(std::ldexp(set.n, k)) >= 2.0) levels.push_back(k);
      }
      if (levels.empty()) throw std::invalid_argument("no dyadic swaps fit inside the window");
      const int k = levels[rng.below(levels.size())];
      const auto count = static_cast<std::uint64_t>(std::floor(std::ldexp(set.n, k)));
      const auto a = static_cast<std::int64_t>(rng.below(count));
      auto b = static_cast<std::int64_t>(rng.below(count - 1));
      if (b >= a) ++b;
      return GroupElement::dyadic({DyadicSwap{std::min(a, b) + 1, std::max(a, b) + 1, k}});
    }
    case GeneratorFamily::RandomRotations:
      if (set.identity_only) return GroupElement::identity_rotation(set.dim);
      return GroupElement::rotation(haar_rotation(set.dim, rng));
  }
  throw std::logic_error("unhandled generator family");
}

}  // namespace projgraph
